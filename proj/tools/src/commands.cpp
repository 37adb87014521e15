#include "commands.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "eorad/blockmat.hpp"
#include "eorad/errors.hpp"
#include "eorad/verify.hpp"
#include "io.hpp"

namespace eorad::cli {

using nlohmann::json;

namespace {

EuclideanRadiusConfig radius_config(std::uint64_t seed, int restarts) {
  EuclideanRadiusConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  return cfg;
}

std::string hex(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string params_text(const BoundReport& r) {
  std::ostringstream ss;
  ss << std::setprecision(6);
  bool first = true;
  for (const auto& [k, v] : r.params) {
    if (k == "d") continue;
    ss << (first ? "" : " ") << k << '=' << v;
    first = false;
  }
  if (!r.function_pair.empty()) ss << (first ? "" : " ") << "fg=" << r.function_pair;
  return ss.str();
}

// Runs `body`, mapping input and parameter errors to exit code 2.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

void check_unit(const char* name, std::optional<double> v) {
  if (v && !(*v >= 0.0 && *v <= 1.0)) {
    throw DomainError(std::string("--") + name + " must lie in [0, 1]");
  }
}

}  // namespace

std::uint64_t text_digest(const std::string& text) {
  Digest h;
  h.add(std::string_view(text));
  return h.value();
}

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const OperatorTuple a = read_tuple_file(opt.input);
    const EuclideanRadiusConfig cfg = radius_config(opt.seed, opt.restarts);
    const RadiusEstimate we = euclidean_radius(a, cfg);
    const double norm = tuple_op_norm(a);
    std::vector<RadiusEstimate> w;
    for (const auto& m : a) w.push_back(numerical_radius(m));

    out << std::setprecision(8);
    out << "d = " << a.d() << ", dim = " << a.dim() << '\n';
    out << "w_e(A)  = " << we.value << "  (certified lower bound " << we.certified_lower << ", " << we.method
        << ")\n";
    out << "||A||   = " << norm << '\n';
    for (std::size_t k = 0; k < w.size(); ++k) out << "w(A_" << k + 1 << ")  = " << w[k].value << '\n';

    if (opt.json_out) {
      json rep = make_report("compute", {{"input", opt.input.string()}, {"restarts", opt.restarts}}, opt.seed);
      rep["runtime"]["radius_config"] = to_json(cfg);
      rep["euclidean_radius"] = to_json(we);
      rep["tuple_norm"] = norm;
      json ws = json::array();
      for (const auto& r : w) ws.push_back(to_json(r));
      rep["numerical_radii"] = std::move(ws);
      write_text(*opt.json_out, dump_report(rep));
    }
    return static_cast<int>(kExitOk);
  });
}

std::vector<BoundReport> tuple_bounds(const OperatorTuple& a, std::optional<double> t, std::optional<double> alpha,
                                      const SpectralFunctionPair& fg, bool all, const EuclideanRadiusConfig& cfg) {
  check_unit("t", t);
  check_unit("alpha", alpha);
  std::vector<double> ts = all ? default_parameter_grid() : std::vector<double>{t.value_or(0.5)};
  std::vector<double> alphas = all ? default_alpha_grid() : std::vector<double>{alpha.value_or(0.5)};
  if (all && t) ts = {*t};
  if (all && alpha) alphas = {*alpha};

  std::vector<BoundReport> out;
  out.push_back(sandwich_reports(a)[1]);
  out.push_back(abstract_bound(a));
  for (double tv : ts) {
    for (const auto& r : polar_power_bounds(a, tv, cfg)) out.push_back(r);
    for (const auto& r : fg_polar_bounds(a, tv, fg, cfg)) out.push_back(r);
    for (double av : alphas) {
      for (const auto& r : remark_bound(a, av, tv, cfg)) out.push_back(r);
    }
    for (const auto& r : imaginary_combo_bound(a, tv, cfg)) out.push_back(r);
    out.push_back(quarter_polar_bound(a, tv, cfg));
  }
  return out;
}

int cmd_bounds(const BoundsOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_unit("t", opt.t);
    check_unit("alpha", opt.alpha);
    const SpectralFunctionPair fg = SpectralFunctionPair::from_label(opt.fg);
    const OperatorTuple a = read_tuple_file(opt.input);
    const EuclideanRadiusConfig cfg = radius_config(opt.seed, opt.restarts);
    const RadiusEstimate we = euclidean_radius(a, cfg);
    const std::vector<BoundReport> reps = tuple_bounds(a, opt.t, opt.alpha, fg, opt.all, cfg);
    const double lower = sandwich(a).lower;

    out << std::setprecision(8);
    out << "w_e(A) = " << we.value << "  (lower bound ||A||/(2 sqrt d) = " << lower << ")\n";
    out << std::left << std::setw(28) << "bound_id" << std::setw(36) << "params" << std::setw(16) << "value"
        << "ratio\n";
    for (const auto& r : reps) {
      const double ratio = r.value > 0.0 ? we.value / r.value : (we.value == 0.0 ? 1.0 : 0.0);
      out << std::setw(28) << to_string(r.id) << std::setw(36) << params_text(r) << std::setw(16) << r.value
          << ratio << '\n';
    }
    out << std::right;

    if (opt.json_out) {
      json args{{"input", opt.input.string()}, {"fg", opt.fg}, {"all", opt.all}, {"restarts", opt.restarts}};
      if (opt.t) args["t"] = *opt.t;
      if (opt.alpha) args["alpha"] = *opt.alpha;
      json rep = make_report("bounds", args, opt.seed);
      rep["runtime"]["radius_config"] = to_json(cfg);
      rep["euclidean_radius"] = to_json(we);
      json list = json::array();
      for (const auto& r : reps) list.push_back(to_json(r));
      rep["reports"] = std::move(list);
      write_text(*opt.json_out, dump_report(rep));
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SuiteConfig cfg;
    cfg.families = suite_families(opt.suite);
    cfg.trials = opt.trials;
    cfg.master_seed = opt.seed;
    cfg.radius.seed = opt.seed;
    validate(cfg);

    const std::vector<VerificationRecord> records = run_suite(cfg);
    const TightnessReport summary = tightness_report(records);
    std::size_t failures = 0;
    for (const auto& r : records) failures += r.pass ? 0 : 1;

    std::string text;
    if (opt.out && opt.out->extension() == ".csv") {
      text = records_csv(records);
    } else {
      json rep = make_report("verify", {{"suite", opt.suite}, {"trials", opt.trials}}, opt.seed);
      rep["runtime"]["radius_config"] = to_json(cfg.radius);
      rep["runtime"]["families"] = cfg.families;
      rep["record_count"] = records.size();
      rep["failures"] = failures;
      rep["summary"] = to_json(summary);
      json list = json::array();
      for (const auto& r : records) list.push_back(to_json(r));
      rep["records"] = std::move(list);
      text = dump_report(rep);
    }
    if (opt.out) write_text(*opt.out, text);

    out << std::setprecision(6);
    out << "suite " << opt.suite << ": " << records.size() << " records, " << failures << " failures\n";
    out << std::left << std::setw(26) << "bound_id" << std::setw(8) << "count" << std::setw(6) << "fail"
        << std::setw(14) << "mean ratio" << std::setw(14) << "min ratio" << "equality\n";
    for (const auto& [id, s] : summary.per_bound) {
      out << std::setw(26) << id << std::setw(8) << s.count << std::setw(6) << s.failures << std::setw(14)
          << s.mean_ratio << std::setw(14) << s.min_ratio << s.equality_count << '\n';
    }
    out << std::right;
    for (const auto& r : records) {
      if (!r.pass) {
        out << "FAILED " << r.bound_id << " trial " << r.trial_index << " seed " << r.trial_seed << " lhs "
            << format_full(r.lhs) << " rhs " << format_full(r.rhs) << '\n';
      }
    }
    out << "report digest: " << hex(text_digest(text)) << '\n';
    return static_cast<int>(failures == 0 ? kExitOk : kExitFailure);
  });
}

}  // namespace eorad::cli
