#include "eorad/operator_tuple.hpp"

#include <algorithm>
#include <sstream>

#include "eorad/errors.hpp"

namespace eorad {
namespace {

template <typename Fn>
OperatorTuple map(const OperatorTuple& a, Fn&& fn) {
  std::vector<CMatrix> out;
  out.reserve(a.d());
  for (const auto& m : a) out.push_back(fn(m));
  return OperatorTuple(std::move(out));
}

template <typename Fn>
OperatorTuple zip(const OperatorTuple& a, const OperatorTuple& b, const char* what, Fn&& fn) {
  require_same_shape(a, b, what);
  std::vector<CMatrix> out;
  out.reserve(a.d());
  for (std::size_t k = 0; k < a.d(); ++k) out.push_back(fn(a[k], b[k]));
  return OperatorTuple(std::move(out));
}

}  // namespace

OperatorTuple::OperatorTuple(std::vector<CMatrix> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("operator tuple needs d >= 1 entries");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    require_square(entries_[k], "tuple entry");
    if (entries_[k].rows() != entries_.front().rows()) {
      std::ostringstream os;
      os << "tuple entry " << k << " is " << entries_[k].rows() << "x" << entries_[k].cols()
         << ", expected " << entries_.front().rows() << "x" << entries_.front().rows();
      throw DimensionError(os.str());
    }
  }
}

OperatorTuple::OperatorTuple(std::initializer_list<CMatrix> entries)
    : OperatorTuple(std::vector<CMatrix>(entries)) {}

OperatorTuple OperatorTuple::zeros(std::size_t d, Eigen::Index dim) {
  return OperatorTuple(std::vector<CMatrix>(d, CMatrix::Zero(dim, dim)));
}

OperatorTuple OperatorTuple::identities(std::size_t d, Eigen::Index dim) {
  return OperatorTuple(std::vector<CMatrix>(d, CMatrix::Identity(dim, dim)));
}

bool OperatorTuple::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const CMatrix& m) { return m.isZero(0.0); });
}

void require_same_shape(const OperatorTuple& a, const OperatorTuple& b, const char* what) {
  if (a.d() != b.d() || a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": tuple shapes differ (d=" << a.d() << ", dim=" << a.dim() << " vs d=" << b.d()
       << ", dim=" << b.dim() << ")";
    throw DimensionError(os.str());
  }
}

OperatorTuple operator+(const OperatorTuple& a, const OperatorTuple& b) {
  return zip(a, b, "tuple sum", [](const CMatrix& x, const CMatrix& y) -> CMatrix { return x + y; });
}

OperatorTuple operator-(const OperatorTuple& a, const OperatorTuple& b) {
  return zip(a, b, "tuple difference",
             [](const CMatrix& x, const CMatrix& y) -> CMatrix { return x - y; });
}

OperatorTuple operator*(cdouble alpha, const OperatorTuple& a) {
  return map(a, [alpha](const CMatrix& m) -> CMatrix { return alpha * m; });
}

OperatorTuple operator*(const OperatorTuple& a, const OperatorTuple& b) {
  return zip(a, b, "tuple product",
             [](const CMatrix& x, const CMatrix& y) -> CMatrix { return x * y; });
}

OperatorTuple adjoint(const OperatorTuple& a) {
  return map(a, [](const CMatrix& m) -> CMatrix { return m.adjoint(); });
}

OperatorTuple power(const OperatorTuple& a, int n) {
  if (n < 1) throw DomainError("tuple power needs n >= 1");
  return map(a, [n](const CMatrix& m) -> CMatrix {
    CMatrix out = m;
    for (int i = 1; i < n; ++i) out = out * m;
    return out;
  });
}

OperatorTuple abs_pow(const OperatorTuple& a, double t) {
  return map(a, [t](const CMatrix& m) { return abs_pow(m, t); });
}

OperatorTuple abs_adjoint_pow(const OperatorTuple& a, double t) {
  return map(a, [t](const CMatrix& m) { return abs_adjoint_pow(m, t); });
}

CMatrix sum(const OperatorTuple& a) {
  CMatrix s = CMatrix::Zero(a.dim(), a.dim());
  for (const auto& m : a) s += m;
  return s;
}

double max_entry_norm(const OperatorTuple& a) {
  double best = 0.0;
  for (const auto& m : a) best = std::max(best, op_norm(m));
  return best;
}

}  // namespace eorad
