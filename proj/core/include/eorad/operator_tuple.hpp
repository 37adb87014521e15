#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "eorad/matfun.hpp"

namespace eorad {

/// An ordered d-tuple (A_1, ..., A_d) of square matrices of one common size.
///
/// Arithmetic acts entrywise: (A + B)_k = A_k + B_k, (A B)_k = A_k B_k,
/// |A|^t = (|A_1|^t, ..., |A_d|^t).
class OperatorTuple {
 public:
  explicit OperatorTuple(std::vector<CMatrix> entries);
  OperatorTuple(std::initializer_list<CMatrix> entries);

  /// (0, ..., 0) with d entries of size dim.
  static OperatorTuple zeros(std::size_t d, Eigen::Index dim);
  /// (I, ..., I) with d entries of size dim.
  static OperatorTuple identities(std::size_t d, Eigen::Index dim);

  std::size_t d() const { return entries_.size(); }
  Eigen::Index dim() const { return entries_.front().rows(); }

  const CMatrix& operator[](std::size_t k) const { return entries_[k]; }
  std::span<const CMatrix> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

 private:
  std::vector<CMatrix> entries_;
};

/// Throws DimensionError unless both tuples have equal d and dim.
void require_same_shape(const OperatorTuple& a, const OperatorTuple& b, const char* what);

OperatorTuple operator+(const OperatorTuple& a, const OperatorTuple& b);
OperatorTuple operator-(const OperatorTuple& a, const OperatorTuple& b);
OperatorTuple operator*(cdouble alpha, const OperatorTuple& a);

/// Entrywise product (A_1 B_1, ..., A_d B_d).
OperatorTuple operator*(const OperatorTuple& a, const OperatorTuple& b);

/// (A_1*, ..., A_d*).
OperatorTuple adjoint(const OperatorTuple& a);

/// (A_1^n, ..., A_d^n), n >= 1.
OperatorTuple power(const OperatorTuple& a, int n);

OperatorTuple abs_pow(const OperatorTuple& a, double t);
OperatorTuple abs_adjoint_pow(const OperatorTuple& a, double t);

/// sum_k A_k.
CMatrix sum(const OperatorTuple& a);

/// Largest ||A_k|| over the entries.
double max_entry_norm(const OperatorTuple& a);

}  // namespace eorad
