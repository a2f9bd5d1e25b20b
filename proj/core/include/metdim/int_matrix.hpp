#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "metdim/subsets.hpp"

namespace metdim {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::int64_t& operator()(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// 0-1 incidence matrix of a family of subsets of [n]: one row per subset,
/// columns are the points 1..n.
IntMatrix incidence_matrix(std::span<const KSubset> sets, int n);

struct RankDet {
  int rank = 0;
  /// Present for square matrices only.
  std::optional<BigInt> determinant;
};

/// Exact rank over the rationals and, for square input, the exact
/// determinant, by fraction-free (Bareiss) elimination with row pivoting.
RankDet rank_and_det(const IntMatrix& m);

/// True when the incidence matrix of `sets` has rank n, which is sufficient
/// (not necessary) for `sets` to resolve J(n, k). False means inconclusive.
/// Throws ParameterError when the sets are not of one common size.
bool resolving_by_rank(std::span<const KSubset> sets, int n);

}  // namespace metdim
