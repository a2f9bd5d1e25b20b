#include "metdim/int_matrix.hpp"

#include <utility>

#include "metdim/error.hpp"

namespace metdim {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix incidence_matrix(std::span<const KSubset> sets, int n) {
  IntMatrix m(static_cast<int>(sets.size()), n);
  for (std::size_t r = 0; r < sets.size(); ++r) {
    if (sets[r].n() != n) throw GroundSetMismatch("set over [" + std::to_string(sets[r].n()) + "], expected [" + std::to_string(n) + "]");
    for (int e : sets[r].elements()) m(static_cast<int>(r), e - 1) = 1;
  }
  return m;
}

RankDet rank_and_det(const IntMatrix& input) {
  const int rows = input.rows();
  const int cols = input.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = input(r, c);

  BigInt prev = 1;
  int rank = 0;
  bool negate = false;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      negate = !negate;
    }
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        // Exact by Sylvester's identity.
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }

  RankDet out;
  out.rank = rank;
  if (rows == cols) {
    if (rank < rows) {
      out.determinant = BigInt(0);
    } else {
      BigInt det = a[rows - 1][cols - 1];
      if (negate) det = -det;
      out.determinant = det;
    }
  }
  return out;
}

bool resolving_by_rank(std::span<const KSubset> sets, int n) {
  if (sets.empty()) return false;
  const int k = sets.front().k();
  for (const KSubset& s : sets)
    if (s.k() != k) throw ParameterError("resolving_by_rank needs subsets of one common size");
  return rank_and_det(incidence_matrix(sets, n)).rank == n;
}

}  // namespace metdim
