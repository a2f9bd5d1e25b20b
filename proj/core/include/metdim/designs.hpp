#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "metdim/graphs.hpp"
#include "metdim/int_matrix.hpp"
#include "metdim/subsets.hpp"

namespace metdim {

/// Points 1..n_points and a list of blocks (lines). The incidence matrix is
/// always block-by-point: one row per block.
struct IncidenceStructure {
  int n_points = 0;
  std::vector<KSubset> blocks;

  /// Common block size, if all blocks share one.
  std::optional<int> uniform_block_size() const;
  IntMatrix matrix() const { return incidence_matrix(blocks, n_points); }
  /// Points and blocks interchanged; requires b <= kMaxGroundSet.
  IncidenceStructure dual() const;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

// ---------------------------------------------------------------------------
// Generators

/// PG(2, q): points and lines are the 1- and 2-dimensional subspaces of
/// GF(q)^3, both listed as normalised vectors (first non-zero coordinate 1)
/// in increasing base-q order. Point x lies on line L iff L·x = 0.
IncidenceStructure projective_plane(int q);

/// AG(2, q): point (x, y) is x·q + y + 1; lines y = m·x + c in (m, c) order,
/// then the verticals x = c.
IncidenceStructure affine_plane(int q);

/// ±1 matrix with H·Hᵀ = order·I.
using SignMatrix = std::vector<std::vector<int>>;

/// Normalised Hadamard matrix (first row and column all +1) built from
/// Sylvester doubling, Paley type I cores (q ≡ 3 mod 4 a prime power) and
/// Kronecker products of those. Throws ParameterError for orders these
/// methods do not reach ("unsupported", which is not a non-existence claim).
SignMatrix hadamard_matrix(int order);
bool hadamard_constructible(int order);
/// Exact integer check of H·Hᵀ = order·I.
bool is_hadamard(const SignMatrix& h);

/// The (4m-1, 2m-1, m-1) symmetric design from a normalised Hadamard matrix
/// of order 4m: drop the first row and column, map -1 to 0. Rows are blocks.
IncidenceStructure hadamard_design(int m);

/// STS(n) for n ≡ 1, 3 (mod 6), n >= 7: Bose's construction for n = 6t+3
/// and Skolem's for n = 6t+1.
IncidenceStructure steiner_triple_system(int n);

// ---------------------------------------------------------------------------
// Validators

struct DesignParams {
  int t = 0;
  int n = 0;
  int k = 0;
  int lambda = 0;
  int b = 0;
  bool symmetric = false;
};

struct DesignCheck {
  bool valid = false;
  DesignParams params;
  /// Block count equals λ·C(n,t)/C(k,t).
  bool block_count_identity = false;
  std::string failure;
};

/// Every t-subset of points lies in exactly λ blocks. Throws ParameterError
/// for non-uniform block sizes.
DesignCheck validate_t_design(const IncidenceStructure& ic, int t, int lambda);

struct PartialGeometryParams {
  int s = 0;
  int t = 0;
  int alpha = 0;
  /// (s+1)(st+α)/α and (t+1)(st+α)/α; 0 when not integral.
  int v = 0;
  int b = 0;
};

PartialGeometryParams partial_geometry_params(int s, int t, int alpha);

struct GeometryCheck {
  bool valid = false;
  /// 1, 2 or 3 for the first failing axiom, absent when valid.
  std::optional<int> violated_axiom;
  std::string detail;
  PartialGeometryParams params;
};

/// Axioms of pg(s, t, α):
///  (1) every line has s+1 points and two lines share at most one point;
///  (2) every point is on t+1 lines and two points share at most one line;
///  (3) a point off a line is collinear with exactly α of its points.
GeometryCheck validate_partial_geometry(const IncidenceStructure& ic, int s, int t, int alpha);

// ---------------------------------------------------------------------------
// Structures as resolving sets

struct ResolvingCandidate {
  GraphInstance target;
  std::vector<KSubset> members;
};

/// Lines of a pg(s, t, α) with t > s, as a candidate for K(v, s+1). Throws
/// ParameterError if validation fails or t <= s (projective planes of order
/// q > 2 are the standard counterexample).
ResolvingCandidate geometry_lines_as_resolving_set(const IncidenceStructure& ic, int s, int t, int alpha);

/// Blocks of an S(k-1, k, n) with n >= 4k-2, as a candidate for K(n, k).
/// Throws ParameterError naming the failed hypothesis.
ResolvingCandidate steiner_blocks_as_resolving_set(const IncidenceStructure& ic);

// ---------------------------------------------------------------------------
// File format: `# points=<n> blocks=<b>` then one block per line.

/// Throws ParseError with the offending line number. Duplicate blocks are
/// accepted and reported through `duplicate_lines`.
IncidenceStructure load_incidence_structure(std::istream& in, std::vector<int>* duplicate_lines = nullptr);
IncidenceStructure load_incidence_structure_file(const std::string& path,
                                                 std::vector<int>* duplicate_lines = nullptr);
void save_incidence_structure(std::ostream& out, const IncidenceStructure& ic);

}  // namespace metdim
