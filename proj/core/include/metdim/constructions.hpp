#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metdim/graphs.hpp"
#include "metdim/subsets.hpp"

namespace metdim {

enum class Method { johnson_partition, kneser_partition, kneser_diam3, matrix_basic, toroidal };

std::string_view to_string(Method m) noexcept;

/// A method plus the grid shape for the toroidal one.
struct MethodSpec {
  Method method = Method::johnson_partition;
  int a = 0;
  int b = 0;
};

/// Accepts the hyphenated names used on the command line
/// ("johnson-partition", ..., "toroidal:a,b"). Throws ParameterError.
MethodSpec parse_method(std::string_view text);

/// Output of one construction, with the bookkeeping behind it.
struct ConstructionPlan {
  Method method = Method::johnson_partition;
  /// Graph family the construction is stated for.
  Family family = Family::johnson;
  int n = 0;
  int k = 0;
  int a = 0;
  int b = 0;
  /// For the partition methods: n = r·(part size) + j.
  int r = 0;
  int j = 0;
  std::optional<GroundSetPartition> partition;
  /// The closed-form size of the construction.
  std::uint64_t predicted_size = 0;
  /// Sets counted with multiplicity across parts. Equal to predicted_size;
  /// it can exceed members.size() only for kneser_partition, where the
  /// overlapping last part repeats some subsets of the first.
  std::uint64_t multiset_size = 0;
  /// Distinct subsets, in construction order.
  std::vector<KSubset> members;
  /// Short description of the size formula, e.g. "floor(k(n+1)/(k+1))".
  std::string formula;
};

/// Parts of size k+1, each contributing all but its colex-greatest k-subset
/// (the part minus its smallest element), plus {1..k-1, x} for each x in the
/// leftover block. Needs n >= 2k, k >= 2.
ConstructionPlan johnson_partition(int n, int k);

/// Parts of size 2k-1, each contributing all but its colex-least k-subset;
/// when 2k-1 does not divide n the last part overlaps the first and gives up
/// its colex-greatest k-subset instead. Needs n > 2k, k >= 2.
ConstructionPlan kneser_partition(int n, int k);

/// All k-subsets of {1..n-k} and of {k+1..n}. Needs floor(5k/2) <= n <= 3k-2.
ConstructionPlan kneser_diam3(int n, int k);

/// [k+1] \ {i} for i = 1..k+1, then {1..k-1, x} for x = k+2..n. Exactly n
/// sets whose incidence matrix has determinant (-1)^k·k in this order.
ConstructionPlan matrix_basic(int n, int k);

/// Minimum side length of the grid for path length k, or 0 if unsupported.
int toroidal_threshold(int k) noexcept;

/// Element of [ab] for the 1-based grid cell (row, col) of C_a x C_b.
inline int toroidal_element(int b, int row, int col) noexcept { return (row - 1) * b + col; }

/// All 2ab straight paths on k vertices in the torus C_a x C_b: the ab
/// horizontal ones (by row, then starting column), then the ab vertical ones.
/// k must be 4, 5 or 6 and a, b at least toroidal_threshold(k).
ConstructionPlan toroidal_paths(int a, int b, int k);

/// Dispatch on a parsed method. n is ignored for toroidal (n = ab).
ConstructionPlan construct(const MethodSpec& spec, int n, int k);

}  // namespace metdim
