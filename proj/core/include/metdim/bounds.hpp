#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metdim/graphs.hpp"
#include "metdim/subsets.hpp"

namespace metdim {

// ---------------------------------------------------------------------------
// Exact solver

inline constexpr std::uint64_t kDefaultSolverVertexLimit = 20'000;

struct SolveLimits {
  std::uint64_t vertex_limit = kDefaultSolverVertexLimit;
  std::chrono::milliseconds timeout{60'000};
};

enum class Proof { exhaustive, timeout_partial };
std::string_view to_string(Proof p) noexcept;

struct SolveResult {
  /// Size of `basis`. A certified minimum only when proof is exhaustive.
  int dimension = 0;
  std::vector<KSubset> basis;
  std::uint64_t nodes_explored = 0;
  Proof proof = Proof::exhaustive;
  /// Largest lower bound established before the search stopped.
  int lower_bound = 0;
  /// The basis is the lexicographically least one (members compared in
  /// colex order). False if the second search phase ran out of time.
  bool basis_lex_least = false;
};

/// Minimum resolving set by branch and bound over the pairs still
/// unresolved: branch on the pair with the fewest admissible resolvers, bound
/// by disjoint resolver sets and by how far each vertex can split a class.
/// A second pass finds the lexicographically least basis of that size.
/// Throws InstanceTooLarge above limits.vertex_limit.
SolveResult exact_metric_dimension(const GraphInstance& g, const SolveLimits& limits = {});

/// Repeatedly adds the vertex that resolves the most unresolved pairs (ties
/// to the colex-least). Throws InstanceTooLarge above the limit.
std::vector<KSubset> greedy_resolving_set(const GraphInstance& g,
                                          std::uint64_t vertex_limit = kDefaultSolverVertexLimit);

// ---------------------------------------------------------------------------
// Closed forms

/// The d >= k+1 >= 3 with floor((d-1)(k+1)/2) < n-1 <= floor(d(k+1)/2),
/// provided n > C(k+1, 2). It is a lower bound on the metric dimension of
/// both J(n,k) and K(n,k). Absent when no such d exists.
std::optional<int> determining_lower_bound(int n, int k);

/// (2/3)(n - i) + i with i = n mod 3: the metric dimension of J(n,2) and
/// K(n,2). Throws ParameterError for n < 6.
int k2_exact(int n);

// ---------------------------------------------------------------------------
// Bound table

enum class Direction { upper, lower, exact };
std::string_view to_string(Direction d) noexcept;

struct BoundRecord {
  std::string name;
  std::uint64_t value = 0;
  Direction direction = Direction::upper;
  /// What the bound comes from, in words.
  std::string source;
  bool applicable = false;
  /// Why it applies, or which hypothesis fails.
  std::string reason;
};

/// Every row of the bound summary evaluated for (family, n, k), applicable or
/// not. Throws ParameterError for an invalid instance.
std::vector<BoundRecord> bound_table(Family family, int n, int k);

/// Smallest applicable upper or exact value, if any.
std::optional<std::uint64_t> best_upper(std::span<const BoundRecord> rows);
std::optional<std::uint64_t> best_lower(std::span<const BoundRecord> rows);

std::string to_text(std::span<const BoundRecord> rows);
std::string to_json(std::span<const BoundRecord> rows);
std::string to_text(const GraphInstance& g, const SolveResult& result);
std::string to_json(const GraphInstance& g, const SolveResult& result);

}  // namespace metdim
