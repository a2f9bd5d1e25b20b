#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "metdim/subsets.hpp"

namespace metdim {

enum class Family { johnson, kneser };

std::string_view to_string(Family f) noexcept;
/// Accepts "johnson" / "kneser" (also "J" / "K"). Throws ParameterError.
Family parse_family(std::string_view text);

/// J(n, k) or K(n, k). Distances in both families depend only on the
/// intersection size s = |U ∩ W|, so the instance carries a lookup table
/// indexed by s.
class GraphInstance {
 public:
  /// Requires n >= 2k >= 2.
  static GraphInstance johnson(int n, int k);
  /// Requires n > 2k >= 2.
  static GraphInstance kneser(int n, int k);
  static GraphInstance make(Family family, int n, int k);

  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  /// n - 2k.
  int b() const noexcept { return n_ - 2 * k_; }
  /// K(2k+1, k).
  bool is_odd_graph() const noexcept { return family_ == Family::kneser && n_ == 2 * k_ + 1; }
  std::uint64_t vertex_count() const noexcept { return binomial(n_, k_); }
  int diameter() const noexcept { return diameter_; }

  /// Distance between two vertices meeting in s elements (s == k means equal).
  int distance_for_intersection(int s) const noexcept { return by_intersection_[s]; }
  const std::vector<std::uint8_t>& distance_table() const noexcept { return by_intersection_; }

  /// Throws ParameterError if v is not a k-subset of [n].
  void check_vertex(const KSubset& v) const;

  std::string name() const;

 private:
  GraphInstance(Family family, int n, int k);

  Family family_;
  int n_;
  int k_;
  int diameter_ = 0;
  std::vector<std::uint8_t> by_intersection_;
};

/// k - |U ∩ W|.
int johnson_distance(const GraphInstance& g, const KSubset& u, const KSubset& w);

/// min{ 2⌈(k-s)/b⌉, 2⌈s/b⌉ + 1 } with s = |U ∩ W| and b = n - 2k; 0 when U == W.
int kneser_distance(const GraphInstance& g, const KSubset& u, const KSubset& w);

/// Odd graph K(2k+1, k): distance 2r when |U ∩ W| = k - r, 2r + 1 when
/// |U ∩ W| = r; of the two readings, the shorter is the graph distance.
/// Throws ParameterError when the subsets do not live in [2k+1].
int odd_graph_distance(int k, const KSubset& u, const KSubset& w);

/// Closed-form distance for either family.
int distance(const GraphInstance& g, const KSubset& u, const KSubset& w);

/// Default vertex limit for the breadth-first reference oracle.
inline constexpr std::uint64_t kDefaultBfsLimit = 200'000;

/// Shortest-path distance by explicit breadth-first search over implicitly
/// generated neighbours. Throws InstanceTooLarge above `vertex_limit`.
int bfs_distance(const GraphInstance& g, const KSubset& u, const KSubset& w,
                 std::uint64_t vertex_limit = kDefaultBfsLimit);

/// Distances from `source` to every vertex, indexed by colex rank.
std::vector<std::uint8_t> bfs_distances_from(const GraphInstance& g, const KSubset& source,
                                             std::uint64_t vertex_limit = kDefaultBfsLimit);

/// Neighbours of v (Johnson: swap one element; Kneser: k-subsets of the
/// complement).
std::vector<KSubset> neighbours(const GraphInstance& g, const KSubset& v);

/// Diameter from the closed forms (no traversal).
int diameter(const GraphInstance& g);

}  // namespace metdim
