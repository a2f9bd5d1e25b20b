#include "metdim/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "metdim/error.hpp"

namespace metdim {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int kneser_formula(int k, int b, int s) {
  if (s == k) return 0;
  return std::min(2 * ceil_div(k - s, b), 2 * ceil_div(s, b) + 1);
}

void check_pair(const GraphInstance& g, const KSubset& u, const KSubset& w) {
  if (u.n() != w.n()) throw GroundSetMismatch("vertices over different ground sets");
  g.check_vertex(u);
  g.check_vertex(w);
}

}  // namespace

std::string_view to_string(Family f) noexcept { return f == Family::johnson ? "johnson" : "kneser"; }

Family parse_family(std::string_view text) {
  if (text == "johnson" || text == "J" || text == "j") return Family::johnson;
  if (text == "kneser" || text == "K" || text == "k") return Family::kneser;
  throw ParameterError("unknown graph family '" + std::string(text) + "' (expected johnson or kneser)");
}

GraphInstance::GraphInstance(Family family, int n, int k) : family_(family), n_(n), k_(k) {
  if (n > kMaxGroundSet) throw ParameterError("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroundSet));
  if (k < 1) throw ParameterError("k must be at least 1");
  if (family == Family::johnson && n < 2 * k)
    throw ParameterError("J(n, k) requires n >= 2k (got n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
  if (family == Family::kneser && n <= 2 * k)
    throw ParameterError("K(n, k) is connected only for n > 2k (got n = " + std::to_string(n) + ", k = " +
                         std::to_string(k) + ")");
  by_intersection_.resize(k + 1);
  // Only intersection sizes that actually occur between k-subsets of [n].
  const int s_min = std::max(0, 2 * k - n);
  for (int s = 0; s <= k; ++s) {
    const int d = family == Family::johnson ? k - s : kneser_formula(k, n - 2 * k, s);
    by_intersection_[s] = static_cast<std::uint8_t>(d);
    if (s >= s_min) diameter_ = std::max(diameter_, d);
  }
}

GraphInstance GraphInstance::johnson(int n, int k) { return GraphInstance(Family::johnson, n, k); }
GraphInstance GraphInstance::kneser(int n, int k) { return GraphInstance(Family::kneser, n, k); }
GraphInstance GraphInstance::make(Family family, int n, int k) { return GraphInstance(family, n, k); }

void GraphInstance::check_vertex(const KSubset& v) const {
  if (v.n() != n_)
    throw GroundSetMismatch("vertex over [" + std::to_string(v.n()) + "] in " + name());
  if (v.k() != k_)
    throw ParameterError("vertex {" + v.to_string() + "} has size " + std::to_string(v.k()) + ", expected " +
                         std::to_string(k_));
}

std::string GraphInstance::name() const {
  return std::string(family_ == Family::johnson ? "J(" : "K(") + std::to_string(n_) + "," + std::to_string(k_) + ")";
}

int johnson_distance(const GraphInstance& g, const KSubset& u, const KSubset& w) {
  if (g.family() != Family::johnson) throw ParameterError("johnson_distance called on " + g.name());
  check_pair(g, u, w);
  return g.k() - intersection_size_unchecked(u, w);
}

int kneser_distance(const GraphInstance& g, const KSubset& u, const KSubset& w) {
  if (g.family() != Family::kneser) throw ParameterError("kneser_distance called on " + g.name());
  check_pair(g, u, w);
  if (u == w) return 0;
  return kneser_formula(g.k(), g.b(), intersection_size_unchecked(u, w));
}

int odd_graph_distance(int k, const KSubset& u, const KSubset& w) {
  if (u.n() != 2 * k + 1 || w.n() != 2 * k + 1)
    throw ParameterError("odd-graph distance needs subsets of [2k+1] = [" + std::to_string(2 * k + 1) + "]");
  if (u.k() != k || w.k() != k) throw ParameterError("odd-graph distance needs k-subsets");
  const int s = intersection_size_unchecked(u, w);
  const int even = 2 * (k - s);  // |U ∩ W| = k - r  =>  d = 2r
  const int odd = 2 * s + 1;     // |U ∩ W| = r      =>  d = 2r + 1
  return std::min(even, odd);
}

int distance(const GraphInstance& g, const KSubset& u, const KSubset& w) {
  return g.family() == Family::johnson ? johnson_distance(g, u, w) : kneser_distance(g, u, w);
}

std::vector<KSubset> neighbours(const GraphInstance& g, const KSubset& v) {
  g.check_vertex(v);
  std::vector<KSubset> out;
  const int n = g.n();
  if (g.family() == Family::johnson) {
    const auto in = v.elements();
    for (int x : in) {
      for (int y = 1; y <= n; ++y) {
        if (!v.contains(y)) out.push_back(v.without(x).with(y));
      }
    }
  } else {
    std::vector<int> complement;
    for (int y = 1; y <= n; ++y)
      if (!v.contains(y)) complement.push_back(y);
    out = k_subsets_of(n, complement, g.k());
  }
  return out;
}

std::vector<std::uint8_t> bfs_distances_from(const GraphInstance& g, const KSubset& source,
                                             std::uint64_t vertex_limit) {
  g.check_vertex(source);
  const std::uint64_t count = g.vertex_count();
  if (count > vertex_limit)
    throw InstanceTooLarge(g.name() + " has " + std::to_string(count) + " vertices, BFS oracle limit is " +
                           std::to_string(vertex_limit));
  constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> dist(count, kUnseen);
  std::deque<KSubset> queue;
  dist[rank_colex(source)] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const KSubset v = queue.front();
    queue.pop_front();
    const std::uint8_t dv = dist[rank_colex(v)];
    for (const KSubset& w : neighbours(g, v)) {
      auto& dw = dist[rank_colex(w)];
      if (dw == kUnseen) {
        dw = static_cast<std::uint8_t>(dv + 1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int bfs_distance(const GraphInstance& g, const KSubset& u, const KSubset& w, std::uint64_t vertex_limit) {
  check_pair(g, u, w);
  if (g.vertex_count() > vertex_limit)
    throw InstanceTooLarge(g.name() + " exceeds the BFS oracle limit of " + std::to_string(vertex_limit));
  if (u == w) return 0;
  const auto dist = bfs_distances_from(g, u, vertex_limit);
  return dist[rank_colex(w)];
}

int diameter(const GraphInstance& g) { return g.diameter(); }

}  // namespace metdim
