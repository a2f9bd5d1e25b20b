#include "metdim/bounds.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "metdim/constructions.hpp"
#include "metdim/designs.hpp"
#include "metdim/error.hpp"
#include "metdim/field.hpp"

namespace metdim {

namespace {

using Clock = std::chrono::steady_clock;
using Classes = std::vector<std::vector<int>>;

/// Vertices by colex rank, with distances either tabulated or computed from
/// intersection sizes.
class DistanceOracle {
 public:
  explicit DistanceOracle(const GraphInstance& g)
      : n_(static_cast<int>(g.vertex_count())),
        words_((g.n() + 63) / 64),
        table_(g.distance_table()),
        diameter_(g.diameter()) {
    for (ColexCursor c(g.n(), g.k()); !c.done(); c.next()) bits_.push_back(c.current().words());
    if (static_cast<std::uint64_t>(n_) * n_ <= kTabulate) {
      matrix_.resize(static_cast<std::size_t>(n_) * n_);
      for (int x = 0; x < n_; ++x)
        for (int v = 0; v < n_; ++v) matrix_[static_cast<std::size_t>(x) * n_ + v] = compute(x, v);
    }
  }

  int size() const noexcept { return n_; }
  int diameter() const noexcept { return diameter_; }

  int operator()(int x, int v) const noexcept {
    return matrix_.empty() ? compute(x, v) : matrix_[static_cast<std::size_t>(x) * n_ + v];
  }

 private:
  static constexpr std::uint64_t kTabulate = std::uint64_t{1} << 26;

  std::uint8_t compute(int x, int v) const noexcept {
    int s = 0;
    for (int i = 0; i < words_; ++i) s += __builtin_popcountll(bits_[x][i] & bits_[v][i]);
    return table_[s];
  }

  int n_;
  int words_;
  std::vector<std::uint8_t> table_;
  int diameter_;
  std::vector<KSubset::Words> bits_;
  std::vector<std::uint8_t> matrix_;
};

/// Splits every class by distance to x and drops the singletons.
Classes refine(const DistanceOracle& d, const Classes& classes, int x) {
  Classes out;
  std::vector<std::vector<int>> buckets(d.diameter() + 1);
  for (const auto& cls : classes) {
    for (auto& b : buckets) b.clear();
    for (int v : cls) buckets[d(x, v)].push_back(v);
    for (auto& b : buckets)
      if (b.size() > 1) out.push_back(b);
  }
  return out;
}

/// Landmarks needed before a class of size c can be split into singletons
/// when one landmark yields at most D+1 parts.
int splitting_bound(const Classes& classes, int diameter) {
  std::size_t largest = 1;
  for (const auto& c : classes) largest = std::max(largest, c.size());
  int need = 0;
  std::uint64_t reach = 1;
  while (reach < largest) {
    reach *= static_cast<std::uint64_t>(diameter + 1);
    ++need;
  }
  return need;
}

struct Deadline {
  Clock::time_point at;
  bool expired = false;
  std::uint64_t ticks = 0;

  bool check() {
    if (expired) return true;
    if ((++ticks & 255) == 0 && Clock::now() >= at) expired = true;
    return expired;
  }
};

std::vector<int> greedy_indices(const DistanceOracle& d, Deadline* deadline) {
  const int n = d.size();
  Classes classes;
  if (n > 1) {
    classes.emplace_back(n);
    for (int v = 0; v < n; ++v) classes[0][v] = v;
  }
  std::vector<int> chosen;
  std::vector<std::uint32_t> count(d.diameter() + 1);
  while (!classes.empty()) {
    int best = -1;
    std::uint64_t best_left = 0;
    for (int x = 0; x < n; ++x) {
      if (deadline && deadline->check()) return {};
      std::uint64_t left = 0;
      for (const auto& cls : classes) {
        std::fill(count.begin(), count.end(), 0);
        for (int v : cls) ++count[d(x, v)];
        for (auto c : count) left += static_cast<std::uint64_t>(c) * (c - (c > 0)) / 2;
      }
      if (best < 0 || left < best_left) {
        best = x;
        best_left = left;
      }
    }
    chosen.push_back(best);
    classes = refine(d, classes, best);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

class BranchAndBound {
 public:
  BranchAndBound(const DistanceOracle& d, Deadline& deadline) : d_(d), deadline_(deadline), banned_(d.size(), 0) {}

  /// Searches for a resolving set smaller than `incumbent`; returns the best
  /// found (the incumbent itself if none).
  std::vector<int> minimise(std::vector<int> incumbent, const Classes& root) {
    best_ = std::move(incumbent);
    std::vector<int> chosen;
    descend(root, chosen);
    return best_;
  }

  /// Lexicographically least resolving set of exactly `size` vertices.
  std::optional<std::vector<int>> lex_least(int size, const Classes& root) {
    std::vector<int> chosen;
    target_ = size;
    if (lex(root, 0, chosen)) return found_;
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  int root_bound() const noexcept { return root_bound_; }

 private:
  struct Pair {
    std::vector<int> resolvers;
  };

  /// Admissible resolvers of the first pair of each class, up to kSample
  /// classes. Resolvers below `from` or banned are inadmissible.
  std::vector<Pair> sample_pairs(const Classes& classes, int from) const {
    std::vector<Pair> out;
    const int n = d_.size();
    for (std::size_t c = 0; c < classes.size() && out.size() < kSample; ++c) {
      const int u = classes[c][0];
      const int w = classes[c][1];
      Pair p;
      for (int x = from; x < n; ++x)
        if (!banned_[x] && d_(x, u) != d_(x, w)) p.resolvers.push_back(x);
      out.push_back(std::move(p));
      if (out.back().resolvers.empty()) break;
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Pair& a, const Pair& b) { return a.resolvers.size() < b.resolvers.size(); });
    return out;
  }

  /// Pairs with pairwise disjoint resolver sets each need their own landmark.
  int disjoint_bound(const std::vector<Pair>& pairs) {
    mark_.assign(d_.size(), 0);
    int count = 0;
    for (const Pair& p : pairs) {
      bool clash = false;
      for (int x : p.resolvers)
        if (mark_[x]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (int x : p.resolvers) mark_[x] = 1;
      ++count;
    }
    return count;
  }

  /// Fewest admissible landmarks whose individual pair counts could add up
  /// to every unresolved pair.
  int counting_bound(const Classes& classes, int from) {
    std::uint64_t total = 0;
    for (const auto& c : classes) total += static_cast<std::uint64_t>(c.size()) * (c.size() - 1) / 2;
    gains_.clear();
    std::vector<std::uint32_t> count(d_.diameter() + 1);
    for (int x = from; x < d_.size(); ++x) {
      if (banned_[x]) continue;
      std::uint64_t left = 0;
      for (const auto& cls : classes) {
        std::fill(count.begin(), count.end(), 0);
        for (int v : cls) ++count[d_(x, v)];
        for (auto c : count) left += static_cast<std::uint64_t>(c) * (c - (c > 0)) / 2;
      }
      if (left < total) gains_.push_back(total - left);
    }
    std::sort(gains_.begin(), gains_.end(), std::greater<>());
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < gains_.size(); ++i) {
      covered += gains_[i];
      if (covered >= total) return static_cast<int>(i) + 1;
    }
    return kInfeasible;
  }

  int lower_bound(const Classes& classes, const std::vector<Pair>& pairs, int from) {
    if (classes.empty()) return 0;
    if (!pairs.empty() && pairs.front().resolvers.empty()) return kInfeasible;
    return std::max({splitting_bound(classes, d_.diameter()), disjoint_bound(pairs), counting_bound(classes, from)});
  }

  void descend(const Classes& classes, std::vector<int>& chosen) {
    ++nodes_;
    if (deadline_.check()) return;
    if (classes.empty()) {
      if (chosen.size() < best_.size()) {
        best_ = chosen;
        std::sort(best_.begin(), best_.end());
      }
      return;
    }
    const auto pairs = sample_pairs(classes, 0);
    const int lb = lower_bound(classes, pairs, 0);
    if (nodes_ == 1) root_bound_ = lb;
    if (static_cast<long long>(chosen.size()) + lb >= static_cast<long long>(best_.size())) return;

    const std::vector<int> branch = pairs.front().resolvers;
    std::vector<int> undo;
    for (int x : branch) {
      chosen.push_back(x);
      descend(refine(d_, classes, x), chosen);
      chosen.pop_back();
      banned_[x] = 1;
      undo.push_back(x);
      if (deadline_.expired || chosen.size() + 1 >= best_.size()) break;
    }
    for (int x : undo) banned_[x] = 0;
  }

  bool lex(const Classes& classes, int from, std::vector<int>& chosen) {
    ++nodes_;
    if (deadline_.check()) return false;
    if (classes.empty()) {
      // A smaller set cannot resolve when the size is optimal; pad anyway so
      // the answer has the requested size.
      found_ = chosen;
      for (int x = 0; static_cast<int>(found_.size()) < target_; ++x)
        if (std::find(found_.begin(), found_.end(), x) == found_.end()) found_.push_back(x);
      std::sort(found_.begin(), found_.end());
      return true;
    }
    const int left = target_ - static_cast<int>(chosen.size());
    if (left <= 0) return false;
    const auto pairs = sample_pairs(classes, from);
    if (lower_bound(classes, pairs, from) > left) return false;
    for (int x = from; x < d_.size(); ++x) {
      chosen.push_back(x);
      const bool ok = lex(refine(d_, classes, x), x + 1, chosen);
      chosen.pop_back();
      if (ok) return true;
      if (deadline_.expired) return false;
    }
    return false;
  }

  static constexpr std::size_t kSample = 24;
  static constexpr int kInfeasible = 1 << 20;

  const DistanceOracle& d_;
  Deadline& deadline_;
  std::vector<std::uint8_t> banned_;
  std::vector<std::uint8_t> mark_;
  std::vector<std::uint64_t> gains_;
  std::vector<int> best_;
  std::vector<int> found_;
  int target_ = 0;
  std::uint64_t nodes_ = 0;
  int root_bound_ = 0;
};

void check_solver_size(const GraphInstance& g, std::uint64_t limit) {
  if (g.vertex_count() > limit)
    throw InstanceTooLarge(g.name() + " has " + std::to_string(g.vertex_count()) + " vertices, above the solver limit " +
                           std::to_string(limit));
}

std::vector<KSubset> to_subsets(const GraphInstance& g, const std::vector<int>& indices) {
  std::vector<KSubset> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(unrank_colex(g.n(), g.k(), static_cast<std::uint64_t>(i)));
  return out;
}

}  // namespace

std::string_view to_string(Proof p) noexcept {
  return p == Proof::exhaustive ? "exhaustive" : "timeout-partial";
}

std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::upper: return "upper";
    case Direction::lower: return "lower";
    case Direction::exact: return "exact";
  }
  return "?";
}

std::vector<KSubset> greedy_resolving_set(const GraphInstance& g, std::uint64_t vertex_limit) {
  check_solver_size(g, vertex_limit);
  const DistanceOracle d(g);
  return to_subsets(g, greedy_indices(d, nullptr));
}

SolveResult exact_metric_dimension(const GraphInstance& g, const SolveLimits& limits) {
  check_solver_size(g, limits.vertex_limit);
  Deadline deadline{Clock::now() + limits.timeout};
  const DistanceOracle d(g);
  const int n = d.size();

  Classes root;
  if (n > 1) {
    root.emplace_back(n);
    for (int v = 0; v < n; ++v) root[0][v] = v;
  }

  std::vector<int> incumbent = greedy_indices(d, &deadline);
  if (incumbent.empty() && n > 1) {
    // Every vertex but one always resolves.
    for (int v = 0; v + 1 < n; ++v) incumbent.push_back(v);
  }

  SolveResult result;
  BranchAndBound search(d, deadline);
  std::vector<int> best = deadline.expired ? incumbent : search.minimise(incumbent, root);
  result.lower_bound = search.root_bound();
  if (deadline.expired) {
    result.proof = Proof::timeout_partial;
  } else {
    result.proof = Proof::exhaustive;
    result.lower_bound = static_cast<int>(best.size());
    if (auto lex = search.lex_least(static_cast<int>(best.size()), root)) {
      best = *lex;
      result.basis_lex_least = true;
    }
  }
  result.nodes_explored = search.nodes();
  result.dimension = static_cast<int>(best.size());
  result.basis = to_subsets(g, best);
  return result;
}

std::optional<int> determining_lower_bound(int n, int k) {
  if (k < 2 || n <= static_cast<long long>(k + 1) * k / 2) return std::nullopt;
  // The intervals (floor((d-1)(k+1)/2), floor(d(k+1)/2)] tile the integers,
  // so exactly one d fits; it counts only when d >= k+1.
  for (long long d = 1;; ++d) {
    const long long lo = (d - 1) * (k + 1) / 2;
    const long long hi = d * (k + 1) / 2;
    if (lo < n - 1 && n - 1 <= hi) {
      if (d >= k + 1) return static_cast<int>(d);
      return std::nullopt;
    }
    if (lo >= n - 1) return std::nullopt;
  }
}

int k2_exact(int n) {
  if (n < 6) throw ParameterError("the k = 2 formula needs n >= 6 (got " + std::to_string(n) + ")");
  const int i = n % 3;
  return 2 * (n - i) / 3 + i;
}

// ---------------------------------------------------------------------------
// Bound table

namespace {

/// q with q*q == n, if any.
int exact_sqrt(int n) {
  int q = 0;
  while ((q + 1) * (q + 1) <= n) ++q;
  return q * q == n ? q : 0;
}

bool is_prime_power(int q) { return q >= 2 && prime_power(q).first != 0; }

/// Factor a·b = n with both at least t, smallest a first.
std::optional<std::pair<int, int>> torus_shape(int n, int t) {
  for (int a = t; a * a <= n; ++a)
    if (n % a == 0 && n / a >= t) return std::make_pair(a, n / a);
  return std::nullopt;
}

}  // namespace

std::vector<BoundRecord> bound_table(Family family, int n, int k) {
  const GraphInstance g = GraphInstance::make(family, n, k);
  const bool johnson = family == Family::johnson;
  const bool odd = n == 2 * k + 1;
  const bool kneser_rows_apply = !johnson || n > 2 * k;
  const std::string via = johnson ? " (a resolving set of K(n,k) also resolves J(n,k))" : "";
  std::vector<BoundRecord> rows;
  auto add = [&](std::string name, std::uint64_t value, Direction dir, std::string source, bool ok,
                 std::string reason) {
    rows.push_back({std::move(name), value, dir, std::move(source), ok, std::move(reason)});
  };

  // k = 2
  {
    const bool ok = k == 2 && n >= 6;
    add("k2-exact", ok ? static_cast<std::uint64_t>(k2_exact(n)) : 0, Direction::exact,
        "closed form for k = 2 by residue of n mod 3", ok, ok ? "k = 2 and n >= 6" : "needs k = 2 and n >= 6");
  }
  // Partition of [n] into (k+1)-sets.
  {
    const bool ok = k >= 2 && (johnson || odd);
    std::string reason = "needs k >= 2";
    if (k >= 2) reason = johnson ? "k >= 2, n >= 2k" : (odd ? "odd graph: same resolving sets as J(2k+1,k)"
                                                            : "Kneser graph is not an odd graph");
    add("johnson-partition", ok ? static_cast<std::uint64_t>(k) * (n + 1) / (k + 1) : 0, Direction::upper,
        "partition of [n] into (k+1)-sets", ok, reason);
  }
  {
    const bool ok = k >= 2 && kneser_rows_apply;
    const std::uint64_t v = ok ? static_cast<std::uint64_t>((n + 2 * k - 2) / (2 * k - 1)) * (binomial(2 * k - 1, k) - 1) : 0;
    add("kneser-partition", v, Direction::upper, "partition of [n] into (2k-1)-sets", ok,
        ok ? "k >= 2, n > 2k" + via : (k < 2 ? "needs k >= 2" : "needs n > 2k"));
  }
  {
    const int lo = 5 * k / 2;
    const int hi = 3 * k - 2;
    const bool ok = k >= 4 && lo <= n && n <= hi;
    add("kneser-diam3", ok ? 2 * binomial(n - k, k) : 0, Direction::upper,
        "two overlapping (n-k)-sets, diameter 3", ok,
        ok ? "floor(5k/2) <= n <= 3k-2" + via : "needs floor(5k/2) <= n <= 3k-2");
  }
  // Rank-n incidence matrix.
  {
    const bool ok = k >= 2 && n >= k + 2 && (johnson || odd);
    add("matrix-rank", ok ? static_cast<std::uint64_t>(n) : 0, Direction::upper,
        "k-set system with incidence matrix of rank n", ok,
        ok ? (johnson ? "k >= 2, n >= k+2" : "odd graph: same resolving sets as J(2k+1,k)")
           : "needs the Johnson graph (or an odd graph), k >= 2, n >= k+2");
  }
  // Projective plane as a symmetric design.
  {
    const int q = k - 1;
    const bool shape = q >= 2 && n == q * q + q + 1 && is_prime_power(q);
    const bool built = shape && n <= kMaxGroundSet && q <= GaloisField::kMaxOrder;
    const bool ok = built && (johnson || odd);
    std::string reason = "needs n = q^2+q+1, k = q+1 with q a prime power";
    if (shape && !built) reason = "plane too large to build";
    if (built && !ok) reason = "lines of PG(2,q), q > 2, do not resolve K(q^2+q+1,q+1)";
    if (ok) reason = "PG(2," + std::to_string(q) + ") is a symmetric design";
    add("projective-plane", ok ? static_cast<std::uint64_t>(n) : 0, Direction::upper,
        "lines of the projective plane of order q", ok, reason);
  }
  // Hadamard design.
  {
    const bool shape = (n + 1) % 4 == 0 && k == (n - 1) / 2;
    const int m = (n + 1) / 4;
    const bool ok = shape && m >= 1 && hadamard_constructible(4 * m);
    std::string reason = "needs n = 4m-1, k = 2m-1";
    if (shape) reason = ok ? "Hadamard matrix of order " + std::to_string(4 * m) + " is constructible"
                           : "no in-repo Hadamard matrix of order " + std::to_string(4 * m);
    add("hadamard-design", ok ? static_cast<std::uint64_t>(n) : 0, Direction::upper,
        "blocks of the Hadamard 2-design", ok, reason);
  }
  // Steiner triple systems.
  {
    const bool shape = k == 3 && (n % 6 == 1 || n % 6 == 3) && n >= 7;
    const bool ok = shape && n >= 4 * k - 2 && n <= kMaxGroundSet && kneser_rows_apply;
    std::string reason = "needs k = 3 and n ≡ 1,3 (mod 6)";
    if (shape && n < 4 * k - 2) reason = "needs n >= 4k-2 = 10";
    if (ok) reason = "STS(" + std::to_string(n) + ") is constructible" + via;
    add("steiner-triple-system", ok ? static_cast<std::uint64_t>(n) * (n - 1) / 6 : 0, Direction::upper,
        "blocks of a Steiner triple system", ok, reason);
  }
  // Affine plane as a partial geometry.
  {
    const int q = exact_sqrt(n);
    const bool ok = q >= 3 && k == q && is_prime_power(q) && q <= GaloisField::kMaxOrder && n <= kMaxGroundSet &&
                    kneser_rows_apply;
    add("affine-plane", ok ? static_cast<std::uint64_t>(q) * (q + 1) : 0, Direction::upper,
        "lines of the affine plane of order q", ok,
        ok ? "AG(2," + std::to_string(q) + ") is a pg(q-1,q,q-1)" + via
           : "needs n = q^2, k = q, q >= 3 a prime power");
  }
  // Toroidal grids.
  {
    const int t = toroidal_threshold(k);
    const auto shape = t ? torus_shape(n, t) : std::nullopt;
    const bool ok = shape.has_value() && kneser_rows_apply;
    std::string reason = t ? "needs n = ab with a, b >= " + std::to_string(t) : "needs k in {4, 5, 6}";
    if (ok) reason = "C_" + std::to_string(shape->first) + " x C_" + std::to_string(shape->second) + via;
    add("toroidal-paths", ok ? 2 * static_cast<std::uint64_t>(n) : 0, Direction::upper,
        "straight paths on k vertices in a toroidal grid", ok, reason);
  }
  // Determining number.
  {
    const auto d = determining_lower_bound(n, k);
    add("determining-number", d.value_or(0), Direction::lower, "determining number of the graph", d.has_value(),
        d ? "n > C(k+1,2) and d >= k+1" : "no d >= k+1 >= 3 with n > C(k+1,2)");
  }
  (void)g;
  return rows;
}

std::optional<std::uint64_t> best_upper(std::span<const BoundRecord> rows) {
  std::optional<std::uint64_t> best;
  for (const auto& r : rows)
    if (r.applicable && r.direction != Direction::lower && (!best || r.value < *best)) best = r.value;
  return best;
}

std::optional<std::uint64_t> best_lower(std::span<const BoundRecord> rows) {
  std::optional<std::uint64_t> best;
  for (const auto& r : rows)
    if (r.applicable && r.direction != Direction::upper && (!best || r.value > *best)) best = r.value;
  return best;
}

std::string to_text(std::span<const BoundRecord> rows) {
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "name" << "  dir    value  reason\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(5) << to_string(r.direction)
        << "  " << std::right << std::setw(5);
    if (r.applicable)
      out << r.value;
    else
      out << "-";
    out << "  " << r.reason << '\n';
  }
  return out.str();
}

std::string to_json(std::span<const BoundRecord> rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"name", r.name},
                       {"direction", std::string(to_string(r.direction))},
                       {"source", r.source},
                       {"applicable", r.applicable},
                       {"reason", r.reason}};
    row["value"] = r.applicable ? nlohmann::json(r.value) : nlohmann::json(nullptr);
    doc.push_back(std::move(row));
  }
  return doc.dump(2);
}

std::string to_text(const GraphInstance& g, const SolveResult& r) {
  std::ostringstream out;
  out << "instance " << g.name() << '\n'
      << "dimension " << r.dimension << '\n'
      << "proof " << to_string(r.proof) << '\n'
      << "lower_bound " << r.lower_bound << '\n'
      << "nodes " << r.nodes_explored << '\n'
      << "lex_least " << (r.basis_lex_least ? "yes" : "no") << '\n';
  for (const auto& s : r.basis) out << "basis " << s.to_string() << '\n';
  return out.str();
}

std::string to_json(const GraphInstance& g, const SolveResult& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& s : r.basis) basis.push_back(s.elements());
  nlohmann::json doc{{"instance", g.name()},
                     {"family", std::string(to_string(g.family()))},
                     {"n", g.n()},
                     {"k", g.k()},
                     {"dimension", r.dimension},
                     {"proof", std::string(to_string(r.proof))},
                     {"lower_bound", r.lower_bound},
                     {"nodes", r.nodes_explored},
                     {"lex_least", r.basis_lex_least},
                     {"basis", std::move(basis)}};
  return doc.dump(2);
}

}  // namespace metdim
