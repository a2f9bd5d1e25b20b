#include "metdim/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "metdim/error.hpp"

namespace metdim {

namespace {

std::string str(long long v) { return std::to_string(v); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

enum class Drop { least, greatest };

/// All k-subsets of a part, in colex order, except its colex-least or
/// colex-greatest one.
void add_part_minus(std::vector<KSubset>& out, int n, const std::vector<int>& part, int k, Drop drop) {
  auto subsets = k_subsets_of(n, part, k);
  if (drop == Drop::least)
    out.insert(out.end(), subsets.begin() + 1, subsets.end());
  else
    out.insert(out.end(), subsets.begin(), subsets.end() - 1);
}

void check_range(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::johnson_partition: return "johnson-partition";
    case Method::kneser_partition: return "kneser-partition";
    case Method::kneser_diam3: return "kneser-diam3";
    case Method::matrix_basic: return "matrix-basic";
    case Method::toroidal: return "toroidal";
  }
  return "?";
}

MethodSpec parse_method(std::string_view text) {
  for (Method m : {Method::johnson_partition, Method::kneser_partition, Method::kneser_diam3, Method::matrix_basic})
    if (text == to_string(m)) return {m, 0, 0};
  const std::string_view prefix = "toroidal:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view rest = text.substr(prefix.size());
    const auto comma = rest.find(',');
    MethodSpec spec{Method::toroidal, 0, 0};
    if (comma != std::string_view::npos) {
      const auto first = rest.substr(0, comma);
      const auto second = rest.substr(comma + 1);
      const auto r1 = std::from_chars(first.data(), first.data() + first.size(), spec.a);
      const auto r2 = std::from_chars(second.data(), second.data() + second.size(), spec.b);
      if (r1.ec == std::errc{} && r1.ptr == first.data() + first.size() && r2.ec == std::errc{} &&
          r2.ptr == second.data() + second.size())
        return spec;
    }
    throw ParameterError("toroidal method needs the grid shape as toroidal:a,b");
  }
  throw ParameterError("unknown method '" + std::string(text) +
                       "' (expected johnson-partition, kneser-partition, kneser-diam3, matrix-basic or toroidal:a,b)");
}

ConstructionPlan johnson_partition(int n, int k) {
  check_range(k >= 2, "johnson-partition needs k >= 2");
  check_range(n >= 2 * k, "johnson-partition needs n >= 2k (n = " + str(n) + ", k = " + str(k) + ")");
  check_range(n <= kMaxGroundSet, "n above " + str(kMaxGroundSet));
  ConstructionPlan plan;
  plan.method = Method::johnson_partition;
  plan.family = Family::johnson;
  plan.n = n;
  plan.k = k;
  plan.r = n / (k + 1);
  plan.j = n % (k + 1);
  plan.formula = "floor(k(n+1)/(k+1))";
  GroundSetPartition partition{n, {}, false};
  for (int i = 1; i <= plan.r; ++i) {
    partition.parts.push_back(range((i - 1) * (k + 1) + 1, i * (k + 1)));
    add_part_minus(plan.members, n, partition.parts.back(), k, Drop::greatest);
  }
  if (plan.j != 0) {
    partition.parts.push_back(range(n - plan.j + 1, n));
    std::vector<int> base = range(1, k - 1);
    for (int x = n - plan.j + 1; x <= n; ++x) {
      base.push_back(x);
      plan.members.push_back(KSubset::from_elements(n, base));
      base.pop_back();
    }
  }
  plan.partition = std::move(partition);
  plan.predicted_size = static_cast<std::uint64_t>(k) * (n + 1) / (k + 1);
  plan.multiset_size = plan.members.size();
  return plan;
}

ConstructionPlan kneser_partition(int n, int k) {
  check_range(k >= 2, "kneser-partition needs k >= 2");
  check_range(n > 2 * k, "kneser-partition needs n > 2k (n = " + str(n) + ", k = " + str(k) + ")");
  check_range(n <= kMaxGroundSet, "n above " + str(kMaxGroundSet));
  const int part = 2 * k - 1;
  ConstructionPlan plan;
  plan.method = Method::kneser_partition;
  plan.family = Family::kneser;
  plan.n = n;
  plan.k = k;
  plan.r = n / part;
  plan.j = n % part;
  plan.formula = "ceil(n/(2k-1))·(C(2k-1,k)-1)";
  GroundSetPartition partition{n, {}, plan.j != 0};
  for (int i = 1; i <= plan.r; ++i) partition.parts.push_back(range((i - 1) * part + 1, i * part));
  if (plan.j != 0) {
    std::vector<int> last = range(1, part - plan.j);
    for (int x = n - plan.j + 1; x <= n; ++x) last.push_back(x);
    partition.parts.push_back(std::move(last));
  }
  std::vector<KSubset> all;
  // The overlapping part drops its colex-greatest set, which contains n. Had
  // it dropped {1..k} like the first part, that set would be missing twice.
  for (std::size_t i = 0; i < partition.parts.size(); ++i)
    add_part_minus(all, n, partition.parts[i], k,
                   plan.j != 0 && i + 1 == partition.parts.size() ? Drop::greatest : Drop::least);
  plan.multiset_size = all.size();
  // Repeats can only come from the overlapping last part.
  std::set<KSubset> seen;
  for (const KSubset& s : all)
    if (seen.insert(s).second) plan.members.push_back(s);
  plan.partition = std::move(partition);
  const std::uint64_t parts = static_cast<std::uint64_t>((n + part - 1) / part);
  plan.predicted_size = parts * (binomial(part, k) - 1);
  return plan;
}

ConstructionPlan kneser_diam3(int n, int k) {
  const int lo = 5 * k / 2;
  const int hi = 3 * k - 2;
  check_range(k >= 4 && lo <= n && n <= hi,
              "kneser-diam3 needs floor(5k/2) <= n <= 3k-2; for k = " + str(k) +
                  (lo <= hi ? " that is " + str(lo) + " <= n <= " + str(hi) : std::string(" no n qualifies")));
  ConstructionPlan plan;
  plan.method = Method::kneser_diam3;
  plan.family = Family::kneser;
  plan.n = n;
  plan.k = k;
  plan.formula = "2·C(n-k,k)";
  GroundSetPartition partition{n, {range(1, n - k), range(k + 1, n)}, true};
  for (const auto& p : partition.parts) {
    auto subsets = k_subsets_of(n, p, k);
    plan.members.insert(plan.members.end(), subsets.begin(), subsets.end());
  }
  plan.partition = std::move(partition);
  plan.predicted_size = 2 * binomial(n - k, k);
  plan.multiset_size = plan.members.size();
  return plan;
}

ConstructionPlan matrix_basic(int n, int k) {
  check_range(k >= 2, "matrix-basic needs k >= 2");
  check_range(n >= k + 2, "matrix-basic needs n >= k+2 (n = " + str(n) + ", k = " + str(k) + ")");
  check_range(n <= kMaxGroundSet, "n above " + str(kMaxGroundSet));
  ConstructionPlan plan;
  plan.method = Method::matrix_basic;
  plan.family = Family::johnson;
  plan.n = n;
  plan.k = k;
  plan.formula = "n";
  const std::vector<int> head = range(1, k + 1);
  for (int i = 1; i <= k + 1; ++i) {
    std::vector<int> s;
    for (int x : head)
      if (x != i) s.push_back(x);
    plan.members.push_back(KSubset::from_elements(n, s));
  }
  std::vector<int> base = range(1, k - 1);
  for (int x = k + 2; x <= n; ++x) {
    base.push_back(x);
    plan.members.push_back(KSubset::from_elements(n, base));
    base.pop_back();
  }
  plan.predicted_size = static_cast<std::uint64_t>(n);
  plan.multiset_size = plan.members.size();
  return plan;
}

int toroidal_threshold(int k) noexcept {
  switch (k) {
    case 4: return 10;
    case 5: return 13;
    case 6: return 16;
    default: return 0;
  }
}

ConstructionPlan toroidal_paths(int a, int b, int k) {
  const int t = toroidal_threshold(k);
  if (t == 0)
    throw ParameterError("toroidal paths are available for k = 4, 5, 6 only; straight paths fail to resolve for k >= 7");
  check_range(a >= t && b >= t, "toroidal paths with k = " + str(k) + " need a, b >= " + str(t) + " (got a = " +
                                    str(a) + ", b = " + str(b) + ")");
  const int n = a * b;
  check_range(n <= kMaxGroundSet, "grid " + str(a) + "x" + str(b) + " has more than " + str(kMaxGroundSet) + " cells");
  ConstructionPlan plan;
  plan.method = Method::toroidal;
  plan.family = Family::kneser;
  plan.n = n;
  plan.k = k;
  plan.a = a;
  plan.b = b;
  plan.formula = "2n";
  std::vector<int> path(k);
  for (int row = 1; row <= a; ++row)
    for (int col = 1; col <= b; ++col) {
      for (int s = 0; s < k; ++s) path[s] = toroidal_element(b, row, (col - 1 + s) % b + 1);
      plan.members.push_back(KSubset::from_elements(n, path));
    }
  for (int row = 1; row <= a; ++row)
    for (int col = 1; col <= b; ++col) {
      for (int s = 0; s < k; ++s) path[s] = toroidal_element(b, (row - 1 + s) % a + 1, col);
      plan.members.push_back(KSubset::from_elements(n, path));
    }
  plan.predicted_size = 2 * static_cast<std::uint64_t>(n);
  plan.multiset_size = plan.members.size();
  return plan;
}

ConstructionPlan construct(const MethodSpec& spec, int n, int k) {
  switch (spec.method) {
    case Method::johnson_partition: return johnson_partition(n, k);
    case Method::kneser_partition: return kneser_partition(n, k);
    case Method::kneser_diam3: return kneser_diam3(n, k);
    case Method::matrix_basic: return matrix_basic(n, k);
    case Method::toroidal: return toroidal_paths(spec.a, spec.b, k);
  }
  throw ParameterError("unknown method");
}

}  // namespace metdim
