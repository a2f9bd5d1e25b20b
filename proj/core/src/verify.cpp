#include "metdim/verify.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "metdim/error.hpp"

namespace metdim {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) noexcept {
  h += x + 0x9E3779B97F4A7C15ULL;
  h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ULL;
  h = (h ^ (h >> 27)) * 0x94D049BB133111EBULL;
  return h ^ (h >> 31);
}

/// Distance of vertex `v` (colex rank `rank`) to landmark `i`, behind either
/// the closed forms or precomputed BFS layers.
class DistanceSource {
 public:
  DistanceSource(const GraphInstance& g, std::span<const KSubset> landmarks, const VerifyOptions& options)
      : landmarks_(landmarks), table_(g.distance_table()) {
    if (options.oracle == Oracle::bfs) {
      const std::uint64_t count = g.vertex_count();
      if (count > options.bfs_limit)
        throw InstanceTooLarge(g.name() + " has " + std::to_string(count) + " vertices, BFS oracle limit is " +
                               std::to_string(options.bfs_limit));
      layers_.reserve(landmarks.size());
      for (const KSubset& x : landmarks) layers_.push_back(bfs_distances_from(g, x, options.bfs_limit));
    }
  }

  bool uses_bfs() const noexcept { return !layers_.empty(); }

  int operator()(std::size_t i, std::uint64_t rank, const KSubset& v) const noexcept {
    if (!layers_.empty()) return layers_[i][rank];
    if (v == landmarks_[i]) return 0;
    return table_[intersection_size_unchecked(v, landmarks_[i])];
  }

 private:
  std::span<const KSubset> landmarks_;
  const std::vector<std::uint8_t>& table_;
  std::vector<std::vector<std::uint8_t>> layers_;
};

struct Keyed {
  std::uint64_t hash;
  std::uint32_t rank;
};

/// Hash of a coarse code per landmark. For diameter-2 Kneser graphs the code
/// is the single bit "disjoint from the landmark", which loses only the
/// 0-versus-2 distinction at the landmark itself; collisions are refined with
/// exact signatures afterwards, so any coarsening is safe.
std::uint64_t coarse_hash(std::span<const KSubset> landmarks, const DistanceSource& dist,
                          std::uint64_t rank, const KSubset& v, bool one_bit, int width) {
  std::uint64_t h = 0x243F6A8885A308D3ULL;
  std::uint64_t acc = 0;
  int used = 0;
  for (std::size_t i = 0; i < landmarks.size(); ++i) {
    std::uint64_t code;
    if (one_bit && !dist.uses_bfs()) {
      code = disjoint_unchecked(v, landmarks[i]) ? 1 : 0;
    } else {
      code = static_cast<std::uint64_t>(dist(i, rank, v));
    }
    acc |= code << used;
    used += width;
    if (used + width > 64) {
      h = mix(h, acc);
      acc = 0;
      used = 0;
    }
  }
  return mix(h, acc);
}

unsigned resolve_workers(unsigned requested) {
  if (requested == 0) requested = std::max(1U, std::thread::hardware_concurrency());
  return requested;
}

}  // namespace

std::string_view to_string(Oracle o) noexcept { return o == Oracle::formula ? "formula" : "bfs"; }

Oracle parse_oracle(std::string_view text) {
  if (text == "formula") return Oracle::formula;
  if (text == "bfs") return Oracle::bfs;
  throw ParameterError("unknown oracle '" + std::string(text) + "' (expected formula or bfs)");
}

std::vector<int> signature(const GraphInstance& g, const KSubset& v, std::span<const KSubset> landmarks) {
  g.check_vertex(v);
  std::vector<int> sig;
  sig.reserve(landmarks.size());
  for (const KSubset& x : landmarks) sig.push_back(distance(g, v, x));
  return sig;
}

VerificationReport verify_resolving(const GraphInstance& g, std::span<const KSubset> landmarks,
                                    const VerifyOptions& options) {
  for (const KSubset& x : landmarks) g.check_vertex(x);
  const std::uint64_t count = g.vertex_count();
  if (count > options.budget || count > std::numeric_limits<std::uint32_t>::max())
    throw InstanceTooLarge(g.name() + " has " + std::to_string(count) + " vertices, verification budget is " +
                           std::to_string(options.budget));

  const DistanceSource dist(g, landmarks, options);
  const bool one_bit = g.family() == Family::kneser && g.diameter() == 2;
  const int width = one_bit && !dist.uses_bfs() ? 1 : std::bit_width(static_cast<unsigned>(g.diameter()));

  std::vector<Keyed> keyed(count);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(options.workers), count));
  const std::uint64_t chunk = (count + workers - 1) / workers;
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (ColexCursor c(g.n(), g.k(), begin); !c.done() && c.rank() < end; c.next()) {
      keyed[c.rank()] = {coarse_hash(landmarks, dist, c.rank(), c.current(), one_bit, width),
                         static_cast<std::uint32_t>(c.rank())};
    }
  };
  if (workers <= 1) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const Keyed& a, const Keyed& b) { return a.hash != b.hash ? a.hash < b.hash : a.rank < b.rank; });

  // Least (first, second) rank pair over all exact signature classes.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
  std::vector<std::pair<std::vector<std::uint8_t>, std::uint32_t>> group;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i + 1;
    while (j < keyed.size() && keyed[j].hash == keyed[i].hash) ++j;
    if (j - i >= 2) {
      group.clear();
      for (std::size_t m = i; m < j; ++m) {
        const KSubset v = unrank_colex(g.n(), g.k(), keyed[m].rank);
        std::vector<std::uint8_t> sig(landmarks.size());
        for (std::size_t l = 0; l < landmarks.size(); ++l) sig[l] = static_cast<std::uint8_t>(dist(l, keyed[m].rank, v));
        group.emplace_back(std::move(sig), keyed[m].rank);
      }
      std::stable_sort(group.begin(), group.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t a = 0; a < group.size();) {
        std::size_t b = a + 1;
        while (b < group.size() && group[b].first == group[a].first) ++b;
        if (b - a >= 2) {
          std::uint32_t lo = group[a].second;
          std::uint32_t second = group[a + 1].second;
          // Ranks within a run are ascending (stable sort over rank-sorted input).
          const std::pair<std::uint32_t, std::uint32_t> cand{lo, second};
          if (!best || cand < *best) best = cand;
        }
        a = b;
      }
    }
    i = j;
  }

  VerificationReport report;
  report.family = g.family();
  report.n = g.n();
  report.k = g.k();
  report.resolved = !best.has_value();
  report.landmarks_used = landmarks.size();
  report.vertices_checked = count;
  report.oracle = options.oracle;
  if (best) report.witness = {unrank_colex(g.n(), g.k(), best->first), unrank_colex(g.n(), g.k(), best->second)};
  return report;
}

VerificationReport verify_johnson_by_pairs(int n, int k, std::span<const KSubset> landmarks) {
  const GraphInstance g = GraphInstance::johnson(n, k);
  for (const KSubset& x : landmarks) g.check_vertex(x);

  VerificationReport report;
  report.family = Family::johnson;
  report.n = n;
  report.k = k;
  report.landmarks_used = landmarks.size();
  report.vertices_checked = g.vertex_count();
  report.oracle = Oracle::formula;

  std::vector<int> rest;
  for (int m = 1; m <= k; ++m) {
    for (ColexCursor cu(n, m); !cu.done(); cu.next()) {
      const KSubset& u = cu.current();
      const int u_min = u.elements().front();
      rest.clear();
      for (int e = u_min + 1; e <= n; ++e)
        if (!u.contains(e)) rest.push_back(e);
      for (const KSubset& w : k_subsets_of(n, rest, m)) {
        const bool split = std::any_of(landmarks.begin(), landmarks.end(), [&](const KSubset& x) {
          return intersection_size_unchecked(x, u) != intersection_size_unchecked(x, w);
        });
        if (split) continue;
        // Pad both sides with the same k - m smallest outside elements.
        KSubset a = u;
        KSubset b = w;
        for (int e = 1, need = k - m; e <= n && need > 0; ++e) {
          if (!u.contains(e) && !w.contains(e)) {
            a = a.with(e);
            b = b.with(e);
            --need;
          }
        }
        report.resolved = false;
        report.witness = a < b ? std::pair{a, b} : std::pair{b, a};
        return report;
      }
    }
  }
  report.resolved = true;
  return report;
}

bool kneser_set_resolves_johnson(int n, int k, std::span<const KSubset> landmarks, const VerifyOptions& options) {
  const bool kneser = verify_resolving(GraphInstance::kneser(n, k), landmarks, options).resolved;
  if (!kneser) return true;
  return verify_resolving(GraphInstance::johnson(n, k), landmarks, options).resolved;
}

bool witness_is_genuine(const GraphInstance& g, std::span<const KSubset> landmarks,
                        const std::pair<KSubset, KSubset>& witness) {
  if (witness.first == witness.second) return false;
  for (const KSubset& x : landmarks)
    if (distance(g, witness.first, x) != distance(g, witness.second, x)) return false;
  return true;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "instance=" << (r.family == Family::johnson ? "J(" : "K(") << r.n << ',' << r.k << ")\n";
  out << "family=" << to_string(r.family) << '\n';
  out << "n=" << r.n << '\n';
  out << "k=" << r.k << '\n';
  out << "resolved=" << (r.resolved ? "true" : "false") << '\n';
  out << "landmarks=" << r.landmarks_used << '\n';
  out << "vertices_checked=" << r.vertices_checked << '\n';
  out << "oracle=" << to_string(r.oracle) << '\n';
  if (r.witness) {
    out << "witness_u=" << r.witness->first.to_string() << '\n';
    out << "witness_w=" << r.witness->second.to_string() << '\n';
  }
  return out.str();
}

std::string to_json(const VerificationReport& r) {
  nlohmann::json doc;
  doc["family"] = std::string(to_string(r.family));
  doc["n"] = r.n;
  doc["k"] = r.k;
  doc["resolved"] = r.resolved;
  doc["landmarks_used"] = r.landmarks_used;
  doc["vertices_checked"] = r.vertices_checked;
  doc["oracle"] = std::string(to_string(r.oracle));
  if (r.witness) {
    doc["witness"] = {r.witness->first.elements(), r.witness->second.elements()};
  } else {
    doc["witness"] = nullptr;
  }
  return doc.dump();
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    VerificationReport r;
    r.family = parse_family(doc.at("family").get<std::string>());
    r.n = doc.at("n").get<int>();
    r.k = doc.at("k").get<int>();
    r.resolved = doc.at("resolved").get<bool>();
    r.landmarks_used = doc.at("landmarks_used").get<std::size_t>();
    r.vertices_checked = doc.at("vertices_checked").get<std::uint64_t>();
    r.oracle = parse_oracle(doc.at("oracle").get<std::string>());
    const auto& w = doc.at("witness");
    if (!w.is_null()) {
      const auto u = w.at(0).get<std::vector<int>>();
      const auto v = w.at(1).get<std::vector<int>>();
      r.witness = {KSubset::from_elements(r.n, u), KSubset::from_elements(r.n, v)};
    }
    if (r.resolved == r.witness.has_value()) throw ParseError("resolved flag contradicts witness", 0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

CandidateSet read_candidate_set(std::istream& in) {
  CandidateSet set;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      std::istringstream head(line);
      std::string hash, family;
      if (!(head >> hash >> family >> set.n >> set.k) || hash != "#")
        throw ParseError("expected header '# <family> <n> <k>'", line_no);
      try {
        set.family = parse_family(family);
      } catch (const ParameterError& e) {
        throw ParseError(e.what(), line_no);
      }
      if (set.n < 1 || set.n > kMaxGroundSet || set.k < 0 || set.k > set.n)
        throw ParseError("header parameters out of range", line_no);
      have_header = true;
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.front() == '#') continue;
    KSubset s;
    try {
      s = KSubset::parse(set.n, line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (s.k() != set.k)
      throw ParseError("subset has " + std::to_string(s.k()) + " elements, expected " + std::to_string(set.k), line_no);
    set.members.push_back(s);
  }
  if (!have_header) throw ParseError("empty candidate file", line_no + 1);
  return set;
}

CandidateSet read_candidate_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_candidate_set(in);
}

void write_candidate_set(std::ostream& out, const CandidateSet& set) {
  out << "# " << to_string(set.family) << ' ' << set.n << ' ' << set.k << '\n';
  for (const KSubset& s : set.members) out << s.to_string() << '\n';
}

}  // namespace metdim
