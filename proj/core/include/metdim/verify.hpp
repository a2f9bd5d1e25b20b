#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metdim/graphs.hpp"
#include "metdim/subsets.hpp"

namespace metdim {

enum class Oracle { formula, bfs };

std::string_view to_string(Oracle o) noexcept;
Oracle parse_oracle(std::string_view text);

/// Default vertex budget for formula-oracle verification.
inline constexpr std::uint64_t kDefaultVerifyBudget = std::uint64_t{1} << 23;

struct VerifyOptions {
  Oracle oracle = Oracle::formula;
  std::uint64_t budget = kDefaultVerifyBudget;
  std::uint64_t bfs_limit = kDefaultBfsLimit;
  /// Worker threads for signature computation; 0 means hardware concurrency.
  unsigned workers = 1;
};

struct VerificationReport {
  Family family = Family::johnson;
  int n = 0;
  int k = 0;
  bool resolved = false;
  /// Two distinct vertices with identical signatures, present iff !resolved.
  std::optional<std::pair<KSubset, KSubset>> witness;
  std::size_t landmarks_used = 0;
  std::uint64_t vertices_checked = 0;
  Oracle oracle = Oracle::formula;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Distance vector of v to the landmarks, in landmark order.
std::vector<int> signature(const GraphInstance& g, const KSubset& v, std::span<const KSubset> landmarks);

/// Decides whether `landmarks` resolves g by checking that the signature map
/// is injective on all C(n, k) vertices. On failure the witness is the
/// colliding pair (U, W), U < W in colex order, with the least U and then the
/// least W. The report does not depend on the worker count.
///
/// Throws ParameterError for a landmark that is not a vertex of g and
/// InstanceTooLarge when C(n, k) exceeds the budget (or the BFS limit when
/// the BFS oracle is selected).
VerificationReport verify_resolving(const GraphInstance& g, std::span<const KSubset> landmarks,
                                    const VerifyOptions& options = {});

/// Johnson-only check through disjoint difference sets: resolved iff for
/// every pair of disjoint non-empty U, W ⊂ [n] with |U| = |W| <= k some
/// landmark X has |X ∩ U| != |X ∩ W|. A failing (U, W) is padded with the
/// same smallest outside elements into two k-subsets, reported as witness.
VerificationReport verify_johnson_by_pairs(int n, int k, std::span<const KSubset> landmarks);

/// Returns false only when `landmarks` resolves K(n, k) but not J(n, k).
bool kneser_set_resolves_johnson(int n, int k, std::span<const KSubset> landmarks,
                                 const VerifyOptions& options = {});

/// Every landmark has equal distance to both witness vertices.
bool witness_is_genuine(const GraphInstance& g, std::span<const KSubset> landmarks,
                        const std::pair<KSubset, KSubset>& witness);

// Report serialisation.
std::string to_text(const VerificationReport& report);
/// Single-line JSON document.
std::string to_json(const VerificationReport& report);
/// Inverse of to_json. Throws ParseError on a malformed document.
VerificationReport report_from_json(std::string_view doc);

/// Candidate-set file: `# <family> <n> <k>` followed by one subset per line.
struct CandidateSet {
  Family family = Family::johnson;
  int n = 0;
  int k = 0;
  std::vector<KSubset> members;
};

/// Throws ParseError (with line number) on malformed input.
CandidateSet read_candidate_set(std::istream& in);
CandidateSet read_candidate_set_file(const std::string& path);
void write_candidate_set(std::ostream& out, const CandidateSet& set);

}  // namespace metdim
