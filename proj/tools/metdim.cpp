// metdim: build, check and bound resolving sets of Johnson and Kneser graphs.
//
// Exit codes: 0 success / resolved, 1 not resolved, 2 usage or input error,
// 3 solver timeout.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "metdim/bounds.hpp"
#include "metdim/constructions.hpp"
#include "metdim/designs.hpp"
#include "metdim/error.hpp"
#include "metdim/verify.hpp"

namespace {

using namespace metdim;

constexpr int kExitResolved = 0;
constexpr int kExitNotResolved = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

/// Writes `body` to `path`, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'", 0);
  out << body;
}

/// Summary lines go to stdout, unless stdout carries the payload.
std::ostream& summary_stream(const std::string& output) { return output.empty() ? std::cerr : std::cout; }

struct ConstructArgs {
  std::string family;
  int n = 0;
  int k = 0;
  std::string method;
  std::string output;
};

int cmd_construct(const ConstructArgs& args) {
  const MethodSpec spec = parse_method(args.method);
  const ConstructionPlan plan = construct(spec, args.n, args.k);
  if (spec.method == Method::toroidal && args.n != 0 && args.n != plan.n)
    throw ParameterError("toroidal:" + std::to_string(spec.a) + "," + std::to_string(spec.b) + " lives on n = " +
                         std::to_string(plan.n) + ", not " + std::to_string(args.n));
  const Family family = args.family.empty() ? plan.family : parse_family(args.family);
  if (family == Family::kneser && plan.family == Family::johnson)
    throw ParameterError(std::string(to_string(spec.method)) + " is a Johnson-graph construction");
  // Validates n against the family.
  const GraphInstance g = GraphInstance::make(family, plan.n, plan.k);

  std::ostringstream file;
  write_candidate_set(file, {family, plan.n, plan.k, plan.members});
  emit(args.output, file.str());

  auto& out = summary_stream(args.output);
  out << "method " << to_string(plan.method) << '\n'
      << "instance " << g.name() << '\n'
      << "predicted_size " << plan.predicted_size << " = " << plan.formula << '\n'
      << "emitted " << plan.members.size() << '\n';
  if (plan.multiset_size != plan.members.size())
    out << "with_multiplicity " << plan.multiset_size << " (the overlapping part repeats "
        << plan.multiset_size - plan.members.size() << " subsets)\n";
  if (family != plan.family) out << "note sets built for K(n,k); they also resolve J(n,k)\n";
  return kExitResolved;
}

struct DesignArgs {
  std::string kind;
  std::string load;
  std::string output;
  std::string as_candidate;
};

IncidenceStructure build_design(const std::string& kind) {
  const auto colon = kind.find(':');
  if (colon == std::string::npos) throw ParameterError("design kind must look like pg:q, ag:q, hadamard:m or sts:n");
  const std::string name = kind.substr(0, colon);
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(kind.substr(colon + 1), &used);
    if (used != kind.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParameterError("bad parameter in design kind '" + kind + "'");
  }
  if (name == "pg") return projective_plane(value);
  if (name == "ag") return affine_plane(value);
  if (name == "hadamard") return hadamard_design(value);
  if (name == "sts") return steiner_triple_system(value);
  throw ParameterError("unknown design kind '" + name + "'");
}

/// Reports what the structure is and which graphs its blocks resolve.
std::vector<std::string> describe(const IncidenceStructure& ic) {
  std::vector<std::string> lines;
  const int n = ic.n_points;
  const int b = static_cast<int>(ic.blocks.size());
  lines.push_back("points " + std::to_string(n));
  lines.push_back("blocks " + std::to_string(b));
  const auto k = ic.uniform_block_size();
  if (!k) {
    lines.push_back("block_size mixed");
    return lines;
  }
  lines.push_back("block_size " + std::to_string(*k));

  // 2-(n, k, λ) design?
  const std::uint64_t pairs_per_block = binomial(*k, 2);
  const std::uint64_t pairs = binomial(n, 2);
  if (*k >= 2 && pairs > 0 && (b * pairs_per_block) % pairs == 0) {
    const int lambda = static_cast<int>(b * pairs_per_block / pairs);
    const DesignCheck check = validate_t_design(ic, 2, lambda);
    if (check.valid) {
      lines.push_back("design 2-(" + std::to_string(n) + "," + std::to_string(*k) + "," + std::to_string(lambda) + ")" +
                      (check.params.symmetric ? " symmetric" : ""));
      if (check.params.symmetric && n >= 2 * *k) {
        std::string t = "resolves J(" + std::to_string(n) + "," + std::to_string(*k) + ")";
        if (n == 2 * *k + 1) t += " and K(" + std::to_string(n) + "," + std::to_string(*k) + ")";
        lines.push_back(t + " [symmetric design]");
      }
    }
  }
  // Steiner system S(k-1, k, n)?
  if (*k >= 3) {
    const DesignCheck check = validate_t_design(ic, *k - 1, 1);
    if (check.valid) {
      std::string t = "steiner S(" + std::to_string(*k - 1) + "," + std::to_string(*k) + "," + std::to_string(n) + ")";
      if (n >= 4 * *k - 2) {
        t += "; resolves K(" + std::to_string(n) + "," + std::to_string(*k) + ")";
      } else {
        t += "; n < 4k-2, no Kneser claim";
      }
      lines.push_back(t);
    }
  }
  // Partial geometry? Read s, t and α off the structure, then validate.
  std::vector<int> degree(n + 1, 0);
  for (const auto& blk : ic.blocks)
    for (int p : blk.elements()) ++degree[p];
  const int s = *k - 1;
  const int t = degree[1] - 1;
  int alpha = -1;
  const auto& first = ic.blocks.front();
  for (int p = 1; p <= n && alpha < 0; ++p) {
    if (first.contains(p)) continue;
    alpha = 0;
    for (const auto& blk : ic.blocks)
      if (blk.contains(p) && intersection_size(blk, first) == 1) ++alpha;
  }
  if (alpha > 0 && t >= 0) {
    const GeometryCheck g = validate_partial_geometry(ic, s, t, alpha);
    if (g.valid) {
      std::string line = "partial_geometry pg(" + std::to_string(s) + "," + std::to_string(t) + "," +
                         std::to_string(alpha) + ")";
      if (t > s && n > 2 * (s + 1)) {
        line += "; resolves K(" + std::to_string(n) + "," + std::to_string(s + 1) + ")";
      } else if (t <= s) {
        line += "; t <= s, no Kneser claim";
      }
      lines.push_back(line);
    }
  }
  return lines;
}

int cmd_design(const DesignArgs& args) {
  if (args.kind.empty() == args.load.empty()) throw ParameterError("give exactly one of --kind or --load");
  std::vector<int> duplicates;
  const IncidenceStructure ic = args.kind.empty() ? load_incidence_structure_file(args.load, &duplicates)
                                                  : build_design(args.kind);
  const auto lines = describe(ic);

  std::ostringstream file;
  if (args.as_candidate.empty()) {
    save_incidence_structure(file, ic);
  } else {
    const auto k = ic.uniform_block_size();
    if (!k) throw ParameterError("blocks of mixed size cannot form a candidate set");
    const Family family = parse_family(args.as_candidate);
    const GraphInstance g = GraphInstance::make(family, ic.n_points, *k);
    write_candidate_set(file, {family, g.n(), g.k(), ic.blocks});
  }
  emit(args.output, file.str());

  auto& out = summary_stream(args.output);
  for (const auto& l : lines) out << l << '\n';
  for (int line : duplicates) out << "duplicate_block line " << line << '\n';
  return kExitResolved;
}

struct VerifyArgs {
  std::string input;
  std::string oracle = "formula";
  unsigned workers = 1;
  std::uint64_t budget = kDefaultVerifyBudget;
  bool json = false;
  std::string report;
};

int cmd_verify(const VerifyArgs& args) {
  const CandidateSet set = read_candidate_set_file(args.input);
  const GraphInstance g = GraphInstance::make(set.family, set.n, set.k);
  VerifyOptions options;
  options.oracle = parse_oracle(args.oracle);
  options.workers = args.workers;
  options.budget = args.budget;
  const VerificationReport report = verify_resolving(g, set.members, options);
  const std::string body = args.json ? to_json(report) + "\n" : to_text(report);
  std::cout << body;
  if (!args.report.empty()) emit(args.report, body);
  return report.resolved ? kExitResolved : kExitNotResolved;
}

struct InstanceArgs {
  std::string family;
  int n = 0;
  int k = 0;
  double timeout = 60.0;
  std::uint64_t limit = kDefaultSolverVertexLimit;
  bool json = false;
};

int cmd_exact(const InstanceArgs& args) {
  const GraphInstance g = GraphInstance::make(parse_family(args.family), args.n, args.k);
  SolveLimits limits;
  limits.vertex_limit = args.limit;
  limits.timeout = std::chrono::milliseconds(static_cast<long long>(args.timeout * 1000));
  const SolveResult r = exact_metric_dimension(g, limits);
  std::cout << (args.json ? to_json(g, r) + "\n" : to_text(g, r));
  return r.proof == Proof::exhaustive ? kExitResolved : kExitTimeout;
}

int cmd_bounds(const InstanceArgs& args) {
  const auto rows = bound_table(parse_family(args.family), args.n, args.k);
  std::cout << (args.json ? to_json(rows) + "\n" : to_text(rows));
  return kExitResolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolving sets and metric dimension of Johnson and Kneser graphs"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a candidate resolving set");
  construct->add_option("--family", construct_args.family, "johnson or kneser (default: the method's own)");
  construct->add_option("--n", construct_args.n, "Ground set size (implied by toroidal:a,b)");
  construct->add_option("--k", construct_args.k, "Subset size")->required();
  construct->add_option("--method", construct_args.method,
                        "johnson-partition, kneser-partition, kneser-diam3, matrix-basic or toroidal:a,b")
      ->required();
  construct->add_option("--output,-o", construct_args.output, "Candidate-set file (default stdout)");

  DesignArgs design_args;
  auto* design = app.add_subcommand("design", "Generate or load a design / geometry");
  design->add_option("--kind", design_args.kind, "pg:q, ag:q, hadamard:m or sts:n");
  design->add_option("--load", design_args.load, "Incidence-structure file to load and check");
  design->add_option("--output,-o", design_args.output, "Output file (default stdout)");
  design->add_option("--as-candidate", design_args.as_candidate,
                     "Write the blocks as a candidate set for this family instead");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check whether a candidate set resolves its graph");
  verify->add_option("--input,-i", verify_args.input, "Candidate-set file")->required();
  verify->add_option("--oracle", verify_args.oracle, "formula or bfs");
  verify->add_option("--workers", verify_args.workers, "Threads (0 = all cores)");
  verify->add_option("--budget", verify_args.budget, "Maximum number of vertices");
  verify->add_flag("--json", verify_args.json, "Print the report as JSON");
  verify->add_option("--report", verify_args.report, "Also write the report to this file");

  InstanceArgs exact_args;
  auto* exact = app.add_subcommand("exact", "Compute the metric dimension exactly");
  exact->add_option("--family", exact_args.family, "johnson or kneser")->required();
  exact->add_option("--n", exact_args.n)->required();
  exact->add_option("--k", exact_args.k)->required();
  exact->add_option("--timeout", exact_args.timeout, "Seconds");
  exact->add_option("--limit", exact_args.limit, "Maximum number of vertices");
  exact->add_flag("--json", exact_args.json);

  InstanceArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Tabulate known bounds");
  bounds->add_option("--family", bounds_args.family, "johnson or kneser")->required();
  bounds->add_option("--n", bounds_args.n)->required();
  bounds->add_option("--k", bounds_args.k)->required();
  bounds->add_flag("--json", bounds_args.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_args);
    if (design->parsed()) return cmd_design(design_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (exact->parsed()) return cmd_exact(exact_args);
    if (bounds->parsed()) return cmd_bounds(bounds_args);
  } catch (const metdim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
