// tpdilog: generation, verification campaigns and transformations.
//
// Exit status: 0 success, 1 an identity failed, 2 usage or input error.

#include "tpdilog/involutions.hpp"
#include "tpdilog/json_io.hpp"
#include "tpdilog/s3action.hpp"
#include "tpdilog/suites.hpp"
#include "tpdilog/tetra.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace tpdilog;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int n = 4;
  int trials = 1;
  std::uint64_t seed = 0;
  int precision_bits = BigFloat::kDefaultPrecision;
  std::string tol;
  int coord_max = 10;
  std::string suite = "all";
  std::string out;
  bool sabotage = false;
};

struct TransformConfig {
  std::string op;
  std::string in;
  std::string out;
  std::string triple;
  std::string word;
};

struct AssertConfig {
  std::string relation;
  std::string in;
  std::string against;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

Triple parse_triple(const std::string& text) {
  Triple t;
  char c1 = 0, c2 = 0;
  std::istringstream ss(text);
  if (!(ss >> t.a >> c1 >> t.b >> c2 >> t.c) || c1 != ',' || c2 != ',' || !ss.eof())
    throw std::invalid_argument("--triple expects a,b,c");
  return t;
}

/// Unwraps gen output ({"coords":…, "matrix":…}) to the requested part.
Json unwrap(const Json& j, bool prefer_matrix) {
  if (j.is_object() && j.contains("coords") && j.contains("matrix")) return prefer_matrix ? j["matrix"] : j["coords"];
  return j;
}

int cmd_gen(const RunConfig& c) {
  Rng rng(c.seed);
  const Coords x = random_coords(c.n, c.coord_max, rng);
  write_output(c.out, dump_canonical(Json{{"coords", to_json(x)}, {"matrix", to_json(jacobi_to_matrix(x))}}));
  return kExitPass;
}

int cmd_verify(const RunConfig& c) {
  TrialConfig t;
  t.n = c.n;
  t.trials = c.trials;
  t.seed = c.seed;
  t.coord_max = c.coord_max;
  t.options.precision_bits = c.precision_bits;
  t.options.sabotage = c.sabotage;
  if (!c.tol.empty()) t.options.tolerance = BigFloat::parse(c.tol, 64);
  const IdentityReport report = run_suite(parse_suite(c.suite), t);
  write_output(c.out, dump_canonical(to_json(report)));
  std::fprintf(stderr, "suite %s: n=%d trials=%d elapsed %.3f s: %s\n", c.suite.c_str(), c.n, c.trials,
               report.elapsed_seconds, report.all_pass() ? "pass" : "FAIL");
  return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_transform(const TransformConfig& c) {
  const Json input = parse_json(read_input(c.in));
  const std::string& op = c.op;

  if (op == "check-g" || op == "hat-g") {
    const RMatrix g = matrix_from_json(unwrap(input, true));
    write_output(c.out, dump_canonical(to_json(op == "check-g" ? check_g(g) : hat_g(g))));
    return kExitPass;
  }
  if (op == "bfz") {
    const RMatrix z = matrix_from_json(unwrap(input, true));
    require_totally_positive(z, "bfz");
    write_output(c.out, dump_canonical(to_json(bfz_twist(z))));
    return kExitPass;
  }

  // Remaining operations act on N⁺ₙ; the output format follows the input.
  const Json body = unwrap(input, false);
  const bool as_matrix = is_matrix_json(body);
  Coords x = as_matrix ? [&] {
    const RMatrix m = matrix_from_json(body);
    require_totally_positive(m, op.c_str());
    return matrix_to_jacobi(m);
  }()
                       : coords_from_json(body);

  if (op == "prime") x = jacobi_prime(x);
  else if (op == "dprime") x = jacobi_dprime(x);
  else if (op == "bar") x = bar(x);
  else if (op == "l") x = l_transform(x, parse_triple(c.triple));
  else if (op == "r") x = r_transform(x, parse_triple(c.triple));
  else if (op == "s3") x = s3_apply(x, parse_word(c.word));
  else if (op == "to-coords") {
    write_output(c.out, dump_canonical(to_json(x)));
    return kExitPass;
  } else if (op == "to-matrix") {
    write_output(c.out, dump_canonical(to_json(jacobi_to_matrix(x))));
    return kExitPass;
  } else {
    throw std::invalid_argument("unknown operation \"" + op + "\"");
  }
  write_output(c.out, dump_canonical(as_matrix ? to_json(jacobi_to_matrix(x)) : to_json(x)));
  return kExitPass;
}

int cmd_assert(const AssertConfig& c) {
  const RMatrix g = matrix_from_json(unwrap(parse_json(read_input(c.in)), true));
  const RMatrix h = matrix_from_json(unwrap(parse_json(read_input(c.against)), true));
  if (g.rows() != h.rows()) throw std::invalid_argument("matrices differ in size");
  const int n = static_cast<int>(g.rows());
  const bool right = c.relation == "check-g";
  if (!right && c.relation != "hat-g") throw std::invalid_argument("unknown relation \"" + c.relation + "\"");
  int failures = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const IndexSet set = IndexSet::from_mask(mask);
    const Rational lhs = right ? flag_minor_right(h, set) : flag_minor_upper(h, set);
    const Rational rhs = right ? flag_minor_right(g, set.reflected(n)) : flag_minor_upper(g, set.reflected(n));
    if (lhs != rhs) {
      ++failures;
      std::fprintf(stderr, "minor %s: %s != %s\n", set.to_string().c_str(), to_canonical_string(lhs).c_str(),
                   to_canonical_string(rhs).c_str());
    }
  }
  std::fprintf(stderr, "%s: %d of %d flag minors relabel correctly\n", c.relation.c_str(),
               static_cast<int>((std::uint64_t{1} << n) - 1) - failures, static_cast<int>((std::uint64_t{1} << n) - 1));
  return failures == 0 ? kExitPass : kExitFail;
}

int cmd_report_merge(const std::vector<std::string>& inputs, const std::string& out) {
  IdentityReport merged;
  for (const auto& path : inputs) merged.merge(report_from_json(parse_json(read_input(path))));
  write_output(out, dump_canonical(to_json(merged)));
  return merged.all_pass() ? kExitPass : kExitFail;
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--n", c.n, "Matrix dimension")->check(CLI::Range(2, 64));
  app->add_option("--seed", c.seed, "Random seed");
  app->add_option("--coord-max", c.coord_max, "Coordinates are p/q with 1 <= p, q <= K")->check(CLI::Range(1, 1000000));
  app->add_option("--out", c.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Totally positive matrices and Rogers dilogarithm identities"};
  app.require_subcommand(1);

  RunConfig run;
  TransformConfig transform;
  AssertConfig assertion;
  std::vector<std::string> merge_inputs;
  std::string merge_out;

  auto* gen = app.add_subcommand("gen", "Random Jacobi coordinates and their matrix");
  add_common(gen, run);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, run);
  verify->add_option("--trials", run.trials, "Number of random trials")->check(CLI::Range(1, 1000000));
  verify->add_option("--precision-bits", run.precision_bits, "BigFloat precision")->check(CLI::Range(53, 100000));
  verify->add_option("--tol", run.tol, "Residual tolerance (default 2^(-precision/2))");
  verify->add_option("--suite", run.suite, "chain|s3|tetra|mrho|wedge|bversion|script-l|all");
  verify->add_flag("--sabotage", run.sabotage)->group("");

  auto* tr = app.add_subcommand("transform", "Apply a map to a matrix or coordinates");
  tr->add_option("op", transform.op, "prime|dprime|bar|l|r|s3|check-g|hat-g|bfz|to-coords|to-matrix")->required();
  tr->add_option("--in", transform.in, "Input JSON (default stdin)");
  tr->add_option("--out", transform.out, "Output file (default stdout)");
  tr->add_option("--triple", transform.triple, "a,b,c for l and r");
  tr->add_option("--word", transform.word, "S3 word for s3: id|s1|s2|s2s1|s1s2|s1s2s1|s2s1s2");

  auto* as = app.add_subcommand("assert", "Check the flag-minor relabeling of check-g or hat-g");
  as->add_option("relation", assertion.relation, "check-g|hat-g")->required();
  as->add_option("--in", assertion.in, "Original matrix G")->required();
  as->add_option("--against", assertion.against, "Transformed matrix")->required();

  auto* rm = app.add_subcommand("report-merge", "Merge verification reports");
  rm->add_option("reports", merge_inputs, "Report files")->required();
  rm->add_option("--out", merge_out, "Output file (default stdout)");

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
    if (gen->parsed()) return cmd_gen(run);
    if (verify->parsed()) return cmd_verify(run);
    if (tr->parsed()) return cmd_transform(transform);
    if (as->parsed()) return cmd_assert(assertion);
    if (rm->parsed()) return cmd_report_merge(merge_inputs, merge_out);
  } catch (const NotTotallyPositive& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
