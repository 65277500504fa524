#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fvs/check.hpp"
#include "fvs/generators.hpp"
#include "fvs/half.hpp"
#include "fvs/instance_io.hpp"
#include "fvs/kernel.hpp"
#include "fvs/oracle.hpp"

namespace {

// exit codes: 0 ok, 1 usage, 2 parse/io, 3 internal assertion
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

fvs::MultiGraph canonical_no_instance() {
  fvs::MultiGraph g;
  const auto a = g.add_vertex();
  const auto b = g.add_vertex();
  const auto c = g.add_vertex();
  g.add_edge(a, b);
  g.add_edge(b, c);
  g.add_edge(c, a);
  return g;
}

int run_kernelize(const std::string& input, int k, const std::string& output, bool stats) {
  const fvs::Instance inst = fvs::load_instance(input);
  const fvs::KernelOutcome out = fvs::kernelize(inst.graph, k);

  std::vector<std::string> comments;
  const bool reduced = out.verdict == fvs::KernelOutcome::Verdict::Reduced;
  comments.push_back("kprime " + std::to_string(reduced ? out.k_prime : 0));
  if (reduced)
    for (fvs::VertexId v : out.log.forced)
      comments.push_back("forced " + std::to_string(v + 1));
  comments.push_back("iterations " + std::to_string(out.stats.iterations));

  if (reduced) {
    fvs::save_instance(output, out.graph, comments);
  } else {
    // a genuine equivalent NO instance: a triangle with k' = 0
    fvs::save_instance(output, canonical_no_instance(), comments);
  }
  if (stats) {
    std::cout << "verdict " << (reduced ? "reduced" : "trivially-no") << "\n"
              << "kprime " << (reduced ? out.k_prime : 0) << "\n"
              << "iterations " << out.stats.iterations << "\n"
              << "covers_computed " << out.stats.covers_computed << "\n"
              << "s_removals " << out.stats.s_removals << "\n"
              << "reductions_applied " << out.stats.reductions_applied << "\n"
              << "forced " << out.log.forced.size() << "\n";
  }
  return kExitOk;
}

int run_cover(const std::string& input, int source_1based, int budget_k, bool has_budget) {
  const fvs::Instance inst = fvs::load_instance(input);
  const fvs::MultiGraph& g = inst.graph;
  fvs::require(source_1based >= 1 && source_1based <= inst.n,
               "--source must name a vertex of the instance");
  const fvs::VertexId s = source_1based - 1;
  const int budget_doubled = has_budget ? 2 * budget_k : g.degree(s);

  const fvs::CoverResult r = fvs::min_cycle_cover(g, s, budget_doubled);
  const fvs::ExplicitPacking certificate = fvs::explicit_packing(r.packing);
  FVS_CHECK(fvs::verify_packing(g, s, certificate), "certificate packing is infeasible");

  if (r.exceeds_budget) {
    std::cout << "EXCEEDS_BUDGET\n";
    std::cout << "packing " << fvs::fraction_str(r.packing.size_doubled()) << "\n";
    return kExitOk;
  }
  std::cout << "size " << fvs::fraction_str(r.cover->size_doubled) << "\n";
  for (fvs::VertexId v : g.vertices()) {
    const int d = r.cover->x_doubled[v];
    if (d > 0) std::cout << "x(" << v + 1 << ")=" << fvs::Half::from_doubled(d).str() << "\n";
  }
  std::cout << "packing " << fvs::fraction_str(r.packing.size_doubled()) << "\n";
  return kExitOk;
}

int run_solve_brute(const std::string& input) {
  const fvs::Instance inst = fvs::load_instance(input);
  const fvs::FvsResult r = fvs::brute_fvs(inst.graph);
  std::cout << "fvs " << r.size << "\n";
  std::cout << "witness";
  for (fvs::VertexId v : r.witness) std::cout << " " << v + 1;
  std::cout << "\n";
  return kExitOk;
}

int run_gen(const std::string& family, int n, long long m, int k, int petals, int petal_len,
            int rows, int cols, std::uint64_t seed, const std::string& output) {
  fvs::MultiGraph g;
  std::string params;
  if (family == "planted-fvs") {
    g = fvs::gen_planted_fvs(n, k, m, seed);
    params = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
  } else if (family == "random-multigraph") {
    g = fvs::gen_random_multigraph(n, m, seed);
    params = "n=" + std::to_string(n) + " m=" + std::to_string(m);
  } else if (family == "flower") {
    g = fvs::gen_flower(petals, petal_len);
    params = "petals=" + std::to_string(petals) + " petal-len=" + std::to_string(petal_len);
  } else if (family == "grid") {
    g = fvs::gen_grid(rows, cols);
    params = "rows=" + std::to_string(rows) + " cols=" + std::to_string(cols);
  } else {
    fvs::require(false, "unknown family '" + family + "'");
  }
  fvs::save_instance(output, g,
                     {"gen family=" + family + " " + params + " seed=" + std::to_string(seed)});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic-size kernelization for Feedback Vertex Set"};
  app.require_subcommand(1);

  auto* kern = app.add_subcommand("kernelize", "Reduce an instance to at most 2k'^2+k' vertices");
  std::string k_input, k_output;
  int k_param = 0;
  bool k_stats = false;
  kern->add_option("--input", k_input, "instance file")->required();
  kern->add_option("--k", k_param, "parameter k (>= 0)")->required()->check(CLI::NonNegativeNumber);
  kern->add_option("--output", k_output, "reduced instance file")->required();
  kern->add_flag("--stats", k_stats, "print kernelization statistics");

  auto* cover = app.add_subcommand("cover", "Compute a half-integral minimum s-cycle cover");
  std::string c_input;
  int c_source = 0, c_budget = 0;
  cover->add_option("--input", c_input, "instance file")->required();
  cover->add_option("--source", c_source, "source vertex (1-based)")->required();
  auto* budget_opt =
      cover->add_option("--budget", c_budget, "stop once the cover provably exceeds this size")
          ->check(CLI::NonNegativeNumber);

  auto* brute = app.add_subcommand("solve-brute", "Exact minimum feedback vertex set (n <= 16)");
  std::string b_input;
  brute->add_option("--input", b_input, "instance file")->required();

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  std::string g_family, g_output;
  int g_n = 0, g_k = 0, g_petals = 0, g_petal_len = 2, g_rows = 0, g_cols = 0;
  long long g_m = 0;
  std::uint64_t g_seed = 0;
  gen->add_option("--family", g_family, "planted-fvs | random-multigraph | flower | grid")
      ->required();
  gen->add_option("--output", g_output, "output file")->required();
  gen->add_option("--seed", g_seed, "random seed");
  gen->add_option("--n", g_n, "vertex count");
  gen->add_option("--m", g_m, "edge count");
  gen->add_option("--k", g_k, "planted feedback vertex set size");
  gen->add_option("--petals", g_petals, "flower petal count");
  gen->add_option("--petal-len", g_petal_len, "vertices per petal");
  gen->add_option("--rows", g_rows, "grid rows");
  gen->add_option("--cols", g_cols, "grid columns");

  try {
    app.parse(argc, argv);
    if (*kern) return run_kernelize(k_input, k_param, k_output, k_stats);
    if (*cover) return run_cover(c_input, c_source, c_budget, budget_opt->count() > 0);
    if (*brute) return run_solve_brute(b_input);
    if (*gen)
      return run_gen(g_family, g_n, g_m, g_k, g_petals, g_petal_len, g_rows, g_cols, g_seed,
                     g_output);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const fvs::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const fvs::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
