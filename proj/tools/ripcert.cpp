// ripcert: command-line front end for RIP certification, dense-subgraph
// certification, the Cholesky reduction and the Monte Carlo experiments.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ripcert/error.hpp"
#include "ripcert/experiments.hpp"
#include "ripcert/graphs.hpp"
#include "ripcert/io.hpp"
#include "ripcert/random.hpp"
#include "ripcert/reduction.hpp"
#include "ripcert/sensing.hpp"

namespace {

using nlohmann::json;
using namespace ripcert;

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::size_t samples = 0;
  std::uint64_t budget = kDefaultSubsetBudget;
  std::string out = "json";
  std::optional<double> tol;
  unsigned workers = 0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Base seed")->envname("RIPCERT_SEED");
  app->add_option("--stream", c.stream, "Seed stream index");
  app->add_option("--samples", c.samples, "Monte Carlo sample count");
  app->add_option("--budget", c.budget, "Subset enumeration budget");
  app->add_option("--out", c.out, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--tol", c.tol, "PSD tolerance for Cholesky steps (default 1e-10 * max|entry|)");
  app->add_option("--workers", c.workers, "Worker threads (0 = all cores)");
}

Seed seed_of(const Common& c) { return Seed{c.seed, c.stream}; }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void emit_matrix(const DenseMatrix& m, const std::string& path) {
  if (path.empty() || path == "-")
    io::write_matrix_csv(std::cout, m);
  else
    io::save_matrix(path, m);
}

SparseVector parse_sparse(const std::string& spec) {
  // "i:v,j:w" or "i,j,k" (uniform unit weights on the listed indices).
  SparseVector x;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      x.push_back({std::stoul(item), 1.0});
    else
      x.push_back({std::stoul(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
  }
  return x;
}

int report(const ExperimentReport& r, const Common& c) {
  if (c.out == "csv")
    std::cout << r.to_csv();
  else
    emit(r.to_json());
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIP and dense-subgraph certification toolkit"};
  app.require_subcommand(1);
  Common common;

  // gen ---------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate random objects");
  gen->require_subcommand(1);
  std::size_t gen_n = 0, gen_cols = 0;
  double gen_c = 0.3;
  std::string gen_path;
  auto* gen_graph = gen->add_subcommand("graph", "G(n,1/2) edge list");
  gen_graph->add_option("-n,--vertices", gen_n)->required();
  gen_graph->add_option("-o,--output", gen_path, "Output file (default stdout)");
  add_common(gen_graph, common);
  auto* gen_matrix = gen->add_subcommand("matrix", "Bernoulli ±1/√n sensing matrix");
  gen_matrix->add_option("-n,--rows", gen_n)->required();
  gen_matrix->add_option("-N,--cols", gen_cols)->required();
  gen_matrix->add_option("-o,--output", gen_path, "Output file (.ripm for binary, default stdout CSV)");
  add_common(gen_matrix, common);
  auto* gen_model_c_cmd = gen->add_subcommand("model-c", "Cholesky factor of Id + cA/√n");
  gen_model_c_cmd->add_option("-n,--dim", gen_n)->required();
  gen_model_c_cmd->add_option("-c", gen_c);
  gen_model_c_cmd->add_option("-o,--output", gen_path);
  add_common(gen_model_c_cmd, common);

  // rip ---------------------------------------------------------------------
  auto* rip = app.add_subcommand("rip", "RIP computations on a sensing matrix");
  rip->require_subcommand(1);
  std::string matrix_path, witness;
  std::size_t order = 2;
  double delta = 0.5;
  bool normalize = false;
  auto add_matrix = [&](CLI::App* cmd) {
    cmd->add_option("matrix", matrix_path, "Matrix file (CSV or RIPM1)")->required();
    cmd->add_flag("--normalize", normalize, "Scale columns to unit norm first");
    add_common(cmd, common);
  };
  auto* rip_exact = rip->add_subcommand("exact", "Exact δ_k by enumeration");
  add_matrix(rip_exact);
  rip_exact->add_option("-k,--order", order)->required();
  auto* rip_lazy = rip->add_subcommand("lazy", "Lazy certification from order m");
  add_matrix(rip_lazy);
  rip_lazy->add_option("-m,--order", order)->required();
  rip_lazy->add_option("-d,--delta", delta)->required();
  auto* rip_coh = rip->add_subcommand("coherence", "Coherence and coherence certificate");
  add_matrix(rip_coh);
  rip_coh->add_option("-d,--delta", delta);
  auto* rip_witness = rip->add_subcommand("witness", "Check a sparse RIP-violation witness");
  add_matrix(rip_witness);
  rip_witness->add_option("-x", witness, "Entries 'i:v,j:w' or indices 'i,j'")->required();
  rip_witness->add_option("-d,--delta", delta)->required();

  // graph -------------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "Dense-subgraph certification");
  graph->require_subcommand(1);
  std::string graph_path;
  std::size_t k = 2;
  double skew_a = 1.0, alpha = 0.75, cexc = 1.25;
  auto* g_oracle = graph->add_subcommand("oracle", "Brute-force densest k-subgraph");
  g_oracle->add_option("graph", graph_path)->required();
  g_oracle->add_option("-k", k)->required();
  add_common(g_oracle, common);
  auto* g_spectral = graph->add_subcommand("spectral", "Spectral certificate");
  g_spectral->add_option("graph", graph_path)->required();
  add_common(g_spectral, common);
  auto* g_skewed = graph->add_subcommand("skewed", "Skewed spectral certificate");
  g_skewed->add_option("graph", graph_path)->required();
  g_skewed->add_option("-a", skew_a);
  add_common(g_skewed, common);
  auto* g_tune = graph->add_subcommand("tune-skew", "Best skew a for (alpha, C)");
  g_tune->add_option("--alpha", alpha)->required();
  g_tune->add_option("-C,--cexc", cexc)->required();

  // reduce ------------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "Graph-to-matrix reductions");
  reduce->require_subcommand(1);
  double red_c = 0.3;
  std::size_t bn_cols = 0;
  std::string out_path, regime = "hyp1";
  HardnessOverrides overrides;
  std::size_t hard_n = 10000;
  auto* r_chol = reduce->add_subcommand("cholesky", "C(G) with CᵀC = Id + cA/√n");
  r_chol->add_option("graph", graph_path)->required();
  r_chol->add_option("-c", red_c);
  r_chol->add_option("-o,--output", out_path);
  add_common(r_chol, common);
  auto* r_rect = reduce->add_subcommand("rect", "diag(C(G), B) with random B");
  r_rect->add_option("graph", graph_path)->required();
  r_rect->add_option("-c", red_c);
  r_rect->add_option("--bn-cols", bn_cols)->required();
  r_rect->add_option("-o,--output", out_path);
  add_common(r_rect, common);
  auto* r_params = reduce->add_subcommand("params", "Hardness parameter bundle");
  r_params->add_option("--regime", regime)->check(CLI::IsMember({"hyp1", "hyp2"}));
  r_params->add_option("-n", hard_n);
  r_params->add_option("--alpha", overrides.alpha);
  r_params->add_option("--beta", overrides.beta);
  r_params->add_option("-C,--cexc", overrides.cexc);
  r_params->add_option("-c", overrides.c);
  r_params->add_option("--c-prime", overrides.c_prime);
  r_params->add_option("--gap", overrides.gap);
  r_params->add_option("--kappa", overrides.kappa);
  r_params->add_option("--delta0", overrides.delta0);

  // exp ---------------------------------------------------------------------
  auto* exp = app.add_subcommand("exp", "Monte Carlo experiments (exit 1 on an asserted failure)");
  exp->require_subcommand(1);
  std::size_t exp_n = 0, exp_cols = 96;
  double exp_a = 1.0;
  std::vector<double> grid;
  std::vector<std::size_t> m_grid{2, 3};
  auto* e_fk = exp->add_subcommand("fk", "Median of λ₁ for Model A");
  e_fk->add_option("-n", exp_n)->required();
  add_common(e_fk, common);
  auto* e_tail = exp->add_subcommand("tail", "Model A spectral radius tails");
  e_tail->add_option("-n", exp_n)->required();
  e_tail->add_option("--t", grid, "t grid")->required();
  add_common(e_tail, common);
  auto* e_norm = exp->add_subcommand("norm", "Operator norm of the skewed adjacency matrix");
  e_norm->add_option("-n", exp_n)->required();
  e_norm->add_option("-a", exp_a);
  e_norm->add_option("--eps", grid, "Tail grid (default 2 4 6)");
  add_common(e_norm, common);
  auto* e_duel = exp->add_subcommand("duel", "Spectral vs skewed certification rates");
  e_duel->add_option("-n", exp_n)->required();
  e_duel->add_option("--alpha", alpha)->required();
  e_duel->add_option("-C,--cexc", cexc)->required();
  e_duel->add_option("-a", exp_a);
  add_common(e_duel, common);
  auto* e_hoeff = exp->add_subcommand("hoeffding", "Dense k-subgraph frequency vs union bound");
  e_hoeff->add_option("-n", exp_n)->required();
  e_hoeff->add_option("-k", k)->required();
  e_hoeff->add_option("--eps", grid)->required();
  add_common(e_hoeff, common);
  auto* e_lazy = exp->add_subcommand("lazy", "Lazy certification sweep");
  e_lazy->add_option("-n", exp_n)->required();
  e_lazy->add_option("-N,--cols", exp_cols);
  e_lazy->add_option("-m", m_grid);
  e_lazy->add_option("--delta", grid);
  add_common(e_lazy, common);

  CLI11_PARSE(app, argc, argv);

  const auto samples_or = [&](std::size_t fallback) { return common.samples ? common.samples : fallback; };
  const EnumerationOptions enum_opts{common.budget, common.workers};
  const ExperimentOptions exp_opts{common.workers};

  try {
    if (gen_graph->parsed()) {
      const Graph g = gen_gnp_half(gen_n, seed_of(common));
      if (gen_path.empty())
        io::write_edge_list(std::cout, g);
      else
        io::save_graph(gen_path, g);
    } else if (gen_matrix->parsed()) {
      emit_matrix(gen_bernoulli_sensing(gen_n, gen_cols, seed_of(common)).data(), gen_path);
    } else if (gen_model_c_cmd->parsed()) {
      const auto red = cholesky_reduce(gen_model_a(gen_n, seed_of(common)), CholeskyReductionConfig{gen_c, common.tol});
      if (!red.psd) std::cerr << "warning: Id + cA/sqrt(n) is not PSD; emitting the zero matrix\n";
      emit_matrix(red.matrix.data(), gen_path);
    } else if (rip->parsed()) {
      SensingMatrix phi(io::load_matrix(matrix_path));
      if (normalize) phi = phi.normalized();
      if (rip_exact->parsed()) {
        const auto ext = rip_delta_exact_argmax(phi, order, enum_opts);
        emit({{"k", order}, {"delta", ext.delta}, {"argmax_subset", ext.subset}});
      } else if (rip_lazy->parsed()) {
        emit(io::to_json(lazy_certify(phi, order, delta, enum_opts)));
      } else if (rip_coh->parsed()) {
        const double mu = coherence(phi);
        emit({{"coherence", mu}, {"certificate", io::to_json(coherence_certify(phi, delta))}});
      } else if (rip_witness->parsed()) {
        const SparseVector x = parse_sparse(witness);
        const double ratio = rip_ratio(phi, x);
        emit({{"ratio", ratio}, {"sparsity", x.size()}, {"delta", delta}, {"violates", check_rip_witness(phi, x, delta)}});
      }
    } else if (g_tune->parsed()) {
      const auto choice = skew_feasible(alpha, cexc);
      if (choice)
        emit({{"feasible", true}, {"a", choice->a}, {"objective", choice->objective}});
      else
        emit({{"feasible", false}});
    } else if (graph->parsed()) {
      const Graph g = io::load_graph(graph_path);
      if (g_oracle->parsed()) {
        const auto best = densest_k_oracle(g, k, enum_opts);
        emit({{"k", k}, {"subset", best.vertices}, {"edges", best.edges}, {"excess", best.excess}});
      } else if (g_spectral->parsed()) {
        emit(io::to_json(spectral_certify(g)));
      } else if (g_skewed->parsed()) {
        emit(io::to_json(skewed_certify(g, skew_a)));
      }
    } else if (r_chol->parsed()) {
      const auto red = cholesky_reduce(io::load_graph(graph_path), CholeskyReductionConfig{red_c, common.tol});
      if (!red.psd) std::cerr << "warning: Id + cA/sqrt(n) is not PSD; emitting the zero matrix\n";
      emit_matrix(red.matrix.data(), out_path);
    } else if (r_rect->parsed()) {
      const auto block = rectangular_embed(io::load_graph(graph_path), CholeskyReductionConfig{red_c, common.tol},
                                           bn_cols, seed_of(common));
      emit_matrix(block.assembled.data(), out_path);
    } else if (r_params->parsed()) {
      emit(io::to_json(hardness_params(regime == "hyp1" ? HardnessRegime::hyp1 : HardnessRegime::hyp2, hard_n, overrides)));
    } else if (e_fk->parsed()) {
      return report(exp_fk_median(exp_n, samples_or(100), seed_of(common), exp_opts), common);
    } else if (e_tail->parsed()) {
      return report(exp_model_a_tail(exp_n, grid, samples_or(200), seed_of(common), exp_opts), common);
    } else if (e_norm->parsed()) {
      SkewNormParams p;
      p.n = exp_n;
      p.a = exp_a;
      if (!grid.empty()) p.eps_grid = grid;
      p.samples = samples_or(50);
      return report(exp_skew_norm(p, seed_of(common), exp_opts), common);
    } else if (e_duel->parsed()) {
      return report(exp_certifier_duel(exp_n, alpha, cexc, exp_a, samples_or(50), seed_of(common), exp_opts), common);
    } else if (e_hoeff->parsed()) {
      return report(exp_hoeffding_subgraph(exp_n, k, grid, samples_or(200), seed_of(common), exp_opts, common.budget),
                    common);
    } else if (e_lazy->parsed()) {
      LazySweepParams p;
      p.n = exp_n;
      p.cols = exp_cols;
      p.m_grid = m_grid;
      if (!grid.empty()) p.delta_grid = grid;
      p.samples = samples_or(20);
      p.budget = common.budget;
      return report(exp_lazy_sweep(p, seed_of(common), exp_opts), common);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
