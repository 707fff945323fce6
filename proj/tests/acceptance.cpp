// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits non-zero when any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphonlab/cli.hpp"
#include "graphonlab/expressions.hpp"
#include "graphonlab/forcing.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/quadrature.hpp"
#include "graphonlab/sampling.hpp"
#include "graphonlab/vertexspace.hpp"

using namespace graphonlab;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail = "") {
  std::printf("%s  [%2d] %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

const double a = wr::kA;

double witness_distance_formula(int i, double delta) {
  return ((4 + 2 * delta) * std::ldexp(1.0, -i) + 2 * delta) / 9.0;
}

EvalOptions opts(std::uint64_t budget, std::uint64_t seed, int threads = 1) {
  EvalOptions o;
  o.budget = budget;
  o.seed = seed;
  o.threads = threads;
  return o;
}

// 1. Table 1 degrees within 1e-4, runtime < 30 s.
void criterion_degrees() {
  auto start = std::chrono::steady_clock::now();
  Graphon w = rademacher_graphon();
  PartitionSpec spec = wr_partition_spec();
  const double targets[8] = {1.0 / 3, 16.0 / 45, 1.0 / 9, 2.0 / 15, 7.0 / 45, 1.0 / 6, 1.0 / 5, 8.0 / 45};
  double worst = 0;
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> unif(0.02, 0.98);
  for (int p = 0; p < wr::kPartCount; ++p) {
    for (int rep = 0; rep < 6; ++rep) {
      double x = wr::part_start(p) + unif(gen) * wr::part_width(p);
      double deg = graphon_degree(w, x, 12).value;
      worst = std::max(worst, std::abs(deg - targets[p]));
      (void)spec;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << "max deviation " << worst << ", " << secs << " s";
  report(1, worst <= 1e-4 && secs < 30.0, "degree table of the eight parts within 1e-4", detail.str());
}

// 2. Non-edge density on A^2 equals 1/243 (quadrature 1e-4, MC 3 sigma).
void criterion_nonedge() {
  Graphon w = rademacher_graphon();
  DecoratedGraph nonedge(Graph(2), {wr::A, wr::A});
  double target = 1.0 / 243.0;
  Estimate quad = decorated_density(nonedge, w);
  Estimate mc = decorated_density(nonedge, w, opts(1'000'000, 2).with_method(Method::MonteCarlo));
  bool ok = std::abs(quad.value - target) <= 1e-4 && std::abs(mc.value - target) <= 3 * mc.stderr_;
  std::ostringstream detail;
  detail << "quad " << quad.value << ", mc " << mc.value << " +- " << mc.stderr_;
  report(2, ok, "non-edge density on A^2 equals 1/243", detail.str());
}

// 3. Witness distances match the closed form; pairs with i != i' separate.
void criterion_distances() {
  SectionFunction g = witness_g();
  std::vector<std::pair<int, double>> params = {{3, 0.1}, {5, 0.25}, {8, 0.5}};
  bool ok = true;
  double worst = 0;
  for (auto [i, delta] : params) {
    double dist = l1_distance(witness_g_i_delta(i, delta), g).value;
    worst = std::max(worst, std::abs(dist - witness_distance_formula(i, delta)));
    ok = ok && std::abs(dist - witness_distance_formula(i, delta)) <= 1e-4;
  }
  for (std::size_t p = 0; p < params.size(); ++p) {
    for (std::size_t q = p + 1; q < params.size(); ++q) {
      auto [i, di] = params[p];
      auto [j, dj] = params[q];
      double dist = l1_distance(witness_g_i_delta(i, di), witness_g_i_delta(j, dj)).value;
      ok = ok && dist > (di + dj) / 18.0;
      ok = ok && check_separation(i, di, j, dj);
    }
  }
  std::ostringstream detail;
  detail << "max formula deviation " << worst;
  report(3, ok, "witness distances match ((4+2d)2^-i + 2d)/9 and separate pairwise", detail.str());
}

// 4. Packing diagnostic certifies 8 and 16 witnesses at eps = 2^-6.
void criterion_packing() {
  PackingDiagnostic eight = packing_diagnostic(std::ldexp(1.0, -6), 8);
  PackingDiagnostic sixteen = packing_diagnostic(std::ldexp(1.0, -6), 16);
  bool ok = eight.certified && sixteen.certified && eight.witnesses.size() == 8 &&
            sixteen.witnesses.size() == 16 && eight.witnesses.front().index == 7;
  std::ostringstream detail;
  detail << "count 8: max dist " << eight.max_dist_to_g << ", min pair " << eight.min_pairwise << "; count 16: max "
         << sixteen.max_dist_to_g << ", min " << sixteen.min_pairwise;
  report(4, ok, "packing witnesses certified at eps = 2^-6 for counts 8 and 16", detail.str());
}

// 5. Sections of W_R at the witness root points reproduce g_{i,delta}.
void criterion_sections() {
  Graphon w = rademacher_graphon();
  const int grid = 12;
  double step = std::ldexp(1.0, -grid);
  bool ok = true;
  double worst = 0;
  const double deltas[3] = {0.1, 0.25, 0.5};
  for (int i = 1; i <= 8; ++i) {
    double delta = deltas[i % 3];
    double y = wr_witness_root_point(i, delta);
    double dist = l1_distance(w.section(y), witness_g_i_delta(i, delta), grid).value;
    worst = std::max(worst, dist);
    ok = ok && dist <= 2 * step;
  }
  std::ostringstream detail;
  detail << "max L1 error " << worst << " vs bound " << 2 * step;
  report(5, ok, "sections at the witness root points reproduce g_{i,delta} for i <= 8", detail.str());
}

// 6. Partition constraints hold on W_R and fail on the D-column defect.
void criterion_partition() {
  Graphon w = rademacher_graphon();
  auto constraints = partition_constraints(wr_partition_spec());
  bool ok = true;
  for (const auto& c : constraints) {
    CheckResult r = check_constraint(c, w, 1e-8, opts(1'000'000, 3, 4));
    ok = ok && r.verdict == Verdict::Satisfied;
  }
  Graphon defect = perturb_block(w, 0.0, 1.0, wr::part_start(wr::D), 1.0, 0.05);
  int violated = 0;
  for (const auto& c : constraints) {
    if (check_constraint(c, defect, 1e-8, opts(200'000, 4, 4)).verdict == Verdict::Violated) ++violated;
  }
  ok = ok && violated >= 1;
  std::ostringstream detail;
  detail << violated << " constraints flag the shifted D column";
  report(6, ok, "partition constraints satisfied on W_R at budget 1e6, defect detected", detail.str());
}

// 7. Compiled decorated expressions equal direct decorated densities.
void criterion_compile() {
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Graph> graphs = {Graph(1),        Graph(2),           Graph::single_edge(), Graph::empty(3),
                               Graph(3, {{0, 1}}), Graph::cherry(), Graph::triangle()};
  bool ok = true;
  double worst = 0;
  int checked = 0;
  for (int inst = 0; inst < 10; ++inst) {
    // random 3-part step graphon with well-separated degrees
    Graphon w = constant_graphon(0.5);
    while (true) {
      std::vector<double> sizes(3);
      double total = 0;
      for (auto& s : sizes) total += (s = 0.2 + unif(gen));
      for (auto& s : sizes) s /= total;
      std::vector<std::vector<double>> m(3, std::vector<double>(3));
      for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) m[(unsigned)i][(unsigned)j] = m[(unsigned)j][(unsigned)i] = unif(gen);
      }
      Graphon cand = step_graphon(sizes, m);
      if (cand.partition() == nullptr) continue;
      const auto& d = cand.partition()->degrees;
      if (std::abs(d[0] - d[1]) > 0.02 && std::abs(d[0] - d[2]) > 0.02 && std::abs(d[1] - d[2]) > 0.02) {
        w = cand;
        break;
      }
    }
    const PartitionSpec& spec = *w.partition();
    for (const Graph& g : graphs) {
      int n = g.order();
      std::vector<int> parts((unsigned)n, 0);
      while (true) {
        DecoratedGraph h(g, parts);
        Estimate direct = decorated_density(h, w);
        Estimate compiled = evaluate_expression(compile_decorated(h, spec), w);
        double tol = 3 * std::hypot(direct.stderr_, compiled.stderr_) + 1e-9;
        worst = std::max(worst, std::abs(direct.value - compiled.value));
        ok = ok && std::abs(direct.value - compiled.value) <= tol;
        ++checked;
        int i = 0;
        while (i < n && ++parts[(unsigned)i] == 3) {
          parts[(unsigned)i] = 0;
          ++i;
        }
        if (i == n) break;
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " decorated graphs, max |compiled - direct| " << worst;
  report(7, ok, "degree-polynomial compilation matches decorated densities on order <= 3", detail.str());
}

// 8. E_mu[D] = [[D]] / d(H0, W) for three rooted expressions.
void criterion_rooted_reduction() {
  Expression e1 = Expression::term(RootedGraph::rooted_edge());
  Expression cherry1 = Expression::term(RootedGraph(Graph::cherry(), {2}));  // rooted at the centre
  std::vector<std::pair<std::string, Expression>> exprs = {
      {"e1", e1}, {"e1*e1", e1 * e1}, {"rooted-cherry", cherry1}};
  std::vector<Graphon> ws = {constant_graphon(0.5), half_graphon()};
  bool ok = true;
  double worst = 0;
  std::uint64_t seed = 100;
  for (const Graphon& w : ws) {
    for (const auto& [name, d] : exprs) {
      // route 1: expectation under mu via the ratio estimator
      Estimate expectation = evaluate_expression(d, w, opts(30'000, seed).with_method(Method::MonteCarlo));
      // route 2: single-pass unlabeling divided by d(H0, W) = d(vertex) = 1
      Estimate unlabeled = unlabel(d, w, opts(30'000, seed + 1).with_method(Method::MonteCarlo));
      double diff = std::abs(expectation.value - unlabeled.value);
      double tol = 3 * std::hypot(expectation.stderr_, unlabeled.stderr_);
      worst = std::max(worst, diff - tol);
      ok = ok && diff <= tol;
      seed += 2;
    }
  }
  std::ostringstream detail;
  detail << "max (diff - 3 sigma) " << worst;
  report(8, ok, "rooted reduction E[D] = [[D]]/d(H0,W) on constant and half graphons", detail.str());
}

// 9. Pseudorandom triple holds on (C', D) and fails on the half-cross block.
void criterion_pseudorandom() {
  Graphon w = rademacher_graphon();
  auto triple = pseudorandom_constraints(wr::CPrime, wr::D, 0.8, wr_partition_spec());
  bool ok = true;
  for (const auto& c : triple) {
    ok = ok && check_constraint(c, w, 1e-3, opts(60'000, 5)).verdict == Verdict::Satisfied;
  }
  PartitionSpec spec({0.5, 0.5}, {0.4, 0.6});
  auto cross_fn = [](double x, double y) {
    bool x1 = x < 0.5, y1 = y < 0.5;
    if (x1 && y1) return 0.3;
    if (!x1 && !y1) return 0.7;
    double u = x1 ? 2 * x : 2 * y;
    double v = x1 ? 2 * y - 1 : 2 * x - 1;
    return u + v >= 1.0 ? 1.0 : 0.0;
  };
  AxisHints hints;
  hints.add_point(0.5);
  Graphon cross = kernel_graphon(cross_fn, "half-cross", spec, hints);
  auto triple2 = pseudorandom_constraints(0, 1, 0.5, spec);
  CheckResult cherry = check_constraint(triple2[2], cross, 1e-3, opts(60'000, 6));
  ok = ok && cherry.verdict == Verdict::Violated;
  std::ostringstream detail;
  detail << "counterexample cherry residual " << cherry.residual;
  report(9, ok, "pseudorandom triple satisfied on (C',D), H2 = p^2 violated on the half-cross block",
         detail.str());
}

// 10. The I_k neighborhood integral matches (1 - 2^-k - t) / (9 2^-k).
void criterion_eq2() {
  Graphon w = rademacher_graphon();
  auto integral = [&](int k, double t) {
    double x = wr::part_start(wr::APrime) + a * t;
    Grid1D grid = Grid1D::build(wr::part_start(wr::C), wr::part_start(wr::C) + 2 * a, 12, w.section_hints(x));
    return grid.integrate([&](double y) {
      double u = (y - wr::part_start(wr::C)) / (2 * a);
      bool in_ik = (static_cast<long long>(std::floor(std::ldexp(u, k))) & 1) == 0;
      return in_ik ? w(x, y) : 0.0;
    });
  };
  bool ok = std::abs(integral(2, 0.6) - 0.0667) <= 1e-3;
  double worst = 0;
  std::mt19937_64 gen(10);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  std::uniform_int_distribution<int> kdist(1, 5);
  for (int rep = 0; rep < 20; ++rep) {
    int k = kdist(gen);
    double t = (1.0 - std::ldexp(1.0, 1 - k)) + unif(gen) * std::ldexp(1.0, -k);
    double target = (1.0 - std::ldexp(1.0, -k) - t) / (9.0 * std::ldexp(1.0, -k));
    double dev = std::abs(integral(k, t) - target);
    worst = std::max(worst, dev);
    ok = ok && dev <= 1e-3;
  }
  std::ostringstream detail;
  detail << "eq2(2, 0.6) = " << integral(2, 0.6) << ", max deviation " << worst;
  report(10, ok, "I_k neighborhood integrals at 20 random (k, t) points within 1e-3", detail.str());
}

// 11. Edge densities of sampled half-graphon graphs concentrate at n = 400.
void criterion_convergence() {
  std::vector<double> estimates;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = sample_w_random_graph(half_graphon(), 400, 1000 + seed);
    estimates.push_back(empirical_density(Graph::single_edge(), g, DensityMode::Exact).value);
  }
  double mean = 0;
  for (double e : estimates) mean += e;
  mean /= static_cast<double>(estimates.size());
  double var = 0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  double sd = std::sqrt(var / (estimates.size() - 1));
  int within = 0;
  for (double e : estimates) {
    if (std::abs(e - 0.5) <= 3 * sd) ++within;
  }
  std::ostringstream detail;
  detail << within << "/20 runs within 3 sigma (sd " << sd << ")";
  report(11, within >= 19, "half-graphon edge densities at n = 400 concentrate around 0.5", detail.str());
}

// 12. d_W is dominated by the L1 distance and vanishes on the diagonal.
void criterion_dw() {
  Graphon w = rademacher_graphon();
  CounterRng rng(4, 50);
  bool ok = true;
  double worst = -1;
  std::uint64_t ctr = 0;
  for (int pair = 0; pair < 50; ++pair) {
    // mixed corpus: witnesses, graphon slices, random step sections
    auto make = [&](int which) {
      switch (which % 3) {
        case 0: return witness_g_i_delta(1 + static_cast<int>(rng.bits(ctr++) % 8), 0.1 + 0.8 * rng.uniform(ctr++));
        case 1: return w.section(rng.uniform(ctr++));
        default: {
          int blocks = 4 << (rng.bits(ctr++) % 3);
          std::vector<double> vals;
          for (int b = 0; b < blocks; ++b) vals.push_back(rng.uniform(ctr++));
          AxisHints h;
          for (int b = 0; b <= blocks; ++b) h.add_point(static_cast<double>(b) / blocks);
          return SectionFunction(
              [vals, blocks](double x) {
                int b = std::min(blocks - 1, static_cast<int>(x * blocks));
                return vals[static_cast<std::size_t>(b)];
              },
              "random-step", h);
        }
      }
    };
    SectionFunction f = make(pair);
    SectionFunction g = make(pair + 1);
    double dw = dw_distance(w, f, g).value;
    double l1 = l1_distance(f, g, 9).value;
    ok = ok && dw <= l1 + 1e-6;
    worst = std::max(worst, dw - l1);
    if (pair % 10 == 0) ok = ok && dw_distance(w, f, f).value == 0.0;
  }
  std::ostringstream detail;
  detail << "max d_W - L1 " << worst;
  report(12, ok, "d_W(f,g) <= ||f-g||_1 + 1e-6 on a 50-pair corpus, d_W(f,f) = 0", detail.str());
}

// 13. CLI output is byte-identical across thread counts 1, 4, 8.
void criterion_cli_reproducibility() {
  std::vector<std::vector<std::string>> invocations = {
      {"density", "--graph", "/tmp/graphonlab_accept_edge.txt", "--graphon", "builtin:rademacher", "--method",
       "mc", "--budget", "150000", "--seed", "21"},
      {"verify-wr", "--graphon", "builtin:rademacher", "--filter", "eq2", "--budget", "25000", "--seed", "22"},
      {"sample", "--graphon", "builtin:rademacher", "--order", "120", "--seed", "23"},
      {"converge", "--graph", "/tmp/graphonlab_accept_edge.txt", "--graphon", "builtin:half", "--orders",
       "40,80", "--seed", "24"},
  };
  {
    std::ostringstream dummy;
    write_file("/tmp/graphonlab_accept_edge.txt", "2 1\n0 1\n");
  }
  bool ok = true;
  for (const auto& base : invocations) {
    std::string reference;
    for (const char* threads : {"1", "4", "8"}) {
      auto args = base;
      args.insert(args.end(), {"--threads", threads});
      std::ostringstream out, err;
      int code = run_cli(args, out, err);
      ok = ok && code == 0;
      if (reference.empty()) reference = out.str();
      ok = ok && out.str() == reference;
    }
  }
  report(13, ok, "CLI runs are byte-identical across --threads 1, 4, 8");
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion_degrees();
  criterion_nonedge();
  criterion_distances();
  criterion_packing();
  criterion_sections();
  criterion_partition();
  criterion_compile();
  criterion_rooted_reduction();
  criterion_pseudorandom();
  criterion_eq2();
  criterion_convergence();
  criterion_dw();
  criterion_cli_reproducibility();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s: %d criterion(s) failed, %.1f s total\n", failures == 0 ? "OK" : "FAILURES", failures, secs);
  return failures == 0 ? 0 : 1;
}
