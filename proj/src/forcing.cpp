#include "graphonlab/forcing.hpp"

#include <algorithm>
#include <cmath>

#include "graphonlab/quadrature.hpp"

namespace graphonlab {

PartitionSpec wr_partition_spec() { return wr::partition_spec(); }

std::vector<Constraint> partition_constraints(const PartitionSpec& spec) {
  Expression e1 = Expression::term(RootedGraph::rooted_edge());
  int k = spec.part_count();
  std::vector<Constraint> out;

  std::optional<Expression> all;
  for (int i = 0; i < k; ++i) {
    Expression factor = e1 - Expression::constant(spec.degrees[static_cast<std::size_t>(i)]);
    all = all ? *all * factor : factor;
  }
  out.push_back(Constraint::make("partition:degrees", *all, Expression::constant(0.0)));

  for (int j = 0; j < k; ++j) {
    std::optional<Expression> prod;
    double target = spec.sizes[static_cast<std::size_t>(j)];
    for (int i = 0; i < k; ++i) {
      if (i == j) continue;
      prod = prod ? *prod * (e1 - Expression::constant(spec.degrees[static_cast<std::size_t>(i)]))
                  : e1 - Expression::constant(spec.degrees[static_cast<std::size_t>(i)]);
      target *= spec.degrees[static_cast<std::size_t>(j)] - spec.degrees[static_cast<std::size_t>(i)];
    }
    Expression lhs = prod ? Expression::unlabeled(*prod)
                          : Expression::unlabeled(Expression::term(RootedGraph(Graph(1), {0})));
    out.push_back(Constraint::make("partition:measure-" + std::to_string(j), lhs, Expression::constant(target)));
  }
  return out;
}

std::vector<Constraint> pseudorandom_constraints(int l, int lp, double p, const PartitionSpec& spec) {
  if (l == lp) throw error("pseudorandom_constraints: parts must differ");
  if (l < 0 || lp < 0 || l >= spec.part_count() || lp >= spec.part_count()) {
    throw error("pseudorandom_constraints: part index out of range");
  }
  if (p < 0 || p > 1) throw error("pseudorandom_constraints: p must lie in [0,1]");

  DecoratedGraph edge(Graph::single_edge(), {0}, {l, lp});
  DecoratedGraph triangle(Graph::triangle(), {0, 1}, {l, l, lp});
  DecoratedGraph cherry(Graph::cherry(), {0, 1}, {l, l, lp});

  std::vector<Constraint> out;
  out.push_back(Constraint::make("pseudorandom:edge", Expression::term(edge), Expression::constant(p)));
  out.push_back(Constraint::make("pseudorandom:triangle", Expression::term(triangle), Expression::constant(p * p)));
  out.push_back(Constraint::make("pseudorandom:cherry", Expression::term(cherry), Expression::constant(p * p)));
  return out;
}

std::vector<Constraint> gadget_constraints(const std::vector<std::pair<Graph, double>>& base, int l,
                                           const PartitionSpec& spec) {
  if (l < 0 || l >= spec.part_count()) throw error("gadget_constraints: part index out of range");
  std::vector<Constraint> out;
  double a = spec.sizes[static_cast<std::size_t>(l)];
  int idx = 0;
  for (const auto& [h, d] : base) {
    std::vector<int> parts(static_cast<std::size_t>(h.order()), l);
    double target = std::pow(a, h.order()) * d;
    out.push_back(Constraint::make("gadget:" + std::to_string(idx++),
                                   Expression::term(DecoratedGraph(h, parts)), Expression::constant(target)));
  }
  return out;
}

std::vector<Constraint> zero_constraints_wr(const PartitionSpec& spec) {
  PartitionSpec wr_spec = wr_partition_spec();
  if (spec.sizes != wr_spec.sizes) throw error("zero_constraints_wr: spec does not match the Rademacher layout");
  using namespace wr;
  const std::vector<std::pair<int, int>> pairs = {
      {BDoublePrime, BDoublePrime},
      {D, D},
      {A, CPrime},
      {A, D},
      {APrime, B},
      {B, BPrime},
      {B, BDoublePrime},
      {B, C},
      {B, CPrime},
      {B, D},
      {BPrime, BDoublePrime},
      {BPrime, C},
      {BPrime, CPrime},
      {BDoublePrime, C},
      {BDoublePrime, CPrime},
      {C, D},
  };
  std::vector<Constraint> out;
  for (auto [p, q] : pairs) {
    DecoratedGraph edge(Graph::single_edge(), {p, q});
    out.push_back(Constraint::make(std::string("zero:") + part_name(p) + "x" + part_name(q),
                                   Expression::term(edge), Expression::constant(0.0)));
  }
  return out;
}

bool WrReport::all_satisfied() const {
  return std::all_of(items.begin(), items.end(),
                     [](const IdentityCheck& c) { return c.verdict == Verdict::Satisfied; });
}

namespace {

constexpr double kQuadTol = 1e-4;

Verdict verdict_for(double value, double target, double se, double tol) {
  double resid = std::abs(value - target);
  if (resid <= std::max(tol, 3 * se)) return Verdict::Satisfied;
  if (resid > tol + 3 * se) return Verdict::Violated;
  return Verdict::Inconclusive;
}

void push_check(WrReport& report, const std::string& filter, const std::string& name, double target,
                const Estimate& est, double tol = kQuadTol) {
  if (!filter.empty() && name.find(filter) == std::string::npos) return;
  report.items.push_back({name, target, est, verdict_for(est.value, target, est.stderr_, tol)});
}

bool wants(const std::string& filter, const std::string& prefix) {
  return filter.empty() || prefix.find(filter) != std::string::npos || filter.find(prefix) != std::string::npos;
}

}  // namespace

WrReport verify_wr_identities(const Graphon& w, const EvalOptions& opts, const std::string& filter) {
  using namespace wr;
  const PartitionSpec* part = w.partition();
  if (part == nullptr || part->sizes != wr_partition_spec().sizes) {
    throw error("verify_wr_identities: graphon does not carry the Rademacher partition layout");
  }
  WrReport report;
  const double a = kA;
  int grid = std::max(opts.grid_log2, 12);

  // (i) degree table
  if (wants(filter, "degree")) {
    PartitionSpec spec = wr_partition_spec();
    for (int p = 0; p < kPartCount; ++p) {
      double target = spec.degrees[static_cast<std::size_t>(p)];
      Estimate worst;
      double worst_dev = -1.0;
      for (double frac : {0.21, 0.52, 0.83}) {
        double x = part_start(p) + frac * part_width(p);
        Estimate est = graphon_degree(w, x, grid);
        if (std::abs(est.value - target) > worst_dev) {
          worst_dev = std::abs(est.value - target);
          worst = est;
        }
      }
      push_check(report, filter, std::string("degree:") + part_name(p), target, worst);
    }
  }

  // (ii) non-edge density on A^2 = 1/243
  if (wants(filter, "nonedge-AA")) {
    DecoratedGraph nonedge(Graph(2), {A, A});
    Estimate est = decorated_density(nonedge, w, opts.with_method(Method::Quadrature));
    push_check(report, filter, "nonedge-AA", 1.0 / 243.0, est);
  }

  // (iii) |N_{A'}(x)| = 2^-k / 9 for x in dyadic block k of A
  if (wants(filter, "mass-NAprime")) {
    for (int k = 1; k <= 4; ++k) {
      double tau = (1.0 - std::ldexp(1.0, 1 - k)) + 0.4 * std::ldexp(1.0, -k);  // inside block k
      double x = part_start(A) + a * tau;
      Grid1D g = Grid1D::build(part_start(APrime), part_start(APrime) + a, grid, w.section_hints(x));
      double mass = g.integrate([&](double y) { return w(x, y) > 0.0 ? 1.0 : 0.0; });
      push_check(report, filter, "mass-NAprime:k=" + std::to_string(k), std::ldexp(1.0, -k) / 9.0,
                 Estimate::exact(mass));
    }
  }

  // (iv) |N_A(x)| = 1/9 - s/2 for x in C at local position s
  if (wants(filter, "mass-NA")) {
    for (double u : {0.0, 0.35, 0.8}) {
      double s = u * 2 * a;
      double x = part_start(C) + s;
      Grid1D g = Grid1D::build(part_start(A), part_start(A) + a, grid, w.section_hints(x));
      double mass = g.integrate([&](double y) { return w(x, y) > 0.0 ? 1.0 : 0.0; });
      push_check(report, filter, "mass-NA:s=" + std::to_string(s), 1.0 / 9.0 - s / 2.0, Estimate::exact(mass));
    }
  }

  // (v), (vi) first and second moments over I_k for x' in block k of A'
  if (wants(filter, "eq2") || wants(filter, "eq3")) {
    const std::vector<std::pair<int, double>> points = {{1, 0.3}, {2, 0.6}, {3, 0.8}, {4, 0.9}};
    for (auto [k, t] : points) {
      double x = part_start(APrime) + a * t;
      Grid1D g = Grid1D::build(part_start(C), part_start(C) + 2 * a, grid, w.section_hints(x));
      auto in_ik = [&](double y) {
        double u = (y - part_start(C)) / (2 * a);
        return static_cast<long long>(std::floor(std::ldexp(u, k))) % 2 == 0;
      };
      double pow2k = std::ldexp(1.0, -k);
      if (wants(filter, "eq2")) {
        double first = g.integrate([&](double y) { return in_ik(y) ? w(x, y) : 0.0; });
        push_check(report, filter, "eq2:k=" + std::to_string(k), (1.0 - pow2k - t) / (9.0 * pow2k),
                   Estimate::exact(first));
      }
      if (wants(filter, "eq3")) {
        double second = g.integrate([&](double y) { return in_ik(y) ? w(x, y) * w(x, y) : 0.0; });
        push_check(report, filter, "eq3:k=" + std::to_string(k), (1.0 - pow2k - t) / (3.0 * pow2k),
                   Estimate::exact(std::sqrt(std::max(0.0, second))));
      }
    }
  }

  // (vii) block structure of A^2: W vanishes on J_k x J_k and is one across
  // distinct blocks
  if (wants(filter, "blocks-A")) {
    auto block = [&](int k) {
      return std::pair<double, double>{(1.0 - std::ldexp(1.0, 1 - k)) / 9.0, (1.0 - std::ldexp(1.0, -k)) / 9.0};
    };
    for (int k = 1; k <= 4; ++k) {
      auto [lo, hi] = block(k);
      Grid1D g = Grid1D::build(lo, hi, std::max(6, grid - 4), w.axis_hints());
      double inside = 0.0, cross = 0.0;
      auto [lo2, hi2] = block(k == 4 ? 1 : k + 1);
      Grid1D g2 = Grid1D::build(lo2, hi2, std::max(6, grid - 4), w.axis_hints());
      g.for_each_cell([&](double x, double wx) {
        g.for_each_cell([&](double y, double wy) { inside += wx * wy * w(x, y); });
        g2.for_each_cell([&](double y, double wy) { cross += wx * wy * (1.0 - w(x, y)); });
      });
      double area = (hi - lo) * (hi - lo);
      double cross_area = (hi - lo) * (hi2 - lo2);
      push_check(report, filter, "blocks-A:diag-zero:k=" + std::to_string(k), 0.0,
                 Estimate::exact(inside / area));
      push_check(report, filter, "blocks-A:cross-one:k=" + std::to_string(k), 0.0,
                 Estimate::exact(cross / cross_area));
    }
  }

  return report;
}

}  // namespace graphonlab
