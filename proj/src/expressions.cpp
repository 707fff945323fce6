#include "graphonlab/expressions.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "graphonlab/mc.hpp"

namespace graphonlab {

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;
using TermData = Expression::TermData;
using RootSignature = Expression::RootSignature;

constexpr std::uint64_t kStreamRootMeasure = 21;
constexpr std::uint64_t kStreamUnlabel = 22;

void collect_terms(const NodePtr& node, bool inside_unlabel, std::vector<const TermData*>& out, bool rooted_only) {
  if (node == nullptr) return;
  switch (node->kind) {
    case Expression::Kind::GraphTerm:
      if (!rooted_only || (!inside_unlabel && !node->term->roots.empty())) out.push_back(&*node->term);
      return;
    case Expression::Kind::Sum:
    case Expression::Kind::Product:
      collect_terms(node->left, inside_unlabel, out, rooted_only);
      collect_terms(node->right, inside_unlabel, out, rooted_only);
      return;
    case Expression::Kind::Unlabel:
      if (!rooted_only) collect_terms(node->child, true, out, rooted_only);
      return;
    default: return;
  }
}

RootSignature signature_of(const TermData& t) {
  RootedGraph rooted(t.graph, t.roots);
  RootSignature sig;
  sig.root_count = rooted.root_count();
  sig.root_graph = rooted.root_graph();
  if (!t.parts.empty()) {
    for (int r : t.roots) sig.root_parts.push_back(t.parts[static_cast<std::size_t>(r)]);
  }
  return sig;
}

bool node_is_rooted(const NodePtr& node) {
  std::vector<const TermData*> terms;
  collect_terms(node, false, terms, true);
  return !terms.empty();
}

RootSignature node_signature(const NodePtr& node) {
  std::vector<const TermData*> terms;
  collect_terms(node, false, terms, true);
  if (terms.empty()) throw error("expression has no rooted graph terms");
  RootSignature sig = signature_of(*terms.front());
  for (const TermData* t : terms) {
    if (!(signature_of(*t) == sig)) throw error("expression mixes incompatible rooted graph terms");
  }
  std::vector<const TermData*> all;
  collect_terms(node, false, all, false);
  for (const TermData* t : all) {
    if (t->roots.empty()) throw error("expression mixes rooted and unrooted graph terms");
  }
  return sig;
}

Estimate evaluate_node(const NodePtr& node, const Graphon& w, const EvalOptions& opts);
Estimate unlabel_node(const NodePtr& child, const Graphon& w, const EvalOptions& opts);

// Scalar value of a rooted expression at fixed root coordinates. Shared
// subtrees are memoized per sample; unlabel values must be hoisted first.
// root_hints carries the merged section hints of the roots, computed once
// per sample.
double eval_at_roots(const NodePtr& node, const Graphon& w, std::span<const double> roots, const EvalOptions& opts,
                     const PartitionSpec* spec, const AxisHints* root_hints,
                     std::unordered_map<const Node*, double>& cache) {
  auto it = cache.find(node.get());
  if (it != cache.end()) return it->second;
  double v = 0.0;
  switch (node->kind) {
    case Expression::Kind::Constant: v = node->value; break;
    case Expression::Kind::GraphTerm: {
      const TermData& t = *node->term;
      v = detail::rooted_term_value(t.graph, t.roots, t.parts.empty() ? nullptr : &t.parts, spec, w, roots, opts,
                                    root_hints)
              .value;
      break;
    }
    case Expression::Kind::Sum:
      v = eval_at_roots(node->left, w, roots, opts, spec, root_hints, cache) +
          eval_at_roots(node->right, w, roots, opts, spec, root_hints, cache);
      break;
    case Expression::Kind::Product:
      v = eval_at_roots(node->left, w, roots, opts, spec, root_hints, cache) *
          eval_at_roots(node->right, w, roots, opts, spec, root_hints, cache);
      break;
    case Expression::Kind::Unlabel: throw error("nested unlabel must be hoisted before rooted evaluation");
  }
  cache.emplace(node.get(), v);
  return v;
}

AxisHints merged_root_hints(const Graphon& w, std::span<const double> xs) {
  AxisHints h = w.section_hints(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) h.merge(w.section_hints(xs[i]));
  return h;
}

// Replaces unlabel nodes by constant nodes holding their value, so a rooted
// evaluation can treat the tree as a scalar function of the roots.
NodePtr hoist_unlabel(const NodePtr& node, const Graphon& w, const EvalOptions& opts) {
  if (node == nullptr) return node;
  switch (node->kind) {
    case Expression::Kind::Unlabel: {
      auto n = std::make_shared<Node>();
      n->kind = Expression::Kind::Constant;
      n->value = unlabel_node(node->child, w, opts).value;
      return n;
    }
    case Expression::Kind::Sum:
    case Expression::Kind::Product: {
      NodePtr l = hoist_unlabel(node->left, w, opts);
      NodePtr r = hoist_unlabel(node->right, w, opts);
      if (l == node->left && r == node->right) return node;
      auto n = std::make_shared<Node>(*node);
      n->left = std::move(l);
      n->right = std::move(r);
      return n;
    }
    default: return node;
  }
}

struct RootSetup {
  Graph h0;
  double aut0 = 1;
  int m = 0;
  std::vector<std::pair<double, double>> boxes;
  double box_measure = 1.0;
  const PartitionSpec* spec = nullptr;
};

RootSetup root_setup(const RootSignature& sig, const Graphon& w) {
  RootSetup s;
  s.h0 = sig.root_graph;
  s.m = sig.root_count;
  s.aut0 = static_cast<double>(automorphism_count(sig.root_graph));
  s.boxes.assign(static_cast<std::size_t>(s.m), {0.0, 1.0});
  if (!sig.root_parts.empty()) {
    s.spec = w.partition();
    if (s.spec == nullptr) throw error("decorated rooted expression requires a partitioned graphon");
    for (int i = 0; i < s.m; ++i) {
      int p = sig.root_parts[static_cast<std::size_t>(i)];
      if (p < 0 || p >= s.spec->part_count()) throw error("root part label out of range");
      s.boxes[static_cast<std::size_t>(i)] = {s.spec->part_start(p), s.spec->part_end(p)};
      s.box_measure *= s.spec->part_end(p) - s.spec->part_start(p);
    }
  }
  return s;
}

double root_weight_h0(const Graph& h0, const Graphon& w, const double* xs) {
  double c = 1.0;
  for (int i = 0; i < h0.order() && c > 0.0; ++i) {
    for (int j = i + 1; j < h0.order(); ++j) {
      c *= detail::pair_factor(h0, i, j, w(xs[i], xs[j]));
    }
  }
  return c;
}

// Inner evaluation options for per-root-tuple term values: deterministic
// quadrature at a reduced grid (hints keep it exact on structured kernels).
EvalOptions inner_options(const EvalOptions& opts) {
  EvalOptions inner = opts;
  inner.method = Method::Auto;
  inner.grid_log2 = std::min(opts.grid_log2, 8);
  inner.budget = std::max<std::uint64_t>(1024, opts.budget / 256);
  inner.threads = 1;
  return inner;
}

// Exact evaluation over a step graphon: the root integrals reduce to finite
// sums over part assignments, with representative coordinates at the part
// centres. Returns (unlabeled value, expectation under mu).
std::pair<double, double> step_exact_eval(const NodePtr& node, const Graphon& w, const EvalOptions& opts) {
  const StepStructure& step = *w.step_structure();
  RootSetup setup = root_setup(node_signature(node), w);
  NodePtr hoisted = hoist_unlabel(node, w, opts);
  EvalOptions inner = inner_options(opts);
  int m = setup.m;
  int k = static_cast<int>(step.sizes.size());

  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& box = setup.boxes[static_cast<std::size_t>(i)];
    double covered = 0.0;
    for (int p = 0; p < k; ++p) {
      if (step.starts[static_cast<std::size_t>(p)] >= box.first - 1e-12 &&
          step.starts[static_cast<std::size_t>(p) + 1] <= box.second + 1e-12) {
        candidates[static_cast<std::size_t>(i)].push_back(p);
        covered += step.sizes[static_cast<std::size_t>(p)];
      }
    }
    if (candidates[static_cast<std::size_t>(i)].empty() || std::abs(covered - (box.second - box.first)) > 1e-9) {
      throw unsupported_error("step evaluation requires root boxes aligned to the step blocks");
    }
  }

  double sum_wd = 0.0, sum_c = 0.0;
  std::vector<int> choice(static_cast<std::size_t>(m), 0);
  std::vector<double> xs(static_cast<std::size_t>(m));
  std::unordered_map<const Node*, double> cache;
  while (true) {
    double pi = 1.0;
    for (int i = 0; i < m; ++i) {
      int p = candidates[static_cast<std::size_t>(i)][static_cast<std::size_t>(choice[static_cast<std::size_t>(i)])];
      pi *= step.sizes[static_cast<std::size_t>(p)];
      xs[static_cast<std::size_t>(i)] =
          0.5 * (step.starts[static_cast<std::size_t>(p)] + step.starts[static_cast<std::size_t>(p) + 1]);
    }
    double c = root_weight_h0(setup.h0, w, xs.data());
    if (c > 0.0) {
      cache.clear();
      AxisHints rh = merged_root_hints(w, xs);
      double d = eval_at_roots(hoisted, w, xs, inner, setup.spec, &rh, cache);
      sum_wd += pi * c * d;
      sum_c += pi * c;
    }
    int i = 0;
    while (i < m && ++choice[static_cast<std::size_t>(i)] ==
                        static_cast<int>(candidates[static_cast<std::size_t>(i)].size())) {
      choice[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == m) break;
  }
  if (sum_c <= 0.0) throw zero_mass_error("rooted expression: root graph has zero mass over the parts");
  double pref = static_cast<double>(factorial(m)) / setup.aut0;
  return {pref * sum_wd, sum_wd / sum_c};
}

// E_mu[D] by an importance-weighted ratio estimator with uniform (or part
// box) proposals; stderr by the delta method.
Estimate rooted_expectation(const NodePtr& node, const Graphon& w, const EvalOptions& opts) {
  if (w.step_structure() != nullptr && opts.method != Method::MonteCarlo) {
    return {step_exact_eval(node, w, opts).second, 0.0, 0, Method::ExactStep};
  }
  RootSetup setup = root_setup(node_signature(node), w);
  NodePtr hoisted = hoist_unlabel(node, w, opts);
  EvalOptions inner = inner_options(opts);

  int blocks = opts.budget < 4096 ? 1 : 256;
  struct Acc {
    double sw = 0, sww = 0, sc = 0, scc = 0, swc = 0;
  };
  std::vector<Acc> accs(static_cast<std::size_t>(blocks));
  CounterRng rng(opts.seed, kStreamRootMeasure);
  std::uint64_t budget = std::max<std::uint64_t>(1, opts.budget);
  int m = setup.m;
  parallel_blocks(blocks, opts.threads, [&](int b) {
    std::uint64_t begin = budget * static_cast<std::uint64_t>(b) / static_cast<std::uint64_t>(blocks);
    std::uint64_t end = budget * static_cast<std::uint64_t>(b + 1) / static_cast<std::uint64_t>(blocks);
    Acc a;
    std::vector<double> xs(static_cast<std::size_t>(m));
    std::unordered_map<const Node*, double> cache;
    for (std::uint64_t s = begin; s < end; ++s) {
      for (int i = 0; i < m; ++i) {
        double u = rng.uniform(s * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(i));
        const auto& box = setup.boxes[static_cast<std::size_t>(i)];
        xs[static_cast<std::size_t>(i)] = box.first + (box.second - box.first) * u;
      }
      double c = root_weight_h0(setup.h0, w, xs.data());
      double d = 0.0;
      if (c > 0.0) {
        cache.clear();
        AxisHints rh = merged_root_hints(w, xs);
        d = eval_at_roots(hoisted, w, xs, inner, setup.spec, &rh, cache);
      }
      double wv = c * d;
      a.sw += wv;
      a.sww += wv * wv;
      a.sc += c;
      a.scc += c * c;
      a.swc += wv * c;
    }
    accs[static_cast<std::size_t>(b)] = a;
  });
  Acc total;
  for (const Acc& a : accs) {
    total.sw += a.sw;
    total.sww += a.sww;
    total.sc += a.sc;
    total.scc += a.scc;
    total.swc += a.swc;
  }
  if (total.sc <= 0.0) throw zero_mass_error("rooted expression: root graph has zero mass under the proposals");
  double n = static_cast<double>(budget);
  double r = total.sw / total.sc;
  double mean_c = total.sc / n;
  double var_num = std::max(0.0, total.sww / n - 2 * r * total.swc / n + r * r * total.scc / n);
  double se = std::sqrt(var_num / n) / mean_c;
  return {r, se, budget, Method::MonteCarlo};
}

Estimate unlabel_node(const NodePtr& child, const Graphon& w, const EvalOptions& opts) {
  if (w.step_structure() != nullptr && opts.method != Method::MonteCarlo) {
    return {step_exact_eval(child, w, opts).first, 0.0, 0, Method::ExactStep};
  }
  RootSetup setup = root_setup(node_signature(child), w);
  NodePtr hoisted = hoist_unlabel(child, w, opts);
  EvalOptions inner = inner_options(opts);
  double pref = static_cast<double>(factorial(setup.m)) / setup.aut0;
  int m = setup.m;

  Estimate mc = mc_mean(std::max<std::uint64_t>(1, opts.budget), opts.seed, kStreamUnlabel, opts.threads,
                        [&](const CounterRng& rng, std::uint64_t s) {
                          double xs[kBruteForceCutoff];
                          for (int i = 0; i < m; ++i) {
                            double u = rng.uniform(s * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(i));
                            const auto& box = setup.boxes[static_cast<std::size_t>(i)];
                            xs[i] = box.first + (box.second - box.first) * u;
                          }
                          double c = root_weight_h0(setup.h0, w, xs);
                          if (c <= 0.0) return 0.0;
                          std::unordered_map<const Node*, double> cache;
                          std::span<const double> roots(xs, static_cast<std::size_t>(m));
                          AxisHints rh = merged_root_hints(w, roots);
                          return c * eval_at_roots(hoisted, w, roots, inner, setup.spec, &rh, cache);
                        });
  return mc.scaled(pref * setup.box_measure);
}

Estimate evaluate_node(const NodePtr& node, const Graphon& w, const EvalOptions& opts) {
  switch (node->kind) {
    case Expression::Kind::Constant: return Estimate::exact(node->value);
    case Expression::Kind::GraphTerm: {
      const TermData& t = *node->term;
      if (!t.roots.empty()) throw error("rooted graph term outside a rooted context");
      if (!t.parts.empty()) return decorated_density(DecoratedGraph(t.graph, t.parts), w, opts);
      return graphon_density(t.graph, w, opts);
    }
    case Expression::Kind::Sum: return evaluate_node(node->left, w, opts) + evaluate_node(node->right, w, opts);
    case Expression::Kind::Product:
      return evaluate_node(node->left, w, opts) * evaluate_node(node->right, w, opts);
    case Expression::Kind::Unlabel: return unlabel_node(node->child, w, opts);
  }
  throw error("evaluate: unknown node kind");
}

}  // namespace

Expression Expression::constant(double c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = c;
  return Expression(std::move(n));
}

Expression Expression::term(const Graph& g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GraphTerm;
  n->term = TermData{g, {}, {}};
  return Expression(std::move(n));
}

Expression Expression::term(const RootedGraph& g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GraphTerm;
  n->term = TermData{g.graph(), g.roots(), {}};
  return Expression(std::move(n));
}

Expression Expression::term(const DecoratedGraph& g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GraphTerm;
  n->term = TermData{g.graph(), g.roots(), g.parts()};
  return Expression(std::move(n));
}

Expression Expression::sum(const Expression& a, const Expression& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->left = a.node_;
  n->right = b.node_;
  Expression e(std::move(n));
  if (node_is_rooted(e.node_)) node_signature(e.node_);  // validates compatibility
  return e;
}

Expression Expression::product(const Expression& a, const Expression& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->left = a.node_;
  n->right = b.node_;
  Expression e(std::move(n));
  if (node_is_rooted(e.node_)) node_signature(e.node_);
  return e;
}

Expression Expression::unlabeled(const Expression& rooted) {
  if (!rooted.is_rooted()) throw error("unlabeled: operand must be a rooted expression");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unlabel;
  n->child = rooted.node_;
  return Expression(std::move(n));
}

bool Expression::is_rooted() const { return node_is_rooted(node_); }

bool Expression::has_decorated_terms() const {
  std::vector<const TermData*> terms;
  collect_terms(node_, false, terms, false);
  return std::any_of(terms.begin(), terms.end(), [](const TermData* t) { return !t->parts.empty(); });
}

std::optional<Expression::RootSignature> Expression::root_signature() const {
  if (!node_is_rooted(node_)) return std::nullopt;
  return node_signature(node_);
}

Constraint Constraint::make(std::string name, Expression lhs, Expression rhs) {
  Constraint c{std::move(name), std::move(lhs), std::move(rhs), Kind::Ordinary};
  if (c.lhs.is_rooted() || c.rhs.is_rooted()) {
    c.kind = Kind::Rooted;
    auto sl = c.lhs.root_signature();
    auto sr = c.rhs.root_signature();
    if (sl && sr && !(*sl == *sr)) throw error("constraint sides have incompatible roots");
  } else if (c.lhs.has_decorated_terms() || c.rhs.has_decorated_terms()) {
    c.kind = Kind::Decorated;
  }
  return c;
}

Estimate evaluate_expression(const Expression& expr, const Graphon& w, const EvalOptions& opts) {
  if (expr.is_rooted()) return rooted_expectation(expr.node(), w, opts);
  return evaluate_node(expr.node(), w, opts);
}

Estimate unlabel(const Expression& rooted, const Graphon& w, const EvalOptions& opts) {
  if (!rooted.is_rooted()) throw error("unlabel: operand must be a rooted expression");
  return unlabel_node(rooted.node(), w, opts);
}

Constraint compile_rooted_constraint(const Constraint& rooted) {
  if (rooted.kind != Constraint::Kind::Rooted) throw error("compile_rooted_constraint: constraint is not rooted");
  Expression diff = rooted.lhs - rooted.rhs;
  return Constraint::make(rooted.name + " [compiled]", Expression::unlabeled(diff * diff),
                          Expression::constant(0.0));
}

Expression compile_decorated(const DecoratedGraph& h, const PartitionSpec& spec) {
  if (h.rooted()) throw error("compile_decorated: expects an unrooted decorated graph");
  h.validate_against(spec);
  const Graph& g = h.graph();
  int n = g.order();
  if (n + 1 > kBruteForceCutoff) throw unsupported_error("compile_decorated: graph order exceeds cutoff");
  if (n == 0) throw error("compile_decorated: empty graph");

  std::vector<int> all_roots(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all_roots[static_cast<std::size_t>(v)] = v;

  std::optional<Expression> product;
  for (int i = 0; i < n; ++i) {
    // H_i: all one-extra-vertex rooted graphs whose roots induce H and whose
    // non-root is adjacent to vertex i; adjacency to the other roots is free.
    std::optional<Expression> h_i;
    int others = n - 1;
    for (int mask = 0; mask < (1 << others); ++mask) {
      std::vector<std::pair<int, int>> edges = g.edges();
      edges.emplace_back(i, n);
      int bit = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if ((mask >> bit) & 1) edges.emplace_back(j, n);
        ++bit;
      }
      Expression term = Expression::term(RootedGraph(Graph(n + 1, edges), all_roots));
      h_i = h_i ? *h_i + term : term;
    }
    int li = h.parts()[static_cast<std::size_t>(i)];
    for (int j = 0; j < spec.part_count(); ++j) {
      if (j == li) continue;
      Expression factor = (*h_i - Expression::constant(spec.degrees[static_cast<std::size_t>(j)])) *
                          Expression::constant(1.0 / (spec.degrees[static_cast<std::size_t>(li)] -
                                                      spec.degrees[static_cast<std::size_t>(j)]));
      product = product ? *product * factor : factor;
    }
  }
  if (!product) {
    // single part: the degree polynomials are empty and the all-rooted term
    // has value one, so the compiled expression reduces to [[1]] = d(H, W)
    product = Expression::term(RootedGraph(g, all_roots));
  }
  return Expression::unlabeled(*product);
}

CheckResult check_constraint(const Constraint& c, const Graphon& w, double tol, const EvalOptions& opts) {
  CheckResult result;
  if (c.kind == Constraint::Kind::Rooted) {
    Expression diff = c.lhs - c.rhs;
    Estimate r2 = evaluate_expression(diff * diff, w, opts);
    result.lhs = evaluate_expression(c.lhs, w, opts.with_budget(opts.budget / 4 + 1));
    result.rhs = evaluate_expression(c.rhs, w, opts.with_budget(opts.budget / 4 + 1));
    result.residual = std::sqrt(std::max(0.0, r2.value));
    result.stderr_ = r2.stderr_;
    double tol2 = tol * tol;
    if (r2.value <= std::max(tol2, 3 * r2.stderr_)) {
      result.verdict = Verdict::Satisfied;
    } else if (r2.value > tol2 + 3 * r2.stderr_) {
      result.verdict = Verdict::Violated;
    } else {
      result.verdict = Verdict::Inconclusive;
    }
    return result;
  }
  result.lhs = evaluate_expression(c.lhs, w, opts);
  result.rhs = evaluate_expression(c.rhs, w, opts);
  double resid = std::abs(result.lhs.value - result.rhs.value);
  double se = std::hypot(result.lhs.stderr_, result.rhs.stderr_);
  result.residual = resid;
  result.stderr_ = se;
  if (resid <= std::max(tol, 3 * se)) {
    result.verdict = Verdict::Satisfied;
  } else if (resid > tol + 3 * se) {
    result.verdict = Verdict::Violated;
  } else {
    result.verdict = Verdict::Inconclusive;
  }
  return result;
}

}  // namespace graphonlab
