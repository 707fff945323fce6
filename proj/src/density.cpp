#include "graphonlab/density.hpp"

#include <algorithm>
#include <cmath>

#include "graphonlab/mc.hpp"

namespace graphonlab {

namespace detail {

double pair_factor(const Graph& g, int u, int v, double wval) { return g.adjacent(u, v) ? wval : 1.0 - wval; }

namespace {

struct Box {
  double lo = 0.0, hi = 1.0;
  double length() const { return hi - lo; }
};

Box vertex_box(int v, const std::vector<int>* parts, const PartitionSpec* spec) {
  if (parts == nullptr) return {};
  int p = (*parts)[static_cast<std::size_t>(v)];
  return {spec->part_start(p), spec->part_end(p)};
}

// Monte Carlo stream id for the free-vertex integrals, fixed so seeds stay
// comparable across engines.
constexpr std::uint64_t kStreamRootedFree = 13;

}  // namespace

Estimate rooted_term_value(const Graph& base, const std::vector<int>& roots, const std::vector<int>* parts,
                           const PartitionSpec* spec, const Graphon& w, std::span<const double> root_coords,
                           const EvalOptions& opts, const AxisHints* shared_root_hints) {
  int n = base.order();
  int m = static_cast<int>(roots.size());
  if (static_cast<int>(root_coords.size()) != m) throw error("rooted density: root coordinate count mismatch");
  if (parts != nullptr && spec == nullptr) throw error("rooted density: decorated term requires a partition");

  std::vector<int> free_verts;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);  // vertex -> root slot
  for (int i = 0; i < m; ++i) owner[static_cast<std::size_t>(roots[static_cast<std::size_t>(i)])] = i;
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] < 0) free_verts.push_back(v);
  }
  int nf = static_cast<int>(free_verts.size());

  double aut = parts != nullptr
                   ? static_cast<double>(automorphism_count(DecoratedGraph(base, roots, *parts)))
                   : static_cast<double>(automorphism_count(RootedGraph(base, roots)));
  double pref = static_cast<double>(factorial(nf)) / aut;

  if (nf == 0) return Estimate::exact(pref);

  // conditional scaling for decorated free vertices
  double scale = 1.0;
  std::vector<Box> boxes;
  for (int f : free_verts) {
    Box b = vertex_box(f, parts, spec);
    boxes.push_back(b);
    if (parts != nullptr) scale /= b.length();
  }

  Method method = opts.method;
  if (method == Method::Auto || method == Method::ExactStep) method = nf <= 2 ? Method::Quadrature : Method::MonteCarlo;
  if (method == Method::Quadrature && nf > 2) {
    throw unsupported_error("rooted density: quadrature supports at most two non-roots");
  }

  if (method == Method::Quadrature && nf == 1) {
    int f = free_verts[0];
    AxisHints local;
    const AxisHints* hints = shared_root_hints;
    if (hints == nullptr) {
      for (int i = 0; i < m; ++i) {
        if (i == 0) local = w.section_hints(root_coords[0]);
        else local.merge(w.section_hints(root_coords[static_cast<std::size_t>(i)]));
      }
      hints = &local;
    }
    Grid1D grid = Grid1D::build(boxes[0].lo, boxes[0].hi, opts.grid_log2, *hints);
    double integral = grid.integrate([&](double y) {
      double prod = 1.0;
      for (int i = 0; i < m; ++i) {
        prod *= pair_factor(base, f, roots[static_cast<std::size_t>(i)],
                            w(y, root_coords[static_cast<std::size_t>(i)]));
      }
      return prod;
    });
    return {pref * scale * integral, 0.0, grid.cell_count(), Method::Quadrature};
  }

  if (method == Method::Quadrature && nf == 2) {
    int f1 = free_verts[0], f2 = free_verts[1];
    AxisHints root_hints;
    if (shared_root_hints != nullptr) {
      root_hints = *shared_root_hints;
    } else {
      for (int i = 0; i < m; ++i) {
        if (i == 0) root_hints = w.section_hints(root_coords[0]);
        else root_hints.merge(w.section_hints(root_coords[static_cast<std::size_t>(i)]));
      }
    }
    AxisHints outer_hints = w.axis_hints();
    outer_hints.merge(root_hints);
    // Drop one grid level per axis to keep the tensor product affordable.
    int log2 = std::max(6, opts.grid_log2 - 3);
    Grid1D outer = Grid1D::build(boxes[0].lo, boxes[0].hi, log2, outer_hints);
    std::uint64_t evals = 0;
    double integral = outer.integrate([&](double y1) {
      double g1 = 1.0;
      for (int i = 0; i < m; ++i) {
        g1 *= pair_factor(base, f1, roots[static_cast<std::size_t>(i)],
                          w(y1, root_coords[static_cast<std::size_t>(i)]));
      }
      AxisHints inner_hints = w.section_hints(y1);
      inner_hints.merge(root_hints);
      Grid1D inner = Grid1D::build(boxes[1].lo, boxes[1].hi, log2, inner_hints);
      evals += inner.cell_count();
      double gi = inner.integrate([&](double y2) {
        double prod = pair_factor(base, f1, f2, w(y1, y2));
        for (int i = 0; i < m; ++i) {
          prod *= pair_factor(base, f2, roots[static_cast<std::size_t>(i)],
                              w(y2, root_coords[static_cast<std::size_t>(i)]));
        }
        return prod;
      });
      return g1 * gi;
    });
    return {pref * scale * integral, 0.0, evals, Method::Quadrature};
  }

  // Monte Carlo over the free vertices, stratified into the part boxes.
  std::vector<double> root_vals(root_coords.begin(), root_coords.end());
  auto boxes_copy = boxes;
  auto free_copy = free_verts;
  Estimate mc = mc_mean(opts.budget, opts.seed, kStreamRootedFree, opts.threads,
                        [&, boxes_copy, free_copy, root_vals](const CounterRng& rng, std::uint64_t s) {
                          std::vector<double> ys(free_copy.size());
                          for (std::size_t j = 0; j < free_copy.size(); ++j) {
                            double u = rng.uniform(s * free_copy.size() + j);
                            ys[j] = boxes_copy[j].lo + boxes_copy[j].length() * u;
                          }
                          double prod = 1.0;
                          for (std::size_t j = 0; j < free_copy.size(); ++j) {
                            int f = free_copy[j];
                            for (int i = 0; i < static_cast<int>(root_vals.size()); ++i) {
                              prod *= pair_factor(base, f, roots[static_cast<std::size_t>(i)],
                                                  w(ys[j], root_vals[static_cast<std::size_t>(i)]));
                            }
                            for (std::size_t j2 = j + 1; j2 < free_copy.size(); ++j2) {
                              prod *= pair_factor(base, f, free_copy[j2], w(ys[j], ys[j2]));
                            }
                          }
                          return prod;
                        });
  double box_measure = 1.0;
  for (const Box& b : boxes) box_measure *= b.length();
  return mc.scaled(pref * scale * box_measure);
}

}  // namespace detail

namespace {

Method resolve_plain_method(const EvalOptions& opts, const Graphon& w, int n) {
  Method m = opts.method;
  if (m == Method::Auto) {
    if (w.step_structure() != nullptr) return Method::ExactStep;
    return n <= 2 ? Method::Quadrature : Method::MonteCarlo;
  }
  if (m == Method::ExactStep && w.step_structure() == nullptr) {
    throw unsupported_error("exact-step method requires a step graphon");
  }
  if (m == Method::Quadrature && n > 2) {
    throw unsupported_error("quadrature supports graphs on at most 2 vertices; use mc");
  }
  return m;
}

// Sum over all part assignments of the vertices for a step graphon.
Estimate exact_step_sum(const Graph& h, const StepStructure& step, const std::vector<int>* forced_parts,
                        double pref) {
  int n = h.order();
  int k = static_cast<int>(step.sizes.size());
  double total = 0.0;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    double term = pref;
    for (int v = 0; v < n && term != 0.0; ++v) {
      int p = forced_parts != nullptr ? (*forced_parts)[static_cast<std::size_t>(v)] : assign[static_cast<std::size_t>(v)];
      term *= step.sizes[static_cast<std::size_t>(p)];
      for (int u = 0; u < v; ++u) {
        int q = forced_parts != nullptr ? (*forced_parts)[static_cast<std::size_t>(u)] : assign[static_cast<std::size_t>(u)];
        term *= detail::pair_factor(h, u, v, step.matrix[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
      }
    }
    total += term;
    if (forced_parts != nullptr) break;
    int v = 0;
    while (v < n && ++assign[static_cast<std::size_t>(v)] == k) {
      assign[static_cast<std::size_t>(v)] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return {total, 0.0, 0, Method::ExactStep};
}

Estimate plain_quadrature(const Graph& h, const Graphon& w, const EvalOptions& opts, double pref) {
  int n = h.order();
  if (n <= 1) return Estimate::exact(1.0);
  Grid1D outer = Grid1D::build(0.0, 1.0, opts.grid_log2, w.axis_hints());
  std::uint64_t evals = 0;
  double integral = outer.integrate([&](double x) {
    Grid1D inner = Grid1D::build(0.0, 1.0, opts.grid_log2, w.section_hints(x));
    evals += inner.cell_count();
    return inner.integrate([&](double y) { return detail::pair_factor(h, 0, 1, w(x, y)); });
  });
  return {pref * integral, 0.0, evals, Method::Quadrature};
}

Estimate plain_mc(const Graph& h, const Graphon& w, const EvalOptions& opts, double pref) {
  int n = h.order();
  Estimate mc = mc_mean(opts.budget, opts.seed, 11, opts.threads, [&](const CounterRng& rng, std::uint64_t s) {
    double xs[kBruteForceCutoff];
    for (int v = 0; v < n; ++v) xs[v] = rng.uniform(s * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v));
    double prod = 1.0;
    for (int v = 0; v < n && prod != 0.0; ++v) {
      for (int u = 0; u < v; ++u) prod *= detail::pair_factor(h, u, v, w(xs[u], xs[v]));
    }
    return prod;
  });
  return mc.scaled(pref);
}

}  // namespace

Estimate graphon_density(const Graph& h, const Graphon& w, const EvalOptions& opts) {
  int n = h.order();
  if (n > kBruteForceCutoff) throw unsupported_error("graphon_density: graph order exceeds cutoff");
  if (n == 0) return Estimate::exact(1.0);
  double pref = static_cast<double>(factorial(n)) / static_cast<double>(automorphism_count(h));
  switch (resolve_plain_method(opts, w, n)) {
    case Method::ExactStep: return exact_step_sum(h, *w.step_structure(), nullptr, pref);
    case Method::Quadrature: return plain_quadrature(h, w, opts, pref);
    default: return plain_mc(h, w, opts, pref);
  }
}

Estimate decorated_density(const DecoratedGraph& h, const Graphon& w, const EvalOptions& opts) {
  const PartitionSpec* spec = w.partition();
  if (spec == nullptr) throw error("decorated_density: graphon carries no partition metadata");
  h.validate_against(*spec);
  if (h.rooted()) throw error("decorated_density: rooted decorated graphs are evaluated via rooted_density");
  const Graph& g = h.graph();
  int n = g.order();
  if (n > kBruteForceCutoff) throw unsupported_error("decorated_density: graph order exceeds cutoff");
  if (n == 0) return Estimate::exact(1.0);
  double pref = static_cast<double>(factorial(n)) / static_cast<double>(automorphism_count(g));

  Method method = opts.method;
  if (method == Method::Auto) {
    const StepStructure* step = w.step_structure();
    if (step != nullptr && step->sizes == spec->sizes) return exact_step_sum(g, *step, &h.parts(), pref);
    method = n <= 2 ? Method::Quadrature : Method::MonteCarlo;
  } else if (method == Method::ExactStep) {
    const StepStructure* step = w.step_structure();
    if (step == nullptr || step->sizes != spec->sizes) {
      throw unsupported_error("decorated_density: exact-step requires a step graphon matching the partition");
    }
    return exact_step_sum(g, *step, &h.parts(), pref);
  }

  auto box = [&](int v) {
    int p = h.parts()[static_cast<std::size_t>(v)];
    return std::pair<double, double>{spec->part_start(p), spec->part_end(p)};
  };

  if (method == Method::Quadrature) {
    if (n > 2) throw unsupported_error("decorated_density: quadrature supports at most 2 vertices; use mc");
    auto [lo0, hi0] = box(0);
    if (n == 1) return Estimate::exact(pref * (hi0 - lo0));
    auto [lo1, hi1] = box(1);
    Grid1D outer = Grid1D::build(lo0, hi0, opts.grid_log2, w.axis_hints());
    std::uint64_t evals = 0;
    double integral = outer.integrate([&](double x) {
      Grid1D inner = Grid1D::build(lo1, hi1, opts.grid_log2, w.section_hints(x));
      evals += inner.cell_count();
      return inner.integrate([&](double y) { return detail::pair_factor(g, 0, 1, w(x, y)); });
    });
    return {pref * integral, 0.0, evals, Method::Quadrature};
  }

  // stratified Monte Carlo: every vertex sampled inside its part box
  double box_measure = 1.0;
  std::vector<std::pair<double, double>> boxes;
  for (int v = 0; v < n; ++v) {
    boxes.push_back(box(v));
    box_measure *= boxes.back().second - boxes.back().first;
  }
  Estimate mc = mc_mean(opts.budget, opts.seed, 12, opts.threads, [&](const CounterRng& rng, std::uint64_t s) {
    double xs[kBruteForceCutoff];
    for (int v = 0; v < n; ++v) {
      double u = rng.uniform(s * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v));
      xs[v] = boxes[static_cast<std::size_t>(v)].first +
              (boxes[static_cast<std::size_t>(v)].second - boxes[static_cast<std::size_t>(v)].first) * u;
    }
    double prod = 1.0;
    for (int v = 0; v < n && prod != 0.0; ++v) {
      for (int u = 0; u < v; ++u) prod *= detail::pair_factor(g, u, v, w(xs[u], xs[v]));
    }
    return prod;
  });
  return mc.scaled(pref * box_measure);
}

double root_weight(const RootedGraph& h, const Graphon& w, std::span<const double> roots) {
  if (static_cast<int>(roots.size()) != h.root_count()) throw error("root_weight: coordinate count mismatch");
  Graph h0 = h.root_graph();
  double c = 1.0;
  for (int i = 0; i < h0.order(); ++i) {
    for (int j = i + 1; j < h0.order(); ++j) {
      c *= detail::pair_factor(h0, i, j, w(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]));
    }
  }
  return c;
}

Estimate rooted_density(const RootedGraph& h, const Graphon& w, std::span<const double> roots,
                        const EvalOptions& opts) {
  if (root_weight(h, w, roots) <= 0.0) {
    throw zero_mass_error("rooted_density: roots induce the root graph with zero probability density");
  }
  return detail::rooted_term_value(h.graph(), h.roots(), nullptr, nullptr, w, roots, opts);
}

Estimate rooted_density(const DecoratedGraph& h, const Graphon& w, std::span<const double> roots,
                        const EvalOptions& opts) {
  const PartitionSpec* spec = w.partition();
  if (spec == nullptr) throw error("rooted_density: graphon carries no partition metadata");
  h.validate_against(*spec);
  if (root_weight(h.rooted_view(), w, roots) <= 0.0) {
    throw zero_mass_error("rooted_density: roots induce the root graph with zero probability density");
  }
  return detail::rooted_term_value(h.graph(), h.roots(), &h.parts(), spec, w, roots, opts);
}

namespace {

std::vector<double> sample_roots_impl(const Graph& h0, const std::vector<std::pair<double, double>>& boxes,
                                      const Graphon& w, RngStream& rng, int max_tries) {
  int m = h0.order();
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<double> xs(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto& b = boxes[static_cast<std::size_t>(i)];
      xs[static_cast<std::size_t>(i)] = b.first + (b.second - b.first) * rng.uniform();
    }
    double c = 1.0;
    for (int i = 0; i < m && c > 0.0; ++i) {
      for (int j = i + 1; j < m; ++j) {
        c *= detail::pair_factor(h0, i, j, w(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]));
      }
    }
    if (c > 0.0 && rng.uniform() < c) return xs;
  }
  throw zero_mass_error("root_measure_sample: acceptance probability too small");
}

}  // namespace

std::vector<double> root_measure_sample(const RootedGraph& h0_spec, const Graphon& w, RngStream& rng, int max_tries) {
  Graph h0 = h0_spec.root_graph();
  std::vector<std::pair<double, double>> boxes(static_cast<std::size_t>(h0.order()), {0.0, 1.0});
  return sample_roots_impl(h0, boxes, w, rng, max_tries);
}

std::vector<double> root_measure_sample(const DecoratedGraph& h0_spec, const Graphon& w, RngStream& rng,
                                        int max_tries) {
  const PartitionSpec* spec = w.partition();
  if (spec == nullptr) throw error("root_measure_sample: graphon carries no partition metadata");
  h0_spec.validate_against(*spec);
  RootedGraph rooted = h0_spec.rooted_view();
  Graph h0 = rooted.root_graph();
  std::vector<std::pair<double, double>> boxes;
  for (int i = 0; i < rooted.root_count(); ++i) {
    int part = h0_spec.parts()[static_cast<std::size_t>(rooted.roots()[static_cast<std::size_t>(i)])];
    boxes.emplace_back(spec->part_start(part), spec->part_end(part));
  }
  return sample_roots_impl(h0, boxes, w, rng, max_tries);
}

}  // namespace graphonlab
