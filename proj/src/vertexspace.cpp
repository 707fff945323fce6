#include "graphonlab/vertexspace.hpp"

#include <algorithm>
#include <cmath>

#include "graphonlab/quadrature.hpp"

namespace graphonlab {

namespace {

AxisHints part_boundary_hints() {
  AxisHints h;
  for (int p = 0; p < wr::kPartCount; ++p) h.add_point(wr::part_start(p));
  h.add_point(1.0);
  h.complete = true;
  return h;
}

}  // namespace

SectionFunction witness_g() {
  using namespace wr;
  auto f = [](double x) {
    int p = part_of(x);
    if (p == APrime || p == BDoublePrime || p == CPrime) return 1.0;
    if (p == D) return 0.2;
    return 0.0;
  };
  return SectionFunction(f, "witness:g", part_boundary_hints());
}

SectionFunction witness_g_i_delta(int i, double delta) {
  using namespace wr;
  if (i < 1) throw error("witness_g_i_delta: i must be a positive integer");
  if (!(delta > 0.0 && delta < 1.0)) throw error("witness_g_i_delta: delta must lie in (0,1)");
  const double a = kA;
  double b_threshold = (1.0 + delta) * std::ldexp(1.0, -i);
  auto f = [i, delta, b_threshold, a](double x) {
    int p = part_of(x);
    double t = local(x, p);
    switch (p) {
      case A: return dyadic_index(t / a) == i ? 1.0 : 0.0;
      case APrime: return dyadic_index(t / a) != i ? 1.0 : 0.0;
      case BPrime: return t / a <= b_threshold ? 1.0 : 0.0;
      case BDoublePrime: return t / a <= 1.0 - b_threshold ? 1.0 : 0.0;
      case C: {
        auto block = static_cast<long long>(std::floor(std::ldexp(t / (2 * a), i)));
        return (block & 1) == 0 ? delta : 0.0;
      }
      case CPrime: return t / a <= 1.0 - delta ? 1.0 : 0.0;
      case D: return 0.2;
      default: return 0.0;
    }
  };
  AxisHints h = part_boundary_hints();
  // block i boundaries inside A and A'
  for (int part : {A, APrime}) {
    double start = part_start(part);
    h.add_point(start + a * (1.0 - std::ldexp(1.0, 1 - i)));
    h.add_point(start + a * (1.0 - std::ldexp(1.0, -i)));
  }
  h.add_point(part_start(BPrime) + a * b_threshold);
  h.add_point(part_start(BDoublePrime) + a * (1.0 - b_threshold));
  h.refinements.push_back({part_start(C), part_start(C) + 2 * a, std::min(i, 26)});
  h.add_point(part_start(CPrime) + a * (1.0 - delta));
  return SectionFunction(f, "witness:g_{" + std::to_string(i) + "," + std::to_string(delta) + "}", h);
}

double wr_witness_root_point(int i, double delta) {
  if (i < 1) throw error("wr_witness_root_point: i must be a positive integer");
  if (!(delta > 0.0 && delta < 1.0)) throw error("wr_witness_root_point: delta must lie in (0,1)");
  return wr::part_start(wr::APrime) + wr::kA * (1.0 - (1.0 + delta) * std::ldexp(1.0, -i));
}

Estimate l1_distance(const SectionFunction& f, const SectionFunction& g, int grid_log2) {
  if (grid_log2 < 8) throw error("l1_distance: grid resolution must be at least 2^8");
  AxisHints hints = f.hints();
  hints.merge(g.hints());
  Grid1D grid = Grid1D::build(0.0, 1.0, grid_log2, hints, /*sparse_if_complete=*/false);
  std::uint64_t cells = 0;
  double total = 0.0;
  grid.for_each_cell([&](double mid, double width) {
    total += width * std::abs(f(mid) - g(mid));
    ++cells;
  });
  return {total, 0.0, cells, Method::Quadrature};
}

bool check_separation(int i, double delta, int i_prime, double delta_prime, int grid_log2) {
  if (i == i_prime) throw error("check_separation: indices must differ");
  SectionFunction f = witness_g_i_delta(i, delta);
  SectionFunction g = witness_g_i_delta(i_prime, delta_prime);
  double dist = l1_distance(f, g, grid_log2).value;
  return dist > (delta + delta_prime) / 18.0;
}

PackingDiagnostic packing_diagnostic(double eps, int count, int grid_log2) {
  if (!(eps > 0.0 && eps < 0.25)) throw error("packing_diagnostic: eps must lie in (0, 1/4)");
  if (count < 0) throw error("packing_diagnostic: count must be non-negative");
  PackingDiagnostic diag;
  diag.eps = eps;
  diag.certified = true;
  diag.min_pairwise = 0.0;
  int first = static_cast<int>(std::floor(std::log2(1.0 / eps))) + 1;

  SectionFunction g = witness_g();
  std::vector<SectionFunction> sections;
  for (int j = 0; j < count; ++j) {
    int i = first + j;
    SectionFunction gi = witness_g_i_delta(i, eps);
    double dist = l1_distance(gi, g, grid_log2).value;
    diag.witnesses.push_back({i, eps, dist});
    diag.max_dist_to_g = std::max(diag.max_dist_to_g, dist);
    if (dist > eps) diag.certified = false;
    sections.push_back(std::move(gi));
  }
  bool first_pair = true;
  for (std::size_t p = 0; p < sections.size(); ++p) {
    for (std::size_t q = p + 1; q < sections.size(); ++q) {
      double dist = l1_distance(sections[p], sections[q], grid_log2).value;
      if (first_pair || dist < diag.min_pairwise) diag.min_pairwise = dist;
      first_pair = false;
      if (dist < eps / 9.0 - 1e-12) diag.certified = false;
    }
  }
  return diag;
}

Estimate dw_distance(const Graphon& w, const SectionFunction& f, const SectionFunction& g, int grid_log2) {
  AxisHints inner_hints = f.hints();
  inner_hints.merge(g.hints());
  Grid1D inner = Grid1D::build(0.0, 1.0, grid_log2, inner_hints, /*sparse_if_complete=*/false);
  auto ycells = inner.cells();
  std::vector<double> diff(ycells.size());
  for (std::size_t j = 0; j < ycells.size(); ++j) diff[j] = f(ycells[j].mid) - g(ycells[j].mid);

  Grid1D outer = Grid1D::build(0.0, 1.0, grid_log2, w.axis_hints(), /*sparse_if_complete=*/false);
  std::uint64_t cells = 0;
  double total = outer.integrate([&](double x) {
    double val = 0.0;
    for (std::size_t j = 0; j < ycells.size(); ++j) {
      if (diff[j] != 0.0) val += ycells[j].width * w(x, ycells[j].mid) * diff[j];
    }
    ++cells;
    return std::abs(val);
  });
  return {total, 0.0, cells * ycells.size(), Method::Quadrature};
}

}  // namespace graphonlab
