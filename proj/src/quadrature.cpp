#include "graphonlab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace graphonlab {

Grid1D Grid1D::build(double lo, double hi, int base_log2, const AxisHints& hints, bool sparse_if_complete) {
  if (!(lo < hi)) throw error("Grid1D: empty interval");
  Grid1D g;
  g.lo_ = lo;
  g.hi_ = hi;
  if (hints.complete && sparse_if_complete) base_log2 = std::min(base_log2, 4);
  double base_step = (hi - lo) / std::ldexp(1.0, std::max(0, base_log2));
  g.base_step_ = base_step;

  std::vector<double> nodes;
  nodes.push_back(lo);
  nodes.push_back(hi);
  for (double p : hints.points) {
    if (p > lo && p < hi) nodes.push_back(p);
  }
  for (const auto& r : hints.refinements) {
    if (r.lo > lo && r.lo < hi) nodes.push_back(r.lo);
    if (r.hi > lo && r.hi < hi) nodes.push_back(r.hi);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end(), [](double a, double b) { return std::abs(a - b) < 1e-15; }),
              nodes.end());

  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    double s = nodes[i], e = nodes[i + 1];
    if (e - s < 1e-15) continue;
    // Finest refinement covering this span wins; its grid stays aligned to
    // the refinement anchor and is subdivided further to reach base_step.
    double anchor = s;
    double step = base_step;
    bool refined = false;
    for (const auto& r : hints.refinements) {
      if (s >= r.lo - 1e-15 && e <= r.hi + 1e-15 && r.levels >= 0) {
        double rstep = (r.hi - r.lo) / std::ldexp(1.0, r.levels);
        if (!refined || rstep < step) {
          refined = true;
          anchor = r.lo;
          step = rstep;
        }
      }
    }
    if (refined && step > base_step) {
      // stay on the refinement lattice while matching the base resolution
      int extra = static_cast<int>(std::ceil(std::log2(step / base_step)));
      step = step / std::ldexp(1.0, extra);
    }
    g.segments_.push_back({s, e, anchor, step});
  }
  return g;
}

std::vector<Grid1D::Cell> Grid1D::cells() const {
  std::vector<Cell> out;
  for_each_cell([&](double mid, double width) { out.push_back({mid, width}); });
  return out;
}

std::size_t Grid1D::cell_count() const {
  std::size_t n = 0;
  for_each_cell([&](double, double) { ++n; });
  return n;
}

Estimate graphon_degree(const Graphon& w, double x, int grid_log2) {
  if (!(x >= 0.0 && x <= 1.0)) throw error("graphon_degree: coordinate outside [0,1]");
  Grid1D grid = Grid1D::build(0.0, 1.0, grid_log2, w.section_hints(x));
  double value = grid.integrate([&](double y) { return w(x, y); });
  return {value, 0.0, grid.cell_count(), Method::Quadrature};
}

}  // namespace graphonlab
