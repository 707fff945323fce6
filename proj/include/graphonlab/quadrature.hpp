#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "graphonlab/estimate.hpp"
#include "graphonlab/graphon.hpp"

namespace graphonlab {

// Composite midpoint rule over [lo, hi] whose cells honor structure hints:
// explicit jump points become cell boundaries and refinement regions are
// subdivided on their own aligned grid. Integrands that are piecewise
// constant (or linear) between hint boundaries integrate exactly.
class Grid1D {
 public:
  struct Segment {
    double lo, hi;
    double anchor;  // subcells boundaries sit at anchor + j * step
    double step;
  };

  // When the hints are complete and sparse_if_complete is set, the uniform
  // background grid is thinned; the hint structure already guarantees
  // exactness.
  static Grid1D build(double lo, double hi, int base_log2, const AxisHints& hints, bool sparse_if_complete = true);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double length() const { return hi_ - lo_; }
  // Nominal resolution of the uniform background grid.
  double base_step() const { return base_step_; }

  template <typename F>
  void for_each_cell(F&& fn) const {
    for (const Segment& seg : segments_) {
      double pos = seg.lo;
      // first aligned boundary strictly inside the segment
      auto j = static_cast<long long>(std::ceil((seg.lo - seg.anchor) / seg.step - 1e-9));
      while (true) {
        double next = seg.anchor + static_cast<double>(j) * seg.step;
        if (next <= pos + 1e-15) {
          ++j;
          continue;
        }
        if (next >= seg.hi - 1e-15) break;
        fn(0.5 * (pos + next), next - pos);
        pos = next;
        ++j;
      }
      if (seg.hi > pos + 1e-15) fn(0.5 * (pos + seg.hi), seg.hi - pos);
    }
  }

  template <typename F>
  double integrate(F&& fn) const {
    double total = 0.0;
    for_each_cell([&](double mid, double width) { total += width * fn(mid); });
    return total;
  }

  struct Cell {
    double mid, width;
  };
  std::vector<Cell> cells() const;
  std::size_t cell_count() const;

 private:
  double lo_ = 0.0, hi_ = 1.0, base_step_ = 1.0;
  std::vector<Segment> segments_;
};

// Degree of vertex x: integral of W(x, .) over [0,1].
Estimate graphon_degree(const Graphon& w, double x, int grid_log2 = 12);

}  // namespace graphonlab
