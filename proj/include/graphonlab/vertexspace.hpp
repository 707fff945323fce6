#pragma once

#include <vector>

#include "graphonlab/estimate.hpp"
#include "graphonlab/graphon.hpp"

namespace graphonlab {

// The limit section g: 1 on A' u B'' u C', 0.2 on D, 0 elsewhere.
SectionFunction witness_g();

// The witness family g_{i,delta}; thresholds on B', B'', C' are read in
// part-local fraction-of-part coordinates.
SectionFunction witness_g_i_delta(int i, double delta);

// Vertex of the Rademacher graphon whose section equals g_{i,delta}
// pointwise: the point of A' at local fraction 1 - (1+delta) 2^-i.
double wr_witness_root_point(int i, double delta);

// integral of |f - g| by the midpoint rule on a grid refined at both
// functions' breakpoints (piecewise-constant witnesses integrate exactly)
Estimate l1_distance(const SectionFunction& f, const SectionFunction& g, int grid_log2 = 12);

// Numerically confirms ||g_{i,delta} - g_{i',delta'}||_1 > (delta+delta')/18
// for i != i'.
bool check_separation(int i, double delta, int i_prime, double delta_prime, int grid_log2 = 12);

struct PackingWitness {
  int index = 0;
  double delta = 0.0;
  double dist_to_g = 0.0;
};

struct PackingDiagnostic {
  double eps = 0.0;
  bool certified = false;
  double max_dist_to_g = 0.0;
  double min_pairwise = 0.0;
  std::vector<PackingWitness> witnesses;
};

// `count` witnesses g_{i,eps} with i > log2(1/eps), each certified to lie
// within eps of g while staying pairwise at least eps/9 apart: an arbitrarily
// large (eps/9)-separated set inside the eps-ball around g.
PackingDiagnostic packing_diagnostic(double eps, int count, int grid_log2 = 12);

// d_W(f, g) = int_x | int_y W(x,y)(f(y)-g(y)) dy | dx. The inner grid matches
// the grid used by l1_distance, so d_W <= ||f-g||_1 holds numerically.
Estimate dw_distance(const Graphon& w, const SectionFunction& f, const SectionFunction& g, int grid_log2 = 9);

}  // namespace graphonlab
