#pragma once

#include <span>
#include <vector>

#include "graphonlab/estimate.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/quadrature.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

// d(H, W): probability that a W-random graph of order |H| is isomorphic to
// H. Quadrature handles up to two integration dimensions; larger graphs fall
// back to Monte Carlo under Method::Auto.
Estimate graphon_density(const Graph& h, const Graphon& w, const EvalOptions& opts = {});

// Density of a decorated graph: the probability that |H| random vertices
// induce a copy of H whose i-th vertex lies in the part labelling vertex i
// (prefactor |H|! / |Aut(H)| over the part-restricted product integral).
Estimate decorated_density(const DecoratedGraph& h, const Graphon& w, const EvalOptions& opts = {});

// Conditional density of a rooted graph with roots pinned at the given
// coordinates. Throws zero_mass_error when the roots fail to induce the root
// graph with positive probability density.
Estimate rooted_density(const RootedGraph& h, const Graphon& w, std::span<const double> roots,
                        const EvalOptions& opts = {});

// Rooted + decorated: non-roots are conditioned to lie in their parts.
Estimate rooted_density(const DecoratedGraph& h, const Graphon& w, std::span<const double> roots,
                        const EvalOptions& opts = {});

// Probability weight c(x_1..x_m) that the given coordinates induce a labeled
// copy of the root graph of `h`.
double root_weight(const RootedGraph& h, const Graphon& w, std::span<const double> roots);

// One sample of the root measure mu (density c / integral of c) by rejection
// sampling; c <= 1 pointwise. Throws zero_mass_error after max_tries
// rejections.
std::vector<double> root_measure_sample(const RootedGraph& h0_spec, const Graphon& w, RngStream& rng,
                                        int max_tries = 1 << 20);

// Decorated variant: proposals are confined to the root parts.
std::vector<double> root_measure_sample(const DecoratedGraph& h0_spec, const Graphon& w, RngStream& rng,
                                        int max_tries = 1 << 20);

namespace detail {

// Shared engine: integral over the non-root vertices of the edge/non-edge
// product, times (#free)! / |Aut|, with free vertices confined to part boxes
// (and conditioned on them) when parts are present.
Estimate rooted_term_value(const Graph& base, const std::vector<int>& roots, const std::vector<int>* parts,
                           const PartitionSpec* spec, const Graphon& w, std::span<const double> root_coords,
                           const EvalOptions& opts, const AxisHints* shared_root_hints = nullptr);

double pair_factor(const Graph& g, int u, int v, double wval);

}  // namespace detail

}  // namespace graphonlab
