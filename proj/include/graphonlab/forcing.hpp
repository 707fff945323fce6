#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphonlab/expressions.hpp"

namespace graphonlab {

// Partition spec of the built-in Rademacher graphon: eight parts of sizes
// (1,1,1,1,1,2,1,1)/9 with degrees (3, 3.2, 1, 1.2, 1.4, 1.5, 1.8, 1.6)*a.
PartitionSpec wr_partition_spec();

// Degree-partition constraints: prod_i (e1 - d_i) = 0 and, for each j,
// [[prod_{i!=j} (e1 - d_i)]] = a_j prod_{i!=j} (d_j - d_i).
std::vector<Constraint> partition_constraints(const PartitionSpec& spec);

// Three rooted decorated constraints (edge, triangle, cherry) forcing the
// block between parts l and lp to be constant p.
std::vector<Constraint> pseudorandom_constraints(int l, int lp, double p, const PartitionSpec& spec);

// Rescaled all-in-one-part copies of base constraints d(H_i, .) = d_i:
// the decorated version targets a_l^{|H_i|} * d_i.
std::vector<Constraint> gadget_constraints(const std::vector<std::pair<Graph, double>>& base, int l,
                                           const PartitionSpec& spec);

// The sixteen vanishing edge densities of the Rademacher graphon: inside B''
// and D plus the fourteen listed part pairs.
std::vector<Constraint> zero_constraints_wr(const PartitionSpec& spec);

struct IdentityCheck {
  std::string name;
  double target = 0.0;
  Estimate estimate;
  Verdict verdict = Verdict::Inconclusive;
};

struct WrReport {
  std::vector<IdentityCheck> items;
  bool all_satisfied() const;
};

// Numeric verification of the explicitly stated Rademacher graphon
// identities: the degree table, the 1/243 non-edge density on A^2, the
// neighborhood masses |N_{A'}| and |N_A|, the first- and second-moment
// integrals over I_k, and the dyadic block structure of A^2. `filter`
// restricts the run to identities whose name contains it.
WrReport verify_wr_identities(const Graphon& w, const EvalOptions& opts = {}, const std::string& filter = "");

}  // namespace graphonlab
