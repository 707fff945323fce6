#include <doctest.h>

#include <cmath>
#include <vector>

#include "graphonlab/forcing.hpp"
#include "graphonlab/graphon.hpp"

using namespace graphonlab;

namespace {

const double a = wr::kA;

EvalOptions budget_opts(std::uint64_t budget, std::uint64_t seed) {
  EvalOptions o;
  o.budget = budget;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("partition constraints hold exactly on matching step graphons") {
  // 2-part step graphon whose row degrees match its own partition
  Graphon w = step_graphon({0.25, 0.75}, {{0.8, 0.4}, {0.4, 0.2}});
  REQUIRE(w.partition() != nullptr);
  auto constraints = partition_constraints(*w.partition());
  REQUIRE(constraints.size() == 3);
  for (const auto& c : constraints) {
    CheckResult r = check_constraint(c, w, 1e-9);
    CHECK(r.verdict == Verdict::Satisfied);
  }
}

TEST_CASE("partition constraints reject mismatched degrees") {
  PartitionSpec spec({0.5, 0.5}, {0.3, 0.7});
  auto constraints = partition_constraints(spec);
  // constant(1/2): every degree is 1/2, neither 0.3 nor 0.7
  Graphon w = constant_graphon(0.5);
  CheckResult first = check_constraint(constraints[0], w, 1e-6);
  CHECK(first.verdict == Verdict::Violated);
  // degree matches a 1-part spec
  PartitionSpec single({1.0}, {0.5});
  for (const auto& c : partition_constraints(single)) {
    CHECK(check_constraint(c, w, 1e-9).verdict == Verdict::Satisfied);
  }
}

TEST_CASE("partition constraints of the Rademacher spec hold on W_R") {
  Graphon w = rademacher_graphon();
  auto constraints = partition_constraints(wr_partition_spec());
  REQUIRE(constraints.size() == 9);
  for (const auto& c : constraints) {
    CheckResult r = check_constraint(c, w, 1e-8, budget_opts(30'000, 5));
    CHECK(r.verdict == Verdict::Satisfied);
  }
}

TEST_CASE("pseudorandom constraints on the C'-D block of W_R") {
  Graphon w = rademacher_graphon();
  auto constraints = pseudorandom_constraints(wr::CPrime, wr::D, 0.8, wr_partition_spec());
  REQUIRE(constraints.size() == 3);
  for (const auto& c : constraints) {
    CheckResult r = check_constraint(c, w, 1e-3, budget_opts(40'000, 3));
    CHECK(r.verdict == Verdict::Satisfied);
  }
  CHECK_THROWS_AS(pseudorandom_constraints(1, 1, 0.5, wr_partition_spec()), error);
}

TEST_CASE("pseudorandom constraints hold for constant cross blocks and fail for the half-graphon block") {
  // two-part graphon, cross block constant p
  Graphon flat = step_graphon({0.5, 0.5}, {{0.3, 0.45}, {0.45, 0.7}});
  auto cs = pseudorandom_constraints(0, 1, 0.45, *flat.partition());
  for (const auto& c : cs) {
    CHECK(check_constraint(c, flat, 1e-6).verdict == Verdict::Satisfied);
  }

  // half-graphon cross block with mean 1/2: the cherry constraint H2 = p^2
  // fails because the common-neighborhood second moment is not constant
  PartitionSpec spec({0.5, 0.5}, {0.4, 0.6});
  auto W = [](double x, double y) {
    bool x1 = x < 0.5, y1 = y < 0.5;
    if (x1 && y1) return 0.3;
    if (!x1 && !y1) return 0.7;
    double u = x1 ? 2 * x : 2 * y;
    double v = x1 ? 2 * y - 1 : 2 * x - 1;
    return u + v >= 1.0 ? 1.0 : 0.0;
  };
  AxisHints hints;
  hints.add_point(0.5);
  Graphon cross = kernel_graphon(W, "half-cross", spec, hints);
  auto cs2 = pseudorandom_constraints(0, 1, 0.5, spec);
  // H = p is an a.s. constraint: the slice mass u is not a.e. 1/2 even
  // though its mean is p, so the whole triple fails, the cherry included
  CheckResult edge = check_constraint(cs2[0], cross, 1e-3, budget_opts(60'000, 8));
  CHECK(edge.verdict == Verdict::Violated);
  CheckResult cherry = check_constraint(cs2[2], cross, 1e-3, budget_opts(60'000, 8));
  CHECK(cherry.verdict == Verdict::Violated);  // E[(min(u,u') - 1/4)^2] = 1/16
}

TEST_CASE("gadget constraints rescale base densities into a part") {
  PartitionSpec spec = wr_partition_spec();
  // the edge density of the half graphon is 1/2; inside B it rescales to
  // a^2 / 2
  std::vector<std::pair<Graph, double>> base = {{Graph::single_edge(), 0.5}};
  auto cs = gadget_constraints(base, wr::B, spec);
  REQUIRE(cs.size() == 1);
  Graphon w = rademacher_graphon();
  CHECK(check_constraint(cs[0], w, 1e-6).verdict == Verdict::Satisfied);

  // triangle density in the half graphon is 1/4; B' carries the half graphon
  std::vector<std::pair<Graph, double>> base2 = {{Graph::single_edge(), 0.5}, {Graph::triangle(), 0.25}};
  auto cs2 = gadget_constraints(base2, wr::BPrime, spec);
  REQUIRE(cs2.size() == 2);
  for (const auto& c : cs2) {
    CheckResult r = check_constraint(c, w, 1e-3, budget_opts(200'000, 5));
    CHECK(r.verdict == Verdict::Satisfied);
  }

  CHECK(gadget_constraints({}, 0, spec).empty());
}

TEST_CASE("zero constraints of W_R") {
  auto cs = zero_constraints_wr(wr_partition_spec());
  CHECK(cs.size() == 16);
  Graphon w = rademacher_graphon();
  for (const auto& c : cs) {
    CHECK(check_constraint(c, w, 1e-8).verdict == Verdict::Satisfied);
  }
  // overwrite the C x D block and the (C, D) constraint flips
  Graphon bad = perturb_block(w, wr::part_start(wr::C), wr::part_start(wr::CPrime), wr::part_start(wr::D), 1.0, 0.1);
  int violated = 0;
  for (const auto& c : cs) {
    if (check_constraint(c, bad, 1e-8).verdict == Verdict::Violated) {
      ++violated;
      CHECK(c.name == "zero:CxD");
    }
  }
  CHECK(violated == 1);
  CHECK_THROWS_AS(zero_constraints_wr(PartitionSpec({0.5, 0.5}, {0.1, 0.2})), error);
}

TEST_CASE("verify_wr_identities passes on the built-in kernel") {
  Graphon w = rademacher_graphon();
  WrReport report = verify_wr_identities(w, budget_opts(100'000, 2));
  CHECK(report.items.size() >= 25);
  for (const auto& item : report.items) {
    INFO(item.name, " target=", item.target, " est=", item.estimate.value);
    CHECK(item.verdict == Verdict::Satisfied);
  }
  CHECK(report.all_satisfied());
  // spot targets: eq2 at k=2, t=0.6 is 0.15/2.25
  bool found = false;
  for (const auto& item : report.items) {
    if (item.name == "eq2:k=2") {
      found = true;
      CHECK(item.target == doctest::Approx(0.15 / 2.25));
      CHECK(item.estimate.value == doctest::Approx(0.15 / 2.25).epsilon(1e-6));
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(verify_wr_identities(half_graphon()), error);
}

TEST_CASE("every single-block perturbation flips a degree identity") {
  Graphon w = rademacher_graphon();
  for (int p = 0; p < wr::kPartCount; ++p) {
    for (int q = p; q < wr::kPartCount; ++q) {
      Graphon bad = perturb_block(w, wr::part_start(p), wr::part_start(p) + wr::part_width(p),
                                  wr::part_start(q), wr::part_start(q) + wr::part_width(q), 0.05);
      WrReport report = verify_wr_identities(bad, budget_opts(10'000, 3), "degree");
      INFO("block ", wr::part_name(p), " x ", wr::part_name(q));
      CHECK_FALSE(report.all_satisfied());
    }
  }
}

TEST_CASE("negative block perturbations also flip identities") {
  Graphon w = rademacher_graphon();
  // -0.05 probes on blocks that carry positive mass
  std::vector<std::pair<int, int>> blocks = {{wr::A, wr::A}, {wr::C, wr::C}, {wr::CPrime, wr::D},
                                             {wr::APrime, wr::C}, {wr::B, wr::B}};
  for (auto [p, q] : blocks) {
    Graphon bad = perturb_block(w, wr::part_start(p), wr::part_start(p) + wr::part_width(p),
                                wr::part_start(q), wr::part_start(q) + wr::part_width(q), -0.05);
    WrReport report = verify_wr_identities(bad, budget_opts(10'000, 3), "degree");
    INFO("block ", wr::part_name(p), " x ", wr::part_name(q));
    CHECK_FALSE(report.all_satisfied());
  }
}
