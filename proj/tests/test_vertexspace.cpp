#include <doctest.h>

#include <cmath>
#include <vector>

#include "graphonlab/quadrature.hpp"
#include "graphonlab/rng.hpp"
#include "graphonlab/vertexspace.hpp"

using namespace graphonlab;

namespace {

const double a = wr::kA;

double closed_form_distance(int i, double delta) {
  return ((4 + 2 * delta) * std::ldexp(1.0, -i) + 2 * delta) / 9.0;
}

SectionFunction random_step_section(int blocks, std::uint64_t seed) {
  auto values = std::make_shared<std::vector<double>>();
  CounterRng rng(seed, 40);
  for (int b = 0; b < blocks; ++b) values->push_back(rng.uniform(static_cast<std::uint64_t>(b)));
  AxisHints h;
  for (int b = 0; b <= blocks; ++b) h.add_point(static_cast<double>(b) / blocks);
  h.complete = true;
  int n = blocks;
  return SectionFunction(
      [values, n](double x) {
        int b = std::min(n - 1, static_cast<int>(x * n));
        return (*values)[static_cast<std::size_t>(b)];
      },
      "step-section", h);
}

}  // namespace

TEST_CASE("witness g takes the stated part values") {
  SectionFunction g = witness_g();
  CHECK(g(wr::part_start(wr::APrime) + 0.5 * a) == 1.0);
  CHECK(g(wr::part_start(wr::BDoublePrime) + 0.5 * a) == 1.0);
  CHECK(g(wr::part_start(wr::CPrime) + 0.5 * a) == 1.0);
  CHECK(g(wr::part_start(wr::D) + 0.5 * a) == 0.2);
  CHECK(g(0.5 * a) == 0.0);
  CHECK(g(wr::part_start(wr::C) + a) == 0.0);
}

TEST_CASE("witness g_{i,delta} piecewise values") {
  SectionFunction g = witness_g_i_delta(2, 0.3);
  // block 2 of A is [a/2, 3a/4)
  CHECK(g(0.6 * a) == 1.0);
  CHECK(g(0.3 * a) == 0.0);
  CHECK(g(a + 0.3 * a) == 1.0);   // A' outside block 2
  CHECK(g(a + 0.6 * a) == 0.0);   // A' inside block 2
  // even dyadic block of C at depth 2 carries delta
  CHECK(g(wr::part_start(wr::C) + 0.1 * 2 * a) == 0.3);
  CHECK(g(wr::part_start(wr::C) + 0.3 * 2 * a) == 0.0);
  CHECK(g(wr::part_start(wr::D) + 0.5 * a) == 0.2);
  // C' threshold at 1 - delta
  CHECK(g(wr::part_start(wr::CPrime) + 0.6 * a) == 1.0);
  CHECK(g(wr::part_start(wr::CPrime) + 0.8 * a) == 0.0);
  CHECK_THROWS_AS(witness_g_i_delta(0, 0.5), error);
  CHECK_THROWS_AS(witness_g_i_delta(3, 0.0), error);
  CHECK_THROWS_AS(witness_g_i_delta(3, 1.0), error);
}

TEST_CASE("distance between g_{i,delta} and g matches the closed form") {
  SectionFunction g = witness_g();
  Estimate d = l1_distance(witness_g_i_delta(3, 0.1), g);
  CHECK(d.value == doctest::Approx(0.725 / 9.0).epsilon(1e-9));
  for (int i : {1, 2, 4, 6, 8, 10}) {
    for (double delta : {0.1, 0.25, 0.5}) {
      double dist = l1_distance(witness_g_i_delta(i, delta), g).value;
      CHECK(std::abs(dist - closed_form_distance(i, delta)) < 1e-4);
    }
  }
}

TEST_CASE("l1 distance basics") {
  CHECK(l1_distance(witness_g(), witness_g()).value == 0.0);
  CHECK(l1_distance(SectionFunction::constant(1.0), SectionFunction::constant(0.0)).value ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(l1_distance(witness_g(), witness_g(), 4), error);  // grid below 2^8
}

TEST_CASE("l1 distance is a pseudometric on the witness corpus") {
  std::vector<SectionFunction> corpus = {witness_g(), witness_g_i_delta(2, 0.25), witness_g_i_delta(5, 0.1),
                                         random_step_section(16, 1), random_step_section(64, 2)};
  double tol = 2.0 * std::ldexp(1.0, -12);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      double dij = l1_distance(corpus[i], corpus[j]).value;
      CHECK(dij == l1_distance(corpus[j], corpus[i]).value);  // symmetry is exact
      for (std::size_t k = 0; k < corpus.size(); ++k) {
        double dik = l1_distance(corpus[i], corpus[k]).value;
        double dkj = l1_distance(corpus[k], corpus[j]).value;
        CHECK(dij <= dik + dkj + tol);
      }
    }
  }
}

TEST_CASE("sections of W_R at the witness root points reproduce g_{i,delta}") {
  Graphon w = rademacher_graphon();
  for (auto [i, delta] : std::vector<std::pair<int, double>>{{1, 0.5}, {3, 0.1}, {5, 0.25}, {8, 0.5}}) {
    double y = wr_witness_root_point(i, delta);
    CHECK(wr::part_of(y) == wr::APrime);
    SectionFunction section = w.section(y);
    SectionFunction target = witness_g_i_delta(i, delta);
    double dist = l1_distance(section, target).value;
    CHECK(dist <= 2.0 * std::ldexp(1.0, -12));
  }
}

TEST_CASE("separation bound for distinct indices") {
  CHECK(check_separation(3, 0.1, 5, 0.1));
  CHECK(check_separation(4, 0.5, 7, 0.25));
  CHECK(check_separation(1, 0.9, 2, 0.9));
  CHECK_THROWS_AS(check_separation(3, 0.1, 3, 0.2), error);
  // the actual distance exceeds the bound strictly
  double d = l1_distance(witness_g_i_delta(3, 0.1), witness_g_i_delta(5, 0.1)).value;
  CHECK(d > 0.2 / 18.0);
}

TEST_CASE("packing diagnostic certifies the non-compactness witnesses") {
  PackingDiagnostic diag = packing_diagnostic(1.0 / 64.0, 8);
  CHECK(diag.certified);
  REQUIRE(diag.witnesses.size() == 8);
  CHECK(diag.witnesses.front().index == 7);
  CHECK(diag.witnesses.back().index == 14);
  CHECK(diag.witnesses.front().dist_to_g == doctest::Approx(0.0069716).epsilon(1e-3));
  CHECK(diag.max_dist_to_g <= 1.0 / 64.0);
  CHECK(diag.min_pairwise >= 1.0 / 64.0 / 9.0 - 1e-12);

  PackingDiagnostic coarse = packing_diagnostic(1.0 / 16.0, 4);
  CHECK(coarse.certified);
  CHECK(coarse.witnesses.front().index == 5);

  CHECK(packing_diagnostic(0.01, 0).certified);
  CHECK(packing_diagnostic(0.01, 0).witnesses.empty());
  CHECK_THROWS_AS(packing_diagnostic(0.3, 4), error);
}

TEST_CASE("d_W distance properties") {
  Graphon w = rademacher_graphon();
  SectionFunction f = witness_g_i_delta(3, 0.25);
  SectionFunction g = witness_g();
  CHECK(dw_distance(w, f, f).value == 0.0);
  // |W| <= 1 gives d_W <= L1 on the shared grid
  double dw = dw_distance(w, f, g).value;
  double l1 = l1_distance(f, g, 9).value;
  CHECK(dw <= l1 + 1e-6);
  // constant graphon: d_W(f, g) = p |int (f - g)|
  Graphon c = constant_graphon(0.35);
  SectionFunction s1 = random_step_section(16, 3);
  SectionFunction s2 = random_step_section(16, 4);
  Grid1D grid = Grid1D::build(0.0, 1.0, 9, [&] {
    AxisHints h = s1.hints();
    h.merge(s2.hints());
    return h;
  }(), false);
  double integral = grid.integrate([&](double x) { return s1(x) - s2(x); });
  CHECK(dw_distance(c, s1, s2).value == doctest::Approx(0.35 * std::abs(integral)).epsilon(1e-6));
}
