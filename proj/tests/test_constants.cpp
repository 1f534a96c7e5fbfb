#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greedytk/constants.hpp"
#include "greedytk/errors.hpp"
#include "greedytk/greedy.hpp"

using namespace greedytk;

TEST_CASE("fundamental function") {
  CHECK(fundamental_function(lp_space(6, 2.0), 4) == doctest::Approx(2.0));
  SpaceSpec ex = example_space(3);
  CHECK(fundamental_function(ex, 6) == doctest::Approx(6.0));
  CHECK(fundamental_function(ex, 1) == doctest::Approx(1.0));
  // subadditivity and the (m/n) lower bound
  std::vector<double> phi(static_cast<std::size_t>(ex.dim) + 1, 0.0);
  for (int n = 1; n <= ex.dim; ++n) phi[static_cast<std::size_t>(n)] = fundamental_function(ex, n);
  for (int a = 1; a <= ex.dim; ++a) {
    for (int b = 1; a + b <= ex.dim; ++b)
      CHECK(phi[static_cast<std::size_t>(a + b)] <=
            phi[static_cast<std::size_t>(a)] + phi[static_cast<std::size_t>(b)] + 1e-12);
    for (int n = a; n <= ex.dim; ++n)
      CHECK(phi[static_cast<std::size_t>(a)] >=
            (static_cast<double>(a) / n) * phi[static_cast<std::size_t>(n)] - 1e-12);
  }
  // monotone nondecreasing
  for (int n = 1; n < ex.dim; ++n)
    CHECK(phi[static_cast<std::size_t>(n)] <= phi[static_cast<std::size_t>(n + 1)] + 1e-12);
}

TEST_CASE("democratic constants") {
  CHECK(democratic_constant(lp_space(6, 1.0), 4).value == doctest::Approx(1.0));

  SpaceSpec ex = example_space(3);
  ConstantEstimate g = democratic_constant(ex, 6);
  CHECK(g.value >= 3.0 - 1e-12);
  CHECK(g.exact);
  // the documented witness pair attains ratio 3
  const double ratio = norm(ex, indicator(12, range_set(7, 12))) /
                       norm(ex, indicator(12, range_set(1, 6)));
  CHECK(ratio == doctest::Approx(3.0));
  // returned witness reproduces the value
  CHECK(norm(ex, indicator(12, g.witness_a)) / norm(ex, indicator(12, g.witness_b)) ==
        doctest::Approx(g.value).epsilon(1e-9));

  ConstantEstimate gd = democratic_constant(dual_of(ex), 6);
  CHECK(gd.value >= 3.0 - 1e-9);
}

TEST_CASE("conservative and reverse conservative constants") {
  SpaceSpec ex = example_space(3);
  CHECK(conservative_constant(ex, 6).value == doctest::Approx(1.0));
  CHECK(reverse_conservative_constant(dual_of(ex), 6).value == doctest::Approx(1.0));
  CHECK(conservative_constant(lp_space(6, 2.0), 4).value == doctest::Approx(1.0));
  CHECK(reverse_conservative_constant(lp_space(6, 2.0), 4).value == doctest::Approx(1.0));
  // increasing weights: reverse direction sees the big/small ratio
  SpaceSpec w = weighted_l1_space({1, 2, 3, 4});
  ConstantEstimate gr = reverse_conservative_constant(w, 2);
  CHECK(gr.value == doctest::Approx(4.0));  // ||e_4|| / ||e_1||
  CHECK(conservative_constant(w, 2).value == doctest::Approx(1.0));  // clamped floor
}

TEST_CASE("lattice of constants: democratic dominates sided, crd upper bound") {
  for (const SpaceSpec& s : {example_space(3), lp_space(8, 1.5), weighted_l1_space({1, 2, 3, 4})}) {
    const int cap = std::min(4, s.dim);
    const double gamma = democratic_constant(s, cap).value;
    const double gc = conservative_constant(s, cap).value;
    const double gr = reverse_conservative_constant(s, cap).value;
    const double gp = std::max(gc, gr);
    CHECK(gamma >= gp - 1e-9);
    CHECK(gamma <= gp * 3.0 + 2.0 + 1e-9);  // K_b = 1 for absolute norms
  }
}

TEST_CASE("quasi-greedy constant") {
  auto corpus = make_corpus(12, 50, 3);
  ConstantEstimate k = quasi_greedy_constant(example_space(3), corpus);
  CHECK(k.value == doctest::Approx(1.0));
  CHECK(k.exact);
}

TEST_CASE("greedy type constants") {
  SpaceSpec l1 = lp_space(6, 1.0);
  auto corpus = make_corpus(6, 200, 5);
  // greedy basis: G_m is a best projection, so the almost-greedy ratio is 1
  ConstantEstimate ag = greedy_type_constant(l1, GreedyKind::AlmostGreedy, corpus);
  CHECK(ag.value == doctest::Approx(1.0).epsilon(1e-9));

  SpaceSpec ex = example_space(3);
  auto ex_corpus = make_corpus(12, 100, 5);
  ConstantEstimate qc = greedy_type_constant(ex, GreedyKind::PartiallyGreedy, ex_corpus);
  CHECK(qc.value <= 10.0 + 1e-9);  // proof bound with K = Gamma_c = 1
  CHECK(qc.value >= 0.0);

  // tail-normalized variant reported separately, finite
  ConstantEstimate tail = greedy_type_constant(ex, GreedyKind::TailPartiallyGreedy, ex_corpus);
  CHECK(std::isfinite(tail.value));

  CHECK_THROWS(greedy_type_constant(l1, GreedyKind::AlmostGreedy, {}));
}

TEST_CASE("corpus is deterministic and dimension-correct") {
  auto a = make_corpus(8, 40, 9);
  auto b = make_corpus(8, 40, 9);
  CHECK(a == b);
  CHECK(a.size() == 40);
  for (const auto& x : a) {
    CHECK(static_cast<int>(x.size()) == 8);
    CHECK(all_finite(x));
  }
  CHECK(make_corpus(8, 40, 10) != a);
}
