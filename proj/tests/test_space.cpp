#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include <nlohmann/json.hpp>

#include "greedytk/space.hpp"

using namespace greedytk;

namespace {

Vector random_vector(Rng& rng, int dim, double span = 2.0) {
  Vector x = zeros(dim);
  for (auto& v : x) v = rng.sign() * span * rng.real();
  return x;
}

}  // namespace

TEST_CASE("polyhedral example space: frozen norm values (n = 3)") {
  SpaceSpec s = example_space(3);
  REQUIRE(s.dim == 12);
  CHECK(norm(s, indicator(12, range_set(1, 6))) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(norm(s, indicator(12, range_set(7, 12))) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(norm(s, indicator(12, range_set(6, 11))) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(norm(s, unit_vector(12, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("example space n=2 family rows") {
  SpaceSpec s = example_space(2);
  REQUIRE(s.dim == 4);
  auto has_row = [&](const IndexSet& row) {
    for (const auto& r : s.family)
      if (r == row) return true;
    return false;
  };
  // level-2 rows: 2-subsets of 1-based [2,4] = 0-based {1,2,3}
  CHECK(has_row({1, 2}));
  CHECK(has_row({1, 3}));
  CHECK(has_row({2, 3}));
  // singleton coverage for position 1 (otherwise only implied by no row)
  CHECK(norm(s, unit_vector(4, 0)) == doctest::Approx(1.0));
}

TEST_CASE("lp norms") {
  SpaceSpec l2 = lp_space(4, 2.0);
  CHECK(norm(l2, unit_vector(4, 0)) == doctest::Approx(1.0));
  CHECK(norm(l2, Vector{3, 4, 0, 0}) == doctest::Approx(5.0));
  SpaceSpec l1 = lp_space(3, 1.0);
  CHECK(norm(l1, Vector{1, -2, 3}) == doctest::Approx(6.0));
  SpaceSpec linf = lp_space(3, std::numeric_limits<double>::infinity());
  CHECK(norm(linf, Vector{1, -2, 0.5}) == doctest::Approx(2.0));
  SpaceSpec w = weighted_l1_space({1, 2, 3});
  CHECK(norm(w, Vector{1, 1, -1}) == doctest::Approx(6.0));
}

TEST_CASE("dual norm: frozen example values") {
  SpaceSpec s = example_space(3);
  CHECK(dual_norm(s, indicator(12, range_set(7, 12))) == doctest::Approx(1.0).epsilon(1e-9));
  // LP-oracle value frozen before the build: exactly 3.5 (>= 3 as required).
  CHECK(dual_norm(s, indicator(12, range_set(1, 6))) == doctest::Approx(3.5).epsilon(1e-9));
  SpaceSpec l2 = lp_space(4, 2.0);
  CHECK(dual_norm(l2, unit_vector(4, 0)) == doctest::Approx(1.0));
  SpaceSpec l1 = lp_space(3, 1.0);
  CHECK(dual_norm(l1, Vector{1, -2, 0.5}) == doctest::Approx(2.0));  // sup norm
}

TEST_CASE("dual witness attains the value inside the unit ball") {
  Rng rng(7);
  for (const SpaceSpec& s : {example_space(2), lp_space(5, 3.0), lp_space(5, 1.0)}) {
    for (int t = 0; t < 20; ++t) {
      Vector f = random_vector(rng, s.dim);
      DualResult d = dual_norm_witness(s, f);
      CHECK(norm(s, d.witness) <= 1.0 + 1e-9);
      double pairing = 0.0;
      for (int i = 0; i < s.dim; ++i)
        pairing += f[static_cast<std::size_t>(i)] * d.witness[static_cast<std::size_t>(i)];
      CHECK(pairing == doctest::Approx(d.value).epsilon(1e-8));
      // duality consistency against random x
      Vector x = random_vector(rng, s.dim);
      double px = 0.0;
      for (int i = 0; i < s.dim; ++i)
        px += f[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      CHECK(px <= d.value * norm(s, x) * (1 + 1e-9) + 1e-12);
    }
  }
}

TEST_CASE("norm axioms on random vectors") {
  Rng rng(11);
  for (const SpaceSpec& s : {example_space(3), lp_space(6, 2.5), weighted_l1_space({1, 2, 3, 4}),
                             dual_of(example_space(2))}) {
    for (int t = 0; t < 25; ++t) {
      Vector x = random_vector(rng, s.dim);
      Vector y = random_vector(rng, s.dim);
      const double lam = rng.sign() * 3.0 * rng.real();
      const double nx = norm(s, x);
      CHECK(norm(s, scale(x, lam)) ==
            doctest::Approx(std::abs(lam) * nx).epsilon(1e-12));
      CHECK(norm(s, add(x, y)) <= nx + norm(s, y) + 1e-12);
    }
    CHECK(norm(s, zeros(s.dim)) == 0.0);
    CHECK(norm(s, unit_vector(s.dim, 0)) > 0.0);
  }
}

TEST_CASE("1-unconditionality: sign flips and zeroing never increase the norm") {
  Rng rng(13);
  SpaceSpec s = example_space(3);
  for (int t = 0; t < 50; ++t) {
    Vector x = random_vector(rng, s.dim);
    const double nx = norm(s, x);
    const int i = rng.below(s.dim);
    Vector flipped = x;
    flipped[static_cast<std::size_t>(i)] = -flipped[static_cast<std::size_t>(i)];
    CHECK(norm(s, flipped) == doctest::Approx(nx).epsilon(1e-12));
    Vector zeroed = x;
    zeroed[static_cast<std::size_t>(i)] = 0.0;
    CHECK(norm(s, zeroed) <= nx + 1e-12);
  }
}

TEST_CASE("right-spreading monotonicity of the example norm") {
  Rng rng(17);
  SpaceSpec s = example_space(3);
  for (int t = 0; t < 50; ++t) {
    // pick k support positions, then a right-spread of them
    const int k = 1 + rng.below(5);
    IndexSet supp, spread;
    int pos = 0, pos2 = 0;
    for (int j = 0; j < k; ++j) {
      pos += 1 + rng.below(2);
      pos2 = std::max(pos2 + 1 + rng.below(2), pos);  // spread moves right
      if (pos2 >= s.dim) break;
      supp.push_back(pos - 1);
      spread.push_back(pos2);
    }
    Vector x = zeros(s.dim), y = zeros(s.dim);
    for (std::size_t j = 0; j < supp.size(); ++j) {
      const double c = rng.sign() * (0.5 + rng.real());
      x[static_cast<std::size_t>(supp[j])] = c;
      y[static_cast<std::size_t>(spread[j])] = c;
    }
    CHECK(norm(s, x) <= norm(s, y) + 1e-12);
  }
}

TEST_CASE("basis constant") {
  CHECK(basis_constant(lp_space(5, 1.0)).value == doctest::Approx(1.0));
  CHECK(basis_constant(lp_space(5, 1.0)).exact);
  ConstantEstimate ex = basis_constant(example_space(3));
  CHECK(ex.value == doctest::Approx(1.0));
  CHECK(ex.exact);
  ConstantEstimate sampled = basis_constant(lp_space(5, 2.0), 100, 3, /*force_sampling=*/true);
  CHECK_FALSE(sampled.exact);
  CHECK(sampled.value >= 1.0 - 1e-12);
}

TEST_CASE("space serialization round trip") {
  for (const SpaceSpec& s :
       {lp_space(6, 2.0), lp_space(4, std::numeric_limits<double>::infinity()),
        weighted_l1_space({1, 2, 3}), example_space(2), dual_of(example_space(2)),
        polyhedral_abs_space(4, {{0, 1}, {2, 3}})}) {
    CHECK(load_space(save_space(s)) == s);
  }
  // file round trip
  SpaceSpec s = example_space(2);
  const std::string path = "space_roundtrip.json";
  save_space_file(s, path);
  CHECK(load_space_file(path) == s);
  std::remove(path.c_str());
}

TEST_CASE("constructor validation") {
  CHECK_THROWS(lp_space(3, 0.5));
  CHECK_THROWS(weighted_l1_space({1, -2}));
  CHECK_THROWS(example_space(1));
  CHECK_THROWS(example_space(4));  // dim 48 > cap 24
  CHECK_THROWS(dual_of(dual_of(example_space(2))));
}
