// Acceptance gate: one pass/fail line per criterion. Exit 0 iff all pass.
// argv[1] = path to the CLI binary (used by the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "greedytk/constants.hpp"
#include "greedytk/errors.hpp"
#include "greedytk/greedy.hpp"
#include "greedytk/space.hpp"
#include "greedytk/verify.hpp"

using namespace greedytk;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(int number, std::string label)
      : number_(number), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      if (first_failure_.empty()) first_failure_ = detail;
    }
  }

  ~Criterion() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1fs", secs);
    std::cout << (ok_ ? "PASS" : "FAIL") << " criterion " << number_ << ": " << label_ << " ("
              << buf << ")";
    if (!ok_) {
      std::cout << " — " << first_failure_;
      ++g_failures;
    }
    std::cout << std::endl;
  }

 private:
  int number_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::string first_failure_;
};

Vector random_vector(Rng& rng, int dim) {
  Vector x = zeros(dim);
  for (auto& v : x) {
    switch (rng.below(4)) {
      case 0:
        v = 0.0;
        break;
      case 1:
        v = rng.sign();  // ties
        break;
      default:
        v = rng.sign() * 2.0 * rng.real();
        break;
    }
  }
  return x;
}

// Independent dense-grid oracle for sigma: per subset, iterated per-coordinate
// grid refinement starting from the spec's coarse grid around zero.
double brute_sigma(const SpaceSpec& space, const Vector& x, int m) {
  const double big = std::max(1.0, max_abs_coeff(x));
  double best = std::numeric_limits<double>::infinity();
  for_each_subset(space.dim, m, [&](const IndexSet& a) {
    std::vector<double> coeffs(a.size(), 0.0);
    auto residual = [&]() {
      Vector y = x;
      for (std::size_t k = 0; k < a.size(); ++k)
        y[static_cast<std::size_t>(a[k])] -= coeffs[k];
      return y;
    };
    // descend on the norm plus a tiny l1 tie-breaker so that plateau-valued
    // (max-type) norms still make per-coordinate progress
    auto value = [&]() {
      const Vector y = residual();
      double l1 = 0.0;
      for (double v : y) l1 += std::abs(v);
      return norm(space, y) + 1e-9 * l1;
    };
    // coarse multiplicative grid first
    const double coarse[] = {-2, -1, -0.5, 0, 0.5, 1, 2};
    for (std::size_t k = 0; k < a.size(); ++k) {
      double best_c = coeffs[k], best_v = value();
      for (double g : coarse) {
        coeffs[k] = g * big;
        const double v = value();
        if (v < best_v) {
          best_v = v;
          best_c = coeffs[k];
        }
      }
      coeffs[k] = best_c;
    }
    // iterated refinement
    double span = 2.0 * big;
    for (int round = 0; round < 14; ++round) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        const double center = coeffs[k];
        double best_c = center, best_v = value();
        for (int g = -20; g <= 20; ++g) {
          coeffs[k] = center + span * g / 20.0;
          const double v = value();
          if (v < best_v) {
            best_v = v;
            best_c = coeffs[k];
          }
        }
        coeffs[k] = best_c;
      }
      span *= 0.4;
    }
    best = std::min(best, norm(space, residual()));
    return true;
  });
  return best;
}

// Dense-grid oracle for the indicator-distance functional (unconstrained).
double brute_dist(const SpaceSpec& space, const Vector& x, int m) {
  const double big = max_abs_coeff(x);
  double best = std::numeric_limits<double>::infinity();
  for_each_subset(space.dim, m, [&](const IndexSet& a) {
    auto value = [&](double scalar) {
      Vector y = x;
      for (int i : a) y[static_cast<std::size_t>(i)] -= scalar;
      return norm(space, y);
    };
    double center = 0.0, span = std::max(big, 1e-6);
    double best_here = value(0.0);
    for (int round = 0; round < 5; ++round) {
      double best_c = center;
      for (int g = -100; g <= 100; ++g) {
        const double c = center + span * g / 100.0;
        const double v = value(c);
        if (v < best_here) {
          best_here = v;
          best_c = c;
        }
      }
      center = best_c;
      span *= 0.05;
    }
    best = std::min(best, best_here);
    return true;
  });
  return best;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  {
    Criterion c(1, "example-space norm and dual-norm values");
    SpaceSpec ex = example_space(3);
    c.expect(std::abs(norm(ex, indicator(12, range_set(1, 6))) - 2.0) < 1e-12,
             "norm(1_[1,6]) != 2");
    c.expect(std::abs(norm(ex, indicator(12, range_set(7, 12))) - 6.0) < 1e-12,
             "norm(1_[7,12]) != 6");
    const double d_right = dual_norm(ex, indicator(12, range_set(7, 12)));
    c.expect(std::abs(d_right - 1.0) < 1e-9, "dual_norm(1_[7,12]) != 1");
    const double d_left = dual_norm(ex, indicator(12, range_set(1, 6)));
    c.expect(d_left >= 3.0 - 1e-9, "dual_norm(1_[1,6]) < 3");
    c.expect(std::abs(d_left - 3.5) < 1e-9, "dual_norm(1_[1,6]) != frozen oracle value 3.5");
  }

  {
    Criterion c(2, "example-space constants at size cap 6");
    SpaceSpec ex = example_space(3);
    ConstantEstimate gc = conservative_constant(ex, 6);
    c.expect(std::abs(gc.value - 1.0) < 1e-12 && gc.exact, "conservative constant != 1");
    ConstantEstimate g = democratic_constant(ex, 6);
    c.expect(g.value >= 3.0 - 1e-12, "democratic constant < 3");
    const double doc_ratio = norm(ex, indicator(12, range_set(7, 12))) /
                             norm(ex, indicator(12, range_set(1, 6)));
    c.expect(std::abs(doc_ratio - 3.0) < 1e-12, "witness pair [7,12]/[1,6] ratio != 3");
    c.expect(!g.witness_a.empty() &&
                 std::abs(norm(ex, indicator(12, g.witness_a)) /
                              norm(ex, indicator(12, g.witness_b)) -
                          g.value) < 1e-9,
             "democratic witness does not reproduce the value");
    SpaceSpec dual = dual_of(ex);
    ConstantEstimate gr = reverse_conservative_constant(dual, 6);
    c.expect(std::abs(gr.value - 1.0) < 1e-9, "dual reverse-conservative constant != 1");
    ConstantEstimate gd = democratic_constant(dual, 6);
    c.expect(gd.value >= 3.0 - 1e-9, "dual democratic constant < 3 (should fail democracy)");
  }

  {
    Criterion c(3, "dense-grid oracle equivalence for sigma and dist_indicator");
    std::vector<SpaceSpec> spaces = {lp_space(6, 1.0), lp_space(6, 2.0), example_space(2)};
    for (const auto& s : spaces) {
      auto corpus = make_corpus(s.dim, 200, 7);
      int idx = 0;
      for (const auto& x : corpus) {
        // dense-grid comparisons on a deterministic slice of m values
        const int m = 1 + (idx++ % s.dim);
        const double tol = 1e-6 * std::max(1.0, norm(s, x));
        const double sg = sigma(s, x, m).value;
        const double sb = brute_sigma(s, x, m);
        c.expect(std::abs(sg - sb) <= tol, "sigma mismatch vs brute force");
        const double dg = dist_indicator(s, x, m, Side::Unconstrained).value;
        const double db = brute_dist(s, x, m);
        c.expect(std::abs(dg - db) <= tol, "dist_indicator mismatch vs brute force");
      }
    }
  }

  {
    Criterion c(4, "inequality suites with exact constants, 1000-vector corpora");
    VerifyConfig cfg;
    cfg.corpus_size = 1000;
    cfg.size_cap = 4;
    for (const SpaceSpec& s : {example_space(3), lp_space(6, 2.0)}) {
      for (const std::string& suite :
           {std::string("sign_unconditionality"), std::string("min_inequality"),
            std::string("pg_bound"), std::string("property_star"), std::string("crd")}) {
        auto reports = run_suite(s, suite, cfg);
        c.expect(reports[0].pass(),
                 suite + " violations: " +
                     (reports[0].violations.empty() ? "" : reports[0].violations[0].dump()));
        c.expect(reports[0].instances > reports[0].vacuous, suite + " entirely vacuous");
        if (s.example_n && suite == "pg_bound")
          c.expect(std::abs(reports[0].bound - 10.0) < 1e-12, "pg bound != 10");
        if (s.example_n && suite == "property_star")
          c.expect(std::abs(reports[0].bound - 36.0) < 1e-12, "property-star bound != 36");
      }
    }
  }

  {
    Criterion c(5, "error-functional lattice and infeasibility, 10000 instances");
    Rng rng(2026);
    std::vector<SpaceSpec> spaces = {lp_space(6, 1.0), lp_space(8, 2.0),
                                     lp_space(5, std::numeric_limits<double>::infinity()),
                                     weighted_l1_space({1, 2, 3, 4, 5, 6, 7}), example_space(2)};
    for (int t = 0; t < 10000; ++t) {
      const SpaceSpec& s = spaces[static_cast<std::size_t>(rng.below(5))];
      Vector x = random_vector(rng, s.dim);
      const int m = 1 + rng.below(s.dim);
      const double v_sigma = sigma(s, x, m).value;
      const double v_tilde = sigma_tilde(s, x, m).value;
      const ErrorValue tl = sigma_tilde_L(s, x, m);
      const ErrorValue tr = sigma_tilde_R(s, x, m);
      c.expect(v_sigma <= v_tilde + 1e-9, "sigma > sigma_tilde");
      c.expect(v_tilde <= tl.value + 1e-9, "sigma_tilde > sigma_tilde_L");
      c.expect(v_tilde <= tr.value + 1e-9, "sigma_tilde > sigma_tilde_R");
      c.expect(!tl.infeasible && !tr.infeasible, "projection variant infeasible");
      if (m < s.dim) {
        c.expect(sigma(s, x, m + 1).value <= v_sigma + 1e-9, "sigma not monotone");
        c.expect(sigma_tilde(s, x, m + 1).value <= v_tilde + 1e-9, "sigma_tilde not monotone");
      }
      GreedySelection sel = greedy_selection(x, m);
      // 1-based: left infeasible iff alpha_m <= m; right iff beta_m >= dim-m+1
      c.expect(sigma_L(s, x, m).infeasible == (sel.alpha + 1 <= m),
               "sigma_L infeasibility condition");
      c.expect(sigma_R(s, x, m).infeasible == (sel.beta + 1 >= s.dim - m + 1),
               "sigma_R infeasibility condition");
    }
  }

  {
    Criterion c(6, "1-partially-greedy characterization");
    VerifyConfig cfg;
    cfg.corpus_size = 120;
    for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
      SpaceSpec s = lp_space(6, p);
      auto fw = run_suite(s, "one_pg", cfg);
      auto rv = run_suite(s, "one_pg_reverse", cfg);
      c.expect(fw[0].pass(), "one_pg failed on lp space");
      c.expect(rv[0].pass(), "one_pg_reverse failed on lp space");
    }
    SpaceSpec w = weighted_l1_space({1, 2, 3, 4});
    auto rv = run_suite(w, "one_pg_reverse", cfg);
    c.expect(!rv[0].pass(), "increasing-weight space unexpectedly reverse-1-PG");
    c.expect(!rv[0].violations.empty() && rv[0].violations[0].contains("part"),
             "reverse failure carries no witness");
  }

  {
    Criterion c(7, "WTGA/BGA reproduction and theta-witness ratios");
    Rng rng(515);
    int checked = 0;
    while (checked < 1000) {
      Vector x = random_vector(rng, 8);
      const int supp = static_cast<int>(support(x).size());
      if (supp == 0) continue;
      const int m = 1 + rng.below(supp);
      c.expect(wtga(x, m, 0.5, WtgaPolicy::Greedy) == tga(x, m),
               "greedy-policy WTGA differs from TGA");
      BranchSelectorSpec largest{0.5, BranchRule::LargestCoefficient};
      c.expect(bga(x, m, largest) == tga(x, m), "largest-coefficient BGA differs from TGA");
      ++checked;
    }
    VerifyConfig cfg;
    cfg.corpus_size = 100;
    auto wt = run_suite(lp_space(8, 1.0), "wtga", cfg);
    c.expect(wt[0].pass(), "wtga check failed");
    c.expect(std::isfinite(wt[0].extra.at("lazy_sup").get<double>()), "lazy sup not finite");
    auto bg = run_suite(example_space(2), "bga", cfg);
    c.expect(bg[0].pass(), "bga check failed: " +
                               (bg[0].violations.empty() ? std::string("")
                                                         : bg[0].violations[0].dump()));
    c.expect(bg[0].extra.at("es_reproduced").get<bool>(), "es1/es2 ratios not reproduced");
  }

  {
    Criterion c(8, "deterministic CLI verification output");
    if (cli.empty()) {
      c.expect(false, "CLI path not provided");
    } else {
      const std::string out1 = "acceptance_run1.jsonl";
      const std::string out2 = "acceptance_run2.jsonl";
      const std::string base = "\"" + cli + "\" verify --suite all --seed 42 --out ";
      const int rc1 = std::system((base + out1).c_str());
      const int rc2 = std::system((base + out2).c_str());
      c.expect(rc1 != -1 && rc2 != -1, "could not launch CLI");
      const std::string a = read_file(out1);
      const std::string b = read_file(out2);
      c.expect(!a.empty(), "CLI produced no output");
      c.expect(a == b, "two identical runs differ");
      std::remove(out1.c_str());
      std::remove(out2.c_str());
    }
  }

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
