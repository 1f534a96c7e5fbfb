#include "greedytk/verify.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "greedytk/constants.hpp"
#include "greedytk/errors.hpp"
#include "greedytk/greedy.hpp"
#include <nlohmann/json.hpp>

namespace greedytk {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlack = 1e-9;  // relative slack on asserted bounds

json set_json(const IndexSet& a) {
  json j = json::array();
  for (int i : a) j.push_back(i + 1);
  return j;
}

json vec_json(const Vector& x) { return json(x); }

void require_exact_k(const SpaceSpec& space, const char* check) {
  if (!is_absolute(space))
    throw std::invalid_argument(std::string(check) + " requires an exact quasi-greedy constant");
}

bool within(double lhs, double bound) { return lhs <= bound * (1.0 + kSlack) + 1e-12; }

int constants_cap(const SpaceSpec& space) { return std::min(space.dim, 12); }

double indicator_norm(const SpaceSpec& space, const IndexSet& a) {
  return norm(space, indicator(space.dim, a));
}

// Splits disjoint equal-size sorted sets A, D into A1 < D1 and A2 > D2 with
// |A_i| = |D_i| (the two-part decomposition from the splitting lemma).
// Returns false when no split exists (cannot happen for disjoint sets, kept
// as a guard).
bool split_pair(const IndexSet& a, const IndexSet& d, int* j_out) {
  const int k = static_cast<int>(a.size());
  for (int j = 0; j <= k; ++j) {
    const bool left_ok = j == 0 || a[static_cast<std::size_t>(j - 1)] < d[static_cast<std::size_t>(k - j)];
    const bool right_ok = j == k || a[static_cast<std::size_t>(j)] > d[static_cast<std::size_t>(k - j - 1)];
    if (left_ok && right_ok) {
      *j_out = j;
      return true;
    }
  }
  return false;
}

}  // namespace

json CheckReport::to_json() const {
  json j;
  j["check"] = id;
  j["instances"] = instances;
  j["max_ratio"] = std::isfinite(max_ratio) ? json(max_ratio) : json("inf");
  j["bound"] = asserted ? json(bound) : json(nullptr);
  j["violations"] = violations;
  j["vacuous"] = vacuous;
  j["pass"] = pass();
  if (!extra.is_null()) j["extra"] = extra;
  return j;
}

CheckReport check_sign_unconditionality(const SpaceSpec& space, const VerifyConfig& cfg) {
  require_exact_k(space, "check_sign_unconditionality");
  const double k_qg = 1.0;
  CheckReport rep;
  rep.id = "sign_unconditionality";
  rep.bound = 2.0 * k_qg;
  const double grid[] = {-1.0, -0.25, 0.25, 1.0};
  for (int s = 1; s <= std::min(cfg.size_cap, space.dim); ++s) {
    for_each_subset(space.dim, s, [&](const IndexSet& a) {
      const double base = indicator_norm(space, a);
      for (unsigned mask = 0; mask < (1u << s); ++mask) {
        Vector x = zeros(space.dim);
        for (int t = 0; t < s; ++t)
          x[static_cast<std::size_t>(a[static_cast<std::size_t>(t)])] = (mask >> t) & 1 ? -1.0 : 1.0;
        const double v = norm(space, x);
        ++rep.instances;
        rep.max_ratio = std::max(rep.max_ratio, v / base);
        if (!within(v, 2.0 * k_qg * base) || !within(base, 2.0 * k_qg * v)) {
          rep.violations.push_back(
              {{"set", set_json(a)}, {"signs", static_cast<int>(mask)}, {"norm", v}, {"indicator_norm", base}});
        }
      }
      // (cuc) on a small coefficient grid
      std::vector<int> pick(static_cast<std::size_t>(s), 0);
      while (true) {
        Vector x = zeros(space.dim);
        double maxc = 0.0;
        for (int t = 0; t < s; ++t) {
          const double c = grid[pick[static_cast<std::size_t>(t)]];
          x[static_cast<std::size_t>(a[static_cast<std::size_t>(t)])] = c;
          maxc = std::max(maxc, std::abs(c));
        }
        ++rep.instances;
        const double v = norm(space, x);
        if (!within(v, 2.0 * k_qg * maxc * base))
          rep.violations.push_back({{"set", set_json(a)}, {"coeffs", vec_json(x)}, {"norm", v}});
        int t = s - 1;
        while (t >= 0 && pick[static_cast<std::size_t>(t)] == 3) pick[static_cast<std::size_t>(t--)] = 0;
        if (t < 0) break;
        ++pick[static_cast<std::size_t>(t)];
      }
      return true;
    });
  }
  rep.extra = {{"size_cap", cfg.size_cap}, {"K", k_qg}};
  return rep;
}

CheckReport check_min_inequality(const SpaceSpec& space, const VerifyConfig& cfg) {
  require_exact_k(space, "check_min_inequality");
  const double k_qg = 1.0;
  CheckReport rep;
  rep.id = "min_inequality";
  rep.bound = 4.0 * k_qg * k_qg;
  auto corpus = make_corpus(space.dim, cfg.corpus_size, cfg.seed);
  for (const auto& x : corpus) {
    const double nx = norm(space, x);
    if (nx <= 0.0) {
      ++rep.vacuous;
      continue;
    }
    GreedySelection sel = greedy_ordering(x);
    IndexSet prefix;
    for (int m = 1; m <= space.dim; ++m) {
      prefix.push_back(sel.order[static_cast<std::size_t>(m - 1)]);
      const double lhs =
          std::abs(sel.values[static_cast<std::size_t>(m - 1)]) * indicator_norm(space, prefix);
      ++rep.instances;
      rep.max_ratio = std::max(rep.max_ratio, lhs / nx);
      if (!within(lhs, rep.bound * nx))
        rep.violations.push_back({{"x", vec_json(x)}, {"m", m}, {"lhs", lhs}, {"norm", nx}});
    }
  }
  return rep;
}

CheckReport check_pg_bound(const SpaceSpec& space, const VerifyConfig& cfg) {
  require_exact_k(space, "check_pg_bound");
  const double k_qg = 1.0;
  const ConstantEstimate gc = conservative_constant(space, constants_cap(space));
  CheckReport rep;
  rep.id = "pg_bound";
  rep.bound = 1.0 + k_qg + 8.0 * std::pow(k_qg, 4) * gc.value;
  auto corpus = make_corpus(space.dim, cfg.corpus_size, cfg.seed);
  for (const auto& x : corpus) {
    for (int m = 1; m <= space.dim; ++m) {
      for (const auto& lam : lambda_variants(x, m)) {
        const double num = norm(space, subtract(x, project(x, lam)));
        const double den = sigma_tilde_L_at(space, x, m, lam.front()).value;
        ++rep.instances;
        if (den <= 1e-12) {
          if (num > kAbsTol)
            rep.violations.push_back({{"x", vec_json(x)}, {"m", m}, {"num", num}, {"den", den}});
          else
            ++rep.vacuous;
          continue;
        }
        rep.max_ratio = std::max(rep.max_ratio, num / den);
        if (!within(num, rep.bound * den))
          rep.violations.push_back(
              {{"x", vec_json(x)}, {"m", m}, {"lambda", set_json(lam)}, {"num", num}, {"den", den}});
      }
    }
  }
  // Converse direction: the proof's witness 1_A + (1+eps) 1_B drives the
  // empirical (qc) ratio up to the conservative constant.
  if (!gc.witness_a.empty()) {
    const double eps = 1e-3;
    Vector w = zeros(space.dim);
    for (int i : gc.witness_a) w[static_cast<std::size_t>(i)] = 1.0;
    for (int i : gc.witness_b) w[static_cast<std::size_t>(i)] = 1.0 + eps;
    const int m = static_cast<int>(gc.witness_b.size());
    const double ratio =
        norm(space, subtract(w, tga(w, m))) / sigma_tilde_L(space, w, m).value;
    const double target = gc.value / (1.0 + eps);
    ++rep.instances;
    if (ratio < target * (1.0 - kSlack))
      rep.violations.push_back(
          {{"witness", vec_json(w)}, {"qc_ratio", ratio}, {"target", target}});
    rep.extra = {{"conservative_constant", gc.value}, {"witness_qc_ratio", ratio}};
  }
  return rep;
}

namespace {

CheckReport sided_star_check(const SpaceSpec& space, const VerifyConfig& cfg, bool left) {
  require_exact_k(space, "check_property_star");
  const double k_qg = 1.0, k_b = 1.0;
  const ConstantEstimate gamma = left ? conservative_constant(space, constants_cap(space))
                                      : reverse_conservative_constant(space, constants_cap(space));
  CheckReport rep;
  rep.id = left ? "property_star" : "property_star_star";
  rep.bound = k_qg * k_b + 16.0 * std::pow(k_qg, 4) * gamma.value * (k_b + 1.0) +
              k_qg * (k_b + 1.0) + 1.0;
  auto corpus = make_corpus(space.dim, cfg.corpus_size, cfg.seed);
  for (const auto& x : corpus) {
    for (int m = 1; m <= space.dim; ++m) {
      for (const auto& lam : lambda_variants(x, m)) {
        const double num = norm(space, subtract(x, project(x, lam)));
        const ErrorValue e = left ? sigma_L_at(space, x, m, lam.front())
                                  : sigma_R_at(space, x, m, lam.back());
        ++rep.instances;
        if (e.infeasible || e.value <= 1e-12) {
          ++rep.vacuous;
          continue;
        }
        rep.max_ratio = std::max(rep.max_ratio, num / e.value);
        if (!within(num, rep.bound * e.value))
          rep.violations.push_back(
              {{"x", vec_json(x)}, {"m", m}, {"num", num}, {"den", e.value}});
      }
    }
  }
  // At m = |supp(x)| the liminf-style lower bound is forced:
  // sigma_L >= ||x|| / (1 + K_b) whenever feasible.
  if (left) {
    long forced = 0;
    for (const auto& x : corpus) {
      const int m = static_cast<int>(support(x).size());
      if (m == 0 || m > space.dim) continue;
      const ErrorValue e = sigma_L(space, x, m);
      if (e.infeasible) continue;
      ++forced;
      ++rep.instances;
      const double lower = norm(space, x) / (1.0 + k_b);
      if (e.value < lower * (1.0 - kSlack))
        rep.violations.push_back({{"part", "support_lower_bound"}, {"x", vec_json(x)},
                                  {"sigma_L", e.value}, {"lower", lower}});
    }
    rep.extra = {{"gamma", gamma.value}, {"support_lower_bound_instances", forced}};
  } else {
    rep.extra = {{"gamma", gamma.value}};
  }
  return rep;
}

}  // namespace

CheckReport check_property_star(const SpaceSpec& space, const VerifyConfig& cfg) {
  return sided_star_check(space, cfg, true);
}

CheckReport check_property_star_star(const SpaceSpec& space, const VerifyConfig& cfg) {
  return sided_star_check(space, cfg, false);
}

CheckReport check_gag(const SpaceSpec& space, const VerifyConfig& cfg) {
  CheckReport rep;
  rep.id = "gag";
  rep.asserted = false;
  const int m_cap = std::min(space.dim, 4);
  const int corpus_n = std::min(cfg.corpus_size, 100);
  auto corpus = make_corpus(space.dim, corpus_n, cfg.seed);
  const double lambdas[] = {0.0, 0.25, 0.5};
  json lambda_sups = json::object();
  for (double lam : lambdas) lambda_sups[std::to_string(lam)] = 0.0;

  for (const auto& x : corpus) {
    for (int m = 1; m <= m_cap; ++m) {
      GreedySelection sel = greedy_selection(x, m);
      const double num = norm(space, subtract(x, tga(x, m)));
      // Sided-union family (mixed left/right subsets allowed).
      IndexSet pool;
      for (int i = 0; i < sel.alpha; ++i) pool.push_back(i);
      for (int i = sel.beta + 1; i < space.dim; ++i) pool.push_back(i);
      double den = kInf;
      for_each_subset_sized(pool, 0, std::min<int>(m, static_cast<int>(pool.size())),
                            [&](const IndexSet& a) {
                              std::vector<double> coeffs = best_coeffs_on_support(space, x, a);
                              Vector y = x;
                              for (std::size_t t = 0; t < a.size(); ++t)
                                y[static_cast<std::size_t>(a[t])] -= coeffs[t];
                              den = std::min(den, norm(space, y));
                              return true;
                            });
      ++rep.instances;
      if (!std::isfinite(den) || den <= 1e-12) {
        ++rep.vacuous;
      } else {
        rep.max_ratio = std::max(rep.max_ratio, num / den);
      }
      // Overlap-budget variant.
      IndexSet lam_set = lambda_m(x, m);
      for (double lam : lambdas) {
        const int budget = static_cast<int>(std::floor(lam * m));
        double dlam = kInf;
        IndexSet all;
        for (int i = 0; i < space.dim; ++i) all.push_back(i);
        for_each_subset_sized(all, 0, m, [&](const IndexSet& a) {
          int overlap = 0;
          for (int i : a)
            if (std::binary_search(lam_set.begin(), lam_set.end(), i)) ++overlap;
          if (overlap > budget) return true;
          std::vector<double> coeffs = best_coeffs_on_support(space, x, a);
          Vector y = x;
          for (std::size_t t = 0; t < a.size(); ++t)
            y[static_cast<std::size_t>(a[t])] -= coeffs[t];
          dlam = std::min(dlam, norm(space, y));
          return true;
        });
        if (std::isfinite(dlam) && dlam > 1e-12) {
          double& sup = lambda_sups[std::to_string(lam)].get_ref<double&>();
          sup = std::max(sup, num / dlam);
        }
      }
    }
  }
  rep.extra = {{"m_cap", m_cap}, {"lambda_sups", lambda_sups}};
  return rep;
}

CheckReport check_indicator_characterization(const SpaceSpec& space, const VerifyConfig& cfg) {
  CheckReport rep;
  rep.id = "indicator";
  rep.asserted = false;
  const int m_cap = std::min(space.dim, 4);
  const int corpus_n = std::min(cfg.corpus_size, 50);
  auto corpus = make_corpus(space.dim, corpus_n, cfg.seed);
  double sup_left = 0.0, sup_right = 0.0, sup_both = 0.0;
  for (const auto& x : corpus) {
    const double nx = norm(space, x);
    for (int m = 1; m <= m_cap; ++m) {
      const double num = norm(space, subtract(x, tga(x, m)));
      for (Side side : {Side::Left, Side::Right, Side::Both}) {
        const ErrorValue e = dist_indicator(space, x, m, side);
        ++rep.instances;
        if (e.infeasible || e.value <= 1e-9 * std::max(1.0, nx)) {
          ++rep.vacuous;  // degenerate or empty family
          continue;
        }
        const double ratio = num / e.value;
        if (side == Side::Left) sup_left = std::max(sup_left, ratio);
        if (side == Side::Right) sup_right = std::max(sup_right, ratio);
        if (side == Side::Both) sup_both = std::max(sup_both, ratio);
        rep.max_ratio = std::max(rep.max_ratio, ratio);
      }
    }
  }
  rep.extra = {{"sup_left", sup_left}, {"sup_right", sup_right}, {"sup_both", sup_both},
               {"m_cap", m_cap}};
  return rep;
}

CheckReport check_one_pg(const SpaceSpec& space, const VerifyConfig& cfg, bool reverse) {
  CheckReport rep;
  rep.id = reverse ? "one_pg_reverse" : "one_pg";
  rep.bound = 1.0;
  auto corpus = make_corpus(space.dim, cfg.corpus_size, cfg.seed);
  // Free a pair of coordinates on each corpus vector so condition (ii) has
  // admissible (j,k) pairs.
  std::vector<Vector> instances;
  for (auto x : corpus) {
    IndexSet supp = support(x);
    while (static_cast<int>(supp.size()) > space.dim - 2) {
      int smallest = supp.front();
      for (int i : supp)
        if (std::abs(x[static_cast<std::size_t>(i)]) < std::abs(x[static_cast<std::size_t>(smallest)]))
          smallest = i;
      x[static_cast<std::size_t>(smallest)] = 0.0;
      supp = support(x);
    }
    instances.push_back(std::move(x));
  }

  bool cond_one = true, cond_two = true;
  for (const auto& x : instances) {
    const double nx = norm(space, x);
    const double maxc = max_abs_coeff(x);
    // (i): removing the top coefficient never beats removing one on the
    // wrong side of it.
    if (maxc > 0.0) {
      GreedySelection sel = greedy_selection(x, 1);
      const double lhs = norm(space, subtract(x, tga(x, 1)));
      for (int j = 0; j < space.dim; ++j) {
        const bool admissible = reverse ? j > sel.beta : j < sel.alpha;
        if (!admissible) continue;
        Vector xj = x;
        xj[static_cast<std::size_t>(j)] = 0.0;
        const double rhs = std::min(nx, norm(space, xj));
        ++rep.instances;
        if (rhs > 1e-12) rep.max_ratio = std::max(rep.max_ratio, lhs / rhs);
        if (!within(lhs, rhs)) {
          cond_one = false;
          rep.violations.push_back({{"part", "one_term"}, {"x", vec_json(x)}, {"j", j + 1},
                                    {"lhs", lhs}, {"rhs", rhs}});
        }
      }
    }
    // (ii): the two-free-coordinate norm condition on sign grids.
    const double mag0 = std::max(maxc, 1.0);
    for (int j = 0; j < space.dim; ++j) {
      if (x[static_cast<std::size_t>(j)] != 0.0) continue;
      for (int k = j + 1; k < space.dim; ++k) {
        if (x[static_cast<std::size_t>(k)] != 0.0) continue;
        const int lo = reverse ? k : j;  // index receiving s
        const int hi = reverse ? j : k;  // index receiving t
        for (double mag : {mag0, 2.0 * mag0}) {
          for (double s : {mag, -mag}) {
            for (double t : {mag, -mag}) {
              Vector xs = x, xt = x;
              xs[static_cast<std::size_t>(lo)] += s;
              xt[static_cast<std::size_t>(hi)] += t;
              const double lhs = std::max(nx, norm(space, xs));
              const double rhs = norm(space, xt);
              ++rep.instances;
              if (rhs > 1e-12) rep.max_ratio = std::max(rep.max_ratio, lhs / rhs);
              if (!within(lhs, rhs)) {
                cond_two = false;
                rep.violations.push_back({{"part", "norm_condition"}, {"x", vec_json(x)},
                                          {"j", lo + 1}, {"k", hi + 1}, {"s", s}, {"t", t},
                                          {"lhs", lhs}, {"rhs", rhs}});
              }
            }
          }
        }
      }
    }
    // Convexity step: |e_j^*(x)| <= |s| pins the interpolated norm under the
    // two-sided max.
    if (maxc > 0.0) {
      for (int j = 0; j < std::min(space.dim, 3); ++j) {
        Vector z = x;
        z[static_cast<std::size_t>(j)] = 0.0;
        const double s = 2.0 * mag0;
        Vector zp = z, zm = z, zc = z;
        zp[static_cast<std::size_t>(j)] = s;
        zm[static_cast<std::size_t>(j)] = -s;
        zc[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
        ++rep.instances;
        if (!within(norm(space, zc), std::max(norm(space, zp), norm(space, zm))))
          rep.violations.push_back({{"part", "convexity"}, {"x", vec_json(x)}, {"j", j + 1}});
      }
    }
  }
  rep.extra = {{"one_term_holds", cond_one}, {"norm_condition_holds", cond_two},
               {"conditions_equivalent", cond_one == cond_two}};
  if (cond_one != cond_two)
    rep.violations.push_back({{"part", "equivalence"},
                              {"one_term_holds", cond_one},
                              {"norm_condition_holds", cond_two}});
  return rep;
}

CheckReport check_property_p_tau(const SpaceSpec& space, const VerifyConfig& cfg) {
  CheckReport rep;
  rep.id = "property_p";
  rep.asserted = false;
  const double tau = cfg.tau;
  const double mags[] = {1.0, 1.0 / tau, 1.0 / (tau * tau)};
  double best_c = 0.0;
  json per_size = json::object();
  for (int s = 1; s <= std::min(cfg.size_cap, space.dim); ++s) {
    double size_c = 0.0;
    for_each_subset(space.dim, s, [&](const IndexSet& a) {
      // max over signs; for absolute norms this is the indicator norm.
      double sign_max = indicator_norm(space, a);
      if (!is_absolute(space)) {
        for (unsigned mask = 0; mask < (1u << s); ++mask) {
          Vector x = zeros(space.dim);
          for (int t = 0; t < s; ++t)
            x[static_cast<std::size_t>(a[static_cast<std::size_t>(t)])] = (mask >> t) & 1 ? -1.0 : 1.0;
          sign_max = std::max(sign_max, norm(space, x));
        }
      }
      std::vector<int> pick(static_cast<std::size_t>(s), 0);
      while (true) {
        Vector x = zeros(space.dim);
        for (int t = 0; t < s; ++t)
          x[static_cast<std::size_t>(a[static_cast<std::size_t>(t)])] = mags[pick[static_cast<std::size_t>(t)]];
        const double den = norm(space, x);
        ++rep.instances;
        if (den > 1e-12) size_c = std::max(size_c, sign_max / den);
        int t = s - 1;
        while (t >= 0 && pick[static_cast<std::size_t>(t)] == 2) pick[static_cast<std::size_t>(t--)] = 0;
        if (t < 0) break;
        ++pick[static_cast<std::size_t>(t)];
      }
      return true;
    });
    per_size[std::to_string(s)] = size_c;
    best_c = std::max(best_c, size_c);
  }
  rep.max_ratio = best_c;
  rep.extra = {{"tau", tau}, {"empirical_C", best_c}, {"per_size", per_size},
               {"size_cap", cfg.size_cap}};
  return rep;
}

CheckReport check_bga_theorems(const SpaceSpec& space, const VerifyConfig& cfg) {
  require_exact_k(space, "check_bga_theorems");
  CheckReport rep;
  rep.id = "bga";
  const double tau = cfg.tau;
  const double theta_max = 0.99 * tau;
  const double thetas[] = {tau / 2.0, theta_max};
  BranchSelectorSpec selector{tau, BranchRule::SmallestIndex};
  const int cap = std::min({cfg.size_cap, space.dim / 2, 3});
  Rng rng(cfg.seed ^ 0xb6a5u);

  double c_emp = 0.0;  // empirical (bage1) constant
  double c_p = 0.0;    // property-P(tau) ratio over the same instances
  bool es_reproduced = true;

  auto fold_bage1 = [&](const Vector& x, int m) {
    std::vector<int> sel_order = bga_select(x, m, selector);
    IndexSet sel_set(sel_order.begin(), sel_order.end());
    std::sort(sel_set.begin(), sel_set.end());
    const Vector gx = project(x, sel_set);
    const double num = norm(space, subtract(x, gx));
    const int a_tau = sel_set.front();
    const int b_tau = sel_set.back();
    IndexSet pool_l, pool_r;
    for (int i = 0; i < a_tau; ++i) pool_l.push_back(i);
    for (int i = b_tau + 1; i < space.dim; ++i) pool_r.push_back(i);
    double den = kInf;
    auto consider = [&](const IndexSet& a) {
      Vector y = x;
      for (int i : a) y[static_cast<std::size_t>(i)] = 0.0;
      den = std::min(den, norm(space, y));
      return true;
    };
    for_each_subset_sized(pool_l, 0, std::min<int>(m, static_cast<int>(pool_l.size())), consider);
    for_each_subset_sized(pool_r, 1, std::min<int>(m, static_cast<int>(pool_r.size())), consider);
    ++rep.instances;
    if (std::isfinite(den) && den > 1e-12) c_emp = std::max(c_emp, num / den);
    return sel_set;
  };

  // Corpus instances.
  auto corpus = make_corpus(space.dim, std::min(cfg.corpus_size, 100), cfg.seed);
  for (const auto& x : corpus) {
    const int supp = static_cast<int>(support(x).size());
    for (int m = 1; m <= std::min(supp, 6); ++m) fold_bage1(x, m);
  }

  // Largest-coefficient selector must reduce to the TGA.
  {
    BranchSelectorSpec tga_like{tau, BranchRule::LargestCoefficient};
    for (std::size_t i = 0; i < std::min<std::size_t>(corpus.size(), 50); ++i) {
      const Vector& x = corpus[i];
      const int supp = static_cast<int>(support(x).size());
      for (int m = 1; m <= supp; ++m) {
        ++rep.instances;
        if (bga(x, m, tga_like) != tga(x, m))
          rep.violations.push_back({{"part", "largest_coefficient_vs_tga"},
                                    {"x", vec_json(x)}, {"m", m}});
      }
    }
  }

  // Theta-scaled conservative witnesses: x = theta 1_A + 1_B with A < B
  // (and the mirror for the reverse constant). The pair sups are computed
  // unclamped here so the derived C/theta assertion matches the actual
  // indicator ratios on this space.
  const int pair_cap = std::min({cap, 3, space.dim - 1});
  double sup_c = 0.0, sup_r = 0.0;
  IndexSet best_c_a, best_c_b, best_r_a, best_r_b;
  {
    std::vector<IndexSet> sets;
    for (int s = 1; s <= pair_cap; ++s)
      for_each_subset(space.dim, s, [&](const IndexSet& a) {
        sets.push_back(a);
        return true;
      });
    for (const auto& a : sets) {
      const double na = indicator_norm(space, a);
      for (const auto& b : sets) {
        if (a.size() > b.size()) continue;
        const double ratio = na / indicator_norm(space, b);
        if (a.back() < b.front() && ratio > sup_c) {
          sup_c = ratio;
          best_c_a = a;
          best_c_b = b;
        }
        if (b.back() < a.front() && ratio > sup_r) {
          sup_r = ratio;
          best_r_a = a;
          best_r_b = b;
        }
      }
    }
  }
  auto fold_theta_pair = [&](const IndexSet& small_set, const IndexSet& big_set) {
    if (small_set.empty() || big_set.empty()) return;
    for (double theta : thetas) {
      Vector x = zeros(space.dim);
      for (int i : small_set) x[static_cast<std::size_t>(i)] = theta;
      for (int i : big_set) x[static_cast<std::size_t>(i)] = 1.0;
      fold_bage1(x, static_cast<int>(big_set.size()));
    }
  };
  fold_theta_pair(best_c_a, best_c_b);
  fold_theta_pair(best_r_a, best_r_b);
  // A few random admissible pairs as well.
  for (int t = 0; t < 16; ++t) {
    const int split = 1 + rng.below(space.dim - 1);
    IndexSet a, b;
    for (int i = 0; i < split; ++i)
      if (rng.next() & 1) a.push_back(i);
    for (int i = split; i < space.dim; ++i)
      if (rng.next() & 1) b.push_back(i);
    if (a.empty() || b.empty() || a.size() > b.size()) continue;
    fold_theta_pair(a, b);
    if (b.size() <= a.size()) fold_theta_pair(b, a);
  }

  // es1/es2: theta-scaling witnesses for property P(tau), via the split
  // lemma on disjoint pairs. The same instances feed both C_emp and the
  // property-P ratio, so the derived sign bound is self-consistent.
  for (int s = 1; s <= cap; ++s) {
    for_each_subset(space.dim, s, [&](const IndexSet& a) {
      IndexSet d;
      for (int i = 0; i < space.dim && static_cast<int>(d.size()) < s; ++i)
        if (!std::binary_search(a.begin(), a.end(), i)) d.push_back(i);
      if (static_cast<int>(d.size()) < s) return true;
      int split_j = 0;
      if (!split_pair(a, d, &split_j)) return true;
      IndexSet a1(a.begin(), a.begin() + split_j), a2(a.begin() + split_j, a.end());
      IndexSet d1(d.end() - split_j, d.end()), d2(d.begin(), d.end() - split_j);

      // Sampled coefficient assignments in [1, 1/tau^2], plus the extremes.
      std::vector<std::vector<double>> assigns;
      assigns.push_back(std::vector<double>(static_cast<std::size_t>(s), 1.0));
      assigns.push_back(std::vector<double>(static_cast<std::size_t>(s), 1.0 / (tau * tau)));
      for (int r = 0; r < 4; ++r) {
        std::vector<double> as(static_cast<std::size_t>(s));
        for (auto& v : as)
          v = (rng.next() & 1 ? 1.0 : -1.0) * (1.0 + (1.0 / (tau * tau) - 1.0) * rng.real());
        assigns.push_back(std::move(as));
      }
      const double sign_max = indicator_norm(space, a);  // absolute norm
      for (const auto& as : assigns) {
        Vector full = zeros(space.dim);
        for (int t = 0; t < s; ++t)
          full[static_cast<std::size_t>(a[static_cast<std::size_t>(t)])] = as[static_cast<std::size_t>(t)];
        const double den_full = norm(space, full);
        if (den_full > 1e-12) c_p = std::max(c_p, sign_max / den_full);

        for (int part = 0; part < 2; ++part) {
          const IndexSet& aj = part == 0 ? a1 : a2;
          const IndexSet& dj = part == 0 ? d1 : d2;
          if (aj.empty()) continue;
          const int kj = static_cast<int>(aj.size());
          for (double theta : thetas) {
            // es1: x_j = theta 1_{D_j} + sum a_i e_i on A_j
            Vector xj = zeros(space.dim);
            for (int i : dj) xj[static_cast<std::size_t>(i)] = theta;
            for (int t = 0; t < s; ++t) {
              const int idx = a[static_cast<std::size_t>(t)];
              if (std::binary_search(aj.begin(), aj.end(), idx))
                xj[static_cast<std::size_t>(idx)] = as[static_cast<std::size_t>(t)];
            }
            IndexSet picked = fold_bage1(xj, kj);
            if (picked != aj) {
              es_reproduced = false;
              rep.violations.push_back({{"part", "es1_selection"}, {"x", vec_json(xj)}});
              continue;
            }
            const Vector res = subtract(xj, project(xj, aj));
            const double ratio_run =
                norm(space, res) / norm(space, project(xj, aj));
            const double ratio_direct =
                theta * indicator_norm(space, dj) / norm(space, project(xj, aj));
            ++rep.instances;
            if (std::abs(ratio_run - ratio_direct) > kSlack) {
              es_reproduced = false;
              rep.violations.push_back({{"part", "es1_ratio"}, {"x", vec_json(xj)},
                                        {"run", ratio_run}, {"direct", ratio_direct}});
            }
            // es2: y_j = 1_{D_j} + theta sum (+-) e_i on A_j
            Vector yj = zeros(space.dim);
            for (int i : dj) yj[static_cast<std::size_t>(i)] = 1.0;
            for (int i : aj)
              yj[static_cast<std::size_t>(i)] = theta * (rng.next() & 1 ? 1.0 : -1.0);
            IndexSet picked2 = fold_bage1(yj, static_cast<int>(dj.size()));
            if (picked2 != dj) {
              es_reproduced = false;
              rep.violations.push_back({{"part", "es2_selection"}, {"y", vec_json(yj)}});
              continue;
            }
            const double run2 = norm(space, subtract(yj, project(yj, dj))) /
                                norm(space, project(yj, dj));
            Vector signs = zeros(space.dim);
            for (int i : aj)
              signs[static_cast<std::size_t>(i)] = yj[static_cast<std::size_t>(i)] / theta;
            const double direct2 =
                theta * norm(space, signs) / indicator_norm(space, dj);
            ++rep.instances;
            if (std::abs(run2 - direct2) > kSlack) {
              es_reproduced = false;
              rep.violations.push_back({{"part", "es2_ratio"}, {"y", vec_json(yj)},
                                        {"run", run2}, {"direct", direct2}});
            }
          }
        }
      }
      return true;
    });
  }

  // Derived bounds from the (bage1) pipeline.
  const double k_b = 1.0;
  rep.bound = c_emp / theta_max;
  rep.max_ratio = c_emp;
  if (sup_c > rep.bound * (1.0 + kSlack))
    rep.violations.push_back({{"part", "conservative_bound"}, {"pair_sup", sup_c},
                              {"bound", rep.bound}});
  if (sup_r > rep.bound * (1.0 + kSlack))
    rep.violations.push_back({{"part", "reverse_conservative_bound"}, {"pair_sup", sup_r},
                              {"bound", rep.bound}});
  // The es1/es2 chain gives theta^2 max_± ||sum_A ± e|| <= C^2 (2Kb+1)
  // ||sum_A a e||; assert that form at theta = theta_max, and report the
  // tau-denominator variant alongside.
  const double sign_bound = c_emp * c_emp * (2.0 * k_b + 1.0) / (theta_max * theta_max);
  if (c_p > sign_bound * (1.0 + kSlack))
    rep.violations.push_back({{"part", "sign_bound"}, {"property_p_C", c_p},
                              {"bound", sign_bound}});
  const double sign_bound_tau = c_emp * c_emp * (2.0 * k_b + 1.0) / tau;
  rep.extra = {{"tau", tau}, {"bage1_C", c_emp}, {"property_p_C", c_p},
               {"sign_bound", sign_bound},
               {"sign_bound_tau", sign_bound_tau},
               {"sign_bound_tau_holds", c_p <= sign_bound_tau * (1.0 + kSlack)},
               {"es_reproduced", es_reproduced},
               {"conservative_pair_sup", sup_c}, {"reverse_pair_sup", sup_r}};
  return rep;
}

CheckReport check_wtga_vs_tga(const SpaceSpec& space, const VerifyConfig& cfg) {
  CheckReport rep;
  rep.id = "wtga";
  rep.asserted = false;
  const double tau = cfg.tau;
  auto corpus = make_corpus(space.dim, cfg.corpus_size, cfg.seed);
  double lazy_sup = 0.0;
  json t3_sups = json::object();
  const double lambdas[] = {0.0, 0.5};
  for (double lam : lambdas) t3_sups[std::to_string(lam)] = 0.0;
  const int t3_m_cap = std::min(space.dim, 4);

  for (const auto& x : corpus) {
    if (max_abs_coeff(x) == 0.0) continue;
    for (int m = 1; m <= space.dim; ++m) {
      const Vector gm = tga(x, m);
      const double den = norm(space, subtract(x, gm));
      // Greedy policy reproduces the TGA set exactly.
      ++rep.instances;
      if (wtga(x, m, tau, WtgaPolicy::Greedy) != gm)
        rep.violations.push_back({{"part", "greedy_policy"}, {"x", vec_json(x)}, {"m", m}});
      const Vector gw = wtga(x, m, tau, WtgaPolicy::Lazy);
      if (den > 1e-12)
        lazy_sup = std::max(lazy_sup, norm(space, subtract(x, gw)) / den);
      if (m <= t3_m_cap) {
        const double num = norm(space, subtract(x, gw));
        IndexSet lam_set = wtga_select(x, m, tau, WtgaPolicy::Lazy).indices;
        IndexSet all;
        for (int i = 0; i < space.dim; ++i) all.push_back(i);
        for (double lamv : lambdas) {
          const int budget = static_cast<int>(std::floor(lamv * m));
          double dmin = kInf;
          for_each_subset_sized(all, 0, m, [&](const IndexSet& a) {
            int overlap = 0;
            for (int i : a)
              if (std::binary_search(lam_set.begin(), lam_set.end(), i)) ++overlap;
            if (overlap > budget) return true;
            std::vector<double> coeffs = best_coeffs_on_support(space, x, a);
            Vector y = x;
            for (std::size_t t = 0; t < a.size(); ++t)
              y[static_cast<std::size_t>(a[t])] -= coeffs[t];
            dmin = std::min(dmin, norm(space, y));
            return true;
          });
          if (std::isfinite(dmin) && dmin > 1e-12) {
            double& sup = t3_sups[std::to_string(lamv)].get_ref<double&>();
            sup = std::max(sup, num / dmin);
          }
        }
      }
    }
  }
  rep.max_ratio = lazy_sup;
  rep.extra = {{"tau", tau}, {"lazy_sup", lazy_sup}, {"t3_sups", t3_sups},
               {"t3_m_cap", t3_m_cap}};
  if (!std::isfinite(lazy_sup))
    rep.violations.push_back({{"part", "lazy_sup_not_finite"}});
  return rep;
}

CheckReport check_crd_bound(const SpaceSpec& space, const VerifyConfig& cfg) {
  (void)cfg;
  require_exact_k(space, "check_crd_bound");
  const double k_b = 1.0;
  const int cap = constants_cap(space);
  const ConstantEstimate gamma = democratic_constant(space, cap);
  const ConstantEstimate gc = conservative_constant(space, cap);
  const ConstantEstimate gr = reverse_conservative_constant(space, cap);
  const double gp = std::max(gc.value, gr.value);
  CheckReport rep;
  rep.id = "crd";
  rep.bound = gp * (2.0 * k_b + 1.0) + 2.0 * k_b;
  rep.instances = 2;
  rep.max_ratio = gamma.value;
  if (gamma.value < gp * (1.0 - kSlack))
    rep.violations.push_back({{"part", "gamma_dominates_sided"}, {"gamma", gamma.value},
                              {"sided", gp}});
  if (!within(gamma.value, rep.bound))
    rep.violations.push_back({{"part", "crd_upper_bound"}, {"gamma", gamma.value},
                              {"bound", rep.bound}});
  rep.extra = {{"gamma", gamma.value}, {"gamma_c", gc.value}, {"gamma_r", gr.value},
               {"size_cap", cap}};
  return rep;
}

CheckReport check_agmin(const SpaceSpec& space, const VerifyConfig& cfg) {
  require_exact_k(space, "check_agmin");
  const double k_qg = 1.0;
  const int cap = std::min(cfg.size_cap, space.dim);
  const ConstantEstimate gamma = democratic_constant(space, cap);
  CheckReport rep;
  rep.id = "agmin";
  rep.bound = 4.0 * k_qg * k_qg * gamma.value;
  const double grid[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  Rng rng(cfg.seed ^ 0xa61fu);
  for (int s = 1; s <= cap; ++s) {
    std::vector<double> phi_cache(1, fundamental_function(space, s));
    for_each_subset(space.dim, s, [&](const IndexSet& a) {
      for (int r = 0; r < 8; ++r) {
        Vector x = zeros(space.dim);
        double min_abs = kInf;
        for (int i : a) {
          const double c = grid[rng.below(6)];
          x[static_cast<std::size_t>(i)] = c;
          min_abs = std::min(min_abs, std::abs(c));
        }
        const double lhs = phi_cache[0] * min_abs;
        const double rhs = rep.bound * norm(space, x);
        ++rep.instances;
        if (rhs > 0.0) rep.max_ratio = std::max(rep.max_ratio, lhs / (norm(space, x)));
        if (!within(lhs, rhs))
          rep.violations.push_back({{"x", vec_json(x)}, {"lhs", lhs}, {"rhs", rhs}});
      }
      return true;
    });
  }
  rep.extra = {{"gamma", gamma.value}, {"size_cap", cap}};
  return rep;
}

std::vector<std::string> suite_names() {
  return {"sign_unconditionality", "min_inequality", "pg_bound", "property_star",
          "property_star_star", "gag", "indicator", "one_pg", "one_pg_reverse",
          "property_p", "bga", "wtga", "crd", "agmin"};
}

std::vector<CheckReport> run_suite(const SpaceSpec& space, const std::string& suite,
                                   const VerifyConfig& cfg) {
  using Runner = std::function<CheckReport()>;
  std::map<std::string, Runner> checks = {
      {"sign_unconditionality", [&] { return check_sign_unconditionality(space, cfg); }},
      {"min_inequality", [&] { return check_min_inequality(space, cfg); }},
      {"pg_bound", [&] { return check_pg_bound(space, cfg); }},
      {"property_star", [&] { return check_property_star(space, cfg); }},
      {"property_star_star", [&] { return check_property_star_star(space, cfg); }},
      {"gag", [&] { return check_gag(space, cfg); }},
      {"indicator", [&] { return check_indicator_characterization(space, cfg); }},
      {"one_pg", [&] { return check_one_pg(space, cfg, false); }},
      {"one_pg_reverse", [&] { return check_one_pg(space, cfg, true); }},
      {"property_p", [&] { return check_property_p_tau(space, cfg); }},
      {"bga", [&] { return check_bga_theorems(space, cfg); }},
      {"wtga", [&] { return check_wtga_vs_tga(space, cfg); }},
      {"crd", [&] { return check_crd_bound(space, cfg); }},
      {"agmin", [&] { return check_agmin(space, cfg); }},
  };
  std::string name = suite;
  if (name == "pg") name = "pg_bound";  // shorthand
  std::vector<CheckReport> reports;
  if (name == "all") {
    for (const auto& [id, run] : checks) reports.push_back(run());
  } else {
    auto it = checks.find(name);
    if (it == checks.end()) throw std::invalid_argument("unknown suite: " + suite);
    reports.push_back(it->second());
  }
  // map iteration is already sorted by id; keep it explicit for merges
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
  return reports;
}

std::string reports_to_jsonl(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.to_json().dump();
    out += '\n';
  }
  return out;
}

}  // namespace greedytk
