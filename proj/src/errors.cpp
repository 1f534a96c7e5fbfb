#include "greedytk/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "greedytk/greedy.hpp"

namespace greedytk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_m(const Vector& x, int m) {
  if (m < 0 || m > static_cast<int>(x.size())) throw std::out_of_range("m out of range");
}

double approx_error(const SpaceSpec& space, const Vector& x, const IndexSet& a,
                    std::vector<double>* coeffs_out) {
  std::vector<double> coeffs = best_coeffs_on_support(space, x, a);
  Vector y = x;
  for (std::size_t k = 0; k < a.size(); ++k)
    y[static_cast<std::size_t>(a[k])] -= coeffs[k];
  if (coeffs_out) *coeffs_out = std::move(coeffs);
  return norm(space, y);
}

double projection_error(const SpaceSpec& space, const Vector& x, const IndexSet& a) {
  Vector y = x;
  for (int i : a) y[static_cast<std::size_t>(i)] = 0.0;
  return norm(space, y);
}

IndexSet left_pool(int alpha) {
  IndexSet pool;
  for (int i = 0; i < alpha; ++i) pool.push_back(i);
  return pool;
}

IndexSet right_pool(int beta, int dim) {
  IndexSet pool;
  for (int i = beta + 1; i < dim; ++i) pool.push_back(i);
  return pool;
}

ErrorValue min_free(const SpaceSpec& space, const Vector& x, const IndexSet& pool, int m,
                    Functional tag) {
  ErrorValue best;
  best.tag = tag;
  if (m > static_cast<int>(pool.size())) {
    best.infeasible = true;
    best.value = kInf;
    return best;
  }
  best.value = kInf;
  for_each_subset_of(pool, m, [&](const IndexSet& a) {
    std::vector<double> coeffs;
    const double v = approx_error(space, x, a, &coeffs);
    if (v < best.value) {
      best.value = v;
      best.witness_set = a;
      best.witness_coeffs = std::move(coeffs);
    }
    return true;
  });
  return best;
}

ErrorValue min_projection(const SpaceSpec& space, const Vector& x, const IndexSet& pool,
                          int max_size, Functional tag) {
  ErrorValue best;
  best.tag = tag;
  best.value = kInf;
  const int hi = std::min<int>(max_size, static_cast<int>(pool.size()));
  for_each_subset_sized(pool, 0, hi, [&](const IndexSet& a) {
    const double v = projection_error(space, x, a);
    if (v < best.value) {
      best.value = v;
      best.witness_set = a;
    }
    return true;
  });
  best.witness_coeffs.assign(best.witness_set.size(), 0.0);
  for (std::size_t k = 0; k < best.witness_set.size(); ++k)
    best.witness_coeffs[k] = x[static_cast<std::size_t>(best.witness_set[k])];
  return best;
}

}  // namespace

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> best_coeffs_on_support(const SpaceSpec& space, const Vector& x,
                                           const IndexSet& a) {
  std::vector<double> coeffs(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    coeffs[k] = x[static_cast<std::size_t>(a[k])];
  if (is_absolute(space) || a.empty()) return coeffs;

  // General convex case: cyclic golden-section coordinate descent from the
  // coordinate-restriction start.
  Vector y = x;
  for (std::size_t k = 0; k < a.size(); ++k)
    y[static_cast<std::size_t>(a[k])] -= coeffs[k];
  const double bracket = 2.0 * max_abs_coeff(x) + 1.0;
  for (int cycle = 0; cycle < 8; ++cycle) {
    double moved = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::size_t i = static_cast<std::size_t>(a[k]);
      auto line = [&](double delta) {
        Vector z = y;
        z[i] = x[i] - (coeffs[k] + delta);
        return norm(space, z);
      };
      const double step = golden_section_min(line, -bracket, bracket, 1e-11);
      coeffs[k] += step;
      y[i] = x[i] - coeffs[k];
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-11) break;
  }
  return coeffs;
}

ErrorValue sigma(const SpaceSpec& space, const Vector& x, int m) {
  check_m(x, m);
  IndexSet pool;
  for (int i = 0; i < space.dim; ++i) pool.push_back(i);
  return min_free(space, x, pool, m, Functional::Sigma);
}

ErrorValue sigma_tilde(const SpaceSpec& space, const Vector& x, int m) {
  check_m(x, m);
  IndexSet pool;
  for (int i = 0; i < space.dim; ++i) pool.push_back(i);
  return min_projection(space, x, pool, m, Functional::SigmaTilde);
}

ErrorValue sigma_L_at(const SpaceSpec& space, const Vector& x, int m, int alpha) {
  check_m(x, m);
  return min_free(space, x, left_pool(alpha), m, Functional::SigmaL);
}

ErrorValue sigma_R_at(const SpaceSpec& space, const Vector& x, int m, int beta) {
  check_m(x, m);
  return min_free(space, x, right_pool(beta, space.dim), m, Functional::SigmaR);
}

ErrorValue sigma_tilde_L_at(const SpaceSpec& space, const Vector& x, int m, int alpha) {
  check_m(x, m);
  return min_projection(space, x, left_pool(alpha), m, Functional::SigmaTildeL);
}

ErrorValue sigma_tilde_R_at(const SpaceSpec& space, const Vector& x, int m, int beta) {
  check_m(x, m);
  return min_projection(space, x, right_pool(beta, space.dim), m, Functional::SigmaTildeR);
}

ErrorValue sigma_L(const SpaceSpec& space, const Vector& x, int m) {
  if (m == 0) return sigma(space, x, 0);
  return sigma_L_at(space, x, m, greedy_selection(x, m).alpha);
}

ErrorValue sigma_R(const SpaceSpec& space, const Vector& x, int m) {
  if (m == 0) return sigma(space, x, 0);
  return sigma_R_at(space, x, m, greedy_selection(x, m).beta);
}

ErrorValue sigma_tilde_L(const SpaceSpec& space, const Vector& x, int m) {
  if (m == 0) return sigma_tilde(space, x, 0);
  return sigma_tilde_L_at(space, x, m, greedy_selection(x, m).alpha);
}

ErrorValue sigma_tilde_R(const SpaceSpec& space, const Vector& x, int m) {
  if (m == 0) return sigma_tilde(space, x, 0);
  return sigma_tilde_R_at(space, x, m, greedy_selection(x, m).beta);
}

ErrorValue dist_indicator_at(const SpaceSpec& space, const Vector& x, int m, Side side,
                             int alpha, int beta) {
  check_m(x, m);
  ErrorValue best;
  best.tag = Functional::DistIndicator;
  best.value = kInf;
  const double bracket = max_abs_coeff(x);

  auto consider = [&](const IndexSet& a) {
    double v, at;
    if (a.empty()) {
      v = norm(space, x);
      at = 0.0;
    } else {
      auto f = [&](double scalar) {
        Vector y = x;
        for (int i : a) y[static_cast<std::size_t>(i)] -= scalar;
        return norm(space, y);
      };
      at = golden_section_min(f, -bracket, bracket, 1e-10);
      v = f(at);
    }
    if (v < best.value) {
      best.value = v;
      best.witness_set = a;
      best.witness_coeffs = {at};
    }
    return true;
  };

  if (side == Side::Unconstrained) {
    for_each_subset(space.dim, m, consider);
  } else {
    if (side == Side::Left || side == Side::Both)
      for_each_subset_sized(left_pool(alpha), 0, std::min<int>(m, alpha), consider);
    if (side == Side::Right || side == Side::Both) {
      IndexSet pool = right_pool(beta, space.dim);
      for_each_subset_sized(pool, 0, std::min<int>(m, static_cast<int>(pool.size())), consider);
    }
  }
  if (!std::isfinite(best.value)) {
    best.infeasible = true;
    best.value = kInf;
  }
  return best;
}

ErrorValue dist_indicator(const SpaceSpec& space, const Vector& x, int m, Side side) {
  check_m(x, m);
  int alpha = 0, beta = static_cast<int>(x.size()) - 1;
  if (side != Side::Unconstrained && m > 0) {
    GreedySelection sel = greedy_selection(x, m);
    alpha = sel.alpha;
    beta = sel.beta;
  } else if (side != Side::Unconstrained && m == 0) {
    // Empty Lambda: only A = {} is admissible on either side.
    alpha = 0;
    beta = static_cast<int>(x.size()) - 1;
  }
  return dist_indicator_at(space, x, m, side, alpha, beta);
}

}  // namespace greedytk
