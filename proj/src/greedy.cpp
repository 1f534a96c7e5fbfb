#include "greedytk/greedy.hpp"

#include <numeric>
#include <stdexcept>

namespace greedytk {

GreedySelection greedy_ordering(const Vector& x) {
  return greedy_selection(x, static_cast<int>(x.size()));
}

GreedySelection greedy_selection(const Vector& x, int m) {
  const int d = static_cast<int>(x.size());
  if (m < 0 || m > d) throw std::out_of_range("greedy selection size out of range");
  GreedySelection sel;
  sel.order.resize(static_cast<std::size_t>(d));
  std::iota(sel.order.begin(), sel.order.end(), 0);
  std::stable_sort(sel.order.begin(), sel.order.end(), [&x](int a, int b) {
    const double ma = std::abs(x[static_cast<std::size_t>(a)]);
    const double mb = std::abs(x[static_cast<std::size_t>(b)]);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  sel.values.reserve(static_cast<std::size_t>(d));
  for (int i : sel.order) sel.values.push_back(x[static_cast<std::size_t>(i)]);
  sel.m = m;
  if (m > 0) {
    sel.alpha = *std::min_element(sel.order.begin(), sel.order.begin() + m);
    sel.beta = *std::max_element(sel.order.begin(), sel.order.begin() + m);
  }
  return sel;
}

IndexSet lambda_m(const Vector& x, int m) {
  GreedySelection sel = greedy_selection(x, m);
  IndexSet a(sel.order.begin(), sel.order.begin() + m);
  std::sort(a.begin(), a.end());
  return a;
}

Vector tga(const Vector& x, int m) {
  return project(x, lambda_m(x, m));
}

IndexSet weak_set(const Vector& x, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0,1)");
  const double mx = max_abs_coeff(x);
  if (mx == 0.0) throw std::invalid_argument("weak_set of the zero vector");
  IndexSet a;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (std::abs(x[static_cast<std::size_t>(i)]) >= tau * mx) a.push_back(i);
  return a;
}

WeakSelection wtga_select(const Vector& x, int m, double tau, WtgaPolicy policy) {
  const int d = static_cast<int>(x.size());
  if (m < 0 || m > d) throw std::out_of_range("wtga selection size out of range");
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0,1)");
  WeakSelection sel;
  sel.tau = tau;
  sel.policy = policy;
  if (policy == WtgaPolicy::Greedy) {
    sel.indices = lambda_m(x, m);
    return sel;
  }
  std::vector<bool> taken(static_cast<std::size_t>(d), false);
  for (int step = 0; step < m; ++step) {
    // Admissible: |x_i| >= tau * max over the other unselected coefficients.
    // Selecting such an index keeps the final weak inequality valid because
    // the unselected maximum can only shrink afterwards.
    int pick = -1;
    for (int i = 0; i < d; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      double other_max = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == i || taken[static_cast<std::size_t>(j)]) continue;
        other_max = std::max(other_max, std::abs(x[static_cast<std::size_t>(j)]));
      }
      if (std::abs(x[static_cast<std::size_t>(i)]) < tau * other_max) continue;
      if (pick < 0 || std::abs(x[static_cast<std::size_t>(i)]) < std::abs(x[static_cast<std::size_t>(pick)]))
        pick = i;
    }
    if (pick < 0) throw std::logic_error("wtga: no admissible index");
    taken[static_cast<std::size_t>(pick)] = true;
    sel.indices.push_back(pick);
  }
  std::sort(sel.indices.begin(), sel.indices.end());
  return sel;
}

Vector wtga(const Vector& x, int m, double tau, WtgaPolicy policy) {
  return project(x, wtga_select(x, m, tau, policy).indices);
}

std::vector<int> bga_select(const Vector& x, int m, const BranchSelectorSpec& selector) {
  if (!(selector.tau > 0.0 && selector.tau < 1.0))
    throw std::invalid_argument("tau must lie in (0,1)");
  if (m > static_cast<int>(support(x).size()))
    throw std::out_of_range("bga: m exceeds support size");
  std::vector<int> picked;
  Vector residual = x;
  for (int step = 0; step < m; ++step) {
    IndexSet adm = weak_set(residual, selector.tau);
    int pick = adm.front();
    switch (selector.rule) {
      case BranchRule::SmallestIndex:
        break;
      case BranchRule::LargestIndex:
        pick = adm.back();
        break;
      case BranchRule::LargestCoefficient:
        for (int i : adm) {
          if (std::abs(residual[static_cast<std::size_t>(i)]) >
              std::abs(residual[static_cast<std::size_t>(pick)]))
            pick = i;
        }
        break;
    }
    picked.push_back(pick);
    residual[static_cast<std::size_t>(pick)] = 0.0;
  }
  return picked;
}

Vector bga(const Vector& x, int m, const BranchSelectorSpec& selector) {
  std::vector<int> picked = bga_select(x, m, selector);
  return project(x, IndexSet(picked.begin(), picked.end()));
}

std::vector<IndexSet> lambda_variants(const Vector& x, int m, int cap) {
  const int d = static_cast<int>(x.size());
  if (m < 0 || m > d) throw std::out_of_range("lambda_variants size out of range");
  IndexSet canonical = lambda_m(x, m);
  if (m == 0 || m == d) return {canonical};
  GreedySelection sel = greedy_selection(x, m);
  const double boundary = std::abs(sel.values[static_cast<std::size_t>(m - 1)]);
  IndexSet forced, tied;
  for (int i = 0; i < d; ++i) {
    const double mag = std::abs(x[static_cast<std::size_t>(i)]);
    if (mag > boundary)
      forced.push_back(i);
    else if (mag == boundary)
      tied.push_back(i);
  }
  const int slots = m - static_cast<int>(forced.size());
  std::vector<IndexSet> variants;
  for_each_subset_of(tied, slots, [&](const IndexSet& fill) {
    IndexSet a = forced;
    a.insert(a.end(), fill.begin(), fill.end());
    std::sort(a.begin(), a.end());
    variants.push_back(std::move(a));
    return static_cast<int>(variants.size()) < cap;
  });
  if (static_cast<int>(variants.size()) >= cap) return {canonical};
  // Put the canonical set first.
  auto it = std::find(variants.begin(), variants.end(), canonical);
  if (it != variants.begin() && it != variants.end()) std::iter_swap(variants.begin(), it);
  return variants;
}

}  // namespace greedytk
