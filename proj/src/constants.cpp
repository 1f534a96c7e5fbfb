#include "greedytk/constants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "greedytk/errors.hpp"
#include "greedytk/greedy.hpp"

namespace greedytk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SubsetRecord {
  IndexSet set;
  int min_idx = 0;
  int max_idx = 0;
  double norm_value = 0.0;
};

std::vector<SubsetRecord> enumerate_indicators(const SpaceSpec& space, int size_cap) {
  std::vector<SubsetRecord> records;
  for (int s = 1; s <= std::min(size_cap, space.dim); ++s) {
    for_each_subset(space.dim, s, [&](const IndexSet& a) {
      SubsetRecord r;
      r.set = a;
      r.min_idx = a.front();
      r.max_idx = a.back();
      r.norm_value = norm(space, indicator(space.dim, a));
      records.push_back(std::move(r));
      return true;
    });
  }
  return records;
}

ConstantEstimate sided_constant(const SpaceSpec& space, int size_cap, bool reverse) {
  if (size_cap > space.dim) throw std::invalid_argument("size cap exceeds dimension");
  const int d = space.dim;
  auto records = enumerate_indicators(space, size_cap);

  // lowest ||1_B|| by (position bound, |B|): for the conservative direction
  // min B >= t, for the reverse direction max B <= t.
  std::vector<std::vector<double>> lo(static_cast<std::size_t>(d),
                                      std::vector<double>(static_cast<std::size_t>(size_cap + 1), kInf));
  std::vector<std::vector<const SubsetRecord*>> lo_wit(
      static_cast<std::size_t>(d),
      std::vector<const SubsetRecord*>(static_cast<std::size_t>(size_cap + 1), nullptr));
  for (const auto& r : records) {
    const std::size_t t = static_cast<std::size_t>(reverse ? r.max_idx : r.min_idx);
    const std::size_t s = static_cast<std::size_t>(r.set.size());
    if (r.norm_value < lo[t][s]) {
      lo[t][s] = r.norm_value;
      lo_wit[t][s] = &r;
    }
  }
  // Aggregate over the position bound so lookups cover "min B >= t" /
  // "max B <= t" in O(1).
  if (!reverse) {
    for (int t = d - 2; t >= 0; --t)
      for (int s = 1; s <= size_cap; ++s)
        if (lo[static_cast<std::size_t>(t + 1)][static_cast<std::size_t>(s)] <
            lo[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)]) {
          lo[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
              lo[static_cast<std::size_t>(t + 1)][static_cast<std::size_t>(s)];
          lo_wit[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
              lo_wit[static_cast<std::size_t>(t + 1)][static_cast<std::size_t>(s)];
        }
  } else {
    for (int t = 1; t < d; ++t)
      for (int s = 1; s <= size_cap; ++s)
        if (lo[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(s)] <
            lo[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)]) {
          lo[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
              lo[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(s)];
          lo_wit[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
              lo_wit[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(s)];
        }
  }

  ConstantEstimate est;
  est.exact = true;
  est.value = 0.0;
  for (const auto& a : records) {
    // B must lie strictly past A on the relevant side, with |B| >= |A|.
    const int bound = reverse ? a.min_idx - 1 : a.max_idx + 1;
    if (bound < 0 || bound >= d) continue;
    for (int s = static_cast<int>(a.set.size()); s <= size_cap; ++s) {
      const double denom = lo[static_cast<std::size_t>(bound)][static_cast<std::size_t>(s)];
      if (!std::isfinite(denom) || denom <= 0.0) continue;
      const double ratio = a.norm_value / denom;
      if (ratio > est.value) {
        est.value = ratio;
        est.witness_a = a.set;
        est.witness_b = lo_wit[static_cast<std::size_t>(bound)][static_cast<std::size_t>(s)]->set;
      }
    }
  }
  est.budget = "exhaustive over |A| <= |B| <= " + std::to_string(size_cap);
  if (est.value < 1.0) {
    // The smallest admissible constant; clamp to the conventional floor.
    est.budget += "; max ratio " + std::to_string(est.value) + " clamped to 1";
    est.value = 1.0;
    est.witness_a.clear();
    est.witness_b.clear();
  }
  return est;
}

}  // namespace

double fundamental_function(const SpaceSpec& space, int n) {
  if (n < 0 || n > space.dim) throw std::out_of_range("fundamental_function: n out of range");
  if (n == 0) return 0.0;
  double best = 0.0;
  const int lo = is_absolute(space) ? n : 1;  // monotone in A for absolute norms
  for (int s = lo; s <= n; ++s) {
    for_each_subset(space.dim, s, [&](const IndexSet& a) {
      best = std::max(best, norm(space, indicator(space.dim, a)));
      return true;
    });
  }
  return best;
}

ConstantEstimate democratic_constant(const SpaceSpec& space, int size_cap) {
  if (size_cap > space.dim) throw std::invalid_argument("size cap exceeds dimension");
  std::vector<double> hi(static_cast<std::size_t>(size_cap + 1), 0.0);
  std::vector<double> lo(static_cast<std::size_t>(size_cap + 1), kInf);
  std::vector<IndexSet> hi_wit(static_cast<std::size_t>(size_cap + 1));
  std::vector<IndexSet> lo_wit(static_cast<std::size_t>(size_cap + 1));
  for (int s = 1; s <= size_cap; ++s) {
    for_each_subset(space.dim, s, [&](const IndexSet& a) {
      const double v = norm(space, indicator(space.dim, a));
      if (v > hi[static_cast<std::size_t>(s)]) {
        hi[static_cast<std::size_t>(s)] = v;
        hi_wit[static_cast<std::size_t>(s)] = a;
      }
      if (v < lo[static_cast<std::size_t>(s)]) {
        lo[static_cast<std::size_t>(s)] = v;
        lo_wit[static_cast<std::size_t>(s)] = a;
      }
      return true;
    });
  }
  ConstantEstimate est;
  est.exact = true;
  est.value = 1.0;  // A = B always gives ratio 1
  double run_hi = 0.0;
  IndexSet run_wit;
  for (int m = 1; m <= size_cap; ++m) {
    if (hi[static_cast<std::size_t>(m)] > run_hi) {
      run_hi = hi[static_cast<std::size_t>(m)];
      run_wit = hi_wit[static_cast<std::size_t>(m)];
    }
    const double ratio = run_hi / lo[static_cast<std::size_t>(m)];
    if (ratio > est.value) {
      est.value = ratio;
      est.witness_a = run_wit;
      est.witness_b = lo_wit[static_cast<std::size_t>(m)];
    }
  }
  est.budget = "exhaustive over |A| <= |B| <= " + std::to_string(size_cap);
  return est;
}

ConstantEstimate conservative_constant(const SpaceSpec& space, int size_cap) {
  return sided_constant(space, size_cap, /*reverse=*/false);
}

ConstantEstimate reverse_conservative_constant(const SpaceSpec& space, int size_cap) {
  return sided_constant(space, size_cap, /*reverse=*/true);
}

ConstantEstimate quasi_greedy_constant(const SpaceSpec& space,
                                       const std::vector<Vector>& corpus) {
  ConstantEstimate est;
  if (is_absolute(space)) {
    est.value = 1.0;
    est.exact = true;
    est.budget = "absolute norm: G_m is a coordinate projection";
    return est;
  }
  est.value = 1.0;  // m = dim gives ratio 1
  est.exact = false;
  for (const auto& x : corpus) {
    const double nx = norm(space, x);
    if (nx <= 0.0) continue;
    for (int m = 1; m <= space.dim; ++m) {
      const double ratio = norm(space, tga(x, m)) / nx;
      if (ratio > est.value) {
        est.value = ratio;
        est.witness_x = x;
        est.witness_m = m;
      }
    }
  }
  est.budget = "corpus of " + std::to_string(corpus.size()) + " vectors";
  return est;
}

ConstantEstimate greedy_type_constant(const SpaceSpec& space, GreedyKind kind,
                                      const std::vector<Vector>& corpus) {
  if (corpus.empty()) throw std::invalid_argument("greedy_type_constant: empty corpus");
  ConstantEstimate est;
  est.exact = false;
  est.value = 0.0;
  long skipped = 0;

  auto denominator = [&](const Vector& x, int m) -> double {
    switch (kind) {
      case GreedyKind::PartiallyGreedy:
        return sigma_tilde_L(space, x, m).value;
      case GreedyKind::ReversePartiallyGreedy:
        return sigma_tilde_R(space, x, m).value;
      case GreedyKind::AlmostGreedy:
        return sigma_tilde(space, x, m).value;
      case GreedyKind::PropertyStar: {
        ErrorValue e = sigma_L(space, x, m);
        return e.infeasible ? kInf : e.value;
      }
      case GreedyKind::PropertyStarStar: {
        ErrorValue e = sigma_R(space, x, m);
        return e.infeasible ? kInf : e.value;
      }
      case GreedyKind::GagSet: {
        // A subsets of {1..alpha-1} union {beta+1..}, |A| <= m, free coeffs.
        GreedySelection sel = greedy_selection(x, m);
        IndexSet pool;
        for (int i = 0; i < sel.alpha; ++i) pool.push_back(i);
        for (int i = sel.beta + 1; i < space.dim; ++i) pool.push_back(i);
        double best = kInf;
        for_each_subset_sized(pool, 0, std::min<int>(m, static_cast<int>(pool.size())),
                              [&](const IndexSet& a) {
                                std::vector<double> coeffs =
                                    best_coeffs_on_support(space, x, a);
                                Vector y = x;
                                for (std::size_t k = 0; k < a.size(); ++k)
                                  y[static_cast<std::size_t>(a[k])] -= coeffs[k];
                                best = std::min(best, norm(space, y));
                                return true;
                              });
        return best;
      }
      case GreedyKind::TailPartiallyGreedy: {
        Vector tail = x;
        for (int i = 0; i < m; ++i) tail[static_cast<std::size_t>(i)] = 0.0;
        return norm(space, tail);
      }
    }
    return kInf;
  };

  for (const auto& x : corpus) {
    for (int m = 1; m <= space.dim; ++m) {
      const double num = norm(space, subtract(x, tga(x, m)));
      const double den = denominator(x, m);
      if (!std::isfinite(den) || den <= kAbsTol) {
        ++skipped;
        continue;
      }
      const double ratio = num / den;
      if (ratio > est.value) {
        est.value = ratio;
        est.witness_x = x;
        est.witness_m = m;
      }
    }
  }
  est.budget = "corpus of " + std::to_string(corpus.size()) + " vectors; skipped " +
               std::to_string(skipped) + " vacuous denominators";
  return est;
}

std::vector<Vector> make_corpus(int dim, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> corpus;
  corpus.reserve(static_cast<std::size_t>(count));
  auto random_subset = [&](int avoid_mask_of) -> IndexSet {
    (void)avoid_mask_of;
    IndexSet a;
    while (a.empty()) {
      a.clear();
      for (int i = 0; i < dim; ++i)
        if (rng.next() & 1) a.push_back(i);
    }
    return a;
  };
  for (int k = 0; k < count; ++k) {
    switch (k % 4) {
      case 0: {  // signed indicator
        Vector x = zeros(dim);
        for (int i : random_subset(0)) x[static_cast<std::size_t>(i)] = rng.sign();
        corpus.push_back(std::move(x));
        break;
      }
      case 1: {  // geometric decay on a random support
        const double r = 0.3 + 0.6 * rng.real();
        Vector x = zeros(dim);
        double mag = 1.0;
        for (int i : random_subset(0)) {
          x[static_cast<std::size_t>(i)] = rng.sign() * mag;
          mag *= r;
        }
        corpus.push_back(std::move(x));
        break;
      }
      case 2:
      case 3: {  // proof-extremal 1_A + (1+eps) 1_B with disjoint A, B
        const double eps = (k % 4 == 2) ? 1e-3 : 1e-1;
        IndexSet a = random_subset(0);
        IndexSet b;
        for (int i = 0; i < dim; ++i)
          if (!std::binary_search(a.begin(), a.end(), i) && (rng.next() & 1)) b.push_back(i);
        if (b.empty()) {
          // steal one element so both sets are nonempty
          if (a.size() > 1) {
            b.push_back(a.back());
            a.pop_back();
          } else {
            b = a;
            a.clear();
          }
        }
        Vector x = zeros(dim);
        for (int i : a) x[static_cast<std::size_t>(i)] = 1.0;
        for (int i : b) x[static_cast<std::size_t>(i)] = 1.0 + eps;
        corpus.push_back(std::move(x));
        break;
      }
    }
  }
  return corpus;
}

}  // namespace greedytk
