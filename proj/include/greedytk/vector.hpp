#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace greedytk {

/// Dense coefficient array over a fixed finite basis. Index 0 holds the
/// coefficient of e_1; all user-facing I/O is 1-based.
using Vector = std::vector<double>;

/// Sorted list of 0-based basis indices.
using IndexSet = std::vector<int>;

inline constexpr double kAbsTol = 1e-9;
inline constexpr double kRelTol = 1e-12;
inline constexpr int kDefaultDimCap = 24;

inline Vector zeros(int dim) { return Vector(static_cast<std::size_t>(dim), 0.0); }

inline Vector unit_vector(int dim, int i) {
  Vector x = zeros(dim);
  x.at(static_cast<std::size_t>(i)) = 1.0;
  return x;
}

/// 1_A as a coefficient vector.
inline Vector indicator(int dim, const IndexSet& a) {
  Vector x = zeros(dim);
  for (int i : a) x.at(static_cast<std::size_t>(i)) = 1.0;
  return x;
}

/// Indicator of the 1-based closed index range [lo, hi].
inline IndexSet range_set(int lo1, int hi1) {
  IndexSet a;
  for (int i = lo1; i <= hi1; ++i) a.push_back(i - 1);
  return a;
}

inline IndexSet support(const Vector& x) {
  IndexSet s;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (x[static_cast<std::size_t>(i)] != 0.0) s.push_back(i);
  return s;
}

/// Coordinate projection P_A(x): zero outside A.
inline Vector project(const Vector& x, const IndexSet& a) {
  Vector y = zeros(static_cast<int>(x.size()));
  for (int i : a) y.at(static_cast<std::size_t>(i)) = x.at(static_cast<std::size_t>(i));
  return y;
}

inline Vector subtract(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector dimension mismatch");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

inline Vector add(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector dimension mismatch");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

inline Vector scale(const Vector& x, double lambda) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = lambda * x[i];
  return z;
}

inline double max_abs_coeff(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

inline bool all_finite(const Vector& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

/// Visits every k-element subset of `pool` in lexicographic order.
/// The callback receives a sorted IndexSet; returning false stops early.
void for_each_subset_of(const IndexSet& pool, int k,
                        const std::function<bool(const IndexSet&)>& fn);

/// Visits every subset of {0,..,d-1} of size exactly k.
void for_each_subset(int d, int k, const std::function<bool(const IndexSet&)>& fn);

/// Visits subsets of `pool` of size `lo` through `hi` inclusive.
void for_each_subset_sized(const IndexSet& pool, int lo, int hi,
                           const std::function<bool(const IndexSet&)>& fn);

/// Deterministic uniform double in [0,1) from a raw 64-bit generator,
/// independent of libstdc++ distribution internals.
inline double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Seeded xorshift64 generator. Byte-identical output across platforms, so
/// reports produced from the same seed compare equal.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed)
      : state(seed ? seed * 2862933555777941757ULL + 3037000493ULL
                   : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  double real() { return uniform01(next()); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int sign() { return (next() & 1) ? 1 : -1; }
};

}  // namespace greedytk
