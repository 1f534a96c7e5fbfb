#pragma once

#include <cstdint>

#include "greedytk/space.hpp"
#include "greedytk/vector.hpp"

namespace greedytk {

/// phi(n) = max over |A| <= n of ||1_A||. Exact by enumeration; for
/// absolute norms only |A| = n is scanned (the norm is monotone in A).
double fundamental_function(const SpaceSpec& space, int n);

/// Exact democratic constant over all |A| <= |B| <= size_cap.
ConstantEstimate democratic_constant(const SpaceSpec& space, int size_cap);

/// Exact constants restricted to A < B (conservative) or B < A (reverse),
/// with |A| <= |B| <= size_cap.
ConstantEstimate conservative_constant(const SpaceSpec& space, int size_cap);
ConstantEstimate reverse_conservative_constant(const SpaceSpec& space, int size_cap);

/// Exactly 1 for absolute norms (G_m is a coordinate projection);
/// otherwise a corpus lower bound.
ConstantEstimate quasi_greedy_constant(const SpaceSpec& space,
                                       const std::vector<Vector>& corpus);

enum class GreedyKind {
  PartiallyGreedy,         // ||x - G_m x|| / sigma_tilde_L
  ReversePartiallyGreedy,  // ||x - G_m x|| / sigma_tilde_R
  AlmostGreedy,            // ||x - G_m x|| / sigma_tilde
  PropertyStar,            // ||x - G_m x|| / sigma_L
  PropertyStarStar,        // ||x - G_m x|| / sigma_R
  GagSet,                  // denominator minimized over sided-union sets
  TailPartiallyGreedy,     // original normalization: ||P_(m,d] x|| denominator
};

/// Certified lower bound: sup over the corpus and m of the kind's ratio,
/// skipping infeasible or zero denominators (counted in `budget`).
ConstantEstimate greedy_type_constant(const SpaceSpec& space, GreedyKind kind,
                                      const std::vector<Vector>& corpus);

/// Deterministic seeded corpus: signed indicators, geometric-decay vectors,
/// and the proof-extremal shapes 1_A + (1+eps) 1_B with eps in {1e-3, 1e-1}.
std::vector<Vector> make_corpus(int dim, int count, std::uint64_t seed);

}  // namespace greedytk
