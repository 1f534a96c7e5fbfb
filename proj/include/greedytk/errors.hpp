#pragma once

#include "greedytk/space.hpp"
#include "greedytk/vector.hpp"

namespace greedytk {

enum class Functional {
  Sigma,
  SigmaTilde,
  SigmaL,
  SigmaR,
  SigmaTildeL,
  SigmaTildeR,
  DistIndicator,
};

/// A computed error functional value with the witness achieving it.
/// `infeasible` reifies the infimum over an empty admissible family;
/// inequality checks treat such right-hand sides as vacuously true.
struct ErrorValue {
  double value = 0.0;
  bool infeasible = false;
  IndexSet witness_set;
  std::vector<double> witness_coeffs;  // per witness_set entry; for
                                       // DistIndicator a single scalar a
  Functional tag = Functional::Sigma;
};

/// Best m-term approximation error with free coefficients (|A| = m).
ErrorValue sigma(const SpaceSpec& space, const Vector& x, int m);

/// Best projection error over |A| <= m.
ErrorValue sigma_tilde(const SpaceSpec& space, const Vector& x, int m);

/// Sided variants: the competing set lies strictly left of alpha_m(x)
/// (all indices < alpha_m) or strictly right of beta_m(x). The free-
/// coefficient forms require |A| = m exactly and can be infeasible; the
/// projection forms allow |A| <= m and admit A = {} always.
ErrorValue sigma_L(const SpaceSpec& space, const Vector& x, int m);
ErrorValue sigma_R(const SpaceSpec& space, const Vector& x, int m);
ErrorValue sigma_tilde_L(const SpaceSpec& space, const Vector& x, int m);
ErrorValue sigma_tilde_R(const SpaceSpec& space, const Vector& x, int m);

/// Variants taking an explicit boundary (0-based alpha/beta) so callers can
/// sweep alternative greedy sets under coefficient ties.
ErrorValue sigma_L_at(const SpaceSpec& space, const Vector& x, int m, int alpha);
ErrorValue sigma_R_at(const SpaceSpec& space, const Vector& x, int m, int beta);
ErrorValue sigma_tilde_L_at(const SpaceSpec& space, const Vector& x, int m, int alpha);
ErrorValue sigma_tilde_R_at(const SpaceSpec& space, const Vector& x, int m, int beta);

enum class Side { Both, Left, Right, Unconstrained };

/// min ||x - a 1_A|| over scalars a and admissible A. Sided families use
/// |A| <= m (with A = {} admissible); Unconstrained uses |A| = m exactly.
/// The inner 1-D minimization is golden-section on a (convex in a).
ErrorValue dist_indicator(const SpaceSpec& space, const Vector& x, int m, Side side);
ErrorValue dist_indicator_at(const SpaceSpec& space, const Vector& x, int m, Side side,
                             int alpha, int beta);

/// Optimal coefficients supported on A minimizing ||x - sum a_i e_i||.
/// For absolute norms this is x restricted to A; otherwise cyclic
/// golden-section coordinate descent started from that point.
std::vector<double> best_coeffs_on_support(const SpaceSpec& space, const Vector& x,
                                           const IndexSet& a);

/// Golden-section minimizer of a convex function on [lo, hi].
double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double tol = 1e-10);

}  // namespace greedytk
