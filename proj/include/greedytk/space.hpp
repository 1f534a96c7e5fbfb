#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "greedytk/vector.hpp"
#include <nlohmann/json_fwd.hpp>

namespace greedytk {

enum class NormKind { Lp, WeightedL1, PolyhedralAbs, DualOf };

/// A finite-dimensional normed space with an evaluable norm.
///
/// PolyhedralAbs stores maximal family rows only; subsets of a row are
/// implied because the row sum of |x_i| dominates every subset sum.
struct SpaceSpec {
  int dim = 0;
  NormKind kind = NormKind::Lp;
  double p = 2.0;                    // Lp exponent, +inf for the sup norm
  std::vector<double> weights;       // WeightedL1
  std::vector<IndexSet> family;      // PolyhedralAbs rows, 0-based, sorted
  std::shared_ptr<SpaceSpec> inner;  // DualOf
  std::optional<int> example_n;      // set when built by example_space
};

SpaceSpec lp_space(int dim, double p);
SpaceSpec weighted_l1_space(std::vector<double> weights);
/// Adds all singletons absent from the family so the result is a norm.
SpaceSpec polyhedral_abs_space(int dim, std::vector<IndexSet> family);
SpaceSpec dual_of(const SpaceSpec& inner);

/// The 2*n!-dimensional polyhedral space whose family consists, for each
/// level m = 1..n, of the size-m! subsets of positions >= m! (1-based).
SpaceSpec example_space(int n, int dim_cap = kDefaultDimCap);

bool operator==(const SpaceSpec& a, const SpaceSpec& b);

/// True when the norm depends only on coefficient magnitudes, so that
/// coordinate projections and sign flips are contractive. Holds for every
/// kind representable here (the dual of an absolute norm is absolute).
bool is_absolute(const SpaceSpec& space);

double norm(const SpaceSpec& space, const Vector& x);

struct DualResult {
  double value = 0.0;
  Vector witness;  // unit-ball vector attaining sum f_i x_i = value
};

/// max { sum f_i x_i : ||x|| <= 1 }. Lp goes through the conjugate
/// exponent; PolyhedralAbs is solved exactly by LP over the unit-ball rows.
DualResult dual_norm_witness(const SpaceSpec& space, const Vector& f);
double dual_norm(const SpaceSpec& space, const Vector& f);

struct ConstantEstimate {
  double value = 0.0;
  bool exact = false;  // false means certified lower bound
  IndexSet witness_a;  // sets achieving the reported ratio, when applicable
  IndexSet witness_b;
  Vector witness_x;    // vector witness, when applicable
  int witness_m = 0;
  std::string budget;  // enumeration / sampling parameters, human readable
  std::uint64_t seed = 0;
};

/// Basis constant K_b = max_m ||P_[1,m]||. Exactly 1 for absolute norms;
/// otherwise a sampled lower bound. `force_sampling` exercises the
/// sampling path even on absolute norms.
ConstantEstimate basis_constant(const SpaceSpec& space, int samples = 200,
                                std::uint64_t seed = 1, bool force_sampling = false);

nlohmann::json save_space(const SpaceSpec& space);
SpaceSpec load_space(const nlohmann::json& j);
SpaceSpec load_space_file(const std::string& path);
void save_space_file(const SpaceSpec& space, const std::string& path);

}  // namespace greedytk
