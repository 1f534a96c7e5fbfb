#pragma once

#include <cstdint>
#include <string>

#include "greedytk/space.hpp"
#include "greedytk/vector.hpp"
#include <nlohmann/json.hpp>

namespace greedytk {

/// Outcome of one inequality check. Pass iff `violations` is empty;
/// `vacuous` counts instances skipped for infeasible or zero denominators.
struct CheckReport {
  std::string id;
  long instances = 0;
  double max_ratio = 0.0;
  double bound = 0.0;     // asserted bound; ignored when !asserted
  bool asserted = true;   // reporting-only checks never produce violations
  std::vector<nlohmann::json> violations;
  long vacuous = 0;
  nlohmann::json extra;   // per-check diagnostics

  bool pass() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  int corpus_size = 200;
  int size_cap = 4;       // subset-enumeration cap inside checks
  double tau = 0.5;
};

// Lemma-level sign and magnitude bounds for quasi-greedy bases; requires
// exact K (absolute norms, K = 1).
CheckReport check_sign_unconditionality(const SpaceSpec& space, const VerifyConfig& cfg);
CheckReport check_min_inequality(const SpaceSpec& space, const VerifyConfig& cfg);

// ||x - G_m x|| against sigma_tilde_L with the proof bound 1 + K + 8 K^4 Gc,
// plus the converse witness family 1_A + (1+eps) 1_B.
CheckReport check_pg_bound(const SpaceSpec& space, const VerifyConfig& cfg);

// Free-coefficient sided bounds with the proof constant
// K Kb + 16 K^4 G (Kb+1) + K (Kb+1) + 1 (G = Gc or Gr by side).
CheckReport check_property_star(const SpaceSpec& space, const VerifyConfig& cfg);
CheckReport check_property_star_star(const SpaceSpec& space, const VerifyConfig& cfg);

// Sup ratio over sided-union competing sets, and the lambda-overlap variant
// with floor(lambda m) budget for lambda in {0, 1/4, 1/2}. Reporting only.
CheckReport check_gag(const SpaceSpec& space, const VerifyConfig& cfg);

// Sup of ||x - G_m x|| / d(x, a 1_A) per side; reporting only.
CheckReport check_indicator_characterization(const SpaceSpec& space, const VerifyConfig& cfg);

// Two-sided empirical equivalence for the C = 1 characterizations; the
// reverse flag swaps the sided conditions.
CheckReport check_one_pg(const SpaceSpec& space, const VerifyConfig& cfg, bool reverse);

// Smallest empirical property-P(tau) constant over capped sets and
// coefficient grids in [1, 1/tau^2]. Reporting only.
CheckReport check_property_p_tau(const SpaceSpec& space, const VerifyConfig& cfg);

// Branch-greedy pipeline: empirical (bage1) constant including the
// theta-scaling witnesses, then the derived conservative / reverse /
// sign-bound assertions.
CheckReport check_bga_theorems(const SpaceSpec& space, const VerifyConfig& cfg);

// Weak-vs-thresholding ratios: greedy policy must give ratio 1; lazy policy
// and the lambda-overlap ratios are reported as finite empirical sups.
CheckReport check_wtga_vs_tga(const SpaceSpec& space, const VerifyConfig& cfg);

// Exact-constant lattice: Gamma >= max(Gc, Gr) and the two-sided splitting
// bound Gamma <= max(Gc,Gr) (2 Kb + 1) + 2 Kb.
CheckReport check_crd_bound(const SpaceSpec& space, const VerifyConfig& cfg);

// phi(|A|) min|a_i| <= 4 K^2 Gamma ||sum a_i e_i|| on grids over capped sets.
CheckReport check_agmin(const SpaceSpec& space, const VerifyConfig& cfg);

/// Runs the named suite ("all" or a single check id) and returns reports
/// sorted by check id. Unknown names throw std::invalid_argument.
std::vector<CheckReport> run_suite(const SpaceSpec& space, const std::string& suite,
                                   const VerifyConfig& cfg);

/// One JSON object per line, deterministic for a fixed (space, suite, cfg).
std::string reports_to_jsonl(const std::vector<CheckReport>& reports);

std::vector<std::string> suite_names();

}  // namespace greedytk
