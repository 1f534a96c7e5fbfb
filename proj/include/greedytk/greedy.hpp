#pragma once

#include "greedytk/vector.hpp"

namespace greedytk {

/// Full greedy ordering of all d indices by decreasing |coefficient|, ties
/// broken by smallest index. alpha/beta are min/max of the first m entries
/// (0-based; -1 when m == 0).
struct GreedySelection {
  std::vector<int> order;
  std::vector<double> values;  // coefficient at order[i]
  int m = 0;
  int alpha = -1;
  int beta = -1;
};

GreedySelection greedy_ordering(const Vector& x);
GreedySelection greedy_selection(const Vector& x, int m);

/// Lambda_m as a sorted index set under the canonical tie policy.
IndexSet lambda_m(const Vector& x, int m);

/// G_m(x) = P_{Lambda_m(x)}(x).
Vector tga(const Vector& x, int m);

/// A^tau(x): indices with |coefficient| >= tau * max |coefficient|.
IndexSet weak_set(const Vector& x, double tau);

enum class WtgaPolicy { Greedy, Lazy };

struct WeakSelection {
  IndexSet indices;  // Lambda_m^tau(x), sorted
  double tau = 0.5;
  WtgaPolicy policy = WtgaPolicy::Greedy;
};

/// Builds Lambda_m^tau(x). Greedy policy reproduces the TGA set; lazy picks
/// at each step the smallest-magnitude index still tau-admissible against
/// the unselected maximum.
WeakSelection wtga_select(const Vector& x, int m, double tau, WtgaPolicy policy);
Vector wtga(const Vector& x, int m, double tau, WtgaPolicy policy);

enum class BranchRule { SmallestIndex, LargestCoefficient, LargestIndex };

struct BranchSelectorSpec {
  double tau = 0.5;
  BranchRule rule = BranchRule::SmallestIndex;
};

/// Indices picked by m rounds of the branch selector on successive
/// residuals, in selection order.
std::vector<int> bga_select(const Vector& x, int m, const BranchSelectorSpec& selector);
Vector bga(const Vector& x, int m, const BranchSelectorSpec& selector);

/// All index sets that qualify as Lambda_m(x) when ties make the greedy set
/// non-unique. Returns at most `cap` variants (canonical first); an empty
/// cap-overflow is signalled by returning just the canonical set.
std::vector<IndexSet> lambda_variants(const Vector& x, int m, int cap = 24);

}  // namespace greedytk
