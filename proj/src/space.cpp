#include "greedytk/space.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

#include "greedytk/simplex.hpp"
#include <nlohmann/json.hpp>

namespace greedytk {

namespace {

using nlohmann::json;

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_dim(const SpaceSpec& space, const Vector& x) {
  if (static_cast<int>(x.size()) != space.dim)
    throw std::invalid_argument("vector dimension does not match space dimension");
}

void validate_family(int dim, const std::vector<IndexSet>& family) {
  if (family.empty()) throw std::invalid_argument("polyhedral family must be nonempty");
  for (const auto& row : family) {
    for (int i : row)
      if (i < 0 || i >= dim) throw std::invalid_argument("family index out of range");
  }
}

}  // namespace

SpaceSpec lp_space(int dim, double p) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("Lp requires p >= 1");
  SpaceSpec s;
  s.dim = dim;
  s.kind = NormKind::Lp;
  s.p = p;
  return s;
}

SpaceSpec weighted_l1_space(std::vector<double> weights) {
  if (weights.empty()) throw std::invalid_argument("weights must be nonempty");
  for (double w : weights)
    if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
  SpaceSpec s;
  s.dim = static_cast<int>(weights.size());
  s.kind = NormKind::WeightedL1;
  s.weights = std::move(weights);
  return s;
}

SpaceSpec polyhedral_abs_space(int dim, std::vector<IndexSet> family) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
  validate_family(dim, family);
  std::set<IndexSet> rows;
  std::vector<bool> covered(static_cast<std::size_t>(dim), false);
  for (auto row : family) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (row.empty()) continue;
    for (int i : row) covered[static_cast<std::size_t>(i)] = true;
    rows.insert(std::move(row));
  }
  // Missing singletons would leave a seminorm: add them.
  for (int i = 0; i < dim; ++i)
    if (!covered[static_cast<std::size_t>(i)]) rows.insert(IndexSet{i});
  if (rows.empty()) throw std::invalid_argument("polyhedral family must be nonempty");
  SpaceSpec s;
  s.dim = dim;
  s.kind = NormKind::PolyhedralAbs;
  s.family.assign(rows.begin(), rows.end());
  return s;
}

SpaceSpec dual_of(const SpaceSpec& inner) {
  if (inner.kind == NormKind::DualOf)
    throw std::invalid_argument("dual_of nesting depth exceeds 1");
  SpaceSpec s;
  s.dim = inner.dim;
  s.kind = NormKind::DualOf;
  s.inner = std::make_shared<SpaceSpec>(inner);
  return s;
}

SpaceSpec example_space(int n, int dim_cap) {
  if (n < 2) throw std::invalid_argument("example space requires n >= 2");
  const long dim_l = 2 * factorial(n);
  if (dim_l > dim_cap) throw std::invalid_argument("example space exceeds the dimension cap");
  const int dim = static_cast<int>(dim_l);

  std::vector<IndexSet> family;
  for (int m = 1; m <= n; ++m) {
    const int fm = static_cast<int>(factorial(m));
    IndexSet pool;  // 0-based indices of 1-based positions [m!, dim]
    for (int pos = fm; pos <= dim; ++pos) pool.push_back(pos - 1);
    const int size = std::min<int>(fm, static_cast<int>(pool.size()));
    for_each_subset_of(pool, size, [&](const IndexSet& a) {
      family.push_back(a);
      return true;
    });
  }
  SpaceSpec s = polyhedral_abs_space(dim, std::move(family));
  s.example_n = n;
  return s;
}

bool is_absolute(const SpaceSpec& space) {
  switch (space.kind) {
    case NormKind::Lp:
    case NormKind::WeightedL1:
    case NormKind::PolyhedralAbs:
      return true;
    case NormKind::DualOf:
      return is_absolute(*space.inner);
  }
  return false;
}

double norm(const SpaceSpec& space, const Vector& x) {
  check_dim(space, x);
  switch (space.kind) {
    case NormKind::Lp: {
      if (std::isinf(space.p)) return max_abs_coeff(x);
      if (space.p == 1.0) {
        double s = 0.0;
        for (double v : x) s += std::abs(v);
        return s;
      }
      double s = 0.0;
      for (double v : x) s += std::pow(std::abs(v), space.p);
      return std::pow(s, 1.0 / space.p);
    }
    case NormKind::WeightedL1: {
      double s = 0.0;
      for (int i = 0; i < space.dim; ++i)
        s += space.weights[static_cast<std::size_t>(i)] * std::abs(x[static_cast<std::size_t>(i)]);
      return s;
    }
    case NormKind::PolyhedralAbs: {
      double best = 0.0;
      for (const auto& row : space.family) {
        double s = 0.0;
        for (int i : row) s += std::abs(x[static_cast<std::size_t>(i)]);
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::DualOf:
      return dual_norm(*space.inner, x);
  }
  throw std::logic_error("unreachable norm kind");
}

DualResult dual_norm_witness(const SpaceSpec& space, const Vector& f) {
  check_dim(space, f);
  DualResult r;
  r.witness = zeros(space.dim);
  switch (space.kind) {
    case NormKind::Lp: {
      const double p = space.p;
      if (p == 1.0) {
        // dual is sup norm; witness a signed unit vector at the largest |f_i|
        int arg = 0;
        for (int i = 0; i < space.dim; ++i)
          if (std::abs(f[static_cast<std::size_t>(i)]) > std::abs(f[static_cast<std::size_t>(arg)])) arg = i;
        r.value = std::abs(f[static_cast<std::size_t>(arg)]);
        if (r.value > 0.0)
          r.witness[static_cast<std::size_t>(arg)] = f[static_cast<std::size_t>(arg)] > 0 ? 1.0 : -1.0;
        return r;
      }
      if (std::isinf(p)) {
        double s = 0.0;
        for (int i = 0; i < space.dim; ++i) {
          const double v = f[static_cast<std::size_t>(i)];
          s += std::abs(v);
          r.witness[static_cast<std::size_t>(i)] = v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0);
        }
        r.value = s;
        return r;
      }
      const double q = p / (p - 1.0);
      double s = 0.0;
      for (double v : f) s += std::pow(std::abs(v), q);
      r.value = std::pow(s, 1.0 / q);
      if (r.value > 0.0) {
        for (int i = 0; i < space.dim; ++i) {
          const double v = f[static_cast<std::size_t>(i)];
          const double mag = std::pow(std::abs(v) / r.value, q / p);
          r.witness[static_cast<std::size_t>(i)] = v >= 0 ? mag : -mag;
        }
      }
      return r;
    }
    case NormKind::PolyhedralAbs: {
      // max sum |f_i| y_i  s.t.  sum_{i in row} y_i <= 1 per row, y >= 0.
      std::vector<std::vector<double>> a;
      a.reserve(space.family.size());
      for (const auto& row : space.family) {
        std::vector<double> ar(static_cast<std::size_t>(space.dim), 0.0);
        for (int i : row) ar[static_cast<std::size_t>(i)] = 1.0;
        a.push_back(std::move(ar));
      }
      std::vector<double> b(space.family.size(), 1.0);
      std::vector<double> c(static_cast<std::size_t>(space.dim));
      for (int i = 0; i < space.dim; ++i) c[static_cast<std::size_t>(i)] = std::abs(f[static_cast<std::size_t>(i)]);
      LpResult lp = simplex_max(a, b, c);
      if (!lp.optimal) throw std::runtime_error("dual norm LP unbounded: malformed family");
      r.value = lp.value;
      for (int i = 0; i < space.dim; ++i) {
        const double y = lp.x[static_cast<std::size_t>(i)];
        r.witness[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] >= 0 ? y : -y;
      }
      return r;
    }
    case NormKind::WeightedL1:
    case NormKind::DualOf:
      throw std::invalid_argument("dual_norm: unsupported norm kind");
  }
  throw std::logic_error("unreachable norm kind");
}

double dual_norm(const SpaceSpec& space, const Vector& f) {
  return dual_norm_witness(space, f).value;
}

ConstantEstimate basis_constant(const SpaceSpec& space, int samples, std::uint64_t seed,
                                bool force_sampling) {
  ConstantEstimate est;
  est.seed = seed;
  if (is_absolute(space) && !force_sampling) {
    est.value = 1.0;
    est.exact = true;
    est.budget = "absolute norm: initial-segment projections are contractive";
    return est;
  }
  // Sampled lower bound on max_m ||P_[1,m]||. P_[1,d] is the identity, so
  // the bound is always >= 1.
  std::uint64_t state = seed * 2862933555777941757ULL + 3037000493ULL;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  double best = 1.0;
  Vector best_x = unit_vector(space.dim, 0);
  int best_m = space.dim;
  for (int s = 0; s < samples; ++s) {
    Vector x(static_cast<std::size_t>(space.dim));
    for (auto& v : x) v = 2.0 * uniform01(next()) - 1.0;
    const double nx = norm(space, x);
    if (nx <= 0.0) continue;
    for (int m = 1; m <= space.dim; ++m) {
      Vector px = x;
      for (int i = m; i < space.dim; ++i) px[static_cast<std::size_t>(i)] = 0.0;
      const double ratio = norm(space, px) / nx;
      if (ratio > best) {
        best = ratio;
        best_x = x;
        best_m = m;
      }
    }
  }
  est.value = best;
  est.exact = false;
  est.witness_x = best_x;
  est.witness_m = best_m;
  est.budget = "sampled " + std::to_string(samples) + " vectors";
  return est;
}

nlohmann::json save_space(const SpaceSpec& space) {
  json n;
  if (space.example_n) {
    n["kind"] = "example";
    n["n"] = *space.example_n;
  } else {
    switch (space.kind) {
      case NormKind::Lp:
        n["kind"] = "lp";
        if (std::isinf(space.p))
          n["p"] = "inf";
        else
          n["p"] = space.p;
        break;
      case NormKind::WeightedL1:
        n["kind"] = "weighted_l1";
        n["weights"] = space.weights;
        break;
      case NormKind::PolyhedralAbs: {
        n["kind"] = "polyhedral_abs";
        json fam = json::array();
        for (const auto& row : space.family) {
          json r = json::array();
          for (int i : row) r.push_back(i + 1);  // 1-based on disk
          fam.push_back(std::move(r));
        }
        n["family"] = std::move(fam);
        break;
      }
      case NormKind::DualOf:
        n["kind"] = "dual_of";
        n["inner"] = save_space(*space.inner);
        break;
    }
  }
  return json{{"dim", space.dim}, {"norm", std::move(n)}};
}

SpaceSpec load_space(const nlohmann::json& j) {
  const int dim = j.at("dim").get<int>();
  const json& n = j.at("norm");
  const std::string kind = n.at("kind").get<std::string>();
  if (kind == "lp") {
    double p;
    if (n.at("p").is_string()) {
      if (n.at("p").get<std::string>() != "inf") throw std::invalid_argument("bad lp exponent");
      p = std::numeric_limits<double>::infinity();
    } else {
      p = n.at("p").get<double>();
    }
    return lp_space(dim, p);
  }
  if (kind == "weighted_l1") {
    SpaceSpec s = weighted_l1_space(n.at("weights").get<std::vector<double>>());
    if (s.dim != dim) throw std::invalid_argument("weighted_l1 dim mismatch");
    return s;
  }
  if (kind == "polyhedral_abs") {
    std::vector<IndexSet> family;
    for (const auto& row : n.at("family")) {
      IndexSet r;
      for (const auto& i : row) r.push_back(i.get<int>() - 1);
      family.push_back(std::move(r));
    }
    return polyhedral_abs_space(dim, std::move(family));
  }
  if (kind == "dual_of") return dual_of(load_space(n.at("inner")));
  if (kind == "example") {
    SpaceSpec s = example_space(n.at("n").get<int>());
    if (s.dim != dim) throw std::invalid_argument("example space dim mismatch");
    return s;
  }
  throw std::invalid_argument("unknown norm kind: " + kind);
}

SpaceSpec load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open space file: " + path);
  json j;
  in >> j;
  return load_space(j);
}

void save_space_file(const SpaceSpec& space, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write space file: " + path);
  out << save_space(space).dump(2) << '\n';
}

bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
  return save_space(a) == save_space(b);
}

}  // namespace greedytk
