// Command-line front end: space/vector literals, greedy runs, error tables,
// constants, and the verification suites.
//
// Exit codes: 0 success, 1 inequality violation, 2 usage / parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "greedytk/constants.hpp"
#include "greedytk/errors.hpp"
#include "greedytk/greedy.hpp"
#include "greedytk/space.hpp"
#include "greedytk/verify.hpp"

#include <CLI11.hpp>

using nlohmann::json;
using namespace greedytk;

namespace {

SpaceSpec parse_space(const std::string& spec, int fallback_dim) {
  if (spec.rfind("dual(", 0) == 0 && spec.back() == ')')
    return dual_of(parse_space(spec.substr(5, spec.size() - 6), fallback_dim));
  if (spec.rfind("file:", 0) == 0) return load_space_file(spec.substr(5));
  if (spec.rfind("lp:", 0) == 0) {
    std::string rest = spec.substr(3);
    int dim = fallback_dim;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      dim = std::stoi(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const double p = rest == "inf" ? std::numeric_limits<double>::infinity() : std::stod(rest);
    return lp_space(dim, p);
  }
  if (spec.rfind("weighted:", 0) == 0) {
    std::vector<double> w;
    std::stringstream ss(spec.substr(9));
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stod(tok));
    return weighted_l1_space(std::move(w));
  }
  if (spec.rfind("example:", 0) == 0) return example_space(std::stoi(spec.substr(8)));
  throw std::invalid_argument("unrecognized space literal: " + spec);
}

// `e<i>`, `1x[a..b]`, or a comma-separated coefficient list.
Vector parse_vector(const std::string& lit, int dim) {
  if (lit.rfind("e", 0) == 0 && lit.find(',') == std::string::npos &&
      lit.find('[') == std::string::npos) {
    const int i = std::stoi(lit.substr(1));
    if (i < 1 || i > dim) throw std::invalid_argument("basis index out of range: " + lit);
    return unit_vector(dim, i - 1);
  }
  if (lit.rfind("1x[", 0, 3) == 0 && lit.back() == ']') {
    const std::string body = lit.substr(3, lit.size() - 4);
    const auto dots = body.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("bad range literal: " + lit);
    const int lo = std::stoi(body.substr(0, dots));
    const int hi = std::stoi(body.substr(dots + 2));
    if (lo < 1 || hi > dim || lo > hi)
      throw std::invalid_argument("range out of bounds: " + lit);
    return indicator(dim, range_set(lo, hi));
  }
  Vector x;
  std::stringstream ss(lit);
  std::string tok;
  while (std::getline(ss, tok, ',')) x.push_back(std::stod(tok));
  if (static_cast<int>(x.size()) != dim)
    throw std::invalid_argument("vector has " + std::to_string(x.size()) +
                                " coordinates, space has " + std::to_string(dim));
  return x;
}

// Guesses the dimension a literal needs when the space literal itself does
// not pin one (bare lp:<p>).
int infer_dim(const std::string& vec_lit) {
  if (vec_lit.empty()) return 8;
  if (vec_lit.rfind("1x[", 0) == 0 && vec_lit.back() == ']') {
    const std::string body = vec_lit.substr(3, vec_lit.size() - 4);
    const auto dots = body.find("..");
    if (dots != std::string::npos) return std::stoi(body.substr(dots + 2));
  }
  if (vec_lit[0] == 'e' && vec_lit.find(',') == std::string::npos)
    return std::stoi(vec_lit.substr(1));
  return 1 + static_cast<int>(std::count(vec_lit.begin(), vec_lit.end(), ','));
}

json set_json(const IndexSet& a) {
  json j = json::array();
  for (int i : a) j.push_back(i + 1);
  return j;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  }
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "check,instances,max_ratio,bound,violations,vacuous\n";
  for (const auto& r : reports) {
    os << r.id << ',' << r.instances << ',' << r.max_ratio << ','
       << (r.asserted ? std::to_string(r.bound) : std::string("")) << ','
       << r.violations.size() << ',' << r.vacuous << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional greedy-approximation toolkit"};
  app.require_subcommand(1);

  std::string space_lit = "example:3";
  std::string vec_lit, out_path, format = "json";
  std::string suite = "all", algo = "tga", policy = "greedy", rule = "smallest";
  int m = 1, cap_dim = kDefaultDimCap, cap_subset = 4, corpus_size = 200;
  double tau = 0.5, lambda = 0.0;
  std::uint64_t seed = 42;
  bool want_dual = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--space", space_lit, "space literal: lp:<p>[:<dim>], weighted:<w1,...>, example:<n>, dual(<spec>), file:<path>");
    sub->add_option("--seed", seed, "rng seed");
    sub->add_option("--cap-dim", cap_dim, "dimension cap");
    sub->add_option("--cap-subset", cap_subset, "subset enumeration cap");
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* cmd_norm = app.add_subcommand("norm", "evaluate the norm of a vector");
  add_common(cmd_norm);
  cmd_norm->add_option("--vec", vec_lit, "vector literal")->required();
  cmd_norm->add_flag("--dual", want_dual, "also print the dual norm and LP witness");

  auto* cmd_greedy = app.add_subcommand("greedy", "run tga / wtga / bga");
  add_common(cmd_greedy);
  cmd_greedy->add_option("--vec", vec_lit, "vector literal")->required();
  cmd_greedy->add_option("--m", m, "number of terms")->required();
  cmd_greedy->add_option("--algo", algo)->check(CLI::IsMember({"tga", "wtga", "bga"}));
  cmd_greedy->add_option("--tau", tau, "weakness parameter in (0,1)");
  cmd_greedy->add_option("--policy", policy)->check(CLI::IsMember({"greedy", "lazy"}));
  cmd_greedy->add_option("--rule", rule)
      ->check(CLI::IsMember({"smallest", "largest-coeff", "largest-index"}));
  cmd_greedy->add_option("--lambda", lambda, "overlap budget factor reported against the greedy set");

  auto* cmd_errors = app.add_subcommand("errors", "error functional table for a vector");
  add_common(cmd_errors);
  cmd_errors->add_option("--vec", vec_lit, "vector literal")->required();
  cmd_errors->add_option("--m", m, "single m (0 = all m up to dim)");
  cmd_errors->get_option("--m")->default_val(0);

  auto* cmd_constants = app.add_subcommand("constants", "exact / lower-bound constants");
  add_common(cmd_constants);
  cmd_constants->add_option("--corpus-size", corpus_size, "corpus size for sup-type constants");

  auto* cmd_verify = app.add_subcommand("verify", "run inequality suites");
  add_common(cmd_verify);
  cmd_verify->add_option("--suite", suite, "suite name, shorthand, or 'all'");
  cmd_verify->add_option("--tau", tau, "weakness parameter in (0,1)");
  cmd_verify->add_option("--corpus-size", corpus_size, "corpus size per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    SpaceSpec space = parse_space(space_lit, infer_dim(vec_lit));
    if (space.dim > cap_dim) throw std::invalid_argument("space dimension exceeds --cap-dim");

    if (cmd_norm->parsed()) {
      Vector x = parse_vector(vec_lit, space.dim);
      json rec = {{"norm", norm(space, x)}};
      if (want_dual) {
        DualResult d = dual_norm_witness(space, x);
        rec["dual_norm"] = d.value;
        rec["dual_witness"] = d.witness;
      }
      emit(out_path, rec.dump() + "\n");
      return 0;
    }

    if (cmd_greedy->parsed()) {
      Vector x = parse_vector(vec_lit, space.dim);
      json rec = {{"algo", algo}, {"m", m}};
      IndexSet sel;
      Vector approx;
      if (algo == "tga") {
        sel = lambda_m(x, m);
        approx = tga(x, m);
      } else if (algo == "wtga") {
        const WtgaPolicy pol = policy == "lazy" ? WtgaPolicy::Lazy : WtgaPolicy::Greedy;
        sel = wtga_select(x, m, tau, pol).indices;
        approx = wtga(x, m, tau, pol);
        rec["tau"] = tau;
        rec["policy"] = policy;
      } else {
        BranchSelectorSpec selector{tau, rule == "largest-coeff"  ? BranchRule::LargestCoefficient
                                         : rule == "largest-index" ? BranchRule::LargestIndex
                                                                   : BranchRule::SmallestIndex};
        std::vector<int> order = bga_select(x, m, selector);
        json steps = json::array();
        Vector r = x;
        for (int i : order) {
          steps.push_back({{"index", i + 1},
                           {"coefficient", x[static_cast<std::size_t>(i)]},
                           {"threshold", tau * max_abs_coeff(r)}});
          r[static_cast<std::size_t>(i)] = 0.0;
        }
        rec["steps"] = steps;
        rec["tau"] = tau;
        rec["rule"] = rule;
        sel.assign(order.begin(), order.end());
        std::sort(sel.begin(), sel.end());
        approx = project(x, sel);
      }
      rec["selection"] = set_json(sel);
      rec["residual"] = subtract(x, approx);
      rec["residual_norm"] = norm(space, subtract(x, approx));
      if (lambda > 0.0) {
        IndexSet canon = lambda_m(x, m);
        int overlap = 0;
        for (int i : sel)
          if (std::binary_search(canon.begin(), canon.end(), i)) ++overlap;
        rec["overlap_with_greedy_set"] = overlap;
        rec["overlap_budget"] = static_cast<int>(std::floor(lambda * m));
      }
      emit(out_path, rec.dump() + "\n");
      return 0;
    }

    if (cmd_errors->parsed()) {
      Vector x = parse_vector(vec_lit, space.dim);
      const int lo = m == 0 ? 1 : m;
      const int hi = m == 0 ? space.dim : m;
      std::ostringstream os;
      if (format == "csv")
        os << "m,sigma,sigma_tilde,sigma_L,sigma_R,sigma_tilde_L,sigma_tilde_R\n";
      for (int mm = lo; mm <= hi; ++mm) {
        const ErrorValue s = sigma(space, x, mm);
        const ErrorValue st = sigma_tilde(space, x, mm);
        const ErrorValue sl = sigma_L(space, x, mm);
        const ErrorValue sr = sigma_R(space, x, mm);
        const ErrorValue stl = sigma_tilde_L(space, x, mm);
        const ErrorValue str = sigma_tilde_R(space, x, mm);
        auto cell = [](const ErrorValue& e) {
          return e.infeasible ? json("INFEASIBLE") : json(e.value);
        };
        if (format == "csv") {
          auto txt = [](const ErrorValue& e) {
            return e.infeasible ? std::string("INFEASIBLE") : std::to_string(e.value);
          };
          os << mm << ',' << txt(s) << ',' << txt(st) << ',' << txt(sl) << ','
             << txt(sr) << ',' << txt(stl) << ',' << txt(str) << '\n';
        } else {
          json rec = {{"m", mm},
                      {"sigma", cell(s)},
                      {"sigma_witness", set_json(s.witness_set)},
                      {"sigma_tilde", cell(st)},
                      {"sigma_L", cell(sl)},
                      {"sigma_R", cell(sr)},
                      {"sigma_tilde_L", cell(stl)},
                      {"sigma_tilde_R", cell(str)}};
          os << rec.dump() << '\n';
        }
      }
      emit(out_path, os.str());
      return 0;
    }

    if (cmd_constants->parsed()) {
      const int cap = std::min(cap_subset, space.dim);
      auto corpus = make_corpus(space.dim, corpus_size, seed);
      auto to_json = [](const char* name, const ConstantEstimate& c) {
        return json{{"constant", name},
                    {"value", c.value},
                    {"exact", c.exact},
                    {"witness_a", set_json(c.witness_a)},
                    {"witness_b", set_json(c.witness_b)},
                    {"budget", c.budget}};
      };
      std::ostringstream os;
      json phi = json::array();
      for (int n = 1; n <= cap; ++n) phi.push_back(fundamental_function(space, n));
      os << json{{"constant", "fundamental_function"}, {"values", phi}}.dump() << '\n';
      os << to_json("democratic", democratic_constant(space, cap)).dump() << '\n';
      os << to_json("conservative", conservative_constant(space, cap)).dump() << '\n';
      os << to_json("reverse_conservative", reverse_conservative_constant(space, cap)).dump()
         << '\n';
      os << to_json("quasi_greedy", quasi_greedy_constant(space, corpus)).dump() << '\n';
      os << to_json("basis", basis_constant(space, corpus_size, seed)).dump() << '\n';
      os << to_json("partially_greedy",
                    greedy_type_constant(space, GreedyKind::PartiallyGreedy, corpus))
                .dump()
         << '\n';
      os << to_json("almost_greedy",
                    greedy_type_constant(space, GreedyKind::AlmostGreedy, corpus))
                .dump()
         << '\n';
      os << to_json("tail_partially_greedy",
                    greedy_type_constant(space, GreedyKind::TailPartiallyGreedy, corpus))
                .dump()
         << '\n';
      emit(out_path, os.str());
      return 0;
    }

    if (cmd_verify->parsed()) {
      VerifyConfig cfg;
      cfg.seed = seed;
      cfg.corpus_size = corpus_size;
      cfg.size_cap = cap_subset;
      cfg.tau = tau;
      std::vector<CheckReport> reports = run_suite(space, suite, cfg);
      emit(out_path, format == "csv" ? reports_to_csv(reports) : reports_to_jsonl(reports));
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.pass();
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
