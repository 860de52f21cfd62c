// Command-line front end: replay the certified derivations, search for
// rational points, count points over finite fields, bound torsion, compute
// Riemann-Roch spaces and classify quartic Galois groups.

#include <CLI11.hpp>
#include <json.hpp>

#include "curvecert/ellq.hpp"
#include "curvecert/funcfield.hpp"
#include "curvecert/numfld.hpp"
#include "curvecert/parse.hpp"
#include "curvecert/pipeline.hpp"
#include "curvecert/zetacount.hpp"

#include <fstream>
#include <iostream>
#include <variant>

namespace cc = curvecert;
using cc::curves::HyperellipticModel;
using cc::curves::WeierstrassModel;
using cc::poly::Rat;
using json = nlohmann::ordered_json;

namespace {

// id of a builtin, or an equation "y^2 = f(x)"
cc::curves::CurveModel resolve_curve(const std::string& spec) {
  for (const std::string& id : cc::pipeline::builtin_curve_ids())
    if (id == spec) return cc::pipeline::builtin_curve(id);
  return HyperellipticModel(cc::parse::parse_hyperelliptic_rhs(spec, "x", "y"), spec);
}

HyperellipticModel resolve_hyperelliptic(const std::string& spec) {
  cc::curves::CurveModel c = resolve_curve(spec);
  if (auto* h = std::get_if<HyperellipticModel>(&c)) return *h;
  throw std::invalid_argument("a hyperelliptic model y^2 = f(x) is required: " + spec);
}

std::vector<cc::report::AssumedFact> load_registry(const std::string& path) {
  if (path.empty()) return cc::pipeline::assumption_registry();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open registry file: " + path);
  json j = json::parse(in);
  std::vector<cc::report::AssumedFact> reg;
  for (const auto& e : j)
    reg.push_back({e.at("id"), e.at("statement"), e.at("citation"), e.at("kind")});
  return reg;
}

int emit(const cc::report::Report& r, bool as_json, const std::string& json_path) {
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << r.to_json_string();
  }
  if (as_json)
    std::cout << r.to_json_string();
  else
    std::cout << r.to_text();
  return r.any_failed() ? 1 : 0;
}

// named places of the divisor mini-language, per curve
cc::funcfield::Place named_place(const cc::funcfield::FunctionField& F, const std::string& name) {
  using namespace cc::funcfield;
  const HyperellipticModel& m = F.model();
  auto inf = F.infinite_places();
  if (name == "INF") {
    if (inf.size() != 1) throw std::invalid_argument("INF is ambiguous for this curve");
    return inf[0];
  }
  // P0: the infinite place when it is rational of degree 1, else (0, +y0);
  // P1: (0, -y0); P2: (0, +y0) when P0 is infinite
  bool odd = m.odd_degree();
  auto zero = F.places_over(Rat(0));
  auto finite_named = [&](int sign) -> Place {
    for (const Place& p : zero) {
      if (auto* fp = std::get_if<FinitePlace>(&p)) {
        if (sign > 0 && fp->y > 0) return p;
        if (sign < 0 && fp->y < 0) return p;
      }
      if (std::holds_alternative<WeierstrassPlace>(p)) return p;
    }
    throw std::invalid_argument("no rational place named " + name + " over x = 0");
  };
  if (name == "P0") return odd ? inf[0] : finite_named(+1);
  if (name == "P1") return finite_named(-1);
  if (name == "P2") {
    if (!odd) throw std::invalid_argument("P2 is only named on odd-degree models");
    return finite_named(+1);
  }
  throw std::invalid_argument("unknown place name: " + name);
}

cc::report::Report dispatch(const std::string& id, int n, const cc::pipeline::FieldHypothesis& hyp,
                            const std::vector<cc::report::AssumedFact>& reg) {
  auto lemmas = cc::pipeline::lemma_ids();
  if (std::find(lemmas.begin(), lemmas.end(), id) != lemmas.end())
    return cc::pipeline::run_lemma(id, n, reg);
  return cc::pipeline::run_theorem(id, hyp, reg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified derivations for rational points on Fermat-quotient curves"};
  app.require_subcommand(1);

  // verify-all
  auto* all = app.add_subcommand("verify-all", "replay every lemma and theorem");
  std::string all_json_path;
  bool all_json = false;
  all->add_option("--json", all_json_path, "write the JSON report to this file");
  all->add_flag("--stdout-json", all_json, "print the report as JSON instead of text");

  // verify <id>
  auto* one = app.add_subcommand("verify", "replay a single lemma or theorem");
  std::string one_id, one_json_path, one_registry;
  bool one_json = false;
  int one_n = 0, one_degree = 4;
  bool imprimitive = false, new_points = false;
  one->add_option("id", one_id, "lemma or theorem id")->required();
  one->add_option("--n", one_n, "exponent parameter for fermat-map");
  one->add_option("--degree", one_degree, "number field degree for the conditional theorems");
  one->add_flag("--imprimitive", imprimitive, "declare the field imprimitive");
  one->add_flag("--new-elliptic-points", new_points,
                "declare that the elliptic quotient gains points over the field");
  one->add_option("--json", one_json_path, "write the JSON report to this file");
  one->add_flag("--stdout-json", one_json, "print the report as JSON instead of text");
  one->add_option("--registry", one_registry, "JSON file of assumed facts");

  // points
  auto* pts = app.add_subcommand("points", "exhaustive rational point search");
  std::string pts_curve;
  long pts_height = 1000;
  bool pts_json = false;
  pts->add_option("--curve", pts_curve, "builtin id or equation y^2 = f(x)")->required();
  pts->add_option("--height", pts_height, "height bound on x");
  pts->add_flag("--json", pts_json, "JSON output");

  // count
  auto* cnt = app.add_subcommand("count", "points of the smooth model over F_{p^k}");
  std::string cnt_curve;
  std::uint64_t cnt_p = 0;
  unsigned cnt_k = 1;
  cnt->add_option("--curve", cnt_curve)->required();
  cnt->add_option("--p", cnt_p, "odd prime of good reduction")->required();
  cnt->add_option("--k", cnt_k, "field degree");

  // torsion-bound
  auto* tb = app.add_subcommand("torsion-bound", "gcd of local group orders");
  std::string tb_curve;
  std::uint64_t tb_pmax = 50;
  tb->add_option("--curve", tb_curve)->required();
  tb->add_option("--pmax", tb_pmax, "use odd good primes up to this bound");

  // rr
  auto* rr = app.add_subcommand("rr", "Riemann-Roch space of a divisor");
  std::string rr_curve, rr_div;
  rr->add_option("--curve", rr_curve)->required();
  rr->add_option("--divisor", rr_div, "e.g. \"4*P0 + 3*(P1 - P0)\"")->required();

  // galois-quartic
  auto* gq = app.add_subcommand("galois-quartic", "Galois group of an irreducible quartic");
  std::string gq_poly;
  bool gq_json = false;
  gq->add_option("--poly", gq_poly, "monic integral quartic in x")->required();
  gq->add_flag("--json", gq_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*all) {
      cc::report::Report r = cc::pipeline::verify_all();
      return emit(r, all_json, all_json_path);
    }

    if (*one) {
      cc::pipeline::FieldHypothesis hyp;
      hyp.degree = one_degree;
      hyp.primitive = !imprimitive;
      hyp.elliptic_points_equal = !new_points;
      cc::report::Report r = dispatch(one_id, one_n, hyp, load_registry(one_registry));
      return emit(r, one_json, one_json_path);
    }

    if (*pts) {
      HyperellipticModel c = resolve_hyperelliptic(pts_curve);
      auto found = cc::pipeline::point_search(c, pts_height);
      if (pts_json) {
        json out = json::array();
        for (const auto& p : found) {
          if (p.at_infinity) out.push_back("infinity");
          else out.push_back(json::array({cc::arith::to_string(p.x), cc::arith::to_string(p.y)}));
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& p : found) {
          if (p.at_infinity) std::cout << "infinity\n";
          else std::cout << "(" << cc::arith::to_string(p.x) << ", " << cc::arith::to_string(p.y)
                         << ")\n";
        }
        std::cout << found.size() << " point(s) with height(x) <= " << pts_height << "\n";
      }
      return 0;
    }

    if (*cnt) {
      HyperellipticModel c = resolve_hyperelliptic(cnt_curve);
      std::cout << cc::zetacount::count_points(c, cnt_p, cnt_k).str() << "\n";
      return 0;
    }

    if (*tb) {
      std::vector<std::uint64_t> primes;
      for (std::uint64_t p = 3; p <= tb_pmax; p += 2)
        if (cc::arith::is_prime_u64(p)) primes.push_back(p);
      cc::curves::CurveModel c = resolve_curve(tb_curve);
      if (auto* w = std::get_if<WeierstrassModel>(&c)) {
        std::cout << cc::ellq::torsion_multiple_via_reduction(*w, primes).str() << "\n";
      } else {
        std::cout << cc::zetacount::jacobian_torsion_multiple(
                         std::get<HyperellipticModel>(c), primes)
                         .str()
                  << "\n";
      }
      return 0;
    }

    if (*rr) {
      HyperellipticModel c = resolve_hyperelliptic(rr_curve);
      cc::funcfield::FunctionField F(c);
      cc::funcfield::Divisor D;
      for (const auto& [name, mult] : cc::parse::parse_divisor_expr(rr_div)) {
        cc::funcfield::Place p = named_place(F, name);
        D.coeffs[p] += mult;
        if (D.coeffs[p] == 0) D.coeffs.erase(p);
      }
      auto basis = F.riemann_roch_space(D);
      std::cout << "divisor: " << D.str() << " (degree " << D.degree() << ")\n";
      std::cout << "dim L(D) = " << basis.size() << "\n";
      for (const auto& g : basis) std::cout << "  " << g.str() << "\n";
      return 0;
    }

    if (*gq) {
      cc::poly::QPoly f = cc::parse::parse_qpoly(gq_poly, "x");
      cc::numfld::QuarticGaloisType t = cc::numfld::quartic_galois_group(f);
      cc::poly::QPoly res = cc::numfld::resolvent_cubic(f);
      Rat disc = cc::poly::discriminant(f);
      if (gq_json) {
        json out;
        out["poly"] = cc::poly::to_string(f, "x");
        out["group"] = cc::numfld::to_string(t);
        out["discriminant"] = cc::arith::to_string(disc);
        out["discriminant-square"] = cc::arith::is_square_rational(disc);
        out["resolvent"] = cc::poly::to_string(res, "x");
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "group: " << cc::numfld::to_string(t) << "\n";
        std::cout << "discriminant: " << cc::arith::to_string(disc)
                  << (cc::arith::is_square_rational(disc) ? " (square)" : " (not a square)")
                  << "\n";
        std::cout << "resolvent cubic: " << cc::poly::to_string(res, "x") << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
