// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on
// any failure.  Each check recomputes its facts from scratch through the
// public library interface.

#include "curvecert/ellq.hpp"
#include "curvecert/funcfield.hpp"
#include "curvecert/numfld.hpp"
#include "curvecert/parse.hpp"
#include "curvecert/pipeline.hpp"
#include "curvecert/zetacount.hpp"

#include <iostream>
#include <variant>

namespace cc = curvecert;
using cc::curves::HyperellipticModel;
using cc::curves::RationalMap;
using cc::curves::WeierstrassModel;
using cc::funcfield::Divisor;
using cc::funcfield::FinitePlace;
using cc::funcfield::FunctionField;
using cc::funcfield::InfinitePlace;
using cc::funcfield::Place;
using cc::parse::parse_qpoly;
using cc::parse::parse_ratfunc;
using cc::poly::Rat;

namespace {

int failures = 0;

void line(int k, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << k << ": " << what << "\n";
  if (!ok) ++failures;
}

HyperellipticModel hyp(const std::string& id) {
  return std::get<HyperellipticModel>(cc::pipeline::builtin_curve(id));
}
WeierstrassModel wei(const std::string& id) {
  return std::get<WeierstrassModel>(cc::pipeline::builtin_curve(id));
}

Divisor dv(std::initializer_list<std::pair<Place, int>> parts) {
  Divisor D;
  for (const auto& [p, n] : parts)
    if (n != 0) D.coeffs[p] = n;
  return D;
}

bool morphism_identities() {
  for (int n = 3; n <= 12; ++n)
    if (!cc::curves::verify_map(cc::curves::fermat_hyperelliptic_map(n)).ok) return false;
  WeierstrassModel e16(0, 0, 0, 16, 0, "E16");
  std::vector<RationalMap> fixed = {
      {hyp("C6"), wei("E27"), parse_ratfunc("-x^2", "x", "y"), parse_ratfunc("(y - 1)/2", "x", "y"),
       "C6-to-E27"},
      {hyp("C6"), wei("E432"), parse_ratfunc("1/x^2", "x", "y"), parse_ratfunc("y/x^3", "x", "y"),
       "C6-to-E432"},
      {hyp("C8"), wei("E64a4"), parse_ratfunc("(1 - y)/(2*x^4)", "x", "y"),
       parse_ratfunc("(y - 1)/(2*x^6)", "x", "y"), "C8-to-E64a4"},
      {hyp("H8"), e16, parse_ratfunc("-2*x", "x", "y"), parse_ratfunc("2*y", "x", "y"),
       "H8-to-E16"},
      {e16, wei("E64a4"), parse_ratfunc("x/4", "x", "y"), parse_ratfunc("y/8", "x", "y"),
       "E16-to-E64a4"},
  };
  for (const RationalMap& m : fixed)
    if (!cc::curves::verify_map(m).ok) return false;
  return true;
}

bool discriminant_formulas() {
  using cc::curves::plane_model_from_function;
  using cc::poly::bi_transpose;
  using cc::poly::discriminant;
  return discriminant(bi_transpose(plane_model_from_function(hyp("C7"), Rat(-1), 3))) ==
             parse_qpoly("(2*s)^2*(-3^3*s^8 + 2^15*s)", "s") &&
         discriminant(bi_transpose(plane_model_from_function(hyp("C7"), Rat(1), 4))) ==
             parse_qpoly("2^10*w^2*(-2*w^7 - 27)", "w") &&
         discriminant(bi_transpose(plane_model_from_function(hyp("C8"), Rat(1), 4))) ==
             parse_qpoly("-2^11*s^3*(s^2 + 4)^3", "s");
}

// compares echelonised bases up to scalars
bool same_span_element(const FunctionField& F, const cc::funcfield::FFElement& g,
                       const std::string& a, const std::string& b, const std::string& d) {
  cc::funcfield::FFElement w =
      cc::funcfield::ff_make(parse_qpoly(a, "x"), parse_qpoly(b, "x"), parse_qpoly(d, "x"));
  cc::funcfield::FFElement q = F.mul(g, F.inverse(w));
  return cc::poly::is_zero(q.b) && q.a.degree() == 0 && q.d.degree() == 0;
}

bool rr_bases() {
  HyperellipticModel c7 = hyp("C7"), c8 = hyp("C8");
  FunctionField F7(c7), F8(c8);
  const Place Q0 = InfinitePlace{0};
  const Place Q1 = FinitePlace{Rat(0), Rat(-1)};
  const Place R0 = FinitePlace{Rat(0), Rat(1)};
  const Place R1 = FinitePlace{Rat(0), Rat(-1)};

  auto b0 = F7.riemann_roch_space(dv({{Q0, 4}}));
  if (b0.size() != 3 || !same_span_element(F7, b0[0], "1", "0", "1") ||
      !same_span_element(F7, b0[1], "x", "0", "1") || !same_span_element(F7, b0[2], "x^2", "0", "1"))
    return false;

  auto b3 = F7.riemann_roch_space(dv({{Q0, 1}, {Q1, 3}}));
  if (b3.size() != 2 || !same_span_element(F7, b3[1], "-1", "1", "x^3")) return false;

  // the seven degree-4 systems 4Q0 + a(Q1 - Q0): full only at a = 0
  for (int a = 0; a <= 6; ++a) {
    int dim = F7.dim_l(dv({{Q0, 4 - a}, {Q1, a}}));
    if (dim != (a == 0 ? 3 : 2)) return false;
  }

  // degree-1 systems empty from a = 3 on
  for (int a = 3; a <= 6; ++a)
    if (F7.dim_l(dv({{Q1, 1 - a}, {Q0, a}})) != 0) return false;

  auto c0 = F8.riemann_roch_space(dv({{R0, 2}, {R1, 2}}));
  if (c0.size() != 3 || !same_span_element(F8, c0[0], "1", "0", "x^2") ||
      !same_span_element(F8, c0[1], "x", "0", "x^2") || !same_span_element(F8, c0[2], "1", "0", "1"))
    return false;

  auto c2 = F8.riemann_roch_space(dv({{R0, 4}}));
  if (c2.size() != 2 || !same_span_element(F8, c2[1], "1", "1", "x^4")) return false;
  return true;
}

bool rr_clifford() {
  HyperellipticModel c7 = hyp("C7"), c8 = hyp("C8");
  FunctionField F7(c7), F8(c8);
  const Place Q0 = InfinitePlace{0};
  const Place Q1 = FinitePlace{Rat(0), Rat(-1)};
  const Place Q2 = FinitePlace{Rat(0), Rat(1)};
  const Place R0 = FinitePlace{Rat(0), Rat(1)};
  const Place R1 = FinitePlace{Rat(0), Rat(-1)};

  struct Case {
    const FunctionField* F;
    Divisor D;
    bool clifford_equality;  // expected among the special effective cases
  };
  std::vector<Case> cases;
  // the divisors the derivations exercise on C7 ...
  cases.push_back({&F7, dv({}), true});
  cases.push_back({&F7, dv({{Q0, 4}}), true});  // canonical
  cases.push_back({&F7, dv({{Q0, 3}, {Q1, 1}}), false});
  cases.push_back({&F7, dv({{Q0, 2}, {Q1, 2}}), false});
  cases.push_back({&F7, dv({{Q0, 1}, {Q1, 3}}), false});
  cases.push_back({&F7, dv({{Q1, 4}}), false});
  cases.push_back({&F7, dv({{Q0, 2}, {Q2, 2}}), false});
  cases.push_back({&F7, dv({{Q0, 3}, {Q2, 1}}), false});
  cases.push_back({&F7, dv({{Q0, 2}}), true});  // the hyperelliptic pencil
  cases.push_back({&F7, dv({{Q0, 1}}), false});
  cases.push_back({&F7, dv({{Q1, 1}}), false});
  // ... and on C8
  cases.push_back({&F8, dv({}), true});
  cases.push_back({&F8, dv({{R0, 1}, {R1, 1}}), true});  // the pencil
  cases.push_back({&F8, dv({{R0, 2}, {R1, 2}}), true});  // twice the pencil = canonical class
  cases.push_back({&F8, dv({{R0, 1}, {R1, 3}}), false});
  cases.push_back({&F8, dv({{R0, 4}}), false});
  cases.push_back({&F8, dv({{R0, 3}, {R1, 1}}), false});

  for (const Case& c : cases) {
    const FunctionField& F = *c.F;
    int g = F.genus();
    Divisor K = F.canonical_divisor();
    int l = F.dim_l(c.D);
    int lk = F.dim_l(K - c.D);
    if (l - lk != c.D.degree() - g + 1) return false;
    bool special_effective = l >= 1 && lk >= 1;
    if (special_effective) {
      if (2 * (l - 1) > c.D.degree()) return false;                      // Clifford bound
      if ((2 * (l - 1) == c.D.degree()) != c.clifford_equality) return false;
    } else if (c.clifford_equality) {
      return false;
    }
  }
  return true;
}

bool torsion_multiples() {
  std::vector<std::uint64_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  if (cc::zetacount::jacobian_torsion_multiple(hyp("C7"), primes) != 7) return false;
  if (cc::zetacount::jacobian_torsion_multiple(hyp("H7"), primes) != 1) return false;
  // the C8 gcd stabilises at 16; the exact order 4 is certified on the
  // divisor class below and closed by the assumed torsion fact
  if (cc::zetacount::jacobian_torsion_multiple(hyp("C8"), primes) != 16) return false;

  FunctionField F7(hyp("C7")), F8(hyp("C8"));
  Divisor g7 = dv({{FinitePlace{Rat(0), Rat(-1)}, 1}, {InfinitePlace{0}, -1}});
  Divisor g8 = dv({{FinitePlace{Rat(0), Rat(-1)}, 1}, {FinitePlace{Rat(0), Rat(1)}, -1}});
  return F7.divisor_class_order(g7, 7) == 7 && F8.divisor_class_order(g8, 4) == 4;
}

bool elliptic_torsion() {
  WeierstrassModel e16(0, 0, 0, 16, 0, "E16");
  return cc::ellq::torsion_subgroup(wei("E27")).structure == "Z/3" &&
         cc::ellq::torsion_subgroup(wei("E64a4")).structure == "Z/2" &&
         cc::ellq::torsion_subgroup(e16).structure == "Z/2" &&
         cc::ellq::torsion_subgroup(wei("E432")).structure == "trivial";
}

bool point_sets() {
  using cc::pipeline::FoundPoint;
  using cc::pipeline::point_search;
  auto pt = [](long x, long y) { return FoundPoint{false, Rat(x), Rat(y)}; };
  FoundPoint inf{true, Rat(0), Rat(0)};
  return point_search(hyp("C6"), 10000) == std::vector<FoundPoint>{pt(0, -1), pt(0, 1)} &&
         point_search(hyp("C8"), 10000) == std::vector<FoundPoint>{pt(0, -1), pt(0, 1)} &&
         point_search(hyp("C7"), 10000) == std::vector<FoundPoint>{inf, pt(0, -1), pt(0, 1)} &&
         point_search(hyp("H7"), 10000) == std::vector<FoundPoint>{inf} &&
         point_search(hyp("H8"), 10000) == std::vector<FoundPoint>{inf, pt(0, 0)};
}

bool base_locus_eliminations() {
  FunctionField F7(hyp("C7")), F8(hyp("C8"));
  const Place Q0 = InfinitePlace{0};
  const Place Q1 = FinitePlace{Rat(0), Rat(-1)};
  const Place Q2 = FinitePlace{Rat(0), Rat(1)};
  const Place R0 = FinitePlace{Rat(0), Rat(1)};
  const Place R1 = FinitePlace{Rat(0), Rat(-1)};

  const std::vector<Divisor> reps7 = {
      dv({{Q0, 4}}),          dv({{Q0, 3}, {Q1, 1}}), dv({{Q0, 2}, {Q1, 2}}),
      dv({{Q0, 1}, {Q1, 3}}), dv({{Q1, 4}}),          dv({{Q0, 2}, {Q2, 2}}),
      dv({{Q0, 3}, {Q2, 1}}),
  };
  for (int a = 0; a <= 6; ++a) {
    bool nonzero = F7.fixed_part(reps7[a]).degree() > 0;
    bool expect = a == 1 || a == 2 || a == 5 || a == 6;
    if (nonzero != expect) return false;
  }

  const std::vector<Divisor> reps8 = {
      dv({{R0, 2}, {R1, 2}}),
      dv({{R0, 1}, {R1, 3}}),
      dv({{R0, 4}}),
      dv({{R0, 3}, {R1, 1}}),
  };
  for (int a = 0; a <= 3; ++a) {
    bool nonzero = F8.fixed_part(reps8[a]).degree() > 0;
    bool expect = a == 1 || a == 3;
    if (nonzero != expect) return false;
  }
  return true;
}

bool galois_classifier() {
  using cc::numfld::QuarticGaloisType;
  using cc::numfld::quartic_galois_group;
  auto P = [](const std::string& s) { return parse_qpoly(s, "x"); };
  return quartic_galois_group(P("x^4 + 8*x + 12")) == QuarticGaloisType::A4 &&
         quartic_galois_group(P("x^4 - 2")) == QuarticGaloisType::D4 &&
         quartic_galois_group(P("x^4 + 1")) == QuarticGaloisType::V4 &&
         quartic_galois_group(P("x^4 + x^3 + x^2 + x + 1")) == QuarticGaloisType::C4 &&
         quartic_galois_group(P("x^4 + x + 1")) == QuarticGaloisType::S4;
}

bool end_to_end() {
  cc::report::Report r1 = cc::pipeline::verify_all();
  if (r1.any_failed()) return false;
  std::vector<std::string> want{"primitive-field-group", "rank-E27", "rank-E64a4",
                                "rank-JC7",              "rank-JC8", "rank-JH7",
                                "torsion-JC8"};
  if (r1.assumed_ids() != want) return false;
  int rank_zero = 0;
  for (const auto& f : r1.assumptions)
    if (f.kind == "rank-zero") ++rank_zero;
  if (rank_zero != 5) return false;
  cc::report::Report r2 = cc::pipeline::verify_all();
  return r1.to_json_string() == r2.to_json_string();
}

}  // namespace

int main() {
  line(1, "morphism identities: the (ab, a^n - b^n) family for n = 3..12 and the five fixed maps",
       morphism_identities());
  line(2, "discriminants of the three plane quartic models match the descent formulas",
       discriminant_formulas());
  line(3, "Riemann-Roch bases and dimensions match the derivations", rr_bases());
  line(4, "Riemann-Roch identity and Clifford bound on every exercised divisor", rr_clifford());
  line(5, "Jacobian torsion multiples 7/16/1 with class orders 7 and 4 certified",
       torsion_multiples());
  line(6, "elliptic torsion Z/3, Z/2, Z/2, trivial for the four quotient curves",
       elliptic_torsion());
  line(7, "point searches at height 10^4 return exactly the proven sets", point_sets());
  line(8, "fixed parts nonzero exactly for the reducible classes", base_locus_eliminations());
  line(9, "quartic Galois classifier on the five reference polynomials", galois_classifier());
  line(10, "verify-all: no failures, the declared assumption set, byte-stable JSON",
       end_to_end());
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
