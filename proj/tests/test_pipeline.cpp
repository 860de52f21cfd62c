#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecert/parse.hpp"
#include "curvecert/pipeline.hpp"

#include <algorithm>
#include <variant>

using namespace curvecert::pipeline;
using curvecert::curves::HyperellipticModel;
using curvecert::parse::parse_qpoly;
using curvecert::report::Report;
using curvecert::report::Status;
using curvecert::report::VerificationStep;
using curvecert::poly::Rat;

namespace {

HyperellipticModel hyp_model(const std::string& id) {
  return std::get<HyperellipticModel>(builtin_curve(id));
}

const VerificationStep& step(const Report& r, const std::string& id) {
  for (const VerificationStep& s : r.steps)
    if (s.id == id) return s;
  throw std::runtime_error("no step " + id);
}

FoundPoint aff(long long xn, long long xd, long long yn, long long yd) {
  return FoundPoint{false, Rat(xn) / xd, Rat(yn) / yd};
}

FoundPoint infpt() { return FoundPoint{true, Rat(0), Rat(0)}; }

}  // namespace

TEST_CASE("builtin curves") {
  auto ids = builtin_curve_ids();
  CHECK(ids.size() == 8);
  for (const std::string& id : ids) CHECK_NOTHROW(builtin_curve(id));
  CHECK_THROWS(builtin_curve("C9"));

  CHECK(hyp_model("C7").f == parse_qpoly("-4*x^7 + 1", "x"));
  CHECK(hyp_model("H7").f == parse_qpoly("2*x^7 - 27", "x"));
  CHECK(hyp_model("H8").f == parse_qpoly("-2*x^3 - 8*x", "x"));
  auto e = std::get<curvecert::curves::WeierstrassModel>(builtin_curve("E432"));
  CHECK(e.a6 == -4);
  CHECK(e.a1 == 0);
}

TEST_CASE("assumption registry") {
  auto reg = assumption_registry();
  CHECK(reg.size() == 7);
  int rank = 0, external = 0;
  for (const auto& f : reg) {
    CHECK(!f.citation.empty());
    CHECK(!f.statement.empty());
    if (f.kind == "rank-zero") ++rank;
    if (f.kind == "external-lemma") ++external;
  }
  CHECK(rank == 5);
  CHECK(external == 2);
  std::vector<std::string> ids;
  for (const auto& f : reg) ids.push_back(f.id);
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<std::string>{"primitive-field-group", "rank-E27", "rank-E64a4",
                                        "rank-JC7", "rank-JC8", "rank-JH7", "torsion-JC8"});
}

TEST_CASE("point search at small heights") {
  CHECK(point_search(hyp_model("C6"), 2) ==
        std::vector<FoundPoint>{aff(0, 1, -1, 1), aff(0, 1, 1, 1)});
  CHECK(point_search(hyp_model("H7"), 3) == std::vector<FoundPoint>{infpt()});
  CHECK(point_search(hyp_model("H8"), 3) ==
        std::vector<FoundPoint>{infpt(), aff(0, 1, 0, 1)});

  HyperellipticModel m(parse_qpoly("x^3 + 1", "x"), "test");
  CHECK(point_search(m, 5) ==
        std::vector<FoundPoint>{infpt(), aff(-1, 1, 0, 1), aff(0, 1, -1, 1), aff(0, 1, 1, 1),
                                aff(2, 1, -3, 1), aff(2, 1, 3, 1)});

  CHECK_THROWS(point_search(m, 0));
}

TEST_CASE("point search at the full height") {
  CHECK(point_search(hyp_model("C6"), 10000) ==
        std::vector<FoundPoint>{aff(0, 1, -1, 1), aff(0, 1, 1, 1)});
}

TEST_CASE("lemma fragments") {
  Report fm = run_lemma("fermat-map");
  CHECK(!fm.any_failed());
  CHECK(fm.assumed_ids().empty());
  CHECK(fm.steps.size() == 20);  // identity + trivial images for n = 3..12

  Report c6 = run_lemma("C6-points");
  CHECK(!c6.any_failed());
  CHECK(c6.assumed_ids() == std::vector<std::string>{"rank-E27"});
  CHECK(step(c6, "E27-torsion").status == Status::VERIFIED);
  CHECK(step(c6, "E27-rank").status == Status::ASSUMED);
  CHECK(step(c6, "conclusion").status == Status::VERIFIED);
  CHECK(c6.assumptions.size() == 1);

  Report c7 = run_lemma("C7-points");
  CHECK(!c7.any_failed());
  CHECK(c7.assumed_ids() == std::vector<std::string>{"rank-JC7"});
  CHECK(step(c7, "torsion-multiple").data["gcd"] == 7);
  CHECK(step(c7, "class-order").status == Status::VERIFIED);
  CHECK(step(c7, "degree-one-classes").data["dims"] ==
        nlohmann::ordered_json::array({1, 1, 1, 0, 0, 0, 0}));

  Report c8 = run_lemma("C8-points");
  CHECK(!c8.any_failed());
  CHECK(c8.assumed_ids() == std::vector<std::string>{"rank-E64a4"});
  CHECK(step(c8, "base-locus").status == Status::VERIFIED);

  Report me = run_lemma("map-equal");
  CHECK(!me.any_failed());
  CHECK(me.assumed_ids() == std::vector<std::string>{"primitive-field-group"});

  CHECK_THROWS(run_lemma("no-such-lemma"));
}

TEST_CASE("missing registry entries fail loudly") {
  Report r = run_lemma("C7-points", 0, {});
  CHECK(r.any_failed());
  CHECK(step(r, "rank").status == Status::FAILED);
  CHECK(step(r, "rank").data["missing-dependency"] == "rank-JC7");
}

TEST_CASE("theorem fragments") {
  Report f7 = run_theorem("F7-quartic");
  CHECK(!f7.any_failed());
  CHECK(f7.assumed_ids() ==
        std::vector<std::string>{"primitive-field-group", "rank-JC7", "rank-JH7"});
  CHECK(step(f7, "a1-fixed-part").status == Status::VERIFIED);
  CHECK(step(f7, "a3-descent-identity").status == Status::VERIFIED);
  CHECK(step(f7, "a4-descent-identity").status == Status::VERIFIED);
  CHECK(step(f7, "H7-torsion-multiple").data["gcd"] == 1);

  Report f8q = run_theorem("F8-quartic");
  CHECK(!f8q.any_failed());
  CHECK(f8q.assumed_ids() == std::vector<std::string>{"primitive-field-group", "rank-E64a4",
                                                      "rank-JC8", "torsion-JC8"});
  CHECK(step(f8q, "jacobian-torsion-multiple").data["gcd"] == 16);
  CHECK(step(f8q, "jacobian-class-order").status == Status::VERIFIED);
  CHECK(step(f8q, "a2-descent-identity").status == Status::VERIFIED);
  CHECK(step(f8q, "H8-iso").status == Status::VERIFIED);

  Report f6 = run_theorem("F6");
  CHECK(!f6.any_failed());
  CHECK(f6.assumed_ids() == std::vector<std::string>{"primitive-field-group", "rank-E27"});

  Report f8 = run_theorem("F8");
  CHECK(!f8.any_failed());
  CHECK(f8.assumed_ids() == std::vector<std::string>{"primitive-field-group", "rank-E64a4"});

  CHECK_THROWS(run_theorem("no-such-theorem"));
}

TEST_CASE("hypothesis violations are reported as failures") {
  FieldHypothesis low;
  low.degree = 2;
  CHECK(run_theorem("F6", low).any_failed());

  FieldHypothesis imprim;
  imprim.primitive = false;
  CHECK(run_theorem("F6", imprim).any_failed());

  FieldHypothesis newpts;
  newpts.elliptic_points_equal = false;
  CHECK(run_theorem("F8", newpts).any_failed());
}

TEST_CASE("merged report") {
  Report all = verify_all();
  CHECK(!all.any_failed());
  CHECK(all.title == "curvecert");
  CHECK(all.assumptions.size() == 7);
  CHECK(all.assumed_ids() ==
        std::vector<std::string>{"primitive-field-group", "rank-E27", "rank-E64a4", "rank-JC7",
                                 "rank-JC8", "rank-JH7", "torsion-JC8"});

  // fragment titles prefix the merged step ids
  CHECK(step(all, "C7-points/conclusion").status == Status::VERIFIED);
  CHECK(step(all, "F8-quartic/jacobian-torsion-order").status == Status::ASSUMED);
  CHECK(step(all, "F6/C6-points/conclusion").status == Status::VERIFIED);

  // serialization is deterministic and round-trips
  std::string s1 = all.to_json_string();
  std::string s2 = all.to_json_string();
  CHECK(s1 == s2);
  auto parsed = nlohmann::ordered_json::parse(s1);
  CHECK(parsed["version"] == "1");
  CHECK(parsed["steps"].size() == all.steps.size());
  CHECK(parsed["assumptions"].size() == 7);
}
