#include "doctest.h"
#include "quatroid/partial_field.hpp"

using namespace quatroid;

namespace {
std::vector<std::string> gen_strings(const PartialFieldPresentation& pf) {
  std::vector<std::string> out;
  for (const auto& g : pf.generators) out.push_back(g.str());
  return out;
}
}  // namespace

TEST_CASE("catalog presentations carry the exact generator lists") {
  auto k2 = pf_catalog("K2");
  CHECK(gen_strings(k2) == std::vector<std::string>{"-1", "a", "a - 1", "a + 1"});
  auto pt = pf_catalog("PT");
  auto pts = gen_strings(pt);
  CHECK(std::find(pts.begin(), pts.end(), "a + 2") != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), "2*a + 1") != pts.end());
  auto g = pf_catalog("G");
  REQUIRE(g.defining_ideal.size() == 1);
  CHECK(g.defining_ideal[0] == Poly::parse(g.ring, "t^2 - t - 1"));
  CHECK(gen_strings(g) == std::vector<std::string>{"-1", "t"});
  auto u2 = pf_catalog("U2");
  CHECK(u2.generators.size() == 6);
  CHECK_THROWS_AS(pf_catalog("nope"), std::invalid_argument);
}

TEST_CASE("membership") {
  auto g = pf_catalog("G");
  SUBCASE("t - 2 lies in G (it equals -t^-2)") {
    auto m = pf_membership(FracElem::parse(g.ring, "t - 2"), g);
    CHECK(m.member);
    CHECK(m.exponents.at("tau") == -2);
  }
  SUBCASE("2 does not lie in G (norm 4)") {
    auto m = pf_membership(FracElem::parse(g.ring, "2"), g);
    CHECK_FALSE(m.member);
  }
  SUBCASE("t + 1 = t^2 lies in G") { CHECK(pf_membership(FracElem::parse(g.ring, "t + 1"), g).member); }
  auto k2 = pf_catalog("K2");
  SUBCASE("a(a-1) lies in K2 with certificate") {
    auto m = pf_membership(FracElem::parse(k2.ring, "a^2 - a"), k2);
    REQUIRE(m.member);
    CHECK(m.exponents.at("a") == 1);
    CHECK(m.exponents.at("a - 1") == 1);
  }
  SUBCASE("a + 2 does not lie in K2") { CHECK_FALSE(pf_membership(FracElem::parse(k2.ring, "a + 2"), k2).member); }
  SUBCASE("0 lies everywhere") { CHECK(pf_membership(FracElem(k2.ring), k2).member); }
  SUBCASE("membership is closed under product and inverse on certified members") {
    auto x = FracElem::parse(k2.ring, "a^2 + a");
    auto y = FracElem::parse(k2.ring, "-(a - 1)/a");
    REQUIRE(pf_membership(x, k2).member);
    REQUIRE(pf_membership(y, k2).member);
    CHECK(pf_membership(x * y, k2).member);
    CHECK(pf_membership(x.inverse(), k2).member);
    CHECK(pf_membership(x * x * y.inverse(), k2).member);
  }
}

TEST_CASE("P-matrix verification") {
  auto k2 = pf_catalog("K2");
  auto r = k2.ring;
  auto F = [&](const std::string& s) { return FracElem::parse(r, s); };
  SUBCASE("[I|A] is a P-matrix whenever A is") {
    std::vector<std::vector<FracElem>> a{{F("a"), F("1")}, {F("1"), F("1")}};
    auto res_a = pf_is_P_matrix(a, {"r1", "r2"}, {"c1", "c2"}, k2);
    REQUIRE(res_a.ok);
    std::vector<std::vector<FracElem>> ia{{F("1"), F("0"), F("a"), F("1")}, {F("0"), F("1"), F("1"), F("1")}};
    CHECK(pf_is_P_matrix(ia, {"r1", "r2"}, {"e1", "e2", "c1", "c2"}, k2).ok);
  }
  SUBCASE("an entry of 2 over G fails with a 1x1 witness") {
    auto g = pf_catalog("G");
    std::vector<std::vector<FracElem>> a{{FracElem::parse(g.ring, "t"), FracElem::parse(g.ring, "2")}};
    auto res = pf_is_P_matrix(a, {"r1"}, {"c1", "c2"}, g);
    REQUIRE_FALSE(res.ok);
    CHECK(res.witness_rows == std::vector<std::string>{"r1"});
    CHECK(res.witness_cols == std::vector<std::string>{"c2"});
    CHECK(res.witness_det == "2");
  }
  SUBCASE("a GF(q) matrix is trivially a GF(q)-matrix") {
    auto gf4 = pf_catalog("GF(4)");
    std::vector<std::vector<FracElem>> a{{FracElem::parse(gf4.ring, "7")}};
    CHECK(pf_is_P_matrix(a, {"r1"}, {"c1"}, gf4).ok);
  }
  SUBCASE("a singular submatrix over G is fine: 0 lies in the partial field") {
    auto g = pf_catalog("G");
    auto T = [&](const std::string& s) { return FracElem::parse(g.ring, s); };
    std::vector<std::vector<FracElem>> a{{T("t"), T("t + 1")}, {T("1"), T("t")}};  // det = t^2-t-1 = 0
    CHECK(pf_is_P_matrix(a, {"r1", "r2"}, {"c1", "c2"}, g).ok);
  }
}

TEST_CASE("homomorphisms into finite fields") {
  SUBCASE("PT -> GF(7) has the witness x = 2; PT -> GF(5) has none") {
    auto pt = pf_catalog("PT");
    auto w7 = pf_hom_to_field(pt, 7);
    REQUIRE(w7.has_value());
    CHECK(w7->at("a") == "2");
    CHECK_FALSE(pf_hom_to_field(pt, 5).has_value());
  }
  SUBCASE("U2 -> GF(4) with witness a1 = a, a2 = a^2") {
    auto u2 = pf_catalog("U2");
    auto w = pf_hom_to_field(u2, 4);
    REQUIRE(w.has_value());
    CHECK(w->at("a1") == "a");
    CHECK(w->at("a2") == "a^2");
  }
  SUBCASE("existence table over q in {2,3,4,5,7,8,9}") {
    std::vector<int> qs{2, 3, 4, 5, 7, 8, 9};
    for (int q : qs) {
      for (const auto& n : {"U2", "K2", "P4"}) CHECK(pf_hom_to_field(pf_catalog(n), q).has_value() == (q >= 4));
      for (const auto& n : {"PPap", "PT"})
        CHECK(pf_hom_to_field(pf_catalog(n), q).has_value() == (q == 4 || q >= 7));
      bool golden = (q == 4 || q == 5 || q == 9);
      CHECK(pf_hom_to_field(pf_catalog("G"), q).has_value() == golden);
    }
  }
}

TEST_CASE("check_partial_field on a rank-1 toy") {
  auto ring = PolyRing::make({"z0"});
  auto m = RepresentedMatroid::from_matrix(ExactMatrix::parse_text("field 4\n1 1\n"));
  std::vector<std::vector<FracElem>> avar{{FracElem::parse(ring, "1"), FracElem::parse(ring, "z0")}};
  SUBCASE("with generators {-1, z0} the check passes") {
    auto res = check_partial_field(m, avar, m.ground(), {FracElem::parse(ring, "-1"), FracElem::parse(ring, "z0")},
                                   {}, {});
    CHECK(res.ok);
  }
  SUBCASE("with generators {-1} it fails and returns the offending determinant") {
    auto res = check_partial_field(m, avar, m.ground(), {FracElem::parse(ring, "-1")}, {}, {});
    REQUIRE_FALSE(res.ok);
    CHECK(res.failing_det == "z0");
    CHECK(res.failing_basis == std::vector<std::string>{"c2"});
  }
  SUBCASE("a nonzero nonbasis determinant is an inconsistent representation") {
    auto m2 = RepresentedMatroid::from_matrix(ExactMatrix::parse_text("field 4\n1 0\n"));  // second element is a loop
    std::vector<std::vector<FracElem>> bad{{FracElem::parse(ring, "1"), FracElem::parse(ring, "z0")}};
    CHECK_THROWS_AS(
        (void)check_partial_field(m2, bad, m2.ground(), {FracElem::parse(ring, "-1")}, {}, {}),
        std::domain_error);
  }
}
