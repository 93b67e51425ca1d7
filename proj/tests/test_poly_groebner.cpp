#include <random>

#include "doctest.h"
#include "quatroid/groebner.hpp"

using namespace quatroid;

namespace {

std::shared_ptr<const PolyRing> ring2(int p = 0) { return PolyRing::make({"x", "y"}, p); }

Poly P(const std::shared_ptr<const PolyRing>& r, const std::string& s) { return Poly::parse(r, s); }

Poly random_poly(const std::shared_ptr<const PolyRing>& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
  Poly p(r);
  for (int t = 0; t < 4; ++t) {
    Expo e(r->nvars(), 0);
    for (int v = 0; v < r->nvars(); ++v) e[v] = static_cast<uint16_t>(deg(rng));
    p.add_term(e, Rat(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  auto r = ring2();
  auto p = P(r, "x^2*y - 2*x + 1");
  CHECK(p.str() == "x^2*y - 2*x + 1");
  CHECK(Poly::parse(r, p.str()) == p);
  CHECK((p - p).is_zero());
  CHECK((p * P(r, "x")).degree() == 4);
  CHECK(P(r, "x + y") * P(r, "x - y") == P(r, "x^2 - y^2"));
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "-x - 1").str() == "-x - 1");
  // rational coefficients
  CHECK(P(r, "1/2*x + 1/2*x") == P(r, "x"));
}

TEST_CASE("exact division") {
  auto r = ring2();
  auto prod = P(r, "x^2 - y^2");
  CHECK(prod.div_exact(P(r, "x - y")) == P(r, "x + y"));
  Poly q(r);
  CHECK_FALSE(P(r, "x^2 + 1").try_div_exact(P(r, "x - y"), q));
}

TEST_CASE("groebner basics") {
  auto r = PolyRing::make({"x"});
  SUBCASE("<x^2-1, x-1> reduces to {x-1}") {
    PolyIdeal i(r, {P(r, "x^2 - 1"), P(r, "x - 1")});
    auto gb = i.groebner();
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == P(r, "x - 1"));
  }
  SUBCASE("<x, x+1> contains one") {
    PolyIdeal i(r, {P(r, "x"), P(r, "x + 1")});
    CHECK(i.contains_one());
  }
  SUBCASE("<x^2+x+1> over GF(2) is proper") {
    auto r2 = PolyRing::make({"x"}, 2);
    PolyIdeal i(r2, {P(r2, "x^2 + x + 1")});
    CHECK_FALSE(i.contains_one());
    CHECK(i.normal_form(P(r2, "1")) == P(r2, "1"));
  }
}

TEST_CASE("reduced basis is canonical under generator permutation and recomputation") {
  std::mt19937 rng(5);
  auto r = ring2();
  for (int t = 0; t < 12; ++t) {
    std::vector<Poly> gens{random_poly(r, rng), random_poly(r, rng), random_poly(r, rng)};
    PolyIdeal a(r, gens);
    std::vector<Poly> perm{gens[2], gens[0], gens[1]};
    PolyIdeal b(r, perm);
    auto ga = a.groebner(), gb = b.groebner();
    REQUIRE(ga.size() == gb.size());
    for (size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == gb[i]);
    PolyIdeal c(r, gens);
    auto gc = c.groebner();
    for (size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == gc[i]);
  }
}

TEST_CASE("normal form properties") {
  std::mt19937 rng(9);
  auto r = ring2();
  SUBCASE("nf(g, <g>) = 0 and nf(1, proper) = 1") {
    auto g = P(r, "x^2 + y - 3");
    PolyIdeal i(r, {g});
    CHECK(i.normal_form(g).is_zero());
    CHECK(i.normal_form(P(r, "1")) == P(r, "1"));
  }
  SUBCASE("nf(p*q) = nf(nf(p)*nf(q))") {
    PolyIdeal i(r, {P(r, "x^2 - y"), P(r, "y^2 - 2")});
    for (int t = 0; t < 15; ++t) {
      auto p = random_poly(r, rng), q = random_poly(r, rng);
      CHECK(i.normal_form(p * q) == i.normal_form(i.normal_form(p) * i.normal_form(q)));
    }
  }
}

TEST_CASE("GF(p) basis agrees with the Q basis reduced mod p") {
  auto rq = ring2(0);
  std::vector<Poly> gens{P(rq, "x^2 + x*y - 1"), P(rq, "y^2 - x + 2")};
  PolyIdeal iq(rq, gens);
  for (int p : {3, 5, 7}) {
    auto rp = ring2(p);
    std::vector<Poly> gp;
    for (const auto& g : gens) gp.push_back(g.mod_p(p));
    PolyIdeal ip(rp, gp);
    // every Q-basis element reduces into the GF(p) ideal and vice versa
    bool ok = true;
    for (const auto& g : iq.groebner()) ok = ok && ip.contains(g.mod_p(p));
    CHECK(ok);
  }
}

TEST_CASE("budget exhaustion reports instead of answering") {
  auto r = PolyRing::make({"x", "y", "z"});
  PolyIdeal i(r, {P(r, "x^2*y - z^2"), P(r, "y^2*z - x"), P(r, "z^2*x - y^3")});
  CHECK_THROWS_AS((void)i.groebner(2), BudgetExceeded);
}

TEST_CASE("extract_substitutions") {
  SUBCASE("empty ideal leaves every variable free") {
    auto r = ring2();
    PolyIdeal i(r, {});
    auto s = extract_substitutions(i);
    CHECK(s.solved.empty());
    CHECK(s.free_vars == std::vector<std::string>{"x", "y"});
  }
  SUBCASE("triangular linear system") {
    auto r = PolyRing::make({"z0", "z1", "z2"});
    PolyIdeal i(r, {P(r, "z0 + z2"), P(r, "z1 - z2 + 1")});
    auto s = extract_substitutions(i);
    REQUIRE(s.solved.count("z0"));
    REQUIRE(s.solved.count("z1"));
    CHECK(s.free_vars == std::vector<std::string>{"z2"});
    CHECK(s.solved.at("z0") == FracElem::parse(r, "-z2"));
    CHECK(s.solved.at("z1") == FracElem::parse(r, "z2 - 1"));
    CHECK(s.residual.empty());
  }
  SUBCASE("bilinear generator solves with a polynomial coefficient") {
    auto r = PolyRing::make({"z0", "z1"});
    PolyIdeal i(r, {P(r, "z0*z1 + z1 + 1")});
    auto s = extract_substitutions(i);
    REQUIRE(s.solved.count("z0"));
    CHECK(s.solved.at("z0") == FracElem::parse(r, "-(z1 + 1)/z1"));
    // constant-coefficient mode must leave it alone
    PolyIdeal j(r, {P(r, "z0*z1 + z1 + 1")});
    auto sc = extract_substitutions(j, true);
    CHECK(sc.solved.empty());
    CHECK(sc.residual.size() == 1);
  }
  SUBCASE("substitution soundness: solved values kill the original generators") {
    auto r = PolyRing::make({"z0", "z1", "z2"});
    std::vector<Poly> gens{P(r, "z0 + z1 - 1"), P(r, "z1*z2 - z0")};
    PolyIdeal i(r, gens);
    auto s = extract_substitutions(i);
    std::map<int, FracElem> by_index;
    for (const auto& [name, val] : s.solved) by_index.emplace(r->var_index(name), val);
    PolyIdeal res(r, s.residual);
    for (const auto& g : gens) {
      FracElem image = poly_substitute(g, by_index);
      CHECK(res.normal_form(image.num()).is_zero());
    }
  }
}

TEST_CASE("fraction elements") {
  auto r = PolyRing::make({"z0"});
  auto a = FracElem::parse(r, "1/(z0 - 1)");
  auto b = FracElem::parse(r, "-z0/(z0 - 1)");
  CHECK((a + b) == FracElem::parse(r, "-1"));
  CHECK((a * a.inverse()) == FracElem::parse(r, "1"));
  // univariate cancellation
  FracElem c(P(r, "z0^2 - 1"), P(r, "z0 - 1"));
  CHECK(c == FracElem::parse(r, "z0 + 1"));
  CHECK(c.den() == P(r, "1"));
}

TEST_CASE("poly_det matches cofactor expansion") {
  std::mt19937 rng(31);
  auto r = ring2();
  for (int t = 0; t < 10; ++t) {
    std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3, Poly::zero(r)));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(r, rng);
    Poly oracle = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(poly_det(m) == oracle);
  }
}
