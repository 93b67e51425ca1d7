#include <random>

#include "doctest.h"
#include "quatroid/matrix.hpp"

using namespace quatroid;

namespace {

ExactMatrix parse(const std::string& t) { return ExactMatrix::parse_text(t); }

ExactMatrix random_matrix(const Field& f, int rows, int cols, std::mt19937& rng) {
  std::vector<std::string> rl, cl;
  for (int i = 1; i <= rows; ++i) rl.push_back("r" + std::to_string(i));
  for (int j = 1; j <= cols; ++j) cl.push_back("c" + std::to_string(j));
  ExactMatrix m(f, rl, cl);
  std::uniform_int_distribution<int> d(0, f.order() - 1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar::of_code(f, d(rng));
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  SUBCASE("rank-1 over GF(4): second row is a multiple of the first") {
    auto m = parse("field 4\n1 a\na a^2\n");
    auto rr = m.rref();
    CHECK(rr.rank == 1);
  }
  SUBCASE("[I3|D3] has rank 3") {
    const Field& f = Field::gf(4);
    auto m = ExactMatrix::hconcat(ExactMatrix::identity(f, 3), ExactMatrix::build_Dn(f, 3));
    CHECK(m.rref().rank == 3);
  }
  SUBCASE("empty matrix has rank 0") {
    const Field& f = Field::gf(2);
    ExactMatrix m(f, {"r1", "r2"}, {});
    CHECK(m.rref().rank == 0);
  }
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Field& f = trial % 2 ? Field::gf(4) : Field::gf(5);
    auto m = random_matrix(f, 3, 5, rng);
    auto r1 = m.rref();
    CHECK(r1.reduced.rref().reduced == r1.reduced);
    CHECK(r1.rank == m.transpose().rref().rank);
  }
}

TEST_CASE("pivot on the sole entry of [I1|[a]] gives [I1|[a^-1]] after exchange") {
  const Field& f = Field::gf(4);
  ExactMatrix m(f, {"r1"}, {"b", "c"});
  m.at(0, 0) = Scalar::one(f);
  m.at(0, 1) = Scalar::of_code(f, f.generator());
  auto p = m.pivot("r1", "c");
  CHECK(p.col_labels() == std::vector<std::string>{"c", "b"});
  CHECK(p.at(0, 0) == Scalar::one(f));
  CHECK(p.at(0, 1) == Scalar::of_code(f, f.inv(f.generator())));
}

TEST_CASE("pivot on a diagonal 1 whose row has a zero block leaves the matrix unchanged") {
  auto m = parse("field 4\n1 0 0 0\n0 1 0 a\n");
  m.set_row_labels({"r1", "r2"});
  m.set_col_labels({"b1", "b2", "c1", "c2"});
  CHECK(m.pivot("r1", "b1") == m);
  CHECK_THROWS_AS(m.pivot("r1", "c1"), std::invalid_argument);  // zero pivot entry
}

TEST_CASE("double pivot at the same position restores the representation") {
  std::mt19937 rng(11);
  const Field& f = Field::gf(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_matrix(f, 3, 2, rng);
    auto id = ExactMatrix::identity(f, 3, "b");
    auto m = ExactMatrix::hconcat(id, a);
    // find a nonzero entry of the non-identity part
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i)
      for (int j = 3; j < 5 && !found; ++j)
        if (!m.at(i, j).is_zero()) {
          found = true;
          std::string r = m.row_labels()[i], c = m.col_labels()[j];
          auto once = m.pivot(r, c);
          std::string swapped_in = once.col_labels()[j];  // old basis label now at j
          auto twice = once.pivot(r, swapped_in);
          CHECK(twice.col_labels() == m.col_labels());
          CHECK(representation_equal(twice, m));
        }
  }
}

TEST_CASE("determinants") {
  const Field& f = Field::gf(4);
  SUBCASE("det(I_n) = 1") {
    for (int n : {0, 1, 3}) CHECK(ExactMatrix::identity(f, n).det() == Scalar::one(f));
  }
  SUBCASE("det [[1,a],[a,1]] over GF(4) equals a") {
    auto m = parse("field 4\n1 a\na 1\n");
    CHECK(m.det() == Scalar::parse(f, "a"));
  }
  SUBCASE("repeated column gives det 0") {
    auto m = parse("field 4\na a\na^2 a^2\n");
    CHECK(m.det().is_zero());
  }
  SUBCASE("rational Bareiss matches cofactor expansion on 3x3") {
    auto m = parse("field rational\n1/2 2 3\n4 5/3 6\n7 8 9\n");
    // cofactor oracle
    auto e = [&](int i, int j) { return m.at(i, j).rat(); };
    Rat det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
              e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    CHECK(m.det() == Scalar::of_rat(det));
  }
}

TEST_CASE("det is multiplicative and row-operation invariant") {
  std::mt19937 rng(3);
  const Field& f = Field::gf(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_matrix(f, 3, 3, rng);
    auto b = random_matrix(f, 3, 3, rng);
    ExactMatrix ab(f, a.row_labels(), b.col_labels());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Scalar s = Scalar::zero(f);
        for (int k = 0; k < 3; ++k) s = s + a.at(i, k) * b.at(k, j);
        ab.at(i, j) = s;
      }
    CHECK(ab.det() == a.det() * b.det());
    auto c = a;
    c.add_multiple_of_row(0, 2, Scalar::from_int(f, 3));
    CHECK(c.det() == a.det());
  }
}

TEST_CASE("build_Dn") {
  const Field& f4 = Field::gf(4);
  SUBCASE("D3 columns are (1,-1,0),(1,0,-1),(0,1,-1)") {
    auto d = ExactMatrix::build_Dn(Field::gf(5), 3);
    CHECK(d.ncols() == 3);
    const Field& f = Field::gf(5);
    CHECK(d.at(0, 0) == Scalar::one(f));
    CHECK(d.at(1, 0) == -Scalar::one(f));
    CHECK(d.at(2, 0) == Scalar::zero(f));
    CHECK(d.at(0, 1) == Scalar::one(f));
    CHECK(d.at(2, 1) == -Scalar::one(f));
    CHECK(d.at(1, 2) == Scalar::one(f));
    CHECK(d.at(2, 2) == -Scalar::one(f));
    CHECK(d.col_labels() == std::vector<std::string>{"d(1,2)", "d(1,3)", "d(2,3)"});
  }
  SUBCASE("D4 has 6 columns") { CHECK(ExactMatrix::build_Dn(f4, 4).ncols() == 6); }
  SUBCASE("over GF(2) every D_n column has two ones") {
    auto d = ExactMatrix::build_Dn(Field::gf(2), 4);
    for (int j = 0; j < d.ncols(); ++j) {
      int ones = 0;
      for (int i = 0; i < d.nrows(); ++i)
        if (d.at(i, j).is_one()) ++ones;
      CHECK(ones == 2);
    }
  }
}

TEST_CASE("matrix text format round-trips bit-exactly") {
  std::mt19937 rng(19);
  for (const Field* f : {&Field::gf(4), &Field::gf(9), &Field::gf(13)}) {
    auto m = random_matrix(*f, 4, 6, rng);
    auto back = ExactMatrix::parse_text(m.to_text());
    CHECK(back.to_text() == m.to_text());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) CHECK(back.at(i, j) == m.at(i, j));
  }
  auto q = parse("field rational\n1/2 -3 0\n7 22/7 -1/9\n");
  CHECK(ExactMatrix::parse_text(q.to_text()).to_text() == q.to_text());
  // empty matrix: three rows, zero columns
  const Field& f2 = Field::gf(2);
  ExactMatrix e(f2, {"r1", "r2", "r3"}, {});
  auto back = ExactMatrix::parse_text(e.to_text());
  CHECK(back.nrows() == 3);
  CHECK(back.ncols() == 0);
}
