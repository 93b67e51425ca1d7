#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "quatroid/field.hpp"

namespace quatroid {

/// Polynomial ring descriptor: named variables over Q (p = 0) or GF(p).
struct PolyRing {
  std::vector<std::string> vars;
  int p = 0;

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> vars, int p = 0);
  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& v) const;
  bool compatible(const PolyRing& o) const { return vars == o.vars && p == o.p; }

  Rat cnorm(const Rat& x) const;  // canonical coefficient (residue in [0,p) for GF(p))
  Rat cinv(const Rat& x) const;
};

using Expo = std::vector<uint16_t>;

int total_degree(const Expo& e);
bool expo_divides(const Expo& a, const Expo& b);  // a | b
Expo expo_sub(const Expo& b, const Expo& a);
Expo expo_lcm(const Expo& a, const Expo& b);

/// Degree-reverse-lexicographic order with vars[0] > vars[1] > ...; "greater"
/// comparator so that std::map iteration starts at the leading term.
struct DegRevLexGreater {
  bool operator()(const Expo& a, const Expo& b) const;
};

/// Sparse multivariate polynomial with canonical term order. No zero
/// coefficients are stored.
class Poly {
 public:
  explicit Poly(std::shared_ptr<const PolyRing> ring) : r_(std::move(ring)) {}

  static Poly zero(std::shared_ptr<const PolyRing> r) { return Poly(std::move(r)); }
  static Poly constant(std::shared_ptr<const PolyRing> r, const Rat& c);
  static Poly variable(std::shared_ptr<const PolyRing> r, int var);
  static Poly variable(std::shared_ptr<const PolyRing> r, const std::string& v);
  static Poly monomial(std::shared_ptr<const PolyRing> r, Expo e, const Rat& c);

  const std::shared_ptr<const PolyRing>& ring() const { return r_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  const std::map<Expo, Rat, DegRevLexGreater>& terms() const { return t_; }
  size_t n_terms() const { return t_.size(); }

  const Expo& leading_expo() const;
  const Rat& leading_coeff() const;
  Rat constant_coeff() const;
  int degree() const;
  int degree_in(int var) const;
  std::vector<int> support_vars() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly mul_scalar(const Rat& c) const;
  Poly mul_monomial(const Expo& e, const Rat& c) const;
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Splits p = A*v + B when degree_in(v) == 1; A and B do not involve v.
  bool split_linear(int var, Poly& coeff, Poly& rest) const;

  /// Exact division (throws if the divisor does not divide exactly).
  Poly div_exact(const Poly& d) const;
  /// Exact-division test without throwing.
  bool try_div_exact(const Poly& d, Poly& quotient) const;

  /// Content-and-sign normalization: over Q, integer coefficients with
  /// content 1 and positive leading coefficient; over GF(p), monic.
  Poly normalized() const;

  Poly mod_p(int p) const;  // push a Q-polynomial into GF(p) coefficients
  Poly into_ring(const std::shared_ptr<const PolyRing>& r2) const;  // same var names required

  int eval_gf(const Field& f, const std::vector<int>& assignment) const;
  Rat eval_q(const std::vector<Rat>& assignment) const;

  /// Substitutes a polynomial for one variable.
  Poly subst_var(int var, const Poly& value) const;

  std::string str() const;
  static Poly parse(const std::shared_ptr<const PolyRing>& r, const std::string& text);

  void add_term(const Expo& e, const Rat& c);  // in-place accumulate

 private:
  std::shared_ptr<const PolyRing> r_;
  std::map<Expo, Rat, DegRevLexGreater> t_;
};

/// Deterministic total order on polynomials (by term lists), for sorting.
bool poly_less(const Poly& a, const Poly& b);

/// Fraction-free Bareiss determinant of a square polynomial matrix.
Poly poly_det(std::vector<std::vector<Poly>> m);

}  // namespace quatroid
