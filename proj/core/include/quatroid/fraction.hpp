#pragma once

#include <map>

#include "quatroid/poly.hpp"

namespace quatroid {

/// num/den in the fraction field of a polynomial ring. Normalization keeps
/// integer content 1 on both sides and cancels common factors when both
/// parts are effectively univariate (Euclid); multivariate fractions are
/// reduced by content only.
class FracElem {
 public:
  explicit FracElem(std::shared_ptr<const PolyRing> r)
      : num_(Poly::zero(r)), den_(Poly::constant(r, Rat(1))) {}
  FracElem(Poly num, Poly den);
  static FracElem of(Poly p) {
    auto r = p.ring();
    return FracElem(std::move(p), Poly::constant(r, Rat(1)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::shared_ptr<const PolyRing>& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  FracElem operator+(const FracElem& o) const;
  FracElem operator-(const FracElem& o) const;
  FracElem operator*(const FracElem& o) const;
  FracElem operator/(const FracElem& o) const;
  FracElem operator-() const;
  FracElem inverse() const;
  bool operator==(const FracElem& o) const;  // cross-multiplied equality
  bool operator!=(const FracElem& o) const { return !(*this == o); }

  std::string str() const;
  static FracElem parse(const std::shared_ptr<const PolyRing>& r, const std::string& text);

 private:
  void normalize();
  Poly num_, den_;
};

/// Substitutes fractions for variables; variables absent from the map stay.
/// Returns the result as a fraction (denominator = product of substitution
/// denominators raised to the needed powers).
FracElem poly_substitute(const Poly& p, const std::map<int, FracElem>& subs);

/// Determinant of a square matrix of fractions: clears denominators per row
/// and runs fraction-free Bareiss on the numerators.
FracElem frac_det(const std::vector<std::vector<FracElem>>& m);

/// gcd of two effectively-univariate polynomials in the same variable
/// (content-normalized, monic-led result); constant 1 otherwise.
Poly univariate_gcd(const Poly& a, const Poly& b);

}  // namespace quatroid
