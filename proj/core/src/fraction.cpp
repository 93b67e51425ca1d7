#include "quatroid/fraction.hpp"

#include <stdexcept>

namespace quatroid {

namespace {

// single common support variable of both, or -1
int common_single_var(const Poly& a, const Poly& b) {
  auto va = a.support_vars(), vb = b.support_vars();
  if (va.size() > 1 || vb.size() > 1) return -1;
  if (va.empty() && vb.empty()) return -1;
  if (va.empty()) return vb[0];
  if (vb.empty()) return va[0];
  return va[0] == vb[0] ? va[0] : -1;
}

// plain univariate remainder a mod b (field coefficients), b nonzero
Poly uni_rem(Poly a, const Poly& b, int var) {
  const auto& r = a.ring();
  while (!a.is_zero() && a.degree_in(var) >= b.degree_in(var)) {
    int shift = a.degree_in(var) - b.degree_in(var);
    // leading univariate coefficients
    Rat la, lb;
    for (const auto& [e, c] : a.terms())
      if (static_cast<int>(e[var]) == a.degree_in(var)) la = c;
    for (const auto& [e, c] : b.terms())
      if (static_cast<int>(e[var]) == b.degree_in(var)) lb = c;
    Expo sh(r->nvars(), 0);
    sh[var] = static_cast<uint16_t>(shift);
    Poly sub = b.mul_monomial(sh, r->p == 0 ? la / lb : r->cnorm(la * r->cinv(lb)));
    a = a - sub;
  }
  return a;
}

}  // namespace

Poly univariate_gcd(const Poly& a, const Poly& b) {
  auto one = Poly::constant(a.ring(), Rat(1));
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  int var = common_single_var(a, b);
  if (var < 0) return one;
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = uni_rem(x, y, var);
    x = y;
    y = r.is_zero() ? r : r.normalized();
  }
  return x.normalized();
}

FracElem::FracElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
  normalize();
}

void FracElem::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ring(), Rat(1));
    return;
  }
  Poly g = univariate_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  if (den_.is_constant()) {
    num_ = num_.mul_scalar(num_.ring()->cinv(den_.constant_coeff()));
    den_ = Poly::constant(num_.ring(), Rat(1));
    return;
  }
  // content normalization: make the denominator content-1 with positive lead
  Poly dn = den_.normalized();
  Poly q = den_.div_exact(dn);  // a constant
  num_ = num_.mul_scalar(num_.ring()->cinv(q.constant_coeff()));
  den_ = dn;
}

FracElem FracElem::operator+(const FracElem& o) const { return FracElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
FracElem FracElem::operator-(const FracElem& o) const { return FracElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
FracElem FracElem::operator*(const FracElem& o) const { return FracElem(num_ * o.num_, den_ * o.den_); }
FracElem FracElem::operator/(const FracElem& o) const {
  if (o.is_zero()) throw std::domain_error("fraction division by zero");
  return FracElem(num_ * o.den_, den_ * o.num_);
}
FracElem FracElem::operator-() const { return FracElem(-num_, den_); }
FracElem FracElem::inverse() const {
  if (is_zero()) throw std::domain_error("fraction inverse of zero");
  return FracElem(den_, num_);
}

bool FracElem::operator==(const FracElem& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }

std::string FracElem::str() const {
  if (den_.is_constant() && den_.constant_coeff() == 1) return num_.str();
  auto paren = [](const Poly& p) {
    std::string s = p.str();
    return p.n_terms() > 1 ? "(" + s + ")" : s;
  };
  return paren(num_) + "/" + paren(den_);
}

FracElem FracElem::parse(const std::shared_ptr<const PolyRing>& r, const std::string& text) {
  auto strip = [](std::string s) {
    while (!s.empty() && isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return s;
  };
  auto parse_side = [&](std::string s) {
    s = strip(s);
    bool neg = false;
    while (!s.empty() && s.front() == '-' && s.find('(') != std::string::npos) {
      neg = !neg;
      s = strip(s.substr(1));
    }
    Poly p = Poly::parse(r, s);
    return neg ? -p : p;
  };
  // split at a top-level '/' followed by a non-digit; a digit after '/'
  // belongs to a rational coefficient and is handled by the Poly parser
  int depth = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0 && i + 1 < text.size() && !isdigit(static_cast<unsigned char>(text[i + 1]))) {
      return FracElem(parse_side(text.substr(0, i)), parse_side(text.substr(i + 1)));
    }
  }
  return FracElem::of(parse_side(text));
}

FracElem poly_substitute(const Poly& p, const std::map<int, FracElem>& subs) {
  const auto& r = p.ring();
  FracElem acc(r);
  for (const auto& [e, c] : p.terms()) {
    FracElem term = FracElem::of(Poly::constant(r, c));
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      auto it = subs.find(static_cast<int>(v));
      FracElem base = it != subs.end() ? it->second : FracElem::of(Poly::variable(r, static_cast<int>(v)));
      for (int k = 0; k < e[v]; ++k) term = term * base;
    }
    acc = acc + term;
  }
  return acc;
}

FracElem frac_det(const std::vector<std::vector<FracElem>>& m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("frac_det: empty matrix");
  auto ring = m[0][0].ring();
  std::vector<std::vector<Poly>> nums(n, std::vector<Poly>(n, Poly::zero(ring)));
  Poly den_total = Poly::constant(ring, Rat(1));
  for (size_t i = 0; i < n; ++i) {
    Poly row_den = Poly::constant(ring, Rat(1));
    for (size_t j = 0; j < n; ++j) row_den = row_den * m[i][j].den();
    for (size_t j = 0; j < n; ++j) nums[i][j] = m[i][j].num() * row_den.div_exact(m[i][j].den());
    den_total = den_total * row_den;
  }
  return FracElem(poly_det(std::move(nums)), den_total);
}

}  // namespace quatroid
