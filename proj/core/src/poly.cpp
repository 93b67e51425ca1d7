#include "quatroid/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quatroid {

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> vars, int p) {
  auto r = std::make_shared<PolyRing>();
  r->vars = std::move(vars);
  r->p = p;
  return r;
}

int PolyRing::var_index(const std::string& v) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == v) return i;
  throw std::invalid_argument("unknown variable '" + v + "'");
}

Rat PolyRing::cnorm(const Rat& x) const {
  if (p == 0) return x;
  Int num = numerator(x) % p, den = denominator(x) % p;
  if (den == 0) throw std::domain_error("coefficient denominator vanishes mod p");
  if (num < 0) num += p;
  if (den < 0) den += p;
  long long d = den.convert_to<long long>(), inv = 1;
  for (long long k = 1; k < p; ++k)
    if ((d * k) % p == 1) {
      inv = k;
      break;
    }
  Int r = (num * inv) % p;
  return Rat(r);
}

Rat PolyRing::cinv(const Rat& x) const {
  if (x == 0) throw std::domain_error("coefficient inverse of zero");
  if (p == 0) return Rat(1) / x;
  return cnorm(Rat(1) / x);
}

int total_degree(const Expo& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool expo_divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo expo_sub(const Expo& b, const Expo& a) {
  Expo r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = static_cast<uint16_t>(b[i] - a[i]);
  return r;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool DegRevLexGreater::operator()(const Expo& a, const Expo& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  // a > b iff the last nonzero entry of a-b is negative
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Poly Poly::constant(std::shared_ptr<const PolyRing> r, const Rat& c) {
  Poly p(r);
  p.add_term(Expo(r->nvars(), 0), c);
  return p;
}

Poly Poly::variable(std::shared_ptr<const PolyRing> r, int var) {
  Expo e(r->nvars(), 0);
  e[var] = 1;
  Poly p(r);
  p.add_term(e, Rat(1));
  return p;
}

Poly Poly::variable(std::shared_ptr<const PolyRing> r, const std::string& v) {
  int i = r->var_index(v);
  return variable(std::move(r), i);
}

Poly Poly::monomial(std::shared_ptr<const PolyRing> r, Expo e, const Rat& c) {
  Poly p(r);
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Expo& e, const Rat& c) {
  Rat cc = r_->cnorm(c);
  if (cc == 0) return;
  auto [it, fresh] = t_.emplace(e, cc);
  if (!fresh) {
    it->second = r_->cnorm(it->second + cc);
    if (it->second == 0) t_.erase(it);
  }
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && total_degree(t_.begin()->first) == 0);
}

const Expo& Poly::leading_expo() const {
  if (t_.empty()) throw std::domain_error("leading term of zero");
  return t_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
  if (t_.empty()) throw std::domain_error("leading term of zero");
  return t_.begin()->second;
}

Rat Poly::constant_coeff() const {
  Expo z(r_->nvars(), 0);
  auto it = t_.find(z);
  return it == t_.end() ? Rat(0) : it->second;
}

int Poly::degree() const { return t_.empty() ? -1 : total_degree(t_.begin()->first); }

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

std::vector<int> Poly::support_vars() const {
  std::vector<int> out;
  for (int v = 0; v < r_->nvars(); ++v)
    if (degree_in(v) > 0) out.push_back(v);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(r_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, r_->cnorm(-c));
  return r;
}

Poly Poly::mul_scalar(const Rat& c) const {
  Poly r(r_);
  Rat cc = r_->cnorm(c);
  if (cc == 0) return r;
  for (const auto& [e, k] : t_) {
    Rat v = r_->cnorm(k * cc);
    if (v != 0) r.t_.emplace(e, v);
  }
  return r;
}

Poly Poly::mul_monomial(const Expo& e, const Rat& c) const {
  Poly r(r_);
  Rat cc = r_->cnorm(c);
  if (cc == 0) return r;
  for (const auto& [me, k] : t_) {
    Expo ne(me.size());
    for (size_t i = 0; i < me.size(); ++i) ne[i] = static_cast<uint16_t>(me[i] + e[i]);
    Rat v = r_->cnorm(k * cc);
    if (v != 0) r.t_.emplace(std::move(ne), v);
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(r_);
  for (const auto& [e, c] : o.t_) {
    for (const auto& [me, k] : t_) {
      Expo ne(me.size());
      for (size_t i = 0; i < me.size(); ++i) ne[i] = static_cast<uint16_t>(me[i] + e[i]);
      r.add_term(ne, r_->cnorm(k * c));
    }
  }
  return r;
}

bool Poly::split_linear(int var, Poly& coeff, Poly& rest) const {
  if (degree_in(var) != 1) return false;
  coeff = Poly(r_);
  rest = Poly(r_);
  for (const auto& [e, c] : t_) {
    if (e[var] == 1) {
      Expo e2 = e;
      e2[var] = 0;
      coeff.add_term(e2, c);
    } else {
      rest.add_term(e, c);
    }
  }
  return true;
}

bool Poly::try_div_exact(const Poly& d, Poly& quotient) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly rem = *this;
  Poly q(r_);
  while (!rem.is_zero()) {
    const Expo& le = rem.leading_expo();
    if (!expo_divides(d.leading_expo(), le)) return false;
    Rat c = r_->cnorm(rem.leading_coeff() / d.leading_coeff());
    Expo me = expo_sub(le, d.leading_expo());
    q.add_term(me, c);
    rem = rem - d.mul_monomial(me, c);
  }
  quotient = q;
  return true;
}

Poly Poly::div_exact(const Poly& d) const {
  Poly q(r_);
  if (!try_div_exact(d, q)) throw std::domain_error("polynomial division not exact");
  return q;
}

Poly Poly::normalized() const {
  if (t_.empty()) return *this;
  if (r_->p != 0) return mul_scalar(r_->cinv(leading_coeff()));
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : t_) {
    num_gcd = gcd(num_gcd, numerator(c));
    Int den = denominator(c);
    den_lcm = den_lcm / gcd(den_lcm, den) * den;
  }
  if (num_gcd == 0) return *this;
  if (num_gcd < 0) num_gcd = -num_gcd;
  Rat scale(den_lcm, num_gcd);
  if (leading_coeff() < 0) scale = -scale;
  return mul_scalar(scale);
}

Poly Poly::mod_p(int p) const {
  auto r2 = PolyRing::make(r_->vars, p);
  Poly out(r2);
  for (const auto& [e, c] : t_) out.add_term(e, c);
  return out;
}

Poly Poly::into_ring(const std::shared_ptr<const PolyRing>& r2) const {
  if (!r2->compatible(*r_)) {
    for (size_t i = 0; i < r_->vars.size(); ++i)
      if (i >= r2->vars.size() || r2->vars[i] != r_->vars[i])
        throw std::invalid_argument("into_ring: incompatible rings");
    if (r2->p != r_->p) throw std::invalid_argument("into_ring: coefficient fields differ");
  }
  Poly out(r2);
  for (const auto& [e, c] : t_) {
    Expo e2(r2->nvars(), 0);
    for (size_t i = 0; i < e.size(); ++i) e2[i] = e[i];
    out.add_term(e2, c);
  }
  return out;
}

int Poly::eval_gf(const Field& f, const std::vector<int>& assignment) const {
  int acc = 0;
  for (const auto& [e, c] : t_) {
    Int num = numerator(c) % f.characteristic(), den = denominator(c) % f.characteristic();
    if (den == 0) throw std::domain_error("eval_gf: denominator vanishes");
    int cn = f.from_int(num.convert_to<long long>());
    int cd = f.from_int(den.convert_to<long long>());
    int term = f.div(cn, cd);
    for (size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term = f.mul(term, assignment[v]);
    acc = f.add(acc, term);
  }
  return acc;
}

Poly Poly::subst_var(int var, const Poly& value) const {
  Poly out(r_);
  for (const auto& [e, c] : t_) {
    Expo e2 = e;
    int k = e2[var];
    e2[var] = 0;
    Poly term = Poly::monomial(r_, e2, c);
    for (int i = 0; i < k; ++i) term = term * value;
    out = out + term;
  }
  return out;
}

Rat Poly::eval_q(const std::vector<Rat>& assignment) const {
  Rat acc(0);
  for (const auto& [e, c] : t_) {
    Rat term = c;
    for (size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term *= assignment[v];
    acc += term;
  }
  return acc;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    Rat ca = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(e) > 0;
    if (ca != 1 || !has_vars) {
      os << ca;
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << r_->vars[v];
      if (e[v] > 1) os << "^" << static_cast<int>(e[v]);
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::shared_ptr<const PolyRing>& r;
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  Rat parse_number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Int num(s.substr(start, i - start));
    size_t save = i;
    if (eat('/')) {
      skip_ws();
      size_t ds = i;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == ds) {
        i = save;
        return Rat(num);
      }
      return Rat(num, Int(s.substr(ds, i - ds)));
    }
    return Rat(num);
  }

  std::string parse_ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
  }

  Poly parse_term() {
    skip_ws();
    Rat coef(1);
    Expo e(r->nvars(), 0);
    bool saw = false;
    if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
      coef = parse_number();
      saw = true;
    }
    while (true) {
      skip_ws();
      size_t save = i;
      if (eat('*')) skip_ws();
      if (i >= s.size() || !(isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        i = save;
        break;
      }
      std::string v = parse_ident();
      int vi = r->var_index(v);
      int exp = 1;
      if (eat('^')) {
        skip_ws();
        size_t ds = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        exp = std::stoi(s.substr(ds, i - ds));
      }
      e[vi] = static_cast<uint16_t>(e[vi] + exp);
      saw = true;
    }
    if (!saw) throw std::invalid_argument("polynomial parse error near index " + std::to_string(i));
    return Poly::monomial(r, e, coef);
  }

  Poly parse_sum() {
    Poly acc(r);
    int sign = 1;
    skip_ws();
    if (eat('-')) sign = -1;
    while (true) {
      Poly t = parse_term();
      acc = sign > 0 ? acc + t : acc - t;
      skip_ws();
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    skip_ws();
    if (i != s.size()) throw std::invalid_argument("polynomial parse error: trailing input");
    return acc;
  }
};

}  // namespace

Poly Poly::parse(const std::shared_ptr<const PolyRing>& r, const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return Poly::zero(r);
  if (text == "0") return Poly::zero(r);
  Parser p{r, text, 0};
  return p.parse_sum();
}

bool poly_less(const Poly& a, const Poly& b) {
  DegRevLexGreater gt;
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return gt(ib->first, ia->first);  // smaller leading term first
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.n_terms() < b.n_terms();
}

Poly poly_det(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  auto ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  Poly prev = Poly::constant(ring, Rat(1));
  int sign = 1;
  for (size_t c = 0; c + 1 < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return Poly::zero(ring);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (size_t i = c + 1; i < n; ++i) {
      for (size_t j = c + 1; j < n; ++j) {
        Poly num = m[i][j] * m[c][c] - m[i][c] * m[c][j];
        m[i][j] = num.div_exact(prev);
      }
      m[i][c] = Poly::zero(ring);
    }
    prev = m[c][c];
  }
  Poly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace quatroid
