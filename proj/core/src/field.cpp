#include "quatroid/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace quatroid {

namespace {

// Moduli chosen so that x is a primitive element. For GF(9) the modulus is
// x^2-x-1 over GF(3), which also puts the golden-ratio root directly in the
// printed alphabet.
const std::map<int, std::vector<int>>& extension_moduli() {
  static const std::map<int, std::vector<int>> m = {
      {4, {1, 1, 1}},     // x^2 + x + 1
      {8, {1, 1, 0, 1}},  // x^3 + x + 1
      {9, {2, 2, 1}},     // x^2 + 2x + 2  (= x^2 - x - 1 mod 3)
  };
  return m;
}

int p_of(int q) {
  for (int p : {2, 3, 5, 7, 11, 13})
    if (q % p == 0) return p;
  throw std::invalid_argument("unsupported field order " + std::to_string(q));
}

std::vector<int> code_to_poly(int code, int p, int deg) {
  std::vector<int> c(deg, 0);
  for (int i = 0; i < deg; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int poly_to_code(const std::vector<int>& c, int p) {
  int code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
  return code;
}

}  // namespace

Field::Field(int order, int characteristic, std::vector<int> modulus)
    : order_(order), char_(characteristic), modulus_(std::move(modulus)) {
  if (order_ == 0) return;  // rationals
  deg_ = modulus_.empty() ? 1 : static_cast<int>(modulus_.size()) - 1;
  const int q = order_, p = char_;
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto pa = code_to_poly(a, p, deg_);
    for (int b = 0; b < q; ++b) {
      auto pb = code_to_poly(b, p, deg_);
      std::vector<int> s(deg_);
      for (int i = 0; i < deg_; ++i) s[i] = (pa[i] + pb[i]) % p;
      add_[a * q + b] = poly_to_code(s, p);
      // schoolbook product reduced by the monic modulus
      std::vector<int> prod(2 * deg_ - 1, 0);
      for (int i = 0; i < deg_; ++i)
        for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      for (int d = static_cast<int>(prod.size()) - 1; d >= deg_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < deg_; ++i)
          prod[d - deg_ + i] = ((prod[d - deg_ + i] - c * modulus_[i]) % p + p * p) % p;
      }
      prod.resize(deg_);
      mul_[a * q + b] = poly_to_code(prod, p);
    }
  }
  for (int a = 0; a < q; ++a) {
    auto pa = code_to_poly(a, p, deg_);
    for (auto& c : pa) c = (p - c) % p;
    neg_[a] = poly_to_code(pa, p);
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
  }
  // primitive element: smallest code of multiplicative order q-1
  for (int g = 1; g < q; ++g) {
    int x = g, ord = 1;
    while (x != 1) {
      x = mul_[x * q + g];
      ++ord;
    }
    if (ord == q - 1) {
      gen_ = g;
      break;
    }
  }
  dlog_.assign(q, -1);
  int x = 1;
  for (int e = 0; e < q - 1; ++e) {
    dlog_[x] = e;
    x = mul_[x * q + gen_];
  }
}

const std::vector<int>& Field::supported_orders() {
  static const std::vector<int> v = {2, 3, 4, 5, 7, 8, 9, 11, 13};
  return v;
}

const Field& Field::gf(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return *it->second;
  bool ok = false;
  for (int q : supported_orders()) ok = ok || q == order;
  if (!ok) throw std::invalid_argument("unsupported field order " + std::to_string(order));
  int p = p_of(order);
  std::vector<int> mod;
  if (order != p) mod = extension_moduli().at(order);
  auto f = std::unique_ptr<Field>(new Field(order, p, std::move(mod)));
  auto& ref = *f;
  cache.emplace(order, std::move(f));
  return ref;
}

const Field& Field::rationals() {
  static const Field f(0, 0, {});
  return f;
}

const Field& Field::by_order_token(const std::string& tok) {
  if (tok == "rational" || tok == "Q" || tok == "0") return rationals();
  return gf(std::stoi(tok));
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

int Field::pow_elem(int a, long long e) const {
  if (a == 0) {
    if (e <= 0) throw std::domain_error("0 to nonpositive power");
    return 0;
  }
  long long m = (order_ - 1);
  long long r = ((e % m) + m) % m;
  int acc = 1, base = a;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

int Field::from_int(long long n) const {
  long long r = ((n % char_) + char_) % char_;
  return static_cast<int>(r);  // prime-subfield codes coincide with residues
}

int Field::dlog(int a) const {
  if (a == 0) throw std::domain_error("dlog of zero");
  return dlog_[a];
}

std::string Field::element_name(int code) const {
  if (deg_ == 1) return std::to_string(code);
  if (code == 0) return "0";
  int e = dlog_[code];
  if (e == 0) return "1";
  if (e == 1) return "a";
  return "a^" + std::to_string(e);
}

std::optional<int> Field::parse_element(const std::string& tok) const {
  if (tok.empty()) return std::nullopt;
  if (deg_ > 1) {
    if (tok == "0") return 0;
    if (tok == "1") return 1;
    if (tok == "a" || tok == "w") return gen_;
    if (tok == "w+1") return add(gen_, 1);
    if (tok.rfind("a^", 0) == 0) {
      try {
        return pow_elem(gen_, std::stoll(tok.substr(2)));
      } catch (...) {
        return std::nullopt;
      }
    }
  }
  // integer literal embedded through the prime subfield
  try {
    size_t pos = 0;
    long long n = std::stoll(tok, &pos);
    if (pos != tok.size()) return std::nullopt;
    return from_int(n);
  } catch (...) {
    return std::nullopt;
  }
}

Scalar Scalar::parse(const Field& f, const std::string& tok) {
  if (f.is_rational()) {
    auto slash = tok.find('/');
    try {
      if (slash == std::string::npos) return of_rat(Rat(Int(tok)));
      return of_rat(Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1))));
    } catch (...) {
      throw std::invalid_argument("bad rational token '" + tok + "'");
    }
  }
  auto c = f.parse_element(tok);
  if (!c) throw std::invalid_argument("bad GF(" + std::to_string(f.order()) + ") token '" + tok + "'");
  return of_code(f, *c);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return f_->is_rational() ? Scalar(*f_, Rat(rat_ + o.rat_)) : Scalar(*f_, f_->add(code_, o.code_));
}
Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return f_->is_rational() ? Scalar(*f_, Rat(rat_ - o.rat_)) : Scalar(*f_, f_->sub(code_, o.code_));
}
Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  return f_->is_rational() ? Scalar(*f_, Rat(rat_ * o.rat_)) : Scalar(*f_, f_->mul(code_, o.code_));
}
Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  return f_->is_rational() ? Scalar(*f_, Rat(rat_ / o.rat_)) : Scalar(*f_, f_->div(code_, o.code_));
}
Scalar Scalar::operator-() const {
  return f_->is_rational() ? Scalar(*f_, Rat(-rat_)) : Scalar(*f_, f_->neg(code_));
}
Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return f_->is_rational() ? Scalar(*f_, Rat(1 / rat_)) : Scalar(*f_, f_->inv(code_));
}
bool Scalar::operator==(const Scalar& o) const {
  if (f_ != o.f_) return false;
  return f_->is_rational() ? rat_ == o.rat_ : code_ == o.code_;
}

std::string Scalar::rat_str() const {
  std::ostringstream os;
  os << rat_;
  return os.str();
}

}  // namespace quatroid
