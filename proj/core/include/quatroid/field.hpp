#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quatroid {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Scalar domain: GF(q) for q in {2,3,4,5,7,8,9,11,13} or the rationals.
///
/// Finite fields hold their elements as integer codes 0..q-1; for extension
/// fields the code's base-p digits are the coefficients of the residue
/// polynomial. GF(4) is built from x^2+x+1, so the generator a satisfies
/// a^2 = a+1, and elements print as {0, 1, a, a^2}. The chosen modulus makes
/// the generator primitive for every supported extension order.
class Field {
 public:
  static const Field& gf(int order);
  static const Field& rationals();
  static const std::vector<int>& supported_orders();
  static const Field& by_order_token(const std::string& tok);  // "4" or "rational"

  bool is_rational() const { return order_ == 0; }
  int order() const { return order_; }          // 0 for the rationals
  int characteristic() const { return char_; }  // 0 for the rationals
  int degree() const { return deg_; }
  const std::vector<int>& generator_polynomial() const { return modulus_; }

  int add(int a, int b) const { return add_[a * order_ + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow_elem(int a, long long e) const;
  int generator() const { return gen_; }
  int from_int(long long n) const;
  int dlog(int a) const;  // a != 0; a == generator^dlog(a)

  std::string element_name(int code) const;
  std::optional<int> parse_element(const std::string& tok) const;

  std::string order_token() const { return is_rational() ? "rational" : std::to_string(order_); }

  bool operator==(const Field& o) const { return this == &o; }

 private:
  Field(int order, int characteristic, std::vector<int> modulus);
  Field(const Field&) = delete;

  int order_ = 0;
  int char_ = 0;
  int deg_ = 1;
  std::vector<int> modulus_;  // coefficients low->high, empty for prime fields
  int gen_ = 0;
  std::vector<int> add_, mul_, neg_, inv_, dlog_;
};

/// Immutable exact scalar: an element of a fixed Field.
class Scalar {
 public:
  Scalar() : f_(&Field::rationals()), rat_(0) {}

  static Scalar zero(const Field& f) { return f.is_rational() ? Scalar(f, Rat(0)) : Scalar(f, 0); }
  static Scalar one(const Field& f) { return f.is_rational() ? Scalar(f, Rat(1)) : Scalar(f, 1); }
  static Scalar of_code(const Field& f, int code) { return Scalar(f, code); }
  static Scalar of_rat(const Rat& r) { return Scalar(Field::rationals(), r); }
  static Scalar from_int(const Field& f, long long n) {
    return f.is_rational() ? Scalar(f, Rat(n)) : Scalar(f, f.from_int(n));
  }
  static Scalar parse(const Field& f, const std::string& tok);

  const Field& field() const { return *f_; }
  bool is_zero() const { return f_->is_rational() ? rat_ == 0 : code_ == 0; }
  bool is_one() const { return f_->is_rational() ? rat_ == 1 : code_ == 1; }
  int code() const { return code_; }
  const Rat& rat() const { return rat_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const { return f_->is_rational() ? rat_str() : f_->element_name(code_); }

 private:
  Scalar(const Field& f, int code) : f_(&f), code_(code) {}
  Scalar(const Field& f, Rat r) : f_(&f), rat_(std::move(r)) {}
  std::string rat_str() const;
  void check_same(const Scalar& o) const {
    if (f_ != o.f_) throw std::invalid_argument("scalar fields differ");
  }

  const Field* f_;
  int code_ = 0;
  Rat rat_;
};

}  // namespace quatroid
