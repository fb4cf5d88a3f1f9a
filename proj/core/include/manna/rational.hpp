#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace manna {

/// Arbitrary-precision rational kept in canonical form: positive
/// denominator, gcd(num, den) = 1. All arithmetic is exact.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}  // NOLINT: rationals convert from integers
  Rat(long n) : v_(static_cast<long int>(n)) {}  // NOLINT
  Rat(long long n) { v_ = from_int64(n); }       // NOLINT
  Rat(long long num, long long den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws manna::FormatError on bad input.
  static Rat parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat reciprocal() const;

  double to_double() const { return v_.get_d(); }
  /// "p/q" when the denominator is not 1, plain integer otherwise.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  static mpq_class from_int64(long long n);
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

Rat dot(const RatVec& a, const RatVec& b);
Rat sum(const RatVec& a);

/// Lexicographic comparison, first index most significant.
bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const RatMat& a, const RatMat& b);

std::string to_string(const RatVec& v);

}  // namespace manna
