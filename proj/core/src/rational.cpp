#include "manna/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "manna/errors.hpp"

namespace manna {

mpq_class Rat::from_int64(long long n) {
  // mpq_class has no long long constructor on LP64 it does via long,
  // but keep a portable path through the decimal string.
  if (n >= static_cast<long long>(-0x40000000) &&
      n <= static_cast<long long>(0x40000000)) {
    return mpq_class(static_cast<long>(n));
  }
  return mpq_class(mpz_class(std::to_string(n)));
}

Rat::Rat(long long num, long long den) {
  if (den == 0) throw FormatError("rational with zero denominator");
  v_ = from_int64(num) / from_int64(den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw FormatError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw FormatError("reciprocal of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::parse(const std::string& text) {
  auto bad = [&] { return FormatError("bad rational literal: '" + text + "'"); };
  if (text.empty()) throw bad();
  std::string num = text, den;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) throw bad();
  }
  auto check_int = [&](const std::string& s, bool sign_ok) {
    if (s.empty()) throw bad();
    size_t i = 0;
    if (sign_ok && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  check_int(num, true);
  if (num[0] == '+') num.erase(num.begin());
  mpq_class q;
  if (den.empty()) {
    q = mpq_class(mpz_class(num));
  } else {
    check_int(den, false);
    mpz_class d(den);
    if (d == 0) throw FormatError("rational with zero denominator: '" + text + "'");
    q = mpq_class(mpz_class(num), d);
  }
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.raw();
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat r;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) r += a[i] * b[i];
  return r;
}

Rat sum(const RatVec& a) {
  Rat r;
  for (const Rat& x : a) r += x;
  return r;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool lex_less(const RatMat& a, const RatMat& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return lex_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace manna
