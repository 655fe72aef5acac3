#include "scup/field.hpp"

#include <cctype>
#include <ostream>

namespace scup {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  c_[0] = mpq_class(num, den);
  c_[0].canonicalize();
}

Scalar Scalar::from_coeffs(const mpq_class& c0, const mpq_class& c1,
                           const mpq_class& c2, const mpq_class& c3) {
  Scalar s;
  s.c_ = {c0, c1, c2, c3};
  for (auto& c : s.c_) c.canonicalize();
  return s;
}

Scalar Scalar::zeta() { return from_coeffs(0, 1, 0, 0); }
Scalar Scalar::i() { return from_coeffs(0, 0, 1, 0); }
Scalar Scalar::sqrt2() { return from_coeffs(0, 1, 0, -1); }
Scalar Scalar::sqrt_minus_half() {
  return from_coeffs(0, mpq_class(1, 2), 0, mpq_class(1, 2));
}

bool Scalar::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_zero() const { return sgn(c_[0]) == 0 && is_rational(); }

bool Scalar::is_one() const { return c_[0] == 1 && is_rational(); }

Scalar Scalar::operator-() const {
  Scalar r;
  for (int j = 0; j < 4; ++j) r.c_[j] = -c_[j];
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  c_[0] += o.c_[0];
  if (!o.is_rational())
    for (int j = 1; j < 4; ++j) c_[j] += o.c_[j];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  c_[0] -= o.c_[0];
  if (!o.is_rational())
    for (int j = 1; j < 4; ++j) c_[j] -= o.c_[j];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_rational()) {
    if (is_rational()) {
      c_[0] *= o.c_[0];
    } else {
      for (auto& c : c_) c *= o.c_[0];
    }
    return *this;
  }
  if (is_rational()) {
    mpq_class q = c_[0];
    for (int j = 0; j < 4; ++j) c_[j] = q * o.c_[j];
    return *this;
  }
  std::array<mpq_class, 4> r{};
  for (int a = 0; a < 4; ++a) {
    if (sgn(c_[a]) == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (sgn(o.c_[b]) == 0) continue;
      int k = a + b;
      if (k < 4)
        r[k] += c_[a] * o.c_[b];
      else
        r[k - 4] -= c_[a] * o.c_[b];
    }
  }
  c_ = r;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::galois(int k) const {
  Scalar r;
  for (int j = 0; j < 4; ++j) {
    int e = (j * k) % 8;
    if (e < 0) e += 8;
    if (e < 4)
      r.c_[e] += c_[j];
    else
      r.c_[e - 4] -= c_[j];
  }
  return r;
}

mpq_class Scalar::norm() const {
  Scalar p = *this * galois(3) * galois(5) * galois(7);
  return p.c_[0];
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_rational()) return Scalar(mpq_class(1) / c_[0]);
  Scalar conj = galois(3) * galois(5) * galois(7);
  mpq_class n = (*this * conj).c_[0];
  return conj * Scalar(mpq_class(1) / n);
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_to_string(c_[0]);
  return rational_to_string(c_[0]) + "+" + rational_to_string(c_[1]) + "*z+" +
         rational_to_string(c_[2]) + "*z^2+" + rational_to_string(c_[3]) +
         "*z^3";
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ScalarParseError("scalar parse error at " + std::to_string(pos) +
                           ": " + what + " in '" + std::string(s) + "'");
  }
};

mpz_class read_int(Cursor& c) {
  size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (start == c.pos) c.fail("expected digits");
  return mpz_class(std::string(c.s.substr(start, c.pos - start)));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  Cursor c{compact};
  if (c.done()) c.fail("empty");
  Scalar out;
  while (!c.done()) {
    int sign = 1;
    bool saw_sign = false;
    while (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -sign;
      saw_sign = true;
      ++c.pos;
    }
    if (!saw_sign && c.pos != 0) c.fail("expected '+' or '-'");
    mpq_class coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      mpz_class num = read_int(c);
      mpz_class den = 1;
      if (c.peek() == '/') {
        ++c.pos;
        den = read_int(c);
        if (den == 0) throw DivisionByZero("zero denominator in scalar");
      }
      coef = mpq_class(num, den);
      coef.canonicalize();
      have_coef = true;
    }
    int power = 0;
    if (have_coef && c.peek() == '*') {
      ++c.pos;
      if (c.peek() != 'z') c.fail("expected 'z'");
    }
    if (c.peek() == 'z') {
      ++c.pos;
      power = 1;
      if (c.peek() == '^') {
        ++c.pos;
        mpz_class p = read_int(c);
        if (p > 3) c.fail("power of z must be at most 3");
        power = static_cast<int>(p.get_si());
      }
    } else if (!have_coef) {
      c.fail("expected a term");
    }
    out.c_[power] += sign * coef;
  }
  return out;
}

bool lex_less(const Scalar& a, const Scalar& b) {
  for (int j = 0; j < 4; ++j) {
    if (a.c_[j] < b.c_[j]) return true;
    if (b.c_[j] < a.c_[j]) return false;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace scup
