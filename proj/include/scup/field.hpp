// Exact arithmetic in Q(z) with z^4 = -1, the eighth cyclotomic field.
#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scup {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct ScalarParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// c0 + c1 z + c2 z^2 + c3 z^3. Coefficients are canonical mpq values, so
// equality is coefficient-wise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c_{mpq_class(v), 0, 0, 0} {}  // NOLINT: implicit by design
  Scalar(const mpq_class& q) : c_{q, 0, 0, 0} {}  // NOLINT
  Scalar(long num, long den);
  static Scalar from_coeffs(const mpq_class& c0, const mpq_class& c1,
                            const mpq_class& c2, const mpq_class& c3);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar zeta();
  static Scalar i();                // z^2
  static Scalar sqrt2();            // z - z^3
  static Scalar sqrt_minus_half();  // (z + z^3) / 2

  const mpq_class& coeff(int j) const { return c_[j]; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }

  // Throws DivisionByZero.
  Scalar inverse() const;
  // Image under the automorphism z -> z^k, k odd.
  Scalar galois(int k) const;
  // Product of all four conjugates; always rational.
  mpq_class norm() const;

  // "c0+c1*z+c2*z^2+c3*z^3"; rational elements print as "p/q" (or "p").
  std::string to_string() const;
  // Accepts the full form, the rational shortcut, and any sum of terms
  // "q", "q*z", "q*z^k", "z^k" with k in 0..3.
  static Scalar parse(std::string_view text);

  // Total order used only for canonical sorting; not a field order.
  friend bool lex_less(const Scalar& a, const Scalar& b);

 private:
  std::array<mpq_class, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_to_string(const mpq_class& q);

}  // namespace scup
