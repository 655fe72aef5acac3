// Univariate polynomials over Scalar and homogeneous binary forms F(a, b),
// stored as F(1, u) with u = b/a plus the formal degree. The point [0:1] is a
// zero of F exactly when deg F(1, u) < formal degree.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scup/field.hpp"

namespace scup {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);  // lowest degree first
  static UPoly constant(const Scalar& c) { return UPoly({c}); }
  static UPoly linear(const Scalar& c0, const Scalar& c1) { return UPoly({c0, c1}); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Scalar& coeff(int i) const { return c_.at(i); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar eval(const Scalar& u) const;
  UPoly monic() const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;
  // Quotient and remainder; throws DivisionByZero for b = 0.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);
  // Degree <= nodes.size()-1 polynomial through (nodes[i], values[i]).
  static UPoly interpolate(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values);

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

class BinaryForm {
 public:
  BinaryForm() = default;  // the zero form
  BinaryForm(UPoly affine, int degree);

  static BinaryForm zero() { return BinaryForm(); }
  static BinaryForm one() { return BinaryForm(UPoly::constant(Scalar(1)), 0); }

  bool is_zero() const { return p_.is_zero(); }
  // Nonzero with no zero on P^1.
  bool is_unit() const { return !is_zero() && degree_ == 0; }
  int degree() const { return degree_; }
  const UPoly& affine() const { return p_; }
  int multiplicity_at_infinity() const { return is_zero() ? 0 : degree_ - p_.degree(); }
  Scalar eval(const Scalar& a, const Scalar& b) const;

  friend BinaryForm operator*(const BinaryForm& x, const BinaryForm& y);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
  // gcd with 0 as identity; normalized monic in u.
  static BinaryForm gcd(const BinaryForm& x, const BinaryForm& y);
  static BinaryForm lcm(const BinaryForm& x, const BinaryForm& y);
  // x / gcd(x, y): the zeros of x that are not zeros of y (x squarefree).
  static BinaryForm strip(const BinaryForm& x, const BinaryForm& y);
  BinaryForm squarefree() const;

  // Zeros as [a:b] pairs when they lie in the field: linear factors and
  // quadratics whose discriminant is q^2, -q^2, 2q^2 or -2q^2 for rational q.
  // nullopt when some zero needs a larger field.
  std::optional<std::vector<std::pair<Scalar, Scalar>>> zeros() const;

  // Homogeneous in a, b, e.g. "a*b - 2*b^2".
  std::string to_string() const;

 private:
  UPoly p_;
  int degree_ = 0;
};

}  // namespace scup
