#include "scup/binary_form.hpp"

#include <algorithm>

namespace scup {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::eval(const Scalar& u) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = c_.back().inverse();
  std::vector<Scalar> out;
  for (const auto& c : c_) out.push_back(c * inv);
  return UPoly(std::move(out));
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> out;
  for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Scalar(static_cast<long>(i)));
  return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Scalar> rem = a.c_;
  int db = b.degree();
  std::vector<Scalar> quo(std::max(0, a.degree() - db + 1));
  Scalar lead_inv = b.c_.back().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Scalar q = rem[i] * lead_inv;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly UPoly::interpolate(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values) {
  // Newton divided differences.
  const size_t n = nodes.size();
  std::vector<Scalar> dd = values;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
  UPoly result = UPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;)
    result = result * UPoly::linear(-nodes[i], Scalar(1)) + UPoly::constant(dd[i]);
  return result;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].to_string();
    if (!s.empty()) s += " + ";
    if (i == 0) s += c;
    else s += (c_[i].is_one() ? "" : "(" + c + ")*") + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

BinaryForm::BinaryForm(UPoly affine, int degree) : p_(std::move(affine)), degree_(degree) {
  if (p_.is_zero()) degree_ = 0;
  else if (p_.degree() > degree_) throw std::invalid_argument("binary form: degree below affine degree");
}

Scalar BinaryForm::eval(const Scalar& a, const Scalar& b) const {
  // F(a, b) = sum c_i a^{D-i} b^i.
  Scalar acc;
  for (int i = 0; i <= p_.degree(); ++i) {
    Scalar term = p_.coeff(i);
    for (int r = 0; r < degree_ - i; ++r) term *= a;
    for (int r = 0; r < i; ++r) term *= b;
    acc += term;
  }
  return acc;
}

BinaryForm operator*(const BinaryForm& x, const BinaryForm& y) {
  if (x.is_zero() || y.is_zero()) return BinaryForm();
  return BinaryForm(x.p_ * y.p_, x.degree_ + y.degree_);
}

BinaryForm BinaryForm::gcd(const BinaryForm& x, const BinaryForm& y) {
  if (x.is_zero()) return y.is_zero() ? y : BinaryForm(y.p_.monic(), y.degree_);
  if (y.is_zero()) return BinaryForm(x.p_.monic(), x.degree_);
  UPoly g = UPoly::gcd(x.p_, y.p_);
  int inf = std::min(x.multiplicity_at_infinity(), y.multiplicity_at_infinity());
  return BinaryForm(g, g.degree() + inf);
}

BinaryForm BinaryForm::lcm(const BinaryForm& x, const BinaryForm& y) {
  if (x.is_zero() || y.is_zero()) return BinaryForm();
  BinaryForm g = gcd(x, y);
  BinaryForm prod = x * y;
  return BinaryForm(UPoly::divmod(prod.p_, g.p_).first.monic(), prod.degree_ - g.degree_);
}

BinaryForm BinaryForm::strip(const BinaryForm& x, const BinaryForm& y) {
  if (x.is_zero()) return x;
  BinaryForm g = gcd(x, y);
  if (g.is_zero()) return BinaryForm(UPoly::constant(Scalar(1)), 0);  // y = x = 0 handled above
  return BinaryForm(UPoly::divmod(x.p_, g.p_).first.monic(), x.degree_ - g.degree_);
}

BinaryForm BinaryForm::squarefree() const {
  if (is_zero()) return *this;
  UPoly p = p_;
  if (p.degree() > 0) p = UPoly::divmod(p, UPoly::gcd(p, p.derivative())).first;
  p = p.monic();
  return BinaryForm(p, p.degree() + std::min(1, multiplicity_at_infinity()));
}

namespace {

// sqrt of a rational r within Q(z) for r = q^2 * {1, -1, 2, -2}.
std::optional<Scalar> field_sqrt(const mpq_class& r) {
  if (r == 0) return Scalar(0);
  auto rational_sqrt = [](const mpq_class& v) -> std::optional<mpq_class> {
    if (v < 0) return std::nullopt;
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return mpq_class(sn, sd);
  };
  const std::pair<long, Scalar> units[] = {
      {1, Scalar(1)}, {-1, Scalar::i()}, {2, Scalar::sqrt2()}, {-2, Scalar::i() * Scalar::sqrt2()}};
  for (const auto& [u, root] : units) {
    mpq_class q = r / u;
    if (auto s = rational_sqrt(q)) return root * Scalar(*s);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::pair<Scalar, Scalar>>> BinaryForm::zeros() const {
  std::vector<std::pair<Scalar, Scalar>> out;
  if (is_zero()) return std::nullopt;
  if (multiplicity_at_infinity() > 0) out.emplace_back(Scalar(0), Scalar(1));
  UPoly p = squarefree().affine();
  if (p.degree() == 1) {
    out.emplace_back(Scalar(1), -p.coeff(0) / p.coeff(1));
  } else if (p.degree() == 2) {
    Scalar a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Scalar disc = b * b - Scalar(4) * a * c;
    if (!disc.is_rational()) return std::nullopt;
    auto s = field_sqrt(disc.coeff(0));
    if (!s) return std::nullopt;
    Scalar two_a = Scalar(2) * a;
    out.emplace_back(Scalar(1), (-b + *s) / two_a);
    out.emplace_back(Scalar(1), (-b - *s) / two_a);
  } else if (p.degree() > 2) {
    return std::nullopt;
  }
  return out;
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto mono = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    return std::string(var) + (e > 1 ? "^" + std::to_string(e) : "");
  };
  for (int i = p_.degree(); i >= 0; --i) {
    const Scalar& c = p_.coeff(i);
    if (c.is_zero()) continue;
    std::string m = mono("a", degree_ - i);
    std::string mb = mono("b", i);
    if (!m.empty() && !mb.empty()) m += "*" + mb;
    else if (m.empty()) m = mb;
    std::string cs = c.to_string();
    bool neg = c.is_rational() && c.coeff(0) < 0;
    if (neg) cs = (-c).to_string();
    if (!c.is_rational()) cs = "(" + cs + ")";
    std::string term = m.empty() ? cs : (cs == "1" ? m : cs + "*" + m);
    if (s.empty()) s = neg ? "-" + term : term;
    else s += (neg ? " - " : " + ") + term;
  }
  return s;
}

}  // namespace scup
