#include "scup/springer.hpp"

#include <algorithm>
#include <functional>

namespace scup {

bool Flag::is_complete_flag() const {
  if (static_cast<int>(F.size()) != n + 1) return false;
  for (int i = 0; i <= n; ++i)
    if (F[i].ambient() != n || F[i].dim() != i) return false;
  for (int i = 1; i <= n; ++i)
    if (!F[i].contains(F[i - 1])) return false;
  return true;
}

bool Flag::is_rational() const {
  for (const auto& s : F)
    if (!s.is_rational()) return false;
  return true;
}

Flag complete_isotropic(std::vector<Subspace> lower, const BilinearForm& beta) {
  const int n = beta.dim();
  if (lower.empty() || lower.front().dim() != 0) lower.insert(lower.begin(), Subspace::zero(n));
  if (static_cast<int>(lower.size()) != n / 2 + 1)
    throw DimensionMismatch("complete_isotropic expects F_0..F_m");
  Flag f;
  f.n = n;
  f.F = std::move(lower);
  for (int i = n / 2 + 1; i <= n; ++i) f.F.push_back(perp(f.F[n - i], beta));
  return f;
}

std::vector<std::vector<int>> admissible_partitions(int n, int eps) {
  if (n < 1) throw DomainError("invalid_argument", "n must be positive");
  if (eps != 1 && eps != -1) throw DomainError("invalid_argument", "eps must be +1 or -1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      bool ok = true;
      for (size_t a = 0; a < cur.size() && ok;) {
        size_t b = a;
        while (b < cur.size() && cur[b] == cur[a]) ++b;
        int j = cur[a];
        int sign = j % 2 == 0 ? 1 : -1;
        if (sign == eps && (b - a) % 2 != 0) ok = false;
        a = b;
      }
      if (ok) out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool is_springer_flag(const Flag& f, const Matrix& x) {
  for (int i = 1; i <= f.n; ++i)
    if (!f.F[i - 1].contains(f.F[i].image(x))) return false;
  return true;
}

bool is_isotropic_flag(const Flag& f, const BilinearForm& beta) {
  for (int i = 0; i <= f.n / 2; ++i)
    if (f.F[f.n - i] != perp(f.F[i], beta)) return false;
  return true;
}

std::string to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Member: return "member";
    case MembershipStatus::NotMember: return "not_member";
    case MembershipStatus::NotIsotropic: return "not_isotropic";
    case MembershipStatus::NotSpringer: return "not_springer";
  }
  return "?";
}

Subspace ray_subspace_A(const CupDiagram& d, int i) {
  TwoRowPartition lam = d.partition();
  int c = cups_left_of(d, i);
  std::vector<Vec> rows;
  for (int r = 1; r <= i - c; ++r) rows.push_back(e_vec(lam, r));
  for (int r = 1; r <= c; ++r) rows.push_back(f_vec(lam, r));
  return Subspace::span(lam.n, rows);
}

Scalar ray_twist(const TwoRowPartition& lam) {
  return (lam.m() - lam.k) % 2 != 0 ? Scalar(1) : Scalar::i();
}

Subspace ray_subspace_D(const CupDiagram& d, int i, bool marked) {
  TwoRowPartition lam = d.partition();
  std::vector<Vec> rows;
  if (lam.equal_parts()) {
    int ne = marked ? (i - 1) / 2 : (i + 1) / 2;
    int nf = marked ? (i + 1) / 2 : (i - 1) / 2;
    for (int r = 1; r <= ne; ++r) rows.push_back(e_vec(lam, r));
    for (int r = 1; r <= nf; ++r) rows.push_back(f_vec(lam, r));
    return Subspace::span(lam.n, rows);
  }
  int c = cups_left_of(d, i);
  bool rightmost = d.rightmost_ray() == i;
  if (!marked && !rightmost) {
    for (int r = 1; r <= i - c; ++r) rows.push_back(e_vec(lam, r));
    for (int r = 1; r <= c; ++r) rows.push_back(f_vec(lam, r));
    return Subspace::span(lam.n, rows);
  }
  for (int r = 1; r <= i - c - 1; ++r) rows.push_back(e_vec(lam, r));
  for (int r = 1; r <= c; ++r) rows.push_back(f_vec(lam, r));
  Scalar s = ray_twist(lam);
  rows.push_back(add(f_vec(lam, c + 1), scale(marked ? s : -s, e_vec(lam, i - c))));
  return Subspace::span(lam.n, rows);
}

namespace {

void check_shape(const Flag& f, const CupDiagram& d) {
  if (auto v = validate(d)) throw DomainError("invalid_diagram", v->rule + ": " + v->detail);
  TwoRowPartition lam = d.partition();
  if (f.n != lam.n || !f.is_complete_flag())
    throw DomainError("shape_mismatch", "flag does not match partition " + lam.to_string());
}

int half_span(const Cup& c) {
  if ((c.r - c.l + 1) % 2 != 0) throw DomainError("shape_mismatch", "cup with odd span");
  return (c.r - c.l + 1) / 2;
}

}  // namespace

MembershipReport check_membership_A(const Flag& f, const CupDiagram& d) {
  if (d.kind != Kind::A) throw DomainError("wrong_kind", "expected a type A diagram");
  check_shape(f, d);
  TwoRowPartition lam = d.partition();
  Matrix x = build_nilpotent(lam);
  MembershipReport rep;
  if (!is_springer_flag(f, x)) {
    rep.status = MembershipStatus::NotSpringer;
    return rep;
  }
  for (const auto& c : d.cups)
    if (f[c.r] != preimage_power(f[c.l - 1], x, half_span(c)))
      rep.failures.push_back({c.l, "cup"});
  for (const auto& r : d.rays)
    if (f[r.v] != ray_subspace_A(d, r.v)) rep.failures.push_back({r.v, "ray"});
  if (!rep.failures.empty()) rep.status = MembershipStatus::NotMember;
  return rep;
}

MembershipReport check_membership_D(const Flag& f, const CupDiagram& d) {
  if (d.kind != Kind::D) throw DomainError("wrong_kind", "expected a type D diagram");
  check_shape(f, d);
  TwoRowPartition lam = d.partition();
  Matrix x = build_nilpotent(lam);
  BilinearForm beta = build_form(lam);
  MembershipReport rep;
  if (!is_isotropic_flag(f, beta)) {
    rep.status = MembershipStatus::NotIsotropic;
    return rep;
  }
  if (!is_springer_flag(f, x)) {
    rep.status = MembershipStatus::NotSpringer;
    return rep;
  }
  const int n = lam.n;
  for (const auto& c : d.cups) {
    int h = half_span(c);
    if (!c.marked) {
      if (f[c.r] != preimage_power(f[c.l - 1], x, h)) rep.failures.push_back({c.l, "cup"});
      continue;
    }
    if (sum(f[c.l - 1], image_power(f[c.r], x, h)) != f[c.l])
      rep.failures.push_back({c.l, "marked cup (span)"});
    if ((n - 2 * c.r) % 2 != 0) throw DomainError("shape_mismatch", "odd exponent");
    if (perp(f[c.r], beta) != preimage_power(f[c.r], x, (n - 2 * c.r) / 2))
      rep.failures.push_back({c.l, "marked cup (perp)"});
  }
  for (const auto& r : d.rays)
    if (f[r.v] != ray_subspace_D(d, r.v, r.marked))
      rep.failures.push_back({r.v, r.marked ? "marked ray" : "ray"});
  std::stable_sort(rep.failures.begin(), rep.failures.end(),
                   [](const RelationFailure& a, const RelationFailure& b) { return a.vertex < b.vertex; });
  if (!rep.failures.empty()) rep.status = MembershipStatus::NotMember;
  return rep;
}

MembershipReport check_membership(const Flag& f, const CupDiagram& d) {
  return d.kind == Kind::A ? check_membership_A(f, d) : check_membership_D(f, d);
}

}  // namespace scup
