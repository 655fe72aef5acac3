// Flags written out by hand for the small fibers, and brute-force oracles.
// Shared by the unit tests and the acceptance binary.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "scup/components.hpp"

namespace fx {

using namespace scup;

// A one-parameter component: F_free = F_{free-1} + <lam w1 + mu w2>.
struct OneParam {
  std::string label;
  std::string diagram;
  int free = 0;
  Vec w1, w2;
  // Lower half F_1..F_m (type D) or F_1..F_{n-1} (type A) at [lam:mu].
  std::function<std::vector<Subspace>(const Scalar&, const Scalar&)> lower;
};

struct Basis {
  TwoRowPartition lam;
  Vec e(int i) const { return e_vec(lam, i); }
  Vec f(int j) const { return f_vec(lam, j); }
  Vec lin(const Scalar& a, const Vec& u, const Scalar& b, const Vec& v) const {
    return add(scale(a, u), scale(b, v));
  }
  Vec plus(const Vec& u, const Vec& v) const { return add(u, v); }
  Vec minus(const Vec& u, const Vec& v) const { return add(u, scale(Scalar(-1), v)); }
  Subspace span(std::vector<Vec> rows) const { return Subspace::span(lam.n, std::move(rows)); }
};

inline Flag complete_fixture(const CupDiagram& d, std::vector<Subspace> lower) {
  TwoRowPartition lam = d.partition();
  if (d.kind == Kind::D) return complete_isotropic(std::move(lower), build_form(lam));
  Flag f;
  f.n = lam.n;
  f.F.push_back(Subspace::zero(lam.n));
  for (auto& s : lower) f.F.push_back(std::move(s));
  f.F.push_back(Subspace::full(lam.n));
  return f;
}

// The three components of the type A fiber for (3,1).
inline std::vector<OneParam> type_A_31() {
  Basis b{{4, 1}};
  std::vector<OneParam> out;
  out.push_back({"a", "A4: c1-2 r3 r4", 1, b.e(1), b.f(1), [b](const Scalar& l, const Scalar& m) {
                   return std::vector<Subspace>{b.span({b.lin(l, b.e(1), m, b.f(1))}),
                                                b.span({b.e(1), b.f(1)}),
                                                b.span({b.e(1), b.e(2), b.f(1)})};
                 }});
  out.push_back({"b", "A4: r1 c2-3 r4", 2, b.e(2), b.f(1), [b](const Scalar& l, const Scalar& m) {
                   return std::vector<Subspace>{b.span({b.e(1)}),
                                                b.span({b.e(1), b.lin(l, b.e(2), m, b.f(1))}),
                                                b.span({b.e(1), b.e(2), b.f(1)})};
                 }});
  out.push_back({"c", "A4: r1 r2 c3-4", 3, b.e(3), b.f(1), [b](const Scalar& l, const Scalar& m) {
                   return std::vector<Subspace>{b.span({b.e(1)}), b.span({b.e(1), b.e(2)}),
                                                b.span({b.e(1), b.e(2), b.lin(l, b.e(3), m, b.f(1))})};
                 }});
  return out;
}

// The eight components of the type D fiber for (5,3), lower halves only.
// h is d composed with f -> -f; its F_3 and F_4 signs are forced by the
// marked-cup relations.
inline std::vector<OneParam> type_D_53() {
  Basis b{{8, 3}};
  std::vector<OneParam> out;
  for (int s : {-1, 1}) {
    // s = -1: rightmost ray unmarked (a, b, c); s = +1: marked (e, f, g).
    Vec top = b.lin(1, b.f(2), s, b.e(3));  // f2 -+ e3
    Vec mid = b.lin(1, b.f(1), s, b.e(2));  // f1 -+ e2
    bool marked = s == 1;
    std::string lab = marked ? "efg" : "abc";
    out.push_back({lab.substr(0, 1), marked ? "D4: c1-2 r3 x4" : "D4: c1-2 r3 r4", 1, b.e(1), b.f(1),
                   [b, top](const Scalar& l, const Scalar& m) {
                     return std::vector<Subspace>{b.span({b.lin(l, b.e(1), m, b.f(1))}),
                                                  b.span({b.e(1), b.f(1)}),
                                                  b.span({b.e(1), b.e(2), b.f(1)}),
                                                  b.span({b.e(1), b.e(2), b.f(1), top})};
                   }});
    out.push_back({lab.substr(1, 1), marked ? "D4: r1 c2-3 x4" : "D4: r1 c2-3 r4", 2, b.e(2), b.f(1),
                   [b, top](const Scalar& l, const Scalar& m) {
                     return std::vector<Subspace>{b.span({b.e(1)}),
                                                  b.span({b.e(1), b.lin(l, b.e(2), m, b.f(1))}),
                                                  b.span({b.e(1), b.e(2), b.f(1)}),
                                                  b.span({b.e(1), b.e(2), b.f(1), top})};
                   }});
    out.push_back({lab.substr(2, 1), marked ? "D4: r1 x2 c3-4" : "D4: r1 r2 c3-4", 3, b.e(2), top,
                   [b, top, mid](const Scalar& l, const Scalar& m) {
                     return std::vector<Subspace>{b.span({b.e(1)}), b.span({b.e(1), mid}),
                                                  b.span({b.e(1), mid, b.lin(l, b.e(2), m, top)}),
                                                  b.span({b.e(1), b.e(2), b.f(1), top})};
                   }});
  }
  // d: F_2 = <e1, f1+e2>, F_3 = F_2 + <l(f1-e2) + m(f2+e3)>, F_4 = F_3 + <l(f2-e3) + m(f3+e4)>.
  {
    Vec f1me2 = b.minus(b.f(1), b.e(2)), f2pe3 = b.plus(b.f(2), b.e(3));
    Vec f2me3 = b.minus(b.f(2), b.e(3)), f3pe4 = b.plus(b.f(3), b.e(4));
    Vec f1pe2 = b.plus(b.f(1), b.e(2));
    out.push_back({"d", "D4: r1 x2 m3-4", 3, f1me2, f2pe3,
                   [=](const Scalar& l, const Scalar& m) {
                     Vec v3 = b.lin(l, f1me2, m, f2pe3), v4 = b.lin(l, f2me3, m, f3pe4);
                     return std::vector<Subspace>{b.span({b.e(1)}), b.span({b.e(1), f1pe2}),
                                                  b.span({b.e(1), f1pe2, v3}),
                                                  b.span({b.e(1), f1pe2, v3, v4})};
                   }});
  }
  // h: F_2 = <e1, f1-e2>, F_3 = F_2 + <l(f1+e2) + m(f2-e3)>, F_4 = F_3 + <l(f2+e3) + m(f3-e4)>.
  {
    Vec f1pe2 = b.plus(b.f(1), b.e(2)), f2me3 = b.minus(b.f(2), b.e(3));
    Vec f2pe3 = b.plus(b.f(2), b.e(3)), f3me4 = b.minus(b.f(3), b.e(4));
    Vec f1me2 = b.minus(b.f(1), b.e(2));
    out.push_back({"h", "D4: r1 r2 m3-4", 3, f1pe2, f2me3,
                   [=](const Scalar& l, const Scalar& m) {
                     Vec v3 = b.lin(l, f1pe2, m, f2me3), v4 = b.lin(l, f2pe3, m, f3me4);
                     return std::vector<Subspace>{b.span({b.e(1)}), b.span({b.e(1), f1me2}),
                                                  b.span({b.e(1), f1me2, v3}),
                                                  b.span({b.e(1), f1me2, v3, v4})};
                   }});
  }
  std::sort(out.begin(), out.end(), [](const OneParam& x, const OneParam& y) { return x.label < y.label; });
  return out;
}

// Coordinates [lam:mu] of the line F_free ∩ <w1, w2>, or nullopt when that
// intersection is not a line.
inline std::optional<ProjParam> recover(const OneParam& fx, const Flag& f) {
  Subspace plane = Subspace::span(f.n, {fx.w1, fx.w2});
  Subspace line = intersect(f[fx.free], plane);
  if (line.dim() != 1) return std::nullopt;
  auto c = solve_in_span({fx.w1, fx.w2}, line.rows()[0]);
  if (!c) return std::nullopt;
  return ProjParam::make((*c)[0], (*c)[1]);
}

inline std::vector<ProjParam> fixture_grid() {
  std::vector<ProjParam> g;
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}, {-5, 7}, {3, -2}})
    g.push_back(ProjParam::make(a, b));
  return g;
}

// Problems with one fixture: builder output differs from the written family,
// written family leaves K_d, or the parametrization is not injective.
inline std::vector<std::string> check_one_param(const OneParam& fxt) {
  std::vector<std::string> bad;
  CupDiagram d = parse_diagram(fxt.diagram);
  std::set<std::string> seen;
  for (const auto& p : fixture_grid()) {
    Flag built = build_flag(d, {p});
    auto lm = recover(fxt, built);
    if (!lm) {
      bad.push_back(fxt.label + ": F_free does not meet the plane in a line at " + p.to_string());
      continue;
    }
    seen.insert(lm->to_string());
    if (complete_fixture(d, fxt.lower(lm->a, lm->b)) != built)
      bad.push_back(fxt.label + ": built flag differs from the written family at " + p.to_string());
    Flag written = complete_fixture(d, fxt.lower(p.a, p.b));
    if (!check_membership(written, d).ok())
      bad.push_back(fxt.label + ": written family leaves its component at " + p.to_string());
  }
  if (seen.size() != fixture_grid().size()) bad.push_back(fxt.label + ": parametrization not injective");
  return bad;
}

// Rank (5,5): ray, marked cup, cup. F_4 is free between F_3 and F_5.
inline std::vector<std::string> check_rank55() {
  std::vector<std::string> bad;
  Basis b{{10, 5}};
  CupDiagram d = parse_diagram("D5: r1 m2-3 c4-5");
  auto lower = [&](const Scalar& l, const Scalar& m, const Vec& extra) {
    Vec v2 = b.lin(l, b.f(1), m, b.e(2)), v3 = b.lin(l, b.f(2), m, b.e(3)), v4 = b.lin(l, b.f(3), m, b.e(4));
    Subspace f3 = b.span({b.e(1), v2, v3});
    std::vector<Vec> r4 = f3.rows();
    r4.push_back(extra);
    return std::vector<Subspace>{b.span({b.e(1)}), b.span({b.e(1), v2}), f3, b.span(r4),
                                 b.span({b.e(1), b.f(1), b.e(2), v3, v4})};
  };
  OneParam probe{"rank55", "D5: r1 m2-3 c4-5", 2, b.f(1), b.e(2), nullptr};
  std::set<std::string> seen;
  auto grid = fixture_grid();
  for (size_t g = 0; g < grid.size(); ++g) {
    const ProjParam& p = grid[g];
    const ProjParam& q = grid[(g + 3) % grid.size()];
    Flag built = build_flag_D(d, {p, q});
    auto lm = recover(probe, built);
    if (!lm) {
      bad.push_back("rank55: F_2 does not meet <f1, e2> in a line");
      continue;
    }
    seen.insert(lm->to_string());
    auto want = lower(lm->a, lm->b, b.e(1));
    for (int i : {1, 2, 3, 5})
      if (built[i] != want[i - 1]) bad.push_back("rank55: F_" + std::to_string(i) + " differs at " + p.to_string());
    if (!built[4].contains(built[3]) || !built[5].contains(built[4])) bad.push_back("rank55: F_4 out of range");
    // Every F_4 between F_3 and F_5 is allowed.
    Subspace f3 = want[2], f5 = want[4];
    std::vector<Vec> comp;
    Subspace acc = f3;
    for (const auto& r : f5.rows())
      if (!acc.contains(r)) {
        comp.push_back(r);
        acc = sum(acc, Subspace::span(10, {r}));
      }
    for (const auto& w : fixture_grid()) {
      Flag fw = complete_fixture(d, lower(lm->a, lm->b, b.lin(w.a, comp[0], w.b, comp[1])));
      if (!check_membership(fw, d).ok()) bad.push_back("rank55: written family leaves its component");
    }
  }
  if (seen.size() != grid.size()) bad.push_back("rank55: first parameter not injective");
  return bad;
}

// Brute force: all partial matchings with the right number of pairs, all
// marker subsets, filtered by validate and shape. Returns canonical texts.
inline std::set<std::string> brute_force(Kind kind, int n, int k) {
  const int verts = kind == Kind::A ? n : n / 2;
  const int ncups = kind == Kind::A ? k : k / 2;
  std::set<std::string> out;
  std::vector<int> partner(verts + 1, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v > verts) {
      if (left) return;
      CupDiagram base;
      base.kind = kind;
      base.n_vertices = verts;
      for (int u = 1; u <= verts; ++u) {
        if (partner[u] == 0) base.rays.push_back({u, false});
        else if (partner[u] > u) base.cups.push_back({u, partner[u], false});
      }
      int feats = static_cast<int>(base.cups.size() + base.rays.size());
      int masks = kind == Kind::A ? 1 : 1 << feats;
      for (int mask = 0; mask < masks; ++mask) {
        CupDiagram d = base;
        int bit = 0;
        for (auto& c : d.cups) c.marked = (mask >> bit++) & 1;
        for (auto& r : d.rays) r.marked = (mask >> bit++) & 1;
        if (validate(d)) continue;
        if (d.partition() != TwoRowPartition{n, k}) continue;
        out.insert(format_diagram(d));
      }
      return;
    }
    if (partner[v]) {
      rec(v + 1, left);
      return;
    }
    rec(v + 1, left);  // v on a ray
    if (left == 0) return;
    for (int w = v + 1; w <= verts; ++w) {
      if (partner[w]) continue;
      partner[v] = w;
      partner[w] = v;
      rec(v + 1, left - 1);
      partner[v] = partner[w] = 0;
    }
  };
  rec(1, ncups);
  return out;
}

inline std::set<std::string> texts(const std::vector<CupDiagram>& ds) {
  std::set<std::string> s;
  for (const auto& d : ds) s.insert(format_diagram(d));
  return s;
}

}  // namespace fx
