#include "scup/incidence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace scup {

namespace {

// Generator whose value at [a:b] is A (deg 0) or a*A + b*B (deg 1).
struct SymRow {
  int deg = 0;
  Vec A, B;
};
using SymSpace = std::vector<SymRow>;
using Family = std::vector<SymSpace>;

SymSpace constant_space(const Subspace& s) {
  SymSpace out;
  for (const auto& r : s.rows()) out.push_back({0, r, {}});
  return out;
}

SymRow map_row(const Matrix& t, const SymRow& r) {
  return {r.deg, t.apply(r.A), r.deg ? t.apply(r.B) : Vec{}};
}

SymSpace map_space(const Matrix& t, const SymSpace& s) {
  SymSpace out;
  for (const auto& r : s) out.push_back(map_row(t, r));
  return out;
}

bool is_constant(const SymSpace& s) {
  return std::all_of(s.begin(), s.end(), [](const SymRow& r) { return r.deg == 0; });
}

Vec eval_row(const SymRow& r, const Scalar& u) {
  return r.deg ? add(r.A, scale(u, r.B)) : r.A;
}

int total_degree(const SymSpace& s) {
  int d = 0;
  for (const auto& r : s) d += r.deg;
  return d;
}

// Family F_0..F_top of a diagram with at most one cup, parametrized by the
// cup's [a:b] exactly as the builders do.
Family family_D(const CupDiagram& d) {
  TwoRowPartition lam = d.partition();
  const int m = lam.m();
  if (d.cups.empty()) {
    Flag f = build_flag_D(d, {});
    Family g;
    for (int i = 0; i <= m; ++i) g.push_back(constant_space(f[i]));
    return g;
  }
  if (m == 2) {
    Vec e1 = e_vec(lam, 1), f1 = f_vec(lam, 1), e2 = e_vec(lam, 2), f2 = f_vec(lam, 2);
    SymSpace g2 = d.cups.front().marked ? SymSpace{{1, e1, f1}, {1, e2, f2}}
                                        : SymSpace{{0, e1, {}}, {0, f1, {}}};
    return {{}, {{1, e1, f1}}, g2};
  }
  Reduction r = reduction_for(d);  // Case II needs two cups, so never reached
  Family g{{}};
  if (r.desc.tag == CaseTag::I) {
    Family gb = family_D(r.b);
    Matrix emb = embedding_P(make_partition(2 * r.desc.t, 2 * r.desc.t), lam);
    for (int i = 1; i <= 2 * r.desc.t; ++i) g.push_back(map_space(emb, gb[i]));
  } else {
    g.push_back(constant_space(r.Q.W));
  }
  Family gc = family_D(r.c);
  for (int i = 1; i <= r.c.partition().m(); ++i) {
    SymSpace s = constant_space(r.Q.W);
    for (const auto& row : map_space(r.Q.lift, gc[i])) s.push_back(row);
    g.push_back(std::move(s));
  }
  return g;
}

Family family_A(const CupDiagram& d) {
  TwoRowPartition lam = d.partition();
  const Cup& cup = d.cups.front();
  Flag f = build_flag_A(d, {ProjParam::make(1, 0)});
  Family g;
  for (int i = 0; i <= lam.n; ++i) g.push_back(constant_space(f[i]));
  const Subspace& prev = f[cup.l - 1];
  Subspace up = prev.preimage(build_nilpotent(lam));
  std::vector<Vec> fresh;
  for (int r = 0; r < up.dim(); ++r)
    if (std::find(prev.pivots().begin(), prev.pivots().end(), up.pivots()[r]) == prev.pivots().end())
      fresh.push_back(up.rows()[r]);
  g[cup.l] = constant_space(prev);
  g[cup.l].push_back({1, fresh.at(0), fresh.at(1)});
  return g;
}

// Running gcd of binary forms that all have to vanish.
struct Ideal {
  BinaryForm g;  // zero form = no condition yet
  void add(const BinaryForm& f) { g = BinaryForm::gcd(g, f); }
  bool unit() const { return g.is_unit(); }
};

BinaryForm form_from_values(int degree, const std::function<Scalar(const Scalar&)>& value) {
  std::vector<Scalar> nodes, values;
  for (int u = 0; u <= degree; ++u) {
    nodes.emplace_back(static_cast<long>(u));
    values.push_back(value(nodes.back()));
  }
  return BinaryForm(UPoly::interpolate(nodes, values), degree);
}

void for_each_subset(int n, int size, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  if (size > n) return;
  while (true) {
    if (!visit(idx)) return;
    int p = size - 1;
    while (p >= 0 && idx[p] == n - size + p) --p;
    if (p < 0) return;
    ++idx[p];
    for (int q = p + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
  }
}

Scalar minor_at(const std::vector<Vec>& rows, const std::vector<int>& cols) {
  Matrix a(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) a(r, c) = rows[r][cols[c]];
  return determinant(a);
}

// Forms whose common zeros are the points where span(rows) lies in A.
// A must have full rank at every point.
void containment(const SymSpace& rows, const SymSpace& A, int n, Ideal& ideal) {
  if (is_constant(A)) {
    std::vector<Vec> a;
    for (const auto& r : A) a.push_back(r.A);
    auto ann = Subspace::span(n, a).annihilator();
    auto dot = [](const Vec& x, const Vec& y) {
      Scalar s;
      for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
      return s;
    };
    for (const auto& r : rows)
      for (const auto& phi : ann) {
        ideal.add(r.deg ? BinaryForm(UPoly::linear(dot(phi, r.A), dot(phi, r.B)), 1)
                        : BinaryForm(UPoly::constant(dot(phi, r.A)), 0));
        if (ideal.unit()) return;
      }
    return;
  }
  const int rank = static_cast<int>(A.size());
  for (const auto& r : rows) {
    SymSpace stacked = A;
    stacked.push_back(r);
    const int deg = total_degree(stacked);
    std::vector<std::vector<Vec>> at(deg + 1);
    for (int u = 0; u <= deg; ++u)
      for (const auto& s : stacked) at[u].push_back(eval_row(s, Scalar(static_cast<long>(u))));
    bool stop = false;
    for_each_subset(n, rank + 1, [&](const std::vector<int>& cols) {
      ideal.add(form_from_values(deg, [&](const Scalar& u) {
        return minor_at(at[static_cast<size_t>(u.coeff(0).get_num().get_si())], cols);
      }));
      stop = ideal.unit();
      return !stop;
    });
    if (stop) return;
  }
}

// Every space of the family has its nominal dimension at every point.
void check_constant_rank(const Family& g, int n) {
  for (size_t i = 1; i < g.size(); ++i) {
    if (is_constant(g[i])) continue;
    Ideal minors;
    const int deg = total_degree(g[i]);
    std::vector<std::vector<Vec>> at(deg + 1);
    for (int u = 0; u <= deg; ++u)
      for (const auto& s : g[i]) at[u].push_back(eval_row(s, Scalar(static_cast<long>(u))));
    for_each_subset(n, static_cast<int>(g[i].size()), [&](const std::vector<int>& cols) {
      minors.add(form_from_values(deg, [&](const Scalar& u) {
        return minor_at(at[static_cast<size_t>(u.coeff(0).get_num().get_si())], cols);
      }));
      return !minors.unit();
    });
    if (!minors.unit())
      throw std::logic_error("family drops rank at F_" + std::to_string(i));
  }
}

Subspace image_of_power(const Matrix& x, int h, int n) { return image_power(Subspace::full(n), x, h); }

Matrix shift_section(const TwoRowPartition& lam, int h) {
  Matrix p(lam.n, lam.n);
  for (int i = 1; i + h <= lam.first(); ++i) p(e_index(lam, i + h), e_index(lam, i)) = Scalar(1);
  for (int j = 1; j + h <= lam.second(); ++j) p(f_index(lam, j + h), f_index(lam, j)) = Scalar(1);
  return p;
}

}  // namespace

std::string Locus::to_string() const {
  auto pts = [&](const BinaryForm& f) {
    std::string s = "{";
    if (auto z = f.zeros()) {
      for (size_t i = 0; i < z->size(); ++i)
        s += (i ? ", " : "") + std::string("[") + (*z)[i].first.to_string() + ":" +
             (*z)[i].second.to_string() + "]";
    } else {
      s += "zeros of " + f.to_string();
    }
    return s + "}";
  };
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::All: return form.is_unit() ? "all" : "all except " + pts(form);
    case Kind::Points: return pts(form);
  }
  return "?";
}

Locus incidence_exact_P1(const CupDiagram& d1, const CupDiagram& d2) {
  if (auto v = validate(d1)) throw DomainError("invalid_diagram", v->rule);
  if (auto v = validate(d2)) throw DomainError("invalid_diagram", v->rule);
  if (d1.cups.size() != 1)
    throw DomainError("unsupported", "exact incidence needs a single-cup first diagram");
  if (d1.kind != d2.kind || d1.partition() != d2.partition())
    throw DomainError("shape_mismatch", "diagrams have different shapes");
  const bool type_d = d1.kind == Kind::D;
  TwoRowPartition lam = d1.partition();
  const int n = lam.n;
  Family g = type_d ? family_D(d1) : family_A(d1);
  check_constant_rank(g, n);
  Matrix x = build_nilpotent(lam);

  Ideal closed;
  std::vector<Ideal> open;  // each must fail to vanish
  auto done = [&] { return closed.unit(); };
  for (const auto& c : d2.cups) {
    if (done()) break;
    const int h = (c.r - c.l + 1) / 2;
    Matrix xh = x.power(h);
    SymSpace pushed = map_space(xh, g[c.r]);
    if (!c.marked) {
      containment(pushed, g[c.l - 1], n, closed);
      if (!done()) containment(g[c.l - 1], constant_space(image_of_power(x, h, n)), n, closed);
      continue;
    }
    containment(pushed, g[c.l], n, closed);
    Ideal fails;
    containment(pushed, g[c.l - 1], n, fails);
    open.push_back(fails);
    const int hp = lam.m() - c.r;
    if (hp > 0 && !done()) {
      containment(g[c.r], constant_space(image_of_power(x, hp, n)), n, closed);
      BilinearForm beta = build_form(lam);
      Matrix sec = shift_section(lam, hp);
      for (const auto& v : g[c.r])
        for (const auto& w : g[c.r]) {
          if (done()) break;
          SymRow pv = map_row(sec, v);
          closed.add(form_from_values(v.deg + w.deg, [&](const Scalar& u) {
            return beta(eval_row(pv, u), eval_row(w, u));
          }));
        }
    }
  }
  for (const auto& r : d2.rays) {
    if (done()) break;
    Subspace s = type_d ? ray_subspace_D(d2, r.v, r.marked) : ray_subspace_A(d2, r.v);
    containment(g[r.v], constant_space(s), n, closed);
  }

  Locus out;
  if (closed.unit()) return out;
  if (closed.g.is_zero()) {
    BinaryForm excluded = BinaryForm::one();
    for (const auto& o : open) {
      if (o.g.is_zero()) return out;
      excluded = BinaryForm::lcm(excluded, o.g.squarefree());
    }
    out.kind = Locus::Kind::All;
    out.form = excluded;
    return out;
  }
  BinaryForm pts = closed.g.squarefree();
  for (const auto& o : open) {
    if (o.g.is_zero()) return out;
    pts = BinaryForm::strip(pts, o.g);
  }
  if (pts.is_unit()) return out;
  out.kind = Locus::Kind::Points;
  out.form = pts;
  return out;
}

std::vector<std::vector<int>> IncidenceGraph::connected_components() const {
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::vector<std::vector<int>> comps;
  std::vector<int> slot(nodes.size(), -1);
  for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
    int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].push_back(v);
  }
  return comps;
}

std::string IncidenceGraph::to_dot(const std::vector<std::string>& labels) const {
  std::string s = "graph incidence {\n";
  for (size_t v = 0; v < nodes.size(); ++v) {
    std::string label = v < labels.size() ? labels[v] : format_diagram(nodes[v]);
    s += "  n" + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  for (size_t e = 0; e < edges.size(); ++e)
    s += "  n" + std::to_string(edges[e].first) + " -- n" + std::to_string(edges[e].second) +
         " [label=\"" + loci[e].to_string() + "\"];\n";
  return s + "}\n";
}

IncidenceGraph incidence_graph(const std::vector<CupDiagram>& diagrams) {
  IncidenceGraph g;
  g.nodes = diagrams;
  for (size_t i = 0; i < diagrams.size(); ++i)
    for (size_t j = i + 1; j < diagrams.size(); ++j) {
      Locus l = incidence_exact_P1(diagrams[i], diagrams[j]);
      Locus back = incidence_exact_P1(diagrams[j], diagrams[i]);
      if (l.empty() != back.empty())
        throw std::logic_error("incidence is not symmetric for " + format_diagram(diagrams[i]) +
                               " and " + format_diagram(diagrams[j]));
      if (l.empty()) continue;
      g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      g.loci.push_back(l);
    }
  return g;
}

}  // namespace scup
