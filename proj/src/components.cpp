#include "scup/components.hpp"

#include <algorithm>
#include <sstream>

namespace scup {

ProjParam ProjParam::make(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("invalid_param", "[0:0] is not a point of P^1");
  if (!a.is_zero()) return ProjParam{Scalar(1), b / a};
  return ProjParam{Scalar(0), Scalar(1)};
}

ProjParam ProjParam::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos)
    throw DomainError("invalid_param", "expected a:b, got '" + std::string(text) + "'");
  try {
    return make(Scalar::parse(text.substr(0, colon)), Scalar::parse(text.substr(colon + 1)));
  } catch (const ScalarParseError& e) {
    throw DomainError("invalid_param", e.what());
  }
}

std::string ProjParam::to_string() const { return a.to_string() + ":" + b.to_string(); }

ParamAssignment parse_params(std::string_view text) {
  ParamAssignment out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    size_t b = piece.find_first_not_of(" \t"), e = piece.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw DomainError("invalid_param", "empty parameter");
    out.push_back(ProjParam::parse(piece.substr(b, e - b + 1)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_params(const ParamAssignment& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
  return s;
}

namespace {

void require_valid(const CupDiagram& d, Kind kind) {
  if (auto v = validate(d)) throw DomainError("invalid_diagram", v->rule + ": " + v->detail);
  if (d.kind != kind) throw DomainError("wrong_kind", "diagram has the wrong kind");
}

void require_count(const CupDiagram& d, const ParamAssignment& p) {
  if (p.size() != d.cups.size())
    throw DomainError("param_count", "expected " + std::to_string(d.cups.size()) +
                                         " parameters, got " + std::to_string(p.size()));
}

Vec combo(const Scalar& a, const Vec& u, const Scalar& b, const Vec& v) {
  return add(scale(a, u), scale(b, v));
}

Flag build_base_D(const CupDiagram& d, const ParamAssignment& p) {
  TwoRowPartition lam = d.partition();
  const int n = lam.n;
  BilinearForm beta = build_form(lam);
  auto e = [&](int i) { return e_vec(lam, i); };
  auto f = [&](int j) { return f_vec(lam, j); };
  if (lam == TwoRowPartition{2, 1}) {
    bool marked = d.rays.front().marked;
    return complete_isotropic({Subspace::span(n, {marked ? f(1) : e(1)})}, beta);
  }
  if (lam == TwoRowPartition{4, 1}) {
    bool marked = d.ray_at(2)->marked;
    Scalar s = ray_twist(lam);
    Vec v = add(f(1), scale(marked ? s : -s, e(2)));
    return complete_isotropic({Subspace::span(n, {e(1)}), Subspace::span(n, {e(1), v})}, beta);
  }
  if (lam == TwoRowPartition{4, 2}) {
    const ProjParam& q = p.front();
    Vec v = combo(q.a, e(1), q.b, f(1));
    Subspace f2 = d.cups.front().marked ? Subspace::span(n, {v, combo(q.a, e(2), q.b, f(2))})
                                        : Subspace::span(n, {e(1), f(1)});
    return complete_isotropic({Subspace::span(n, {v}), f2}, beta);
  }
  throw DomainError("base_case", "no base case for " + lam.to_string());
}

std::vector<Subspace> lift_all(const QuadIso& q, const Flag& fc, int count) {
  std::vector<Subspace> out;
  for (int i = 1; i <= count; ++i) out.push_back(q.lift_subspace(fc[i]));
  return out;
}

int cups_within(const CupDiagram& d, int last_vertex) {
  return static_cast<int>(std::count_if(d.cups.begin(), d.cups.end(),
                                        [&](const Cup& c) { return c.r <= last_vertex; }));
}

}  // namespace

Reduction reduction_for(const CupDiagram& d, std::optional<ProjParam> line, Chart prefer) {
  TwoRowPartition lam = d.partition();
  Reduction r;
  r.desc = classify_vertex1(d);
  QData data;
  QCase kind = QCase::I;
  switch (r.desc.tag) {
    case CaseTag::I: {
      auto [b, c] = crop_case_I(d);
      r.b = std::move(b);
      r.c = std::move(c);
      r.ell = 2 * r.desc.t;
      data.t = r.desc.t;
      break;
    }
    case CaseTag::II: {
      if (!line) throw DomainError("missing_line", "Case II needs the line F_1");
      r.c = reduce_case_II(d);
      Chart chart = prefer;
      if (chart == Chart::U1 && line->a.is_zero()) chart = Chart::U2;
      if (chart == Chart::U2 && line->b.is_zero()) chart = Chart::U1;
      r.chart = chart;
      kind = chart == Chart::U1 ? QCase::II_1 : QCase::II_2;
      data.c = line->a;
      data.d = line->b;
      data.swap_nu = d.cup_at(1)->marked != (chart == Chart::U2);
      break;
    }
    case CaseTag::III_1: kind = QCase::III_1; break;
    case CaseTag::III_2: kind = QCase::III_2; break;
    case CaseTag::III_3:
      kind = QCase::III_3;
      data.swap_nu = true;
      break;
    case CaseTag::III_4:
      kind = QCase::III_4;
      data.omega_sign = (lam.m() - lam.k) % 2 != 0 ? 1 : -1;
      break;
  }
  if (r.desc.tag != CaseTag::I && r.desc.tag != CaseTag::II) r.c = reduce_case_III(d);
  r.Q = build_Q(kind, lam, data);
  if (r.Q.nu != r.c.partition())
    throw std::logic_error("reduction target " + r.Q.nu.to_string() + " does not match " +
                           r.c.partition().to_string());
  return r;
}

Flag inverse_case_I(const CupDiagram& d, const Flag& fb, const Flag& fc) {
  Reduction r = reduction_for(d);
  TwoRowPartition lam = d.partition();
  const int t = r.desc.t;
  Matrix emb = embedding_P(make_partition(2 * t, 2 * t), lam);
  std::vector<Subspace> lower;
  for (int i = 1; i <= 2 * t; ++i) lower.push_back(fb[i].image(emb));
  for (auto& s : lift_all(r.Q, fc, lam.m() - 2 * t)) lower.push_back(std::move(s));
  return complete_isotropic(std::move(lower), build_form(lam));
}

Flag inverse_case_II(const CupDiagram& d, const ProjParam& line, const Flag& fc, Chart prefer) {
  Reduction r = reduction_for(d, line, prefer);
  TwoRowPartition lam = d.partition();
  std::vector<Subspace> lower{r.Q.W};
  for (auto& s : lift_all(r.Q, fc, lam.m() - 1)) lower.push_back(std::move(s));
  return complete_isotropic(std::move(lower), build_form(lam));
}

Flag inverse_case_III(const CupDiagram& d, const Flag& fc) {
  Reduction r = reduction_for(d);
  TwoRowPartition lam = d.partition();
  std::vector<Subspace> lower{r.Q.W};
  for (auto& s : lift_all(r.Q, fc, lam.m() - 1)) lower.push_back(std::move(s));
  return complete_isotropic(std::move(lower), build_form(lam));
}

Flag build_flag_D(const CupDiagram& d, const ParamAssignment& p, const BuildOptions& opt) {
  require_valid(d, Kind::D);
  require_count(d, p);
  if (d.n_vertices <= 2) return build_base_D(d, p);
  Case1Descriptor desc = classify_vertex1(d);
  switch (desc.tag) {
    case CaseTag::I: {
      auto [b, c] = crop_case_I(d);
      auto nb = static_cast<size_t>(cups_within(d, 2 * desc.t));
      ParamAssignment pb(p.begin(), p.begin() + nb), pc(p.begin() + nb, p.end());
      return inverse_case_I(d, build_flag_D(b, pb, opt), build_flag_D(c, pc, opt));
    }
    case CaseTag::II: {
      ParamAssignment rest(p.begin() + 1, p.end());
      return inverse_case_II(d, p.front(), build_flag_D(reduce_case_II(d), rest, opt), opt.prefer);
    }
    default:
      return inverse_case_III(d, build_flag_D(reduce_case_III(d), p, opt));
  }
}

Flag build_flag_A(const CupDiagram& d, const ParamAssignment& p) {
  require_valid(d, Kind::A);
  require_count(d, p);
  TwoRowPartition lam = d.partition();
  const int n = lam.n;
  Matrix x = build_nilpotent(lam);
  Flag f;
  f.n = n;
  f.F.push_back(Subspace::zero(n));
  size_t next_param = 0;
  for (int v = 1; v <= n; ++v) {
    const Subspace& prev = f.F.back();
    Subspace cur;
    if (d.ray_at(v)) {
      cur = ray_subspace_A(d, v);
      if (!cur.contains(prev))
        throw DegenerateParameter("ray at " + std::to_string(v) + " does not contain F_" +
                                  std::to_string(v - 1));
    } else if (const Cup* c = d.cup_at(v); c->l == v) {
      Subspace up = prev.preimage(x);
      std::vector<Vec> fresh;
      const auto& old = prev.pivots();
      for (int r = 0; r < up.dim(); ++r)
        if (std::find(old.begin(), old.end(), up.pivots()[r]) == old.end())
          fresh.push_back(up.rows()[r]);
      if (fresh.size() != 2)
        throw DegenerateParameter("fiber at vertex " + std::to_string(v) + " is not a P^1");
      const ProjParam& q = p.at(next_param++);
      std::vector<Vec> rows = prev.rows();
      rows.push_back(combo(q.a, fresh[0], q.b, fresh[1]));
      cur = Subspace::span(n, std::move(rows));
    } else {
      cur = preimage_power(f.F[c->l - 1], x, (c->r - c->l + 1) / 2);
      if (cur.dim() != v || !cur.contains(prev))
        throw DegenerateParameter("cup (" + std::to_string(c->l) + "," + std::to_string(c->r) +
                                  ") breaks the flag at this parameter");
    }
    f.F.push_back(std::move(cur));
  }
  return f;
}

Flag build_flag(const CupDiagram& d, const ParamAssignment& p) {
  return d.kind == Kind::A ? build_flag_A(d, p) : build_flag_D(d, p);
}

Flag omega(const Flag& f, const Reduction& r) {
  const QuadIso& q = r.Q;
  if (f.n != q.lam.n) throw DimensionMismatch("omega: flag size");
  if (!f[r.ell].contains(q.W)) throw DomainError("not_in_domain", "W is not contained in F_ell");
  std::vector<Subspace> lower;
  for (int i = 1; i <= q.nu.m(); ++i) lower.push_back(q.apply_subspace(f[r.ell + i]));
  return complete_isotropic(std::move(lower), build_form(q.nu));
}

Flag pi_ab(const Flag& f, const TwoRowPartition& lam, int t) {
  if (f.n != lam.n || 2 * t > lam.k) throw DimensionMismatch("pi_ab: flag does not fit");
  TwoRowPartition mu = make_partition(2 * t, 2 * t);
  Matrix proj = projection_P(lam, mu);
  std::vector<Subspace> lower;
  for (int i = 1; i <= 2 * t; ++i) {
    lower.push_back(f[i].image(proj));
    if (lower.back().dim() != i) throw DomainError("not_in_domain", "P drops dimension of F_" + std::to_string(i));
  }
  return complete_isotropic(std::move(lower), build_form(mu));
}

ProjParam line_of(const Flag& f, const TwoRowPartition& lam) {
  if (f.n != lam.n || f[1].dim() != 1) throw DimensionMismatch("line_of: flag does not fit");
  const Vec& v = f[1].rows()[0];
  Subspace plane = Subspace::span(lam.n, {e_vec(lam, 1), f_vec(lam, 1)});
  if (!plane.contains(v)) throw DomainError("not_in_domain", "F_1 is not in <e1, f1>");
  return ProjParam::make(v[e_index(lam, 1)], v[f_index(lam, 1)]);
}

Flag phi_j(const Flag& f, const CupDiagram& d, Chart j) {
  TwoRowPartition lam = d.partition();
  ProjParam line = line_of(f, lam);
  if ((j == Chart::U1 ? line.a : line.b).is_zero())
    throw DomainError("chart_unavailable", "F_1 = " + line.to_string() + " is outside the chart");
  return omega(f, reduction_for(d, line, j));
}

}  // namespace scup
