#include "scup/json_io.hpp"

#include <algorithm>

namespace scup {

json diagram_to_json(const CupDiagram& d) {
  json cups = json::array(), rays = json::array();
  for (const auto& c : d.cups) cups.push_back({{"l", c.l}, {"r", c.r}, {"marked", c.marked}});
  for (const auto& r : d.rays) rays.push_back({{"v", r.v}, {"marked", r.marked}});
  return {{"kind", d.kind == Kind::A ? "A" : "D"},
          {"n_vertices", d.n_vertices},
          {"cups", cups},
          {"rays", rays},
          {"text", format_diagram(d)}};
}

CupDiagram diagram_from_json(const json& j) {
  CupDiagram d;
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "A" && kind != "D") throw JsonFormatError("kind must be \"A\" or \"D\"");
    d.kind = kind == "A" ? Kind::A : Kind::D;
    d.n_vertices = j.at("n_vertices").get<int>();
    for (const auto& c : j.at("cups"))
      d.cups.push_back({c.at("l").get<int>(), c.at("r").get<int>(), c.value("marked", false)});
    for (const auto& r : j.at("rays")) d.rays.push_back({r.at("v").get<int>(), r.value("marked", false)});
  } catch (const json::exception& e) {
    throw JsonFormatError(std::string("diagram: ") + e.what());
  }
  d.normalize();
  if (auto v = validate(d)) throw DomainError("invalid_diagram", v->rule + ": " + v->detail);
  return d;
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
  } catch (const ScalarParseError& e) {
    throw JsonFormatError(e.what());
  }
  throw JsonFormatError("scalar must be a string or an integer");
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& r : s.rows()) {
    json row = json::array();
    for (const auto& c : r) row.push_back(scalar_to_json(c));
    rows.push_back(row);
  }
  return {{"ambient", s.ambient()}, {"rows", rows}};
}

Subspace subspace_from_json(const json& j) {
  try {
    int n = j.at("ambient").get<int>();
    if (n < 0) throw JsonFormatError("negative ambient dimension");
    std::vector<Vec> rows;
    for (const auto& r : j.at("rows")) {
      if (!r.is_array() || static_cast<int>(r.size()) != n)
        throw JsonFormatError("row length differs from ambient " + std::to_string(n));
      Vec v;
      for (const auto& c : r) v.push_back(scalar_from_json(c));
      rows.push_back(std::move(v));
    }
    return Subspace::span(n, std::move(rows));
  } catch (const json::exception& e) {
    throw JsonFormatError(std::string("subspace: ") + e.what());
  }
}

json flag_to_json(const Flag& f) {
  json subs = json::array();
  for (int i = 1; i < f.n; ++i) subs.push_back(subspace_to_json(f[i]));
  return {{"ambient", f.n}, {"subspaces", subs}};
}

Flag flag_from_json(const json& j) {
  Flag f;
  try {
    f.n = j.at("ambient").get<int>();
    const auto& subs = j.at("subspaces");
    if (f.n < 1 || static_cast<int>(subs.size()) != f.n - 1)
      throw JsonFormatError("a flag in dimension n lists n-1 subspaces");
    f.F.push_back(Subspace::zero(f.n));
    for (const auto& s : subs) {
      f.F.push_back(subspace_from_json(s));
      if (f.F.back().ambient() != f.n) throw JsonFormatError("subspace ambient differs from flag");
    }
    f.F.push_back(Subspace::full(f.n));
  } catch (const json::exception& e) {
    throw JsonFormatError(std::string("flag: ") + e.what());
  }
  if (!f.is_complete_flag()) throw DomainError("not_a_flag", "subspaces are not a complete flag");
  return f;
}

json membership_to_json(const MembershipReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"vertex", f.vertex}, {"rule", f.rule}});
  return {{"member", r.ok()}, {"status", to_string(r.status)}, {"failures", fails}};
}

json report_to_json(const ComponentReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"sample", f.sample}, {"what", f.what}, {"params", f.params}});
  return {{"diagram", format_diagram(r.diagram)},
          {"samples", r.samples},
          {"parameters", r.parameters},
          {"failures", fails},
          {"injectivity", r.injectivity}};
}

json locus_to_json(const Locus& l) {
  const char* kind = l.kind == Locus::Kind::Empty ? "empty" : l.kind == Locus::Kind::All ? "all" : "points";
  json j = {{"kind", kind}, {"text", l.to_string()}};
  if (l.kind != Locus::Kind::Empty) {
    j["form"] = l.form.to_string();
    if (auto z = l.form.zeros()) {
      json pts = json::array();
      for (const auto& [a, b] : *z) pts.push_back(ProjParam::make(a, b).to_string());
      j[l.kind == Locus::Kind::All ? "excluded" : "points"] = pts;
    }
  }
  return j;
}

json graph_to_json(const IncidenceGraph& g) {
  json nodes = json::array(), edges = json::array(), adj = json::array(), comps = json::array();
  std::vector<std::vector<int>> neighbours(g.nodes.size());
  for (const auto& d : g.nodes) nodes.push_back(format_diagram(d));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    neighbours[a].push_back(b);
    neighbours[b].push_back(a);
    edges.push_back({{"a", a}, {"b", b}, {"locus", locus_to_json(g.loci[e])}});
  }
  for (auto& nb : neighbours) {
    std::sort(nb.begin(), nb.end());
    adj.push_back(nb);
  }
  for (const auto& c : g.connected_components()) comps.push_back(c);
  return {{"nodes", nodes}, {"edges", edges}, {"adjacency", adj}, {"components", comps}};
}

}  // namespace scup
