#include "scup/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace scup {

bool TwoRowPartition::type_d_admissible() const {
  if (!valid() || n % 2 != 0) return false;
  return equal_parts() || (k % 2 == 1 && (n - k) % 2 == 1);
}

std::string TwoRowPartition::to_string() const {
  return "(" + std::to_string(n - k) + "," + std::to_string(k) + ")";
}

TwoRowPartition make_partition(int first, int second) {
  return TwoRowPartition{first + second, second};
}

void CupDiagram::normalize() {
  std::sort(cups.begin(), cups.end(),
            [](const Cup& a, const Cup& b) { return a.l < b.l; });
  std::sort(rays.begin(), rays.end(),
            [](const Ray& a, const Ray& b) { return a.v < b.v; });
}

TwoRowPartition CupDiagram::partition() const {
  int c = static_cast<int>(cups.size());
  if (kind == Kind::A) return TwoRowPartition{n_vertices, c};
  int k = 2 * c + (rays.empty() ? 0 : 1);
  return TwoRowPartition{2 * n_vertices, k};
}

int CupDiagram::marker_count() const {
  int m = 0;
  for (const auto& c : cups) m += c.marked;
  for (const auto& r : rays) m += r.marked;
  return m;
}

std::optional<int> CupDiagram::rightmost_ray() const {
  std::optional<int> best;
  for (const auto& r : rays)
    if (!best || r.v > *best) best = r.v;
  return best;
}

const Cup* CupDiagram::cup_at(int v) const {
  for (const auto& c : cups)
    if (c.l == v || c.r == v) return &c;
  return nullptr;
}

const Ray* CupDiagram::ray_at(int v) const {
  for (const auto& r : rays)
    if (r.v == v) return &r;
  return nullptr;
}

bool cup_markable(const CupDiagram& d, const Cup& c) {
  for (const auto& o : d.cups)
    if (o.l < c.l && c.r < o.r) return false;
  for (const auto& r : d.rays)
    if (r.v > c.r) return false;
  return true;
}

bool ray_markable(const CupDiagram& d, const Ray& r) {
  auto rm = d.rightmost_ray();
  return rm && *rm == r.v;
}

std::optional<Violation> validate(const CupDiagram& d) {
  auto bad = [](std::string rule, std::string detail) {
    return std::optional<Violation>(Violation{std::move(rule), std::move(detail)});
  };
  const int n = d.n_vertices;
  if (n < 1) return bad("vertex count", "diagram needs at least one vertex");
  std::vector<int> seen(n + 1, 0);
  auto touch = [&](int v) -> std::optional<Violation> {
    if (v < 1 || v > n)
      return bad("vertex out of range", "vertex " + std::to_string(v));
    if (seen[v]++)
      return bad("vertex covered twice", "vertex " + std::to_string(v));
    return std::nullopt;
  };
  for (const auto& c : d.cups) {
    if (c.l >= c.r)
      return bad("cup orientation", "cup " + std::to_string(c.l) + "-" +
                                        std::to_string(c.r));
    if (auto v = touch(c.l)) return v;
    if (auto v = touch(c.r)) return v;
  }
  for (const auto& r : d.rays)
    if (auto v = touch(r.v)) return v;
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) return bad("vertex uncovered", "vertex " + std::to_string(v));
  for (const auto& c : d.cups)
    if ((c.r - c.l) % 2 == 0)
      return bad("cup span parity", "cup " + std::to_string(c.l) + "-" +
                                        std::to_string(c.r) + " encloses an odd number of vertices");
  for (const auto& a : d.cups)
    for (const auto& b : d.cups)
      if (a.l < b.l && b.l < a.r && a.r < b.r)
        return bad("crossing cups", std::to_string(a.l) + "-" + std::to_string(a.r) +
                                        " crosses " + std::to_string(b.l) + "-" +
                                        std::to_string(b.r));
  for (const auto& c : d.cups)
    for (const auto& r : d.rays)
      if (c.l < r.v && r.v < c.r)
        return bad("ray inside cup", "ray " + std::to_string(r.v));
  if (d.kind == Kind::A) {
    if (d.marker_count() > 0) return bad("marker in type A", "type A has no markers");
    return std::nullopt;
  }
  for (const auto& c : d.cups) {
    if (!c.marked) continue;
    for (const auto& o : d.cups)
      if (o.l < c.l && c.r < o.r)
        return bad("marked cup nested", "cup " + std::to_string(c.l) + "-" +
                                            std::to_string(c.r));
    for (const auto& r : d.rays)
      if (r.v > c.r)
        return bad("marked cup left of ray", "cup " + std::to_string(c.l) + "-" +
                                                 std::to_string(c.r) + ", ray " +
                                                 std::to_string(r.v));
  }
  for (const auto& r : d.rays)
    if (r.marked && !ray_markable(d, r))
      return bad("non-rightmost marked ray", "ray " + std::to_string(r.v));
  return std::nullopt;
}

namespace {

// All unmarked non-crossing diagrams on n vertices with exactly `cups` cups
// and no ray below a cup.
std::vector<CupDiagram> unmarked_diagrams(Kind kind, int n, int cups) {
  std::vector<CupDiagram> out;
  CupDiagram cur;
  cur.kind = kind;
  cur.n_vertices = n;
  std::vector<int> open;
  std::function<void(int)> rec = [&](int v) {
    int closed = static_cast<int>(cur.cups.size());
    int opened = static_cast<int>(open.size());
    if (closed + opened > cups) return;
    if (opened > n - v + 1) return;
    if (v > n) {
      if (open.empty() && closed == cups) {
        CupDiagram d = cur;
        d.normalize();
        out.push_back(std::move(d));
      }
      return;
    }
    if (!open.empty()) {
      int l = open.back();
      open.pop_back();
      cur.cups.push_back(Cup{l, v, false});
      rec(v + 1);
      cur.cups.pop_back();
      open.push_back(l);
    }
    open.push_back(v);
    rec(v + 1);
    open.pop_back();
    if (open.empty()) {
      cur.rays.push_back(Ray{v, false});
      rec(v + 1);
      cur.rays.pop_back();
    }
  };
  rec(1);
  return out;
}

struct Feature {
  int left;
  int cup_index;  // -1 for the ray
  int ray_index;
};

std::vector<Feature> markable_features(const CupDiagram& d) {
  std::vector<Feature> f;
  for (int i = 0; i < static_cast<int>(d.cups.size()); ++i)
    if (cup_markable(d, d.cups[i])) f.push_back({d.cups[i].l, i, -1});
  for (int i = 0; i < static_cast<int>(d.rays.size()); ++i)
    if (ray_markable(d, d.rays[i])) f.push_back({d.rays[i].v, -1, i});
  std::sort(f.begin(), f.end(),
            [](const Feature& a, const Feature& b) { return a.left < b.left; });
  return f;
}

}  // namespace

unsigned marker_mask(const CupDiagram& d) {
  unsigned mask = 0;
  auto f = markable_features(d);
  for (size_t q = 0; q < f.size(); ++q) {
    bool marked = f[q].cup_index >= 0 ? d.cups[f[q].cup_index].marked
                                      : d.rays[f[q].ray_index].marked;
    if (marked) mask |= 1u << q;
  }
  return mask;
}

bool canonical_less(const CupDiagram& a, const CupDiagram& b) {
  auto key = [](const CupDiagram& d) {
    std::vector<std::pair<int, int>> k;
    for (const auto& c : d.cups) k.emplace_back(c.l, c.r);
    return k;
  };
  auto ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb;
  return marker_mask(a) < marker_mask(b);
}

std::vector<CupDiagram> enumerate_type_A(int n, int k) {
  if (k < 1 || k > n - k)
    throw DomainError("invalid_partition",
                      "type A needs 1 <= k <= n-k, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
  auto out = unmarked_diagrams(Kind::A, n, k);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<CupDiagram> enumerate_type_D(int n, int k, Parity parity) {
  TwoRowPartition lam{n, k};
  if (!lam.type_d_admissible())
    throw DomainError("invalid_partition",
                      "partition " + lam.to_string() + " is not type D admissible");
  std::vector<CupDiagram> out;
  for (const auto& base : unmarked_diagrams(Kind::D, n / 2, k / 2)) {
    if (base.partition() != lam) continue;
    auto feats = markable_features(base);
    for (unsigned mask = 0; mask < (1u << feats.size()); ++mask) {
      int bits = __builtin_popcount(mask);
      if (parity == Parity::Even && bits % 2) continue;
      if (parity == Parity::Odd && bits % 2 == 0) continue;
      CupDiagram d = base;
      for (size_t q = 0; q < feats.size(); ++q) {
        if (!(mask >> q & 1u)) continue;
        if (feats[q].cup_index >= 0)
          d.cups[feats[q].cup_index].marked = true;
        else
          d.rays[feats[q].ray_index].marked = true;
      }
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int sigma(const CupDiagram& d, int v) {
  for (const auto& c : d.cups) {
    if (c.l == v) return c.r;
    if (c.r == v) return c.l;
  }
  throw DomainError("not_cup_endpoint", "vertex " + std::to_string(v) + " is not on a cup");
}

int cups_left_of(const CupDiagram& d, int i) {
  int c = 0;
  for (const auto& cup : d.cups)
    if (cup.r < i) ++c;
  return c;
}

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III_1: return "III-1";
    case CaseTag::III_2: return "III-2";
    case CaseTag::III_3: return "III-3";
    case CaseTag::III_4: return "III-4";
  }
  return "?";
}

namespace {

void require_type_d(const CupDiagram& d, const char* op) {
  if (d.kind != Kind::D)
    throw DomainError("wrong_kind", std::string(op) + " needs a type D diagram");
  if (auto v = validate(d))
    throw DomainError("invalid_diagram", v->rule + ": " + v->detail);
  if (d.n_vertices < 3)
    throw DomainError("base_case", std::string(op) + " needs m >= 3");
}

CupDiagram restrict_shift(const CupDiagram& d, int lo, int hi) {
  CupDiagram out;
  out.kind = d.kind;
  out.n_vertices = hi - lo + 1;
  for (const auto& c : d.cups)
    if (c.l >= lo && c.r <= hi) out.cups.push_back(Cup{c.l - lo + 1, c.r - lo + 1, c.marked});
  for (const auto& r : d.rays)
    if (r.v >= lo && r.v <= hi) out.rays.push_back(Ray{r.v - lo + 1, r.marked});
  out.normalize();
  return out;
}

}  // namespace

Case1Descriptor classify_vertex1(const CupDiagram& d) {
  require_type_d(d, "classify_vertex1");
  const int m = d.n_vertices;
  if (const Cup* c = d.cup_at(1)) {
    int t = c->r / 2;
    if (!c->marked && c->r < m) return {CaseTag::I, t};
    return {CaseTag::II, t};
  }
  const Ray* r = d.ray_at(1);
  TwoRowPartition lam = d.partition();
  if (lam.equal_parts()) return {r->marked ? CaseTag::III_2 : CaseTag::III_1, 0};
  if (lam.first() - 2 == lam.second()) return {CaseTag::III_3, 0};
  return {CaseTag::III_4, 0};
}

std::pair<CupDiagram, CupDiagram> crop_case_I(const CupDiagram& d) {
  auto desc = classify_vertex1(d);
  if (desc.tag != CaseTag::I) throw DomainError("wrong_case", "diagram is not in case I");
  int two_t = 2 * desc.t;
  return {restrict_shift(d, 1, two_t), restrict_shift(d, two_t + 1, d.n_vertices)};
}

CupDiagram reduce_case_II(const CupDiagram& d) {
  auto desc = classify_vertex1(d);
  if (desc.tag != CaseTag::II) throw DomainError("wrong_case", "diagram is not in case II");
  int j = sigma(d, 1);
  CupDiagram c;
  c.kind = Kind::D;
  c.n_vertices = d.n_vertices - 1;
  for (const auto& cup : d.cups)
    if (cup.l != 1) c.cups.push_back(Cup{cup.l - 1, cup.r - 1, cup.marked});
  for (const auto& r : d.rays) c.rays.push_back(Ray{r.v - 1, r.marked});
  c.rays.push_back(Ray{j - 1, true});
  c.normalize();
  return c;
}

CupDiagram reduce_case_III(const CupDiagram& d) {
  auto desc = classify_vertex1(d);
  if (desc.tag == CaseTag::I || desc.tag == CaseTag::II)
    throw DomainError("wrong_case", "diagram is not in case III");
  return restrict_shift(d, 2, d.n_vertices);
}

CupDiagram parse_diagram(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() {
    size_t start = pos;
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw DiagramParseError("number too large", start);
      ++pos;
    }
    if (start == pos) throw DiagramParseError("expected a number", pos);
    return static_cast<int>(v);
  };
  CupDiagram d;
  skip_ws();
  if (pos >= text.size()) throw DiagramParseError("empty diagram text", pos);
  if (text[pos] == 'A')
    d.kind = Kind::A;
  else if (text[pos] == 'D')
    d.kind = Kind::D;
  else
    throw DiagramParseError("expected header 'A<n>:' or 'D<m>:'", pos);
  ++pos;
  d.n_vertices = read_int();
  if (pos >= text.size() || text[pos] != ':')
    throw DiagramParseError("expected ':' after header", pos);
  ++pos;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) break;
    size_t tok = pos;
    char c = text[pos++];
    if (c == 'c' || c == 'm') {
      int l = read_int();
      if (pos >= text.size() || text[pos] != '-')
        throw DiagramParseError("expected '-' in cup token", pos);
      ++pos;
      int r = read_int();
      d.cups.push_back(Cup{l, r, c == 'm'});
    } else if (c == 'r' || c == 'x') {
      d.rays.push_back(Ray{read_int(), c == 'x'});
    } else {
      throw DiagramParseError(std::string("unknown token '") + c + "'", tok);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw DiagramParseError("expected whitespace between tokens", pos);
  }
  d.normalize();
  if (auto v = validate(d)) throw DomainError("invalid_diagram", v->rule + ": " + v->detail);
  return d;
}

std::string format_diagram(const CupDiagram& d) {
  std::map<int, std::string> tokens;
  for (const auto& c : d.cups)
    tokens[c.l] = (c.marked ? "m" : "c") + std::to_string(c.l) + "-" + std::to_string(c.r);
  for (const auto& r : d.rays) tokens[r.v] = (r.marked ? "x" : "r") + std::to_string(r.v);
  std::string out = (d.kind == Kind::A ? "A" : "D") + std::to_string(d.n_vertices) + ":";
  for (const auto& [v, tok] : tokens) out += " " + tok;
  return out;
}

namespace {

// Height of a cup: 1 + the largest height among cups directly below it.
std::vector<int> cup_heights(const CupDiagram& d) {
  std::vector<int> h(d.cups.size(), 1);
  std::vector<size_t> order(d.cups.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return d.cups[a].r - d.cups[a].l < d.cups[b].r - d.cups[b].l;
  });
  for (size_t a : order)
    for (size_t b = 0; b < d.cups.size(); ++b)
      if (d.cups[a].l < d.cups[b].l && d.cups[b].r < d.cups[a].r)
        h[a] = std::max(h[a], h[b] + 1);
  return h;
}

const char* kMarker = "■";

}  // namespace

std::string render_ascii(const CupDiagram& d) {
  const int n = d.n_vertices;
  auto h = cup_heights(d);
  int depth = 1;
  for (int x : h) depth = std::max(depth, x);
  int rows = depth + 1;
  int width = 4 * (n - 1) + 1;
  std::vector<std::vector<std::string>> grid(rows, std::vector<std::string>(width, " "));
  auto col = [](int v) { return 4 * (v - 1); };
  for (int v = 1; v <= n; ++v) {
    std::string label = std::to_string(v);
    for (size_t q = 0; q < label.size() && col(v) + static_cast<int>(q) < width; ++q)
      grid[0][col(v) + q] = std::string(1, label[q]);
  }
  for (size_t ci = 0; ci < d.cups.size(); ++ci) {
    const Cup& c = d.cups[ci];
    for (int y = 1; y < h[ci]; ++y) {
      grid[y][col(c.l)] = "|";
      grid[y][col(c.r)] = "|";
    }
    grid[h[ci]][col(c.l)] = "(";
    grid[h[ci]][col(c.r)] = ")";
    for (int x = col(c.l) + 1; x < col(c.r); ++x) grid[h[ci]][x] = "_";
    if (c.marked) grid[h[ci]][(col(c.l) + col(c.r)) / 2] = kMarker;
  }
  for (const auto& r : d.rays) {
    for (int y = 1; y < rows; ++y) grid[y][col(r.v)] = "|";
    if (r.marked) grid[(rows + 1) / 2][col(r.v)] = kMarker;
  }
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (const auto& cell : row) line += cell;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_svg(const CupDiagram& d) {
  const int n = d.n_vertices;
  auto h = cup_heights(d);
  int depth = 1;
  for (int x : h) depth = std::max(depth, x);
  const int step = 40, top = 30, unit = 24;
  const int width = step * (n + 1);
  const int bottom = top + unit * (depth + 1);
  const int height = bottom + 10;
  auto x_of = [&](int v) { return step * v; };
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
    << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  s << "  <rect x=\"" << step / 2 << "\" y=\"" << top << "\" width=\"" << width - step
    << "\" height=\"" << bottom - top << "\" fill=\"none\" stroke=\"#999\"/>\n";
  for (int v = 1; v <= n; ++v)
    s << "  <text x=\"" << x_of(v) << "\" y=\"" << top - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
  for (size_t ci = 0; ci < d.cups.size(); ++ci) {
    const Cup& c = d.cups[ci];
    int ctrl = top + (unit * h[ci] * 4) / 3;
    s << "  <path d=\"M " << x_of(c.l) << " " << top << " C " << x_of(c.l) << " " << ctrl
      << " " << x_of(c.r) << " " << ctrl << " " << x_of(c.r) << " " << top
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    if (c.marked) {
      int mx = (x_of(c.l) + x_of(c.r)) / 2;
      int my = top + unit * h[ci];
      s << "  <rect x=\"" << mx - 4 << "\" y=\"" << my - 4
        << "\" width=\"8\" height=\"8\" fill=\"black\"/>\n";
    }
  }
  for (const auto& r : d.rays) {
    s << "  <line x1=\"" << x_of(r.v) << "\" y1=\"" << top << "\" x2=\"" << x_of(r.v)
      << "\" y2=\"" << bottom << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    if (r.marked)
      s << "  <rect x=\"" << x_of(r.v) - 4 << "\" y=\"" << (top + bottom) / 2 - 4
        << "\" width=\"8\" height=\"8\" fill=\"black\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace scup
