// Cup diagrams and marked cup diagrams. Vertices are 1-based.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scup {

struct DomainError : std::runtime_error {
  DomainError(std::string code, const std::string& msg)
      : std::runtime_error(msg), code(std::move(code)) {}
  std::string code;
};

// Two-row Jordan type (n-k, k) with 1 <= k <= n-k.
struct TwoRowPartition {
  int n = 0;
  int k = 0;

  int first() const { return n - k; }
  int second() const { return k; }
  int m() const { return n / 2; }
  bool equal_parts() const { return n - k == k; }
  bool valid() const { return k >= 1 && k <= n - k; }
  // n even and either equal parts or both parts odd.
  bool type_d_admissible() const;
  std::string to_string() const;  // "(p,q)"
  friend bool operator==(const TwoRowPartition&, const TwoRowPartition&) = default;
};

TwoRowPartition make_partition(int first, int second);

enum class Kind { A, D };

struct Cup {
  int l = 0;
  int r = 0;
  bool marked = false;
  friend bool operator==(const Cup&, const Cup&) = default;
};

struct Ray {
  int v = 0;
  bool marked = false;
  friend bool operator==(const Ray&, const Ray&) = default;
};

struct CupDiagram {
  Kind kind = Kind::A;
  int n_vertices = 0;
  std::vector<Cup> cups;  // sorted by left endpoint
  std::vector<Ray> rays;  // sorted by vertex

  void normalize();
  // Type A: (n - #cups, #cups). Type D: n = 2m, k = 2 #cups + (rays ? 1 : 0).
  TwoRowPartition partition() const;
  int marker_count() const;
  std::optional<int> rightmost_ray() const;
  const Cup* cup_at(int v) const;
  const Ray* ray_at(int v) const;
  friend bool operator==(const CupDiagram&, const CupDiagram&) = default;
};

struct Violation {
  std::string rule;
  std::string detail;
};

// First violated rule, or nullopt. Rule names are stable strings.
std::optional<Violation> validate(const CupDiagram& d);

bool cup_markable(const CupDiagram& d, const Cup& c);
bool ray_markable(const CupDiagram& d, const Ray& r);

enum class Parity { Even, Odd, All };

std::vector<CupDiagram> enumerate_type_A(int n, int k);
std::vector<CupDiagram> enumerate_type_D(int n, int k, Parity parity = Parity::All);

// Canonical order: cup list lexicographically, then marker bitmask where bit q
// is the q-th markable feature from the left.
bool canonical_less(const CupDiagram& a, const CupDiagram& b);
unsigned marker_mask(const CupDiagram& d);

int sigma(const CupDiagram& d, int v);
int cups_left_of(const CupDiagram& d, int i);

enum class CaseTag { I, II, III_1, III_2, III_3, III_4 };
std::string to_string(CaseTag t);

struct Case1Descriptor {
  CaseTag tag = CaseTag::I;
  int t = 0;  // half-span of the vertex-1 cup, 0 for III-*
};

Case1Descriptor classify_vertex1(const CupDiagram& d);
std::pair<CupDiagram, CupDiagram> crop_case_I(const CupDiagram& d);
CupDiagram reduce_case_II(const CupDiagram& d);
CupDiagram reduce_case_III(const CupDiagram& d);

// Grammar: header "A<n>:" or "D<m>:", then tokens c<i>-<j>, m<i>-<j>, r<i>, x<i>.
struct DiagramParseError : std::invalid_argument {
  DiagramParseError(const std::string& msg, size_t pos)
      : std::invalid_argument(msg), position(pos) {}
  size_t position;
};

CupDiagram parse_diagram(std::string_view text);
std::string format_diagram(const CupDiagram& d);

std::string render_ascii(const CupDiagram& d);
std::string render_svg(const CupDiagram& d);

}  // namespace scup
