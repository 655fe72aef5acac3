#include <doctest.h>

#include "fixtures.hpp"

using namespace scup;

namespace {
long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("validate names the first violated rule") {
  CHECK_FALSE(validate(parse_diagram("A4: r1 c2-3 r4")));
  CupDiagram nested;
  nested.kind = Kind::D;
  nested.n_vertices = 4;
  nested.cups = {{1, 4, false}, {2, 3, true}};
  REQUIRE(validate(nested));
  CHECK(validate(nested)->rule == "marked cup nested");
  CupDiagram rays;
  rays.kind = Kind::D;
  rays.n_vertices = 4;
  rays.rays = {{1, true}, {2, false}};
  rays.cups = {{3, 4, false}};
  REQUIRE(validate(rays));
  CHECK(validate(rays)->rule == "non-rightmost marked ray");
  CupDiagram crossing;
  crossing.kind = Kind::A;
  crossing.n_vertices = 4;
  crossing.cups = {{1, 3, false}, {2, 4, false}};
  REQUIRE(validate(crossing));
  CupDiagram ray_inside;
  ray_inside.kind = Kind::A;
  ray_inside.n_vertices = 3;
  ray_inside.cups = {{1, 3, false}};
  ray_inside.rays = {{2, false}};
  REQUIRE(validate(ray_inside));
}

TEST_CASE("small enumerations") {
  CHECK(fx::texts(enumerate_type_A(4, 1)) ==
        std::set<std::string>{"A4: c1-2 r3 r4", "A4: r1 c2-3 r4", "A4: r1 r2 c3-4"});
  auto a21 = enumerate_type_A(2, 1);
  REQUIRE(a21.size() == 1);
  CHECK(format_diagram(a21[0]) == "A2: c1-2");
  CHECK(enumerate_type_A(6, 2).size() == 9);
  CHECK(enumerate_type_D(2, 1).size() == 2);
  CHECK(enumerate_type_D(4, 2).size() == 2);
  CHECK(enumerate_type_D(8, 3).size() == 8);
  CHECK(enumerate_type_D(8, 3, Parity::Even).size() == 4);
  CHECK(enumerate_type_D(8, 3, Parity::Odd).size() == 4);
  CHECK_THROWS_AS(enumerate_type_D(8, 2), DomainError);
  CHECK_THROWS_AS(enumerate_type_A(4, 3), DomainError);
}

TEST_CASE("type A counts are ballot numbers") {
  for (int n = 1; n <= 14; ++n)
    for (int k = 1; k <= n / 2; ++k)
      CHECK(static_cast<long>(enumerate_type_A(n, k).size()) == binom(n, k) - binom(n, k - 1));
}

TEST_CASE("enumerators agree with brute force") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k <= n / 2; ++k) CHECK(fx::texts(enumerate_type_A(n, k)) == fx::brute_force(Kind::A, n, k));
  for (int n = 2; n <= 12; n += 2)
    for (int k = 1; k <= n / 2; ++k)
      if (TwoRowPartition{n, k}.type_d_admissible())
        CHECK(fx::texts(enumerate_type_D(n, k)) == fx::brute_force(Kind::D, n, k));
}

TEST_CASE("enumeration order is canonical and parity balanced") {
  for (int n = 2; n <= 12; n += 2)
    for (int k = 1; k <= n / 2; ++k) {
      if (!TwoRowPartition{n, k}.type_d_admissible()) continue;
      auto all = enumerate_type_D(n, k);
      CHECK(std::is_sorted(all.begin(), all.end(), canonical_less));
      CHECK(enumerate_type_D(n, k, Parity::Even).size() == enumerate_type_D(n, k, Parity::Odd).size());
      for (const auto& d : all)
        for (const auto& c : d.cups) CHECK((c.r - c.l) % 2 == 1);
    }
}

TEST_CASE("canonical order of the (5,3) diagrams") {
  std::vector<std::string> want = {"D4: c1-2 r3 r4", "D4: c1-2 r3 x4", "D4: r1 c2-3 r4", "D4: r1 c2-3 x4",
                                   "D4: r1 r2 c3-4", "D4: r1 x2 c3-4", "D4: r1 r2 m3-4", "D4: r1 x2 m3-4"};
  std::vector<std::string> got;
  for (const auto& d : enumerate_type_D(8, 3)) got.push_back(format_diagram(d));
  CHECK(got == want);
}

TEST_CASE("sigma and cups_left_of") {
  CupDiagram d = parse_diagram("A4: r1 c2-3 r4");
  CHECK(sigma(d, 2) == 3);
  CHECK(sigma(parse_diagram("A4: c1-4 c2-3"), 4) == 1);
  CHECK_THROWS_AS(sigma(d, 1), DomainError);
  CHECK(cups_left_of(d, 4) == 1);
  CHECK(cups_left_of(d, 1) == 0);
  CHECK(cups_left_of(parse_diagram("A5: c1-2 c3-4 r5"), 5) == 2);
}

TEST_CASE("classification at vertex 1") {
  CHECK(classify_vertex1(parse_diagram("D4: r1 c2-3 r4")).tag == CaseTag::III_3);
  CHECK(classify_vertex1(parse_diagram("D5: r1 m2-3 c4-5")).tag == CaseTag::III_1);
  CHECK(classify_vertex1(parse_diagram("D5: x1 c2-3 c4-5")).tag == CaseTag::III_2);
  CHECK(classify_vertex1(parse_diagram("D6: r1 r2 c3-4 r5 r6")).tag == CaseTag::III_4);
  auto ii = classify_vertex1(parse_diagram("D4: m1-2 c3-4"));
  CHECK(ii.tag == CaseTag::II);
  CHECK(ii.t == 1);
  CHECK(classify_vertex1(parse_diagram("D4: c1-4 c2-3")).tag == CaseTag::II);
  CHECK(classify_vertex1(parse_diagram("D4: c1-2 c3-4")).tag == CaseTag::I);
  CHECK_THROWS_AS(classify_vertex1(parse_diagram("D2: c1-2")), DomainError);
}

TEST_CASE("classification is total and reductions stay valid") {
  for (int n = 6; n <= 12; n += 2)
    for (int k = 1; k <= n / 2; ++k) {
      if (!TwoRowPartition{n, k}.type_d_admissible()) continue;
      for (const auto& d : enumerate_type_D(n, k)) {
        auto desc = classify_vertex1(d);
        if (desc.tag == CaseTag::I) {
          auto [b, c] = crop_case_I(d);
          CHECK_FALSE(validate(b));
          CHECK_FALSE(validate(c));
          CHECK(b.partition() == make_partition(2 * desc.t, 2 * desc.t));
        } else if (desc.tag == CaseTag::II) {
          auto c = reduce_case_II(d);
          CHECK_FALSE(validate(c));
          CHECK(c.partition().equal_parts());
        } else {
          CHECK_FALSE(validate(reduce_case_III(d)));
        }
      }
    }
}

TEST_CASE("croppings and reductions") {
  auto [b, c] = crop_case_I(parse_diagram("D6: c1-2 c3-6 c4-5"));
  CHECK(format_diagram(b) == "D2: c1-2");
  CHECK(format_diagram(c) == "D4: c1-4 c2-3");
  auto [b2, c2] = crop_case_I(parse_diagram("D4: c1-2 c3-4"));
  CHECK(format_diagram(b2) == "D2: c1-2");
  CHECK(format_diagram(c2) == "D2: c1-2");
  CHECK(format_diagram(reduce_case_II(parse_diagram("D4: c1-4 c2-3"))) == "D3: c1-2 x3");
  CHECK(format_diagram(reduce_case_II(parse_diagram("D4: m1-2 c3-4"))) == "D3: x1 c2-3");
  CHECK_THROWS(reduce_case_II(parse_diagram("D2: c1-2")));
  auto r = reduce_case_III(parse_diagram("D4: r1 c2-3 r4"));
  CHECK(format_diagram(r) == "D3: c1-2 r3");
  CHECK(r.partition() == make_partition(3, 3));
  auto r2 = reduce_case_III(parse_diagram("D5: r1 m2-3 c4-5"));
  CHECK(format_diagram(r2) == "D4: m1-2 c3-4");
  auto r3 = reduce_case_III(parse_diagram("D6: r1 r2 c3-4 r5 r6"));
  CHECK(r3.n_vertices == 5);
  CHECK(r3.partition() == make_partition(7, 3));
}

TEST_CASE("text grammar") {
  CupDiagram d = parse_diagram("D4: r1 c2-3 r4");
  CHECK(d.cups.size() == 1);
  CHECK(d.rays.size() == 2);
  CHECK(format_diagram(parse_diagram("D4:  r4 c2-3 r1")) == "D4: r1 c2-3 r4");
  CHECK(format_diagram(parse_diagram(format_diagram(d))) == format_diagram(d));
  CHECK_THROWS_AS(parse_diagram("D4: r1 m2-3 r4"), DomainError);
  CHECK_THROWS_AS(parse_diagram("Q4: r1"), DiagramParseError);
  CHECK_THROWS_AS(parse_diagram("D4: r1 c2-"), DiagramParseError);
  CHECK_THROWS_AS(parse_diagram("A3: x1 c2-3"), DomainError);
}

TEST_CASE("rendering") {
  std::string cup = render_ascii(parse_diagram("A2: c1-2"));
  CHECK(cup.find('(') != std::string::npos);
  CHECK(cup.find(')') != std::string::npos);
  CHECK(render_ascii(parse_diagram("D2: r1 x2")).find("■") != std::string::npos);
  std::string svg = render_svg(parse_diagram("D4: r1 x2 m3-4"));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(render_svg(parse_diagram("D4: r1 x2 m3-4")) == svg);
}
