#include <doctest.h>

#include "qcheck.hpp"

using namespace scup;

TEST_CASE("rref, rank and null space") {
  std::vector<Vec> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank_of(rows, 3) == 2);
  auto ns = null_space(rows, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& r : rows) {
    Scalar dot = 0;
    for (int c = 0; c < 3; ++c) dot += r[c] * ns[0][c];
    CHECK(dot.is_zero());
  }
  auto sol = solve_in_span({{1, 0, 1}, {0, 1, 1}}, {2, 3, 5});
  REQUIRE(sol);
  CHECK((*sol)[0] == Scalar(2));
  CHECK((*sol)[1] == Scalar(3));
  CHECK_FALSE(solve_in_span({{1, 0, 1}}, {0, 1, 0}));
  CHECK_THROWS_AS(add(Vec{1, 2}, Vec{1}), DimensionMismatch);
}

TEST_CASE("determinant") {
  Matrix a = Matrix::from_rows({{2, 1}, {Scalar::i(), 3}}, 2);
  CHECK(determinant(a) == Scalar(6) - Scalar::i());
  CHECK(determinant(Matrix::from_rows({{1, 2}, {2, 4}}, 2)).is_zero());
}

TEST_CASE("subspace equality is canonical") {
  Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  Subspace b = Subspace::span(3, {{1, 2, 1}, {Scalar(2), 2, 0}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(Vec{1, 0, -1}));
  CHECK_FALSE(a.contains(Vec{1, 0, 0}));
  CHECK(intersect(a, Subspace::coordinate(3, {0, 1})).dim() == 1);
  CHECK(sum(a, Subspace::coordinate(3, {0})) == Subspace::full(3));
  CHECK(Subspace::span(3, {{0, 0, 0}}).dim() == 0);
}

TEST_CASE("nilpotent shape and form invariants") {
  for (int n = 2; n <= 12; n += 2)
    for (int k = 1; k <= n / 2; ++k) {
      TwoRowPartition lam{n, k};
      if (!lam.type_d_admissible()) continue;
      Matrix x = build_nilpotent(lam);
      BilinearForm beta = build_form(lam);
      CHECK(beta.symmetric());
      CHECK(x.power(n - k).is_zero());
      CHECK_FALSE(x.power(n - k - 1).is_zero());
      CHECK(x.power(k).apply(f_vec(lam, k)) == Vec(n, Scalar(0)));
      // Skew-adjoint: beta(xu, v) + beta(u, xv) = 0 on basis pairs.
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Vec u = unit_vector(n, a), v = unit_vector(n, b);
          CHECK((beta(x.apply(u), v) + beta(u, x.apply(v))).is_zero());
        }
      CHECK(determinant(beta.gram) != Scalar(0));
      for (int d = 0; d <= n; ++d) {
        std::vector<int> idx;
        for (int q = 0; q < d; ++q) idx.push_back(q);
        CHECK(perp(Subspace::coordinate(n, idx), beta).dim() == n - d);
      }
    }
}

TEST_CASE("basis action on the examples") {
  TwoRowPartition lam{8, 3};
  Matrix x = build_nilpotent(lam);
  CHECK(x.apply(e_vec(lam, 3)) == e_vec(lam, 2));
  CHECK(is_zero(x.apply(e_vec(lam, 1))));
  CHECK(x.apply(f_vec(lam, 2)) == f_vec(lam, 1));
  BilinearForm beta = build_form(lam);
  CHECK(beta(e_vec(lam, 1), e_vec(lam, 5)) == Scalar(1));
  CHECK(beta(e_vec(lam, 2), e_vec(lam, 4)) == Scalar(-1));
  CHECK(beta(f_vec(lam, 1), f_vec(lam, 3)) == Scalar(1));
  CHECK(beta(e_vec(lam, 1), f_vec(lam, 3)).is_zero());
  CHECK_THROWS_AS(build_form(TwoRowPartition{8, 2}), DomainError);
}

TEST_CASE("projections and embeddings") {
  TwoRowPartition lam{10, 5}, mu{4, 2};
  Matrix p = projection_P(lam, mu), emb = embedding_P(mu, lam);
  CHECK(p * emb == Matrix::identity(4));
  Matrix xl = build_nilpotent(lam), xm = build_nilpotent(mu);
  CHECK(emb * xm == xl * emb);
}

TEST_CASE("quotient by an isotropic x-stable line") {
  TwoRowPartition lam{6, 3};
  Subspace w = Subspace::span(6, {e_vec(lam, 1)});
  QuotientSpace q = quotient(w, build_form(lam), build_nilpotent(lam));
  CHECK(q.reps.size() == 4);
  CHECK(determinant(q.form) != Scalar(0));
  CHECK_THROWS_AS(quotient(Subspace::span(6, {e_vec(lam, 2)}), build_form(lam), build_nilpotent(lam)),
                  DomainError);
}

TEST_CASE("every Q map is an isometry intertwining x") {
  ParamSampler rng(5);
  auto instances = fx::q_instances(12, rng);
  CHECK(instances.size() > 50);
  for (const auto& inst : instances) {
    INFO(inst.name());
    CHECK(fx::q_problems(inst).empty());
  }
}

TEST_CASE("the doubled square root in the fourth ray case is not an isometry") {
  fx::QInstance inst{QCase::III_4, {8, 1}, {}};
  inst.data.literal_III4 = true;
  CHECK_FALSE(fx::q_problems(inst).empty());
}

TEST_CASE("Q subspace maps are scale invariant") {
  TwoRowPartition lam{8, 3};
  QuadIso q = build_Q(QCase::III_3, lam, {});
  Vec v = q.lift_vector(e_vec(q.nu, 1));
  CHECK(q.apply_subspace(sum(q.W, Subspace::span(8, {v}))) ==
        q.apply_subspace(sum(q.W, Subspace::span(8, {scale(Scalar(3, 2), v)}))));
  CHECK(q.apply_subspace(q.lift_subspace(Subspace::span(q.nu.n, {e_vec(q.nu, 1)}))) ==
        Subspace::span(q.nu.n, {e_vec(q.nu, 1)}));
}

TEST_CASE("swap_ef commutes with x for odd rank") {
  for (int r : {1, 3, 5}) {
    TwoRowPartition nu{2 * r, r};
    Matrix s = swap_ef(r), x = build_nilpotent(nu);
    CHECK(s * x == x * s);
    BilinearForm b = build_form(nu);
    for (int a = 0; a < 2 * r; ++a)
      for (int c = 0; c < 2 * r; ++c)
        CHECK(b(s.apply(unit_vector(2 * r, a)), s.apply(unit_vector(2 * r, c))) ==
              b(unit_vector(2 * r, a), unit_vector(2 * r, c)));
  }
}
