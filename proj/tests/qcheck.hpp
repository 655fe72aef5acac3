// Exact checks that a Q map is an isometry W^perp/W -> V_nu commuting with
// the nilpotents, plus the list of valid instances up to a given size.
#pragma once

#include <string>
#include <vector>

#include "scup/components.hpp"

namespace fx {

using namespace scup;

struct QInstance {
  QCase kind;
  TwoRowPartition lam;
  QData data;
  std::string name() const {
    return to_string(kind) + " on " + lam.to_string() + (data.swap_nu ? " swapped" : "") +
           (kind == QCase::II_1 || kind == QCase::II_2
                ? " c=" + data.c.to_string() + " d=" + data.d.to_string()
                : "") +
           (kind == QCase::I ? " t=" + std::to_string(data.t) : "") +
           (kind == QCase::III_4 ? " omega_sign=" + std::to_string(data.omega_sign) : "");
  }
};

// Empty when the map preserves forms, intertwines x and is bijective.
inline std::vector<std::string> q_problems(const QInstance& inst) {
  std::vector<std::string> bad;
  QuadIso q = build_Q(inst.kind, inst.lam, inst.data);
  BilinearForm bl = build_form(q.lam), bn = build_form(q.nu);
  Matrix xl = build_nilpotent(q.lam), xn = build_nilpotent(q.nu);
  std::vector<Vec> full;
  for (int a = 0; a < q.nu.n; ++a) full.push_back(q.lift_vector_full(unit_vector(q.nu.n, a)));
  for (int a = 0; a < q.nu.n; ++a) {
    if (!q.Wperp.contains(full[a])) bad.push_back("lift leaves W^perp");
    for (int b = 0; b < q.nu.n; ++b)
      if (bl(full[a], full[b]) != bn(unit_vector(q.nu.n, a), unit_vector(q.nu.n, b)))
        bad.push_back("form not preserved at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    Vec diff = add(xl.apply(full[a]), scale(Scalar(-1), q.lift_vector_full(xn.apply(unit_vector(q.nu.n, a)))));
    if (!q.W.contains(diff)) bad.push_back("x not intertwined at " + std::to_string(a));
    if (q.apply(q.lift_vector(unit_vector(q.nu.n, a))) != unit_vector(q.nu.n, a))
      bad.push_back("apply is not inverse to lift at " + std::to_string(a));
  }
  std::vector<Vec> rows = q.W.rows();
  rows.insert(rows.end(), full.begin(), full.end());
  if (Subspace::span(q.lam.n, rows) != q.Wperp) bad.push_back("lift does not fill W^perp/W");
  return bad;
}

// Every valid data choice on partitions of size <= nmax; c, d drawn from rng.
inline std::vector<QInstance> q_instances(int nmax, ParamSampler& rng) {
  std::vector<QInstance> out;
  for (int n = 2; n <= nmax; n += 2)
    for (int k = 1; k <= n / 2; ++k) {
      TwoRowPartition lam{n, k};
      if (!lam.type_d_admissible()) continue;
      const int m = lam.m();
      auto with_swaps = [&](QInstance inst) {
        out.push_back(inst);
        TwoRowPartition nu = q_target(inst.kind, lam, inst.data);
        if (nu.n > 0 && nu.equal_parts() && nu.first() % 2 == 1) {
          inst.data.swap_nu = true;
          out.push_back(inst);
        }
      };
      for (int t = 1; 2 * t < m && k - 2 * t >= 1; ++t) {
        QData d;
        d.t = t;
        with_swaps({QCase::I, lam, d});
      }
      if (lam.equal_parts() && m >= 2) {
        with_swaps({QCase::III_1, lam, {}});
        with_swaps({QCase::III_2, lam, {}});
        for (int trial = 0; trial < 3; ++trial) {
          QData d;
          d.c = Scalar(rng.rational());
          d.d = Scalar(rng.rational());
          if (m % 2 == 1) (trial % 2 ? d.c : d.d) = Scalar(0);
          if (d.c.is_zero() && d.d.is_zero()) d.c = Scalar(1);
          if (!d.c.is_zero()) with_swaps({QCase::II_1, lam, d});
          if (!d.d.is_zero()) with_swaps({QCase::II_2, lam, d});
        }
      }
      if (lam.first() - 2 == lam.second()) with_swaps({QCase::III_3, lam, {}});
      if (lam.first() - 2 > lam.second())
        for (int sign : {1, -1}) {
          QData d;
          d.omega_sign = sign;
          with_swaps({QCase::III_4, lam, d});
        }
    }
  return out;
}

}  // namespace fx
