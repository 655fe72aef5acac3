#include <algorithm>

#include "scup/components.hpp"

namespace scup {

ParamSampler::ParamSampler(std::uint64_t seed) : state_(seed) {}

// splitmix64: fixed output for a fixed seed on every platform.
std::uint64_t ParamSampler::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

mpq_class ParamSampler::rational() {
  long num = static_cast<long>(next() % 15) - 7;
  long den = static_cast<long>(next() % 7) + 1;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

ProjParam ParamSampler::param() {
  while (true) {
    mpq_class a = rational(), b = rational();
    if (a != 0 || b != 0) return ProjParam::make(Scalar(a), Scalar(b));
  }
}

ParamAssignment ParamSampler::assignment(int count) {
  ParamAssignment p;
  for (int i = 0; i < count; ++i) p.push_back(param());
  return p;
}

namespace {

std::uint64_t diagram_seed(const CupDiagram& d, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char ch : format_diagram(d)) h = (h ^ ch) * 1099511628211ULL;
  return h;
}

std::string flag_problem(const Flag& f, const CupDiagram& d) {
  TwoRowPartition lam = d.partition();
  if (!f.is_complete_flag()) return "not a complete flag";
  if (!is_springer_flag(f, build_nilpotent(lam))) return "not a Springer flag";
  if (d.kind == Kind::D && !is_isotropic_flag(f, build_form(lam))) return "not isotropic";
  MembershipReport rep = check_membership(f, d);
  if (!rep.ok()) {
    std::string s = "membership " + to_string(rep.status);
    for (const auto& fl : rep.failures) s += " [" + std::to_string(fl.vertex) + " " + fl.rule + "]";
    return s;
  }
  return "";
}

}  // namespace

ComponentReport verify_component(const CupDiagram& d, int samples, std::uint64_t seed,
                                 bool keep_flags) {
  ComponentReport rep;
  rep.diagram = d;
  rep.samples = samples;
  rep.parameters = static_cast<int>(d.cups.size());
  ParamSampler rng(diagram_seed(d, seed));
  const int ell = rep.parameters;
  for (int s = 0; s < samples; ++s) {
    ParamAssignment p = rng.assignment(ell);
    std::string ptext = format_params(p);
    Flag f;
    try {
      f = build_flag(d, p);
    } catch (const DomainError& e) {
      rep.failures.push_back({s, "build: " + std::string(e.what()), ptext});
      continue;
    }
    if (auto problem = flag_problem(f, d); !problem.empty()) {
      rep.failures.push_back({s, problem, ptext});
      continue;
    }
    for (int q = 0; q < ell; ++q) {
      ParamAssignment p2 = p;
      while (p2[q] == p[q]) p2[q] = rng.param();
      try {
        if (build_flag(d, p2) == f) {
          rep.injectivity = false;
          rep.failures.push_back({s, "coordinate " + std::to_string(q) + " does not move the flag",
                                  ptext + " vs " + format_params(p2)});
        }
      } catch (const DomainError& e) {
        rep.failures.push_back({s, "build: " + std::string(e.what()), format_params(p2)});
      }
    }
    if (keep_flags) {
      rep.flags.push_back(std::move(f));
      rep.assignments.push_back(std::move(p));
    }
  }
  return rep;
}

std::vector<VerifyFailure> verify_round_trips(const CupDiagram& d, int samples,
                                              std::uint64_t seed) {
  std::vector<VerifyFailure> out;
  if (d.kind != Kind::D || d.n_vertices < 3) return out;
  TwoRowPartition lam = d.partition();
  ParamSampler rng(diagram_seed(d, seed) ^ 0x5a5a5a5aULL);
  const int ell = static_cast<int>(d.cups.size());
  Case1Descriptor desc = classify_vertex1(d);
  auto fail = [&](int s, const std::string& what, const ParamAssignment& p) {
    out.push_back({s, to_string(desc.tag) + ": " + what, format_params(p)});
  };
  for (int s = 0; s < samples; ++s) {
    ParamAssignment p = rng.assignment(ell);
    try {
      Flag f = build_flag_D(d, p);
      if (desc.tag == CaseTag::I) {
        Reduction r = reduction_for(d);
        auto nb = static_cast<size_t>(std::count_if(d.cups.begin(), d.cups.end(),
                                                    [&](const Cup& c) { return c.r <= 2 * desc.t; }));
        ParamAssignment pb(p.begin(), p.begin() + nb), pc(p.begin() + nb, p.end());
        Flag fb = pi_ab(f, lam, desc.t), fc = omega(f, r);
        if (fb != build_flag_D(r.b, pb)) fail(s, "pi_ab differs from the b-flag", p);
        if (fc != build_flag_D(r.c, pc)) fail(s, "omega differs from the c-flag", p);
        if (!check_membership(fb, r.b).ok()) fail(s, "pi_ab leaves K_b", p);
        if (!check_membership(fc, r.c).ok()) fail(s, "omega leaves K_c", p);
        if (inverse_case_I(d, fb, fc) != f) fail(s, "(pi_ab, omega) then inverse is not the identity", p);
      } else if (desc.tag == CaseTag::II) {
        ProjParam line = line_of(f, lam);
        if (line != p.front()) fail(s, "F_1 is not the first parameter", p);
        for (Chart j : {Chart::U1, Chart::U2}) {
          if ((j == Chart::U1 ? line.a : line.b).is_zero()) continue;
          Reduction r = reduction_for(d, line, j);
          Flag fc = phi_j(f, d, j);
          if (!check_membership(fc, r.c).ok()) fail(s, "phi_j leaves K_c", p);
          if (inverse_case_II(d, line, fc, j) != f) fail(s, "phi_j then inverse is not the identity", p);
        }
        // On the overlap the two charts differ by an isometry of V_nu, so the
        // consistent statement is the commuting triangle through K_c.
        if (!line.a.is_zero() && !line.b.is_zero()) {
          Flag g1 = phi_j(f, d, Chart::U1), g2 = phi_j(f, d, Chart::U2);
          if (inverse_case_II(d, line, g1, Chart::U1) != inverse_case_II(d, line, g2, Chart::U2))
            fail(s, "charts U1 and U2 disagree on the overlap", p);
          Flag via2 = build_flag_D(d, p, {Chart::U2});
          if (inverse_case_II(d, line, phi_j(via2, d, Chart::U1), Chart::U1) != via2)
            fail(s, "U2-built flag does not survive the U1 chart", p);
        }
      } else {
        Reduction r = reduction_for(d);
        Flag fc = omega(f, r);
        if (fc != build_flag_D(r.c, p)) fail(s, "omega differs from the c-flag", p);
        if (inverse_case_III(d, fc) != f) fail(s, "omega then inverse is not the identity", p);
        Flag g = build_flag_D(r.c, rng.assignment(ell));
        if (omega(inverse_case_III(d, g), r) != g) fail(s, "inverse then omega is not the identity", p);
      }
    } catch (const DomainError& e) {
      fail(s, std::string("error: ") + e.what(), p);
    }
  }
  return out;
}

bool incidence_sampled(const CupDiagram& d1, const CupDiagram& d2, int grid, std::uint64_t seed) {
  if (d1.kind != d2.kind || d1.partition() != d2.partition())
    throw DomainError("shape_mismatch", "diagrams have different shapes");
  const int ell = static_cast<int>(d1.cups.size());
  ParamSampler rng(diagram_seed(d1, seed));
  std::vector<ParamAssignment> points;
  points.push_back(ParamAssignment(ell, ProjParam::make(1, 0)));
  points.push_back(ParamAssignment(ell, ProjParam::make(0, 1)));
  for (int g = 0; g < grid; ++g) points.push_back(rng.assignment(ell));
  for (const auto& p : points) {
    try {
      if (check_membership(build_flag(d1, p), d2).ok()) return true;
    } catch (const DegenerateParameter&) {
    }
  }
  return false;
}

long type_C_component_count(int n_prime, int k_prime) {
  int big = n_prime - k_prime;
  if (k_prime < 1 || big < k_prime)
    throw DomainError("invalid_partition", "type C count needs 1 <= k' <= n'-k'");
  bool ok = (big % 2 == 0 && k_prime % 2 == 0) || (big == k_prime);
  if (!ok)
    throw DomainError("invalid_partition", "(" + std::to_string(big) + "," + std::to_string(k_prime) +
                                               ") has an odd part of odd multiplicity");
  return static_cast<long>(enumerate_type_D(n_prime + 2, k_prime + 1, Parity::Even).size());
}

}  // namespace scup
