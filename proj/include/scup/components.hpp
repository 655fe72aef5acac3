// Explicit parametrization of the irreducible components K_d by one point of
// P^1 per cup, the reduction maps between components, and sampled checks.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scup/diagram.hpp"
#include "scup/linalg.hpp"
#include "scup/springer.hpp"

namespace scup {

// [a : b] with the leftmost nonzero coordinate normalized to 1.
struct ProjParam {
  Scalar a = Scalar(1), b = Scalar(0);

  static ProjParam make(const Scalar& a, const Scalar& b);
  // "a:b" with rational or field-serialized coordinates.
  static ProjParam parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const ProjParam&, const ProjParam&) = default;
};

// One parameter per cup, ordered by cup left endpoint.
using ParamAssignment = std::vector<ProjParam>;
ParamAssignment parse_params(std::string_view text);
std::string format_params(const ParamAssignment& p);

// Builder cannot produce a flag at this parameter (type A greedy only).
struct DegenerateParameter : DomainError {
  explicit DegenerateParameter(const std::string& msg) : DomainError("degenerate_parameter", msg) {}
};

// Case II coordinate chart: U1 needs a != 0, U2 needs b != 0. Prefer falls
// back to the other chart when the preferred one is not available.
enum class Chart { U1, U2 };

struct BuildOptions {
  Chart prefer = Chart::U1;
};

Flag build_flag_D(const CupDiagram& d, const ParamAssignment& p, const BuildOptions& opt = {});
Flag build_flag_A(const CupDiagram& d, const ParamAssignment& p);
Flag build_flag(const CupDiagram& d, const ParamAssignment& p);

// The data of one reduction step at vertex 1 of a type D diagram with m >= 3.
struct Reduction {
  Case1Descriptor desc;
  int ell = 1;             // Omega reads F_{ell+i}; 2t in Case I, else 1
  CupDiagram b;            // Case I only
  CupDiagram c;            // target diagram on V_nu
  QuadIso Q;
  Chart chart = Chart::U1;  // Case II only
};

// For Case II the isotropic line W = <a e1 + b f1> must be supplied.
Reduction reduction_for(const CupDiagram& d, std::optional<ProjParam> line = std::nullopt,
                        Chart prefer = Chart::U1);

// F''_i = Q(F_{ell+i} / W). Throws DomainError("not_in_domain") unless W <= F_ell.
Flag omega(const Flag& f, const Reduction& r);
// Case I: F'_i = P(F_i) for i <= 2t, completed by perps in V_(2t,2t).
Flag pi_ab(const Flag& f, const TwoRowPartition& lam, int t);
// Case II: the line F_1 as a point of P^1.
ProjParam line_of(const Flag& f, const TwoRowPartition& lam);
// Case II: Omega in the chart U_j.
Flag phi_j(const Flag& f, const CupDiagram& d, Chart j);

// Inverse constructions.
Flag inverse_case_I(const CupDiagram& d, const Flag& fb, const Flag& fc);
Flag inverse_case_II(const CupDiagram& d, const ProjParam& line, const Flag& fc, Chart prefer);
Flag inverse_case_III(const CupDiagram& d, const Flag& fc);

// Deterministic source of small-height rationals (|num| <= 7, 1 <= den <= 7).
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed);
  mpq_class rational();
  ProjParam param();
  ParamAssignment assignment(int count);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

struct VerifyFailure {
  int sample = 0;
  std::string what;
  std::string params;
};

struct ComponentReport {
  CupDiagram diagram;
  int samples = 0;
  int parameters = 0;
  bool injectivity = true;
  std::vector<VerifyFailure> failures;
  // Successful samples only, when requested; flags[i] = build(assignments[i]).
  std::vector<Flag> flags;
  std::vector<ParamAssignment> assignments;
  bool ok() const { return failures.empty(); }
};

// Builder, Springer, isotropy, membership and single-coordinate injectivity.
ComponentReport verify_component(const CupDiagram& d, int samples, std::uint64_t seed,
                                 bool keep_flags = false);

// Exact reduction round trips on built flags (type D, m >= 3); returns failures.
std::vector<VerifyFailure> verify_round_trips(const CupDiagram& d, int samples,
                                              std::uint64_t seed);

// Sampled witness search: true iff some grid point of K_d1 lies in K_d2.
bool incidence_sampled(const CupDiagram& d1, const CupDiagram& d2, int grid, std::uint64_t seed);

// Components of one connected component of the matching type D fiber.
// Requires a valid type C two-row shape with k' >= 1.
long type_C_component_count(int n_prime, int k_prime);

}  // namespace scup
