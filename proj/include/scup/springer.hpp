// Flags, Springer-fiber predicates and the component membership relations.
#pragma once

#include <string>
#include <vector>

#include "scup/diagram.hpp"
#include "scup/linalg.hpp"

namespace scup {

// F[0] = 0 <= F[1] <= ... <= F[n] = V.
struct Flag {
  int n = 0;
  std::vector<Subspace> F;

  const Subspace& operator[](int i) const { return F.at(i); }
  bool is_complete_flag() const;
  bool is_rational() const;
  friend bool operator==(const Flag&, const Flag&) = default;
};

// F_0..F_m given (F_0 may be omitted); the rest is F_{n-i} = F_i^perp.
Flag complete_isotropic(std::vector<Subspace> lower, const BilinearForm& beta);

// Partitions of n whose parts j with (-1)^j = eps occur with even multiplicity.
std::vector<std::vector<int>> admissible_partitions(int n, int eps);

bool is_springer_flag(const Flag& f, const Matrix& x);
bool is_isotropic_flag(const Flag& f, const BilinearForm& beta);

struct RelationFailure {
  int vertex = 0;
  std::string rule;
};

enum class MembershipStatus { Member, NotMember, NotIsotropic, NotSpringer };
std::string to_string(MembershipStatus s);

struct MembershipReport {
  MembershipStatus status = MembershipStatus::Member;
  std::vector<RelationFailure> failures;
  bool ok() const { return status == MembershipStatus::Member; }
};

// Explicit span required at a ray vertex.
Subspace ray_subspace_A(const CupDiagram& d, int i);
Subspace ray_subspace_D(const CupDiagram& d, int i, bool marked);
// Coefficient s in f_{c+1} +- s e_{i-c} for partitions with n-k > k: 1 when
// m-k is odd, sqrt(-1) when m-k is even (the only isotropic choice).
Scalar ray_twist(const TwoRowPartition& lam);

MembershipReport check_membership_A(const Flag& f, const CupDiagram& d);
MembershipReport check_membership_D(const Flag& f, const CupDiagram& d);
MembershipReport check_membership(const Flag& f, const CupDiagram& d);

}  // namespace scup
