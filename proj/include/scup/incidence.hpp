// Exact intersection of a one-cup component K_d1 (a P^1) with any K_d2.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scup/binary_form.hpp"
#include "scup/components.hpp"

namespace scup {

// Subset of the parameter line of K_d1, in the coordinates [a:b] of its cup.
struct Locus {
  enum class Kind { Empty, All, Points };
  Kind kind = Kind::Empty;
  // Points: squarefree form whose zeros are the locus.
  // All: squarefree form whose zeros are the only excluded points (1 if none).
  BinaryForm form = BinaryForm::one();

  bool empty() const { return kind == Kind::Empty; }
  std::string to_string() const;
};

// Requires d1 with exactly one cup and d2 of the same kind and shape.
Locus incidence_exact_P1(const CupDiagram& d1, const CupDiagram& d2);

struct IncidenceGraph {
  std::vector<CupDiagram> nodes;
  // i < j with K_i and K_j meeting; loci[e] is K_i's parameter locus.
  std::vector<std::pair<int, int>> edges;
  std::vector<Locus> loci;

  std::vector<std::vector<int>> connected_components() const;
  std::string to_dot(const std::vector<std::string>& labels = {}) const;
};

// All single-cup diagrams of the given shape; throws if some has more cups.
IncidenceGraph incidence_graph(const std::vector<CupDiagram>& diagrams);

}  // namespace scup
