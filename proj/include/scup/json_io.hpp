// JSON forms of diagrams, subspaces, flags and reports.
#pragma once

#include <json.hpp>

#include "scup/components.hpp"
#include "scup/incidence.hpp"

namespace scup {

using json = nlohmann::json;

// Malformed JSON input: wrong shape, bad scalar, bad dimensions.
struct JsonFormatError : DomainError {
  explicit JsonFormatError(const std::string& msg) : DomainError("invalid_json", msg) {}
};

json diagram_to_json(const CupDiagram& d);
CupDiagram diagram_from_json(const json& j);  // validates

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

// {ambient, subspaces: [F_1 .. F_{n-1}]}; F_0 and F_n are implicit.
json flag_to_json(const Flag& f);
Flag flag_from_json(const json& j);

json membership_to_json(const MembershipReport& r);
json report_to_json(const ComponentReport& r);
json locus_to_json(const Locus& l);
json graph_to_json(const IncidenceGraph& g);

}  // namespace scup
