#ifndef HILB_JSON_IO_HPP
#define HILB_JSON_IO_HPP

#include <string>

#include "invariants.hpp"
#include "presentations.hpp"

namespace hilb {

// Fixed wire formats:
//   presentation   {"d":int,"n":int,"k":int,"f":[int...],"c":int,"g":[int...]}
//   representation {"terms":[{"i":int,"j":int,"a":int},...]}  (i desc, j asc)
//   report         {"dim","numerator","hdepth","hprojdim","hreg",
//                   "delta_d_tilde","deg_series","width_k"}
// Integers that overflow 64 bits are emitted as decimal strings.

std::string presentation_to_json(const BoundaryPresentation& p);
BoundaryPresentation presentation_from_json(const std::string& text);

std::string representation_to_json(const PositiveRepresentation& rep);
PositiveRepresentation representation_from_json(const std::string& text);

std::string report_to_json(const InvariantReport& r);

}  // namespace hilb

#endif
