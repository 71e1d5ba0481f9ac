#pragma once

#include <json.hpp>

#include "qhaar/characters.hpp"

namespace qhaar {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const StandardTableau& t);

Json to_json(const SMatrix& m);
SMatrix smatrix_from_json(const Json& j);

Json to_json(const HeckeSymmetry& sym);  // d, parities, R, birank (P, C, D derived)
HeckeSymmetry symmetry_from_json(const Json& j);

Json to_json(const HeckeElement& x);
HeckeElement hecke_element_from_json(const Json& j);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

Json to_json(const FreeElement& x);
FreeElement free_element_from_json(const Json& j);

Json to_json(const KPoint& pt);
KPoint kpoint_from_json(const Json& j);

}  // namespace qhaar
