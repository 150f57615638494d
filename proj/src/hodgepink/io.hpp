#pragma once

#include <json.hpp>

#include "hodgepink/admissibility.hpp"
#include "hodgepink/unit_disc.hpp"

namespace hodgepink {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json series_to_json(const TruncatedLaurent& s);
TruncatedLaurent series_from_json(const Json& j, Var v);

Json module_to_json(const PhiNModule& m);
PhiNModule module_from_json(const Json& j);

Json lattice_to_json(const HodgePinkLattice& q);
HodgePinkLattice lattice_from_json(const Json& j);

Json filtration_to_json(const KFiltration& f);
KFiltration filtration_from_json(const Json& j);

Json cocharacter_to_json(const Cocharacter& mu);
Cocharacter cocharacter_from_json(const Json& j);
GaloisAction galois_from_json(const Json& j, const std::vector<std::string>& labels);

USeriesContext useries_from_json(const Json& j);

Json ratmatrix_to_json(const RatMatrix& m);
RatMatrix ratmatrix_from_json(const Json& j);

Json slopes_to_json(const SlopeData& s);

} // namespace hodgepink
