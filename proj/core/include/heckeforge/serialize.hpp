#pragma once

#include <map>

#include <nlohmann/json.hpp>

#include "heckeforge/central_map.hpp"
#include "heckeforge/dual_weights.hpp"
#include "heckeforge/hecke.hpp"
#include "heckeforge/parahoric.hpp"
#include "heckeforge/root_datum.hpp"

// JSON encodings.  Readers throw Error(ParseError) on malformed input.
namespace heckeforge::json {

using nlohmann::json;

json cocharacter(const Cocharacter& c);
Cocharacter cocharacter(const json& j, int rank);

// {"-1": "c", "0": "c"}; integers as decimal strings.
json poly(const LaurentPoly& p);
LaurentPoly poly(const json& j);

// {"lam": [...], "w": [1-based simple reflection word]}
json element(const AffineWeylGroup& g, const ExtAffineElement& x);
ExtAffineElement element(const AffineWeylGroup& g, const json& j);

json hecke(const HeckeElement& h);
HeckeElement hecke(const AffineWeylPtr& g, const json& j);

json facet(const Facet& f);
Facet facet(const json& j);

json root_datum(const RootDatum& rd);
RootDatumSpec root_datum_spec(const json& j);

json character(const Character& ch);
json multiplicities(const std::map<Cocharacter, Integer>& m);
json expansion(const CenterExpansion& e);
json coset_expansion(const AffineWeylGroup& g, const CosetExpansion& e);

json structure_table(const ParahoricAlgebra& alg, const std::vector<StructureEntry>& entries);
// Re-reads a table written by structure_table.
std::vector<StructureEntry> structure_table(const ParahoricAlgebra& alg, const json& j);

json report(const VerifyReport& r);

}  // namespace heckeforge::json
