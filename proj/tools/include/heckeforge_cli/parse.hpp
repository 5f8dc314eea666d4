#pragma once

#include <string_view>

#include "heckeforge/affine_weyl.hpp"

// Command-line spellings.  All throw Error(ParseError).
namespace heckeforge::cli {

// "1,-2", or coroot shorthand: "a^", "2a1^+a2^", "-a2^".
Cocharacter parse_cocharacter(const RootDatum& rd, std::string_view text);

// '*'-separated factors, each "e", "s<label>", "t(<cocharacter>)" or
// "<cocharacter>:<1-based word>".
ExtAffineElement parse_element(const AffineWeylGroup& g, std::string_view text);

// "alcove" / "a0", "hyperspecial" / "f0", or comma-separated labels.
Facet parse_facet(const AffineWeylGroup& g, std::string_view text);

}  // namespace heckeforge::cli
