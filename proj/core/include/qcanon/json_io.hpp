#pragma once

#include "qcanon/algebra.hpp"
#include "qcanon/canonical.hpp"

#include <string>

namespace qcanon {

/// JSON forms. Polynomials are arrays of [exponent, coefficient-as-string]
/// pairs in ascending exponent order, e.g. [[-2,"1"],[0,"3"]] for q^-2 + 3.
/// Elements are {"n":…, "basis":"plain"|"modified"|"canonical", "terms":
/// [{"matrix":[[…]…], "coeff":…}…]} with terms sorted by decreasing stat then
/// lex. Serialization is canonical: equal values give identical bytes.
std::string to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

std::string to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const std::string& text);

/// Block dump {"ro":[…],"co":[…],"elements":[{"top":…,"coeffs":[{"matrix":…,
/// "h":…}…]}…]} used for golden files and the on-disk block cache.
std::string to_json(const SolvedBlock& b);
SolvedBlock block_from_json(const std::string& text);

}  // namespace qcanon
