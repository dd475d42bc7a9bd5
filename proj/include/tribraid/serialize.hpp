#pragma once

#include <json.hpp>

#include "tribraid/classify.hpp"
#include "tribraid/conjugacy.hpp"
#include "tribraid/laurent.hpp"
#include "tribraid/normal_form.hpp"

namespace tribraid {

using Json = nlohmann::ordered_json;

Json to_json(const NormalForm& nf);             // {"power": q, "tail": [[subscript, exponent], ...]}
Json to_json(const XuSymbol& s);                // {"power": m, "exponents": [...]}
Json to_json(const FlypeTriple& t);             // {"u":..,"v":..,"w":..,"epsilon":..}
Json to_json(const LinkClassification& c);
Json to_json(const Invertibility& inv);
Json to_json(const TransversalPair& tp);
Json to_json(const BraidIndex& bi);

/// [[2*exponent, coefficient], ...] in descending order of exponent.
Json polynomial_to_json(const LaurentPoly& p);

}  // namespace tribraid
