#pragma once

#include <json.hpp>

#include "edgeideal/betti.hpp"
#include "edgeideal/polynomial.hpp"
#include "edgeideal/sequences.hpp"
#include "edgeideal/verify.hpp"

namespace edgeideal {

using Json = nlohmann::ordered_json;

/// {"terms":[{"c":<int>,"e":[<int>,...]}]}, terms in descending order.
/// Coefficients are written as their representative in [0, p).
Json to_json(const Polynomial& f);
/// Inverse of to_json(Polynomial). Throws ParseError on malformed input or
/// exponent vectors of the wrong length.
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring);

/// {"graph":<spec>,"case":<tag>,"length":N,"polys":[...]}
Json to_json(const GeneratorSequence& seq);

/// [{"i":..,"d":..,"dim":..}, ...] in (i, d) order.
Json to_json(const BettiTable& table);

/// Report schema:
///   {"graph","case","fields","forward","reverse":[{"edge","ok"}],"length",
///    "pd_formula","pd_homology","verdict","stats"}
/// Wall-clock fields are written only when `with_timing` is set.
Json to_json(const VerificationReport& report, bool with_timing = true);

}  // namespace edgeideal
