#pragma once

#include "hyperconv/arrangement.hpp"

namespace hyperconv {

PolarizedArrangement gale_dual(const PolarizedArrangement& V);

Arrangement alt_map(const Arrangement& V);
PolarizedArrangement alt_map(const PolarizedArrangement& V);
PolarizedArrangement polarization_reverse(const PolarizedArrangement& V);
// p(alt(gale_dual(V))) = (alt V^perp, -alt xi, alt eta)
PolarizedArrangement alt_gale(const PolarizedArrangement& V);

// i is 1-based throughout.
Arrangement delete_hyperplane(const Arrangement& V, std::size_t i);
PolarizedArrangement delete_hyperplane(const PolarizedArrangement& V, std::size_t i);
Arrangement restrict_hyperplane(const Arrangement& V, std::size_t i);
PolarizedArrangement restrict_hyperplane(const PolarizedArrangement& V, std::size_t i);
Arrangement signed_restrict(const Arrangement& V, std::size_t i);
PolarizedArrangement signed_restrict(const PolarizedArrangement& V, std::size_t i);

// (V, -eta, -xi); sends region alpha to -alpha.
PolarizedArrangement global_negation(const PolarizedArrangement& V);

// Sign sequence helpers matching the insertion/removal maps on idempotents.
SignSequence insert_sign(const SignSequence& a, std::size_t i, char s);
SignSequence remove_sign(const SignSequence& a, std::size_t i);

}  // namespace hyperconv
