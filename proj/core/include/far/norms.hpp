#pragma once

#include <string>

namespace far {

// The four residuated t-norm / implication pairs used by the comparison
// methods. Each implication is the residuum of its t-norm:
//   implication(a, b) = sup { c : tnorm(a, c) <= b }.
enum class ResiduatedPair { lukasiewicz, godel, r0, goguen };

double tnorm(ResiduatedPair pair, double a, double b);
double implication(ResiduatedPair pair, double a, double b);

// Strict-inequality variant of the Goedel residuum: 1 when a < b, else b.
// Not residuated at a == b; kept only because a handful of recorded reference
// rows are reproducible solely under this reading (see the reference corpus
// dispute notes).
double strict_godel_implication(double a, double b);

// Name round-trip used by configuration parsing and report rendering.
// Recognized names: lukasiewicz, godel, r0, goguen.
// Throws UnsupportedCombination for anything else.
ResiduatedPair pair_from_name(const std::string& name);
std::string pair_name(ResiduatedPair pair);

}  // namespace far
