#include "far/norms.hpp"

#include <algorithm>

#include "far/errors.hpp"

namespace far {

double tnorm(ResiduatedPair pair, double a, double b) {
  switch (pair) {
    case ResiduatedPair::lukasiewicz:
      return std::max(0.0, a + b - 1.0);
    case ResiduatedPair::godel:
      return std::min(a, b);
    case ResiduatedPair::r0:
      return a + b > 1.0 ? std::min(a, b) : 0.0;
    case ResiduatedPair::goguen:
      return a * b;
  }
  throw UnsupportedCombination("unrecognized residuated pair");
}

double implication(ResiduatedPair pair, double a, double b) {
  switch (pair) {
    case ResiduatedPair::lukasiewicz:
      return std::min(1.0, 1.0 - a + b);
    case ResiduatedPair::godel:
      return a <= b ? 1.0 : b;
    case ResiduatedPair::r0:
      return a <= b ? 1.0 : std::max(1.0 - a, b);
    case ResiduatedPair::goguen:
      return a <= b ? 1.0 : b / a;
  }
  throw UnsupportedCombination("unrecognized residuated pair");
}

double strict_godel_implication(double a, double b) {
  return a < b ? 1.0 : b;
}

ResiduatedPair pair_from_name(const std::string& name) {
  if (name == "lukasiewicz") return ResiduatedPair::lukasiewicz;
  if (name == "godel") return ResiduatedPair::godel;
  if (name == "r0") return ResiduatedPair::r0;
  if (name == "goguen") return ResiduatedPair::goguen;
  throw UnsupportedCombination("unknown residuated pair: \"" + name + "\"");
}

std::string pair_name(ResiduatedPair pair) {
  switch (pair) {
    case ResiduatedPair::lukasiewicz:
      return "lukasiewicz";
    case ResiduatedPair::godel:
      return "godel";
    case ResiduatedPair::r0:
      return "r0";
    case ResiduatedPair::goguen:
      return "goguen";
  }
  return "unknown";
}

}  // namespace far
