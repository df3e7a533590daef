#pragma once

#include <cstddef>
#include <vector>

#include "far/membership.hpp"

namespace far {

// How two universes of sizes u and v are brought onto one common grid of
// length L = lcm(u, v). Each original point i (1-based) of a length-m vector
// becomes the anchor at position i * (L/m) of the extended vector.
struct ExtensionPlan {
  std::size_t u = 0;         // antecedent-side length
  std::size_t v = 0;         // consequent-side length
  std::size_t L = 0;         // common grid length, lcm(u, v)
  std::size_t factor_a = 0;  // L / u
  std::size_t factor_b = 0;  // L / v
  // Multiplicity index: the factor of the smaller side when one length
  // divides the other (max of the two factors in general).
  std::size_t n = 0;
};

// Computes the common-grid plan for two universe sizes (both >= 1).
ExtensionPlan extension_factor(std::size_t u, std::size_t v);

// Resamples a vector onto the grid refined by `factor`. The first `factor`
// positions repeat the first grade; every original grade i lands exactly
// (bitwise) on anchor position i * factor (1-based); positions between
// consecutive anchors are linearly interpolated.
MembershipVector extend_vector(const MembershipVector& v, std::size_t factor);

// Reads a length-out_len vector off the anchor positions j * factor (1-based)
// of an extended sequence. Requires ext.size() == out_len * factor
// (LengthMismatch otherwise). Works on arbitrary real sequences because the
// intermediate reasoning results may leave [0, 1].
std::vector<double> downsample(const std::vector<double>& ext,
                               std::size_t out_len, std::size_t factor);

// Affinely rescales a nonempty sequence so its minimum maps to 0 and its
// maximum to 1. When all values are equal the input is clamped elementwise to
// [0, 1] instead.
MembershipVector min_max_normalize(const std::vector<double>& quasi);

}  // namespace far
