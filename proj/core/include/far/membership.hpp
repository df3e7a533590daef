#pragma once

#include <optional>
#include <string>
#include <vector>

#include "far/errors.hpp"

namespace far {

// A discrete fuzzy set: one grade in [0, 1] per point of its universe.
using MembershipVector = std::vector<double>;

// Absolute tolerance for grade equality throughout the library. Differences at
// or below this magnitude are treated as zero (they are floating-point noise
// from complementing / resampling, two orders of magnitude below the smallest
// meaningful grade step used anywhere in the corpus).
inline constexpr double kGradeTolerance = 1e-9;

// A linguistic modifier applied elementwise to a membership vector.
struct Hedge {
  // "complement" is the hedge spelled "not" in configuration files; C++
  // reserves that spelling.
  enum class Kind { identity, very, more_or_less, complement, custom };

  Kind kind = Kind::identity;
  // Only meaningful for Kind::custom: the premise vector itself.
  std::optional<MembershipVector> custom_vector;

  static Hedge identity() { return {Kind::identity, std::nullopt}; }
  static Hedge very() { return {Kind::very, std::nullopt}; }
  static Hedge more_or_less() { return {Kind::more_or_less, std::nullopt}; }
  static Hedge complement() { return {Kind::complement, std::nullopt}; }
  static Hedge custom(MembershipVector v) { return {Kind::custom, std::move(v)}; }
};

// A single if-then rule between two (possibly different) universes.
struct Rule {
  MembershipVector antecedent;  // length u
  MembershipVector consequent;  // length v
};

// Throws Empty when v has no elements, OutOfRange at the first grade that is
// NaN or outside [0, 1]. Grades are never clamped.
void validate_membership(const MembershipVector& v);

// Validates both sides of a rule.
void validate_rule(const Rule& rule);

// Elementwise hedges.
MembershipVector complement(const MembershipVector& v);    // 1 - g
MembershipVector very(const MembershipVector& v);          // g^2
MembershipVector more_or_less(const MembershipVector& v);  // sqrt(g)

// Applies a hedge to a vector. For Kind::custom the stored vector is returned
// and must have the same length as the input (LengthMismatch otherwise).
MembershipVector apply_hedge(const Hedge& hedge, const MembershipVector& v);

// Name round-trip used by configuration parsing and report rendering.
// Recognized names: identity, very, more_or_less, not, custom.
Hedge hedge_from_name(const std::string& name);              // throws UnknownHedge
std::string hedge_name(Hedge::Kind kind);

// True when |a - b| <= kGradeTolerance.
bool grades_equal(double a, double b);

}  // namespace far
