#include "far/membership.hpp"

#include <cmath>

namespace far {

void validate_membership(const MembershipVector& v) {
  if (v.empty()) throw Empty();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double g = v[i];
    if (std::isnan(g) || g < 0.0 || g > 1.0) throw OutOfRange(i, g);
  }
}

void validate_rule(const Rule& rule) {
  validate_membership(rule.antecedent);
  validate_membership(rule.consequent);
}

MembershipVector complement(const MembershipVector& v) {
  MembershipVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = 1.0 - v[i];
  return out;
}

MembershipVector very(const MembershipVector& v) {
  MembershipVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * v[i];
  return out;
}

MembershipVector more_or_less(const MembershipVector& v) {
  MembershipVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::sqrt(v[i]);
  return out;
}

MembershipVector apply_hedge(const Hedge& hedge, const MembershipVector& v) {
  switch (hedge.kind) {
    case Hedge::Kind::identity:
      return v;
    case Hedge::Kind::very:
      return very(v);
    case Hedge::Kind::more_or_less:
      return more_or_less(v);
    case Hedge::Kind::complement:
      return complement(v);
    case Hedge::Kind::custom: {
      if (!hedge.custom_vector)
        throw UnknownHedge("custom hedge without a vector");
      if (hedge.custom_vector->size() != v.size())
        throw LengthMismatch(hedge.custom_vector->size(), v.size(),
                             "custom hedge vector and input");
      return *hedge.custom_vector;
    }
  }
  throw UnknownHedge("unrecognized hedge kind");
}

Hedge hedge_from_name(const std::string& name) {
  if (name == "identity") return Hedge::identity();
  if (name == "very") return Hedge::very();
  if (name == "more_or_less") return Hedge::more_or_less();
  if (name == "not") return Hedge::complement();
  if (name == "custom") return Hedge{Hedge::Kind::custom, std::nullopt};
  throw UnknownHedge(name);
}

std::string hedge_name(Hedge::Kind kind) {
  switch (kind) {
    case Hedge::Kind::identity:
      return "identity";
    case Hedge::Kind::very:
      return "very";
    case Hedge::Kind::more_or_less:
      return "more_or_less";
    case Hedge::Kind::complement:
      return "not";
    case Hedge::Kind::custom:
      return "custom";
  }
  return "unknown";
}

bool grades_equal(double a, double b) {
  return std::fabs(a - b) <= kGradeTolerance;
}

}  // namespace far
