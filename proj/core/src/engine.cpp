#include "far/engine.hpp"

#include <algorithm>
#include <cmath>

#include "far/errors.hpp"

namespace far {

Direction case_direction(int case_id) {
  if (case_id >= 1 && case_id <= 5) return Direction::fmp;
  if (case_id >= 6 && case_id <= 10) return Direction::fmt;
  throw UnsupportedCombination("case id must be in 1..10, got " +
                               std::to_string(case_id));
}

double edm_distance(const MembershipVector& p, const MembershipVector& q) {
  if (p.size() != q.size())
    throw LengthMismatch(p.size(), q.size(), "distance arguments");
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double d = p[k] - q[k];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(p.size()));
}

std::vector<int> sign_vector(const MembershipVector& premise_ext,
                             const MembershipVector& base_ext, SignForm form) {
  if (premise_ext.size() != base_ext.size())
    throw LengthMismatch(premise_ext.size(), base_ext.size(),
                         "sign-vector arguments");
  std::vector<int> out(premise_ext.size());
  for (std::size_t k = 0; k < premise_ext.size(); ++k) {
    const double dif = premise_ext[k] - base_ext[k];
    if (std::fabs(dif) <= kGradeTolerance) {
      // Grades this close are the same grade; complementing and resampling
      // leave residue at that scale on positions that are equal by
      // construction.
      out[k] = form == SignForm::three_valued ? 0 : 1;
    } else {
      out[k] = dif > 0.0 ? 1 : -1;
    }
  }
  return out;
}

std::vector<double> vectorial_dm(double edm, const std::vector<int>& sign) {
  std::vector<double> out(sign.size());
  for (std::size_t k = 0; k < sign.size(); ++k)
    out[k] = edm * static_cast<double>(sign[k]);
  return out;
}

std::vector<double> quasi_quasi(const MembershipVector& base_ext,
                                const std::vector<double>& c, int case_id,
                                const std::optional<MembershipVector>& st_ext) {
  if (base_ext.size() != c.size())
    throw LengthMismatch(base_ext.size(), c.size(),
                         "base and tilt sequences");
  const bool tilted = case_id == 5 || case_id == 10;
  if (tilted) {
    if (!st_ext) throw MissingTiltVector(case_id);
    if (st_ext->size() != c.size())
      throw LengthMismatch(st_ext->size(), c.size(),
                           "tilted base and tilt sequences");
  }
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    double base;
    if (tilted)
      base = (*st_ext)[k];
    else if (case_id == 4)
      base = 1.0 - base_ext[k];
    else
      base = base_ext[k];
    out[k] = base + c[k];
  }
  return out;
}

namespace {

// Shared trunk of both directions. `ant` and `cons` are the vectors playing
// the antecedent and consequent roles (for the backward direction these are
// the complements of the rule's consequent and antecedent respectively);
// `premise` plays the antecedent-side premise role and is extended here
// unless it already lives on the common grid.
ReasoningTrace run_pipeline(const MembershipVector& ant,
                            const MembershipVector& cons,
                            const MembershipVector& premise,
                            bool premise_on_grid, int case_id, SignForm form,
                            const std::optional<MembershipVector>& st) {
  validate_membership(ant);
  validate_membership(cons);
  validate_membership(premise);

  ReasoningTrace trace;
  trace.plan = extension_factor(ant.size(), cons.size());

  trace.extended_antecedent = extend_vector(ant, trace.plan.factor_a);
  if (premise_on_grid) {
    if (premise.size() != trace.plan.L)
      throw LengthMismatch(premise.size(), trace.plan.L,
                           "common-grid premise and plan");
    trace.extended_premise = premise;
  } else {
    if (premise.size() != ant.size())
      throw LengthMismatch(premise.size(), ant.size(),
                           "premise and antecedent-side universe");
    trace.extended_premise = extend_vector(premise, trace.plan.factor_a);
  }
  trace.extended_consequent = extend_vector(cons, trace.plan.factor_b);

  std::optional<MembershipVector> st_ext;
  if (case_id == 5 || case_id == 10) {
    if (!st) throw MissingTiltVector(case_id);
    if (st->size() != cons.size())
      throw LengthMismatch(st->size(), cons.size(),
                           "tilted vector and conclusion universe");
    validate_membership(*st);
    st_ext = extend_vector(*st, trace.plan.factor_b);
  }

  trace.edm = edm_distance(trace.extended_premise, trace.extended_antecedent);
  trace.sign = sign_vector(trace.extended_premise, trace.extended_antecedent,
                           form);
  trace.vectorial_dm = vectorial_dm(trace.edm, trace.sign);
  trace.quasi_quasi = quasi_quasi(trace.extended_consequent,
                                  trace.vectorial_dm, case_id, st_ext);
  trace.quasi = downsample(trace.quasi_quasi, cons.size(),
                           trace.plan.factor_b);
  trace.eta = *std::max_element(trace.quasi.begin(), trace.quasi.end());
  trace.xi = *std::min_element(trace.quasi.begin(), trace.quasi.end());
  trace.conclusion = min_max_normalize(trace.quasi);
  return trace;
}

void require_case_range(int case_id, int lo, int hi) {
  if (case_id < lo || case_id > hi)
    throw UnsupportedCombination("case " + std::to_string(case_id) +
                                 " is outside " + std::to_string(lo) + ".." +
                                 std::to_string(hi) + " for this direction");
}

}  // namespace

ReasoningTrace fmp_edm(const Rule& rule, const MembershipVector& premise,
                       int case_id, SignForm form,
                       const std::optional<MembershipVector>& st_consequent) {
  require_case_range(case_id, 1, 5);
  return run_pipeline(rule.antecedent, rule.consequent, premise, false,
                      case_id, form, st_consequent);
}

ReasoningTrace fmt_edm(const Rule& rule, const MembershipVector& premise,
                       int case_id, SignForm form,
                       const std::optional<MembershipVector>& st_consequent) {
  require_case_range(case_id, 6, 10);
  return run_pipeline(complement(rule.consequent), complement(rule.antecedent),
                      premise, false, case_id, form, st_consequent);
}

ReasoningTrace fmp_edm_extended(const Rule& rule,
                                const MembershipVector& premise_ext,
                                int case_id, SignForm form,
                                const std::optional<MembershipVector>&
                                    st_consequent) {
  require_case_range(case_id, 1, 5);
  return run_pipeline(rule.antecedent, rule.consequent, premise_ext, true,
                      case_id, form, st_consequent);
}

ReasoningTrace fmt_edm_extended(const Rule& rule,
                                const MembershipVector& premise_ext,
                                int case_id, SignForm form,
                                const std::optional<MembershipVector>&
                                    st_consequent) {
  require_case_range(case_id, 6, 10);
  return run_pipeline(complement(rule.consequent), complement(rule.antecedent),
                      premise_ext, true, case_id, form, st_consequent);
}

}  // namespace far
