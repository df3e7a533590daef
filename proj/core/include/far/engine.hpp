#pragma once

#include <optional>
#include <vector>

#include "far/grid.hpp"
#include "far/membership.hpp"

namespace far {

// How zero differences between premise and reference enter the sign vector:
// three_valued keeps them at 0, two_valued folds them into +1.
enum class SignForm { three_valued, two_valued };

// Inference direction. Cases 1-5 run forward (premise on the antecedent
// universe, conclusion on the consequent universe); cases 6-10 run backward
// on the complemented, reversed rule.
enum class Direction { fmp, fmt };

// Returns Direction::fmp for cases 1-5, Direction::fmt for cases 6-10;
// throws UnsupportedCombination for anything else.
Direction case_direction(int case_id);

// Full record of one extended-distance inference.
struct ReasoningTrace {
  ExtensionPlan plan;
  // Forward: extended antecedent / premise / consequent. Backward: the same
  // roles on the reversed rule, i.e. extended (1 - consequent) / premise /
  // (1 - antecedent).
  MembershipVector extended_antecedent;
  MembershipVector extended_premise;
  MembershipVector extended_consequent;
  double edm = 0.0;               // scalar distance on the common grid
  std::vector<int> sign;          // per-position sign of premise - reference
  std::vector<double> vectorial_dm;   // edm * sign, elementwise
  std::vector<double> quasi_quasi;    // base + vectorial_dm on the common grid
  std::vector<double> quasi;          // quasi_quasi read off at the anchors
  double eta = 0.0;               // max of quasi
  double xi = 0.0;                // min of quasi
  MembershipVector conclusion;    // min-max normalized quasi
};

// Root-mean-square distance between two equal-length vectors:
// sqrt(sum((p - q)^2) / L). Throws LengthMismatch.
double edm_distance(const MembershipVector& p, const MembershipVector& q);

// Per-position sign of premise_ext - base_ext. Differences within
// kGradeTolerance of zero count as zero (three_valued: 0, two_valued: +1);
// otherwise the sign of the difference. Throws LengthMismatch.
std::vector<int> sign_vector(const MembershipVector& premise_ext,
                             const MembershipVector& base_ext, SignForm form);

// Elementwise product of the scalar distance with a sign vector.
std::vector<double> vectorial_dm(double edm, const std::vector<int>& sign);

// Adds the tilt vector to the case's base on the common grid:
//   cases 1-3 and 6-9: base_ext + c      (consequent-side base)
//   case 4:            (1 - base_ext) + c
//   cases 5 and 10:    st_ext + c        (slightly-tilted base; required)
// Values may leave [0, 1]; nothing is clipped here. Throws MissingTiltVector
// when case 5/10 lacks st_ext, LengthMismatch on unequal lengths.
std::vector<double> quasi_quasi(const MembershipVector& base_ext,
                                const std::vector<double>& c, int case_id,
                                const std::optional<MembershipVector>& st_ext);

// Forward inference for cases 1-5. The premise lives on the antecedent
// universe (length u) and is extended internally. st_consequent (unextended,
// length v) is required for case 5.
ReasoningTrace fmp_edm(const Rule& rule, const MembershipVector& premise,
                       int case_id, SignForm form,
                       const std::optional<MembershipVector>& st_consequent =
                           std::nullopt);

// Backward inference for cases 6-10: the identical pipeline run on the
// reversed rule, with antecedent role 1 - consequent and consequent role
// 1 - antecedent. The premise lives on the consequent universe (length v);
// the conclusion has length u. st_consequent (unextended, length u) is
// required for case 10.
ReasoningTrace fmt_edm(const Rule& rule, const MembershipVector& premise,
                       int case_id, SignForm form,
                       const std::optional<MembershipVector>& st_consequent =
                           std::nullopt);

// Same pipelines for premises that already live on the common grid (length
// L). The experiment suites use these: their hedges are applied after
// extension, and hedging does not commute with interpolation.
ReasoningTrace fmp_edm_extended(const Rule& rule,
                                const MembershipVector& premise_ext,
                                int case_id, SignForm form,
                                const std::optional<MembershipVector>&
                                    st_consequent = std::nullopt);
ReasoningTrace fmt_edm_extended(const Rule& rule,
                                const MembershipVector& premise_ext,
                                int case_id, SignForm form,
                                const std::optional<MembershipVector>&
                                    st_consequent = std::nullopt);

}  // namespace far
