#pragma once

#include <functional>
#include <string>

#include "far/engine.hpp"
#include "far/membership.hpp"
#include "far/norms.hpp"

namespace far {

// The five method families compared by the benchmark suite.
enum class Family { edm, cri, tip, qip, aars };

// The two output-modification forms of the similarity-based method.
enum class AarsForm { more_or_less, reduction };

// Identifies one concrete method variant. Exactly one of the operator fields
// is meaningful, selected by the family: `pair` for cri/tip/qip, `form` for
// edm, `aars` for aars.
struct MethodId {
  Family family = Family::edm;
  ResiduatedPair pair = ResiduatedPair::lukasiewicz;
  SignForm form = SignForm::three_valued;
  AarsForm aars = AarsForm::reduction;

  bool operator==(const MethodId&) const = default;
};

std::string family_name(Family family);
Family family_from_name(const std::string& name);  // throws UnsupportedCombination
std::string aars_form_name(AarsForm form);
std::string sign_form_name(SignForm form);
// The operator half of a method label: pair name, sign-form name, or
// modification-form name depending on the family.
std::string operator_label(const MethodId& method);

// --- Compositional methods on the original universes ------------------------
// All take the raw rule and a raw premise (length u for forward, v for
// backward) and return the conclusion on the opposite universe.

// Forward sup-(t-norm) composition: B*[j] = max_i t(premise[i], I(A[i], B[j])).
MembershipVector cri_fmp(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair);

// Backward composition with the premise substituted into the relation:
// A*[i] = max_j t(premise[j], I(A[i], premise[j])). (The formula with
// I(A[i], B[j]) instead is irreconcilable with this method's recorded
// backward conclusions; see the reference corpus notes.)
MembershipVector cri_fmt(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair);

// Forward triple-implication solution; computationally identical to cri_fmp
// for these residuated pairs but reported separately by the benchmark tables.
MembershipVector tip_fmp(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair);

// Backward triple-implication solution:
// A*[i] = min_j I(I(A[i], B[j]), premise[j]).
MembershipVector tip_fmt(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair);

// Forward quintuple-implication solution:
// B*[j] = max_i t(t(premise[i], I(premise[i], A[i])), I(A[i], B[j])).
MembershipVector qip_fmp(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair);

// Backward quintuple-implication solution:
// A*[i] = max_j t(t(A[i], I(A[i], B[j])), I(B[j], premise[j])).
MembershipVector qip_fmt(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair);

// --- Similarity-based method -------------------------------------------------

// S = 1 / (1 + rms(p - q)); equals 1 exactly iff p == q. Throws
// LengthMismatch.
double aars_similarity(const MembershipVector& p, const MembershipVector& q);

// Applies a similarity to a basis vector: more_or_less -> min(1, basis/S),
// reduction -> basis * S.
MembershipVector aars_apply(const MembershipVector& basis, double similarity,
                            AarsForm form);

// Forward: S measured between premise and antecedent, applied to the
// consequent.
MembershipVector aars_fmp(const Rule& rule, const MembershipVector& premise,
                          AarsForm form);

// Backward: S measured between premise and the consequent, applied to the
// antecedent. (The pairing is fixed empirically: it is the one that returns
// the antecedent exactly, at S = 1, when the premise equals the consequent;
// reports carry this choice in their metadata.)
MembershipVector aars_fmt(const Rule& rule, const MembershipVector& premise,
                          AarsForm form);

// --- Common-grid harness -----------------------------------------------------
// The benchmark tables evaluate every method on the common grid: rule sides
// are extended, the premise is formed there (hedges after extension), the
// compositional formulas run over the extended index sets, and the conclusion
// is read off at the anchor positions of the output universe.

MembershipVector cri_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair);
MembershipVector cri_fmt_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair);
MembershipVector tip_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair);
MembershipVector tip_fmt_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair);
MembershipVector qip_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair);
MembershipVector qip_fmt_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair);
MembershipVector aars_fmp_on_grid(const Rule& rule,
                                  const MembershipVector& premise_ext,
                                  AarsForm form);
MembershipVector aars_fmt_on_grid(const Rule& rule,
                                  const MembershipVector& premise_ext,
                                  AarsForm form);

// Scalar connectives as free parameters, for studying alternative implication
// readings (for example the strict-inequality Goedel residuum) against the
// recorded reference rows.
using ScalarOp = std::function<double(double, double)>;
MembershipVector cri_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 const ScalarOp& tnorm_fn,
                                 const ScalarOp& impl_fn);
MembershipVector tip_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 const ScalarOp& tnorm_fn,
                                 const ScalarOp& impl_fn);

}  // namespace far
