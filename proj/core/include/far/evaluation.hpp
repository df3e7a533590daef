#pragma once

#include <optional>
#include <string>
#include <vector>

#include "far/baselines.hpp"
#include "far/engine.hpp"
#include "far/membership.hpp"

namespace far {

// One benchmark premise: the case number, the hedge it realizes, the premise
// vector on the common grid, and the target conclusion on the output
// universe. Hedges are applied after extension because hedging does not
// commute with interpolation.
struct PremiseCase {
  int case_id = 1;
  Hedge hedge;
  MembershipVector premise;   // on the common grid (length L)
  MembershipVector expected;  // on the output universe (v forward, u backward)
};

// One scored method x case cell.
struct RpcfRecord {
  MethodId method;
  PremiseCase premise_case;
  MembershipVector conclusion;
  double rpcf_percent = 0.0;  // in [0, 100]
};

// Per-method forward/backward/total averages over a suite's records.
struct MethodAverages {
  MethodId method;
  double fmp_avg = 0.0;
  double fmt_avg = 0.0;
  double total_avg = 0.0;
};

// Family-level summary row: operator variants of one family averaged
// together (the comprehensive comparison table reports methods at this
// granularity).
struct FamilyAverages {
  Family family = Family::edm;
  double fmp_avg = 0.0;
  double fmt_avg = 0.0;
  double total_avg = 0.0;
};

// Wall-clock measurements for one method across suite repetitions.
struct TimingRow {
  MethodId method;
  std::vector<double> repetitions_ms;
  double mean_ms = 0.0;
};

// The result of running a class suite (or of aggregating several).
struct ExperimentReport {
  std::vector<RpcfRecord> records;
  std::vector<MethodAverages> per_method;
  std::vector<FamilyAverages> per_family;  // filled by aggregate_report
  int class_id = 0;                        // 1, 2, or 0 for combined
  std::vector<TimingRow> timings;          // optional; timing mode only
};

// The target conclusion for a case. Forward cases score against hedged
// consequents (case 1: B, 2: B^2, 3: sqrt(B), 4: 1-B, 5: tilted B); backward
// cases against hedged complements of the antecedent (case 6: 1-A, 7: 1-A^2,
// 8: 1-sqrt(A), 9: A, 10: tilted A). With hedged_targets = false, cases
// 2/3/7/8 fall back to the plain targets (B forward, 1-A backward). Throws
// MissingTiltVector for cases 5/10 without st_vector.
MembershipVector expected_conclusion(
    int case_id, const Rule& rule,
    const std::optional<MembershipVector>& st_vector = std::nullopt,
    bool hedged_targets = true);

// Reductive-property score: (1 - mean absolute difference) * 100. Symmetric;
// 100 iff the vectors are equal. Throws LengthMismatch.
double rpcf(const MembershipVector& conclusion,
            const MembershipVector& expected);

// Builds the premise and target for one case of the benchmark suite.
// st_antecedent / st_consequent are the slightly-tilted vectors (lengths u
// and v), required only by cases 10 and 5 respectively.
PremiseCase make_premise_case(
    int case_id, const Rule& rule,
    const std::optional<MembershipVector>& st_antecedent = std::nullopt,
    const std::optional<MembershipVector>& st_consequent = std::nullopt,
    bool hedged_targets = true);

// Runs one method on one prepared case and scores the conclusion. Throws
// UnsupportedCombination when the method lacks the requested direction.
RpcfRecord run_case(const MethodId& method, const Rule& rule,
                    const PremiseCase& premise_case);

// Runs every method over one class of cases (class 1: {1,2,3,4} forward and
// {6,7,8,9} backward; class 2: {1,2,3,5} and {6,7,8,10}) and fills the
// per-method averages. Cells are evaluated in a fixed order; reports are
// bit-identical across runs.
ExperimentReport run_class_suite(
    const std::vector<MethodId>& methods, const Rule& rule, int class_id,
    const std::optional<MembershipVector>& st_antecedent = std::nullopt,
    const std::optional<MembershipVector>& st_consequent = std::nullopt);

// Arithmetic means across reports: per-method averages are recomputed from
// each report's records, then averaged per method across reports; family
// rows additionally average a family's operator variants together (the two
// sign forms of the distance method, the four residuated pairs, the two
// modification forms). Throws InconsistentMethods when the reports carry
// different method sets.
ExperimentReport aggregate_report(const std::vector<ExperimentReport>& reports);

// Times `repetitions` complete class-suite evaluations per method and
// reports per-repetition and mean wall-times in milliseconds. Makes no
// correctness assertion about ordering (hardware-dependent).
std::vector<TimingRow> timing_harness(
    const std::vector<MethodId>& methods, const Rule& rule, int class_id,
    const std::optional<MembershipVector>& st_antecedent,
    const std::optional<MembershipVector>& st_consequent, int repetitions);

}  // namespace far
