#include "far/reference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "far/errors.hpp"

namespace far::reference {

Rule benchmark_rule() {
  return Rule{{1.0, 0.3, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}};
}

MembershipVector tilted_antecedent() { return {1.0, 0.2, 0.0, 0.0, 0.0}; }

MembershipVector tilted_consequent() {
  return {0.0, 0.0, 0.0, 0.0, 0.0, 0.2, 1.0};
}

Rule walkthrough_rule_small() {
  return Rule{{1.0, 0.4, 0.0}, {0.0, 0.4, 0.7, 1.0}};
}

Rule walkthrough_rule_medium() {
  return Rule{{1.0, 0.8, 0.4, 0.0}, {0.0, 0.2, 0.4, 0.7, 0.9, 1.0}};
}

namespace {

using MV = MembershipVector;

constexpr double kVectorTol = 5e-3;   // per recorded grade
constexpr double kCellTol = 0.15;     // recorded percentage cells and averages
constexpr double kCompoundTol = 0.3;  // averages of averages

MethodId edm_id(SignForm form) {
  MethodId m;
  m.family = Family::edm;
  m.form = form;
  return m;
}

MethodId pair_id(Family family, ResiduatedPair pair) {
  MethodId m;
  m.family = family;
  m.pair = pair;
  return m;
}

MethodId aars_id(AarsForm form) {
  MethodId m;
  m.family = Family::aars;
  m.aars = form;
  return m;
}

// One class suite per method, computed once and reused across tables.
const ExperimentReport& suite(const MethodId& id, int class_id) {
  static std::map<std::string, ExperimentReport> cache;
  const std::string key = family_name(id.family) + "/" + operator_label(id) +
                          "/" + std::to_string(class_id);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache
             .emplace(key, run_class_suite({id}, benchmark_rule(), class_id,
                                           tilted_antecedent(),
                                           tilted_consequent()))
             .first;
  }
  return it->second;
}

const RpcfRecord& record_for(const ExperimentReport& report, int case_id) {
  for (const auto& r : report.records)
    if (r.premise_case.case_id == case_id) return r;
  throw UnsupportedCombination("no record for case " + std::to_string(case_id));
}

double fmp_avg(const ExperimentReport& report) {
  return report.per_method.front().fmp_avg;
}

double fmt_avg(const ExperimentReport& report) {
  return report.per_method.front().fmt_avg;
}

bool score_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol;
}

bool vec_close(const MV& a, const MV& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  return true;
}

std::string case_label(int case_id) {
  switch (case_id) {
    case 1:
      return "case 1: premise A";
    case 2:
      return "case 2: premise very A";
    case 3:
      return "case 3: premise more-or-less A";
    case 4:
      return "case 4: premise not A";
    case 5:
      return "case 5: premise slightly-tilted A";
    case 6:
      return "case 6: premise 1-B";
    case 7:
      return "case 7: premise 1-very B";
    case 8:
      return "case 8: premise 1-(more-or-less B)";
    case 9:
      return "case 9: premise B";
    case 10:
      return "case 10: premise slightly-tilted B";
  }
  return "case ?";
}

// Recorded reference values for one cell plus any documented variant reading.
struct RecordedCell {
  std::optional<MV> vec;
  std::optional<double> score;
  bool dispute = false;  // registered inconsistency: never report as mismatch
  std::optional<std::pair<MV, double>> variant;
  std::string note;
};

CellResult check_cell(const MethodId& id, const RpcfRecord& rec,
                      const RecordedCell& spec) {
  CellResult cell;
  cell.method = family_name(id.family);
  cell.op = operator_label(id);
  cell.case_label = case_label(rec.premise_case.case_id);
  cell.conclusion = rec.conclusion;
  cell.rpcf = rec.rpcf_percent;
  cell.recorded_conclusion = spec.vec;
  cell.recorded_rpcf = spec.score;
  if (spec.variant) {
    cell.variant_conclusion = spec.variant->first;
    cell.variant_rpcf = spec.variant->second;
  }
  cell.note = spec.note;

  bool faithful_ok = true;
  if (spec.vec) faithful_ok &= vec_close(rec.conclusion, *spec.vec, kVectorTol);
  if (spec.score)
    faithful_ok &= score_close(rec.rpcf_percent, *spec.score, kCellTol);
  if (faithful_ok) {
    cell.status = CellStatus::matched;
    return cell;
  }

  bool variant_ok = false;
  if (spec.variant) {
    variant_ok = true;
    if (spec.vec) variant_ok &= vec_close(spec.variant->first, *spec.vec, kVectorTol);
    if (spec.score)
      variant_ok &= score_close(spec.variant->second, *spec.score, kCellTol);
  }
  if (variant_ok)
    cell.status = CellStatus::matched_variant;
  else
    cell.status = spec.dispute ? CellStatus::disputed : CellStatus::mismatch;
  return cell;
}

AggregateResult check_aggregate(std::string label, double computed,
                                std::optional<double> variant, double recorded,
                                double tolerance, bool dispute,
                                std::string note = {}) {
  AggregateResult agg;
  agg.label = std::move(label);
  agg.computed = computed;
  agg.variant = variant;
  agg.recorded = recorded;
  agg.tolerance = tolerance;
  agg.note = std::move(note);
  if (score_close(computed, recorded, tolerance))
    agg.status = CellStatus::matched;
  else if (variant && score_close(*variant, recorded, tolerance))
    agg.status = CellStatus::matched_variant;
  else
    agg.status = dispute ? CellStatus::disputed : CellStatus::mismatch;
  return agg;
}

void finish(TableResult& table) {
  for (const auto& c : table.cells)
    if (c.status == CellStatus::mismatch) table.has_mismatch = true;
  for (const auto& a : table.aggregates)
    if (a.status == CellStatus::mismatch) table.has_mismatch = true;
}

const std::vector<ResiduatedPair> kPairOrder = {
    ResiduatedPair::lukasiewicz, ResiduatedPair::godel, ResiduatedPair::r0,
    ResiduatedPair::goguen};

// ---------------------------------------------------------------------------
// Variant building blocks used by several tables.
// ---------------------------------------------------------------------------

// Backward distance-method class-1 average with the case-9 row replaced by
// its complemented-base variant (the reading the recorded table used).
double edm_fmt1_variant_avg(SignForm form) {
  const auto& rep = suite(edm_id(form), 1);
  const double alt = variants::edm_backward_complement_base(form).second;
  return (record_for(rep, 6).rpcf_percent + record_for(rep, 7).rpcf_percent +
          record_for(rep, 8).rpcf_percent + alt) /
         4.0;
}

// Backward compositional class-1 average with the case-9 row scored against
// the tilted antecedent (the reading the recorded table used).
double cri_fmt1_variant_avg(ResiduatedPair pair) {
  const auto& rep = suite(pair_id(Family::cri, pair), 1);
  return (record_for(rep, 6).rpcf_percent + record_for(rep, 7).rpcf_percent +
          record_for(rep, 8).rpcf_percent +
          variants::cri_backward_score_vs_tilt(pair)) /
         4.0;
}

// Forward compositional/triple average with the more-or-less row replaced by
// its strict-residuum variant.
double strict_godel_fmp_variant_avg(Family family, int class_id) {
  const auto& rep = suite(pair_id(family, ResiduatedPair::godel), class_id);
  const int last_case = class_id == 1 ? 4 : 5;
  return (record_for(rep, 1).rpcf_percent + record_for(rep, 2).rpcf_percent +
          variants::strict_godel_more_or_less().second +
          record_for(rep, last_case).rpcf_percent) /
         4.0;
}

// Similarity-method class-2 forward average with the tilted row scored
// against the complemented consequent.
double aars_fmp2_variant_avg(AarsForm form) {
  const auto& rep = suite(aars_id(form), 2);
  return (record_for(rep, 1).rpcf_percent + record_for(rep, 2).rpcf_percent +
          record_for(rep, 3).rpcf_percent +
          variants::aars_forward_score_vs_complement(form)) /
         4.0;
}

// Similarity-method class-2 backward average with the tilted row computed
// from the tilted pair.
double aars_fmt2_variant_avg(AarsForm form) {
  const auto& rep = suite(aars_id(form), 2);
  return (record_for(rep, 6).rpcf_percent + record_for(rep, 7).rpcf_percent +
          record_for(rep, 8).rpcf_percent +
          variants::aars_backward_tilted(form).second) /
         4.0;
}

// ---------------------------------------------------------------------------
// Recorded cells for the distance-method tables (ids 2, 3, 5, 6).
// ---------------------------------------------------------------------------

RecordedCell edm_fmp_recorded(int case_id, SignForm form) {
  const bool three = form == SignForm::three_valued;
  RecordedCell r;
  switch (case_id) {
    case 1:
      r.vec = MV{0, 0, 0, 0, 0, 0.3, 1};
      r.score = 100.0;
      break;
    case 2:
      r.vec = three ? MV{0.097, 0, 0, 0, 0.097, 0.37, 1}
                    : MV{0.18, 0, 0, 0, 0.18, 0.42, 1};
      r.score = three ? 93.25 : 90.17;
      break;
    case 3:
      r.vec = three ? MV{0, 0.12, 0.12, 0.12, 0, 0.3, 1}
                    : MV{0, 0, 0, 0, 0, 0.3, 1};
      r.score = three ? 91.21 : 96.46;
      break;
    case 4:
      r.vec = MV{0, 0, 1, 1, 1, 0.83, 0.43};
      r.score = 63.53;
      break;
    case 5:
      r.vec = three ? MV{0.035, 0, 0, 0, 0.035, 0.23, 1}
                    : MV{0.068, 0, 0, 0, 0.068, 0.25, 1};
      r.score = three ? 98.58 : 97.26;
      break;
  }
  return r;
}

RecordedCell edm_fmt_recorded(int case_id, SignForm form) {
  const bool three = form == SignForm::three_valued;
  RecordedCell r;
  switch (case_id) {
    case 6:
      r.vec = MV{0, 0.7, 1, 1, 1};
      r.score = 100.0;
      break;
    case 7:
      r.vec = three ? MV{0, 0.64, 0.92, 1, 0.92} : MV{0, 0.7, 1, 1, 1};
      r.score = three ? 91.30 : 95.80;
      break;
    case 8:
      r.vec = three ? MV{0, 0.7, 1, 0.9, 1} : MV{0, 0.7, 1, 0.79, 1};
      r.score = three ? 92.98 : 90.92;
      break;
    case 9:
      r.vec = MV{0.55, 0.16, 0, 0, 1};
      r.score = 68.30;
      r.dispute = true;
      r.variant = variants::edm_backward_complement_base(form);
      r.note =
          "The corpus records this row twice: the tabulated value matches "
          "only the complemented-base variant, while a run transcript of the "
          "same computation ([0, 0.25, 0.35, 0.35, 1] at 44.78%) matches the "
          "faithful pipeline.";
      break;
    case 10:
      r.vec = MV{0.55, 0.11, 0, 0, 1};
      r.score = 69.13;
      break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Table builders.
// ---------------------------------------------------------------------------

TableResult table_edm_fmp(int id) {
  const int class_id = id == 2 ? 1 : 2;
  TableResult t;
  t.id = id;
  t.title = class_id == 1 ? "Forward distance-method suite, class 1"
                          : "Forward distance-method suite, class 2";
  const double recorded_avg3 = class_id == 1 ? 87.00 : 95.76;
  const double recorded_avg2 = class_id == 1 ? 87.54 : 95.97;
  for (SignForm form : {SignForm::three_valued, SignForm::two_valued}) {
    const MethodId id_form = edm_id(form);
    const auto& rep = suite(id_form, class_id);
    for (const auto& rec : rep.records) {
      if (case_direction(rec.premise_case.case_id) != Direction::fmp) continue;
      t.cells.push_back(check_cell(
          id_form, rec, edm_fmp_recorded(rec.premise_case.case_id, form)));
    }
    const bool three = form == SignForm::three_valued;
    t.aggregates.push_back(check_aggregate(
        std::string("forward average, ") + sign_form_name(form), fmp_avg(rep),
        std::nullopt, three ? recorded_avg3 : recorded_avg2, kCellTol, false));
  }
  finish(t);
  return t;
}

TableResult table_edm_fmt(int id) {
  const int class_id = id == 5 ? 1 : 2;
  TableResult t;
  t.id = id;
  t.title = class_id == 1 ? "Backward distance-method suite, class 1"
                          : "Backward distance-method suite, class 2";
  for (SignForm form : {SignForm::three_valued, SignForm::two_valued}) {
    const MethodId id_form = edm_id(form);
    const auto& rep = suite(id_form, class_id);
    for (const auto& rec : rep.records) {
      if (case_direction(rec.premise_case.case_id) != Direction::fmt) continue;
      t.cells.push_back(check_cell(
          id_form, rec, edm_fmt_recorded(rec.premise_case.case_id, form)));
    }
    const bool three = form == SignForm::three_valued;
    if (class_id == 1) {
      t.aggregates.push_back(check_aggregate(
          std::string("backward average, ") + sign_form_name(form),
          fmt_avg(rep), edm_fmt1_variant_avg(form), three ? 88.15 : 88.75,
          kCellTol, true,
          "Recorded average carries the complemented-base case-9 reading."));
    } else {
      t.aggregates.push_back(check_aggregate(
          std::string("backward average, ") + sign_form_name(form),
          fmt_avg(rep), std::nullopt, three ? 88.35 : 88.96, kCellTol, false));
    }
  }
  if (class_id == 1) {
    t.metadata.push_back(
        "The case-9 row has two records in the corpus: the tabulated vector "
        "(0.55, 0.16, 0, 0, 1 at 68.30%) and a run transcript of the same "
        "computation ([0, 0.25, 0.35, 0.35, 1] at 44.78%). The faithful "
        "pipeline reproduces the transcript; the complemented-base variant "
        "reproduces the tabulated row.");
  }
  finish(t);
  return t;
}

TableResult table_edm_forward_summary() {
  TableResult t;
  t.id = 4;
  t.title = "Forward distance-method averages";
  const double c1f3 = fmp_avg(suite(edm_id(SignForm::three_valued), 1));
  const double c1f2 = fmp_avg(suite(edm_id(SignForm::two_valued), 1));
  const double c2f3 = fmp_avg(suite(edm_id(SignForm::three_valued), 2));
  const double c2f2 = fmp_avg(suite(edm_id(SignForm::two_valued), 2));
  t.aggregates.push_back(check_aggregate("class 1, three_valued", c1f3,
                                         std::nullopt, 87.00, kCellTol, false));
  t.aggregates.push_back(check_aggregate("class 1, two_valued", c1f2,
                                         std::nullopt, 87.54, kCellTol, false));
  t.aggregates.push_back(check_aggregate("class 2, three_valued", c2f3,
                                         std::nullopt, 95.76, kCellTol, false));
  t.aggregates.push_back(check_aggregate("class 2, two_valued", c2f2,
                                         std::nullopt, 95.97, kCellTol, false));
  t.aggregates.push_back(check_aggregate("both classes, three_valued",
                                         (c1f3 + c2f3) / 2.0, std::nullopt,
                                         91.38, kCompoundTol, false));
  t.aggregates.push_back(check_aggregate("both classes, two_valued",
                                         (c1f2 + c2f2) / 2.0, std::nullopt,
                                         91.76, kCompoundTol, false));
  finish(t);
  return t;
}

TableResult table_edm_backward_summary() {
  TableResult t;
  t.id = 7;
  t.title = "Backward distance-method averages";
  const double c1f3 = fmt_avg(suite(edm_id(SignForm::three_valued), 1));
  const double c1f2 = fmt_avg(suite(edm_id(SignForm::two_valued), 1));
  const double c2f3 = fmt_avg(suite(edm_id(SignForm::three_valued), 2));
  const double c2f2 = fmt_avg(suite(edm_id(SignForm::two_valued), 2));
  const double v1f3 = edm_fmt1_variant_avg(SignForm::three_valued);
  const double v1f2 = edm_fmt1_variant_avg(SignForm::two_valued);
  const std::string note =
      "Recorded value carries the complemented-base case-9 reading.";
  t.aggregates.push_back(check_aggregate("class 1, three_valued", c1f3, v1f3,
                                         88.15, kCellTol, true, note));
  t.aggregates.push_back(check_aggregate("class 1, two_valued", c1f2, v1f2,
                                         88.75, kCellTol, true, note));
  t.aggregates.push_back(check_aggregate("class 2, three_valued", c2f3,
                                         std::nullopt, 88.35, kCellTol, false));
  t.aggregates.push_back(check_aggregate("class 2, two_valued", c2f2,
                                         std::nullopt, 88.96, kCellTol, false));
  t.aggregates.push_back(check_aggregate("both classes, three_valued",
                                         (c1f3 + c2f3) / 2.0,
                                         (v1f3 + c2f3) / 2.0, 88.25,
                                         kCompoundTol, true, note));
  t.aggregates.push_back(check_aggregate("both classes, two_valued",
                                         (c1f2 + c2f2) / 2.0,
                                         (v1f2 + c2f2) / 2.0, 88.86,
                                         kCompoundTol, true, note));
  finish(t);
  return t;
}

TableResult table_edm_overall_summary() {
  TableResult t;
  t.id = 8;
  t.title = "Distance-method overall averages";
  const std::string note =
      "Backward side carries the complemented-base case-9 reading.";
  for (SignForm form : {SignForm::three_valued, SignForm::two_valued}) {
    const bool three = form == SignForm::three_valued;
    const double fwd =
        (fmp_avg(suite(edm_id(form), 1)) + fmp_avg(suite(edm_id(form), 2))) /
        2.0;
    const double bwd =
        (fmt_avg(suite(edm_id(form), 1)) + fmt_avg(suite(edm_id(form), 2))) /
        2.0;
    const double bwd_variant =
        (edm_fmt1_variant_avg(form) + fmt_avg(suite(edm_id(form), 2))) / 2.0;
    t.aggregates.push_back(check_aggregate(
        std::string("overall average, ") + sign_form_name(form),
        (fwd + bwd) / 2.0, (fwd + bwd_variant) / 2.0, three ? 89.815 : 90.310,
        kCompoundTol, true, note));
  }
  const double g_faithful =
      (t.aggregates[0].computed + t.aggregates[1].computed) / 2.0;
  const double g_variant =
      (*t.aggregates[0].variant + *t.aggregates[1].variant) / 2.0;
  t.aggregates.push_back(check_aggregate("grand average, both sign forms",
                                         g_faithful, g_variant, 90.063,
                                         kCompoundTol, true, note));
  finish(t);
  return t;
}

// --- Table 9: quintuple-implication suite, class 1 ---------------------------

RecordedCell qip_recorded(int case_id, ResiduatedPair pair) {
  const bool r0 = pair == ResiduatedPair::r0;
  RecordedCell r;
  switch (case_id) {
    case 1:
      r.vec = MV{0, 0, 0, 0, 0, 0.3, 1};
      r.score = 100.0;
      break;
    case 2:
      r.vec = MV{0, 0, 0, 0, 0, 0.3, 1};
      r.score = 97.0;
      break;
    case 3:
      r.vec = MV{0, 0, 0, 0, 0, 0.3, 1};
      r.score = 96.46;
      break;
    case 4:
      r.vec = MV{0, 0, 0, 0, 0, 0.3, 0.5};
      r.score = r0 ? 11.43 : 15.71;
      if (r0) {
        r.dispute = true;
        r.note =
            "Recorded vector is inconsistent with its own recorded score; "
            "the score matches the recomputation, whose vector is "
            "[0, 0, 0, 0, 0, 0, 0.5].";
      }
      break;
    case 6:
      r.vec = MV{0.44, 0.3, 0, 0, 0};
      r.score = 23.2;
      break;
    case 7:
      r.vec = MV{0.58, 0.3, 0, 0, 0};
      r.score = 16.2;
      break;
    case 8:
      r.vec = r0 ? MV{0.3, 0, 0, 0, 0} : MV{0.34, 0.3, 0, 0, 0};
      r.score = r0 ? 24.95 : 30.22;
      if (r0) {
        r.dispute = true;
        r.note =
            "Recorded cell matches no computed reading; the recomputation "
            "gives [0.3, 0.3, 0, 0, 0] at 30.95%.";
      }
      break;
    case 9:
      r.vec = MV{1, 0.3, 0, 0, 0};
      r.score = 100.0;
      break;
  }
  return r;
}

TableResult table_qip() {
  TableResult t;
  t.id = 9;
  t.title = "Quintuple-implication suite, class 1";
  for (ResiduatedPair pair : kPairOrder) {
    const MethodId id = pair_id(Family::qip, pair);
    const auto& rep = suite(id, 1);
    for (const auto& rec : rep.records)
      t.cells.push_back(
          check_cell(id, rec, qip_recorded(rec.premise_case.case_id, pair)));
    const bool r0 = pair == ResiduatedPair::r0;
    t.aggregates.push_back(check_aggregate(
        "forward average, " + pair_name(pair), fmp_avg(rep), std::nullopt,
        r0 ? 76.22 : 77.29, kCellTol, false));
    if (r0) {
      // The recorded backward average is consistent with the recorded
      // case-8 score, which is itself irreproducible.
      const double consistent =
          (record_for(rep, 6).rpcf_percent + record_for(rep, 7).rpcf_percent +
           24.95 + record_for(rep, 9).rpcf_percent) /
          4.0;
      t.aggregates.push_back(check_aggregate(
          "backward average, " + pair_name(pair), fmt_avg(rep), consistent,
          41.09, kCellTol, true,
          "Consistent with the recorded case-8 score, which matches no "
          "computed reading."));
    } else {
      t.aggregates.push_back(check_aggregate(
          "backward average, " + pair_name(pair), fmt_avg(rep), std::nullopt,
          42.41, kCellTol, false));
    }
  }
  finish(t);
  return t;
}

// --- Tables 10 and 11: compositional and triple-implication, class 1 ---------

RecordedCell compositional_fmp_recorded(int case_id, ResiduatedPair pair) {
  RecordedCell r;
  switch (case_id) {
    case 1:
      r.vec = MV{0, 0, 0, 0, 0, 0.3, 1};
      r.score = 100.0;
      break;
    case 2:
      r.vec = MV{0, 0, 0, 0, 0, 0.3, 1};
      r.score = 97.0;
      break;
    case 3:
      switch (pair) {
        case ResiduatedPair::lukasiewicz:
          r.vec = MV{0.25, 0.25, 0.25, 0.25, 0.25, 0.55, 1};
          r.score = 82.15;
          break;
        case ResiduatedPair::godel:
          r.vec = MV{0, 0, 0, 0, 0, 0.51, 1};
          r.score = 99.42;
          r.dispute = true;
          r.variant = variants::strict_godel_more_or_less();
          r.note =
              "Recorded cell matches only the strict-residuum variant of the "
              "Goedel implication.";
          break;
        case ResiduatedPair::r0:
          r.vec = MV{0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 1};
          r.score = 56.40;
          break;
        case ResiduatedPair::goguen:
          r.vec = MV{0, 0, 0, 0, 0, 0.55, 1};
          r.score = 100.0;
          break;
      }
      break;
    case 4:
      r.vec = MV{1, 1, 1, 1, 1, 1, 1};
      r.score = 81.43;
      break;
  }
  return r;
}

RecordedCell cri_fmt_recorded(int case_id, ResiduatedPair pair) {
  RecordedCell r;
  r.vec = MV{1, 1, 1, 1, 1};
  switch (case_id) {
    case 6:
      r.score = 74.00;
      break;
    case 7:
      r.score = 78.20;
      break;
    case 8:
      r.score = 69.05;
      break;
    case 9: {
      r.score = 24.00;
      r.dispute = true;
      const MV ones(5, 1.0);
      r.variant = {ones, variants::cri_backward_score_vs_tilt(pair)};
      r.note =
          "Recorded score corresponds to scoring the conclusion against the "
          "tilted antecedent; against the case target it is 26.00%.";
      break;
    }
  }
  return r;
}

RecordedCell tip_fmt_recorded(int case_id, ResiduatedPair pair) {
  RecordedCell r;
  switch (case_id) {
    case 6:
      r.vec = MV{0, 0, 0, 0, 0};
      r.score = 26.00;
      break;
    case 7:
      r.vec = MV{0, 0, 0, 0, 0};
      r.score = 21.80;
      break;
    case 8:
      r.vec = MV{0, 0, 0, 0, 0};
      r.score = 30.95;
      break;
    case 9:
      if (pair == ResiduatedPair::godel) {
        r.vec = MV{1, 0.44, 0, 0, 0};
        r.score = 97.2;
        r.dispute = true;
        r.note =
            "Recorded cell matches no computed reading; the recomputation "
            "gives [1, 0.3, 0, 0, 0] at 100%.";
      } else {
        r.vec = MV{1, 0.3, 0, 0, 0};
        r.score = 100.0;
      }
      break;
  }
  return r;
}

void push_compositional_fmp_average(TableResult& t, const ExperimentReport& rep,
                                    Family family, ResiduatedPair pair) {
  double recorded = 0.0;
  switch (pair) {
    case ResiduatedPair::lukasiewicz:
      recorded = 90.14;
      break;
    case ResiduatedPair::godel:
      recorded = 94.46;
      break;
    case ResiduatedPair::r0:
      recorded = 83.71;
      break;
    case ResiduatedPair::goguen:
      recorded = 94.61;
      break;
  }
  std::optional<double> variant;
  std::string note;
  if (pair == ResiduatedPair::godel) {
    variant = strict_godel_fmp_variant_avg(family, 1);
    note = "Strict-residuum variant of the more-or-less row available.";
  }
  t.aggregates.push_back(check_aggregate("forward average, " + pair_name(pair),
                                         fmp_avg(rep), variant, recorded,
                                         kCellTol, false, note));
}

TableResult table_cri() {
  TableResult t;
  t.id = 10;
  t.title = "Compositional-rule suite, class 1";
  for (ResiduatedPair pair : kPairOrder) {
    const MethodId id = pair_id(Family::cri, pair);
    const auto& rep = suite(id, 1);
    for (const auto& rec : rep.records) {
      const int c = rec.premise_case.case_id;
      t.cells.push_back(check_cell(
          id, rec,
          case_direction(c) == Direction::fmp
              ? compositional_fmp_recorded(c, pair)
              : cri_fmt_recorded(c, pair)));
    }
    push_compositional_fmp_average(t, rep, Family::cri, pair);
    t.aggregates.push_back(check_aggregate(
        "backward average, " + pair_name(pair), fmt_avg(rep),
        cri_fmt1_variant_avg(pair), 61.31, kCellTol, true,
        "Recorded average carries the tilt-scored case-9 reading."));
  }
  finish(t);
  return t;
}

TableResult table_tip() {
  TableResult t;
  t.id = 11;
  t.title = "Triple-implication suite, class 1";
  for (ResiduatedPair pair : kPairOrder) {
    const MethodId id = pair_id(Family::tip, pair);
    const auto& rep = suite(id, 1);
    for (const auto& rec : rep.records) {
      const int c = rec.premise_case.case_id;
      t.cells.push_back(check_cell(id, rec,
                                   case_direction(c) == Direction::fmp
                                       ? compositional_fmp_recorded(c, pair)
                                       : tip_fmt_recorded(c, pair)));
    }
    push_compositional_fmp_average(t, rep, Family::tip, pair);
    if (pair == ResiduatedPair::godel) {
      const double consistent =
          (record_for(rep, 6).rpcf_percent + record_for(rep, 7).rpcf_percent +
           record_for(rep, 8).rpcf_percent + 97.2) /
          4.0;
      t.aggregates.push_back(check_aggregate(
          "backward average, " + pair_name(pair), fmt_avg(rep), consistent,
          43.99, kCellTol, true,
          "Consistent with the recorded case-9 score, which matches no "
          "computed reading."));
    } else {
      t.aggregates.push_back(check_aggregate(
          "backward average, " + pair_name(pair), fmt_avg(rep), std::nullopt,
          44.69, kCellTol, false));
    }
  }
  finish(t);
  return t;
}

// --- Table 12: similarity-method suite, class 1 -------------------------------

RecordedCell aars_recorded(int case_id, AarsForm form) {
  const bool mol = form == AarsForm::more_or_less;
  RecordedCell r;
  switch (case_id) {
    case 1:
      r.vec = MV{0, 0, 0, 0, 0, 0.3, 1};
      r.score = 100.0;
      break;
    case 2:
      r.vec = mol ? MV{0, 0, 0, 0, 0, 0.33, 1} : MV{0, 0, 0, 0, 0, 0.27, 0.9};
      r.score = mol ? 96.54 : 96.03;
      break;
    case 3:
      r.vec = mol ? MV{0, 0, 0, 0, 0, 0.34, 1} : MV{0, 0, 0, 0, 0, 0.27, 0.89};
      r.score = mol ? 96.99 : 94.44;
      break;
    case 4:
      r.vec = mol ? MV{0, 0, 0, 0, 0, 0.56, 1} : MV{0, 0, 0, 0, 0, 0.16, 0.53};
      r.score = mol ? 12.30 : 13.22;
      break;
    case 6:
      r.vec = mol ? MV{1, 0.57, 0, 0, 0} : MV{0.52, 0.16, 0, 0, 0};
      r.score = mol ? 17.46 : 18.67;
      break;
    case 7:
      r.vec = mol ? MV{1, 0.58, 0, 0, 0} : MV{0.52, 0.16, 0, 0, 0};
      r.score = mol ? 13.32 : 14.51;
      break;
    case 8:
      r.vec = mol ? MV{1, 0.57, 0, 0, 0} : MV{0.53, 0.16, 0, 0, 0};
      r.score = mol ? 17.67 : 23.57;
      break;
    case 9:
      r.vec = MV{1, 0.3, 0, 0, 0};
      r.score = 100.0;
      break;
  }
  return r;
}

TableResult table_aars() {
  TableResult t;
  t.id = 12;
  t.title = "Similarity-method suite, class 1";
  for (AarsForm form : {AarsForm::reduction, AarsForm::more_or_less}) {
    const MethodId id = aars_id(form);
    const auto& rep = suite(id, 1);
    for (const auto& rec : rep.records)
      t.cells.push_back(
          check_cell(id, rec, aars_recorded(rec.premise_case.case_id, form)));
    const bool mol = form == AarsForm::more_or_less;
    t.aggregates.push_back(check_aggregate(
        "forward average, " + aars_form_name(form), fmp_avg(rep), std::nullopt,
        mol ? 76.46 : 75.92, kCellTol, false));
    t.aggregates.push_back(check_aggregate(
        "backward average, " + aars_form_name(form), fmt_avg(rep),
        std::nullopt, mol ? 37.11 : 39.19, kCellTol, false));
  }
  t.metadata.push_back(
      "Backward similarity uses the distance to the consequent and scales "
      "the antecedent: the pairing that returns the antecedent exactly when "
      "the premise equals the consequent.");
  finish(t);
  return t;
}

// --- Tables 13 and 14: per-class method summaries ------------------------------

struct SummaryRow {
  std::string label;
  double fmp = 0.0, fmt = 0.0;          // faithful averages
  std::optional<double> fmp_variant, fmt_variant;
  double rec_fmp = 0.0, rec_fmt = 0.0;  // recorded columns
  std::optional<double> rec_fr;         // recorded per-row average (if printed)
  bool fmp_dispute = false, fmt_dispute = false, fr_dispute = false;
  std::string fmp_note, fmt_note, fr_note;
};

void push_summary_row(TableResult& t, const SummaryRow& row) {
  t.aggregates.push_back(check_aggregate(row.label + ": forward average",
                                         row.fmp, row.fmp_variant, row.rec_fmp,
                                         kCellTol, row.fmp_dispute,
                                         row.fmp_note));
  t.aggregates.push_back(check_aggregate(row.label + ": backward average",
                                         row.fmt, row.fmt_variant, row.rec_fmt,
                                         kCellTol, row.fmt_dispute,
                                         row.fmt_note));
  if (!row.rec_fr) return;
  const double fr = (row.fmp + row.fmt) / 2.0;
  std::optional<double> fr_variant;
  if (row.fmp_variant || row.fmt_variant)
    fr_variant = (row.fmp_variant.value_or(row.fmp) +
                  row.fmt_variant.value_or(row.fmt)) /
                 2.0;
  t.aggregates.push_back(check_aggregate(row.label + ": two-way average", fr,
                                         fr_variant, *row.rec_fr, kCompoundTol,
                                         row.fr_dispute, row.fr_note));
}

// Family grand average over the per-row two-way averages.
void push_family_average(TableResult& t, const std::string& label,
                         const std::vector<SummaryRow>& rows, double recorded,
                         bool dispute = false, std::string note = {},
                         std::optional<double> variant_override = std::nullopt) {
  double faithful = 0.0;
  double variant = 0.0;
  bool has_variant = variant_override.has_value();
  for (const auto& r : rows) {
    faithful += (r.fmp + r.fmt) / 2.0;
    variant += (r.fmp_variant.value_or(r.fmp) + r.fmt_variant.value_or(r.fmt)) / 2.0;
    has_variant = has_variant || r.fmp_variant || r.fmt_variant;
  }
  faithful /= static_cast<double>(rows.size());
  variant /= static_cast<double>(rows.size());
  if (variant_override) variant = *variant_override;
  t.aggregates.push_back(check_aggregate(
      label + ": family average", faithful,
      has_variant ? std::optional<double>(variant) : std::nullopt, recorded,
      kCompoundTol, dispute, std::move(note)));
}

TableResult table_summary(int id) {
  const int class_id = id == 13 ? 1 : 2;
  TableResult t;
  t.id = id;
  t.title = class_id == 1 ? "Method summary, class 1" : "Method summary, class 2";

  // --- distance method ---
  std::vector<SummaryRow> edm_rows;
  for (SignForm form : {SignForm::three_valued, SignForm::two_valued}) {
    const bool three = form == SignForm::three_valued;
    SummaryRow row;
    row.label = "edm (" + sign_form_name(form) + ")";
    row.fmp = fmp_avg(suite(edm_id(form), class_id));
    row.fmt = fmt_avg(suite(edm_id(form), class_id));
    if (class_id == 1) {
      row.fmt_variant = edm_fmt1_variant_avg(form);
      row.fmt_dispute = true;
      row.fmt_note =
          "Recorded value carries the complemented-base case-9 reading.";
      row.rec_fmp = three ? 87.00 : 87.54;
      row.rec_fmt = three ? 88.15 : 88.75;
      row.rec_fr = three ? 87.58 : 88.15;
      row.fr_note = row.fmt_note;
    } else {
      row.rec_fmp = three ? 95.76 : 95.97;
      row.rec_fmt = three ? 88.35 : 88.96;
      if (three) row.rec_fr = 92.060;  // the record prints one two-way average
    }
    push_summary_row(t, row);
    edm_rows.push_back(row);
  }
  push_family_average(t, "edm", edm_rows, class_id == 1 ? 87.865 : 92.265);

  // --- compositional rule ---
  std::vector<SummaryRow> cri_rows;
  for (ResiduatedPair pair : kPairOrder) {
    SummaryRow row;
    row.label = "cri (" + pair_name(pair) + ")";
    row.fmp = fmp_avg(suite(pair_id(Family::cri, pair), class_id));
    row.fmt = fmt_avg(suite(pair_id(Family::cri, pair), class_id));
    if (pair == ResiduatedPair::godel) {
      row.fmp_variant = strict_godel_fmp_variant_avg(Family::cri, class_id);
      row.fmp_note = "Strict-residuum variant of the more-or-less row.";
    }
    if (class_id == 1) {
      row.fmt_variant = cri_fmt1_variant_avg(pair);
      row.fmt_dispute = true;
      row.fmt_note = "Recorded value carries the tilt-scored case-9 reading.";
      switch (pair) {
        case ResiduatedPair::lukasiewicz:
          row.rec_fmp = 90.14;
          row.rec_fr = 75.73;
          break;
        case ResiduatedPair::godel:
          row.rec_fmp = 94.46;
          row.rec_fr = 77.89;
          break;
        case ResiduatedPair::r0:
          row.rec_fmp = 83.71;
          row.rec_fr = 72.51;
          break;
        case ResiduatedPair::goguen:
          row.rec_fmp = 94.61;
          row.rec_fr = 77.96;
          break;
      }
      row.rec_fmt = 61.31;
      row.fr_note = row.fmt_note;
    } else {
      switch (pair) {
        case ResiduatedPair::lukasiewicz:
          row.rec_fmp = 94.43;
          row.rec_fr = 77.870;
          break;
        case ResiduatedPair::godel:
          row.rec_fmp = 98.75;
          row.rec_fr = 80.030;
          break;
        case ResiduatedPair::r0:
          row.rec_fmp = 87.99;
          row.rec_fr = 74.650;
          break;
        case ResiduatedPair::goguen:
          row.rec_fmp = 98.89;
          row.rec_fr = 80.100;
          break;
      }
      row.rec_fmt = 61.31;
    }
    push_summary_row(t, row);
    cri_rows.push_back(row);
  }
  push_family_average(t, "cri", cri_rows, class_id == 1 ? 76.023 : 78.163);

  // --- triple implication ---
  std::vector<SummaryRow> tip_rows;
  for (ResiduatedPair pair : kPairOrder) {
    SummaryRow row;
    row.label = "tip (" + pair_name(pair) + ")";
    const auto& rep = suite(pair_id(Family::tip, pair), class_id);
    row.fmp = fmp_avg(rep);
    row.fmt = fmt_avg(rep);
    if (pair == ResiduatedPair::godel) {
      row.fmp_variant = strict_godel_fmp_variant_avg(Family::tip, class_id);
      row.fmp_note = "Strict-residuum variant of the more-or-less row.";
    }
    if (class_id == 1) {
      switch (pair) {
        case ResiduatedPair::lukasiewicz:
          row.rec_fmp = 90.14;
          row.rec_fmt = 44.69;
          row.rec_fr = 67.42;
          break;
        case ResiduatedPair::godel: {
          row.rec_fmp = 94.46;
          row.rec_fmt = 43.99;
          row.rec_fr = 69.23;
          row.fmt_dispute = true;
          row.fmt_variant =
              (record_for(rep, 6).rpcf_percent +
               record_for(rep, 7).rpcf_percent +
               record_for(rep, 8).rpcf_percent + 97.2) /
              4.0;
          row.fmt_note =
              "Consistent with the recorded case-9 score, which matches no "
              "computed reading.";
          row.fr_note = row.fmt_note;
          break;
        }
        case ResiduatedPair::r0:
          row.rec_fmp = 83.71;
          row.rec_fmt = 44.69;
          row.rec_fr = 64.20;
          break;
        case ResiduatedPair::goguen:
          row.rec_fmp = 94.61;
          row.rec_fmt = 44.69;
          row.rec_fr = 69.65;
          break;
      }
    } else {
      switch (pair) {
        case ResiduatedPair::lukasiewicz:
          row.rec_fmp = 94.43;
          row.rec_fmt = 44.19;
          row.rec_fr = 69.309;
          break;
        case ResiduatedPair::godel:
          row.rec_fmp = 98.89;
          row.rec_fmt = 43.02;
          row.rec_fr = 70.967;
          row.fmt_dispute = true;
          row.fmt_variant = fmt_avg(suite(
              pair_id(Family::tip, ResiduatedPair::goguen), class_id));
          row.fmt_note =
              "Matches the Goguen recomputation; the recorded operator "
              "labels appear scrambled across this column.";
          row.fr_note = row.fmt_note;
          break;
        case ResiduatedPair::r0:
          row.rec_fmp = 87.99;
          row.rec_fmt = 41.79;
          row.rec_fr = 64.890;
          row.fmt_dispute = true;
          row.fmt_note =
              "Recorded backward average matches no computed reading "
              "(recomputation: 42.29).";
          break;
        case ResiduatedPair::goguen:
          row.rec_fmp = 98.89;
          row.rec_fmt = 34.36;
          row.rec_fr = 66.6240;
          row.fmt_dispute = true;
          row.fr_dispute = true;
          row.fmt_note =
              "Recorded backward average matches no computed reading "
              "(recomputation: 43.02, which the record prints in the Goedel "
              "row).";
          row.fr_note =
              "Consistent with the row's own irreproducible backward "
              "average.";
          break;
      }
    }
    push_summary_row(t, row);
    tip_rows.push_back(row);
  }
  if (class_id == 1) {
    push_family_average(t, "tip", tip_rows, 67.625);
  } else {
    push_family_average(
        t, "tip", tip_rows, 67.948, true,
        "Consistent with the recorded rows, three of whose backward averages "
        "are themselves irreproducible.");
  }

  // --- quintuple implication ---
  std::vector<SummaryRow> qip_rows;
  for (ResiduatedPair pair : kPairOrder) {
    SummaryRow row;
    row.label = "qip (" + pair_name(pair) + ")";
    const auto& rep = suite(pair_id(Family::qip, pair), class_id);
    row.fmp = fmp_avg(rep);
    row.fmt = fmt_avg(rep);
    if (class_id == 1) {
      const auto& goguen_rep =
          suite(pair_id(Family::qip, ResiduatedPair::goguen), class_id);
      const auto& r0_rep =
          suite(pair_id(Family::qip, ResiduatedPair::r0), class_id);
      switch (pair) {
        case ResiduatedPair::lukasiewicz:
        case ResiduatedPair::godel:
          row.rec_fmp = 77.29;
          row.rec_fmt = 42.41;
          row.rec_fr = 59.85;
          break;
        case ResiduatedPair::r0:
          // The record prints the Goguen values in this row and vice versa.
          row.rec_fmp = 77.29;
          row.rec_fmt = 42.41;
          row.rec_fr = 59.85;
          row.fmp_dispute = row.fmt_dispute = true;
          row.fmp_variant = fmp_avg(goguen_rep);
          row.fmt_variant = fmt_avg(goguen_rep);
          row.fmp_note = row.fmt_note = row.fr_note =
              "The record transposes the two operator labels relative to the "
              "per-case table.";
          break;
        case ResiduatedPair::goguen:
          row.rec_fmp = 76.22;
          row.rec_fmt = 41.09;
          row.rec_fr = 58.66;
          row.fmp_dispute = row.fmt_dispute = true;
          row.fmp_variant = fmp_avg(r0_rep);
          row.fmt_variant =
              (record_for(r0_rep, 6).rpcf_percent +
               record_for(r0_rep, 7).rpcf_percent + 24.95 +
               record_for(r0_rep, 9).rpcf_percent) /
              4.0;
          row.fmp_note = row.fmt_note = row.fr_note =
              "The record transposes the two operator labels, and the "
              "backward value additionally carries the irreproducible "
              "case-8 score.";
          break;
      }
    } else {
      row.rec_fmp = 98.01;
      switch (pair) {
        case ResiduatedPair::r0:
          row.rec_fmt = 40.59;
          row.rec_fr = 69.300;
          row.fmt_dispute = true;
          row.fr_dispute = true;
          row.fmt_note =
              "Recorded backward average matches no computed reading "
              "(recomputation: 42.09).";
          row.fr_note =
              "Consistent with the row's own irreproducible backward "
              "average.";
          break;
        default:
          row.rec_fmt = 41.91;
          row.rec_fr = 69.957;
          break;
      }
    }
    push_summary_row(t, row);
    qip_rows.push_back(row);
  }
  {
    // Both family averages on record equal the mean of the two distinct row
    // values rather than the mean over the four rows.
    const double distinct_mean =
        class_id == 1
            ? ((qip_rows[0].fmp + qip_rows[0].fmt) / 2.0 +
               (qip_rows[3].fmp_variant.value_or(qip_rows[3].fmp) +
                qip_rows[3].fmt_variant.value_or(qip_rows[3].fmt)) /
                   2.0) /
                  2.0
            : ((qip_rows[0].fmp + qip_rows[0].fmt) / 2.0 +
               (qip_rows[2].fmp + qip_rows[2].fmt) / 2.0) /
                  2.0;
    push_family_average(
        t, "qip", qip_rows, class_id == 1 ? 59.255 : 69.629, true,
        "Recorded family average equals the mean of the two distinct row "
        "values rather than the mean over the four rows.",
        distinct_mean);
  }

  // --- similarity method ---
  std::vector<SummaryRow> aars_rows;
  for (AarsForm form : {AarsForm::reduction, AarsForm::more_or_less}) {
    const bool mol = form == AarsForm::more_or_less;
    SummaryRow row;
    row.label = "aars (" + aars_form_name(form) + ")";
    row.fmp = fmp_avg(suite(aars_id(form), class_id));
    row.fmt = fmt_avg(suite(aars_id(form), class_id));
    if (class_id == 1) {
      row.rec_fmp = mol ? 76.46 : 75.92;
      row.rec_fmt = mol ? 37.11 : 39.19;
      row.rec_fr = mol ? 56.79 : 57.56;
    } else {
      row.fmp_variant = aars_fmp2_variant_avg(form);
      row.fmt_variant = aars_fmt2_variant_avg(form);
      row.fmp_dispute = row.fmt_dispute = true;
      row.fmp_note =
          "Recorded value scores the tilted row against the complemented "
          "consequent instead of the tilted target.";
      row.fmt_note =
          "Recorded value computes the tilted row from the tilted pair.";
      row.fr_note = "Both recorded columns carry tilted-row variants.";
      row.rec_fmp = mol ? 75.56 : 74.76;
      row.rec_fmt = mol ? 37.07 : 39.19;
      row.rec_fr = mol ? 56.310 : 56.970;
    }
    push_summary_row(t, row);
    aars_rows.push_back(row);
  }
  push_family_average(t, "aars", aars_rows, class_id == 1 ? 57.175 : 56.64);

  if (class_id == 1) {
    t.metadata.push_back(
        "The two quintuple-implication operator rows that differ are "
        "printed under each other's labels relative to the per-case table.");
  } else {
    t.metadata.push_back(
        "Three recorded triple-implication backward averages and one "
        "quintuple-implication backward average match no computed reading; "
        "the affected two-way averages are only internally consistent.");
  }
  finish(t);
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Variants.
// ---------------------------------------------------------------------------

namespace variants {

std::pair<MembershipVector, double> edm_backward_complement_base(
    SignForm form) {
  const Rule rule = benchmark_rule();
  const auto pc = make_premise_case(9, rule);
  const ExtensionPlan plan =
      extension_factor(rule.consequent.size(), rule.antecedent.size());
  const MV reversed_antecedent =
      extend_vector(complement(rule.consequent), plan.factor_a);
  const MV reversed_consequent =
      extend_vector(complement(rule.antecedent), plan.factor_b);
  const double distance = edm_distance(pc.premise, reversed_antecedent);
  const auto sign = sign_vector(pc.premise, reversed_antecedent, form);
  const auto c = vectorial_dm(distance, sign);
  // Case-4 semantics complement the base inside the tilt step, which is
  // exactly the alternate reading this variant documents.
  const auto qq = quasi_quasi(reversed_consequent, c, 4, std::nullopt);
  const MV conclusion = min_max_normalize(
      downsample(qq, rule.antecedent.size(), plan.factor_b));
  return {conclusion, rpcf(conclusion, pc.expected)};
}

std::pair<MembershipVector, double> strict_godel_more_or_less() {
  const Rule rule = benchmark_rule();
  const auto pc = make_premise_case(3, rule);
  const MV conclusion = cri_fmp_on_grid(
      rule, pc.premise,
      [](double a, double b) { return tnorm(ResiduatedPair::godel, a, b); },
      [](double a, double b) { return strict_godel_implication(a, b); });
  return {conclusion, rpcf(conclusion, pc.expected)};
}

double cri_backward_score_vs_tilt(ResiduatedPair pair) {
  const Rule rule = benchmark_rule();
  const auto pc = make_premise_case(9, rule);
  const MV conclusion = cri_fmt_on_grid(rule, pc.premise, pair);
  return rpcf(conclusion, tilted_antecedent());
}

double aars_forward_score_vs_complement(AarsForm form) {
  const Rule rule = benchmark_rule();
  const auto pc =
      make_premise_case(5, rule, tilted_antecedent(), tilted_consequent());
  const MV conclusion = aars_fmp_on_grid(rule, pc.premise, form);
  return rpcf(conclusion, complement(rule.consequent));
}

std::pair<MembershipVector, double> aars_backward_tilted(AarsForm form) {
  const Rule rule = benchmark_rule();
  const auto pc =
      make_premise_case(10, rule, tilted_antecedent(), tilted_consequent());
  const ExtensionPlan plan =
      extension_factor(rule.antecedent.size(), rule.consequent.size());
  const double similarity = aars_similarity(
      pc.premise, extend_vector(tilted_consequent(), plan.factor_b));
  const MV conclusion = aars_apply(tilted_antecedent(), similarity, form);
  return {conclusion, rpcf(conclusion, pc.expected)};
}

}  // namespace variants

// ---------------------------------------------------------------------------
// Entry points.
// ---------------------------------------------------------------------------

std::vector<int> all_table_ids() {
  return {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
}

TableResult reproduce_table(int id) {
  switch (id) {
    case 2:
    case 3:
      return table_edm_fmp(id);
    case 4:
      return table_edm_forward_summary();
    case 5:
    case 6:
      return table_edm_fmt(id);
    case 7:
      return table_edm_backward_summary();
    case 8:
      return table_edm_overall_summary();
    case 9:
      return table_qip();
    case 10:
      return table_cri();
    case 11:
      return table_tip();
    case 12:
      return table_aars();
    case 13:
    case 14:
      return table_summary(id);
  }
  throw UnsupportedCombination("unknown table id: " + std::to_string(id));
}

TableResult comprehensive_summary() {
  TableResult t;
  t.id = 1;
  t.title = "Comprehensive method summary, both classes";

  const auto class_mean = [](double c1, double c2) { return (c1 + c2) / 2.0; };

  // Distance method: mean over the two sign forms of the per-class averages.
  {
    double fmp_f = 0.0, fmt_f = 0.0, fmt_v = 0.0;
    for (SignForm form : {SignForm::three_valued, SignForm::two_valued}) {
      fmp_f += class_mean(fmp_avg(suite(edm_id(form), 1)),
                          fmp_avg(suite(edm_id(form), 2)));
      fmt_f += class_mean(fmt_avg(suite(edm_id(form), 1)),
                          fmt_avg(suite(edm_id(form), 2)));
      fmt_v += class_mean(edm_fmt1_variant_avg(form),
                          fmt_avg(suite(edm_id(form), 2)));
    }
    fmp_f /= 2.0;
    fmt_f /= 2.0;
    fmt_v /= 2.0;
    const std::string note =
        "Backward side carries the complemented-base case-9 reading.";
    t.aggregates.push_back(check_aggregate("edm: forward", fmp_f, std::nullopt,
                                           91.57, kCompoundTol, false));
    t.aggregates.push_back(check_aggregate("edm: backward", fmt_f, fmt_v,
                                           88.56, kCompoundTol, true, note));
    t.aggregates.push_back(check_aggregate(
        "edm: average", (fmp_f + fmt_f) / 2.0, (fmp_f + fmt_v) / 2.0, 90.07,
        kCompoundTol, true, note));
  }

  // Residuated-pair families: mean over the four pairs, then the two classes.
  const auto pair_family = [&](Family family, double& fmp_f, double& fmt_f) {
    fmp_f = fmt_f = 0.0;
    for (int class_id : {1, 2}) {
      double fmp_c = 0.0, fmt_c = 0.0;
      for (ResiduatedPair pair : kPairOrder) {
        const auto& rep = suite(pair_id(family, pair), class_id);
        fmp_c += fmp_avg(rep);
        fmt_c += fmt_avg(rep);
      }
      fmp_f += fmp_c / 4.0;
      fmt_f += fmt_c / 4.0;
    }
    fmp_f /= 2.0;
    fmt_f /= 2.0;
  };

  {
    double fmp_f = 0.0, fmt_f = 0.0;
    pair_family(Family::cri, fmp_f, fmt_f);
    double fmt_v = 0.0;  // class-1 backward with the tilt-scored case 9
    for (ResiduatedPair pair : kPairOrder) fmt_v += cri_fmt1_variant_avg(pair);
    fmt_v = class_mean(fmt_v / 4.0,
                       [&] {
                         double s = 0.0;
                         for (ResiduatedPair pair : kPairOrder)
                           s += fmt_avg(suite(pair_id(Family::cri, pair), 2));
                         return s / 4.0;
                       }());
    t.aggregates.push_back(check_aggregate("cri: forward", fmp_f, std::nullopt,
                                           92.87, kCompoundTol, false));
    t.aggregates.push_back(check_aggregate(
        "cri: backward", fmt_f, fmt_v, 61.31, kCompoundTol, false,
        "Class-1 side of the record carries the tilt-scored case-9 reading."));
    t.aggregates.push_back(check_aggregate("cri: average", (fmp_f + fmt_f) / 2.0,
                                           (fmp_f + fmt_v) / 2.0, 77.09,
                                           kCompoundTol, false));
  }

  {
    double fmp_f = 0.0, fmt_f = 0.0;
    pair_family(Family::tip, fmp_f, fmt_f);
    t.aggregates.push_back(check_aggregate("tip: forward", fmp_f, std::nullopt,
                                           92.87, kCompoundTol, false));
    t.aggregates.push_back(check_aggregate(
        "tip: backward", fmt_f, std::nullopt, 42.68, kCompoundTol, true,
        "Consistent only with the recorded per-class averages, two of which "
        "match no computed reading."));
    t.aggregates.push_back(check_aggregate(
        "tip: average", (fmp_f + fmt_f) / 2.0, std::nullopt, 67.77,
        kCompoundTol, true,
        "Consistent only with the recorded per-class averages."));
  }

  {
    double fmp_f = 0.0, fmt_f = 0.0;
    pair_family(Family::qip, fmp_f, fmt_f);
    t.aggregates.push_back(check_aggregate(
        "qip: forward", fmp_f, std::nullopt, 81.22, kCompoundTol, true,
        "Recorded value is inconsistent with the recorded per-class tables, "
        "which imply roughly 87.5."));
    t.aggregates.push_back(check_aggregate(
        "qip: backward", fmt_f, std::nullopt, 41.83, kCompoundTol, true,
        "Consistent only with the recorded per-class averages, one of which "
        "matches no computed reading."));
    t.aggregates.push_back(check_aggregate(
        "qip: average", (fmp_f + fmt_f) / 2.0, std::nullopt, 61.53,
        kCompoundTol, true,
        "Consistent only with the recorded per-row values."));
  }

  {
    double fmp_f = 0.0, fmt_f = 0.0, fmp_v = 0.0, fmt_v = 0.0;
    for (AarsForm form : {AarsForm::reduction, AarsForm::more_or_less}) {
      fmp_f += class_mean(fmp_avg(suite(aars_id(form), 1)),
                          fmp_avg(suite(aars_id(form), 2)));
      fmt_f += class_mean(fmt_avg(suite(aars_id(form), 1)),
                          fmt_avg(suite(aars_id(form), 2)));
      fmp_v += class_mean(fmp_avg(suite(aars_id(form), 1)),
                          aars_fmp2_variant_avg(form));
      fmt_v += class_mean(fmt_avg(suite(aars_id(form), 1)),
                          aars_fmt2_variant_avg(form));
    }
    fmp_f /= 2.0;
    fmt_f /= 2.0;
    fmp_v /= 2.0;
    fmt_v /= 2.0;
    const std::string note =
        "Class-2 side of the record carries the tilted-row variants.";
    t.aggregates.push_back(check_aggregate("aars: forward", fmp_f, fmp_v,
                                           75.68, kCompoundTol, true, note));
    t.aggregates.push_back(check_aggregate("aars: backward", fmt_f, fmt_v,
                                           38.14, kCompoundTol, false, note));
    t.aggregates.push_back(check_aggregate(
        "aars: average", (fmp_f + fmt_f) / 2.0, (fmp_v + fmt_v) / 2.0, 56.91,
        kCompoundTol, true, note));
  }

  finish(t);
  return t;
}

}  // namespace far::reference
