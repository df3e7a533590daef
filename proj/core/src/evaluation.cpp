#include "far/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "far/errors.hpp"

namespace far {

MembershipVector expected_conclusion(
    int case_id, const Rule& rule,
    const std::optional<MembershipVector>& st_vector, bool hedged_targets) {
  switch (case_id) {
    case 1:
      return rule.consequent;
    case 2:
      return hedged_targets ? very(rule.consequent) : rule.consequent;
    case 3:
      return hedged_targets ? more_or_less(rule.consequent) : rule.consequent;
    case 4:
      return complement(rule.consequent);
    case 5:
      if (!st_vector) throw MissingTiltVector(case_id);
      return *st_vector;
    case 6:
      return complement(rule.antecedent);
    case 7:
      return hedged_targets ? complement(very(rule.antecedent))
                            : complement(rule.antecedent);
    case 8:
      return hedged_targets ? complement(more_or_less(rule.antecedent))
                            : complement(rule.antecedent);
    case 9:
      return rule.antecedent;
    case 10:
      if (!st_vector) throw MissingTiltVector(case_id);
      return *st_vector;
    default:
      throw UnsupportedCombination("case id must be in 1..10, got " +
                                   std::to_string(case_id));
  }
}

double rpcf(const MembershipVector& conclusion,
            const MembershipVector& expected) {
  if (conclusion.size() != expected.size())
    throw LengthMismatch(conclusion.size(), expected.size(),
                         "conclusion and expected");
  if (conclusion.empty()) throw Empty("score arguments are empty");
  double sum = 0.0;
  for (std::size_t k = 0; k < conclusion.size(); ++k)
    sum += std::fabs(conclusion[k] - expected[k]);
  return (1.0 - sum / static_cast<double>(conclusion.size())) * 100.0;
}

PremiseCase make_premise_case(
    int case_id, const Rule& rule,
    const std::optional<MembershipVector>& st_antecedent,
    const std::optional<MembershipVector>& st_consequent,
    bool hedged_targets) {
  validate_rule(rule);
  const ExtensionPlan plan =
      extension_factor(rule.antecedent.size(), rule.consequent.size());
  const Direction dir = case_direction(case_id);

  PremiseCase pc;
  pc.case_id = case_id;

  if (dir == Direction::fmp) {
    const MembershipVector base = extend_vector(rule.antecedent, plan.factor_a);
    switch (case_id) {
      case 1:
        pc.hedge = Hedge::identity();
        pc.premise = base;
        break;
      case 2:
        pc.hedge = Hedge::very();
        pc.premise = very(base);
        break;
      case 3:
        pc.hedge = Hedge::more_or_less();
        pc.premise = more_or_less(base);
        break;
      case 4:
        pc.hedge = Hedge::complement();
        pc.premise = complement(base);
        break;
      case 5:
        if (!st_antecedent) throw MissingTiltVector(case_id);
        pc.hedge = Hedge::custom(*st_antecedent);
        pc.premise = extend_vector(*st_antecedent, plan.factor_a);
        break;
    }
    pc.expected =
        expected_conclusion(case_id, rule, st_consequent, hedged_targets);
  } else {
    // Backward premises are hedges of the consequent seen through the
    // reversed rule: the case-6 premise equals the reversed antecedent
    // (the identity row of this direction).
    const MembershipVector base = extend_vector(rule.consequent, plan.factor_b);
    switch (case_id) {
      case 6:
        pc.hedge = Hedge::identity();
        pc.premise = complement(base);
        break;
      case 7:
        pc.hedge = Hedge::very();
        pc.premise = complement(very(base));
        break;
      case 8:
        pc.hedge = Hedge::more_or_less();
        pc.premise = complement(more_or_less(base));
        break;
      case 9:
        pc.hedge = Hedge::complement();
        pc.premise = base;
        break;
      case 10:
        if (!st_consequent) throw MissingTiltVector(case_id);
        pc.hedge = Hedge::custom(*st_consequent);
        pc.premise = extend_vector(*st_consequent, plan.factor_b);
        break;
    }
    pc.expected =
        expected_conclusion(case_id, rule, st_antecedent, hedged_targets);
  }
  return pc;
}

RpcfRecord run_case(const MethodId& method, const Rule& rule,
                    const PremiseCase& premise_case) {
  const Direction dir = case_direction(premise_case.case_id);
  const int case_id = premise_case.case_id;
  const MembershipVector& premise = premise_case.premise;

  // For the tilted cases the expected vector is the tilted set itself, which
  // is also the reasoning base the distance method shifts.
  std::optional<MembershipVector> st;
  if (case_id == 5 || case_id == 10) st = premise_case.expected;

  MembershipVector conclusion;
  switch (method.family) {
    case Family::edm:
      conclusion = dir == Direction::fmp
                       ? fmp_edm_extended(rule, premise, case_id, method.form,
                                          st)
                             .conclusion
                       : fmt_edm_extended(rule, premise, case_id, method.form,
                                          st)
                             .conclusion;
      break;
    case Family::cri:
      conclusion = dir == Direction::fmp
                       ? cri_fmp_on_grid(rule, premise, method.pair)
                       : cri_fmt_on_grid(rule, premise, method.pair);
      break;
    case Family::tip:
      conclusion = dir == Direction::fmp
                       ? tip_fmp_on_grid(rule, premise, method.pair)
                       : tip_fmt_on_grid(rule, premise, method.pair);
      break;
    case Family::qip:
      conclusion = dir == Direction::fmp
                       ? qip_fmp_on_grid(rule, premise, method.pair)
                       : qip_fmt_on_grid(rule, premise, method.pair);
      break;
    case Family::aars:
      conclusion = dir == Direction::fmp
                       ? aars_fmp_on_grid(rule, premise, method.aars)
                       : aars_fmt_on_grid(rule, premise, method.aars);
      break;
    default:
      throw UnsupportedCombination("unrecognized method family");
  }

  RpcfRecord record;
  record.method = method;
  record.premise_case = premise_case;
  record.conclusion = std::move(conclusion);
  record.rpcf_percent = rpcf(record.conclusion, premise_case.expected);
  return record;
}

namespace {

std::vector<int> class_cases(int class_id) {
  if (class_id == 1) return {1, 2, 3, 4, 6, 7, 8, 9};
  if (class_id == 2) return {1, 2, 3, 5, 6, 7, 8, 10};
  throw UnsupportedCombination("class id must be 1 or 2, got " +
                               std::to_string(class_id));
}

// Means per method over a record sequence, grouped in first-appearance order.
std::vector<MethodAverages> method_averages(
    const std::vector<RpcfRecord>& records) {
  std::vector<MethodAverages> out;
  std::vector<MethodId> order;
  for (const auto& r : records)
    if (std::find(order.begin(), order.end(), r.method) == order.end())
      order.push_back(r.method);
  for (const auto& m : order) {
    double fmp_sum = 0.0, fmt_sum = 0.0;
    std::size_t fmp_n = 0, fmt_n = 0;
    for (const auto& r : records) {
      if (!(r.method == m)) continue;
      if (case_direction(r.premise_case.case_id) == Direction::fmp) {
        fmp_sum += r.rpcf_percent;
        ++fmp_n;
      } else {
        fmt_sum += r.rpcf_percent;
        ++fmt_n;
      }
    }
    MethodAverages avg;
    avg.method = m;
    avg.fmp_avg = fmp_n ? fmp_sum / static_cast<double>(fmp_n) : 0.0;
    avg.fmt_avg = fmt_n ? fmt_sum / static_cast<double>(fmt_n) : 0.0;
    if (fmp_n && fmt_n)
      avg.total_avg = (avg.fmp_avg + avg.fmt_avg) / 2.0;
    else
      avg.total_avg = fmp_n ? avg.fmp_avg : avg.fmt_avg;
    out.push_back(avg);
  }
  return out;
}

}  // namespace

ExperimentReport run_class_suite(
    const std::vector<MethodId>& methods, const Rule& rule, int class_id,
    const std::optional<MembershipVector>& st_antecedent,
    const std::optional<MembershipVector>& st_consequent) {
  validate_rule(rule);
  const std::vector<int> cases = class_cases(class_id);

  // Premises are shared across methods; build them once.
  std::vector<PremiseCase> premise_cases;
  premise_cases.reserve(cases.size());
  for (int c : cases)
    premise_cases.push_back(
        make_premise_case(c, rule, st_antecedent, st_consequent));

  ExperimentReport report;
  report.class_id = class_id;
  for (const auto& method : methods)
    for (const auto& pc : premise_cases)
      report.records.push_back(run_case(method, rule, pc));
  report.per_method = method_averages(report.records);
  return report;
}

ExperimentReport aggregate_report(
    const std::vector<ExperimentReport>& reports) {
  if (reports.empty())
    throw InconsistentMethods("cannot aggregate zero reports");

  // Recompute per-report method averages from the records so that callers
  // may aggregate reports with substituted cells.
  std::vector<std::vector<MethodAverages>> per_report;
  per_report.reserve(reports.size());
  for (const auto& r : reports) per_report.push_back(method_averages(r.records));

  const auto& first = per_report.front();
  for (const auto& other : per_report) {
    if (other.size() != first.size())
      throw InconsistentMethods("reports carry different method sets");
    for (std::size_t i = 0; i < first.size(); ++i)
      if (!(other[i].method == first[i].method))
        throw InconsistentMethods("reports carry different method sets");
  }

  ExperimentReport out;
  out.class_id = reports.size() == 1 ? reports.front().class_id : 0;
  for (const auto& r : reports)
    out.records.insert(out.records.end(), r.records.begin(), r.records.end());

  for (std::size_t i = 0; i < first.size(); ++i) {
    MethodAverages avg;
    avg.method = first[i].method;
    for (const auto& rep : per_report) {
      avg.fmp_avg += rep[i].fmp_avg;
      avg.fmt_avg += rep[i].fmt_avg;
      avg.total_avg += rep[i].total_avg;
    }
    const double n = static_cast<double>(per_report.size());
    avg.fmp_avg /= n;
    avg.fmt_avg /= n;
    avg.total_avg /= n;
    out.per_method.push_back(avg);
  }

  // Family rows: operator variants of one family averaged together.
  std::vector<Family> family_order;
  for (const auto& m : out.per_method)
    if (std::find(family_order.begin(), family_order.end(), m.method.family) ==
        family_order.end())
      family_order.push_back(m.method.family);
  for (Family fam : family_order) {
    FamilyAverages favg;
    favg.family = fam;
    double n = 0.0;
    for (const auto& m : out.per_method) {
      if (m.method.family != fam) continue;
      favg.fmp_avg += m.fmp_avg;
      favg.fmt_avg += m.fmt_avg;
      favg.total_avg += m.total_avg;
      n += 1.0;
    }
    favg.fmp_avg /= n;
    favg.fmt_avg /= n;
    favg.total_avg /= n;
    out.per_family.push_back(favg);
  }
  return out;
}

std::vector<TimingRow> timing_harness(
    const std::vector<MethodId>& methods, const Rule& rule, int class_id,
    const std::optional<MembershipVector>& st_antecedent,
    const std::optional<MembershipVector>& st_consequent, int repetitions) {
  if (repetitions < 1)
    throw UnsupportedCombination("repetitions must be at least 1");
  std::vector<TimingRow> rows;
  for (const auto& method : methods) {
    TimingRow row;
    row.method = method;
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const ExperimentReport r = run_class_suite({method}, rule, class_id,
                                                 st_antecedent, st_consequent);
      const auto t1 = std::chrono::steady_clock::now();
      // Fold a value into the timing so the evaluation cannot be elided.
      volatile double sink = r.per_method.empty() ? 0.0
                                                  : r.per_method[0].total_avg;
      (void)sink;
      row.repetitions_ms.push_back(
          std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    row.mean_ms = std::accumulate(row.repetitions_ms.begin(),
                                  row.repetitions_ms.end(), 0.0) /
                  static_cast<double>(row.repetitions_ms.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace far
