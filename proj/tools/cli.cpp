#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "far/baselines.hpp"
#include "far/engine.hpp"
#include "far/errors.hpp"
#include "far/evaluation.hpp"
#include "far/grid.hpp"
#include "far/membership.hpp"
#include "far/norms.hpp"
#include "far/reference.hpp"

namespace far::cli {
namespace {

using nlohmann::json;

// --- formatting ----------------------------------------------------------------

std::string fmt_fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

std::string fmt_grade(double x) { return fmt_fixed(x, 4); }
std::string fmt_percent(double x) { return fmt_fixed(x, 2); }

std::string join_grades(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += fmt_grade(v[i]);
  }
  return out;
}

std::string join_signs(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) out += (c == '|') ? '/' : c;
  return out;
}

std::string md_row(const std::vector<std::string>& fields) {
  std::string out = "|";
  for (const auto& f : fields) out += " " + md_field(f) + " |";
  return out + "\n";
}

std::string md_separator(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += " --- |";
  return out + "\n";
}

// One output table rendered to every supported format.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& t) {
  std::string out = csv_row(t.header);
  for (const auto& row : t.rows) out += csv_row(row);
  return out;
}

std::string render_markdown(const Table& t, const std::string& title) {
  std::string out;
  if (!title.empty()) out += "## " + title + "\n\n";
  out += md_row(t.header);
  out += md_separator(t.header.size());
  for (const auto& row : t.rows) out += md_row(row);
  return out;
}

std::string status_name(reference::CellStatus status) {
  switch (status) {
    case reference::CellStatus::matched: return "matched";
    case reference::CellStatus::matched_variant: return "matched_variant";
    case reference::CellStatus::disputed: return "disputed";
    case reference::CellStatus::mismatch: return "mismatch";
  }
  return "unknown";
}

// --- config parsing --------------------------------------------------------------

struct PremiseSpec {
  int case_id = 1;
  std::optional<std::string> hedge;
  std::optional<MembershipVector> vector;  // raw premise (tilt for cases 5/10)
  std::optional<MembershipVector> target;  // output-side tilt, cases 5/10 only
};

struct RunConfig {
  std::string mode;
  Rule rule;
  std::vector<PremiseSpec> premises;
  std::vector<MethodId> methods;
  int class_id = 1;
  int repetitions = 6;
  std::string format = "csv";
  std::string out_path;
};

const json& require_key(const json& obj, const char* key,
                        const std::string& path) {
  if (!obj.is_object())
    throw SchemaError(path, "expected an object");
  if (!obj.contains(key))
    throw SchemaError(path + "." + key, "missing required key");
  return obj.at(key);
}

MembershipVector parse_vector(const json& node, const std::string& path) {
  if (!node.is_array() || node.empty())
    throw SchemaError(path, "expected a nonempty array of grades");
  MembershipVector v;
  v.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number())
      throw SchemaError(path + "[" + std::to_string(i) + "]",
                        "expected a number");
    v.push_back(node[i].get<double>());
  }
  try {
    validate_membership(v);
  } catch (const OutOfRange& e) {
    throw SchemaError(path + "[" + std::to_string(e.index()) + "]",
                      "grade outside [0, 1]");
  }
  return v;
}

MethodId parse_method(const json& node, const std::string& path,
                      const std::string& default_sign_form) {
  MethodId id;
  const json& family_node = require_key(node, "family", path);
  if (!family_node.is_string())
    throw SchemaError(path + ".family", "expected a string");
  try {
    id.family = family_from_name(family_node.get<std::string>());
  } catch (const UnsupportedCombination& e) {
    throw SchemaError(path + ".family", e.what());
  }

  std::string op;
  if (node.contains("operator")) {
    if (!node.at("operator").is_string())
      throw SchemaError(path + ".operator", "expected a string");
    op = node.at("operator").get<std::string>();
  }

  switch (id.family) {
    case Family::edm: {
      if (op.empty()) op = default_sign_form;
      if (op == "three_valued")
        id.form = SignForm::three_valued;
      else if (op == "two_valued")
        id.form = SignForm::two_valued;
      else
        throw SchemaError(path + ".operator",
                          "expected three_valued or two_valued, got \"" + op +
                              "\"");
      break;
    }
    case Family::aars: {
      if (op.empty())
        throw SchemaError(path + ".operator",
                          "missing (expected reduction or more_or_less)");
      if (op == "reduction")
        id.aars = AarsForm::reduction;
      else if (op == "more_or_less")
        id.aars = AarsForm::more_or_less;
      else
        throw SchemaError(path + ".operator",
                          "expected reduction or more_or_less, got \"" + op +
                              "\"");
      break;
    }
    default: {
      if (op.empty())
        throw SchemaError(path + ".operator",
                          "missing (expected a residuated-pair name)");
      try {
        id.pair = pair_from_name(op);
      } catch (const UnsupportedCombination& e) {
        throw SchemaError(path + ".operator", e.what());
      }
      break;
    }
  }
  return id;
}

RunConfig parse_config(const json& doc, const std::string& default_sign_form) {
  RunConfig cfg;
  if (!doc.is_object()) throw SchemaError("$", "expected an object");

  {
    const json& mode = require_key(doc, "mode", "$");
    if (!mode.is_string()) throw SchemaError("$.mode", "expected a string");
    cfg.mode = mode.get<std::string>();
    if (cfg.mode != "reason" && cfg.mode != "experiment" &&
        cfg.mode != "compare" && cfg.mode != "timing")
      throw SchemaError("$.mode",
                        "expected one of reason, experiment, compare, timing");
  }

  {
    const json& rule = require_key(doc, "rule", "$");
    cfg.rule.antecedent =
        parse_vector(require_key(rule, "antecedent", "$.rule"),
                     "$.rule.antecedent");
    cfg.rule.consequent =
        parse_vector(require_key(rule, "consequent", "$.rule"),
                     "$.rule.consequent");
  }

  if (doc.contains("premises")) {
    const json& premises = doc.at("premises");
    if (!premises.is_array())
      throw SchemaError("$.premises", "expected an array");
    for (std::size_t i = 0; i < premises.size(); ++i) {
      const std::string path = "$.premises[" + std::to_string(i) + "]";
      const json& p = premises[i];
      PremiseSpec spec;
      const json& case_node = require_key(p, "case", path);
      if (!case_node.is_number_integer())
        throw SchemaError(path + ".case", "expected an integer");
      spec.case_id = case_node.get<int>();
      if (spec.case_id < 1 || spec.case_id > 10)
        throw SchemaError(path + ".case", "expected a case number in 1..10");
      if (p.contains("hedge")) {
        if (!p.at("hedge").is_string())
          throw SchemaError(path + ".hedge", "expected a string");
        spec.hedge = p.at("hedge").get<std::string>();
      }
      if (p.contains("vector"))
        spec.vector = parse_vector(p.at("vector"), path + ".vector");
      if (p.contains("target")) {
        if (spec.case_id != 5 && spec.case_id != 10)
          throw SchemaError(path + ".target",
                            "only the tilted cases 5 and 10 take a target");
        spec.target = parse_vector(p.at("target"), path + ".target");
      }
      cfg.premises.push_back(std::move(spec));
    }
  }

  if (doc.contains("methods")) {
    const json& methods = doc.at("methods");
    if (!methods.is_array())
      throw SchemaError("$.methods", "expected an array");
    for (std::size_t i = 0; i < methods.size(); ++i)
      cfg.methods.push_back(
          parse_method(methods[i], "$.methods[" + std::to_string(i) + "]",
                       default_sign_form));
  }

  if (doc.contains("class")) {
    if (!doc.at("class").is_number_integer())
      throw SchemaError("$.class", "expected an integer");
    cfg.class_id = doc.at("class").get<int>();
    if (cfg.class_id != 1 && cfg.class_id != 2)
      throw SchemaError("$.class", "expected 1 or 2");
  }

  if (doc.contains("repetitions")) {
    if (!doc.at("repetitions").is_number_integer())
      throw SchemaError("$.repetitions", "expected an integer");
    cfg.repetitions = doc.at("repetitions").get<int>();
    if (cfg.repetitions < 1)
      throw SchemaError("$.repetitions", "expected a positive integer");
  }

  if (doc.contains("output")) {
    const json& output = doc.at("output");
    if (!output.is_object())
      throw SchemaError("$.output", "expected an object");
    if (output.contains("format")) {
      if (!output.at("format").is_string())
        throw SchemaError("$.output.format", "expected a string");
      cfg.format = output.at("format").get<std::string>();
      if (cfg.format != "csv" && cfg.format != "json" &&
          cfg.format != "markdown")
        throw SchemaError("$.output.format",
                          "expected one of csv, json, markdown");
    }
    if (output.contains("path")) {
      if (!output.at("path").is_string())
        throw SchemaError("$.output.path", "expected a string");
      cfg.out_path = output.at("path").get<std::string>();
    }
  }

  return cfg;
}

// --- premise construction ----------------------------------------------------------

// The hedge implied by a case number, as a config-facing name.
std::string implied_hedge_name(int case_id) {
  switch (case_id) {
    case 1:
    case 6: return "identity";
    case 2:
    case 7: return "very";
    case 3:
    case 8: return "more_or_less";
    case 4:
    case 9: return "not";
    default: return "custom";
  }
}

void check_hedge(const PremiseSpec& spec, const std::string& path) {
  if (!spec.hedge) return;
  const std::string implied =
      spec.vector ? "custom" : implied_hedge_name(spec.case_id);
  if (*spec.hedge != implied)
    throw SchemaError(path + ".hedge",
                      "case " + std::to_string(spec.case_id) +
                          " implies hedge \"" + implied + "\", got \"" +
                          *spec.hedge + "\"");
}

void check_raw_length(const MembershipVector& v, const Rule& rule, int case_id,
                      const std::string& path) {
  const Direction dir = case_direction(case_id);
  const std::size_t want = dir == Direction::fmp ? rule.antecedent.size()
                                                 : rule.consequent.size();
  const char* side = dir == Direction::fmp ? "antecedent" : "consequent";
  if (v.size() != want)
    throw SchemaError(path + ".vector",
                      "length " + std::to_string(v.size()) +
                          " does not match the " + side + " (" +
                          std::to_string(want) + ")");
}

// Tilted cases carry the premise tilt in `vector` and the output-side tilt in
// `target`; both are required and live on opposite universes.
void check_tilted(const PremiseSpec& spec, const Rule& rule,
                  const std::string& path) {
  if (!spec.vector)
    throw SchemaError(path + ".vector",
                      "the tilted case needs its premise vector");
  if (!spec.target)
    throw SchemaError(path + ".target",
                      "the tilted case needs the output-side tilt");
  check_raw_length(*spec.vector, rule, spec.case_id, path);
  const Direction dir = case_direction(spec.case_id);
  const std::size_t target_len = dir == Direction::fmp
                                     ? rule.consequent.size()
                                     : rule.antecedent.size();
  if (spec.target->size() != target_len)
    throw SchemaError(path + ".target",
                      "length " + std::to_string(spec.target->size()) +
                          " does not match the output universe (" +
                          std::to_string(target_len) + ")");
}

// Builds the scored premise case for compare mode. Explicit vectors are raw
// (original-universe) premises and are extended here; cases 5/10 additionally
// need the output-side tilt from `target`.
PremiseCase build_premise_case(const PremiseSpec& spec, const Rule& rule,
                               const std::string& path) {
  check_hedge(spec, path);
  const ExtensionPlan plan =
      extension_factor(rule.antecedent.size(), rule.consequent.size());
  const Direction dir = case_direction(spec.case_id);

  if (spec.case_id == 5 || spec.case_id == 10) {
    check_tilted(spec, rule, path);
    return spec.case_id == 5
               ? make_premise_case(5, rule, *spec.vector, *spec.target)
               : make_premise_case(10, rule, *spec.target, *spec.vector);
  }

  if (spec.vector) {
    check_raw_length(*spec.vector, rule, spec.case_id, path);
    PremiseCase pc;
    pc.case_id = spec.case_id;
    pc.hedge = Hedge::custom(*spec.vector);
    const std::size_t factor =
        dir == Direction::fmp ? plan.factor_a : plan.factor_b;
    pc.premise = extend_vector(*spec.vector, factor);
    pc.expected = expected_conclusion(spec.case_id, rule);
    return pc;
  }

  return make_premise_case(spec.case_id, rule);
}

// --- output sinks -------------------------------------------------------------------

void write_text(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path())
    std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot open \"" + path + "\" for writing");
  out << content;
  if (!out) throw IoError("failed while writing \"" + path + "\"");
}

json rule_to_json(const Rule& rule) {
  return json{{"antecedent", rule.antecedent},
              {"consequent", rule.consequent}};
}

// --- reason mode ---------------------------------------------------------------------

json trace_to_json(const ReasoningTrace& t) {
  return json{{"u", t.plan.u},
              {"v", t.plan.v},
              {"L", t.plan.L},
              {"factor_a", t.plan.factor_a},
              {"factor_b", t.plan.factor_b},
              {"multiplicity", t.plan.n},
              {"extended_antecedent", t.extended_antecedent},
              {"extended_premise", t.extended_premise},
              {"extended_consequent", t.extended_consequent},
              {"edm", t.edm},
              {"sign", t.sign},
              {"vectorial_dm", t.vectorial_dm},
              {"quasi_quasi", t.quasi_quasi},
              {"quasi", t.quasi},
              {"eta", t.eta},
              {"xi", t.xi},
              {"conclusion", t.conclusion}};
}

std::vector<std::pair<std::string, std::string>> trace_fields(
    const ReasoningTrace& t) {
  return {{"u", std::to_string(t.plan.u)},
          {"v", std::to_string(t.plan.v)},
          {"L", std::to_string(t.plan.L)},
          {"factor_a", std::to_string(t.plan.factor_a)},
          {"factor_b", std::to_string(t.plan.factor_b)},
          {"multiplicity", std::to_string(t.plan.n)},
          {"extended_antecedent", join_grades(t.extended_antecedent)},
          {"extended_premise", join_grades(t.extended_premise)},
          {"extended_consequent", join_grades(t.extended_consequent)},
          {"edm", fmt_grade(t.edm)},
          {"sign", join_signs(t.sign)},
          {"vectorial_dm", join_grades(t.vectorial_dm)},
          {"quasi_quasi", join_grades(t.quasi_quasi)},
          {"quasi", join_grades(t.quasi)},
          {"eta", fmt_grade(t.eta)},
          {"xi", fmt_grade(t.xi)},
          {"conclusion", join_grades(t.conclusion)}};
}

int run_reason(const RunConfig& cfg) {
  if (cfg.premises.empty())
    throw SchemaError("$.premises", "reason mode needs at least one premise");
  if (cfg.methods.empty())
    throw SchemaError("$.methods", "reason mode needs at least one method");
  for (const MethodId& m : cfg.methods)
    if (m.family != Family::edm)
      throw SchemaError("$.methods",
                        "reason mode traces the distance method only");

  struct Entry {
    MethodId method;
    int case_id;
    ReasoningTrace trace;
  };
  std::vector<Entry> entries;
  for (const MethodId& m : cfg.methods) {
    for (std::size_t i = 0; i < cfg.premises.size(); ++i) {
      const PremiseSpec& spec = cfg.premises[i];
      const std::string path = "$.premises[" + std::to_string(i) + "]";
      check_hedge(spec, path);
      const Direction dir = case_direction(spec.case_id);
      ReasoningTrace trace;
      if (spec.case_id == 5 || spec.case_id == 10) {
        check_tilted(spec, cfg.rule, path);
        trace = dir == Direction::fmp
                    ? fmp_edm(cfg.rule, *spec.vector, spec.case_id, m.form,
                              *spec.target)
                    : fmt_edm(cfg.rule, *spec.vector, spec.case_id, m.form,
                              *spec.target);
      } else if (spec.vector) {
        check_raw_length(*spec.vector, cfg.rule, spec.case_id, path);
        trace = dir == Direction::fmp
                    ? fmp_edm(cfg.rule, *spec.vector, spec.case_id, m.form)
                    : fmt_edm(cfg.rule, *spec.vector, spec.case_id, m.form);
      } else {
        const PremiseCase pc = make_premise_case(spec.case_id, cfg.rule);
        trace = dir == Direction::fmp
                    ? fmp_edm_extended(cfg.rule, pc.premise, spec.case_id,
                                       m.form)
                    : fmt_edm_extended(cfg.rule, pc.premise, spec.case_id,
                                       m.form);
      }
      entries.push_back({m, spec.case_id, std::move(trace)});
    }
  }

  std::string content;
  if (cfg.format == "json") {
    json results = json::array();
    for (const Entry& e : entries)
      results.push_back(json{{"method", family_name(e.method.family)},
                             {"operator", operator_label(e.method)},
                             {"case", e.case_id},
                             {"trace", trace_to_json(e.trace)}});
    content = json{{"mode", "reason"},
                   {"rule", rule_to_json(cfg.rule)},
                   {"results", results}}
                  .dump(2) +
              "\n";
  } else if (cfg.format == "markdown") {
    for (const Entry& e : entries) {
      Table t;
      t.header = {"field", "value"};
      for (const auto& [key, value] : trace_fields(e.trace))
        t.rows.push_back({key, value});
      content += render_markdown(
          t, family_name(e.method.family) + " (" + operator_label(e.method) +
                 "), case " + std::to_string(e.case_id));
      content += "\n";
    }
  } else {
    Table t;
    t.header = {"method", "operator", "case_id", "field", "value"};
    for (const Entry& e : entries)
      for (const auto& [key, value] : trace_fields(e.trace))
        t.rows.push_back({family_name(e.method.family),
                          operator_label(e.method),
                          std::to_string(e.case_id), key, value});
    content = render_csv(t);
  }
  write_text(content, cfg.out_path);
  return 0;
}

// --- compare / experiment modes --------------------------------------------------------

Table records_table(const std::vector<RpcfRecord>& records) {
  Table t;
  t.header = {"method", "operator", "case_id",
              "premise", "conclusion", "rpcf_percent"};
  for (const RpcfRecord& r : records)
    t.rows.push_back({family_name(r.method.family), operator_label(r.method),
                      std::to_string(r.premise_case.case_id),
                      join_grades(r.premise_case.premise),
                      join_grades(r.conclusion),
                      fmt_percent(r.rpcf_percent)});
  return t;
}

json records_json(const std::vector<RpcfRecord>& records) {
  json out = json::array();
  for (const RpcfRecord& r : records)
    out.push_back(json{{"method", family_name(r.method.family)},
                       {"operator", operator_label(r.method)},
                       {"case", r.premise_case.case_id},
                       {"premise", r.premise_case.premise},
                       {"conclusion", r.conclusion},
                       {"rpcf_percent", r.rpcf_percent}});
  return out;
}

std::string render_records(const RunConfig& cfg, const std::string& mode,
                           const std::vector<RpcfRecord>& records,
                           const std::vector<MethodAverages>& averages) {
  if (cfg.format == "json") {
    json doc{{"mode", mode},
             {"rule", rule_to_json(cfg.rule)},
             {"results", records_json(records)}};
    if (!averages.empty()) {
      json avg = json::array();
      for (const MethodAverages& a : averages)
        avg.push_back(json{{"method", family_name(a.method.family)},
                           {"operator", operator_label(a.method)},
                           {"fmp_avg", a.fmp_avg},
                           {"fmt_avg", a.fmt_avg},
                           {"total_avg", a.total_avg}});
      doc["averages"] = avg;
      doc["class"] = cfg.class_id;
    }
    return doc.dump(2) + "\n";
  }

  Table t = records_table(records);
  for (const MethodAverages& a : averages) {
    const std::string method = family_name(a.method.family);
    const std::string op = operator_label(a.method);
    t.rows.push_back({method, op, "fmp_avg", "", "", fmt_percent(a.fmp_avg)});
    t.rows.push_back({method, op, "fmt_avg", "", "", fmt_percent(a.fmt_avg)});
    t.rows.push_back(
        {method, op, "total_avg", "", "", fmt_percent(a.total_avg)});
  }
  if (cfg.format == "markdown")
    return render_markdown(t, mode == "compare"
                                  ? "method comparison"
                                  : "class " + std::to_string(cfg.class_id) +
                                        " experiment");
  return render_csv(t);
}

int run_compare(const RunConfig& cfg) {
  if (cfg.premises.empty())
    throw SchemaError("$.premises", "compare mode needs at least one premise");
  if (cfg.methods.empty())
    throw SchemaError("$.methods", "compare mode needs at least one method");

  std::vector<RpcfRecord> records;
  for (const MethodId& m : cfg.methods) {
    for (std::size_t i = 0; i < cfg.premises.size(); ++i) {
      const PremiseCase pc = build_premise_case(
          cfg.premises[i], cfg.rule,
          "$.premises[" + std::to_string(i) + "]");
      records.push_back(run_case(m, cfg.rule, pc));
    }
  }
  write_text(render_records(cfg, "compare", records, {}), cfg.out_path);
  return 0;
}

// Extracts the class tilts from the premise list: the case-5 entry carries
// the antecedent-side tilt (its premise) and may carry the consequent-side
// tilt as its target; the case-10 entry the other way around.
void class_tilts(const RunConfig& cfg,
                 std::optional<MembershipVector>& st_antecedent,
                 std::optional<MembershipVector>& st_consequent) {
  for (const PremiseSpec& spec : cfg.premises) {
    if (spec.case_id == 5) {
      if (spec.vector) st_antecedent = spec.vector;
      if (spec.target) st_consequent = spec.target;
    } else if (spec.case_id == 10) {
      if (spec.vector) st_consequent = spec.vector;
      if (spec.target) st_antecedent = spec.target;
    }
  }
}

int run_experiment(const RunConfig& cfg) {
  if (cfg.methods.empty())
    throw SchemaError("$.methods",
                      "experiment mode needs at least one method");
  std::optional<MembershipVector> st_antecedent, st_consequent;
  class_tilts(cfg, st_antecedent, st_consequent);
  const ExperimentReport report = run_class_suite(
      cfg.methods, cfg.rule, cfg.class_id, st_antecedent, st_consequent);
  write_text(render_records(cfg, "experiment", report.records,
                            report.per_method),
             cfg.out_path);
  return 0;
}

int run_timing(const RunConfig& cfg) {
  if (cfg.methods.empty())
    throw SchemaError("$.methods", "timing mode needs at least one method");
  std::optional<MembershipVector> st_antecedent, st_consequent;
  class_tilts(cfg, st_antecedent, st_consequent);
  const std::vector<TimingRow> rows =
      timing_harness(cfg.methods, cfg.rule, cfg.class_id, st_antecedent,
                     st_consequent, cfg.repetitions);

  std::string content;
  if (cfg.format == "json") {
    json results = json::array();
    for (const TimingRow& r : rows)
      results.push_back(json{{"method", family_name(r.method.family)},
                             {"operator", operator_label(r.method)},
                             {"repetitions_ms", r.repetitions_ms},
                             {"mean_ms", r.mean_ms}});
    content = json{{"mode", "timing"},
                   {"class", cfg.class_id},
                   {"repetitions", cfg.repetitions},
                   {"results", results}}
                  .dump(2) +
              "\n";
  } else {
    Table t;
    t.header = {"method", "operator", "repetitions_ms", "mean_ms"};
    for (const TimingRow& r : rows)
      t.rows.push_back({family_name(r.method.family), operator_label(r.method),
                        join_grades(r.repetitions_ms), fmt_grade(r.mean_ms)});
    content = cfg.format == "markdown"
                  ? render_markdown(t, "timing (" +
                                           std::to_string(cfg.repetitions) +
                                           " repetitions)")
                  : render_csv(t);
  }
  write_text(content, cfg.out_path);
  return 0;
}

// --- reproduce mode ----------------------------------------------------------------

struct DiffStats {
  int matched = 0;
  int variant = 0;
  int disputed = 0;
  int failed = 0;
};

double vector_gap(const MembershipVector& got, const MembershipVector& want) {
  if (got.size() != want.size()) return 1.0;
  double gap = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i)
    gap = std::max(gap, std::abs(got[i] - want[i]));
  return gap;
}

// Re-scores one cell at the requested tolerance: the smaller of the faithful
// and variant gaps must stay within it. Disputed cells never fail.
bool cell_passes(const reference::CellResult& cell, double score_tol) {
  if (cell.status == reference::CellStatus::disputed) return true;
  double score_gap = 0.0;
  if (cell.recorded_rpcf) {
    score_gap = std::abs(cell.rpcf - *cell.recorded_rpcf);
    if (cell.variant_rpcf)
      score_gap = std::min(score_gap,
                           std::abs(*cell.variant_rpcf - *cell.recorded_rpcf));
  }
  double vec_gap = 0.0;
  if (cell.recorded_conclusion) {
    vec_gap = vector_gap(cell.conclusion, *cell.recorded_conclusion);
    if (cell.variant_conclusion)
      vec_gap = std::min(
          vec_gap, vector_gap(*cell.variant_conclusion,
                              *cell.recorded_conclusion));
  }
  return score_gap <= score_tol && vec_gap <= 5e-3;
}

bool aggregate_passes(const reference::AggregateResult& agg,
                      std::optional<double> tol_override) {
  if (agg.status == reference::CellStatus::disputed) return true;
  double gap = std::abs(agg.computed - agg.recorded);
  if (agg.variant)
    gap = std::min(gap, std::abs(*agg.variant - agg.recorded));
  return gap <= tol_override.value_or(agg.tolerance);
}

void tally(reference::CellStatus status, bool passed, DiffStats& stats) {
  if (!passed) {
    ++stats.failed;
    return;
  }
  switch (status) {
    case reference::CellStatus::matched: ++stats.matched; break;
    case reference::CellStatus::matched_variant: ++stats.variant; break;
    case reference::CellStatus::disputed: ++stats.disputed; break;
    case reference::CellStatus::mismatch: ++stats.failed; break;
  }
}

std::string opt_grades(const std::optional<MembershipVector>& v) {
  return v ? join_grades(*v) : "";
}

std::string opt_percent(const std::optional<double>& x) {
  return x ? fmt_percent(*x) : "";
}

Table table_to_rows(const reference::TableResult& table) {
  Table t;
  t.header = {"kind",     "method",        "operator",
              "label",    "conclusion",    "rpcf_percent",
              "recorded_conclusion", "recorded_rpcf",
              "variant_conclusion",  "variant_rpcf",
              "status",   "note"};
  for (const auto& cell : table.cells)
    t.rows.push_back({"cell", cell.method, cell.op, cell.case_label,
                      join_grades(cell.conclusion), fmt_percent(cell.rpcf),
                      opt_grades(cell.recorded_conclusion),
                      opt_percent(cell.recorded_rpcf),
                      opt_grades(cell.variant_conclusion),
                      opt_percent(cell.variant_rpcf),
                      status_name(cell.status), cell.note});
  for (const auto& agg : table.aggregates)
    t.rows.push_back({"aggregate", "", "", agg.label, "",
                      fmt_percent(agg.computed), "",
                      fmt_percent(agg.recorded), "",
                      opt_percent(agg.variant), status_name(agg.status),
                      agg.note});
  for (const auto& note : table.metadata)
    t.rows.push_back(
        {"metadata", "", "", "", "", "", "", "", "", "", "", note});
  return t;
}

json cell_to_json(const reference::CellResult& cell) {
  json out{{"method", cell.method},
           {"operator", cell.op},
           {"label", cell.case_label},
           {"conclusion", cell.conclusion},
           {"rpcf_percent", cell.rpcf},
           {"status", status_name(cell.status)}};
  if (cell.recorded_conclusion)
    out["recorded_conclusion"] = *cell.recorded_conclusion;
  if (cell.recorded_rpcf) out["recorded_rpcf"] = *cell.recorded_rpcf;
  if (cell.variant_conclusion)
    out["variant_conclusion"] = *cell.variant_conclusion;
  if (cell.variant_rpcf) out["variant_rpcf"] = *cell.variant_rpcf;
  if (!cell.note.empty()) out["note"] = cell.note;
  return out;
}

json table_to_json(const reference::TableResult& table) {
  json cells = json::array();
  for (const auto& cell : table.cells) cells.push_back(cell_to_json(cell));
  json aggregates = json::array();
  for (const auto& agg : table.aggregates) {
    json a{{"label", agg.label},
           {"computed", agg.computed},
           {"recorded", agg.recorded},
           {"tolerance", agg.tolerance},
           {"status", status_name(agg.status)}};
    if (agg.variant) a["variant"] = *agg.variant;
    if (!agg.note.empty()) a["note"] = agg.note;
    aggregates.push_back(a);
  }
  return json{{"id", table.id},
              {"title", table.title},
              {"cells", cells},
              {"aggregates", aggregates},
              {"metadata", table.metadata}};
}

std::string render_table_result(const reference::TableResult& table,
                                const std::string& format) {
  if (format == "json") return table_to_json(table).dump(2) + "\n";
  const Table t = table_to_rows(table);
  if (format == "markdown") {
    std::string out = render_markdown(t, table.title);
    return out;
  }
  return render_csv(t);
}

int run_reproduce(std::vector<int> selection, const std::string& format,
                  const std::string& out_dir,
                  std::optional<double> tolerance) {
  if (selection.empty()) {
    std::printf("reproduction: PASS (empty selection)\n");
    return 0;
  }
  const std::string ext = format == "json"      ? ".json"
                          : format == "markdown" ? ".md"
                                                 : ".csv";
  std::string summary;
  int total_failed = 0;
  for (int id : selection) {
    const reference::TableResult table =
        id == 1 ? reference::comprehensive_summary()
                : reference::reproduce_table(id);
    DiffStats stats;
    for (const auto& cell : table.cells)
      tally(cell.status, cell_passes(cell, tolerance.value_or(0.15)), stats);
    for (const auto& agg : table.aggregates)
      tally(agg.status, aggregate_passes(agg, tolerance), stats);
    total_failed += stats.failed;

    const std::string content = render_table_result(table, format);
    if (out_dir.empty()) {
      std::fputs(content.c_str(), stdout);
    } else {
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) throw IoError("cannot create directory \"" + out_dir + "\"");
      write_text(content, (std::filesystem::path(out_dir) /
                           ("table_" + std::to_string(id) + ext))
                              .string());
    }

    char line[256];
    std::snprintf(line, sizeof(line),
                  "table %d: %zu cells + %zu aggregates; %d matched, "
                  "%d variant, %d disputed, %d failed\n",
                  id, table.cells.size(), table.aggregates.size(),
                  stats.matched, stats.variant, stats.disputed, stats.failed);
    summary += line;
  }
  summary += std::string("reproduction: ") +
             (total_failed == 0 ? "PASS" : "FAIL") + " (" +
             std::to_string(selection.size()) + " tables, " +
             std::to_string(total_failed) + " failures)\n";
  std::fputs(summary.c_str(), stdout);
  if (!out_dir.empty())
    write_text(summary,
               (std::filesystem::path(out_dir) / "summary.txt").string());
  return total_failed == 0 ? 0 : 2;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{
      "Fuzzy approximate-reasoning toolkit: single inferences, benchmark "
      "suites and reference-table reproduction"};
  std::string mode, config_path, format, out_path;
  std::string sign_form = "three_valued";
  std::vector<int> tables;
  double tolerance = -1.0;

  app.add_option("--mode", mode,
                 "reason | experiment | compare | timing | reproduce")
      ->check(CLI::IsMember(
          {"reason", "experiment", "compare", "timing", "reproduce"}));
  app.add_option("--config", config_path, "path to a run-config document");
  app.add_option("--table", tables,
                 "reference table ids for reproduce mode (default: all)")
      ->delimiter(',');
  app.add_option("--format", format, "csv | json | markdown")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  app.add_option("--out", out_path,
                 "output file (reproduce mode: output directory)");
  app.add_option("--sign-form", sign_form,
                 "default sign form for distance-method entries")
      ->check(CLI::IsMember({"three_valued", "two_valued"}));
  app.add_option("--tolerance", tolerance,
                 "score tolerance override for reproduce mode (percentage "
                 "points)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::optional<json> doc;
    if (!config_path.empty()) {
      std::ifstream in(config_path, std::ios::binary);
      if (!in) throw IoError("cannot open \"" + config_path + "\"");
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw SchemaError("$", e.what());
      }
    }

    if (mode.empty() && doc && doc->contains("mode") &&
        doc->at("mode").is_string())
      mode = doc->at("mode").get<std::string>();
    if (mode.empty()) {
      std::fprintf(stderr,
                   "error: no mode given (use --mode or a config document)\n");
      return 1;
    }

    if (mode == "reproduce") {
      std::vector<int> selection =
          tables.empty() ? reference::all_table_ids() : tables;
      return run_reproduce(std::move(selection),
                           format.empty() ? "csv" : format, out_path,
                           tolerance >= 0.0 ? std::optional<double>(tolerance)
                                            : std::nullopt);
    }

    if (!doc) {
      std::fprintf(stderr, "error: mode \"%s\" requires --config\n",
                   mode.c_str());
      return 1;
    }
    RunConfig cfg = parse_config(*doc, sign_form);
    if (cfg.mode != mode)
      cfg.mode = mode;  // the flag overrides the document
    if (!format.empty()) cfg.format = format;
    if (!out_path.empty()) cfg.out_path = out_path;
    if (cfg.mode == "reason") {
      // fill the default sign form into method-less configs
      if (cfg.methods.empty()) {
        MethodId id;
        id.family = Family::edm;
        id.form = sign_form == "two_valued" ? SignForm::two_valued
                                            : SignForm::three_valued;
        cfg.methods.push_back(id);
      }
      return run_reason(cfg);
    }
    if (cfg.mode == "compare") return run_compare(cfg);
    if (cfg.mode == "experiment") return run_experiment(cfg);
    if (cfg.mode == "timing") return run_timing(cfg);
    std::fprintf(stderr, "error: unknown mode \"%s\"\n", cfg.mode.c_str());
    return 1;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace far::cli
