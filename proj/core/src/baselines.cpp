#include "far/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "far/errors.hpp"

namespace far {

std::string family_name(Family family) {
  switch (family) {
    case Family::edm:
      return "edm";
    case Family::cri:
      return "cri";
    case Family::tip:
      return "tip";
    case Family::qip:
      return "qip";
    case Family::aars:
      return "aars";
  }
  return "unknown";
}

Family family_from_name(const std::string& name) {
  if (name == "edm") return Family::edm;
  if (name == "cri") return Family::cri;
  if (name == "tip") return Family::tip;
  if (name == "qip") return Family::qip;
  if (name == "aars") return Family::aars;
  throw UnsupportedCombination("unknown method family: \"" + name + "\"");
}

std::string aars_form_name(AarsForm form) {
  return form == AarsForm::more_or_less ? "more_or_less" : "reduction";
}

std::string sign_form_name(SignForm form) {
  return form == SignForm::three_valued ? "three_valued" : "two_valued";
}

std::string operator_label(const MethodId& method) {
  switch (method.family) {
    case Family::edm:
      return sign_form_name(method.form);
    case Family::cri:
    case Family::tip:
    case Family::qip:
      return pair_name(method.pair);
    case Family::aars:
      return aars_form_name(method.aars);
  }
  return "unknown";
}

namespace {

void require_length(const MembershipVector& got, std::size_t want,
                    const char* context) {
  if (got.size() != want) throw LengthMismatch(got.size(), want, context);
}

// Forward sup-(t-norm) composition over arbitrary index sets.
MembershipVector sup_t_composition(const MembershipVector& premise,
                                   const MembershipVector& ant,
                                   const MembershipVector& cons,
                                   const ScalarOp& t, const ScalarOp& impl) {
  MembershipVector out(cons.size(), 0.0);
  for (std::size_t j = 0; j < cons.size(); ++j) {
    double best = 0.0;
    for (std::size_t i = 0; i < ant.size(); ++i)
      best = std::max(best, t(premise[i], impl(ant[i], cons[j])));
    out[j] = best;
  }
  return out;
}

ScalarOp tnorm_op(ResiduatedPair pair) {
  return [pair](double a, double b) { return tnorm(pair, a, b); };
}

ScalarOp impl_op(ResiduatedPair pair) {
  return [pair](double a, double b) { return implication(pair, a, b); };
}

}  // namespace

MembershipVector cri_fmp(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair) {
  require_length(premise, rule.antecedent.size(), "premise and antecedent");
  return sup_t_composition(premise, rule.antecedent, rule.consequent,
                           tnorm_op(pair), impl_op(pair));
}

MembershipVector cri_fmt(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair) {
  require_length(premise, rule.consequent.size(), "premise and consequent");
  const auto& a = rule.antecedent;
  MembershipVector out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < premise.size(); ++j)
      best = std::max(best,
                      tnorm(pair, premise[j], implication(pair, a[i],
                                                          premise[j])));
    out[i] = best;
  }
  return out;
}

MembershipVector tip_fmp(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair) {
  return cri_fmp(rule, premise, pair);
}

MembershipVector tip_fmt(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair) {
  require_length(premise, rule.consequent.size(), "premise and consequent");
  const auto& a = rule.antecedent;
  const auto& b = rule.consequent;
  MembershipVector out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = 1.0;
    for (std::size_t j = 0; j < b.size(); ++j)
      best = std::min(best, implication(pair, implication(pair, a[i], b[j]),
                                        premise[j]));
    out[i] = best;
  }
  return out;
}

MembershipVector qip_fmp(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair) {
  require_length(premise, rule.antecedent.size(), "premise and antecedent");
  const auto& a = rule.antecedent;
  const auto& b = rule.consequent;
  MembershipVector out(b.size(), 0.0);
  for (std::size_t j = 0; j < b.size(); ++j) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double inner =
          tnorm(pair, premise[i], implication(pair, premise[i], a[i]));
      best = std::max(best, tnorm(pair, inner, implication(pair, a[i], b[j])));
    }
    out[j] = best;
  }
  return out;
}

MembershipVector qip_fmt(const Rule& rule, const MembershipVector& premise,
                         ResiduatedPair pair) {
  require_length(premise, rule.consequent.size(), "premise and consequent");
  const auto& a = rule.antecedent;
  const auto& b = rule.consequent;
  MembershipVector out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double inner = tnorm(pair, a[i], implication(pair, a[i], b[j]));
      best = std::max(best,
                      tnorm(pair, inner, implication(pair, b[j], premise[j])));
    }
    out[i] = best;
  }
  return out;
}

double aars_similarity(const MembershipVector& p, const MembershipVector& q) {
  if (p.size() != q.size())
    throw LengthMismatch(p.size(), q.size(), "similarity arguments");
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double d = p[k] - q[k];
    sum += d * d;
  }
  return 1.0 / (1.0 + std::sqrt(sum / static_cast<double>(p.size())));
}

MembershipVector aars_apply(const MembershipVector& basis, double similarity,
                            AarsForm form) {
  MembershipVector out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out[k] = form == AarsForm::more_or_less
                 ? std::min(1.0, basis[k] / similarity)
                 : basis[k] * similarity;
  }
  return out;
}

MembershipVector aars_fmp(const Rule& rule, const MembershipVector& premise,
                          AarsForm form) {
  require_length(premise, rule.antecedent.size(), "premise and antecedent");
  return aars_apply(rule.consequent, aars_similarity(premise, rule.antecedent),
                    form);
}

MembershipVector aars_fmt(const Rule& rule, const MembershipVector& premise,
                          AarsForm form) {
  require_length(premise, rule.consequent.size(), "premise and consequent");
  return aars_apply(rule.antecedent, aars_similarity(premise, rule.consequent),
                    form);
}

// --- Common-grid harness -----------------------------------------------------

namespace {

struct GridInputs {
  ExtensionPlan plan;
  MembershipVector ant;   // extended antecedent
  MembershipVector cons;  // extended consequent
};

GridInputs grid_inputs(const Rule& rule) {
  GridInputs g;
  g.plan = extension_factor(rule.antecedent.size(), rule.consequent.size());
  g.ant = extend_vector(rule.antecedent, g.plan.factor_a);
  g.cons = extend_vector(rule.consequent, g.plan.factor_b);
  return g;
}

void require_grid_premise(const MembershipVector& premise_ext,
                          const ExtensionPlan& plan) {
  if (premise_ext.size() != plan.L)
    throw LengthMismatch(premise_ext.size(), plan.L,
                         "common-grid premise and plan");
}

}  // namespace

MembershipVector cri_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 const ScalarOp& tnorm_fn,
                                 const ScalarOp& impl_fn) {
  const GridInputs g = grid_inputs(rule);
  require_grid_premise(premise_ext, g.plan);
  const MembershipVector ext =
      sup_t_composition(premise_ext, g.ant, g.cons, tnorm_fn, impl_fn);
  return downsample(ext, g.plan.v, g.plan.factor_b);
}

MembershipVector cri_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair) {
  return cri_fmp_on_grid(rule, premise_ext, tnorm_op(pair), impl_op(pair));
}

MembershipVector cri_fmt_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair) {
  const GridInputs g = grid_inputs(rule);
  require_grid_premise(premise_ext, g.plan);
  MembershipVector ext(g.plan.L, 0.0);
  for (std::size_t i = 0; i < g.plan.L; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < g.plan.L; ++j)
      best = std::max(best, tnorm(pair, premise_ext[j],
                                  implication(pair, g.ant[i],
                                              premise_ext[j])));
    ext[i] = best;
  }
  return downsample(ext, g.plan.u, g.plan.factor_a);
}

MembershipVector tip_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 const ScalarOp& tnorm_fn,
                                 const ScalarOp& impl_fn) {
  return cri_fmp_on_grid(rule, premise_ext, tnorm_fn, impl_fn);
}

MembershipVector tip_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair) {
  return cri_fmp_on_grid(rule, premise_ext, pair);
}

MembershipVector tip_fmt_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair) {
  const GridInputs g = grid_inputs(rule);
  require_grid_premise(premise_ext, g.plan);
  MembershipVector ext(g.plan.L, 0.0);
  for (std::size_t i = 0; i < g.plan.L; ++i) {
    double best = 1.0;
    for (std::size_t j = 0; j < g.plan.L; ++j)
      best = std::min(best,
                      implication(pair, implication(pair, g.ant[i], g.cons[j]),
                                  premise_ext[j]));
    ext[i] = best;
  }
  return downsample(ext, g.plan.u, g.plan.factor_a);
}

MembershipVector qip_fmp_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair) {
  const GridInputs g = grid_inputs(rule);
  require_grid_premise(premise_ext, g.plan);
  MembershipVector ext(g.plan.L, 0.0);
  for (std::size_t j = 0; j < g.plan.L; ++j) {
    double best = 0.0;
    for (std::size_t i = 0; i < g.plan.L; ++i) {
      const double inner = tnorm(pair, premise_ext[i],
                                 implication(pair, premise_ext[i], g.ant[i]));
      best = std::max(best,
                      tnorm(pair, inner,
                            implication(pair, g.ant[i], g.cons[j])));
    }
    ext[j] = best;
  }
  return downsample(ext, g.plan.v, g.plan.factor_b);
}

MembershipVector qip_fmt_on_grid(const Rule& rule,
                                 const MembershipVector& premise_ext,
                                 ResiduatedPair pair) {
  const GridInputs g = grid_inputs(rule);
  require_grid_premise(premise_ext, g.plan);
  MembershipVector ext(g.plan.L, 0.0);
  for (std::size_t i = 0; i < g.plan.L; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < g.plan.L; ++j) {
      const double inner =
          tnorm(pair, g.ant[i], implication(pair, g.ant[i], g.cons[j]));
      best = std::max(best, tnorm(pair, inner,
                                  implication(pair, g.cons[j],
                                              premise_ext[j])));
    }
    ext[i] = best;
  }
  return downsample(ext, g.plan.u, g.plan.factor_a);
}

MembershipVector aars_fmp_on_grid(const Rule& rule,
                                  const MembershipVector& premise_ext,
                                  AarsForm form) {
  const GridInputs g = grid_inputs(rule);
  require_grid_premise(premise_ext, g.plan);
  return aars_apply(rule.consequent, aars_similarity(premise_ext, g.ant),
                    form);
}

MembershipVector aars_fmt_on_grid(const Rule& rule,
                                  const MembershipVector& premise_ext,
                                  AarsForm form) {
  const GridInputs g = grid_inputs(rule);
  require_grid_premise(premise_ext, g.plan);
  return aars_apply(rule.antecedent, aars_similarity(premise_ext, g.cons),
                    form);
}

}  // namespace far
