#include "far/grid.hpp"

#include <algorithm>
#include <numeric>

#include "far/errors.hpp"

namespace far {

ExtensionPlan extension_factor(std::size_t u, std::size_t v) {
  if (u == 0 || v == 0)
    throw Empty("universe sizes must be at least 1");
  ExtensionPlan plan;
  plan.u = u;
  plan.v = v;
  plan.L = std::lcm(u, v);
  plan.factor_a = plan.L / u;
  plan.factor_b = plan.L / v;
  plan.n = std::max(plan.factor_a, plan.factor_b);
  return plan;
}

MembershipVector extend_vector(const MembershipVector& v, std::size_t factor) {
  if (v.empty()) throw Empty();
  if (factor == 0) throw Empty("extension factor must be at least 1");
  const std::size_t m = v.size();
  MembershipVector out(m * factor);
  // The run before the first anchor repeats the first grade.
  for (std::size_t k = 0; k < factor; ++k) out[k] = v[0];
  for (std::size_t i = 1; i < m; ++i) {
    const std::size_t lo = i * factor - 1;        // previous anchor (0-based)
    const std::size_t hi = (i + 1) * factor - 1;  // this anchor (0-based)
    for (std::size_t k = lo + 1; k < hi; ++k) {
      const double t =
          static_cast<double>(k - lo) / static_cast<double>(factor);
      out[k] = v[i - 1] + t * (v[i] - v[i - 1]);
    }
    // Anchors carry the original grades bitwise; writing the interpolation
    // formula here instead would leave rounding residue on them.
    out[hi] = v[i];
  }
  return out;
}

std::vector<double> downsample(const std::vector<double>& ext,
                               std::size_t out_len, std::size_t factor) {
  if (out_len * factor != ext.size())
    throw LengthMismatch(ext.size(), out_len * factor,
                         "extended sequence and out_len * factor");
  std::vector<double> out(out_len);
  for (std::size_t j = 0; j < out_len; ++j) out[j] = ext[(j + 1) * factor - 1];
  return out;
}

MembershipVector min_max_normalize(const std::vector<double>& quasi) {
  if (quasi.empty()) throw Empty("normalization input is empty");
  const auto [lo_it, hi_it] = std::minmax_element(quasi.begin(), quasi.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  MembershipVector out(quasi.size());
  if (hi > lo) {
    for (std::size_t k = 0; k < quasi.size(); ++k)
      out[k] = (quasi[k] - lo) / (hi - lo);
  } else {
    for (std::size_t k = 0; k < quasi.size(); ++k)
      out[k] = std::clamp(quasi[k], 0.0, 1.0);
  }
  return out;
}

}  // namespace far
