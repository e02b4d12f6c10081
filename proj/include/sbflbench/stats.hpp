// Copyright 2026 The sbflbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SBFLBENCH_STATS_HPP
#define SBFLBENCH_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbflbench {

//===----------------------------------------------------------------------===//
// Distribution summaries (box-plot data)
//===----------------------------------------------------------------------===//

struct DistributionSummary {
  int count = 0;
  double mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Quantile by linear interpolation between closest ranks: position
/// (n - 1) * q into the sorted sample. q1 of [1,2,3,4] is 1.75.
inline double quantile_sorted(std::span<const double> sorted, double q) {
  const double pos = static_cast<double>(sorted.size() - 1) * q;
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

inline DistributionSummary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  DistributionSummary s;
  s.count = static_cast<int>(sorted.size());
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  s.min = sorted.front();
  s.q1 = quantile_sorted(sorted, 0.25);
  s.median = quantile_sorted(sorted, 0.5);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.max = sorted.back();
  return s;
}

//===----------------------------------------------------------------------===//
// Wilcoxon signed-rank test
//===----------------------------------------------------------------------===//

struct PairedSample {
  std::vector<std::string> labels;  // optional, for reporting
  std::vector<double> a_values;
  std::vector<double> b_values;
};

enum class Alternative { TwoSided, AGreater, BGreater };

inline const char* to_string(Alternative a) {
  switch (a) {
    case Alternative::TwoSided: return "two-sided";
    case Alternative::AGreater: return "a-greater";
    case Alternative::BGreater: return "b-greater";
  }
  return "?";
}

enum class WilcoxonMethod { Exact, NormalApprox };

inline const char* to_string(WilcoxonMethod m) {
  return m == WilcoxonMethod::Exact ? "exact" : "normal-approximation";
}

enum class MethodPolicy { Auto, ForceExact, ForceApprox };

struct WilcoxonResult {
  int n_effective = 0;     // pairs left after dropping zero differences
  double w_statistic = 0;  // W+ = sum of ranks of positive differences
  double p_value = 1.0;
  Alternative alternative = Alternative::TwoSided;
  WilcoxonMethod method = WilcoxonMethod::Exact;
  double z = 0.0;
  double effect_size_r = 0.0;  // z / sqrt(n); positive: a tends to exceed b
  bool degenerate = false;     // all differences were zero
};

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

/// Signed effect size r = z / sqrt(n), clamped to [-1, 1].
inline double effect_size_r(double z, int n) {
  if (n < 1) throw std::invalid_argument("effect_size_r: n must be positive");
  return std::clamp(z / std::sqrt(static_cast<double>(n)), -1.0, 1.0);
}

namespace detail {

// Null distribution of W+ for n untied ranks: counts[w] = number of subsets
// of {1..n} summing to w, out of 2^n equally likely sign assignments.
inline std::vector<double> signed_rank_counts(int n) {
  const int max_sum = n * (n + 1) / 2;
  std::vector<double> counts(static_cast<std::size_t>(max_sum) + 1, 0.0);
  counts[0] = 1.0;
  for (int rank = 1; rank <= n; ++rank)
    for (int w = max_sum; w >= rank; --w) counts[w] += counts[w - rank];
  return counts;
}

struct TailProbs {
  double at_most;   // P(W+ <= w)
  double at_least;  // P(W+ >= w)
};

inline TailProbs exact_tails(int n, int w) {
  const std::vector<double> counts = signed_rank_counts(n);
  const double total = std::pow(2.0, n);
  double below = 0.0;
  for (int k = 0; k <= w; ++k) below += counts[static_cast<std::size_t>(k)];
  double above = 0.0;
  for (int k = w; k < static_cast<int>(counts.size()); ++k)
    above += counts[static_cast<std::size_t>(k)];
  return TailProbs{below / total, above / total};
}

// Average ranks of |d| (ties share the mean of their positions) plus the
// tie-correction term sum(t^3 - t) over tie groups.
struct RankedDiffs {
  std::vector<double> ranks;
  bool has_ties = false;
  double tie_correction = 0.0;
};

inline RankedDiffs rank_absolute(const std::vector<double>& diffs) {
  const std::size_t n = diffs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&diffs](std::size_t a, std::size_t b) { return std::abs(diffs[a]) < std::abs(diffs[b]); });
  RankedDiffs out;
  out.ranks.assign(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && std::abs(diffs[order[j]]) == std::abs(diffs[order[i]])) ++j;
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) out.ranks[order[k]] = avg_rank;
    const double t = static_cast<double>(j - i);
    if (j - i > 1) {
      out.has_ties = true;
      out.tie_correction += t * t * t - t;
    }
    i = j;
  }
  return out;
}

}  // namespace detail

/// Wilcoxon signed-rank test on paired samples.
///
/// Zero differences are dropped (the usual convention). With at most 25
/// effective pairs and no tied |differences| the p-value is exact, from the
/// signed-rank sum null distribution; otherwise a normal approximation with
/// average ranks, tie-corrected variance and continuity correction 0.5 is
/// used. z is standardized the same way on both paths, and
/// r = z / sqrt(n_effective).
inline WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample,
                                           Alternative alternative = Alternative::TwoSided,
                                           MethodPolicy policy = MethodPolicy::Auto) {
  if (sample.a_values.size() != sample.b_values.size() || sample.a_values.empty())
    throw std::invalid_argument("wilcoxon_signed_rank: paired samples must have equal, non-zero length");
  for (std::size_t i = 0; i < sample.a_values.size(); ++i)
    if (!std::isfinite(sample.a_values[i]) || !std::isfinite(sample.b_values[i]))
      throw std::invalid_argument("wilcoxon_signed_rank: values must be finite");

  WilcoxonResult result;
  result.alternative = alternative;

  std::vector<double> diffs;
  for (std::size_t i = 0; i < sample.a_values.size(); ++i) {
    const double d = sample.a_values[i] - sample.b_values[i];
    if (d != 0.0) diffs.push_back(d);
  }
  result.n_effective = static_cast<int>(diffs.size());
  if (diffs.empty()) {
    result.degenerate = true;
    result.p_value = 1.0;
    return result;
  }

  const detail::RankedDiffs ranked = detail::rank_absolute(diffs);
  double w_plus = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i)
    if (diffs[i] > 0.0) w_plus += ranked.ranks[i];
  result.w_statistic = w_plus;

  const int n = result.n_effective;
  const double mu = static_cast<double>(n) * (n + 1) / 4.0;
  const bool exact_eligible = n <= 25 && !ranked.has_ties;
  const bool use_exact = policy == MethodPolicy::ForceExact ||
                         (policy == MethodPolicy::Auto && exact_eligible);
  if (policy == MethodPolicy::ForceExact && ranked.has_ties)
    throw std::invalid_argument("wilcoxon_signed_rank: exact method requires untied |differences|");

  // Continuity-corrected standardization, shared by both paths. The exact
  // path has no ties by construction, so its correction term is zero.
  const double variance =
      (static_cast<double>(n) * (n + 1) * (2 * n + 1) - ranked.tie_correction / 2.0) / 24.0;
  const double sigma = std::sqrt(variance);
  const auto z_for = [&](Alternative alt) {
    switch (alt) {
      case Alternative::AGreater: return (w_plus - mu - 0.5) / sigma;
      case Alternative::BGreater: return (w_plus - mu + 0.5) / sigma;
      case Alternative::TwoSided:
      default: {
        if (w_plus == mu) return 0.0;
        const double shift = w_plus > mu ? -0.5 : 0.5;
        return (w_plus - mu + shift) / sigma;
      }
    }
  };
  result.z = z_for(alternative);
  result.effect_size_r = effect_size_r(result.z, n);

  if (use_exact) {
    result.method = WilcoxonMethod::Exact;
    const int w_int = static_cast<int>(std::llround(w_plus));
    const detail::TailProbs tails = detail::exact_tails(n, w_int);
    switch (alternative) {
      case Alternative::AGreater: result.p_value = tails.at_least; break;
      case Alternative::BGreater: result.p_value = tails.at_most; break;
      case Alternative::TwoSided:
        result.p_value = std::min(1.0, 2.0 * std::min(tails.at_most, tails.at_least));
        break;
    }
  } else {
    result.method = WilcoxonMethod::NormalApprox;
    switch (alternative) {
      case Alternative::AGreater: result.p_value = 1.0 - normal_cdf(result.z); break;
      case Alternative::BGreater: result.p_value = normal_cdf(result.z); break;
      case Alternative::TwoSided:
        result.p_value = 2.0 * (1.0 - normal_cdf(std::abs(result.z)));
        break;
    }
    result.p_value = std::clamp(result.p_value, 0.0, 1.0);
  }
  return result;
}

}  // namespace sbflbench

#endif  // SBFLBENCH_STATS_HPP
