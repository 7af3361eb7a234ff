#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "abelian/equivalence.hpp"
#include "abelian/snf.hpp"

namespace abelian::bench {

/// Timing protocol for the C4^n scaling runs: x = (1, ..., 1) against
/// y = (3, ..., 3), the group built from its cyclic orders inside every
/// timed call. Each trial repeats the check until `min_trial_ms` has
/// elapsed and reports the per-call time.
struct ScalingOptions {
  std::vector<unsigned> ranks;
  std::vector<QuotientMethod> methods{QuotientMethod::fast, QuotientMethod::snf};
  unsigned trials = 5;
  unsigned warmup = 3;
  double min_trial_ms = 5.0;
};

struct ScalingRow {
  unsigned rank = 0;
  QuotientMethod method = QuotientMethod::fast;
  double mean_ms = 0;
  double stddev_ms = 0;
  double median_ms = 0;
};

/// {3 + 10k : 0 <= k <= 16} together with {2^k : 1 <= k <= 9}, sorted,
/// truncated at max_rank.
std::vector<unsigned> mixed_rank_schedule(unsigned max_rank);

/// first, 2 first, 4 first, ... up to last.
std::vector<unsigned> doubling_rank_schedule(unsigned first, unsigned last);

std::vector<ScalingRow> run_scaling(const ScalingOptions& options);

/// Entry growth of the SNF elimination for G/<(1, ..., 1)> in C4^n, untimed.
SnfStats snf_bit_growth(unsigned rank);

/// Header `rank,method,mean_ms,stddev_ms`.
void write_csv(std::ostream& out, std::span<const ScalingRow> rows);

struct PowerFit {
  double coefficient = 0;
  double exponent = 0;
};

/// Least squares on log y = log c + a log x.
PowerFit fit_power_law(std::span<const double> xs, std::span<const double> ys);

/// Fit over the median timings of one method.
PowerFit fit_rows(std::span<const ScalingRow> rows, QuotientMethod method);

/// Operation-count model of the prime-splitting route at exponent 10^20:
/// 2*10^7 for factoring, 4*67*n for valuations and the sweep, 67 n log2 n
/// for sorting.
double fast_model_ops(double rank);

/// n^2.8074, the fast-matrix-multiplication SNF count.
double snf_model_ops(double rank);

/// Smallest rank at which the SNF model overtakes the splitting model.
unsigned model_crossover_rank(unsigned limit = 100'000);

/// Header `rank,fast_ops,snf_ops`, ranks step, 2 step, ... through max_rank.
void write_model_csv(std::ostream& out, unsigned max_rank, unsigned step);

}  // namespace abelian::bench
