#include "abelian/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace abelian::bench {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// One isAutoImage(x, y, G) call: G arrives as raw cyclic orders and is
// decomposed on every call, as in the reference protocol.
bool auto_image(const std::vector<BigInt>& moduli, const std::vector<BigInt>& xs, const std::vector<BigInt>& ys,
                QuotientMethod method) {
  const AbelianGroup g(moduli);
  return are_automorphic(g, g.element(xs), g.element(ys), method);
}

ScalingRow time_rank(unsigned rank, QuotientMethod method, const ScalingOptions& options) {
  const std::vector<BigInt> moduli(rank, BigInt(4));
  const std::vector<BigInt> xs(rank, BigInt(1));
  const std::vector<BigInt> ys(rank, BigInt(3));

  volatile bool sink = false;
  for (unsigned i = 0; i < options.warmup; ++i) sink = auto_image(moduli, xs, ys, method);

  auto start = Clock::now();
  sink = auto_image(moduli, xs, ys, method);
  const double single = std::max(elapsed_ms(start), 1e-6);
  const auto reps = static_cast<unsigned>(std::clamp(options.min_trial_ms / single, 1.0, 1e7));

  std::vector<double> samples;
  for (unsigned t = 0; t < std::max(1u, options.trials); ++t) {
    start = Clock::now();
    for (unsigned r = 0; r < reps; ++r) sink = auto_image(moduli, xs, ys, method);
    samples.push_back(elapsed_ms(start) / reps);
  }
  (void)sink;

  ScalingRow row;
  row.rank = rank;
  row.method = method;
  row.mean_ms = std::accumulate(samples.begin(), samples.end(), 0.0) / samples.size();
  double var = 0;
  for (double s : samples) var += (s - row.mean_ms) * (s - row.mean_ms);
  row.stddev_ms = samples.size() > 1 ? std::sqrt(var / (samples.size() - 1)) : 0.0;
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  row.median_ms = samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
  return row;
}

}  // namespace

std::vector<unsigned> mixed_rank_schedule(unsigned max_rank) {
  std::set<unsigned> ranks;
  for (unsigned k = 0; k <= 16; ++k) ranks.insert(3 + 10 * k);
  for (unsigned k = 1; k <= 9; ++k) ranks.insert(1u << k);
  std::vector<unsigned> out;
  for (unsigned r : ranks)
    if (r <= max_rank) out.push_back(r);
  return out;
}

std::vector<unsigned> doubling_rank_schedule(unsigned first, unsigned last) {
  if (first == 0) throw std::invalid_argument("doubling schedule must start at rank >= 1");
  std::vector<unsigned> out;
  for (unsigned r = first; r <= last; r *= 2) out.push_back(r);
  return out;
}

std::vector<ScalingRow> run_scaling(const ScalingOptions& options) {
  std::vector<ScalingRow> rows;
  for (unsigned rank : options.ranks)
    for (QuotientMethod method : options.methods) rows.push_back(time_rank(rank, method, options));
  return rows;
}

SnfStats snf_bit_growth(unsigned rank) {
  const AbelianGroup g(std::vector<BigInt>(rank, BigInt(4)));
  SnfStats stats;
  quotient_by_snf(g, g.element(std::vector<BigInt>(rank, BigInt(1))), &stats);
  return stats;
}

void write_csv(std::ostream& out, std::span<const ScalingRow> rows) {
  out << "rank,method,mean_ms,stddev_ms\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out.setf(std::ios::fixed);
  out.precision(6);
  for (const auto& r : rows) out << r.rank << ',' << to_string(r.method) << ',' << r.mean_ms << ',' << r.stddev_ms << '\n';
  out.flags(flags);
  out.precision(precision);
}

PowerFit fit_power_law(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("power-law fit needs >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0 || ys[i] <= 0) throw std::invalid_argument("power-law fit needs positive data");
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("power-law fit needs distinct x values");
  PowerFit fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.coefficient = std::exp((sy - fit.exponent * sx) / n);
  return fit;
}

PowerFit fit_rows(std::span<const ScalingRow> rows, QuotientMethod method) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (r.method != method) continue;
    xs.push_back(r.rank);
    ys.push_back(r.median_ms);
  }
  return fit_power_law(xs, ys);
}

double fast_model_ops(double rank) {
  return 2e7 + 4.0 * rank * 67.0 + 67.0 * rank * std::log2(rank);
}

double snf_model_ops(double rank) { return std::pow(rank, 2.8074); }

unsigned model_crossover_rank(unsigned limit) {
  for (unsigned n = 1; n <= limit; ++n)
    if (snf_model_ops(n) >= fast_model_ops(n)) return n;
  return 0;
}

void write_model_csv(std::ostream& out, unsigned max_rank, unsigned step) {
  if (step == 0) throw std::invalid_argument("model step must be >= 1");
  out << "rank,fast_ops,snf_ops\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out.setf(std::ios::fixed);
  out.precision(1);
  for (unsigned n = step; n <= max_rank; n += step) out << n << ',' << fast_model_ops(n) << ',' << snf_model_ops(n) << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace abelian::bench
