#include "mecsim/evt.hpp"

#include <algorithm>
#include <cmath>

namespace mecsim {

void ExceedanceLog::record(double excess) {
  samples_.push_back(excess);
  const double delta = excess - mean_;
  mean_ += delta / static_cast<double>(samples_.size());
  m2_ += delta * (excess - mean_);
}

double ExceedanceLog::second_moment() const {
  if (samples_.empty()) return 0.0;
  return mean_ * mean_ + m2_ / static_cast<double>(samples_.size());
}

double ExceedanceLog::sample_variance() const {
  if (samples_.size() < 2) return 0.0;
  return m2_ / static_cast<double>(samples_.size() - 1);
}

std::optional<GpdFit> fit_gpd_mom(const ExceedanceLog& log, std::string* error) {
  return fit_gpd_mom(log.mean(), log.sample_variance(), log.count(), error);
}

std::optional<GpdFit> fit_gpd_mom(double mean, double sample_variance, std::int64_t count,
                                  std::string* error) {
  if (count < kMinExceedancesForFit) {
    if (error) *error = "too few exceedances (" + std::to_string(count) + " < 30)";
    return std::nullopt;
  }
  if (!(sample_variance > 0.0)) {
    if (error) *error = "degenerate sample variance";
    return std::nullopt;
  }
  const double ratio = mean * mean / sample_variance;
  GpdFit fit;
  fit.count = count;
  fit.xi = 0.5 * (1.0 - ratio);
  fit.sigma = 0.5 * mean * (1.0 + ratio);
  if (fit.xi >= 0.5) { // keeps the variance expressions defined downstream
    fit.xi = 0.499;
    fit.shape_clamped = true;
  }
  return fit;
}

double gpd_ccdf(double x, double sigma, double xi) {
  if (x <= 0.0) return 1.0;
  if (std::abs(xi) < 1e-8) return std::exp(-x / sigma);
  const double base = 1.0 + xi * x / sigma;
  if (base <= 0.0) return 0.0; // beyond the support for xi < 0
  return std::pow(base, -1.0 / xi);
}

EmpiricalCcdf::EmpiricalCcdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCcdf::operator()(double x) const {
  if (sorted_.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(sorted_.end() - it) / static_cast<double>(sorted_.size());
}

double ks_distance(const std::vector<double>& samples, const GpdFit& fit) {
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const double model = gpd_ccdf(sorted[k], fit.sigma, fit.xi);
    const double tail_before = (n - static_cast<double>(k)) / n; // just left of the sample
    const double tail_after = (n - static_cast<double>(k) - 1.0) / n;
    sup = std::max({sup, std::abs(model - tail_before), std::abs(model - tail_after)});
  }
  return sup;
}

std::vector<TracePoint> parameter_trace(const ExceedanceLog& log, std::int64_t stride) {
  std::vector<TracePoint> trace;
  if (stride <= 0) return trace;
  double mean = 0.0;
  double m2 = 0.0;
  const auto& samples = log.samples();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double delta = samples[k] - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (samples[k] - mean);
    const std::int64_t n = static_cast<std::int64_t>(k + 1);
    if (n % stride != 0) continue;
    if (n < kMinExceedancesForFit) continue;
    const double var = m2 / static_cast<double>(n - 1);
    if (auto fit = fit_gpd_mom(mean, var, n)) trace.push_back({n, fit->sigma, fit->xi});
  }
  return trace;
}

} // namespace mecsim
