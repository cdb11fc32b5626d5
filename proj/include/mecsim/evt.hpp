#ifndef MECSIM_EVT_HPP_
#define MECSIM_EVT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mecsim {

// Ordered threshold exceedances of one queue, with running moments kept by
// Welford's update so the fit never rescans the sample vector.
class ExceedanceLog {
 public:
  void record(double excess);

  std::int64_t count() const { return static_cast<std::int64_t>(samples_.size()); }
  double mean() const { return mean_; }
  double second_moment() const; // E[X^2]
  double sample_variance() const; // unbiased, requires count >= 2
  const std::vector<double>& samples() const { return samples_; }

 private:
  std::vector<double> samples_;
  double mean_ = 0.0;
  double m2_ = 0.0; // sum of squared deviations from the running mean
};

struct GpdFit {
  double sigma = 0.0; // scale, bits
  double xi = 0.0;    // shape
  std::int64_t count = 0;
  bool shape_clamped = false;
};

constexpr int kMinExceedancesForFit = 30;

// Method-of-moments fit: xi = (1 - m^2/s^2)/2, sigma = m (1 + m^2/s^2)/2.
// Fails below kMinExceedancesForFit samples or with degenerate variance.
std::optional<GpdFit> fit_gpd_mom(const ExceedanceLog& log, std::string* error = nullptr);
std::optional<GpdFit> fit_gpd_mom(double mean, double sample_variance, std::int64_t count,
                                  std::string* error = nullptr);

// P(X > x) for the generalized Pareto distribution. |xi| < 1e-8 uses the
// exponential branch; finite-support shapes return 0 beyond -sigma/xi.
double gpd_ccdf(double x, double sigma, double xi);

// Right-continuous empirical tail #{s > x}/n.
class EmpiricalCcdf {
 public:
  explicit EmpiricalCcdf(std::vector<double> samples);
  double operator()(double x) const;
  const std::vector<double>& sorted_samples() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

// Two-sided sup distance between the empirical tail of the samples and the
// fitted GPD tail, evaluated at the sample points.
double ks_distance(const std::vector<double>& samples, const GpdFit& fit);

struct TracePoint {
  std::int64_t count = 0;
  double sigma = 0.0;
  double xi = 0.0;
};

// Refits on growing prefixes every `stride` exceedances; prefixes shorter
// than the fit minimum are skipped.
std::vector<TracePoint> parameter_trace(const ExceedanceLog& log, std::int64_t stride);

} // namespace mecsim

#endif // MECSIM_EVT_HPP_
