#include "mecsim/interference.hpp"

#include <algorithm>
#include <cmath>

namespace mecsim {

namespace {

// log10 span of the binned range; bin width is kSpan / kNumLogBins decades.
constexpr double kLogLow = -18.0;
constexpr double kLogHigh = -6.0;

} // namespace

EmpiricalDistribution::EmpiricalDistribution() : prob_(kNumLogBins + 2, 0.0) {
  prob_[0] = 1.0; // nothing observed yet: all mass on the zero atom
  occupied_.push_back(0);
}

int EmpiricalDistribution::bin_index(double interference_w) const {
  if (interference_w < kLowEdgeW) return 0;
  if (interference_w >= kHighEdgeW) return kNumLogBins + 1;
  const double t = (std::log10(interference_w) - kLogLow) / (kLogHigh - kLogLow);
  int bin = 1 + static_cast<int>(t * kNumLogBins);
  return std::clamp(bin, 1, kNumLogBins);
}

double EmpiricalDistribution::bin_low_edge(int bin) const {
  if (bin <= 0) return 0.0;
  if (bin >= kNumLogBins + 1) return kHighEdgeW;
  return std::pow(10.0, kLogLow + (bin - 1) * (kLogHigh - kLogLow) / kNumLogBins);
}

double EmpiricalDistribution::bin_high_edge(int bin) const {
  if (bin <= 0) return kLowEdgeW;
  if (bin >= kNumLogBins + 1) return kHighEdgeW;
  return std::pow(10.0, kLogLow + bin * (kLogHigh - kLogLow) / kNumLogBins);
}

double EmpiricalDistribution::representative(int bin) const {
  if (bin == 0) return 0.0;
  if (bin == kNumLogBins + 1) return kHighEdgeW;
  return std::sqrt(bin_low_edge(bin) * bin_high_edge(bin));
}

void EmpiricalDistribution::observe(double interference_w) {
  const int bin = bin_index(interference_w);
  const double keep = static_cast<double>(count_ + 1) / static_cast<double>(count_ + 2);
  const double fresh = 1.0 / static_cast<double>(count_ + 2);
  for (int b : occupied_) prob_[b] *= keep;
  if (prob_[bin] == 0.0) {
    occupied_.insert(std::lower_bound(occupied_.begin(), occupied_.end(), bin), bin);
  }
  prob_[bin] += fresh;
  ++count_;
}

double EmpiricalDistribution::expect(const std::function<double(double)>& g) const {
  double acc = 0.0;
  for (int b : occupied_) acc += prob_[b] * g(representative(b));
  return acc;
}

double EmpiricalDistribution::expect_inv_affine(double c, double d) const {
  double acc = 0.0;
  for (int b : occupied_) acc += prob_[b] / (c + d * representative(b));
  return acc;
}

} // namespace mecsim
