#ifndef MECSIM_INTERFERENCE_HPP_
#define MECSIM_INTERFERENCE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

namespace mecsim {

// Binned empirical distribution of the aggregate interference seen by one
// (UE, server) pair. Layout: bin 0 is a zero atom (also collects values
// below the lowest edge), bins 1..kNumLogBins are log-spaced over
// [kLowEdgeW, kHighEdgeW), and the last bin collects overflow.
//
// Each observation applies the convex update
//   p(t+1) = 1{bin}/(t+2) + (t+1) p(t)/(t+2),
// starting from a point mass on the zero atom.
class EmpiricalDistribution {
 public:
  static constexpr int kNumLogBins = 128;
  static constexpr double kLowEdgeW = 1e-18;
  static constexpr double kHighEdgeW = 1e-6;

  EmpiricalDistribution();

  void observe(double interference_w);

  // Sum over bins of probability x g(representative). Representatives are
  // geometric bin midpoints; 0 for the zero atom, the low edge for overflow.
  double expect(const std::function<double(double)>& g) const;

  // Expectation of 1/(c + d * I); the hot path of the power allocator,
  // kept loop-only to avoid std::function overhead.
  double expect_inv_affine(double c, double d) const;

  std::int64_t observations() const { return count_; }
  int bin_index(double interference_w) const;
  double representative(int bin) const;
  double probability(int bin) const { return prob_[bin]; }
  int num_bins() const { return static_cast<int>(prob_.size()); }
  double bin_low_edge(int bin) const;
  double bin_high_edge(int bin) const;

 private:
  std::vector<double> prob_;
  std::vector<int> occupied_; // bins with nonzero mass, ascending
  std::int64_t count_ = 0;
};

} // namespace mecsim

#endif // MECSIM_INTERFERENCE_HPP_
