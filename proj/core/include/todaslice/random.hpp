#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace todaslice {

// Seeded source of all random draws.  Streams are split from a root seed by
// mixing in a stream id, so that each suite and each sample loop sees the same
// numbers regardless of what ran before it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static std::uint64_t derive(std::uint64_t seed, std::string_view label);
  Rng split(std::uint64_t stream) const;
  Rng split(std::string_view label) const;

  double uniform(double lo = 0.0, double hi = 1.0);
  double gaussian();
  std::complex<double> complex_gaussian();
  // Modulus in [lo, hi], uniform phase.
  std::complex<double> complex_annulus(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive
  bool coin();

  Eigen::VectorXcd complex_gaussian_vector(int n);
  Eigen::VectorXd gaussian_vector(int n);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace todaslice
