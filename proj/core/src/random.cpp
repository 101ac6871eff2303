#include "todaslice/random.hpp"

#include <cmath>
#include <numbers>

namespace todaslice {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t word) {
  for (int i = 0; i < 8; ++i) {
    h ^= (word >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

// splitmix64 finalizer; spreads nearby seeds apart.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

std::uint64_t Rng::derive(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = fnv1a(kFnvOffset, seed);
  for (unsigned char ch : label) {
    h ^= ch;
    h *= kFnvPrime;
  }
  return h;
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(fnv1a(fnv1a(kFnvOffset, seed_), stream));
}

Rng Rng::split(std::string_view label) const {
  return Rng(derive(seed_, label));
}

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(engine_);
}

double Rng::gaussian() {
  std::normal_distribution<double> d(0.0, 1.0);
  return d(engine_);
}

std::complex<double> Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
}

std::complex<double> Rng::complex_annulus(double lo, double hi) {
  const double r = uniform(lo, hi);
  const double phi = uniform(-std::numbers::pi, std::numbers::pi);
  return std::polar(r, phi);
}

int Rng::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(engine_);
}

bool Rng::coin() { return uniform_int(0, 1) == 1; }

Eigen::VectorXcd Rng::complex_gaussian_vector(int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_gaussian();
  return v;
}

Eigen::VectorXd Rng::gaussian_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = gaussian();
  return v;
}

}  // namespace todaslice
