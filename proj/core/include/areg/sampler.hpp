#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "areg/vector.hpp"

namespace areg {

/// Deterministic sample source.  mt19937_64 has a fully specified output
/// sequence and the gaussian transform is an explicit Box-Muller, so a seed
/// reproduces the same draws on every platform and standard library.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  /// Uniform in the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  Vector gaussian_vector(Eigen::Index dim) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = gaussian();
    return v;
  }

  Vector direction(Eigen::Index dim) {
    Vector v = gaussian_vector(dim);
    double n = v.norm();
    while (n < 1e-12) {
      v = gaussian_vector(dim);
      n = v.norm();
    }
    return v / n;
  }

  Vector with_norm(Eigen::Index dim, double norm) { return norm * direction(dim); }

  uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64; used to derive independent per-suite/per-instance seeds.
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a over a string; deterministic salt for named suites/instances.
inline uint64_t hash_name(const std::string& name) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace areg
