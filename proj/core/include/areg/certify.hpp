#pragma once

#include <optional>
#include <string>
#include <vector>

#include "areg/instance.hpp"
#include "areg/rates.hpp"
#include "areg/trajectory.hpp"

namespace areg::certify {

/// Absolute slack separating genuine counterexamples from rounding noise.
inline constexpr double kViolationSlack = 1e-9;

struct Violation {
  std::string inputs_json;  // compact JSON describing the offending sample
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = kViolationSlack;
};

struct Witness {
  Vector p;
  double delta = 0.0;  // achieved |p - R p|
  double norm = 0.0;   // |p|
};

/// Outcome of one suite on one instance.  `work_units` counts deterministic
/// work (samples, iteration steps) so reports stay byte-identical across
/// runs; wall-clock time is console-only.
struct CertReport {
  std::string suite;
  std::string instance_id;
  uint64_t seed = 0;
  long samples = 0;
  std::vector<Violation> violations;
  bool inconclusive = false;
  long skipped = 0;
  uint64_t work_units = 0;
  std::optional<Witness> witness;
  std::string notes;

  bool pass() const { return violations.empty(); }
  std::string to_json_string() const;
};

/// Deliberately falsified bounds for harness self-tests: with any of these
/// set, the corresponding suite must report violations.
struct BoundOverrides {
  std::optional<double> sigma_value;       // replaces Sigma(eps) in check_rate
  std::optional<double> theta_value;       // replaces Theta in check_rectangularity
  std::optional<double> omega_scale;       // scales the sne filter modulus
  std::optional<double> lipschitz_factor;  // scales the correspondence bound
  std::optional<double> uc_factor;         // scales the uniform-convexity conclusion
  std::optional<double> psi_value;         // replaces Psi in check_witness

  bool any() const {
    return sigma_value || theta_value || omega_scale || lipschitz_factor || uc_factor ||
           psi_value;
  }

  static BoundOverrides falsify_all() {
    BoundOverrides o;
    o.sigma_value = 0.0;
    o.theta_value = -1.0;
    o.omega_scale = 1e9;
    o.lipschitz_factor = 0.5;
    o.uc_factor = 1e-6;
    o.psi_value = 0.0;
    return o;
  }
};

struct SamplerConfig {
  long count = 10000;
  double norm_cap = 1e3;
  uint64_t seed = 7;
};

/// Empirical rate check: for each eps, the first index with displacement
/// below eps must not exceed sigma(eps).  A capped search that ends before
/// sigma(eps) is recorded as skipped (inconclusive), not failed.
CertReport check_rate(const Instance& instance, const std::vector<double>& eps_grid, long cap,
                      unsigned precision = rates::kDefaultPrecision,
                      const BoundOverrides& overrides = {});

/// Rectangularity check: <a - c, A b - A a> <= theta over sampled a with
/// norms up to norm_cap; L1, L2, L3 are the exact norms of b, c, A b.
CertReport check_rectangularity(const MonotoneSource& src, double beta, const Vector& b_pt,
                                const Vector& c_pt, const SamplerConfig& sampler,
                                const BoundOverrides& overrides = {});

/// Structured adversarial families for the strong-nonexpansiveness check.
struct SneHints {
  std::optional<Vector> fixed_point;
  bool scaled_rotation_family = true;
};

/// Strong-nonexpansiveness modulus check: among pairs with
/// |x-y| - |Rx-Ry| < omega_alpha(b, eps), the displacement difference
/// |(x-y) - (Rx-Ry)| must stay below eps.  An empty filtered set is flagged
/// inconclusive, never passed.
CertReport check_sne_modulus(const AveragedMap& map, double b, double eps,
                             const SamplerConfig& sampler, const SneHints& hints = {},
                             const BoundOverrides& overrides = {});

/// Cocoercive <-> averaged correspondence: the nonexpansive part extracted
/// from the reflected resolvent must be 1-Lipschitz on sampled pairs.
CertReport check_averaged_correspondence(const MonotoneSource& src, double beta,
                                         const SamplerConfig& sampler,
                                         const BoundOverrides& overrides = {});

/// Witness search for the approximate-fixed-point bound: iterate from the
/// origin until |p - Rp| <= delta, then require |p| <= psi.  Search failure
/// within the budget is inconclusive (the bound asserts existence only).
CertReport check_witness(const std::vector<AveragedMap>& factors, const BoundFn& K,
                         double delta, long budget,
                         unsigned precision = rates::kDefaultPrecision,
                         const BoundOverrides& overrides = {},
                         const std::string& instance_id = "");

/// Hilbert uniform-convexity lemma: if |(1-a)x + a y| > (1 - 2a(1-a)e^2/8) d
/// for |x|,|y| <= d then |x - y| < e d; sampled across the given dimensions
/// with adversarial draws at x ~ y and |x| = |y| = d.
CertReport check_uc_lemma(const std::vector<Eigen::Index>& dims, const SamplerConfig& sampler,
                          const BoundOverrides& overrides = {});

struct SuiteConfig {
  uint64_t seed = 7;
  long samples = 10000;
  long uc_samples = 100000;
  long cap = 200000;
  long witness_budget = 10000;
  unsigned precision = rates::kDefaultPrecision;
  std::vector<double> witness_deltas = {4.0, 1.0};
  std::vector<Eigen::Index> uc_dims = {2, 8, 32};
  std::vector<std::string> suites;  // empty = all
  BoundOverrides overrides;
};

/// Runs the selected suites over the corpus and sources, in parallel across
/// instances, merging reports in deterministic order.
std::vector<CertReport> run_all_suites(const std::vector<Instance>& corpus,
                                       const std::vector<SourceSpec>& sources,
                                       const SuiteConfig& config);

}  // namespace areg::certify
