#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "areg/bound_fn.hpp"
#include "areg/operators.hpp"

namespace areg {

/// One factor of an instance composition.  `alpha` is the averagedness
/// parameter of the built map; the remaining fields depend on the kind.
struct FactorSpec {
  enum class Kind { projection, rotation_avg, linear_resolvent, averaged_linear };

  double alpha = 0.5;
  Kind kind = Kind::projection;

  std::optional<ConvexSet> set;    // projection
  double theta = 0.0;              // rotation_avg
  Matrix matrix;                   // linear_resolvent / averaged_linear
  std::optional<double> beta;      // linear_resolvent; resolved value
  bool beta_auto = false;          // serialized as "auto" when set
};

/// Serializable descriptor of a K function (constant / inverse_power / table).
struct BoundFnSpec {
  enum class Form { constant, inverse_power, table };
  Form form = Form::constant;
  double c0 = 1.0;
  double c = 0.0;
  double k = 0.0;
  std::vector<std::pair<double, double>> knots;

  BoundFn build() const;
};

/// A concrete composition of averaged maps with everything the rate and
/// certification machinery needs: start point, K function, norm bound b and
/// initial displacement bound d.
class Instance {
 public:
  std::string id;
  Eigen::Index dim = 0;
  std::vector<FactorSpec> factor_specs;
  Vector x0;
  BoundFnSpec k_spec;
  double b = 0.0;
  bool b_auto = false;
  double d = 0.0;
  bool d_auto = false;
  std::vector<double> eps_grid;
  std::map<std::string, std::string> metadata;  // includes "k_justification"
  std::optional<Vector> common_fixed_point;     // known common fixed point, when any

  /// Built factors in application order (first applied first).
  const std::vector<AveragedMap>& factors() const { return factors_; }
  const AveragedMap& composed() const;
  double composed_alpha() const { return composed_alpha_; }
  std::vector<double> factor_alphas() const;
  int m() const { return static_cast<int>(factor_specs.size()); }
  BoundFn K() const { return k_spec.build(); }

  /// Builds maps, resolves "auto" fields and validates every invariant.
  /// Must be called once after the descriptor fields are filled.
  void finalize();

 private:
  std::vector<AveragedMap> factors_;
  std::optional<AveragedMap> composed_;
  double composed_alpha_ = 0.0;
};

/// Parses and fully validates instance JSON; "auto" fields are resolved.
Instance parse_instance(const std::string& text);

/// Canonical JSON serialization; parse(serialize(i)) round-trips exactly.
std::string serialize_instance(const Instance& instance);

/// The deterministic builtin corpus (>= 20 instances across m in {2,3,4},
/// dims {2,8,16} and all factor kinds).
const std::vector<Instance>& builtin_corpus();

/// Finds a builtin instance by id.
const Instance& builtin_instance(const std::string& id);

/// A cocoercive operator together with the data the rectangularity and
/// correspondence suites need.
struct SourceSpec {
  std::string id;
  MonotoneSource source;
  double beta;
  Vector b_pt;
  Vector c_pt;
  bool rectangular_suite = true;  // zero operators opt out (A b has norm 0)
};

/// Builtin cocoercive sources for the certification suites.
const std::vector<SourceSpec>& builtin_sources();

}  // namespace areg
