#include "areg/instance.hpp"

#include <json.hpp>

#include <cmath>
#include <mutex>
#include <utility>

#include "areg/rates.hpp"

namespace areg {

using json = nlohmann::ordered_json;

BoundFn BoundFnSpec::build() const {
  switch (form) {
    case Form::constant:
      return BoundFn::constant(c0);
    case Form::inverse_power:
      return BoundFn::inverse_power(c0, c, k);
    case Form::table:
      return BoundFn::step_table(knots);
  }
  throw InternalConsistencyError("unreachable bound function form");
}

namespace {

constexpr double kAutoSlack = 1e-12;
constexpr double kAlphaBetaTol = 1e-9;
constexpr double kFixedPointTol = 1e-9;

AveragedMap build_factor(const FactorSpec& f, Eigen::Index dim, const std::string& path) {
  if (!(f.alpha > 0.0 && f.alpha < 1.0)) {
    throw ValidationError("factor alpha must lie strictly inside (0,1)", path + ".alpha");
  }
  switch (f.kind) {
    case FactorSpec::Kind::projection: {
      if (!f.set) throw ValidationError("projection factor needs a set", path + ".params.set");
      if (f.set->dim() != dim) {
        throw ValidationError("set dimension does not match the instance", path + ".params.set");
      }
      // inner part is the reflection 2P - id, so alpha = 1/2 recovers P
      // itself and alpha < 1/2 under-relaxes it.
      const ConvexSet set = *f.set;
      return AveragedMap(f.alpha,
                         NonexpansiveMap::extracted(
                             [set](const Vector& x) { return set.project(x); }, 0.5, dim));
    }
    case FactorSpec::Kind::rotation_avg: {
      if (dim != 2) {
        throw ValidationError("rotation_avg factors require dim = 2", path + ".params.theta");
      }
      return AveragedMap(f.alpha, NonexpansiveMap::rotation2d(f.theta));
    }
    case FactorSpec::Kind::linear_resolvent: {
      if (f.matrix.rows() != dim || f.matrix.cols() != dim) {
        throw ValidationError("matrix shape does not match the instance dimension",
                              path + ".params.matrix");
      }
      if (!f.beta) {
        throw InternalConsistencyError("linear_resolvent beta must be resolved before build");
      }
      MonotoneSource src = MonotoneSource::linear(f.matrix, f.beta);
      const double alpha_min = 1.0 / (1.0 + *f.beta);
      if (f.alpha < alpha_min - kAlphaBetaTol) {
        throw ValidationError("alpha below (1+beta)^-1; the reflected resolvent is not that "
                              "strongly averaged",
                              path + ".alpha");
      }
      return AveragedMap(f.alpha, NonexpansiveMap::extracted(
                                      [src](const Vector& x) {
                                        return reflected_resolvent(src, x);
                                      },
                                      f.alpha, dim));
    }
    case FactorSpec::Kind::averaged_linear: {
      if (f.matrix.rows() != dim || f.matrix.cols() != dim) {
        throw ValidationError("matrix shape does not match the instance dimension",
                              path + ".params.matrix");
      }
      try {
        return AveragedMap(f.alpha, NonexpansiveMap::linear(f.matrix));
      } catch (const RejectedInputError& e) {
        throw ValidationError(e.what(), path + ".params.matrix");
      }
    }
  }
  throw InternalConsistencyError("unreachable factor kind");
}

}  // namespace

void Instance::finalize() {
  if (id.empty()) throw ValidationError("instance id must be nonempty", "id");
  require_dim_valid(dim, "instance");
  if (factor_specs.size() < 2) {
    throw ValidationError("an instance needs at least two factors", "factors");
  }
  if (x0.size() != dim) throw ValidationError("x0 length must equal dim", "x0");
  require_finite(x0, "x0");
  if (eps_grid.empty()) throw ValidationError("eps_grid must be nonempty", "eps_grid");
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0)) {
      throw ValidationError("eps values must be positive", "eps_grid[" + std::to_string(i) + "]");
    }
  }

  // resolve betas before building
  for (size_t i = 0; i < factor_specs.size(); ++i) {
    FactorSpec& f = factor_specs[i];
    if (f.kind == FactorSpec::Kind::linear_resolvent && !f.beta) {
      const std::string path = "factors[" + std::to_string(i) + "]";
      try {
        MonotoneSource probe = MonotoneSource::linear(f.matrix);
        f.beta = cocoercivity_constant(probe);
      } catch (const Error& e) {
        throw ValidationError(e.what(), path + ".params.beta");
      }
    }
  }

  factors_.clear();
  for (size_t i = 0; i < factor_specs.size(); ++i) {
    factors_.push_back(build_factor(factor_specs[i], dim, "factors[" + std::to_string(i) + "]"));
  }
  composed_ = compose(factors_);
  composed_alpha_ = composed_->alpha();

  try {
    K();
  } catch (const Error& e) {
    throw ValidationError(e.what(), "K");
  }

  const double x0_norm = x0.norm();
  if (b_auto) {
    b = x0_norm + kAutoSlack;
  } else {
    if (!(b > 0.0)) throw ValidationError("b must be positive", "b");
    if (b < x0_norm) throw ValidationError("b must dominate the start norm |x0|", "b");
  }

  const double d0 = (x0 - composed_->eval(x0)).norm();
  if (d_auto) {
    d = d0 + kAutoSlack;
  } else {
    if (!(d > 0.0)) throw ValidationError("d must be positive", "d");
    if (d < d0) {
      throw ValidationError("d must dominate the initial displacement |x0 - R x0|", "d");
    }
  }

  if (metadata.find("k_justification") == metadata.end()) {
    throw ValidationError("metadata must explain why K bounds the factor fixed points",
                          "metadata.k_justification");
  }

  if (common_fixed_point) {
    if (common_fixed_point->size() != dim) {
      throw ValidationError("common fixed point length must equal dim", "common_fixed_point");
    }
    for (size_t i = 0; i < factors_.size(); ++i) {
      const double move = (*common_fixed_point - factors_[i].eval(*common_fixed_point)).norm();
      if (move > kFixedPointTol) {
        throw ValidationError("claimed common fixed point moves under factor " +
                                  std::to_string(i),
                              "common_fixed_point");
      }
    }
  }
}

const AveragedMap& Instance::composed() const {
  if (!composed_) throw InternalConsistencyError("instance was not finalized");
  return *composed_;
}

std::vector<double> Instance::factor_alphas() const {
  std::vector<double> out;
  out.reserve(factor_specs.size());
  for (const FactorSpec& f : factor_specs) out.push_back(f.alpha);
  return out;
}

// --- JSON ------------------------------------------------------------------

namespace {

[[noreturn]] void fail_parse(const std::string& what, const std::string& path) {
  throw ParseError(what, path);
}

const json& require_field(const json& obj, const char* name, const std::string& path) {
  if (!obj.is_object()) fail_parse("expected an object", path);
  auto it = obj.find(name);
  if (it == obj.end()) fail_parse(std::string("missing field '") + name + "'", path);
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail_parse("expected a number", path);
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail_parse("expected a string", path);
  return v.get<std::string>();
}

Vector as_vector(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail_parse("expected a nonempty array of numbers", path);
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = as_number(v[i], path + "[" + std::to_string(i) + "]");
  }
  return out;
}

Matrix as_matrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail_parse("expected a nonempty array of rows", path);
  const size_t rows = v.size();
  Vector first = as_vector(v[0], path + "[0]");
  Matrix out(static_cast<Eigen::Index>(rows), first.size());
  out.row(0) = first;
  for (size_t i = 1; i < rows; ++i) {
    Vector row = as_vector(v[i], path + "[" + std::to_string(i) + "]");
    if (row.size() != first.size()) fail_parse("ragged matrix rows", path);
    out.row(static_cast<Eigen::Index>(i)) = row;
  }
  return out;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

json matrix_to_json(const Matrix& m) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) arr.push_back(vector_to_json(m.row(i)));
  return arr;
}

ConvexSet parse_set(const json& v, const std::string& path) {
  const std::string type = as_string(require_field(v, "type", path), path + ".type");
  try {
    if (type == "halfspace") {
      return ConvexSet::halfspace(as_vector(require_field(v, "normal", path), path + ".normal"),
                                  as_number(require_field(v, "offset", path), path + ".offset"));
    }
    if (type == "ball") {
      return ConvexSet::ball(as_vector(require_field(v, "center", path), path + ".center"),
                             as_number(require_field(v, "radius", path), path + ".radius"));
    }
    if (type == "box") {
      return ConvexSet::box(as_vector(require_field(v, "lower", path), path + ".lower"),
                            as_vector(require_field(v, "upper", path), path + ".upper"));
    }
    if (type == "affine") {
      Matrix directions = as_matrix(require_field(v, "basis", path), path + ".basis");
      // serialized as a list of direction vectors; columns internally
      return ConvexSet::affine_subspace(directions.transpose(),
                                        as_vector(require_field(v, "anchor", path),
                                                  path + ".anchor"));
    }
  } catch (const RejectedInputError& e) {
    throw ValidationError(e.what(), path);
  }
  fail_parse("unknown set type '" + type + "'", path + ".type");
}

json set_to_json(const ConvexSet& s) {
  json out = json::object();
  switch (s.kind()) {
    case ConvexSet::Kind::halfspace:
      out["type"] = "halfspace";
      out["normal"] = vector_to_json(s.normal());
      out["offset"] = s.offset();
      break;
    case ConvexSet::Kind::ball:
      out["type"] = "ball";
      out["center"] = vector_to_json(s.center());
      out["radius"] = s.radius();
      break;
    case ConvexSet::Kind::box:
      out["type"] = "box";
      out["lower"] = vector_to_json(s.lower());
      out["upper"] = vector_to_json(s.upper());
      break;
    case ConvexSet::Kind::affine_subspace:
      out["type"] = "affine";
      out["basis"] = matrix_to_json(s.basis().transpose());
      out["anchor"] = vector_to_json(s.anchor());
      break;
  }
  return out;
}

FactorSpec parse_factor(const json& v, const std::string& path) {
  FactorSpec f;
  f.alpha = as_number(require_field(v, "alpha", path), path + ".alpha");
  if (!(f.alpha > 0.0 && f.alpha < 1.0)) {
    throw ValidationError("factor alpha must lie strictly inside (0,1)", path + ".alpha");
  }
  const std::string kind = as_string(require_field(v, "kind", path), path + ".kind");
  const json& params = require_field(v, "params", path);
  const std::string ppath = path + ".params";
  if (kind == "projection") {
    f.kind = FactorSpec::Kind::projection;
    f.set = parse_set(require_field(params, "set", ppath), ppath + ".set");
  } else if (kind == "rotation_avg") {
    f.kind = FactorSpec::Kind::rotation_avg;
    f.theta = as_number(require_field(params, "theta", ppath), ppath + ".theta");
  } else if (kind == "linear_resolvent") {
    f.kind = FactorSpec::Kind::linear_resolvent;
    f.matrix = as_matrix(require_field(params, "matrix", ppath), ppath + ".matrix");
    const json& beta = require_field(params, "beta", ppath);
    if (beta.is_string()) {
      if (beta.get<std::string>() != "auto") {
        fail_parse("beta must be a number or \"auto\"", ppath + ".beta");
      }
      f.beta_auto = true;
    } else {
      const double b = as_number(beta, ppath + ".beta");
      if (!(b > 0.0)) throw ValidationError("beta must be positive", ppath + ".beta");
      f.beta = b;
    }
  } else if (kind == "averaged_linear") {
    f.kind = FactorSpec::Kind::averaged_linear;
    f.matrix = as_matrix(require_field(params, "matrix", ppath), ppath + ".matrix");
  } else {
    fail_parse("unknown factor kind '" + kind + "'", path + ".kind");
  }
  return f;
}

json factor_to_json(const FactorSpec& f) {
  json out = json::object();
  out["alpha"] = f.alpha;
  json params = json::object();
  switch (f.kind) {
    case FactorSpec::Kind::projection:
      out["kind"] = "projection";
      params["set"] = set_to_json(*f.set);
      break;
    case FactorSpec::Kind::rotation_avg:
      out["kind"] = "rotation_avg";
      params["theta"] = f.theta;
      break;
    case FactorSpec::Kind::linear_resolvent:
      out["kind"] = "linear_resolvent";
      params["matrix"] = matrix_to_json(f.matrix);
      params["beta"] = *f.beta;  // resolved value; canonical form has no "auto"
      break;
    case FactorSpec::Kind::averaged_linear:
      out["kind"] = "averaged_linear";
      params["matrix"] = matrix_to_json(f.matrix);
      break;
  }
  out["params"] = std::move(params);
  return out;
}

BoundFnSpec parse_k(const json& v, const std::string& path) {
  BoundFnSpec k;
  const std::string form = as_string(require_field(v, "form", path), path + ".form");
  if (form == "constant") {
    k.form = BoundFnSpec::Form::constant;
    k.c0 = as_number(require_field(v, "c", path), path + ".c");
  } else if (form == "inverse_power") {
    k.form = BoundFnSpec::Form::inverse_power;
    k.c0 = as_number(require_field(v, "c0", path), path + ".c0");
    k.c = as_number(require_field(v, "c", path), path + ".c");
    k.k = as_number(require_field(v, "k", path), path + ".k");
  } else if (form == "table") {
    k.form = BoundFnSpec::Form::table;
    const json& knots = require_field(v, "knots", path);
    if (!knots.is_array() || knots.empty()) fail_parse("expected knot array", path + ".knots");
    for (size_t i = 0; i < knots.size(); ++i) {
      const std::string kp = path + ".knots[" + std::to_string(i) + "]";
      if (!knots[i].is_array() || knots[i].size() != 2) fail_parse("expected [eps, value]", kp);
      k.knots.emplace_back(as_number(knots[i][0], kp + "[0]"), as_number(knots[i][1], kp + "[1]"));
    }
  } else {
    fail_parse("unknown K form '" + form + "'", path + ".form");
  }
  try {
    k.build();
  } catch (const RejectedInputError& e) {
    throw ValidationError(e.what(), path);
  }
  return k;
}

json k_to_json(const BoundFnSpec& k) {
  json out = json::object();
  switch (k.form) {
    case BoundFnSpec::Form::constant:
      out["form"] = "constant";
      out["c"] = k.c0;
      break;
    case BoundFnSpec::Form::inverse_power:
      out["form"] = "inverse_power";
      out["c0"] = k.c0;
      out["c"] = k.c;
      out["k"] = k.k;
      break;
    case BoundFnSpec::Form::table: {
      out["form"] = "table";
      json knots = json::array();
      for (const auto& [e, v] : k.knots) knots.push_back(json::array({e, v}));
      out["knots"] = std::move(knots);
      break;
    }
  }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail_parse(std::string("invalid JSON: ") + e.what(), "$");
  }
  if (!doc.is_object()) fail_parse("instance must be a JSON object", "$");

  Instance inst;
  inst.id = as_string(require_field(doc, "id", "$"), "id");
  const json& dim = require_field(doc, "dim", "$");
  if (!dim.is_number_integer() || dim.get<long>() < 1) {
    fail_parse("dim must be a positive integer", "dim");
  }
  inst.dim = dim.get<Eigen::Index>();

  const json& factors = require_field(doc, "factors", "$");
  if (!factors.is_array() || factors.size() < 2) {
    fail_parse("factors must be an array with at least two entries", "factors");
  }
  for (size_t i = 0; i < factors.size(); ++i) {
    inst.factor_specs.push_back(
        parse_factor(factors[i], "factors[" + std::to_string(i) + "]"));
  }

  inst.x0 = as_vector(require_field(doc, "x0", "$"), "x0");
  inst.k_spec = parse_k(require_field(doc, "K", "$"), "K");

  const json& b = require_field(doc, "b", "$");
  if (b.is_string()) {
    if (b.get<std::string>() != "auto") fail_parse("b must be a number or \"auto\"", "b");
    inst.b_auto = true;
  } else {
    inst.b = as_number(b, "b");
  }
  const json& d = require_field(doc, "d", "$");
  if (d.is_string()) {
    if (d.get<std::string>() != "auto") fail_parse("d must be a number or \"auto\"", "d");
    inst.d_auto = true;
  } else {
    inst.d = as_number(d, "d");
  }

  const json& grid = require_field(doc, "eps_grid", "$");
  if (!grid.is_array() || grid.empty()) fail_parse("eps_grid must be a nonempty array", "eps_grid");
  for (size_t i = 0; i < grid.size(); ++i) {
    inst.eps_grid.push_back(as_number(grid[i], "eps_grid[" + std::to_string(i) + "]"));
  }

  const json& meta = require_field(doc, "metadata", "$");
  if (!meta.is_object()) fail_parse("metadata must be an object of strings", "metadata");
  for (const auto& [key, value] : meta.items()) {
    inst.metadata[key] = as_string(value, "metadata." + key);
  }

  if (doc.contains("common_fixed_point")) {
    inst.common_fixed_point = as_vector(doc["common_fixed_point"], "common_fixed_point");
  }

  inst.finalize();
  // canonical form carries resolved values only
  inst.b_auto = false;
  inst.d_auto = false;
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json out = json::object();
  out["id"] = inst.id;
  out["dim"] = static_cast<long>(inst.dim);
  json factors = json::array();
  for (const FactorSpec& f : inst.factor_specs) factors.push_back(factor_to_json(f));
  out["factors"] = std::move(factors);
  out["x0"] = vector_to_json(inst.x0);
  out["K"] = k_to_json(inst.k_spec);
  out["b"] = inst.b;
  out["d"] = inst.d;
  json grid = json::array();
  for (double e : inst.eps_grid) grid.push_back(e);
  out["eps_grid"] = std::move(grid);
  json meta = json::object();
  for (const auto& [key, value] : inst.metadata) meta[key] = value;
  out["metadata"] = std::move(meta);
  if (inst.common_fixed_point) {
    out["common_fixed_point"] = vector_to_json(*inst.common_fixed_point);
  }
  return out.dump(2) + "\n";
}

// --- builtin corpus ---------------------------------------------------------

namespace {

FactorSpec projection_factor(double alpha, ConvexSet set) {
  FactorSpec f;
  f.alpha = alpha;
  f.kind = FactorSpec::Kind::projection;
  f.set = std::move(set);
  return f;
}

FactorSpec rotation_factor(double alpha, double theta) {
  FactorSpec f;
  f.alpha = alpha;
  f.kind = FactorSpec::Kind::rotation_avg;
  f.theta = theta;
  return f;
}

FactorSpec resolvent_factor(double alpha, Matrix m, std::optional<double> beta) {
  FactorSpec f;
  f.alpha = alpha;
  f.kind = FactorSpec::Kind::linear_resolvent;
  f.matrix = std::move(m);
  f.beta = beta;
  f.beta_auto = !beta.has_value();
  return f;
}

FactorSpec averaged_linear_factor(double alpha, Matrix m) {
  FactorSpec f;
  f.alpha = alpha;
  f.kind = FactorSpec::Kind::averaged_linear;
  f.matrix = std::move(m);
  return f;
}

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

BoundFnSpec k_constant(double c) {
  BoundFnSpec k;
  k.form = BoundFnSpec::Form::constant;
  k.c0 = c;
  return k;
}

Instance make_instance(std::string id, Eigen::Index dim, std::vector<FactorSpec> factors,
                       Vector x0, BoundFnSpec k, std::string k_justification,
                       std::optional<Vector> fixed_point) {
  Instance inst;
  inst.id = std::move(id);
  inst.dim = dim;
  inst.factor_specs = std::move(factors);
  inst.x0 = std::move(x0);
  inst.k_spec = std::move(k);
  inst.b_auto = true;
  inst.d_auto = true;
  inst.eps_grid = {1.0, 0.1, 0.01};
  inst.metadata["k_justification"] = std::move(k_justification);
  inst.common_fixed_point = std::move(fixed_point);
  inst.finalize();
  return inst;
}

std::vector<Instance> build_corpus() {
  std::vector<Instance> out;
  const double half = 0.5;
  const Vector zero2 = vec({0.0, 0.0});
  const std::string origin_fixed =
      "every factor fixes the origin, so K(eps) = 1 bounds a 0-fixed point for each eps";

  // m = 2, dim 2: rotations ---------------------------------------------------
  out.push_back(make_instance(
      "rot2-quarter", 2,
      {rotation_factor(half, M_PI / 2.0),
       averaged_linear_factor(half, Matrix::Identity(2, 2))},
      vec({1.0, 0.0}), k_constant(1.0), origin_fixed, zero2));

  out.push_back(make_instance(
      "rot2-eighth", 2, {rotation_factor(half, M_PI / 4.0), rotation_factor(half, M_PI / 4.0)},
      vec({2.0, 0.0}), k_constant(1.0), origin_fixed, zero2));

  out.push_back(make_instance(
      "rot2-mixed", 2,
      {rotation_factor(1.0 / 3.0, M_PI / 3.0), rotation_factor(half, M_PI / 2.0)},
      vec({1.0, 1.0}), k_constant(1.0), origin_fixed, zero2));

  out.push_back(make_instance(
      "rot2-slow", 2,
      {rotation_factor(0.7, 0.3), averaged_linear_factor(half, Matrix::Identity(2, 2))},
      vec({0.5, -1.0}), k_constant(1.0), origin_fixed, zero2));

  // m = 2, dim 2: projections -------------------------------------------------
  out.push_back(make_instance(
      "proj2-consistent", 2,
      {projection_factor(half, ConvexSet::halfspace(vec({0.0, 1.0}), 0.0)),
       projection_factor(half, ConvexSet::halfspace(vec({1.0, 0.0}), 0.0))},
      vec({3.0, 2.0}), k_constant(1.0), origin_fixed, zero2));

  out.push_back(make_instance(
      "proj2-inconsistent", 2,
      {projection_factor(half, ConvexSet::halfspace(vec({0.0, 1.0}), 0.0)),
       projection_factor(half, ConvexSet::halfspace(vec({0.0, -1.0}), -1.0))},
      vec({3.0, 2.0}), k_constant(1.0),
      "the halfspaces are disjoint, but each projection fixes its own set; the origin "
      "witnesses the first factor and (0,1) the second, so K(eps) = 1 works",
      std::nullopt));

  out.push_back(make_instance(
      "proj2-ball-box", 2,
      {projection_factor(half, ConvexSet::ball(zero2, 1.0)),
       projection_factor(half, ConvexSet::box(vec({-1.0, -1.0}), vec({1.0, 1.0})))},
      vec({3.0, 4.0}), k_constant(1.0), origin_fixed, zero2));

  {
    Matrix l1(2, 1), l2(2, 1);
    l1 << 1.0, 0.0;
    l2 << std::cos(0.5), std::sin(0.5);
    out.push_back(make_instance(
        "proj2-affine-lines", 2,
        {projection_factor(half, ConvexSet::affine_subspace(l1, zero2)),
         projection_factor(half, ConvexSet::affine_subspace(l2, zero2))},
        vec({1.0, 2.0}), k_constant(1.0), origin_fixed, zero2));
  }

  {
    Matrix dir(2, 1);
    dir << 1.0, 0.0;
    out.push_back(make_instance(
        "proj2-affine-parallel", 2,
        {projection_factor(half, ConvexSet::affine_subspace(dir, zero2)),
         projection_factor(half, ConvexSet::affine_subspace(dir, vec({0.0, 1.0})))},
        vec({2.0, -1.0}), k_constant(1.0),
        "parallel lines never meet, but each projection fixes its own line; the origin "
        "lies on the first and (0,1) on the second, so K(eps) = 1 works",
        std::nullopt));
  }

  out.push_back(make_instance(
      "proj2-under-relaxed", 2,
      {projection_factor(0.3, ConvexSet::halfspace(vec({0.0, 1.0}), 0.0)),
       projection_factor(0.3, ConvexSet::halfspace(vec({1.0, 0.0}), 0.0))},
      vec({2.0, 3.0}), k_constant(1.0), origin_fixed, zero2));

  // m = 3 / 4, dim 2 ------------------------------------------------------
  out.push_back(make_instance(
      "proj3-mixed-sets", 2,
      {projection_factor(half, ConvexSet::halfspace(vec({0.0, 1.0}), 0.0)),
       projection_factor(half, ConvexSet::ball(zero2, 2.0)),
       projection_factor(half, ConvexSet::box(vec({-3.0, -3.0}), vec({3.0, 3.0})))},
      vec({5.0, -1.0}), k_constant(1.0), origin_fixed, zero2));

  out.push_back(make_instance(
      "mix3-rot-proj-res", 2,
      {rotation_factor(half, M_PI / 2.0),
       projection_factor(half, ConvexSet::ball(zero2, 2.0)),
       resolvent_factor(2.0 / 3.0, vec({1.0, 2.0}).asDiagonal(), 0.5)},
      vec({1.5, 0.5}), k_constant(1.0), origin_fixed, zero2));

  {
    Matrix rot_scaled(2, 2);
    rot_scaled << 0.8 * std::cos(0.2), -0.8 * std::sin(0.2), 0.8 * std::sin(0.2),
        0.8 * std::cos(0.2);
    Matrix skew(2, 2);
    skew << 1.0, 0.5, -0.5, 1.0;
    out.push_back(make_instance(
        "mix4-all-kinds", 2,
        {rotation_factor(half, M_PI / 3.0),
         projection_factor(half, ConvexSet::halfspace(vec({0.0, 1.0}), 0.0)),
         averaged_linear_factor(half, rot_scaled),
         resolvent_factor(5.0 / 9.0, skew, 0.8)},
        vec({1.0, -0.5}), k_constant(1.0), origin_fixed, zero2));
  }

  // resolvent families ----------------------------------------------------
  out.push_back(make_instance(
      "resolvent-diag", 2,
      {resolvent_factor(2.0 / 3.0, vec({1.0, 2.0}).asDiagonal(), 0.5),
       resolvent_factor(2.0 / 3.0, vec({1.0, 2.0}).asDiagonal(), std::nullopt)},
      vec({4.0, 6.0}), k_constant(1.0), origin_fixed, zero2));

  {
    Matrix skew(2, 2);
    skew << 1.0, 0.5, -0.5, 1.0;
    out.push_back(make_instance(
        "resolvent-nonsym", 2,
        {resolvent_factor(5.0 / 9.0, skew, 0.8), resolvent_factor(5.0 / 9.0, skew, 0.8)},
        vec({2.0, -1.0}), k_constant(1.0), origin_fixed, zero2));
  }

  out.push_back(make_instance(
      "resolvent-zero", 2,
      {resolvent_factor(1e-6, Matrix::Zero(2, 2), std::nullopt),
       resolvent_factor(1e-6, Matrix::Zero(2, 2), std::nullopt)},
      vec({1.0, 1.0}), k_constant(1.0),
      "the zero operator's reflected resolvent is the identity, which fixes every point; "
      "K(eps) = 1 bounds the origin",
      vec({1.0, 1.0})));

  {
    Matrix tri = Matrix::Zero(8, 8);
    for (int i = 0; i < 8; ++i) {
      tri(i, i) = 1.0;
      if (i > 0) {
        tri(i, i - 1) = -0.5;
        tri(i - 1, i) = -0.5;
      }
    }
    out.push_back(make_instance(
        "resolvent-spd8", 8,
        {resolvent_factor(0.67, tri, std::nullopt), resolvent_factor(0.67, tri, std::nullopt)},
        Vector::Ones(8), k_constant(1.0), origin_fixed, Vector::Zero(8)));
  }

  // dim 8 projections -------------------------------------------------------
  {
    Vector n1 = Vector::Zero(8), n2 = Vector::Zero(8), n3 = Vector::Zero(8);
    n1[0] = 1.0;
    n1[1] = 1.0;
    n2[2] = 1.0;
    n3[4] = 1.0;
    n3[5] = -1.0;
    out.push_back(make_instance(
        "proj8-halfspaces-m3", 8,
        {projection_factor(half, ConvexSet::halfspace(n1, 0.0)),
         projection_factor(half, ConvexSet::halfspace(n2, 0.0)),
         projection_factor(half, ConvexSet::halfspace(n3, 0.0))},
        Vector::Ones(8), k_constant(1.0), origin_fixed, Vector::Zero(8)));
  }

  {
    Vector n1 = Vector::Zero(8), n2 = Vector::Zero(8), n3 = Vector::Zero(8),
           n4 = Vector::Zero(8);
    n1[0] = 1.0;
    n2[0] = 1.0;
    n2[1] = 1.0;
    n3[2] = 1.0;
    n4[6] = 1.0;
    out.push_back(make_instance(
        "proj8-halfspaces-m4", 8,
        {projection_factor(half, ConvexSet::halfspace(n1, 0.0)),
         projection_factor(half, ConvexSet::halfspace(n2, 0.0)),
         projection_factor(half, ConvexSet::halfspace(n3, 0.0)),
         projection_factor(half, ConvexSet::halfspace(n4, 0.0))},
        2.0 * Vector::Ones(8), k_constant(1.0), origin_fixed, Vector::Zero(8)));
  }

  out.push_back(make_instance(
      "proj8-ball-box", 8,
      {projection_factor(half, ConvexSet::ball(0.5 * Vector::Unit(8, 0), 2.0)),
       projection_factor(half,
                         ConvexSet::box(-Vector::Ones(8), Vector::Ones(8)))},
      3.0 * Vector::Ones(8), k_constant(1.0), origin_fixed, Vector::Zero(8)));

  // dim 16 ------------------------------------------------------------------
  {
    const double phi_angle = 0.4;
    Matrix b1 = Matrix::Zero(16, 8), b2 = Matrix::Zero(16, 8);
    for (int k = 0; k < 8; ++k) {
      b1(2 * k, k) = 1.0;
      b2(2 * k, k) = std::cos(phi_angle);
      b2(2 * k + 1, k) = std::sin(phi_angle);
    }
    out.push_back(make_instance(
        "proj16-affine-angle", 16,
        {projection_factor(half, ConvexSet::affine_subspace(b1, Vector::Zero(16))),
         projection_factor(half, ConvexSet::affine_subspace(b2, Vector::Zero(16)))},
        Vector::Ones(16), k_constant(1.0), origin_fixed, Vector::Zero(16)));
  }

  out.push_back(make_instance(
      "proj16-ball-box", 16,
      {projection_factor(half, ConvexSet::box(-Vector::Ones(16), Vector::Ones(16))),
       projection_factor(half, ConvexSet::ball(Vector::Zero(16), 1.5))},
      2.0 * Vector::Ones(16), k_constant(1.0), origin_fixed, Vector::Zero(16)));

  // alternative K forms -------------------------------------------------------
  {
    Instance inst;
    inst.id = "rot2-table-K";
    inst.dim = 2;
    inst.factor_specs = {rotation_factor(half, M_PI / 2.0),
                         averaged_linear_factor(half, Matrix::Identity(2, 2))};
    inst.x0 = vec({1.0, 0.0});
    inst.k_spec.form = BoundFnSpec::Form::table;
    inst.k_spec.knots = {{1e-8, 2.0}, {1e-2, 1.5}, {1.0, 1.0}};
    inst.b_auto = true;
    inst.d_auto = true;
    inst.eps_grid = {1.0, 0.1, 0.01};
    inst.metadata["k_justification"] =
        "both factors fix the origin, so any positive table bounds a 0-fixed point";
    inst.common_fixed_point = zero2;
    inst.finalize();
    out.push_back(std::move(inst));
  }

  {
    Instance inst;
    inst.id = "rot2-power-K";
    inst.dim = 2;
    inst.factor_specs = {rotation_factor(half, M_PI / 4.0), rotation_factor(half, M_PI / 4.0)};
    inst.x0 = vec({0.0, 1.5});
    inst.k_spec.form = BoundFnSpec::Form::inverse_power;
    inst.k_spec.c0 = 1.0;
    inst.k_spec.c = 1.0;
    inst.k_spec.k = 1.0;
    inst.b_auto = true;
    inst.d_auto = true;
    inst.eps_grid = {1.0, 0.1, 0.01};
    inst.metadata["k_justification"] =
        "both factors fix the origin; 1 + 1/eps dominates the zero norm everywhere";
    inst.common_fixed_point = zero2;
    inst.finalize();
    out.push_back(std::move(inst));
  }

  return out;
}

}  // namespace

const std::vector<Instance>& builtin_corpus() {
  static const std::vector<Instance> corpus = build_corpus();
  return corpus;
}

const Instance& builtin_instance(const std::string& id) {
  for (const Instance& inst : builtin_corpus()) {
    if (inst.id == id) return inst;
  }
  throw RejectedInputError("no builtin instance named '" + id + "'");
}

namespace {

std::vector<SourceSpec> build_sources() {
  std::vector<SourceSpec> out;

  out.push_back(SourceSpec{"src-identity", MonotoneSource::linear(Matrix::Identity(2, 2), 1.0),
                           1.0, vec({1.0, 0.0}), vec({0.0, 1.0}), true});

  {
    Matrix diag12 = vec({1.0, 2.0}).asDiagonal();
    out.push_back(SourceSpec{"src-diag12", MonotoneSource::linear(diag12, 0.5), 0.5,
                             vec({1.0, 0.0}), vec({0.6, 0.8}), true});
  }

  out.push_back(SourceSpec{"src-scale2",
                           MonotoneSource::linear(2.0 * Matrix::Identity(2, 2), 0.5), 0.5,
                           vec({0.0, 1.0}), vec({1.0, 0.0}), true});

  {
    Matrix skew(2, 2);
    skew << 1.0, 0.5, -0.5, 1.0;
    out.push_back(SourceSpec{"src-skew", MonotoneSource::linear(skew, 0.8), 0.8,
                             vec({1.0, 1.0}), vec({2.0, 0.0}), true});
  }

  {
    Matrix tri = Matrix::Zero(8, 8);
    for (int i = 0; i < 8; ++i) {
      tri(i, i) = 1.0;
      if (i > 0) {
        tri(i, i - 1) = -0.5;
        tri(i - 1, i) = -0.5;
      }
    }
    MonotoneSource src = MonotoneSource::linear(tri);
    const double beta = cocoercivity_constant(src);
    Vector b_pt = Vector::Zero(8);
    b_pt[0] = 1.0;
    b_pt[3] = -1.0;
    Vector c_pt = Vector::Ones(8);
    out.push_back(SourceSpec{"src-spd8", MonotoneSource::linear(tri, beta), beta, b_pt, c_pt,
                             true});
  }

  // A b has norm zero for the zero operator, so the rectangularity suite's
  // tightest-constant preconditions cannot hold; correspondence still runs.
  out.push_back(SourceSpec{"src-zero",
                           MonotoneSource::linear(Matrix::Zero(2, 2), kDefaultCocoercivityCap),
                           kDefaultCocoercivityCap, vec({1.0, 0.0}), vec({0.0, 1.0}), false});

  return out;
}

}  // namespace

const std::vector<SourceSpec>& builtin_sources() {
  static const std::vector<SourceSpec> sources = build_sources();
  return sources;
}

}  // namespace areg
