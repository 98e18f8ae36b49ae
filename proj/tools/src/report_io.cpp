// Copyright 2026 The edtradeoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edt/cli/report_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "edt/errors.hpp"

namespace edt::cli {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ValidationError("malformed basis file: " + what);
}

Complex complex_from_json(const Json& j, int vec, int comp) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    std::ostringstream msg;
    msg << "vector " << vec << " component " << comp << " is not a [re, im] pair";
    malformed(msg.str());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json violations_to_json(const std::vector<TrialViolation>& violations) {
  Json out = Json::array();
  for (const TrialViolation& v : violations) {
    Json j;
    j["trial"] = v.trial;
    j["slack_sum"] = v.slack_sum;
    j["slack_delta"] = v.slack_delta;
    j["instance"] = triple_to_json(v.instance);
    out.push_back(std::move(j));
  }
  return out;
}

Json optimum_to_json(const IntermediateOptimum& o) {
  Json j;
  j["value"] = o.value;
  j["restart"] = o.restart;
  j["distance_to_a"] = o.distance_to_a;
  j["distance_to_b"] = o.distance_to_b;
  j["aprime"] = o.aprime.size() > 0 ? basis_to_json(OrthonormalBasis::from_columns(o.aprime))
                                    : Json(nullptr);
  return j;
}

}  // namespace

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(Json::array({v(k).real(), v(k).imag()}));
  return out;
}

Json basis_to_json(const OrthonormalBasis& basis) {
  Json j;
  j["dim"] = basis.dim();
  Json vectors = Json::array();
  for (int i = 0; i < basis.dim(); ++i) vectors.push_back(vector_to_json(basis.vector(i)));
  j["vectors"] = std::move(vectors);
  return j;
}

OrthonormalBasis basis_from_json(const Json& j, double tolerance) {
  if (!j.is_object()) malformed("top level is not an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) malformed("missing integer \"dim\"");
  if (!j.contains("vectors") || !j["vectors"].is_array()) malformed("missing array \"vectors\"");
  const long dim = j["dim"].get<long>();
  if (dim < 2) malformed("dim must be at least 2");
  if (dim > kMaxDim) {
    std::ostringstream msg;
    msg << "dimension " << dim << " exceeds the supported maximum " << kMaxDim;
    throw UnsupportedSizeError(msg.str());
  }
  const Json& vectors = j["vectors"];
  if (static_cast<long>(vectors.size()) != dim) {
    std::ostringstream msg;
    msg << "expected " << dim << " vectors, found " << vectors.size();
    malformed(msg.str());
  }
  const int d = static_cast<int>(dim);
  CMatrix columns(d, d);
  for (int i = 0; i < d; ++i) {
    const Json& v = vectors[static_cast<std::size_t>(i)];
    if (!v.is_array() || static_cast<int>(v.size()) != d) {
      std::ostringstream msg;
      msg << "vector " << i << " does not have " << d << " components";
      malformed(msg.str());
    }
    for (int k = 0; k < d; ++k) columns(k, i) = complex_from_json(v[static_cast<std::size_t>(k)], i, k);
  }
  return OrthonormalBasis::repaired(std::move(columns), tolerance);
}

OrthonormalBasis read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open basis file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  try {
    return basis_from_json(j);
  } catch (const ValidationError& e) {
    // Keep the derived type so oversize files stay distinguishable.
    if (dynamic_cast<const UnsupportedSizeError*>(&e)) throw UnsupportedSizeError(path + ": " + e.what());
    throw ValidationError(path + ": " + e.what());
  }
}

Json triple_to_json(const BasisTriple& t) {
  Json j;
  j["a"] = basis_to_json(t.a);
  j["aprime"] = basis_to_json(t.ap);
  j["b"] = basis_to_json(t.b);
  return j;
}

Json to_json(const TradeoffReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["epsilon"] = r.epsilon;
  j["eta"] = r.eta;
  j["delta"] = r.delta;
  j["epsilon_cal"] = r.epsilon_cal;
  j["eta_cal"] = r.eta_cal;
  j["bound1"] = r.bound1;
  j["bound2"] = r.bound2;
  j["witness_error_index"] = r.witness_error_index;
  j["witness_disturbance_index"] = r.witness_disturbance_index;
  j["delta_error_index"] = r.delta_error_index;
  j["delta_disturbance_index"] = r.delta_disturbance_index;
  j["delta_sign"] = r.delta_sign;
  j["witness_state"] = vector_to_json(r.witness_state);
  return j;
}

Json to_json(const ScanTable& t) {
  Json j;
  j["columns"] = t.column_names;
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(row);
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const Theorem2Summary& s) {
  Json j;
  j["dim"] = s.dim;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["floor"] = s.floor;
  j["sum_at_identity"] = s.sum_at_identity;
  j["min_sum"] = s.min_sum;
  j["min_sum_trial"] = s.min_sum_trial;
  j["violations"] = violations_to_json(s.violations);
  return j;
}

Json to_json(const ConjectureRun& r) {
  Json j;
  j["dim"] = r.dim;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["min_slack_sum"] = r.min_slack_sum;
  j["min_slack_delta"] = r.min_slack_delta;
  j["min_slack_sum_trial"] = r.min_slack_sum_trial;
  j["min_slack_delta_trial"] = r.min_slack_delta_trial;
  j["error_branch_trials"] = r.error_branch_trials;
  j["disturbance_branch_trials"] = r.disturbance_branch_trials;
  j["argmin_distance_to_a"] = r.argmin_distance_to_a;
  j["argmin_distance_to_b"] = r.argmin_distance_to_b;
  j["violations"] = violations_to_json(r.violations);
  return j;
}

Json to_json(const MinimizeResult& r) {
  Json j;
  j["floor"] = r.floor;
  j["sum"] = optimum_to_json(r.sum);
  j["delta"] = optimum_to_json(r.delta);
  return j;
}

Json to_json(const PropertyReport& r) {
  Json checks = Json::array();
  for (const PropertyCheck& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["instances"] = c.instances;
    j["worst_margin"] = c.worst_margin;
    j["passed"] = c.passed;
    checks.push_back(std::move(j));
  }
  Json j;
  j["all_passed"] = r.all_passed();
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const OracleCheckReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["trials"] = r.trials;
  j["min_gap_error"] = r.min_gap_error;
  j["max_gap_error"] = r.max_gap_error;
  j["min_gap_disturbance"] = r.min_gap_disturbance;
  j["max_gap_disturbance"] = r.max_gap_disturbance;
  j["min_gap_delta"] = r.min_gap_delta;
  j["max_gap_delta"] = r.max_gap_delta;
  j["max_closed_form_eig_diff"] = r.max_closed_form_eig_diff;
  j["passed"] = r.passed;
  return j;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const ScanTable& t) {
  for (std::size_t c = 0; c < t.column_names.size(); ++c)
    out << (c ? "," : "") << t.column_names[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << '\n';
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace edt::cli
