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

#pragma once

#include <iosfwd>
#include <string>

#include "edt/explorer.hpp"
#include "edt/measurement.hpp"
#include "edt/metrics.hpp"
#include "json.hpp"

// Serialization of bases and reports. Complex numbers are [re, im] pairs,
// outcome indices are 0-based, and key order is fixed so that parsing an
// emitted report and dumping it again gives the same bytes.
namespace edt::cli {

using Json = nlohmann::ordered_json;

/// {"dim": d, "vectors": [[[re, im], ...], ...]}, one inner list per vector.
Json basis_to_json(const OrthonormalBasis& basis);

/// Parses a basis file object. Near-orthonormal input within `tolerance` is
/// re-orthonormalized; anything worse is rejected naming the failing pair.
OrthonormalBasis basis_from_json(const Json& j, double tolerance = tol::kFileBasis);

OrthonormalBasis read_basis_file(const std::string& path);

Json vector_to_json(const CVector& v);
Json triple_to_json(const BasisTriple& t);

Json to_json(const TradeoffReport& r);
Json to_json(const ScanTable& t);
Json to_json(const Theorem2Summary& s);
Json to_json(const ConjectureRun& r);
Json to_json(const MinimizeResult& r);
Json to_json(const PropertyReport& r);
Json to_json(const OracleCheckReport& r);

/// Header line plus one line per row; every value printed with 17
/// significant digits through std::to_chars, so no locale is involved.
void write_csv(std::ostream& out, const ScanTable& t);

std::string format_double(double v);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace edt::cli
