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

#include "edt/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "edt/cli/report_io.hpp"
#include "edt/errors.hpp"
#include "edt/explorer.hpp"
#include "edt/metrics.hpp"
#include "edt/structures.hpp"
#include "edt/tolerances.hpp"

namespace edt::cli {
namespace {

struct Common {
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 selects the available parallelism
  std::string out;
  std::string format;  // empty: csv when --out ends in .csv, else json
  double tolerance = tol::kAssertion;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Master seed");
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  sub->add_option("--out", c.out, "Write the report here instead of standard output");
  sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--tolerance", c.tolerance, "Assertion tolerance")->check(CLI::NonNegativeNumber);
}

bool wants_csv(const Common& c) {
  if (!c.format.empty()) return c.format == "csv";
  return c.out.size() >= 4 && c.out.compare(c.out.size() - 4, 4, ".csv") == 0;
}

void require_json(const Common& c, const std::string& command) {
  if (wants_csv(c)) throw ValidationError(command + " emits JSON only; CSV is for scan tables");
}

void emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (c.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file " + c.out);
  write(file);
  if (!file) throw std::runtime_error("failed writing " + c.out);
}

void emit_json(const Common& c, std::ostream& out, const Json& j) {
  emit(c, out, [&](std::ostream& s) { s << dump(j); });
}

void emit_table(const Common& c, std::ostream& out, const ScanTable& t) {
  if (wants_csv(c))
    emit(c, out, [&](std::ostream& s) { write_csv(s, t); });
  else
    emit_json(c, out, to_json(t));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error and disturbance of consecutive projective measurements", "edt"};
  app.require_subcommand(1);
  app.fallthrough(false);

  Common common;
  std::function<int()> action;

  // compute
  std::string a_path, ap_path, b_path;
  auto* compute = app.add_subcommand("compute", "Error, disturbance, overall error and bounds");
  compute->add_option("--a", a_path, "Basis file for A")->required();
  compute->add_option("--aprime", ap_path, "Basis file for A'")->required();
  compute->add_option("--b", b_path, "Basis file for B")->required();
  add_common(compute, common);
  compute->callback([&] {
    action = [&] {
      require_json(common, "compute");
      const OrthonormalBasis a = read_basis_file(a_path);
      const OrthonormalBasis ap = read_basis_file(ap_path);
      const OrthonormalBasis b = read_basis_file(b_path);
      emit_json(common, out, to_json(compute_tradeoff(a, ap, b)));
      return kExitOk;
    };
  });

  // scan-theorem1
  double b_angle = std::numbers::pi / 2;
  int steps = 200;
  bool out_of_plane = false;
  auto* scan1 = app.add_subcommand("scan-theorem1", "Qubit sweep of eps + eta and Delta over a'");
  scan1->add_option("--b-angle", b_angle, "Angle between the Bloch vectors of A and B (radians)");
  scan1->add_option("--steps", steps, "Grid points");
  scan1->add_flag("--out-of-plane", out_of_plane, "Sweep a' perpendicular to Span{a, b}");
  add_common(scan1, common);
  scan1->callback([&] {
    action = [&] {
      emit_table(common, out, scan_theorem1(b_angle, steps, !out_of_plane));
      return kExitOk;
    };
  });

  // scan-bounds-d3
  double overlap1 = 0.005;
  auto* scan3 = app.add_subcommand("scan-bounds-d3", "d = 3 disturbance against its two upper bounds");
  scan3->add_option("--overlap1", overlap1, "Fixed smallest squared overlap, in [0, 1/3]");
  scan3->add_option("--steps", steps, "Grid points");
  add_common(scan3, common);
  scan3->callback([&] {
    action = [&] {
      emit_table(common, out, scan_bounds_d3(overlap1, steps));
      return kExitOk;
    };
  });

  // verify-properties
  std::optional<int> dim;
  std::optional<long> trials;
  auto* props = app.add_subcommand("verify-properties", "Seeded checks of the structural properties");
  props->add_option("--dim", dim, "Single dimension (default 2..5)");
  props->add_option("--trials", trials, "Random instances per dimension (default 1000)");
  add_common(props, common);
  props->callback([&] {
    action = [&] {
      require_json(common, "verify-properties");
      PropertyOptions o;
      if (dim) o.dims = {*dim};
      if (trials) o.trials = *trials;
      o.seed = common.seed;
      o.threads = common.threads;
      o.tolerance = common.tolerance;
      const PropertyReport r = verify_properties(o);
      emit_json(common, out, to_json(r));
      return r.all_passed() ? kExitOk : kExitViolation;
    };
  });

  // verify-theorem2
  auto* thm2 = app.add_subcommand("verify-theorem2", "Unbiased pair floor over random A'");
  thm2->add_option("--dim", dim, "Single dimension (default 2..5)");
  thm2->add_option("--trials", trials, "Random A' per dimension (default 1000)");
  add_common(thm2, common);
  thm2->callback([&] {
    action = [&] {
      require_json(common, "verify-theorem2");
      const std::vector<int> dims = dim ? std::vector<int>{*dim} : std::vector<int>{2, 3, 4, 5};
      Json runs = Json::array();
      std::size_t violations = 0;
      for (int d : dims) {
        const Theorem2Summary s =
            verify_theorem2(d, trials.value_or(1000), common.seed, common.threads, common.tolerance);
        violations += s.violations.size();
        runs.push_back(to_json(s));
      }
      Json j;
      j["runs"] = std::move(runs);
      j["total_violations"] = violations;
      emit_json(common, out, j);
      return violations == 0 ? kExitOk : kExitViolation;
    };
  });

  // minimize-aprime
  int restarts = 20;
  int iterations = 500;
  auto* minimize = app.add_subcommand("minimize-aprime", "Local search over the intermediate basis");
  minimize->add_option("--a", a_path, "Basis file for A (default: random pair from --seed)");
  minimize->add_option("--b", b_path, "Basis file for B");
  minimize->add_option("--dim", dim, "Dimension of the random pair (default 3)");
  minimize->add_option("--restarts", restarts, "Random restarts")->check(CLI::PositiveNumber);
  minimize->add_option("--iterations", iterations, "Iterations per restart")->check(CLI::NonNegativeNumber);
  add_common(minimize, common);
  minimize->callback([&] {
    action = [&] {
      require_json(common, "minimize-aprime");
      if (a_path.empty() != b_path.empty())
        throw ValidationError("minimize-aprime needs both --a and --b, or neither");
      if (!a_path.empty() && dim) throw ValidationError("--dim conflicts with --a/--b");
      std::optional<BasisTriple> pair;
      if (a_path.empty()) {
        const int d = dim.value_or(3);
        if (d > kMaxSearchDim) {
          std::ostringstream msg;
          msg << "minimize-aprime supports d <= " << kMaxSearchDim << ", got " << d;
          throw UnsupportedSizeError(msg.str());
        }
        pair = random_triple(d, common.seed);
      }
      const OrthonormalBasis a = pair ? pair->a : read_basis_file(a_path);
      const OrthonormalBasis b = pair ? pair->b : read_basis_file(b_path);
      MinimizeOptions o;
      o.restarts = restarts;
      o.iterations = iterations;
      o.seed = common.seed;
      o.threads = common.threads;
      const MinimizeResult r = minimize_over_intermediate(a, b, o);
      Json j;
      j["a"] = basis_to_json(a);
      j["b"] = basis_to_json(b);
      j["result"] = to_json(r);
      emit_json(common, out, j);
      const bool below = r.sum.value < r.floor - common.tolerance ||
                         r.delta.value < r.floor - common.tolerance;
      return below ? kExitViolation : kExitOk;
    };
  });

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "Randomized test of the conjectured floor");
  conj->add_option("--dim", dim, "Dimension (default 3)");
  conj->add_option("--trials", trials, "Random triples (default 10000)");
  add_common(conj, common);
  conj->callback([&] {
    action = [&] {
      require_json(common, "conjecture");
      const ConjectureRun r = conjecture_search(dim.value_or(3), trials.value_or(10000), common.seed,
                                                common.threads, common.tolerance);
      emit_json(common, out, to_json(r));
      return r.violations.empty() ? kExitOk : kExitViolation;
    };
  });

  // oracle-check
  long samples = 10000;
  int refine = 200;
  auto* oracle = app.add_subcommand("oracle-check", "Spectral formulas against sampled pure-state maxima");
  oracle->add_option("--dim", dim, "Dimension (default 3)");
  oracle->add_option("--trials", trials, "Random triples (default 100)");
  oracle->add_option("--samples", samples, "Pure-state samples per maximization")->check(CLI::PositiveNumber);
  oracle->add_option("--refine", refine, "Refinement iterations")->check(CLI::NonNegativeNumber);
  add_common(oracle, common);
  oracle->callback([&] {
    action = [&] {
      require_json(common, "oracle-check");
      OracleCheckOptions o;
      o.dim = dim.value_or(3);
      o.trials = trials.value_or(100);
      o.seed = common.seed;
      o.samples = samples;
      o.refine_iters = refine;
      o.threads = common.threads;
      o.upper_slack = common.tolerance;
      const OracleCheckReport r = oracle_check(o);
      emit_json(common, out, to_json(r));
      return r.passed ? kExitOk : kExitViolation;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    return action();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace edt::cli
