// Copyright 2026 The f2q Authors
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

// f2q: generate, transform, verify and compare fermion-to-qubit mappings on a torus.
//
//   f2q generate --kind exact-bosonization --lx 4 --ly 4 --out m.f2q
//   f2q transform --pipeline r15 --lx 4 --ly 4 --out compact.f2q
//   f2q verify m.f2q --checks algebra,loops,degeneracy,weights,oracle --jobs 4
//   f2q report --table
//   f2q separators --k 2
//
// Exit status: 0 when every requested check passes, 1 when a check fails, 2 on a usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "f2q/catalog.h"
#include "f2q/manifest.h"
#include "f2q/separators.h"
#include "f2q/transforms.h"
#include "f2q/verifier.h"

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

const f2q::TableRow* reference_row(const std::string& kind) {
  for (const auto& row : f2q::reference_table())
    if (row.kind == kind) return &row;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermion-to-qubit mappings on the square-lattice torus"};
  app.require_subcommand(1);

  std::string kind, out_path;
  int lx = 4, ly = 4;
  auto* generate = app.add_subcommand("generate", "Write a catalog mapping as a manifest");
  generate->add_option("--kind", kind, "Mapping kind (e.g. exact-bosonization, bksf, compact)")->required();
  generate->add_option("--lx", lx, "Torus width")->check(CLI::PositiveNumber);
  generate->add_option("--ly", ly, "Torus height")->check(CLI::PositiveNumber);
  generate->add_option("--out", out_path, "Output file (default: stdout)");

  std::string pipeline;
  auto* transform = app.add_subcommand("transform", "Run a derivation pipeline and write its output");
  transform->add_option("--pipeline", pipeline, "r15, r125, vc_to_eb, eb_to_jw or mlsc_to_eb")->required();
  transform->add_option("--lx", lx, "Torus width")->check(CLI::PositiveNumber);
  transform->add_option("--ly", ly, "Torus height")->check(CLI::PositiveNumber);
  transform->add_option("--out", out_path, "Output manifest (default: stdout)");

  std::string manifest_path, checks = "algebra,loops,degeneracy,weights,oracle";
  int jobs = 1, max_perimeter = 8;
  auto* verify = app.add_subcommand("verify", "Run the verifier suite on a manifest");
  verify->add_option("manifest", manifest_path, "Manifest file")->required()->check(CLI::ExistingFile);
  verify->add_option("--checks", checks, "Comma-separated: algebra, loops, degeneracy, weights, oracle");
  verify->add_option("--jobs", jobs, "Worker threads for pairwise scans")->check(CLI::PositiveNumber);
  verify->add_option("--max-perimeter", max_perimeter, "Longest contractible loop to check")
      ->check(CLI::Range(4, 16));

  bool table = false, equivalences = false;
  auto* report = app.add_subcommand("report", "Reproduce the reference comparison table");
  report->add_flag("--table", table, "Weight table for every reference mapping");
  report->add_flag("--equivalences", equivalences, "Pipeline outputs against their targets");
  report->add_option("--lx", lx, "Torus width")->check(CLI::PositiveNumber);
  report->add_option("--ly", ly, "Torus height")->check(CLI::PositiveNumber);

  int k = 1, sep_lx = 4, sep_ly = 0;
  bool print_ops = false;
  auto* separators = app.add_subcommand("separators", "Build separators and flippers and scan their algebra");
  separators->add_option("--k", k, "Grey-row spacing parameter")->check(CLI::PositiveNumber);
  separators->add_option("--lx", sep_lx, "Torus width (even)")->check(CLI::PositiveNumber);
  separators->add_option("--ly", sep_ly, "Torus height (default 4k)")->check(CLI::PositiveNumber);
  separators->add_option("--jobs", jobs, "Worker threads for the scan")->check(CLI::PositiveNumber);
  separators->add_flag("--print", print_ops, "Print every separator and flipper");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*generate) {
      f2q::Mapping m = f2q::build_mapping(kind, lx, ly);
      emit(f2q::write_manifest(m), out_path);
      return 0;
    }

    if (*transform) {
      auto res = f2q::run_pipeline(pipeline, lx, ly);
      std::string rep = f2q::to_text(res.report);
      emit(f2q::write_manifest(res.mapping, rep.substr(rep.find('\n') + 1)), out_path);
      if (!out_path.empty() && out_path != "-") std::cout << rep;
      return 0;
    }

    if (*verify) {
      f2q::Manifest man = f2q::read_manifest_file(manifest_path);
      f2q::VerifyOptions opts;
      opts.checks = split_list(checks);
      for (const auto& c : opts.checks) {
        static const std::set<std::string> known = {"algebra", "loops", "degeneracy", "weights", "oracle"};
        if (!known.count(c)) throw UsageError("unknown check '" + c + "'");
      }
      opts.jobs = jobs;
      opts.max_perimeter = max_perimeter;
      opts.oracle.max_qubits = f2q::oracle_max_qubits_from_env();
      if (const auto* row = reference_row(man.mapping.kind)) opts.expected_weights = &row->expected;
      auto rep = f2q::verify(man.mapping, opts);
      std::cout << rep.lines();
      return rep.ok() ? 0 : kFail;
    }

    if (*report) {
      if (!table && !equivalences) throw UsageError("report needs --table and/or --equivalences");
      bool ok = true;
      if (table) {
        auto lines = f2q::reproduce_table(lx, ly);
        std::cout << f2q::format_table(lines);
        ok = ok && f2q::table_ok(lines);
      }
      if (equivalences) {
        auto rep = f2q::pipeline_equivalences(lx, ly);
        std::cout << rep.lines();
        ok = ok && rep.ok();
      }
      return ok ? 0 : kFail;
    }

    if (*separators) {
      int height = sep_ly > 0 ? sep_ly : 4 * k;
      auto s = f2q::build_separators(sep_lx, height, k);
      auto with_flippers = f2q::build_flippers(s);
      size_t fixes = 0;
      auto fixed = f2q::fix_pauli_algebra(with_flippers, &fixes);
      auto scan = f2q::scan_algebra(fixed, jobs);
      auto grey = fixed.grey_fraction();
      bool grey_ok = grey.num * 2 * k == grey.den;
      if (print_ops) std::cout << f2q::to_text(fixed);
      std::cout << "k " << k << " torus " << sep_lx << "x" << height << "\n";
      std::cout << "separators " << fixed.separators.size() << " qubits " << fixed.num_qubits() << "\n";
      std::cout << "CHECK grey_fraction " << (grey_ok ? "PASS " : "FAIL ") << grey.num << "/" << grey.den
                << " (expected 1/" << 2 * k << ")\n";
      std::cout << "CHECK pauli_algebra " << (scan.ok() ? "PASS " : "FAIL ") << scan.str() << ", " << fixes
                << " flipper pairs repaired";
      if (!scan.ok()) std::cout << " | " << scan.first_violation;
      std::cout << "\n";
      return scan.ok() && grey_ok ? 0 : kFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "f2q: " << e.what() << "\n";
    return kUsage;
  } catch (const f2q::SizeError& e) {
    std::cerr << "f2q: " << e.what() << "\n";
    return kUsage;
  } catch (const f2q::ManifestError& e) {
    std::cerr << "f2q: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "f2q: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "f2q: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
