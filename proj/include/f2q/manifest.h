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

#ifndef F2Q_MANIFEST_H
#define F2Q_MANIFEST_H

#include <iosfwd>
#include <string>
#include <vector>

#include "f2q/mapping.h"

namespace f2q {

struct ManifestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plain-text mapping file. Header lines (kind, lx, ly, convention, ratio), then the sections
/// QUBITS, SITES, HOPPING, PARITY, STABILIZER and an optional free-form REPORT, then END.
/// Output is deterministic: the same mapping always renders to the same bytes.
std::string write_manifest(const Mapping& m, const std::string& report = "");

struct Manifest {
  Mapping mapping;
  /// Lines of the REPORT section, if any.
  std::vector<std::string> report;
};

Manifest read_manifest(std::istream& in);
Manifest read_manifest_file(const std::string& path);
void write_manifest_file(const std::string& path, const Mapping& m, const std::string& report = "");

/// "h(x,y)" or "v(x,y)" to a torus edge id.
int parse_edge_name(const Torus& t, const std::string& name);

}  // namespace f2q

#endif
