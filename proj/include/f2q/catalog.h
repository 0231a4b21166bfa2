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

#ifndef F2Q_CATALOG_H
#define F2Q_CATALOG_H

#include <string>
#include <vector>

#include "f2q/mapping.h"

namespace f2q {

/// Kinds accepted by build_mapping. Names use underscores; dashes are accepted on input.
const std::vector<std::string>& catalog_kinds();
std::string normalize_kind(const std::string& kind);

/// Builds a catalog mapping on an lx x ly torus. Throws SizeError when the size is not admissible.
Mapping build_mapping(const std::string& kind, int lx, int ly);

/// Smallest torus side accepted by each kind, and the required divisor of both sides.
int kind_size_divisor(const std::string& kind);

Mapping exact_bosonization(int lx, int ly);
Mapping bksf(int lx, int ly);
Mapping verstraete_cirac(int lx, int ly);
Mapping kitaev_honeycomb(int lx, int ly);
Mapping jordan_wigner_1d(int lx, int ly);
/// Jordan-Wigner ordering of the faces: rows bottom to top, x descending within a row.
int jw_order(int lx, int ly, int x, int y);

/// One stabilizer per vertex from the loop of the four face-site hoppings around it plus the
/// parities of the faces that close it. Used by every face-site SP mapping.
void add_vertex_stabilizers(Mapping& m);
/// One stabilizer per contractible face of the fermion graph for AB mappings on vertices.
void add_face_stabilizers(Mapping& m);

}  // namespace f2q

#endif
