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

#ifndef F2Q_LATTICE_H
#define F2Q_LATTICE_H

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace f2q {

struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Coloring { Checkerboard, FourClass };

/// Periodic Lx x Ly square lattice.
///
/// Cells are indexed c(x,y) = (y mod Ly) * Lx + (x mod Lx). Vertex c, face c and the two edges of
/// cell c share that index: the horizontal edge h(x,y) = 2c runs from vertex (x,y) to (x+1,y), the
/// vertical edge v(x,y) = 2c+1 runs from vertex (x,y) to (x,y+1), and face (x,y) has vertex (x,y)
/// as its lower-left corner. Edge ids double as qubit-site ids for edge-qubit mappings.
class Torus {
 public:
  static Torus build(int lx, int ly);

  int lx() const { return lx_; }
  int ly() const { return ly_; }
  int num_cells() const { return lx_ * ly_; }
  int num_vertices() const { return num_cells(); }
  int num_faces() const { return num_cells(); }
  int num_edges() const { return 2 * num_cells(); }

  int cell(int x, int y) const;
  std::pair<int, int> xy(int cell) const { return {cell % lx_, cell / lx_}; }
  int hedge(int x, int y) const { return 2 * cell(x, y); }
  int vedge(int x, int y) const { return 2 * cell(x, y) + 1; }
  bool is_horizontal(int e) const { return (e & 1) == 0; }

  /// (L, R) vertices: horizontal edges run west to east, vertical edges north to south.
  std::pair<int, int> edge_vertices(int e) const;
  /// (L, R) faces: for h(x,y) the face above then below; for v(x,y) the face west then east.
  std::pair<int, int> edge_faces(int e) const;
  /// Bottom, right, top, left.
  std::array<int, 4> face_boundary(int f) const;
  /// East, north, west, south.
  std::array<int, 4> vertex_edges(int v) const;

  std::string edge_name(int e) const;
  void check_edge(int e) const;
  void check_cell(int c) const;

  bool supports(Coloring c) const;
  /// Checkerboard: 1 for odd faces ((x+y) even), 0 for even faces.
  /// Four-class: 1..4 by (x mod 2, y mod 2) = (0,0),(1,0),(1,1),(0,1); 1 and 3 are odd faces.
  int color_of(Coloring c, int f) const;

 private:
  Torus(int lx, int ly) : lx_(lx), ly_(ly) {}
  int lx_, ly_;
};

}  // namespace f2q

#endif
