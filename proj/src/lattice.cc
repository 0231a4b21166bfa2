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

#include "f2q/lattice.h"

namespace f2q {

namespace {
int wrap(int a, int n) { return ((a % n) + n) % n; }
}  // namespace

Torus Torus::build(int lx, int ly) {
  if (lx < 2 || ly < 2) {
    throw SizeError("torus needs Lx, Ly >= 2, got " + std::to_string(lx) + "x" + std::to_string(ly));
  }
  return Torus(lx, ly);
}

int Torus::cell(int x, int y) const { return wrap(y, ly_) * lx_ + wrap(x, lx_); }

void Torus::check_edge(int e) const {
  if (e < 0 || e >= num_edges()) throw std::out_of_range("edge id " + std::to_string(e));
}

void Torus::check_cell(int c) const {
  if (c < 0 || c >= num_cells()) throw std::out_of_range("cell id " + std::to_string(c));
}

std::pair<int, int> Torus::edge_vertices(int e) const {
  check_edge(e);
  auto [x, y] = xy(e / 2);
  if (is_horizontal(e)) return {cell(x, y), cell(x + 1, y)};
  return {cell(x, y + 1), cell(x, y)};
}

std::pair<int, int> Torus::edge_faces(int e) const {
  check_edge(e);
  auto [x, y] = xy(e / 2);
  if (is_horizontal(e)) return {cell(x, y), cell(x, y - 1)};
  return {cell(x - 1, y), cell(x, y)};
}

std::array<int, 4> Torus::face_boundary(int f) const {
  check_cell(f);
  auto [x, y] = xy(f);
  return {hedge(x, y), vedge(x + 1, y), hedge(x, y + 1), vedge(x, y)};
}

std::array<int, 4> Torus::vertex_edges(int v) const {
  check_cell(v);
  auto [x, y] = xy(v);
  return {hedge(x, y), vedge(x, y), hedge(x - 1, y), vedge(x, y - 1)};
}

std::string Torus::edge_name(int e) const {
  check_edge(e);
  auto [x, y] = xy(e / 2);
  return std::string(is_horizontal(e) ? "h(" : "v(") + std::to_string(x) + "," +
         std::to_string(y) + ")";
}

bool Torus::supports(Coloring c) const {
  if (c == Coloring::Checkerboard) return lx_ % 2 == 0 && ly_ % 2 == 0;
  return lx_ % 4 == 0 && ly_ % 4 == 0;
}

int Torus::color_of(Coloring c, int f) const {
  check_cell(f);
  if (!supports(c)) {
    throw SizeError(std::string(c == Coloring::Checkerboard ? "checkerboard" : "four-class") +
                    " coloring needs " + (c == Coloring::Checkerboard ? "even" : "multiple-of-4") +
                    " sides, got " + std::to_string(lx_) + "x" + std::to_string(ly_));
  }
  auto [x, y] = xy(f);
  if (c == Coloring::Checkerboard) return (x + y) % 2 == 0 ? 1 : 0;
  static const int kClass[2][2] = {{1, 4}, {2, 3}};  // [x mod 2][y mod 2]
  return kClass[x % 2][y % 2];
}

}  // namespace f2q
