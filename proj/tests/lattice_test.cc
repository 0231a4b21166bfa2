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

#include <algorithm>
#include <map>
#include <set>

#include "f2q/lattice.h"
#include "gtest/gtest.h"

using namespace f2q;

TEST(Lattice, Counts) {
  Torus a = Torus::build(2, 2);
  EXPECT_EQ(a.num_vertices(), 4);
  EXPECT_EQ(a.num_edges(), 8);
  EXPECT_EQ(a.num_faces(), 4);
  Torus b = Torus::build(4, 4);
  EXPECT_EQ(b.num_faces(), 16);
  EXPECT_EQ(b.num_edges(), 32);
  for (int lx = 2; lx <= 6; lx++)
    for (int ly = 2; ly <= 6; ly++) {
      Torus t = Torus::build(lx, ly);
      EXPECT_EQ(t.num_vertices() - t.num_edges() + t.num_faces(), 0);
    }
}

TEST(Lattice, TooSmallIsRejected) {
  EXPECT_THROW(Torus::build(1, 4), SizeError);
  EXPECT_THROW(Torus::build(4, 0), SizeError);
}

TEST(Lattice, OddTorusHasNoCheckerboard) {
  Torus t = Torus::build(3, 3);
  EXPECT_FALSE(t.supports(Coloring::Checkerboard));
  EXPECT_THROW(t.color_of(Coloring::Checkerboard, 0), SizeError);
}

TEST(Lattice, EdgeEndpoints) {
  Torus t = Torus::build(4, 4);
  EXPECT_EQ(t.edge_vertices(t.hedge(0, 0)), std::make_pair(t.cell(0, 0), t.cell(1, 0)));
  // v(x,y) runs north to south: L is the upper vertex.
  EXPECT_EQ(t.edge_vertices(t.vedge(2, 3)), std::make_pair(t.cell(2, 0), t.cell(2, 3)));
  EXPECT_EQ(t.edge_vertices(t.hedge(3, 1)), std::make_pair(t.cell(3, 1), t.cell(0, 1)));
  EXPECT_THROW(t.edge_vertices(32), std::out_of_range);
  EXPECT_THROW(t.edge_vertices(-1), std::out_of_range);
}

// Vertices 5 = (1,1) and 6 = (2,1); faces a = (0,0), b = (1,0), c = (1,1), d = (0,1).
TEST(Lattice, FacesAcrossEdge56) {
  Torus t = Torus::build(4, 4);
  int e56 = t.hedge(1, 1);
  EXPECT_EQ(t.edge_vertices(e56), std::make_pair(t.cell(1, 1), t.cell(2, 1)));
  auto [l, r] = t.edge_faces(e56);
  EXPECT_EQ(l, t.cell(1, 1));  // c
  EXPECT_EQ(r, t.cell(1, 0));  // b
  // Edge 58 from vertex 5 up to vertex 8 = (1,2) separates d (west) from c (east).
  EXPECT_EQ(t.edge_faces(t.vedge(1, 1)), std::make_pair(t.cell(0, 1), t.cell(1, 1)));
}

TEST(Lattice, FaceBoundary) {
  Torus s = Torus::build(2, 2);
  for (int f = 0; f < s.num_faces(); f++) {
    auto b = s.face_boundary(f);
    EXPECT_EQ(std::set<int>(b.begin(), b.end()).size(), 4u);
  }
  Torus t = Torus::build(4, 4);
  std::map<int, int> seen;
  for (int f = 0; f < t.num_faces(); f++)
    for (int e : t.face_boundary(f)) seen[e]++;
  EXPECT_EQ(seen.size(), 32u);
  for (auto [e, n] : seen) EXPECT_EQ(n, 2) << t.edge_name(e);

  auto a = t.face_boundary(t.cell(1, 1)), b = t.face_boundary(t.cell(2, 1));
  std::set<int> sa(a.begin(), a.end());
  int shared = 0;
  for (int e : b) shared += sa.count(e);
  EXPECT_EQ(shared, 1);
}

TEST(Lattice, EdgeFacesAgreeWithBoundaries) {
  Torus t = Torus::build(3, 4);
  for (int e = 0; e < t.num_edges(); e++) {
    auto [l, r] = t.edge_faces(e);
    for (int f : {l, r}) {
      auto b = t.face_boundary(f);
      EXPECT_NE(std::find(b.begin(), b.end(), e), b.end()) << t.edge_name(e);
    }
  }
}

TEST(Lattice, Checkerboard) {
  Torus t = Torus::build(2, 2);
  for (int f = 0; f < t.num_faces(); f++) {
    auto [x, y] = t.xy(f);
    EXPECT_NE(t.color_of(Coloring::Checkerboard, f), t.color_of(Coloring::Checkerboard, t.cell(x + 1, y)));
    EXPECT_NE(t.color_of(Coloring::Checkerboard, f), t.color_of(Coloring::Checkerboard, t.cell(x, y + 1)));
  }
}

TEST(Lattice, FourClass) {
  Torus t = Torus::build(4, 4);
  for (int y0 = 0; y0 < 4; y0 += 2)
    for (int x0 = 0; x0 < 4; x0 += 2) {
      std::set<int> labels;
      for (int dy = 0; dy < 2; dy++)
        for (int dx = 0; dx < 2; dx++) labels.insert(t.color_of(Coloring::FourClass, t.cell(x0 + dx, y0 + dy)));
      EXPECT_EQ(labels, (std::set<int>{1, 2, 3, 4}));
    }
  for (int f = 0; f < t.num_faces(); f++) {
    int c = t.color_of(Coloring::FourClass, f);
    bool odd = t.color_of(Coloring::Checkerboard, f) == 1;
    EXPECT_EQ(odd, c == 1 || c == 3);
  }
  EXPECT_THROW(Torus::build(6, 6).color_of(Coloring::FourClass, 0), SizeError);
}

TEST(Lattice, EdgeNames) {
  Torus t = Torus::build(4, 4);
  EXPECT_EQ(t.edge_name(t.hedge(3, 2)), "h(3,2)");
  EXPECT_EQ(t.edge_name(t.vedge(0, 1)), "v(0,1)");
  EXPECT_EQ(t.hedge(4, -1), t.hedge(0, 3));
}
