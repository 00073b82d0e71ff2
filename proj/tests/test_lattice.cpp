#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hiveflow/lattice.hpp"

using namespace hiveflow;

TEST_CASE("size formulas and small-lattice counts") {
  struct Row {
    int n, nvert, nedge, ntri, nrhombi, nturn;
  };
  const Row rows[] = {
      {1, 3, 3, 1, 0, 6},    {2, 6, 9, 4, 3, 24},    {3, 10, 18, 9, 9, 54},
      {4, 15, 30, 16, 18, 96}, {5, 21, 45, 25, 30, 150},
  };
  for (const Row& w : rows) {
    CAPTURE(w.n);
    Lattice L(w.n);
    CHECK(L.nvert == w.nvert);
    CHECK(L.nedge == w.nedge);
    CHECK(L.ntri == w.ntri);
    CHECK(L.nrhombi == w.nrhombi);
    CHECK(L.nturn == w.nturn);
    CHECK((int)L.edges.size() == w.nedge);
    CHECK((int)L.tris.size() == w.ntri);
    CHECK((int)L.rhombi.size() == w.nrhombi);
    int upright = 0;
    for (const Triangle& t : L.tris) upright += t.upright;
    CHECK(upright == w.n * (w.n + 1) / 2);
    CHECK(w.ntri - upright == w.n * (w.n - 1) / 2);
  }
  CHECK_THROWS_AS(Lattice(0), std::invalid_argument);
  CHECK_THROWS_AS(Lattice(-2), std::invalid_argument);
}

TEST_CASE("edge endpoints, upright triangles and border classes") {
  for (int n : {1, 2, 3, 5}) {
    CAPTURE(n);
    Lattice L(n);
    int per_side[4] = {0, 0, 0, 0};
    for (int32_t ei = 0; ei < L.nedge; ++ei) {
      const Edge& e = L.edges[ei];
      switch (e.kind) {
        case EdgeKind::H:
          CHECK(e.v0 == L.vertex_id(e.r, e.p));
          CHECK(e.v1 == L.vertex_id(e.r, e.p + 1));
          break;
        case EdgeKind::R:
          CHECK(e.v0 == L.vertex_id(e.r, e.p));
          CHECK(e.v1 == L.vertex_id(e.r + 1, e.p));
          break;
        case EdgeKind::F:
          CHECK(e.v0 == L.vertex_id(e.r + 1, e.p));
          CHECK(e.v1 == L.vertex_id(e.r, e.p + 1));
          break;
      }
      CHECK(e.up_tri == L.ut(e.r, e.p));
      CHECK(L.tris[e.up_tri].upright);
      CHECK(L.slot_of(e.up_tri, ei) >= 0);
      CHECK((e.down_tri == -1) == (e.side != BorderSide::none));
      if (e.down_tri >= 0) {
        CHECK_FALSE(L.tris[e.down_tri].upright);
        CHECK(L.slot_of(e.down_tri, ei) >= 0);
        CHECK(e.border_index == 0);
      } else {
        CHECK(e.border_index >= 1);
        CHECK(e.border_index <= n);
      }
      ++per_side[(int)e.side];
    }
    CHECK(per_side[(int)BorderSide::right] == n);
    CHECK(per_side[(int)BorderSide::bottom] == n);
    CHECK(per_side[(int)BorderSide::left] == n);
    CHECK(per_side[(int)BorderSide::none] == L.nedge - 3 * n);

    for (int i = 1; i <= n; ++i) {
      CHECK(L.border_edge(BorderSide::right, i) == L.ef(n - i, i - 1));
      CHECK(L.border_edge(BorderSide::bottom, i) == L.eh(0, n - i));
      CHECK(L.border_edge(BorderSide::left, i) == L.er(n - i, 0));
      for (BorderSide s : {BorderSide::right, BorderSide::bottom, BorderSide::left}) {
        const Edge& e = L.edges[L.border_edge(s, i)];
        CHECK(e.side == s);
        CHECK(e.border_index == i);
      }
    }
    CHECK_THROWS_AS(L.border_edge(BorderSide::right, 0), std::out_of_range);
    CHECK_THROWS_AS(L.border_edge(BorderSide::left, n + 1), std::out_of_range);
    CHECK_THROWS_AS(L.border_edge(BorderSide::none, 1), std::invalid_argument);
  }
}

TEST_CASE("triangle sides walk the boundary counterclockwise") {
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    Lattice L(n);
    for (int32_t ti = 0; ti < L.ntri; ++ti) {
      const Triangle& t = L.tris[ti];
      if (t.upright) {
        CHECK(t.side[0] == L.eh(t.r, t.p));
        CHECK(t.side[1] == L.ef(t.r, t.p));
        CHECK(t.side[2] == L.er(t.r, t.p));
      } else {
        CHECK(t.side[0] == L.er(t.r, t.p + 1));
        CHECK(t.side[1] == L.eh(t.r + 1, t.p));
        CHECK(t.side[2] == L.ef(t.r, t.p));
      }
      // consecutive sides share exactly one vertex, all three sides pairwise
      // distinct
      for (int k = 0; k < 3; ++k) {
        const Edge& a = L.edges[t.side[k]];
        const Edge& b = L.edges[t.side[(k + 1) % 3]];
        CHECK(t.side[k] != t.side[(k + 1) % 3]);
        int shared = (a.v0 == b.v0) + (a.v0 == b.v1) + (a.v1 == b.v0) + (a.v1 == b.v1);
        CHECK(shared == 1);
      }
      for (int k = 0; k < 3; ++k) CHECK(L.slot_of(ti, t.side[k]) == k);
    }
  }
}

TEST_CASE("rhombus geometry: diagonal, roles, parallel pairs") {
  for (int n : {2, 3, 5}) {
    CAPTURE(n);
    Lattice L(n);
    int per_orient[3] = {0, 0, 0};
    std::set<int32_t> diags;
    for (int32_t ri = 0; ri < L.nrhombi; ++ri) {
      const Rhombus& rh = L.rhombi[ri];
      ++per_orient[rh.orient];
      CHECK(L.edges[rh.diag].up_tri == rh.up_tri);
      CHECK(L.edges[rh.diag].down_tri == rh.down_tri);
      CHECK(L.edges[rh.diag].diag_of == ri);
      CHECK(diags.insert(rh.diag).second);
      CHECK(L.tris[rh.up_tri].upright);
      CHECK_FALSE(L.tris[rh.down_tri].upright);
      // ul, ur sit in the upright triangle, ll, lr in the downright one
      CHECK(L.slot_of(rh.up_tri, rh.ul) >= 0);
      CHECK(L.slot_of(rh.up_tri, rh.ur) >= 0);
      CHECK(L.slot_of(rh.down_tri, rh.ll) >= 0);
      CHECK(L.slot_of(rh.down_tri, rh.lr) >= 0);
      // parallel sides have equal kind; the five edges are distinct
      CHECK(L.edges[rh.ul].kind == L.edges[rh.lr].kind);
      CHECK(L.edges[rh.ur].kind == L.edges[rh.ll].kind);
      CHECK(L.edges[rh.ul].kind != L.edges[rh.ur].kind);
      CHECK(L.edges[rh.ul].kind != L.edges[rh.diag].kind);
      CHECK(L.edges[rh.ur].kind != L.edges[rh.diag].kind);
      std::set<int32_t> five{rh.diag, rh.ul, rh.ur, rh.ll, rh.lr};
      CHECK(five.size() == 5);
    }
    for (int o = 0; o < 3; ++o) CHECK(per_orient[o] == n * (n - 1) / 2);
    CHECK((int)diags.size() == L.nrhombi);

    // triangle->rhombus back references
    int64_t incidences = 0;
    for (int32_t ti = 0; ti < L.ntri; ++ti)
      for (int32_t ri : L.tris[ti].rhombi)
        if (ri >= 0) {
          ++incidences;
          CHECK((L.rhombi[ri].up_tri == ti || L.rhombi[ri].down_tri == ti));
        }
    CHECK(incidences == 2 * L.nrhombi);
  }

  // spot values promised by the construction
  {
    Lattice L1(1);
    for (int32_t ri : L1.tris[0].rhombi) CHECK(ri == -1);
    Lattice L2(2);
    int32_t down = L2.dt(0, 0);
    int cnt = 0;
    for (int32_t ri : L2.tris[down].rhombi) cnt += ri >= 0;
    CHECK(cnt == 3);
    Lattice L3(3);
    cnt = 0;
    for (int32_t ri : L3.tris[L3.ut(0, 0)].rhombi) cnt += ri >= 0;
    CHECK(cnt == 1);
  }
}

TEST_CASE("turn ids, senses and the turn digraph") {
  for (int n : {1, 2, 3, 4}) {
    CAPTURE(n);
    Lattice L(n);
    for (int32_t t = 0; t < L.nturn; ++t) {
      int32_t tri = L.tri_of_turn(t);
      CHECK(tri >= 0);
      CHECK(tri < L.ntri);
      int en = L.entry_slot(t), ex = L.exit_slot(t);
      CHECK(en != ex);
      CHECK(L.turn_id(tri, en, ex) == t);
      CHECK(L.entry_edge(t) == L.tris[tri].side[en]);
      CHECK(L.exit_edge(t) == L.tris[tri].side[ex]);
      CHECK(L.turn_between(tri, L.entry_edge(t), L.exit_edge(t)) == t);
      CHECK(L.turn_ccw(t) == (ex == (en + 2) % 3));
      int32_t rev = L.reverse_turn(t);
      CHECK(rev != t);
      CHECK(L.tri_of_turn(rev) == tri);
      CHECK(L.entry_edge(rev) == L.exit_edge(t));
      CHECK(L.reverse_turn(rev) == t);
      CHECK(L.turn_ccw(rev) == !L.turn_ccw(t));
    }
    // three turns of each sense per triangle
    for (int32_t ti = 0; ti < L.ntri; ++ti) {
      int ccw = 0;
      for (int k = 0; k < 6; ++k) ccw += L.turn_ccw(ti * 6 + k);
      CHECK(ccw == 3);
      CHECK(L.turn_between(ti, L.tris[ti].side[0], L.tris[ti].side[0]) == -1);
    }

    // adjacency: out-neighbors are exactly the turns of the opposite triangle
    // continuing through the shared side, ascending, mutual with in-lists
    int64_t out_total = 0, in_total = 0;
    for (int32_t t = 0; t < L.nturn; ++t) {
      const Edge& ex = L.edges[L.exit_edge(t)];
      int32_t other = ex.up_tri == L.tri_of_turn(t) ? ex.down_tri : ex.up_tri;
      const auto& outs = L.turn_out(t);
      if (other < 0) {
        CHECK(outs[0] == -1);
        CHECK(outs[1] == -1);
      } else {
        CHECK(outs[0] >= 0);
        CHECK(outs[1] > outs[0]);
        for (int32_t z : outs) {
          CHECK(L.tri_of_turn(z) == other);
          CHECK(L.entry_edge(z) == L.exit_edge(t));
          const auto& ins = L.turn_in(z);
          CHECK((ins[0] == t || ins[1] == t));
        }
      }
      for (int32_t z : outs) out_total += z >= 0;
      for (int32_t z : L.turn_in(t)) in_total += z >= 0;
    }
    CHECK(out_total == in_total);
    int interior_edges = L.nedge - 3 * n;
    CHECK(out_total == 8 * interior_edges);
  }
}

TEST_CASE("acute and obtuse turns of a rhombus") {
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    Lattice L(n);
    for (const Rhombus& rh : L.rhombi) {
      int32_t au = L.acute_turn_up(rh), ad = L.acute_turn_down(rh);
      int32_t ou = L.obtuse_turn_up(rh), od = L.obtuse_turn_down(rh);
      CHECK(L.tri_of_turn(au) == rh.up_tri);
      CHECK(L.entry_edge(au) == rh.ul);
      CHECK(L.exit_edge(au) == rh.ur);
      CHECK(L.tri_of_turn(ad) == rh.down_tri);
      CHECK(L.entry_edge(ad) == rh.lr);
      CHECK(L.exit_edge(ad) == rh.ll);
      CHECK(ou == L.reverse_turn(au));
      CHECK(od == L.reverse_turn(ad));
      // acute turns wrap their corner counterclockwise
      CHECK(L.turn_ccw(au));
      CHECK(L.turn_ccw(ad));
      CHECK_FALSE(L.turn_ccw(ou));
      CHECK_FALSE(L.turn_ccw(od));
    }
  }
}
