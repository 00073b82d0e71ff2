#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hiveflow {

// Triangular lattice of side n together with every incidence table the flow
// machinery needs: edges, unit triangles, unit rhombi (pairs of triangles
// glued along a shared edge) and "turns" (entry-side/exit-side passages
// through a triangle).
//
// Coordinates.  Vertex (r,p): r = row counted from the bottom (0..n),
// p = position from the left within the row (0..n-r).  The apex is (n,0).
// Edges come in three families, named by their direction in a drawing with
// row r at height ~r and vertex (r,p) at abscissa p + r/2:
//
//   H(r,p) = {(r,p),(r,p+1)}    horizontal
//   R(r,p) = {(r,p),(r+1,p)}    rising '/'
//   F(r,p) = {(r+1,p),(r,p+1)}  falling '\'
//
// each existing for r in 0..n-1, p in 0..n-1-r.  The upright triangle U(r,p)
// has sides H(r,p), R(r,p), F(r,p); the downright triangle D(r,p) has sides
// H(r+1,p), F(r,p), R(r,p+1).
//
// Orientation convention (this fixes every sign downstream): the canonical
// direction of an edge points INTO its upright triangle, i.e. all three
// sides of an upright triangle point in, all three sides of a downright
// triangle point out.  Consequently an integer vector indexed by edges is a
// circulation of the surrounding cubic graph exactly when the plain sum of
// the three side values vanishes on every triangle, upright or downright.
//
// Edge ids are dense and block-ordered: all H edges (row-major), then all R,
// then all F.  This order is also the serialization order of flow vectors.

enum class EdgeKind : uint8_t { H = 0, R = 1, F = 2 };
enum class BorderSide : uint8_t { none = 0, right = 1, bottom = 2, left = 3 };

struct Edge {
  EdgeKind kind;
  int16_t r, p;
  int32_t v0, v1;       // endpoints; H: (r,p),(r,p+1)  R: (r,p),(r+1,p)  F: (r+1,p),(r,p+1)
  int32_t up_tri;       // the upright triangle U(r,p), always present
  int32_t down_tri;     // triangle on the other side, -1 on the border
  BorderSide side;
  int16_t border_index; // 1..n (see border_edge), 0 for interior edges
  int32_t diag_of;      // rhombus having this edge as its diagonal, -1 if none
};

struct Triangle {
  bool upright;
  int16_t r, p;
  // side edge ids in counterclockwise boundary order:
  //   upright:  H(r,p), F(r,p), R(r,p)
  //   downright: R(r,p+1), H(r+1,p), F(r,p)
  std::array<int32_t, 3> side;
  std::array<int32_t, 3> rhombi; // rhombi containing this triangle, -1 padded
};

// A rhombus is two triangles glued along its diagonal.  up_tri is always the
// upright one.  The four outer sides are stored by role: ul, ur in up_tri and
// ll, lr in down_tri, chosen so that {ul,lr} and {ur,ll} are the two parallel
// pairs.  The slack of a flow on the rhombus is delta(lr) - delta(ul), which
// conservation makes equal to delta(ur) - delta(ll).
struct Rhombus {
  uint8_t orient; // 0: diagonal horizontal, 1: diagonal falling, 2: diagonal rising
  int16_t r, p;
  int32_t diag;
  int32_t up_tri, down_tri;
  int32_t ul, ur, ll, lr;
};

// Turns are passages through one triangle: entry side -> exit side, six per
// triangle.  They are the vertices of the turn digraph; a turnedge links two
// turns in adjacent triangles when the exit side of the first is the entry
// side of the second.  Turn ids are tri*6 + k with k enumerating ordered
// slot pairs (0,1),(0,2),(1,0),(1,2),(2,0),(2,1) over the triangle's side
// array.
struct Lattice {
  explicit Lattice(int n);

  int n;
  int32_t nvert, nedge, ntri, nrhombi, nturn;

  std::vector<Edge> edges;
  std::vector<Triangle> tris;
  std::vector<Rhombus> rhombi;

  // --- id arithmetic -------------------------------------------------------
  int32_t vertex_id(int r, int p) const { return row_start_[r] + p; }
  int32_t eh(int r, int p) const { return blk_[r] + p; }
  int32_t er(int r, int p) const { return m1_ + blk_[r] + p; }
  int32_t ef(int r, int p) const { return 2 * m1_ + blk_[r] + p; }
  int32_t ut(int r, int p) const { return blk_[r] + p; }        // upright triangle
  int32_t dt(int r, int p) const { return m1_ + dblk_[r] + p; } // downright triangle

  // --- borders -------------------------------------------------------------
  // border_edge(right, i):  F(n-i, i-1), i-th from the top, carries lambda_i
  // border_edge(bottom, i): H(0, n-i),   i-th from the right, carries mu_i
  // border_edge(left, i):   R(n-i, 0),   i-th from the top, carries -nu_i
  int32_t border_edge(BorderSide side, int i) const;

  // --- turns ---------------------------------------------------------------
  int32_t tri_of_turn(int32_t t) const { return t / 6; }
  int entry_slot(int32_t t) const { return slot_pair_[t % 6][0]; }
  int exit_slot(int32_t t) const { return slot_pair_[t % 6][1]; }
  int32_t entry_edge(int32_t t) const { return tris[t / 6].side[entry_slot(t)]; }
  int32_t exit_edge(int32_t t) const { return tris[t / 6].side[exit_slot(t)]; }
  // counterclockwise exactly when the exit side precedes the entry side in
  // the triangle's ccw boundary order
  bool turn_ccw(int32_t t) const { return exit_slot(t) == (entry_slot(t) + 2) % 3; }
  int32_t reverse_turn(int32_t t) const { return turn_id(t / 6, exit_slot(t), entry_slot(t)); }

  int32_t turn_id(int tri, int entry, int exit) const {
    return tri * 6 + entry * 2 + (exit > entry ? exit - 1 : exit);
  }
  // turn through `tri` entering via edge e_in and exiting via e_out, -1 if
  // either edge is not a side of the triangle
  int32_t turn_between(int tri, int32_t e_in, int32_t e_out) const;

  // out/in adjacency of the (unrestricted) turn digraph; -1 padded, targets
  // in ascending id order
  const std::array<int32_t, 2>& turn_out(int32_t t) const { return out_[t]; }
  const std::array<int32_t, 2>& turn_in(int32_t t) const { return in_[t]; }

  // --- rhombus/turn interplay ----------------------------------------------
  // the four single-turn patterns of a rhombus (see flow.hpp for their slack
  // contributions): acute turns wrap an acute corner counterclockwise
  int32_t acute_turn_up(const Rhombus& rh) const;   // ul -> ur, contribution -1
  int32_t acute_turn_down(const Rhombus& rh) const; // lr -> ll, contribution -1
  int32_t obtuse_turn_up(const Rhombus& rh) const;  // ur -> ul, contribution +1
  int32_t obtuse_turn_down(const Rhombus& rh) const;// ll -> lr, contribution +1

  int slot_of(int tri, int32_t edge) const;

 private:
  int32_t m1_; // edges per family = n(n+1)/2
  std::vector<int32_t> row_start_, blk_, dblk_;
  std::vector<std::array<int32_t, 2>> out_, in_;
  static constexpr int slot_pair_[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
};

} // namespace hiveflow
