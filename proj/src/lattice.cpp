#include "hiveflow/lattice.hpp"

#include <cassert>
#include <stdexcept>

namespace hiveflow {

Lattice::Lattice(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("lattice side must be >= 1");

  nvert = (n + 1) * (n + 2) / 2;
  m1_ = n * (n + 1) / 2;
  nedge = 3 * m1_;
  ntri = n * n;
  nrhombi = 3 * n * (n - 1) / 2;
  nturn = 6 * ntri;

  row_start_.resize(n + 2);
  for (int r = 0; r <= n + 1; ++r) row_start_[r] = r * (n + 1) - r * (r - 1) / 2;
  blk_.resize(n + 1);
  for (int r = 0; r <= n; ++r) blk_[r] = r * n - r * (r - 1) / 2;
  dblk_.resize(n > 1 ? n : 1);
  for (int r = 0; r < (n > 1 ? n : 1); ++r) dblk_[r] = r * (n - 1) - r * (r - 1) / 2;

  edges.resize(nedge);
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < n - r; ++p) {
      {
        Edge& e = edges[eh(r, p)];
        e.kind = EdgeKind::H;
        e.r = (int16_t)r; e.p = (int16_t)p;
        e.v0 = vertex_id(r, p); e.v1 = vertex_id(r, p + 1);
        e.up_tri = ut(r, p);
        e.down_tri = r >= 1 ? dt(r - 1, p) : -1;
        e.side = r == 0 ? BorderSide::bottom : BorderSide::none;
        e.border_index = r == 0 ? (int16_t)(n - p) : 0;
        e.diag_of = -1;
      }
      {
        Edge& e = edges[er(r, p)];
        e.kind = EdgeKind::R;
        e.r = (int16_t)r; e.p = (int16_t)p;
        e.v0 = vertex_id(r, p); e.v1 = vertex_id(r + 1, p);
        e.up_tri = ut(r, p);
        e.down_tri = p >= 1 ? dt(r, p - 1) : -1;
        e.side = p == 0 ? BorderSide::left : BorderSide::none;
        e.border_index = p == 0 ? (int16_t)(n - r) : 0;
        e.diag_of = -1;
      }
      {
        Edge& e = edges[ef(r, p)];
        e.kind = EdgeKind::F;
        e.r = (int16_t)r; e.p = (int16_t)p;
        e.v0 = vertex_id(r + 1, p); e.v1 = vertex_id(r, p + 1);
        e.up_tri = ut(r, p);
        e.down_tri = p <= n - 2 - r ? dt(r, p) : -1;
        e.side = p == n - 1 - r ? BorderSide::right : BorderSide::none;
        e.border_index = p == n - 1 - r ? (int16_t)(n - r) : 0;
        e.diag_of = -1;
      }
    }

  tris.resize(ntri);
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < n - r; ++p) {
      Triangle& t = tris[ut(r, p)];
      t.upright = true;
      t.r = (int16_t)r; t.p = (int16_t)p;
      t.side = {eh(r, p), ef(r, p), er(r, p)};
      t.rhombi = {-1, -1, -1};
    }
  for (int r = 0; r < n - 1; ++r)
    for (int p = 0; p < n - 1 - r; ++p) {
      Triangle& t = tris[dt(r, p)];
      t.upright = false;
      t.r = (int16_t)r; t.p = (int16_t)p;
      t.side = {er(r, p + 1), eh(r + 1, p), ef(r, p)};
      t.rhombi = {-1, -1, -1};
    }

  rhombi.reserve(nrhombi);
  auto attach = [&](int32_t tri, int32_t rh) {
    auto& lst = tris[tri].rhombi;
    for (auto& x : lst)
      if (x == -1) { x = rh; return; }
    assert(false && "triangle in more than three rhombi");
  };
  auto add_rh = [&](uint8_t orient, int r, int p, int32_t diag, int32_t up, int32_t down,
                    int32_t ul, int32_t ur, int32_t ll, int32_t lr) {
    int32_t id = (int32_t)rhombi.size();
    rhombi.push_back(Rhombus{orient, (int16_t)r, (int16_t)p, diag, up, down, ul, ur, ll, lr});
    edges[diag].diag_of = id;
    attach(up, id);
    attach(down, id);
  };
  for (int r = 1; r < n; ++r)
    for (int p = 0; p < n - r; ++p)
      add_rh(0, r, p, eh(r, p), ut(r, p), dt(r - 1, p),
             er(r, p), ef(r, p), ef(r - 1, p), er(r - 1, p + 1));
  for (int r = 0; r < n - 1; ++r)
    for (int p = 0; p < n - 1 - r; ++p)
      add_rh(1, r, p, ef(r, p), ut(r, p), dt(r, p),
             eh(r, p), er(r, p), er(r, p + 1), eh(r + 1, p));
  for (int r = 0; r < n - 1; ++r)
    for (int p = 0; p < n - 1 - r; ++p)
      add_rh(2, r, p, er(r, p + 1), ut(r, p + 1), dt(r, p),
             ef(r, p + 1), eh(r, p + 1), eh(r + 1, p), ef(r, p));
  assert((int32_t)rhombi.size() == nrhombi);

  // turn digraph adjacency
  out_.assign(nturn, {-1, -1});
  in_.assign(nturn, {-1, -1});
  for (int32_t t = 0; t < nturn; ++t) {
    int tri = t / 6;
    int32_t eout = exit_edge(t);
    const Edge& e = edges[eout];
    int32_t t2 = e.up_tri == tri ? e.down_tri : e.up_tri;
    if (t2 < 0) continue;
    int s = slot_of(t2, eout);
    int32_t a = turn_id(t2, s, (s + 1) % 3);
    int32_t b = turn_id(t2, s, (s + 2) % 3);
    out_[t] = {a < b ? a : b, a < b ? b : a};
  }
  for (int32_t t = 0; t < nturn; ++t) {
    int tri = t / 6;
    int32_t ein = entry_edge(t);
    const Edge& e = edges[ein];
    int32_t t0 = e.up_tri == tri ? e.down_tri : e.up_tri;
    if (t0 < 0) continue;
    int s = slot_of(t0, ein);
    int32_t a = turn_id(t0, (s + 1) % 3, s);
    int32_t b = turn_id(t0, (s + 2) % 3, s);
    in_[t] = {a < b ? a : b, a < b ? b : a};
  }
}

int32_t Lattice::border_edge(BorderSide side, int i) const {
  if (i < 1 || i > n) throw std::out_of_range("border index out of range");
  switch (side) {
    case BorderSide::right: return ef(n - i, i - 1);
    case BorderSide::bottom: return eh(0, n - i);
    case BorderSide::left: return er(n - i, 0);
    default: throw std::invalid_argument("not a border side");
  }
}

int Lattice::slot_of(int tri, int32_t edge) const {
  const auto& s = tris[tri].side;
  for (int k = 0; k < 3; ++k)
    if (s[k] == edge) return k;
  return -1;
}

int32_t Lattice::turn_between(int tri, int32_t e_in, int32_t e_out) const {
  int a = slot_of(tri, e_in), b = slot_of(tri, e_out);
  if (a < 0 || b < 0 || a == b) return -1;
  return turn_id(tri, a, b);
}

int32_t Lattice::acute_turn_up(const Rhombus& rh) const {
  return turn_between(rh.up_tri, rh.ul, rh.ur);
}
int32_t Lattice::acute_turn_down(const Rhombus& rh) const {
  return turn_between(rh.down_tri, rh.lr, rh.ll);
}
int32_t Lattice::obtuse_turn_up(const Rhombus& rh) const {
  return turn_between(rh.up_tri, rh.ur, rh.ul);
}
int32_t Lattice::obtuse_turn_down(const Rhombus& rh) const {
  return turn_between(rh.down_tri, rh.ll, rh.lr);
}

} // namespace hiveflow
