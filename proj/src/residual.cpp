#include "hiveflow/residual.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hiveflow {

Residual::Residual(const Lattice& L_, const BorderSpec& b, const FlowClass& f_)
    : L(&L_), f(&f_) {
  if (!in_polytope(L_, b, f_))
    throw std::invalid_argument("residual digraph requires a lattice point of the polytope");
  sigma.resize(L->rhombi.size());
  turn_alive.assign(L->nturn, 1);
  edge_cut.assign(L->nturn, 0);
  auto cut = [&](int32_t from, int32_t to) {
    const auto& out = L->turn_out(from);
    for (int k = 0; k < 2; ++k)
      if (out[k] == to) {
        edge_cut[from] |= (uint8_t)(1 << k);
        ++removed_edges;
        return;
      }
    assert(false && "cut of a nonexistent turnedge");
  };
  for (size_t i = 0; i < L->rhombi.size(); ++i) {
    const Rhombus& rh = L->rhombi[i];
    sigma[i] = slack(*L, *f, rh);
    if (sigma[i] != 0) continue;
    turn_alive[L->acute_turn_up(rh)] = 0;
    turn_alive[L->acute_turn_down(rh)] = 0;
    removed_turns += 2;
    // negative diagonal crossings: ul -> diag -> ll and lr -> diag -> ur
    cut(L->turn_between(rh.up_tri, rh.ul, rh.diag),
        L->turn_between(rh.down_tri, rh.diag, rh.ll));
    cut(L->turn_between(rh.down_tri, rh.lr, rh.diag),
        L->turn_between(rh.up_tri, rh.diag, rh.ur));
  }
}

PathState::PathState(const Residual& R_) : R(&R_) {
  tri_used.assign(R->L->ntri, 0);
  rho_blocked.assign(R->L->rhombi.size(), 0);
}

void PathState::push(int32_t t) {
  const Lattice& L = *R->L;
  assert(R->turn_alive[t]);
  int tri = L.tri_of_turn(t);
  assert(!tri_used[tri]);
  tri_used[tri] = 1;
  for (int32_t rhid : L.tris[tri].rhombi) {
    if (rhid < 0 || R->sigma[rhid] != 1) continue;
    const Rhombus& rh = L.rhombi[rhid];
    if (t == L.acute_turn_up(rh) || t == L.acute_turn_down(rh)) {
      ++rho_blocked[rhid];
      // both acute turns of one slack-1 rhombus would make the path insecure;
      // the restriction rules out ever reaching the second one
      assert(rho_blocked[rhid] == 1);
    }
  }
  turns.push_back(t);
}

void PathState::pop() {
  const Lattice& L = *R->L;
  int32_t t = turns.back();
  turns.pop_back();
  int tri = L.tri_of_turn(t);
  tri_used[tri] = 0;
  for (int32_t rhid : L.tris[tri].rhombi) {
    if (rhid < 0 || R->sigma[rhid] != 1) continue;
    const Rhombus& rh = L.rhombi[rhid];
    if (t == L.acute_turn_up(rh) || t == L.acute_turn_down(rh)) --rho_blocked[rhid];
  }
}

bool PathState::alive(int32_t t) const {
  if (!R->turn_alive[t]) return false;
  if (turns.empty()) return true;
  if (t == start() || t == end()) return true;
  const Lattice& L = *R->L;
  int tri = L.tri_of_turn(t);
  if (tri_used[tri]) return false;
  for (int32_t rhid : L.tris[tri].rhombi)
    if (rhid >= 0 && rho_blocked[rhid]) return false;
  return true;
}

// breadth-first search from p's end to p's start through the restriction;
// when `pred` is given the frontier is kept id-sorted so the predecessor
// chain is deterministic, and the discovered interior sequence is returned
// through it
static bool bfs_to_start(const PathState& p, std::vector<int32_t>* interior) {
  const Residual& R = *p.R;
  const Lattice& L = *R.L;
  int32_t src = p.end(), dst = p.start();
  if (src == dst) {
    if (interior) interior->clear();
    return true;
  }
  std::vector<int32_t> pred(L.nturn, -2); // -2 unvisited, -1 source
  pred[src] = -1;
  std::vector<int32_t> frontier{src};
  while (!frontier.empty()) {
    if (interior) std::sort(frontier.begin(), frontier.end());
    std::vector<int32_t> next;
    for (int32_t u : frontier)
      for (int slot = 0; slot < 2; ++slot) {
        if (!R.edge_alive(u, slot)) continue;
        int32_t v = L.turn_out(u)[slot];
        if (pred[v] != -2 || !p.alive(v)) continue;
        pred[v] = u;
        if (v == dst) {
          if (interior) {
            interior->clear();
            for (int32_t w = pred[dst]; w != src; w = pred[w]) interior->push_back(w);
            std::reverse(interior->begin(), interior->end());
          }
          return true;
        }
        next.push_back(v);
      }
    frontier.swap(next);
  }
  return false;
}

bool is_extendable(const PathState& p) { return bfs_to_start(p, nullptr); }

ExtensionStats& extension_stats() {
  static ExtensionStats s;
  return s;
}

// structural screening of a shortest completion q (full sequence, endpoints
// included); see header
static void check_extension(const Lattice& L, const std::vector<int32_t>& q) {
  ExtensionStats& st = extension_stats();
  ++st.extensions;

  std::vector<uint8_t> used(L.nturn, 0);
  for (int32_t t : q) used[t] = 1;
  for (int32_t t : q)
    if (used[L.reverse_turn(t)]) {
      ++st.reverse_violations;
      break;
    }

  std::vector<int32_t> special;
  for (size_t rhid = 0; rhid < L.rhombi.size(); ++rhid) {
    const Rhombus& rh = L.rhombi[rhid];
    // collect crossings of this diagonal (pairs of consecutive turns, as
    // entry-side/exit-side pairs) and any other use of the rhombus
    std::vector<std::pair<int32_t, int32_t>> crossings;
    int uses = 0;
    for (size_t i = 0; i < q.size(); ++i) {
      int tri = L.tri_of_turn(q[i]);
      if (tri != rh.up_tri && tri != rh.down_tri) continue;
      ++uses;
      if (L.exit_edge(q[i]) == rh.diag && i + 1 < q.size())
        crossings.emplace_back(L.entry_edge(q[i]), L.exit_edge(q[i + 1]));
    }
    if (crossings.size() < 2) continue;
    special.push_back((int32_t)rhid);
    // exactly two crossings (4 turns, nothing else of the rhombus used), and
    // they form one of the two legal patterns: ul->lr with ur->ll, or
    // ul->lr with ll->ur
    bool shape_ok = false;
    if (crossings.size() == 2 && uses == 4) {
      auto has = [&](int32_t a, int32_t b) {
        return (crossings[0] == std::pair{a, b}) || (crossings[1] == std::pair{a, b});
      };
      bool ul_lr = has(rh.ul, rh.lr);
      shape_ok = ul_lr && (has(rh.ur, rh.ll) || has(rh.ll, rh.ur));
    }
    if (!shape_ok) ++st.special_violations;
  }
  for (size_t i = 0; i < special.size(); ++i)
    for (size_t j = i + 1; j < special.size(); ++j) {
      const Rhombus&a = L.rhombi[special[i]], &b = L.rhombi[special[j]];
      if (a.up_tri == b.up_tri || a.up_tri == b.down_tri || a.down_tri == b.up_tri ||
          a.down_tri == b.down_tri)
        ++st.overlap_violations;
    }
}

std::optional<std::vector<int32_t>> shortest_extension(const PathState& p) {
  std::vector<int32_t> interior;
  if (!bfs_to_start(p, &interior)) return std::nullopt;
  std::vector<int32_t> full;
  full.reserve(interior.size() + 2);
  full.push_back(p.end());
  full.insert(full.end(), interior.begin(), interior.end());
  if (p.start() != p.end()) full.push_back(p.start());
  check_extension(*p.R->L, full);
  return interior;
}

FlowClass comb(const Lattice& L, const std::vector<int32_t>& turncycle) {
  FlowClass g = flow_from_turns(L, turncycle);
#ifndef NDEBUG
  assert(is_conserved(L, g));
  for (const Edge& e : L.edges)
    if (e.side != BorderSide::none) assert(g.delta[&e - L.edges.data()] == 0);
#endif
  return g;
}

int turncycle_slack(const Lattice& L, const std::vector<int32_t>& turncycle, const Rhombus& rh) {
  int s = 0;
  auto aval = [&](int32_t e) { return (e == rh.ul || e == rh.lr) ? 1 : 0; };
  for (int32_t t : turncycle) {
    int tri = L.tri_of_turn(t);
    if (tri != rh.up_tri && tri != rh.down_tri) continue;
    s += aval(L.exit_edge(t)) - aval(L.entry_edge(t));
  }
  assert(s >= -4 && s <= 4);
  return s;
}

} // namespace hiveflow
