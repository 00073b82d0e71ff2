#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hiveflow/flow.hpp"

namespace hiveflow {

// Residual turn digraph of a lattice point f of the polytope.  Starting from
// the full turn digraph of the lattice, for every rhombus with f-slack 0 the
// two negative single turns (ul->ur and lr->ll) are deleted and the two
// negative diagonal crossings (ul->diag->ll and lr->diag->ur) are cut as
// turnedges.  Turn cycles of the remaining digraph can only raise the slack
// of flat rhombi, so adding them to f preserves the hive inequalities.
//
// The digraph is stored as masks over the lattice's immutable adjacency; it
// is never copied per path.
struct Residual {
  Residual(const Lattice& L, const BorderSpec& b, const FlowClass& f);

  const Lattice* L;
  const FlowClass* f;
  std::vector<int64_t> sigma;      // f-slack per rhombus
  std::vector<uint8_t> turn_alive; // per turn id
  std::vector<uint8_t> edge_cut;   // per turn id, bit k = out-slot k removed
  int32_t removed_turns = 0;       // deletions counted with multiplicity:
  int32_t removed_edges = 0;       // exactly 2 + 2 per flat rhombus

  bool edge_alive(int32_t from, int slot) const {
    int32_t to = L->turn_out(from)[slot];
    return to >= 0 && turn_alive[from] && turn_alive[to] && !(edge_cut[from] & (1 << slot));
  }
};

// A growing turnpath p through the residual digraph together with the view
// of the digraph restricted around it: turns in triangles p has used are
// removed (so any completion keeps the combined cycle ordinary), and when p
// takes a negative single turn in a rhombus of slack 1 every turn of that
// rhombus's two triangles is removed (so any completion keeps the cycle
// secure).  The path's own first and last turns stay alive as entry/exit
// points.  push/pop maintain the bookkeeping in O(1).
struct PathState {
  explicit PathState(const Residual& R);

  void push(int32_t t);
  void pop();
  int32_t start() const { return turns.front(); }
  int32_t end() const { return turns.back(); }

  // alive in the restricted digraph
  bool alive(int32_t t) const;

  const Residual* R;
  std::vector<int32_t> turns;
  std::vector<uint8_t> tri_used;    // per triangle
  std::vector<uint8_t> rho_blocked; // per rhombus: acute turns taken at slack 1
};

// Completions from the end of p back to its start through the restricted
// digraph.  A closed path (start == end) is trivially extendable.
bool is_extendable(const PathState& p);

// Breadth-first shortest completion, deterministic: every frontier is
// expanded in ascending turn-id order, so of all minimum-length completions
// the one with lexicographically smallest predecessor chain wins.  Returns
// the interior turn sequence (between p's end and p's start), or nullopt if
// none exists.
//
// Every returned completion is screened against two structural properties of
// shortest completions (violations are counted, never repaired):
//   - no turn together with its reverse,
//   - a rhombus whose diagonal is crossed twice is crossed by exactly one of
//     the two legal double-crossing patterns (both crossings leaving the
//     {ul, lr} sides in the same rotational sense, or the opposed pair),
//     with no further turn of the rhombus used, and two such rhombi never
//     share a triangle.
std::optional<std::vector<int32_t>> shortest_extension(const PathState& p);

struct ExtensionStats {
  uint64_t extensions = 0;
  uint64_t reverse_violations = 0;
  uint64_t special_violations = 0;
  uint64_t overlap_violations = 0;
};
ExtensionStats& extension_stats(); // process-wide tallies, reset by tests

// The flow induced by a turn cycle (per-turn +1 on the entry edge / -1 on
// the exit edge, counted in the edge's upright triangle).  Debug builds
// assert conservation and zero border throughput.
FlowClass comb(const Lattice& L, const std::vector<int32_t>& turncycle);

// Slack movement of a turn cycle on one rhombus, computed per turn without
// forming the induced flow; agrees with slack(rh) of comb(...) and lies in
// [-4, 4] for any turn cycle.
int turncycle_slack(const Lattice& L, const std::vector<int32_t>& turncycle, const Rhombus& rh);

} // namespace hiveflow
