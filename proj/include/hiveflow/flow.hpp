#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiveflow/lattice.hpp"

namespace hiveflow {

// Integer flow classes on the honeycomb graph of the lattice, represented by
// their throughput vectors: one int64 per lattice edge, measured in the
// canonical (into-the-upright-triangle) direction.  Proper circulations of
// the underlying cubic graph quotient exactly onto these vectors, so no
// per-dart flow is ever stored.
//
// All arithmetic is overflow-checked; the engine is specified for border
// sizes up to |nu| <= 2^30, far below the guard, and throws
// std::overflow_error beyond int64 range.

using Partition = std::vector<int64_t>; // weakly decreasing, nonnegative

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

bool is_partition(const Partition& p);

// Border data: the fixed throughputs of the polytope P(lambda, mu, nu).
// Right side carries lambda top->bottom, bottom carries mu right->left, left
// carries -nu top->bottom.  `target` holds the required throughput for every
// border edge id (and 0 for interior ids, which are unconstrained).
struct BorderSpec {
  int n = 0;
  Partition lambda, mu, nu; // zero-padded to length n
  std::vector<int64_t> target;
  std::vector<uint8_t> is_border;
};

// Throws std::invalid_argument unless lambda, mu, nu are partitions that fit
// in n rows with |lambda| + |mu| = |nu|.
BorderSpec border_spec(const Lattice& L, Partition lambda, Partition mu, Partition nu);

struct FlowClass {
  int n = 0;
  std::vector<int64_t> delta; // indexed by edge id

  bool operator==(const FlowClass& o) const { return n == o.n && delta == o.delta; }
};

FlowClass zero_flow(const Lattice& L);

// plain sum of the three side throughputs vanishes on every triangle
bool is_conserved(const Lattice& L, const FlowClass& f);

// slack of f on a rhombus: delta(lr) - delta(ul).  Asserts agreement of all
// four equivalent expressions in debug builds.
int64_t slack(const Lattice& L, const FlowClass& f, const Rhombus& rh);

bool is_hive_flow(const Lattice& L, const FlowClass& f); // every slack >= 0
bool in_polytope(const Lattice& L, const BorderSpec& b, const FlowClass& f);

// ------------------------------------------------------------------ cycles
//
// A proper cycle of the honeycomb graph avoids the outer vertex, so it is a
// closed alternating walk through triangles; we store it as the cyclic
// sequence of turns it takes (turn = lattice turn id).  "Ordinary" means no
// triangle is passed twice; proper cycles correspond exactly to ordinary
// turn cycles.
struct ProperCycle {
  std::vector<int32_t> turns;
};

bool is_ordinary(const Lattice& L, const std::vector<int32_t>& turns);

// The flow induced by a turn cycle: every turn adds +1 to the throughput of
// its entry edge and -1 to that of its exit edge, each counted only when the
// turn sits in that edge's upright triangle.  For an ordinary cycle this is
// the characteristic flow of the proper cycle (+-1 along its edges).
FlowClass flow_from_turns(const Lattice& L, const std::vector<int32_t>& turns);

FlowClass add_flows(const Lattice& L, const FlowClass& f, const FlowClass& g);
FlowClass add_cycle(const Lattice& L, const FlowClass& f, const ProperCycle& c);

// ---------------------------------------------------- slack contributions
//
// Restricted to one rhombus, a cycle decomposes into at most two "passages":
// either a single turn through one of the rhombus's triangles that does not
// touch the diagonal, or a pair of consecutive turns crossing the diagonal.
// Each passage moves the slack by +1, -1 or 0:
//
//   +1:  ur->ul, ll->lr, ur->diag->lr, ll->diag->ul
//   -1:  ul->ur, lr->ll, ul->diag->ll, lr->diag->ur
//    0:  ul->diag->lr, ur->diag->ll, ll->diag->ur, lr->diag->ul
//
// which a single rule captures: value = [exit in {ul,lr}] - [entry in {ul,lr}].
struct SlackContribution {
  int32_t rhombus;
  int32_t first_turn, second_turn; // second_turn = -1 for single-turn passages
  int value;                       // +1, -1 or 0
};

// Sum of the cycle's passage values in rh, in {-2..2} for ordinary cycles.
// Appends the passages to *out when given.  Equals slack(rh) of the induced
// flow (exercised by the tests).
int cycle_slack_by_contributions(const Lattice& L, const std::vector<int32_t>& turns,
                                 const Rhombus& rh, std::vector<SlackContribution>* out = nullptr);

// A cycle preserves the hive inequalities around f when it uses no negative
// passage in any rhombus where f has slack 0 (then f + c stays in the cone,
// and f + eps*c does for real eps > 0 as well).
bool is_hive_preserving(const Lattice& L, const FlowClass& f, const std::vector<int32_t>& turns);

// Hive preserving, and in every rhombus with slack exactly 1 the cycle does
// not take both negative single turns (ul->ur together with lr->ll).  Secure
// cycles added to a lattice point of the polytope land in the polytope.
bool is_secure(const Lattice& L, const FlowClass& f, const std::vector<int32_t>& turns);

// ------------------------------------------------------------------- JSON
//
// {"n": <int>, "delta": [<int>, ...]} with delta in dense edge-id order
// (horizontal block, rising block, falling block; row-major inside each).
// The delta array doubles as the canonical dedup key of a flow class.
std::string to_json(const FlowClass& f);
std::optional<FlowClass> flow_from_json(const std::string& text);

} // namespace hiveflow
