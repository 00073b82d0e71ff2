#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hiveflow/flow.hpp"

namespace hiveflow {

// Hive labellings, feasibility, and the two independent counting oracles the
// flow engine is validated against.
//
// A hive assigns an integer to every lattice vertex in the standard
// orientation: apex 0, left border accumulating lambda top->bottom, bottom
// border accumulating mu left->right starting at |lambda|, right border
// accumulating nu top->bottom, and for every rhombus
//     sum over diagonal (obtuse) corners >= sum over the other two corners.
// Integer hives with that boundary are counted by the LR coefficient.
//
// The bridge to flows is an index mirror plus a gradient: with
// h(r,p) = |nu| - label(r, n-r-p), the flow has
//     delta(H(r,p)) = h(r,p+1) - h(r,p)
//     delta(R(r,p)) = h(r,p)   - h(r+1,p)
//     delta(F(r,p)) = h(r+1,p) - h(r,p+1)
// and the slack of the flow on a rhombus equals the obtuse-minus-acute
// surplus of the hive on the mirrored rhombus.
struct Hive {
  int n = 0;
  std::vector<int64_t> label; // indexed by lattice vertex id
};

bool is_valid_hive(const Lattice& L, const BorderSpec& b, const Hive& h);

FlowClass hive_to_flow(const Lattice& L, const Hive& h);
Hive flow_to_hive(const Lattice& L, const FlowClass& f); // anchors the apex at 0

// obtuse and acute corner vertex ids of a rhombus
struct RhombusCorners { int32_t ob0, ob1, ac0, ac1; };
RhombusCorners rhombus_corners(const Lattice& L, const Rhombus& rh);

// First lattice point of the polytope, or nullopt exactly when the polytope
// has no lattice point.  Deterministic: depth-first assignment of interior
// hive labels in row-major order, candidate intervals propagated from the
// rhombi completed by each assignment, ascending value order.
std::optional<FlowClass> initial_hive_flow(const Lattice& L, const BorderSpec& b);

// ---------------------------------------------------------------- oracle 1
//
// Littlewood-Richardson rule: counts column-strict skew tableaux of shape
// nu/lambda with content mu whose reverse reading word is a lattice word.
// Independent of the lattice machinery.  Returns 0 when the shapes are
// incompatible (|nu| != |lambda|+|mu| or lambda not contained in nu).
int64_t lr_rule_count(const Partition& lambda, const Partition& mu, const Partition& nu);

struct SkewTableau {
  Partition outer, inner;
  std::vector<std::vector<int>> rows; // row r holds entries for columns inner[r]..outer[r]-1
};
// the tableaux behind lr_rule_count, in backtracking order (at most `limit`)
std::vector<SkewTableau> lr_rule_tableaux(const Partition& lambda, const Partition& mu,
                                          const Partition& nu, size_t limit);

// ---------------------------------------------------------------- oracle 2
//
// Exhaustive integer-hive enumeration.  Interior labels are assigned in a
// static smallest-domain-first order (domains pre-narrowed to a fixpoint by
// interval propagation over the rhombus inequalities); every rhombus is
// enforced once its last label is placed.  Throws std::runtime_error when a
// narrowed domain is wider than `width_cap` rather than risk a runaway
// search.
struct BruteOptions {
  int64_t width_cap = 1 << 20;
};
int64_t hive_count_bruteforce(const Lattice& L, const BorderSpec& b, BruteOptions opts = {});

// every lattice point of the polytope, as flows (same search as the counter)
std::vector<FlowClass> enumerate_hive_flows(const Lattice& L, const BorderSpec& b,
                                            BruteOptions opts = {});

// a hive with the given border chosen by a randomized depth-first search
// (first hit; not uniform), for bridge round-trip tests
std::optional<Hive> random_hive(const Lattice& L, const BorderSpec& b, std::mt19937& rng);

// ------------------------------------------------------- cycle brute force
//
// All ordinary turn cycles of the lattice (each cycle listed once, rotated
// to start at its smallest turn id; a cycle and its reversal are distinct).
// Exponential in general; intended for n <= 3.
std::vector<ProperCycle> all_proper_cycles(const Lattice& L);

// Neighborhood ground truth: { f + flow(c) : c proper cycle } intersected
// with the polytope's lattice points, sorted by delta vector.
std::vector<FlowClass> bruteforce_neighbors(const Lattice& L, const BorderSpec& b,
                                            const FlowClass& f);

// ----------------------------------------------------------------- report

// all partitions with at most max_parts parts and sum at most max_sum,
// largest first part first, the empty partition leading
std::vector<Partition> partitions_upto(int max_parts, int64_t max_sum);

// every triple with |lambda| + |mu| = |nu|, 0 < |nu| <= max_norm, and all
// three partitions from partitions_upto(max_parts, max_norm), in a fixed
// order (nu outermost, then lambda, then mu)
void for_each_triple(int max_parts, int64_t max_norm,
                     const std::function<void(const Partition&, const Partition&,
                                              const Partition&)>& fn);

std::string sweep_csv_header();
std::string sweep_csv_row(const Partition& lambda, const Partition& mu, const Partition& nu,
                          int64_t lr, int64_t hive, int64_t flow);

} // namespace hiveflow
