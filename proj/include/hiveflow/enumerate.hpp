#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hiveflow/residual.hpp"

namespace hiveflow {

// thrown when an enumeration exceeds its operation budget
struct budget_exceeded : std::runtime_error {
  budget_exceeded() : std::runtime_error("operation budget exceeded") {}
};

// Work and discovery tallies for one enumeration run.  ops counts fixed-cost
// work units (child steps, reachability probes, seeds, emissions, dequeues)
// so that delay measurements are deterministic for a given input.
struct EnumCounters {
  int64_t ops = 0;
  int64_t emissions = 0;
  int64_t findneigh_calls = 0;
  int64_t seeds_tried = 0;
  int64_t dedup_hits = 0;
  int64_t max_gap = 0; // widest ops span between consecutive novel flows
};

// Reads HIVEFLOW_OP_BUDGET; 0 or unset means unlimited.
int64_t op_budget_from_env();

// Depth-first completion of the seed turnpath through the residual digraph.
// Every closure of the path emits the combed cycle added to f, and every
// branch that cannot grow further emits the path completed by its shortest
// extension instead, so each call emits at least one polytope point.  All
// emissions are verified against the polytope and throw logic_error on a
// violation.  budget == 0 disables the ops ceiling; exceeding it throws
// runtime_error.
void find_neigh(const Lattice& L, const BorderSpec& b, const Residual& R, const FlowClass& f,
                const std::vector<int32_t>& seed,
                const std::function<void(const FlowClass&)>& emit, EnumCounters& ctr,
                int64_t budget = 0);

// All polytope neighbors of f (points reachable by adding one proper cycle),
// deduplicated, in discovery order: seeds are every extendable 3-turn path of
// the residual digraph in ascending turn order, each completed by find_neigh.
std::vector<FlowClass> neigh_gen(const Lattice& L, const BorderSpec& b, const FlowClass& f,
                                 EnumCounters& ctr, int64_t budget = 0);

// Breadth-first search over the polytope's lattice points from the canonical
// initial point.  Returns true as soon as threshold distinct points are seen;
// threshold < 1 is invalid.  on_discover, when set, receives each novel point
// and its 1-based discovery index.
bool lr_threshold(const Lattice& L, const BorderSpec& b, int64_t threshold,
                  EnumCounters* ctr = nullptr, int64_t budget = 0,
                  const std::function<void(const FlowClass&, int64_t)>& on_discover = {});

// Exhausts the same search and returns the exact number of lattice points.
int64_t lr_compute(const Lattice& L, const BorderSpec& b, EnumCounters* ctr = nullptr,
                   int64_t budget = 0,
                   const std::function<void(const FlowClass&, int64_t)>& on_discover = {});

// Convenience wrapper: builds the lattice for n = len(nu) (or n_override),
// returning 0 outright when the border sums or lengths rule the triple out.
// Throws invalid_argument on non-partitions or an n_override that is too
// small.
int64_t lr_compute(const Partition& lambda, const Partition& mu, const Partition& nu,
                   int n_override = 0, EnumCounters* ctr = nullptr, int64_t budget = 0);

// Coefficient of (M*lambda, M*mu, M*nu).
int64_t stretched_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                              int64_t M, EnumCounters* ctr = nullptr, int64_t budget = 0);

} // namespace hiveflow
