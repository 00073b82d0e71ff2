#include "hiveflow/enumerate.hpp"

#include <cassert>
#include <cerrno>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

#include "hiveflow/oracles.hpp"

namespace hiveflow {

int64_t op_budget_from_env() {
  const char* s = std::getenv("HIVEFLOW_OP_BUDGET");
  if (!s || !*s) return 0;
  char* end = nullptr;
  errno = 0;
  long long v = std::strtoll(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0' || v < 0)
    throw std::invalid_argument("HIVEFLOW_OP_BUDGET must be a nonnegative integer");
  return (int64_t)v;
}

static void charge(EnumCounters& ctr, int64_t budget, int64_t units) {
  ctr.ops += units;
  if (budget > 0 && ctr.ops > budget) throw budget_exceeded();
}

void find_neigh(const Lattice& L, const BorderSpec& b, const Residual& R, const FlowClass& f,
                const std::vector<int32_t>& seed,
                const std::function<void(const FlowClass&)>& emit, EnumCounters& ctr,
                int64_t budget) {
  assert(!seed.empty());
  ++ctr.findneigh_calls;
  PathState P(R);
  for (int32_t t : seed) P.push(t);
  assert(is_extendable(P));

  auto verified_emit = [&](const std::vector<int32_t>& cyc) {
    charge(ctr, budget, 1);
    ++ctr.emissions;
    FlowClass g = add_flows(L, f, comb(L, cyc));
    if (!in_polytope(L, b, g)) throw std::logic_error("neighborhood emission left the polytope");
    emit(g);
  };

  // Depth-first over completions of the seed.  A frame owns the turn pushed
  // when it was created (the root owns the seed) and emits the shortest
  // completion of the current path when neither child could be entered.
  struct Frame {
    int slot = 0;
    bool pushed = false;
  };
  std::vector<Frame> st;
  st.push_back({});
  while (!st.empty()) {
    size_t fi = st.size() - 1;
    if (st[fi].slot < 2) {
      int slot = st[fi].slot++;
      int32_t z = L.turn_out(P.end())[slot];
      if (z < 0) continue;
      charge(ctr, budget, 1);
      if (!R.edge_alive(P.end(), slot)) continue;
      if (z == P.start()) {
        verified_emit(P.turns);
        continue;
      }
      if (!P.alive(z)) continue;
      P.push(z);
      charge(ctr, budget, L.nturn);
      if (is_extendable(P)) {
        st[fi].pushed = true;
        st.push_back({});
      } else {
        P.pop();
      }
      continue;
    }
    if (!st[fi].pushed) {
      charge(ctr, budget, 2 * L.nturn);
      std::optional<std::vector<int32_t>> q = shortest_extension(P);
      assert(q.has_value()); // every frame starts from an extendable path
      std::vector<int32_t> cyc = P.turns;
      cyc.insert(cyc.end(), q->begin(), q->end());
      verified_emit(cyc);
    }
    st.pop_back();
    if (!st.empty()) P.pop();
  }
}

std::vector<FlowClass> neigh_gen(const Lattice& L, const BorderSpec& b, const FlowClass& f,
                                 EnumCounters& ctr, int64_t budget) {
  Residual R(L, b, f);
  std::vector<FlowClass> out;
  std::set<std::vector<int64_t>> seen;
  seen.insert(f.delta);
  auto dedup = [&](const FlowClass& g) {
    if (seen.insert(g.delta).second)
      out.push_back(g);
    else
      ++ctr.dedup_hits;
  };
  for (int32_t t1 = 0; t1 < L.nturn; ++t1) {
    for (int s1 = 0; s1 < 2; ++s1) {
      if (!R.edge_alive(t1, s1)) continue;
      int32_t t2 = L.turn_out(t1)[s1];
      for (int s2 = 0; s2 < 2; ++s2) {
        if (!R.edge_alive(t2, s2)) continue;
        int32_t t3 = L.turn_out(t2)[s2];
        charge(ctr, budget, 1);
        ++ctr.seeds_tried;
        PathState P(R);
        P.push(t1);
        P.push(t2);
        P.push(t3);
        charge(ctr, budget, L.nturn);
        if (!is_extendable(P)) continue;
        find_neigh(L, b, R, f, {t1, t2, t3}, dedup, ctr, budget);
      }
    }
  }
  return out;
}

static int64_t bfs_core(const Lattice& L, const BorderSpec& b, int64_t threshold,
                        EnumCounters& ctr, int64_t budget,
                        const std::function<void(const FlowClass&, int64_t)>& on_discover) {
  std::optional<FlowClass> f0 = initial_hive_flow(L, b);
  if (!f0) return 0;
  std::set<std::vector<int64_t>> seen;
  std::deque<FlowClass> queue;
  int64_t last_novel_ops = ctr.ops;
  auto novel = [&](const FlowClass& g) {
    if (!seen.insert(g.delta).second) {
      ++ctr.dedup_hits;
      return false;
    }
    if (ctr.ops - last_novel_ops > ctr.max_gap) ctr.max_gap = ctr.ops - last_novel_ops;
    last_novel_ops = ctr.ops;
    queue.push_back(g);
    if (on_discover) on_discover(g, (int64_t)seen.size());
    return true;
  };
  novel(*f0);
  if (threshold > 0 && (int64_t)seen.size() >= threshold) return (int64_t)seen.size();
  while (!queue.empty()) {
    FlowClass f = std::move(queue.front());
    queue.pop_front();
    charge(ctr, budget, 1);
    for (const FlowClass& g : neigh_gen(L, b, f, ctr, budget))
      if (novel(g) && threshold > 0 && (int64_t)seen.size() >= threshold)
        return (int64_t)seen.size();
  }
  return (int64_t)seen.size();
}

bool lr_threshold(const Lattice& L, const BorderSpec& b, int64_t threshold, EnumCounters* ctr,
                  int64_t budget, const std::function<void(const FlowClass&, int64_t)>& on_discover) {
  if (threshold < 1) throw std::invalid_argument("threshold must be at least 1");
  EnumCounters local;
  return bfs_core(L, b, threshold, ctr ? *ctr : local, budget, on_discover) >= threshold;
}

int64_t lr_compute(const Lattice& L, const BorderSpec& b, EnumCounters* ctr, int64_t budget,
                   const std::function<void(const FlowClass&, int64_t)>& on_discover) {
  EnumCounters local;
  return bfs_core(L, b, 0, ctr ? *ctr : local, budget, on_discover);
}

static Partition strip_zeros(const Partition& p) {
  Partition q(p);
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

int64_t lr_compute(const Partition& lambda, const Partition& mu, const Partition& nu,
                   int n_override, EnumCounters* ctr, int64_t budget) {
  for (const Partition* p : {&lambda, &mu, &nu})
    if (!is_partition(*p)) throw std::invalid_argument("inputs must be partitions");
  Partition l = strip_zeros(lambda), m = strip_zeros(mu), v = strip_zeros(nu);
  int64_t sl = 0, sm = 0, sv = 0;
  for (auto x : l) sl = checked_add(sl, x);
  for (auto x : m) sm = checked_add(sm, x);
  for (auto x : v) sv = checked_add(sv, x);
  if (checked_add(sl, sm) != sv) return 0;
  if (l.size() > v.size() || m.size() > v.size()) return 0;
  int n = n_override > 0 ? n_override : (int)v.size();
  if (n == 0) return 1; // all three partitions empty
  if (n < (int)v.size()) throw std::invalid_argument("n is smaller than the partition lengths");
  Lattice L(n);
  BorderSpec b = border_spec(L, l, m, v);
  return lr_compute(L, b, ctr, budget, {});
}

int64_t stretched_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                              int64_t M, EnumCounters* ctr, int64_t budget) {
  if (M < 1) throw std::invalid_argument("stretch factor must be at least 1");
  auto scale = [&](const Partition& p) {
    Partition q(p);
    for (auto& x : q) x = checked_mul(x, M);
    return q;
  };
  return lr_compute(scale(lambda), scale(mu), scale(nu), 0, ctr, budget);
}

} // namespace hiveflow
