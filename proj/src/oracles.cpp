#include "hiveflow/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <stdexcept>

namespace hiveflow {

RhombusCorners rhombus_corners(const Lattice& L, const Rhombus& rh) {
  int32_t d0 = L.edges[rh.diag].v0, d1 = L.edges[rh.diag].v1;
  RhombusCorners c{d0, d1, -1, -1};
  for (int32_t e : {rh.ul, rh.ur, rh.ll, rh.lr})
    for (int32_t v : {L.edges[e].v0, L.edges[e].v1}) {
      if (v == d0 || v == d1 || v == c.ac0 || v == c.ac1) continue;
      (c.ac0 < 0 ? c.ac0 : c.ac1) = v;
    }
  assert(c.ac0 >= 0 && c.ac1 >= 0);
  return c;
}

static std::vector<int64_t> prefix_sums(const Partition& p, int n) {
  std::vector<int64_t> s(n + 1, 0);
  for (int i = 0; i < n; ++i) s[i + 1] = checked_add(s[i], i < (int)p.size() ? p[i] : 0);
  return s;
}

// border labels of the hive determined by b; interior entries left 0
static void boundary_labels(const Lattice& L, const BorderSpec& b, std::vector<int64_t>& lab,
                            std::vector<uint8_t>& fixed) {
  int n = L.n;
  auto plam = prefix_sums(b.lambda, n), pmu = prefix_sums(b.mu, n), pnu = prefix_sums(b.nu, n);
  lab.assign(L.nvert, 0);
  fixed.assign(L.nvert, 0);
  auto set = [&](int r, int p, int64_t v) {
    int32_t id = L.vertex_id(r, p);
    assert(!fixed[id] || lab[id] == v);
    lab[id] = v;
    fixed[id] = 1;
  };
  for (int r = 0; r <= n; ++r) {
    set(r, 0, plam[n - r]);
    set(r, n - r, pnu[n - r]);
  }
  for (int q = 0; q <= n; ++q) set(0, q, checked_add(plam[n], pmu[q]));
}

bool is_valid_hive(const Lattice& L, const BorderSpec& b, const Hive& h) {
  if (h.n != L.n || (int32_t)h.label.size() != L.nvert) return false;
  std::vector<int64_t> lab;
  std::vector<uint8_t> fixed;
  boundary_labels(L, b, lab, fixed);
  for (int32_t v = 0; v < L.nvert; ++v)
    if (fixed[v] && lab[v] != h.label[v]) return false;
  for (const Rhombus& rh : L.rhombi) {
    RhombusCorners c = rhombus_corners(L, rh);
    if (h.label[c.ob0] + h.label[c.ob1] < h.label[c.ac0] + h.label[c.ac1]) return false;
  }
  return true;
}

FlowClass hive_to_flow(const Lattice& L, const Hive& h) {
  assert(h.n == L.n && (int32_t)h.label.size() == L.nvert);
  int n = L.n;
  auto m = [&](int r, int p) { return h.label[L.vertex_id(r, n - r - p)]; };
  FlowClass f = zero_flow(L);
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < n - r; ++p) {
      f.delta[L.eh(r, p)] = checked_sub(m(r, p), m(r, p + 1));
      f.delta[L.er(r, p)] = checked_sub(m(r + 1, p), m(r, p));
      f.delta[L.ef(r, p)] = checked_sub(m(r, p + 1), m(r + 1, p));
    }
  assert(is_conserved(L, f));
  return f;
}

Hive flow_to_hive(const Lattice& L, const FlowClass& f) {
  assert(f.n == L.n && (int32_t)f.delta.size() == L.nedge);
  int n = L.n;
  // integrate the gradient, anchored at the bottom-left vertex
  std::vector<int64_t> h(L.nvert, 0);
  for (int r = 0; r < n; ++r)
    h[L.vertex_id(r + 1, 0)] = checked_sub(h[L.vertex_id(r, 0)], f.delta[L.er(r, 0)]);
  for (int r = 0; r <= n; ++r)
    for (int p = 0; p < n - r; ++p)
      h[L.vertex_id(r, p + 1)] = checked_add(h[L.vertex_id(r, p)], f.delta[L.eh(r, p)]);
  int64_t apex = h[L.vertex_id(n, 0)];
  Hive out{n, std::vector<int64_t>(L.nvert, 0)};
  for (int r = 0; r <= n; ++r)
    for (int p = 0; p <= n - r; ++p)
      out.label[L.vertex_id(r, n - r - p)] = checked_sub(apex, h[L.vertex_id(r, p)]);
  return out;
}

// ------------------------------------------------------------- hive search
//
// Shared backtracking engine: boundary fixed, interior labels assigned in a
// chosen order, candidate interval of each label derived from the rhombi it
// completes (optionally intersected with pre-narrowed per-vertex domains).
namespace {

struct HiveSearch {
  const Lattice& L;
  std::vector<int64_t> lab;
  std::vector<uint8_t> fixed;
  std::vector<int32_t> order;
  std::vector<std::vector<RhombusCorners>> attached;
  std::vector<int64_t> fb_lo, fb_hi; // optional fallback domains
  bool infeasible_upfront = false;

  HiveSearch(const Lattice& L_, const BorderSpec& b) : L(L_) {
    boundary_labels(L, b, lab, fixed);
  }

  std::vector<int32_t> interior_row_major() const {
    std::vector<int32_t> v;
    for (int r = 1; r < L.n; ++r)
      for (int p = 1; p < L.n - r; ++p) v.push_back(L.vertex_id(r, p));
    return v;
  }

  void set_order(std::vector<int32_t> ord) {
    order = std::move(ord);
    std::vector<int32_t> pos(L.nvert, -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = (int32_t)i;
    attached.assign(order.size(), {});
    for (const Rhombus& rh : L.rhombi) {
      RhombusCorners c = rhombus_corners(L, rh);
      int32_t last = std::max(std::max(pos[c.ob0], pos[c.ob1]), std::max(pos[c.ac0], pos[c.ac1]));
      if (last < 0) {
        if (lab[c.ob0] + lab[c.ob1] < lab[c.ac0] + lab[c.ac1]) infeasible_upfront = true;
      } else {
        attached[last].push_back(c);
      }
    }
  }

  // Narrow per-vertex domains to a fixpoint of the rhombus inequalities,
  // seeded with the rigorous box [min border label, max border label + |mu|]
  // (labels are concave along rows, and horizontal increments are bounded by
  // the mu border increments).  Returns false when a domain empties.
  bool narrow_domains(int64_t mu_sum) {
    int64_t lo0 = std::numeric_limits<int64_t>::max(), hi0 = std::numeric_limits<int64_t>::min();
    for (int32_t v = 0; v < L.nvert; ++v)
      if (fixed[v]) {
        lo0 = std::min(lo0, lab[v]);
        hi0 = std::max(hi0, lab[v]);
      }
    hi0 = checked_add(hi0, mu_sum);
    fb_lo.assign(L.nvert, lo0);
    fb_hi.assign(L.nvert, hi0);
    for (int32_t v = 0; v < L.nvert; ++v)
      if (fixed[v]) fb_lo[v] = fb_hi[v] = lab[v];

    std::vector<RhombusCorners> cs;
    cs.reserve(L.rhombi.size());
    for (const Rhombus& rh : L.rhombi) cs.push_back(rhombus_corners(L, rh));
    bool changed = true;
    for (int sweep = 0; changed && sweep < 4 * L.nvert; ++sweep) {
      changed = false;
      for (const RhombusCorners& c : cs) {
        for (auto [v, o] : {std::pair{c.ob0, c.ob1}, std::pair{c.ob1, c.ob0}}) {
          int64_t nl = fb_lo[c.ac0] + fb_lo[c.ac1] - fb_hi[o];
          if (nl > fb_lo[v]) { fb_lo[v] = nl; changed = true; }
        }
        for (auto [v, o] : {std::pair{c.ac0, c.ac1}, std::pair{c.ac1, c.ac0}}) {
          int64_t nh = fb_hi[c.ob0] + fb_hi[c.ob1] - fb_lo[o];
          if (nh < fb_hi[v]) { fb_hi[v] = nh; changed = true; }
        }
      }
      for (int32_t v = 0; v < L.nvert; ++v)
        if (fb_lo[v] > fb_hi[v]) return false;
    }
    return true;
  }

  // cb() -> false aborts the whole search
  bool dfs(size_t i, std::mt19937* rng, const std::function<bool()>& cb) {
    if (i == order.size()) return cb();
    int32_t v = order[i];
    bool has_lo = false, has_hi = false;
    int64_t lo = 0, hi = 0;
    for (const RhombusCorners& c : attached[i]) {
      if (v == c.ob0 || v == c.ob1) {
        int64_t bb = lab[c.ac0] + lab[c.ac1] - lab[v == c.ob0 ? c.ob1 : c.ob0];
        if (!has_lo || bb > lo) lo = bb;
        has_lo = true;
      } else {
        int64_t bb = lab[c.ob0] + lab[c.ob1] - lab[v == c.ac0 ? c.ac1 : c.ac0];
        if (!has_hi || bb < hi) hi = bb;
        has_hi = true;
      }
    }
    if (!fb_lo.empty()) {
      if (!has_lo || fb_lo[v] > lo) lo = fb_lo[v];
      if (!has_hi || fb_hi[v] < hi) hi = fb_hi[v];
      has_lo = has_hi = true;
    }
    // row-major interior assignment always closes one bounding rhombus on
    // each side even without fallback domains
    assert(has_lo && has_hi);
    if (lo > hi) return true;
    fixed[v] = 1;
    bool keep = true;
    if (!rng) {
      for (int64_t x = lo; keep && x <= hi; ++x) {
        lab[v] = x;
        keep = dfs(i + 1, rng, cb);
      }
    } else {
      std::vector<int64_t> vals;
      if (hi - lo >= (int64_t)1e6) throw std::runtime_error("randomized hive domain too wide");
      vals.reserve(hi - lo + 1);
      for (int64_t x = lo; x <= hi; ++x) vals.push_back(x);
      std::shuffle(vals.begin(), vals.end(), *rng);
      for (size_t k = 0; keep && k < vals.size(); ++k) {
        lab[v] = vals[k];
        keep = dfs(i + 1, rng, cb);
      }
    }
    fixed[v] = 0;
    return keep;
  }
};

} // namespace

std::optional<FlowClass> initial_hive_flow(const Lattice& L, const BorderSpec& b) {
  HiveSearch hs(L, b);
  hs.set_order(hs.interior_row_major());
  if (hs.infeasible_upfront) return std::nullopt;
  std::optional<FlowClass> out;
  hs.dfs(0, nullptr, [&] {
    out = hive_to_flow(L, Hive{L.n, hs.lab});
    return false;
  });
  return out;
}

static int64_t hive_search_all(const Lattice& L, const BorderSpec& b, BruteOptions opts,
                               std::vector<FlowClass>* collect) {
  HiveSearch hs(L, b);
  if (!hs.narrow_domains(prefix_sums(b.mu, L.n)[L.n])) return 0;
  std::vector<int32_t> ord = hs.interior_row_major();
  for (int32_t v : ord)
    if (hs.fb_hi[v] - hs.fb_lo[v] > opts.width_cap)
      throw std::runtime_error("exhaustive hive search refused: domain width " +
                               std::to_string(hs.fb_hi[v] - hs.fb_lo[v]) + " exceeds cap " +
                               std::to_string(opts.width_cap));
  std::stable_sort(ord.begin(), ord.end(), [&](int32_t a, int32_t c) {
    return hs.fb_hi[a] - hs.fb_lo[a] < hs.fb_hi[c] - hs.fb_lo[c];
  });
  hs.set_order(ord);
  if (hs.infeasible_upfront) return 0;
  int64_t count = 0;
  hs.dfs(0, nullptr, [&] {
    ++count;
    if (collect) collect->push_back(hive_to_flow(L, Hive{L.n, hs.lab}));
    return true;
  });
  return count;
}

int64_t hive_count_bruteforce(const Lattice& L, const BorderSpec& b, BruteOptions opts) {
  return hive_search_all(L, b, opts, nullptr);
}

std::vector<FlowClass> enumerate_hive_flows(const Lattice& L, const BorderSpec& b,
                                            BruteOptions opts) {
  std::vector<FlowClass> out;
  hive_search_all(L, b, opts, &out);
  return out;
}

std::optional<Hive> random_hive(const Lattice& L, const BorderSpec& b, std::mt19937& rng) {
  HiveSearch hs(L, b);
  hs.set_order(hs.interior_row_major());
  if (hs.infeasible_upfront) return std::nullopt;
  std::optional<Hive> out;
  hs.dfs(0, &rng, [&] {
    out = Hive{L.n, hs.lab};
    return false;
  });
  return out;
}

// ---------------------------------------------------------------- LR rule

static int64_t lr_rule_run(const Partition& lambda, const Partition& mu, const Partition& nu,
                           std::vector<SkewTableau>* collect, size_t limit) {
  for (const Partition* p : {&lambda, &mu, &nu})
    if (!is_partition(*p)) throw std::invalid_argument("LR rule requires partitions");
  int n = (int)nu.size();
  Partition lam(lambda);
  lam.resize(n, 0);
  int64_t tot_l = 0, tot_m = 0, tot_n = 0;
  for (auto x : lambda) tot_l = checked_add(tot_l, x);
  for (auto x : mu) tot_m = checked_add(tot_m, x);
  for (auto x : nu) tot_n = checked_add(tot_n, x);
  if (checked_add(tot_l, tot_m) != tot_n) return 0;
  if ((int)lambda.size() > n) {
    for (size_t i = n; i < lambda.size(); ++i)
      if (lambda[i] > 0) return 0;
  }
  for (int i = 0; i < n; ++i)
    if (lam[i] > nu[i]) return 0;

  Partition m_parts;
  for (auto x : mu)
    if (x > 0) m_parts.push_back(x);
  int m = (int)m_parts.size();

  // cells in reverse reading order: rows top to bottom, right to left
  std::vector<std::pair<int, int64_t>> cells;
  for (int r = 0; r < n; ++r)
    for (int64_t c = nu[r] - 1; c >= lam[r]; --c) cells.emplace_back(r, c);

  // entry lookup by (row, column); columns are sparse, use per-row vectors
  std::vector<std::vector<int>> row_entry(n);
  for (int r = 0; r < n; ++r) row_entry[r].assign((size_t)(nu[r] - lam[r]), 0);
  auto at = [&](int r, int64_t c) -> int& { return row_entry[r][(size_t)(c - lam[r])]; };
  auto has_cell = [&](int r, int64_t c) { return r >= 0 && c >= lam[r] && c < nu[r]; };

  std::vector<int64_t> used(m + 1, 0);
  int64_t total = 0;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == cells.size()) {
      ++total;
      if (collect) {
        SkewTableau t;
        t.outer = nu;
        t.inner = lam;
        t.rows = row_entry;
        collect->push_back(std::move(t));
        if (collect->size() >= limit) return false;
      }
      return true;
    }
    auto [r, c] = cells[i];
    int lo = 1, hi = m;
    if (has_cell(r - 1, c)) lo = std::max(lo, at(r - 1, c) + 1); // strict down columns
    if (has_cell(r, c + 1)) hi = std::min(hi, at(r, c + 1));     // weak along rows
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= m_parts[v - 1]) continue;
      if (v >= 2 && used[v] >= used[v - 1]) continue; // lattice word prefix
      at(r, c) = v;
      ++used[v];
      bool go = rec(i + 1);
      --used[v];
      at(r, c) = 0;
      if (!go) return false;
    }
    return true;
  };
  rec(0);
  return total;
}

int64_t lr_rule_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lr_rule_run(lambda, mu, nu, nullptr, 0);
}

std::vector<SkewTableau> lr_rule_tableaux(const Partition& lambda, const Partition& mu,
                                          const Partition& nu, size_t limit) {
  std::vector<SkewTableau> out;
  if (limit == 0) return out;
  lr_rule_run(lambda, mu, nu, &out, limit);
  return out;
}

// ------------------------------------------------------ cycle brute force

std::vector<ProperCycle> all_proper_cycles(const Lattice& L) {
  std::vector<ProperCycle> out;
  std::vector<int32_t> path;
  std::vector<uint8_t> tri_used(L.ntri, 0);
  std::function<void(int32_t)> rec = [&](int32_t s) {
    int32_t u = path.back();
    for (int slot = 0; slot < 2; ++slot) {
      int32_t v = L.turn_out(u)[slot];
      if (v < 0) continue;
      if (v == s && path.size() >= 3) {
        out.push_back(ProperCycle{path});
      } else if (v > s && !tri_used[L.tri_of_turn(v)]) {
        tri_used[L.tri_of_turn(v)] = 1;
        path.push_back(v);
        rec(s);
        path.pop_back();
        tri_used[L.tri_of_turn(v)] = 0;
      }
    }
  };
  for (int32_t s = 0; s < L.nturn; ++s) {
    tri_used[L.tri_of_turn(s)] = 1;
    path.assign(1, s);
    rec(s);
    tri_used[L.tri_of_turn(s)] = 0;
  }
  return out;
}

std::vector<FlowClass> bruteforce_neighbors(const Lattice& L, const BorderSpec& b,
                                            const FlowClass& f) {
  std::vector<FlowClass> out;
  for (const ProperCycle& c : all_proper_cycles(L)) {
    FlowClass g = add_cycle(L, f, c);
    if (in_polytope(L, b, g)) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const FlowClass& a, const FlowClass& c) { return a.delta < c.delta; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ----------------------------------------------------------------- report

std::vector<Partition> partitions_upto(int max_parts, int64_t max_sum) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int64_t, int64_t)> rec = [&](int64_t rest, int64_t mx) {
    out.push_back(cur);
    if ((int)cur.size() == max_parts) return;
    for (int64_t v = std::min(rest, mx); v >= 1; --v) {
      cur.push_back(v);
      rec(rest - v, v);
      cur.pop_back();
    }
  };
  rec(max_sum, max_sum);
  return out;
}

void for_each_triple(int max_parts, int64_t max_norm,
                     const std::function<void(const Partition&, const Partition&,
                                              const Partition&)>& fn) {
  std::vector<Partition> parts = partitions_upto(max_parts, max_norm);
  std::vector<int64_t> sum(parts.size(), 0);
  for (size_t i = 0; i < parts.size(); ++i)
    for (int64_t x : parts[i]) sum[i] += x;
  for (size_t vi = 0; vi < parts.size(); ++vi) {
    if (sum[vi] == 0) continue;
    for (size_t li = 0; li < parts.size(); ++li) {
      if (sum[li] > sum[vi]) continue;
      for (size_t mi = 0; mi < parts.size(); ++mi)
        if (sum[li] + sum[mi] == sum[vi]) fn(parts[li], parts[mi], parts[vi]);
    }
  }
}

static std::string part_str(const Partition& p) {
  std::string s;
  for (int64_t x : p) {
    if (x == 0) break;
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s.empty() ? "0" : s;
}

std::string sweep_csv_header() { return "lambda;mu;nu;lr_rule;hive_bf;flow_enum"; }

std::string sweep_csv_row(const Partition& lambda, const Partition& mu, const Partition& nu,
                          int64_t lr, int64_t hive, int64_t flow) {
  return part_str(lambda) + ";" + part_str(mu) + ";" + part_str(nu) + ";" + std::to_string(lr) +
         ";" + std::to_string(hive) + ";" + std::to_string(flow);
}

} // namespace hiveflow
