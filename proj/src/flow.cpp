#include "hiveflow/flow.hpp"

#include <cassert>
#include <stdexcept>

#include "json.hpp"

namespace hiveflow {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in flow arithmetic");
  return r;
}
int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in flow arithmetic");
  return r;
}
int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in flow arithmetic");
  return r;
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

static int64_t psum(const Partition& p) {
  int64_t s = 0;
  for (int64_t x : p) s = checked_add(s, x);
  return s;
}

BorderSpec border_spec(const Lattice& L, Partition lambda, Partition mu, Partition nu) {
  for (const Partition* p : {&lambda, &mu, &nu})
    if (!is_partition(*p)) throw std::invalid_argument("border values must be partitions");
  size_t n = (size_t)L.n;
  if (lambda.size() > n || mu.size() > n || nu.size() > n)
    throw std::invalid_argument("partition longer than the lattice side");
  if (checked_add(psum(lambda), psum(mu)) != psum(nu))
    throw std::invalid_argument("|nu| must equal |lambda| + |mu|");
  lambda.resize(n, 0);
  mu.resize(n, 0);
  nu.resize(n, 0);

  BorderSpec b;
  b.n = L.n;
  b.lambda = std::move(lambda);
  b.mu = std::move(mu);
  b.nu = std::move(nu);
  b.target.assign(L.nedge, 0);
  b.is_border.assign(L.nedge, 0);
  for (int i = 1; i <= L.n; ++i) {
    int32_t e;
    e = L.border_edge(BorderSide::right, i);
    b.target[e] = b.lambda[i - 1];
    b.is_border[e] = 1;
    e = L.border_edge(BorderSide::bottom, i);
    b.target[e] = b.mu[i - 1];
    b.is_border[e] = 1;
    e = L.border_edge(BorderSide::left, i);
    b.target[e] = -b.nu[i - 1];
    b.is_border[e] = 1;
  }
  return b;
}

FlowClass zero_flow(const Lattice& L) { return FlowClass{L.n, std::vector<int64_t>(L.nedge, 0)}; }

bool is_conserved(const Lattice& L, const FlowClass& f) {
  if (f.n != L.n || (int32_t)f.delta.size() != L.nedge) return false;
  for (const Triangle& t : L.tris) {
    int64_t s = checked_add(checked_add(f.delta[t.side[0]], f.delta[t.side[1]]), f.delta[t.side[2]]);
    if (s != 0) return false;
  }
  return true;
}

int64_t slack(const Lattice& L, const FlowClass& f, const Rhombus& rh) {
  int64_t s = checked_sub(f.delta[rh.lr], f.delta[rh.ul]);
  assert(s == checked_sub(f.delta[rh.ur], f.delta[rh.ll]));
  (void)L;
  return s;
}

bool is_hive_flow(const Lattice& L, const FlowClass& f) {
  for (const Rhombus& rh : L.rhombi)
    if (slack(L, f, rh) < 0) return false;
  return true;
}

bool in_polytope(const Lattice& L, const BorderSpec& b, const FlowClass& f) {
  if (!is_conserved(L, f)) return false;
  for (int32_t e = 0; e < L.nedge; ++e)
    if (b.is_border[e] && f.delta[e] != b.target[e]) return false;
  return is_hive_flow(L, f);
}

bool is_ordinary(const Lattice& L, const std::vector<int32_t>& turns) {
  std::vector<uint8_t> seen(L.ntri, 0);
  for (int32_t t : turns) {
    int tri = L.tri_of_turn(t);
    if (seen[tri]) return false;
    seen[tri] = 1;
  }
  return true;
}

FlowClass flow_from_turns(const Lattice& L, const std::vector<int32_t>& turns) {
  FlowClass g = zero_flow(L);
  for (int32_t t : turns) {
    int tri = L.tri_of_turn(t);
    int32_t a = L.entry_edge(t), b = L.exit_edge(t);
    if (L.edges[a].up_tri == tri) g.delta[a] += 1;
    if (L.edges[b].up_tri == tri) g.delta[b] -= 1;
  }
  return g;
}

FlowClass add_flows(const Lattice& L, const FlowClass& f, const FlowClass& g) {
  assert(f.n == L.n && g.n == L.n);
  FlowClass h = f;
  for (int32_t e = 0; e < L.nedge; ++e) h.delta[e] = checked_add(h.delta[e], g.delta[e]);
  return h;
}

FlowClass add_cycle(const Lattice& L, const FlowClass& f, const ProperCycle& c) {
  return add_flows(L, f, flow_from_turns(L, c.turns));
}

int cycle_slack_by_contributions(const Lattice& L, const std::vector<int32_t>& turns,
                                 const Rhombus& rh, std::vector<SlackContribution>* out) {
  const size_t k = turns.size();
  auto in_rh = [&](size_t i) {
    int tri = L.tri_of_turn(turns[i]);
    return tri == rh.up_tri || tri == rh.down_tri;
  };
  auto aval = [&](int32_t e) { return (e == rh.ul || e == rh.lr) ? 1 : 0; };
  int32_t rhid = L.edges[rh.diag].diag_of;

  std::vector<uint8_t> used(k, 0);
  int total = 0;
  for (size_t i = 0; i < k; ++i) {
    if (used[i] || !in_rh(i)) continue;
    size_t prev = (i + k - 1) % k;
    if (L.entry_edge(turns[i]) == rh.diag) {
      // second half of a diagonal crossing; consumed when its partner is
      // scanned (which only comes later at the wrap-around)
      assert(in_rh(prev) && L.exit_edge(turns[prev]) == rh.diag);
      assert(prev > i);
      continue;
    }
    int value;
    int32_t second = -1;
    if (L.exit_edge(turns[i]) == rh.diag) {
      size_t j = (i + 1) % k;
      assert(in_rh(j) && L.entry_edge(turns[j]) == rh.diag);
      value = aval(L.exit_edge(turns[j])) - aval(L.entry_edge(turns[i]));
      used[j] = 1;
      second = turns[j];
    } else {
      value = aval(L.exit_edge(turns[i])) - aval(L.entry_edge(turns[i]));
    }
    used[i] = 1;
    total += value;
    if (out) out->push_back(SlackContribution{rhid, turns[i], second, value});
  }
  assert(!is_ordinary(L, turns) || (total >= -2 && total <= 2));
  return total;
}

// the two negative passage shapes in a rhombus: the counterclockwise turns
// around its acute corners, and the two diagonal crossings that start at an
// {ul,lr} side and end at a {ur,ll} side
static bool uses_negative_passage(const Lattice& L, const Rhombus& rh,
                                  const std::vector<int32_t>& turns) {
  const size_t k = turns.size();
  int32_t au = L.acute_turn_up(rh), ad = L.acute_turn_down(rh);
  for (size_t i = 0; i < k; ++i) {
    int32_t t = turns[i];
    if (t == au || t == ad) return true;
    if (L.exit_edge(t) == rh.diag) {
      int32_t u = turns[(i + 1) % k];
      int32_t a = L.entry_edge(t), b = L.exit_edge(u);
      if ((a == rh.ul && b == rh.ll) || (a == rh.lr && b == rh.ur)) return true;
    }
  }
  return false;
}

bool is_hive_preserving(const Lattice& L, const FlowClass& f, const std::vector<int32_t>& turns) {
  for (const Rhombus& rh : L.rhombi)
    if (slack(L, f, rh) == 0 && uses_negative_passage(L, rh, turns)) return false;
  return true;
}

bool is_secure(const Lattice& L, const FlowClass& f, const std::vector<int32_t>& turns) {
  if (!is_hive_preserving(L, f, turns)) return false;
  std::vector<uint8_t> has_au(L.rhombi.size(), 0), has_ad(L.rhombi.size(), 0);
  for (int32_t t : turns) {
    int tri = L.tri_of_turn(t);
    for (int32_t rhid : L.tris[tri].rhombi) {
      if (rhid < 0) continue;
      const Rhombus& rh = L.rhombi[rhid];
      if (t == L.acute_turn_up(rh)) has_au[rhid] = 1;
      if (t == L.acute_turn_down(rh)) has_ad[rhid] = 1;
    }
  }
  for (size_t rhid = 0; rhid < L.rhombi.size(); ++rhid)
    if (has_au[rhid] && has_ad[rhid] && slack(L, f, L.rhombi[rhid]) == 1) return false;
  return true;
}

std::string to_json(const FlowClass& f) {
  std::string s = "{\"n\": " + std::to_string(f.n) + ", \"delta\": [";
  for (size_t i = 0; i < f.delta.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(f.delta[i]);
  }
  s += "]}";
  return s;
}

std::optional<FlowClass> flow_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (!j.contains("n") || !j.contains("delta")) return std::nullopt;
  if (!j["n"].is_number_integer() || !j["delta"].is_array()) return std::nullopt;
  FlowClass f;
  f.n = j["n"].get<int>();
  if (f.n < 1) return std::nullopt;
  int64_t expect = 3ll * f.n * (f.n + 1) / 2;
  if ((int64_t)j["delta"].size() != expect) return std::nullopt;
  f.delta.reserve(j["delta"].size());
  for (const auto& x : j["delta"]) {
    if (!x.is_number_integer()) return std::nullopt;
    f.delta.push_back(x.get<int64_t>());
  }
  return f;
}

} // namespace hiveflow
