#pragma once

// Brute-force search for a decomposition of K_v - I into 5-star factors at
// tiny orders. Shares nothing with the construction pipeline.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starfact/core.hpp"

namespace starfact {

struct SearchConfig {
  int v = 12;
  std::uint64_t budget = 10'000'000;  // search nodes, over all attempts
  std::uint64_t attempt_nodes = 2'000;  // node cap per randomised restart
  std::uint64_t seed = 1;
  // Matching removed from K_v. Every perfect matching is equivalent under
  // relabelling, so {2k, 2k+1} is used when none is given.
  std::optional<std::vector<std::pair<Vertex, Vertex>>> matching;
};

enum class SearchStatus { found, nonexistent, exhausted, budget_exhausted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::nonexistent: return "nonexistent";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Decomposition> decomposition;
  std::uint64_t nodes = 0;
  std::uint64_t attempts = 0;
  std::string witness;  // reason for nonexistence or exhaustion
};

namespace oracle_detail {

using Mask = std::uint64_t;

inline int low(Mask m) { return std::countr_zero(m); }
inline Mask bit(int x) { return Mask{1} << x; }

// Depth-first search, one factor at a time. Inside a factor the lowest
// unplaced vertex is covered next, first as a centre, then as a leaf of a
// higher centre. Each new factor must contain the lowest remaining edge.
class Search {
 public:
  Search(int v, int factors, std::uint64_t budget, std::vector<Mask> adj)
      : v_(v), factors_(factors), budget_(budget), adj_(std::move(adj)) {}

  bool run() { return next_factor(); }
  std::uint64_t nodes() const { return nodes_; }
  bool out_of_budget() const { return out_of_budget_; }
  const std::vector<Factor>& factors() const { return done_; }

 private:
  bool tick() {
    if (++nodes_ > budget_) out_of_budget_ = true;
    return !out_of_budget_;
  }

  // Each remaining factor gives a vertex degree 1 or 5, so residual degree r
  // with k factors left needs k <= r <= 5k and r = k (mod 4); (r-k)/4 is the
  // number of times x must still be a centre. A neighbour that will never be
  // a centre again must get its edge to x from x as a centre.
  bool degrees_feasible() const {
    const int k = factors_ - static_cast<int>(done_.size());
    std::vector<int> roles(v_);
    Mask leaf_only = 0;
    for (int x = 0; x < v_; ++x) {
      const int r = std::popcount(adj_[x]);
      if (r < k || r > 5 * k || (r - k) % 4 != 0) return false;
      roles[x] = (r - k) / 4;
      if (roles[x] == 0) leaf_only |= bit(x);
    }
    for (int x = 0; x < v_; ++x)
      if (std::popcount(adj_[x] & leaf_only) > 5 * roles[x]) return false;
    return true;
  }

  // Can x still be completed if the current factor gives it degree `use`?
  bool can_take(int x, int use) const {
    const int k = factors_ - static_cast<int>(done_.size()) - 1;
    const int r = std::popcount(adj_[x]) - use;
    return r >= k && r <= 5 * k && (r - k) % 4 == 0;
  }

  Mask leaf_ok(Mask pool) const {
    Mask out = 0;
    for (Mask p = pool; p; p &= p - 1)
      if (can_take(low(p), 1)) out |= bit(low(p));
    return out;
  }

  // degrees_feasible restricted to vertices already placed in the current
  // factor, whose use in it is fixed.
  bool placed_feasible(Mask placed) const {
    const int k = factors_ - static_cast<int>(done_.size()) - 1;
    Mask leaf_only = 0;
    for (Mask p = placed; p; p &= p - 1)
      if (std::popcount(adj_[low(p)]) == k) leaf_only |= bit(low(p));
    for (Mask p = placed; p; p &= p - 1) {
      const int x = low(p);
      const int roles = (std::popcount(adj_[x]) - k) / 4;
      if (std::popcount(adj_[x] & leaf_only) > 5 * roles) return false;
    }
    return true;
  }

  bool next_factor() {
    if (static_cast<int>(done_.size()) == factors_) return true;
    if (!degrees_feasible()) return false;
    int a = 0;
    while (a < v_ && adj_[a] == 0) ++a;
    if (a == v_) return false;
    lowest_ = {a, low(adj_[a])};
    current_.clear();
    return fill(0);
  }

  bool contains_lowest() const {
    auto has = [](const Star& s, int x) {
      return s.center == x || std::find(s.leaves.begin(), s.leaves.end(), x) != s.leaves.end();
    };
    for (const Star& s : current_)
      if (has(s, lowest_.first) && has(s, lowest_.second)) return true;
    return false;
  }

  void place(const Star& s, bool on) {
    for (Vertex l : s.leaves) {
      adj_[s.center] ^= bit(l);
      adj_[l] ^= bit(s.center);
    }
    if (on)
      current_.push_back(s);
    else
      current_.pop_back();
  }

  // Choose `need` more leaves for `s` from `pool`, in increasing order.
  bool choose_leaves(Star& s, Mask pool, int need, Mask used) {
    if (!tick()) return false;
    if (need == 0) {
      place(s, true);
      Mask u = used | bit(s.center);
      for (Vertex l : s.leaves) u |= bit(l);
      if (placed_feasible(u) && fill(u)) return true;
      place(s, false);
      return false;
    }
    while (std::popcount(pool) >= need) {
      const int x = low(pool);
      pool &= pool - 1;
      s.leaves.push_back(x);
      if (choose_leaves(s, pool, need - 1, used)) return true;
      s.leaves.pop_back();
      if (out_of_budget_) return false;
    }
    return false;
  }

  bool fill(Mask used) {
    if (!tick()) return false;
    const Mask all = v_ == 64 ? ~Mask{0} : bit(v_) - 1;
    if (used == all) {
      if (!contains_lowest()) return false;
      done_.push_back({current_});
      const auto saved = current_;
      const auto saved_lowest = lowest_;
      if (next_factor()) return true;
      current_ = saved;
      lowest_ = saved_lowest;
      done_.pop_back();
      return false;
    }
    const int x = low(~used & all);
    const Mask free = all & ~used & ~bit(x);
    if (can_take(x, 5)) {
      Star s{x, {}};
      if (choose_leaves(s, leaf_ok(adj_[x] & free), 5, used)) return true;
      if (out_of_budget_) return false;
    }
    if (!can_take(x, 1)) return false;
    for (Mask cs = adj_[x] & free; cs; cs &= cs - 1) {
      const int c = low(cs);
      if (!can_take(c, 5)) continue;
      Star s{c, {x}};
      if (choose_leaves(s, leaf_ok(adj_[c] & free & ~bit(c)), 4, used)) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  int v_;
  int factors_;
  std::uint64_t budget_;
  std::vector<Mask> adj_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::pair<int, int> lowest_{0, 0};
  std::vector<Star> current_;
  std::vector<Factor> done_;
};

}  // namespace oracle_detail

inline SearchResult exhaustive_search(const SearchConfig& cfg) {
  SearchResult res;
  const int v = cfg.v;
  if (v < 2 || v % 2 != 0) {
    res.status = SearchStatus::nonexistent;
    res.witness = "v=" + std::to_string(v) + " has no perfect matching";
    return res;
  }
  if (v % 6 != 0) {
    res.status = SearchStatus::nonexistent;
    res.witness = "v=" + std::to_string(v) + " is not divisible by 6, so no 5-star factor exists";
    return res;
  }
  if ((3 * (v - 2)) % 5 != 0) {
    res.status = SearchStatus::nonexistent;
    res.witness = "factor count 3(v-2)/5 = " + std::to_string(3 * (v - 2)) +
                  "/5 is not an integer";
    return res;
  }
  if (v > 64)
    throw std::invalid_argument("exhaustive search supports v <= 64, got " + std::to_string(v));

  std::vector<std::pair<Vertex, Vertex>> matching;
  if (cfg.matching) {
    matching = *cfg.matching;
  } else {
    for (Vertex u = 0; u < v; u += 2) matching.emplace_back(u, u + 1);
  }
  std::vector<std::vector<bool>> removed(v, std::vector<bool>(v, false));
  std::vector<bool> matched(v, false);
  for (const auto& [a, b] : matching) {
    if (a < 0 || b < 0 || a >= v || b >= v || a == b || matched[a] || matched[b])
      throw std::invalid_argument("matching is not a perfect matching of K_" + std::to_string(v));
    matched[a] = matched[b] = true;
    removed[a][b] = removed[b][a] = true;
  }
  if (static_cast<int>(matching.size()) * 2 != v)
    throw std::invalid_argument("matching is not a perfect matching of K_" + std::to_string(v));

  const int k = 3 * (v - 2) / 5;

  // Restarts: each attempt relabels the vertices by a fresh permutation and
  // searches with a node cap; a solution is mapped back through the inverse.
  // A restart-free run is the special case attempt_nodes >= budget.
  std::mt19937_64 rng(cfg.seed);
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  bool complete = true;  // every attempt ran to exhaustion without a cap
  while (res.nodes < cfg.budget) {
    const std::uint64_t cap =
        std::max<std::uint64_t>(1, std::min(cfg.attempt_nodes, cfg.budget - res.nodes));
    std::vector<oracle_detail::Mask> adj(v, 0);
    for (int x = 0; x < v; ++x)
      for (int y = 0; y < v; ++y)
        if (x != y && !removed[x][y]) adj[perm[x]] |= oracle_detail::bit(perm[y]);
    oracle_detail::Search search(v, k, cap, std::move(adj));
    const bool ok = search.run();
    res.nodes += std::min(search.nodes(), cap);
    ++res.attempts;
    if (ok) {
      std::vector<Vertex> inv(v);
      for (int x = 0; x < v; ++x) inv[perm[x]] = x;
      Decomposition d{v, matching, {}};
      for (const Factor& f : search.factors()) {
        Factor g;
        for (const Star& s : f.stars) {
          Star t{inv[s.center], {}};
          for (Vertex l : s.leaves) t.leaves.push_back(inv[l]);
          g.stars.push_back(std::move(t));
        }
        d.factors.push_back(std::move(g));
      }
      res.status = SearchStatus::found;
      res.decomposition = std::move(d);
      return res;
    }
    if (!search.out_of_budget()) break;  // this labelling was searched completely
    complete = false;
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  if (res.nodes >= cfg.budget && !complete) {
    res.status = SearchStatus::budget_exhausted;
    res.witness = "node budget of " + std::to_string(cfg.budget) + " exhausted";
  } else {
    res.status = SearchStatus::exhausted;
    res.witness = "search space exhausted after " + std::to_string(res.nodes) + " nodes";
  }
  return res;
}

}  // namespace starfact
