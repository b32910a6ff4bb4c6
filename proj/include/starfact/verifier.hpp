#pragma once

// Admissibility of an order and edge-exact checking of a claimed
// decomposition of K_v - I into 5-star factors. Deliberately uses nothing
// from the construction headers, only the shared data types.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "starfact/core.hpp"

namespace starfact {

enum class Rejection { ok, v_odd, v_not_div_6, v_minus_2_not_div_5 };

inline const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::ok: return "ok";
    case Rejection::v_odd: return "v odd";
    case Rejection::v_not_div_6: return "v not divisible by 6";
    case Rejection::v_minus_2_not_div_5: return "v-2 not divisible by 5";
  }
  return "?";
}

struct AdmissibilityResult {
  bool admissible = false;
  Rejection reason = Rejection::ok;
  int g = 0;  // v/6
  int m = 0;  // floor(g/30)
  int t = 0;  // g mod 6
};

/// One 1-factor forces v even; 5-star factors force 6 | v; the star count
/// 3(v-2)/5 forces 5 | v-2. Reports the first condition that fails.
inline AdmissibilityResult admissible(int v) {
  AdmissibilityResult r;
  if (v % 2 != 0) {
    r.reason = Rejection::v_odd;
  } else if (v % 6 != 0) {
    r.reason = Rejection::v_not_div_6;
  } else if ((v - 2) % 5 != 0) {
    r.reason = Rejection::v_minus_2_not_div_5;
  } else {
    r.admissible = true;
    r.g = v / 6;
    r.m = r.g / 30;
    r.t = r.g % 6;
  }
  return r;
}

inline int factor_count(int v) {
  const AdmissibilityResult a = admissible(v);
  if (!a.admissible)
    throw StarfactError(StarfactError::Kind::inadmissible,
                        "v=" + std::to_string(v) + " is not admissible: " + to_string(a.reason));
  return 3 * (v - 2) / 5;
}

enum class VerifyCode {
  bad_order,
  vertex_out_of_range,
  matching_not_perfect,
  matching_wrong_size,
  factor_wrong_size,
  star_wrong_leaf_count,
  star_repeated_vertex,
  factor_not_spanning,
  factor_vertex_reused,
  edge_multiply_covered,
  edge_uncovered,
  factor_count,
};

inline const char* to_string(VerifyCode c) {
  switch (c) {
    case VerifyCode::bad_order: return "bad-order";
    case VerifyCode::vertex_out_of_range: return "vertex-out-of-range";
    case VerifyCode::matching_not_perfect: return "matching-not-perfect";
    case VerifyCode::matching_wrong_size: return "matching-wrong-size";
    case VerifyCode::factor_wrong_size: return "factor-wrong-size";
    case VerifyCode::star_wrong_leaf_count: return "star-wrong-leaf-count";
    case VerifyCode::star_repeated_vertex: return "star-repeated-vertex";
    case VerifyCode::factor_not_spanning: return "factor-not-spanning";
    case VerifyCode::factor_vertex_reused: return "factor-vertex-reused";
    case VerifyCode::edge_multiply_covered: return "edge-multiply-covered";
    case VerifyCode::edge_uncovered: return "edge-uncovered";
    case VerifyCode::factor_count: return "factor-count";
  }
  return "?";
}

// Witness layout per code:
//   vertex_out_of_range         {vertex}
//   matching_not_perfect        {vertex, times matched}
//   matching_wrong_size         {pairs, expected}
//   factor_wrong_size           {factor, stars, expected}
//   star_wrong_leaf_count       {factor, star, leaves}
//   star_repeated_vertex        {factor, star, vertex}
//   factor_not_spanning         {factor, vertex}
//   factor_vertex_reused        {factor, vertex}
//   edge_multiply_covered       {u, w, times}
//   edge_uncovered              {u, w}
//   factor_count                {factors, expected}
struct VerifyIssue {
  VerifyCode code;
  std::string message;
  std::vector<long long> witness;
};

struct VerifyReport {
  std::vector<VerifyIssue> errors;        // at most kMaxListed per code
  std::map<VerifyCode, long long> totals;  // every occurrence, per code
  long long edge_total = 0;                // edges seen, with multiplicity
  long long factor_count = 0;
  std::vector<long long> by_diff;  // edges seen per difference 0..v/2

  static constexpr int kMaxListed = 16;

  bool valid() const { return errors.empty(); }

  bool has(VerifyCode c) const { return totals.count(c) != 0; }

  const VerifyIssue* first(VerifyCode c) const {
    for (const auto& e : errors)
      if (e.code == c) return &e;
    return nullptr;
  }
};

namespace verify_detail {

struct Recorder {
  VerifyReport& r;
  void operator()(VerifyCode c, std::string msg, std::vector<long long> w) {
    if (++r.totals[c] <= VerifyReport::kMaxListed) r.errors.push_back({c, std::move(msg), std::move(w)});
  }
};

inline std::string pair_str(long long a, long long b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace verify_detail

/// Largest order the verifier will allocate coverage tables for.
inline constexpr int kMaxVerifiableOrder = 20000;

inline VerifyReport verify_decomposition(const Decomposition& d) {
  using verify_detail::pair_str;
  VerifyReport rep;
  verify_detail::Recorder err{rep};
  const long long v = d.v;
  rep.factor_count = static_cast<long long>(d.factors.size());

  if (v < 2 || v > kMaxVerifiableOrder) {
    err(VerifyCode::bad_order, "order " + std::to_string(v) + " outside 2.." +
                                   std::to_string(kMaxVerifiableOrder), {v});
    return rep;
  }
  rep.by_diff.assign(v / 2 + 1, 0);
  auto in_range = [&](long long x) { return x >= 0 && x < v; };

  // Coverage counts over unordered pairs u < w, triangular indexing.
  std::vector<std::uint8_t> cover(static_cast<std::size_t>(v * (v - 1) / 2), 0);
  auto add_edge = [&](long long a, long long b) {
    if (!in_range(a) || !in_range(b) || a == b) return;
    const long long u = a < b ? a : b;
    const long long w = a < b ? b : a;
    const std::size_t idx = static_cast<std::size_t>(u * (2 * v - u - 1) / 2 + (w - u - 1));
    if (cover[idx] < 255) ++cover[idx];
    ++rep.edge_total;
    const long long span = w - u;
    ++rep.by_diff[span <= v - span ? span : v - span];
  };

  // (1) vertex labels in range.
  auto check_vertex = [&](long long x, const std::string& where) {
    if (!in_range(x)) err(VerifyCode::vertex_out_of_range,
                          "vertex " + std::to_string(x) + " out of range in " + where, {x});
  };
  for (const auto& [a, b] : d.one_factor) {
    check_vertex(a, "one-factor");
    check_vertex(b, "one-factor");
  }
  for (std::size_t fi = 0; fi < d.factors.size(); ++fi)
    for (const Star& s : d.factors[fi].stars) {
      const std::string where = "factor " + std::to_string(fi);
      check_vertex(s.center, where);
      for (Vertex l : s.leaves) check_vertex(l, where);
    }

  // (2) one_factor is a perfect matching.
  if (static_cast<long long>(d.one_factor.size()) * 2 != v)
    err(VerifyCode::matching_wrong_size,
        "one-factor has " + std::to_string(d.one_factor.size()) + " pairs, expected " +
            std::to_string(v / 2),
        {static_cast<long long>(d.one_factor.size()), v / 2});
  {
    std::vector<int> matched(v, 0);
    for (const auto& [a, b] : d.one_factor) {
      if (in_range(a)) ++matched[a];
      if (in_range(b)) ++matched[b];
      add_edge(a, b);
    }
    for (long long x = 0; x < v; ++x)
      if (matched[x] != 1)
        err(VerifyCode::matching_not_perfect,
            "vertex " + std::to_string(x) + " is matched " + std::to_string(matched[x]) +
                " times in the one-factor",
            {x, matched[x]});
  }

  // (3) every factor is a spanning set of v/6 vertex-disjoint 5-stars.
  std::vector<long long> seen(v, -1);
  for (std::size_t fi = 0; fi < d.factors.size(); ++fi) {
    const auto& stars = d.factors[fi].stars;
    const long long f = static_cast<long long>(fi);
    if (static_cast<long long>(stars.size()) * 6 != v)
      err(VerifyCode::factor_wrong_size,
          "factor " + std::to_string(fi) + " has " + std::to_string(stars.size()) +
              " stars, expected " + std::to_string(v / 6),
          {f, static_cast<long long>(stars.size()), v / 6});
    std::vector<int> hits(v, 0);
    for (std::size_t si = 0; si < stars.size(); ++si) {
      const Star& s = stars[si];
      const long long sx = static_cast<long long>(si);
      if (s.leaves.size() != 5)
        err(VerifyCode::star_wrong_leaf_count,
            "factor " + std::to_string(fi) + " star " + std::to_string(si) + " has " +
                std::to_string(s.leaves.size()) + " leaves",
            {f, sx, static_cast<long long>(s.leaves.size())});
      std::vector<long long> vs{s.center};
      vs.insert(vs.end(), s.leaves.begin(), s.leaves.end());
      for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b)
          if (vs[a] == vs[b]) {
            err(VerifyCode::star_repeated_vertex,
                "factor " + std::to_string(fi) + " star " + std::to_string(si) +
                    " repeats vertex " + std::to_string(vs[a]),
                {f, sx, vs[a]});
            break;
          }
        if (!in_range(vs[a])) continue;
        if (seen[vs[a]] == f) {
          if (++hits[vs[a]] == 2)
            err(VerifyCode::factor_vertex_reused,
                "factor " + std::to_string(fi) + " uses vertex " + std::to_string(vs[a]) +
                    " more than once",
                {f, vs[a]});
        } else {
          seen[vs[a]] = f;
          hits[vs[a]] = 1;
        }
      }
      for (Vertex l : s.leaves) add_edge(s.center, l);
    }
    for (long long x = 0; x < v; ++x)
      if (seen[x] != f)
        err(VerifyCode::factor_not_spanning,
            "factor " + std::to_string(fi) + " misses vertex " + std::to_string(x), {f, x});
  }

  // (4) every edge of K_v exactly once.
  std::size_t idx = 0;
  for (long long u = 0; u < v; ++u)
    for (long long w = u + 1; w < v; ++w, ++idx) {
      if (cover[idx] == 0)
        err(VerifyCode::edge_uncovered, "edge " + pair_str(u, w) + " is not covered", {u, w});
      else if (cover[idx] > 1)
        err(VerifyCode::edge_multiply_covered,
            "edge " + pair_str(u, w) + " is covered " + std::to_string(cover[idx]) + " times",
            {u, w, cover[idx]});
    }

  // (5) factor count.
  const AdmissibilityResult a = admissible(static_cast<int>(v));
  const long long expected = a.admissible ? 3 * (v - 2) / 5 : -1;
  if (!a.admissible)
    err(VerifyCode::bad_order,
        "order " + std::to_string(v) + " is not admissible: " + to_string(a.reason), {v});
  else if (rep.factor_count != expected)
    err(VerifyCode::factor_count,
        std::to_string(rep.factor_count) + " factors, expected " + std::to_string(expected),
        {rep.factor_count, expected});
  return rep;
}

}  // namespace starfact
