#pragma once

// Balanced star arrays: which (tail class, difference) cells the developed
// Part I factors cover, how the remaining differences are packed into rows of
// five, and the Part II factors generated from those rows.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "starfact/core.hpp"
#include "starfact/lifting.hpp"

namespace starfact {

/// Coverage of D' = {1..(v-2)/2} \ 6Z per tail residue class.
class DifferenceLedger {
 public:
  explicit DifferenceLedger(int v) : v_(v) {
    for (auto& c : origin_) c.assign(max_diff() + 1, -1);
  }

  int v() const { return v_; }
  int max_diff() const { return (v_ - 2) / 2; }

  bool covered(int cls, int d) const { return in_range(d) && origin_[cls][d] >= 0; }

  /// Index, within its factor, of the star whose orbit covers the cell; -1 if uncovered.
  int origin(int cls, int d) const { return in_range(d) ? origin_[cls][d] : -1; }

  std::vector<int> covered_set(int cls) const {
    std::vector<int> out;
    for (int d = 1; d <= max_diff(); ++d)
      if (origin_[cls][d] >= 0) out.push_back(d);
    return out;
  }

  std::vector<int> d_prime() const {
    std::vector<int> out;
    for (int d = 1; d <= max_diff(); ++d)
      if (d % 6 != 0) out.push_back(d);
    return out;
  }

  void mark(int cls, int d, int origin) { origin_[cls][d] = origin; }

 private:
  bool in_range(int d) const { return d >= 1 && d <= max_diff() && d % 6 != 0; }

  int v_;
  std::array<std::vector<int>, 6> origin_;
};

/// Account for every edge of the given Part I factors. Each (class, d) cell
/// must be hit by either no edge or one full orbit of v/6 distinct edges;
/// every multiple of 6 in range must be covered exactly v times.
inline DifferenceLedger ledger_from_factors(int v, const std::vector<Factor>& part1) {
  using K = StarfactError::Kind;
  DifferenceLedger ledger(v);
  const int half = v / 2;
  const int maxd = ledger.max_diff();
  struct Seen {
    int factor = -1;
    int star = -1;
  };
  // (tail, d) -> first edge seen with that tail and difference.
  std::vector<Seen> seen(static_cast<std::size_t>(v) * (half + 1));
  std::array<std::vector<int>, 6> hits;
  for (auto& h : hits) h.assign(maxd + 1, 0);
  std::vector<long> sixes(maxd + 1, 0);

  for (std::size_t fi = 0; fi < part1.size(); ++fi) {
    const auto& stars = part1[fi].stars;
    for (std::size_t si = 0; si < stars.size(); ++si) {
      const Star& s = stars[si];
      for (Vertex l : s.leaves) {
        const EdgeDifference e = edge_difference(s.center, l, v);
        const std::string edge = "{" + std::to_string(s.center) + "," + std::to_string(l) + "}";
        if (2 * e.diff == v)
          throw StarfactError(K::ambiguous_tail, "Part I edge " + edge + " has difference v/2");
        const Vertex tail = tail_of(s.center, l, v);
        Seen& first = seen[static_cast<std::size_t>(tail) * (half + 1) + e.diff];
        if (first.factor >= 0) {
          const Star& other = part1[first.factor].stars[first.star];
          throw StarfactError(K::double_coverage,
                              "class " + std::to_string(residue6(tail)) + ", difference " +
                                  std::to_string(e.diff) + ": edge " + edge + " of star (" +
                                  to_string(s) + ") in factor " + std::to_string(fi) +
                                  " already covered by star (" + to_string(other) +
                                  ") in factor " + std::to_string(first.factor));
        }
        first = {static_cast<int>(fi), static_cast<int>(si)};
        if (e.diff % 6 == 0) {
          ++sixes[e.diff];
          continue;
        }
        const int cls = residue6(tail);
        if (hits[cls][e.diff]++ == 0) ledger.mark(cls, e.diff, static_cast<int>(si));
      }
    }
  }

  for (int cls = 0; cls < 6; ++cls)
    for (int d = 1; d <= maxd; ++d)
      if (hits[cls][d] != 0 && hits[cls][d] != v / 6)
        throw StarfactError(K::coverage_count,
                            "class " + std::to_string(cls) + ", difference " + std::to_string(d) +
                                " covered by " + std::to_string(hits[cls][d]) + " edges, expected " +
                                std::to_string(v / 6));
  for (int d = 6; d <= maxd; d += 6)
    if (sixes[d] != v)
      throw StarfactError(K::coverage_count,
                          "difference " + std::to_string(d) + " covered " +
                              std::to_string(sixes[d]) + " times, expected " + std::to_string(v));
  return ledger;
}

/// Row of a balanced star array: slot j-1 holds a difference congruent to j (mod 6).
using ArrayRow = std::array<std::optional<int>, 5>;
using FullRow = std::array<int, 5>;

struct BalancedStarArray {
  int cls = 0;
  std::vector<ArrayRow> t1_rows;
  std::vector<FullRow> t2_rows;

  int empty_cells() const {
    int n = 0;
    for (const auto& r : t1_rows)
      for (const auto& s : r) n += s ? 0 : 1;
    return n;
  }

  std::vector<int> entries() const {
    std::vector<int> out;
    for (const auto& r : t1_rows)
      for (const auto& s : r)
        if (s) out.push_back(*s);
    for (const auto& r : t2_rows) out.insert(out.end(), r.begin(), r.end());
    return out;
  }
};

namespace detail {

// Zip ascending residue buckets: row k takes the k-th element of each.
inline std::vector<ArrayRow> zip_buckets(const std::array<std::vector<int>, 5>& buckets) {
  std::size_t depth = 0;
  for (const auto& b : buckets) depth = std::max(depth, b.size());
  std::vector<ArrayRow> rows(depth);
  for (int j = 0; j < 5; ++j)
    for (std::size_t k = 0; k < buckets[j].size(); ++k) rows[k][j] = buckets[j][k];
  return rows;
}

inline std::array<std::vector<int>, 5> bucket_by_residue(const std::vector<int>& ds) {
  std::array<std::vector<int>, 5> b;
  for (int d : ds) b[d % 6 - 1].push_back(d);
  for (auto& x : b) std::sort(x.begin(), x.end());
  return b;
}

}  // namespace detail

/// Split D' per class into the covered part T1 and the completion T2.
/// T1 rows group covered differences by originating star where one star
/// supplies a full row, and pack the rest by residue.
inline std::array<BalancedStarArray, 6> complete_arrays(const DifferenceLedger& ledger) {
  std::array<BalancedStarArray, 6> out;
  const std::vector<int> dp = ledger.d_prime();
  for (int cls = 0; cls < 6; ++cls) {
    BalancedStarArray& a = out[cls];
    a.cls = cls;

    std::map<int, std::vector<int>> by_origin;
    std::vector<int> leftover;
    for (int d : dp) {
      if (ledger.covered(cls, d))
        by_origin[ledger.origin(cls, d)].push_back(d);
      else
        leftover.push_back(d);
    }
    std::vector<ArrayRow> grouped;
    std::vector<int> pool;
    for (auto& [origin, ds] : by_origin) {
      const auto b = detail::bucket_by_residue(ds);
      const bool full = std::all_of(b.begin(), b.end(), [](const auto& x) { return x.size() == 1; });
      if (full)
        grouped.push_back(detail::zip_buckets(b).front());
      else
        pool.insert(pool.end(), ds.begin(), ds.end());
    }
    std::sort(grouped.begin(), grouped.end(),
              [](const ArrayRow& x, const ArrayRow& y) { return *x[0] < *y[0]; });
    a.t1_rows = std::move(grouped);
    for (const auto& r : detail::zip_buckets(detail::bucket_by_residue(pool))) a.t1_rows.push_back(r);

    const auto buckets = detail::bucket_by_residue(leftover);
    for (const auto& b : buckets) {
      if (b.size() != buckets[0].size()) {
        std::ostringstream msg;
        msg << "class " << cls << ": leftover residue buckets have unequal sizes (";
        for (int j = 0; j < 5; ++j) msg << (j ? "," : "") << buckets[j].size();
        msg << ")";
        throw StarfactError(StarfactError::Kind::unequal_buckets, msg.str());
      }
    }
    for (const auto& r : detail::zip_buckets(buckets)) {
      FullRow f{};
      for (int j = 0; j < 5; ++j) f[j] = *r[j];
      a.t2_rows.push_back(f);
    }
  }
  return out;
}

/// Factor made of the v/6 translates (by multiples of 6) of (i; i+d1, ..., i+d5).
inline Factor row_factor(int cls, const FullRow& row, int v) {
  Star base{cls, {}};
  for (int d : row) base.leaves.push_back((cls + d) % v);
  Factor f;
  for (int j = 0; j < v / 6; ++j) f.stars.push_back(translate(base, 6 * j, v));
  return f;
}

inline std::vector<Factor> part2_factors(const std::array<BalancedStarArray, 6>& arrays, int v) {
  std::vector<Factor> out;
  for (const auto& a : arrays)
    for (const auto& row : a.t2_rows) out.push_back(row_factor(a.cls, row, v));
  return out;
}

/// One block per class with T1 and T2 sections, five columns, '*' for empty slots.
inline std::string render_arrays(const std::array<BalancedStarArray, 6>& arrays) {
  std::ostringstream os;
  auto put = [&](const ArrayRow& r) {
    os << "   ";
    for (const auto& s : r) {
      std::string cell = s ? std::to_string(*s) : "*";
      os << ' ' << std::string(cell.size() < 4 ? 4 - cell.size() : 0, ' ') << cell;
    }
    os << '\n';
  };
  for (const auto& a : arrays) {
    os << "T_" << a.cls << "\n  T1 (" << a.t1_rows.size() << " rows, " << a.empty_cells()
       << " empty)\n";
    for (const auto& r : a.t1_rows) put(r);
    os << "  T2 (" << a.t2_rows.size() << " rows)\n";
    for (const auto& r : a.t2_rows) {
      ArrayRow ar;
      for (int j = 0; j < 5; ++j) ar[j] = r[j];
      put(ar);
    }
  }
  return os.str();
}

}  // namespace starfact
