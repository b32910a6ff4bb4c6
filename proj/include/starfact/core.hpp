#pragma once

// Domain types shared across the library: stars, factors, decompositions,
// and difference arithmetic on cyclic vertex sets Z_g.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starfact {

using Vertex = std::int32_t;

// Stars are stored as a center plus an ordered leaf list. Factor stars carry
// five leaves; little stars carry t-1 leaves.
struct Star {
  Vertex center = 0;
  std::vector<Vertex> leaves;

  friend bool operator==(const Star&, const Star&) = default;
};

inline constexpr int kStarLeaves = 5;

struct Factor {
  std::vector<Star> stars;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Decomposition {
  int v = 0;
  std::vector<std::pair<Vertex, Vertex>> one_factor;
  std::vector<Factor> factors;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class Orientation { forward, wrap_around };
enum class EdgeLabel { pure, prime };

struct EdgeDifference {
  int diff = 0;
  Orientation orientation = Orientation::forward;

  friend bool operator==(const EdgeDifference&, const EdgeDifference&) = default;
};

struct LabeledEdge {
  Vertex u = 0;
  Vertex v = 0;
  int diff = 0;
  Orientation orientation = Orientation::forward;
  EdgeLabel label = EdgeLabel::pure;
};

// Errors raised by the construction pipeline. The kind tells callers which
// exit path applies; the message carries the offending value.
class StarfactError : public std::runtime_error {
 public:
  enum class Kind {
    degenerate_edge,
    ambiguous_tail,
    unsupported_parameter,
    construction_defect,
    leftover_size,
    malformed_star,
    lift_defect,
    double_coverage,
    coverage_count,
    unequal_buckets,
    inadmissible,
  };

  StarfactError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

inline std::string to_string(const Star& s) {
  return std::to_string(s.center) + "; " + vertex_list(s.leaves);
}

/// Graph difference of {u, w} on g points: min(|w-u|, g-|w-u|). Orientation
/// is forward when the difference is realized as |w-u| (including the
/// half-period case |w-u| = g/2), wrap-around otherwise.
inline EdgeDifference edge_difference(Vertex u, Vertex w, int g) {
  if (u == w) {
    throw StarfactError(StarfactError::Kind::degenerate_edge,
                        "degenerate edge {" + std::to_string(u) + "," +
                            std::to_string(w) + "}");
  }
  if (u < 0 || w < 0 || u >= g || w >= g) {
    throw std::out_of_range("vertex outside Z_" + std::to_string(g));
  }
  const int span = u < w ? w - u : u - w;
  if (span <= g - span) return {span, Orientation::forward};
  return {g - span, Orientation::wrap_around};
}

/// The endpoint x of {u, w} with (x + d) mod v equal to the other endpoint,
/// where d is the edge difference on Z_v. Half-period edges have no unique
/// tail.
inline Vertex tail_of(Vertex u, Vertex w, int v) {
  const EdgeDifference e = edge_difference(u, w, v);
  if (2 * e.diff == v) {
    throw StarfactError(StarfactError::Kind::ambiguous_tail,
                        "edge {" + std::to_string(u) + "," + std::to_string(w) +
                            "} has difference v/2; both endpoints are tails");
  }
  return (u + e.diff) % v == w ? u : w;
}

inline int residue6(Vertex x) { return static_cast<int>(x % 6); }

/// Per-difference label counts over a base graph on g points.
struct DifferenceCensus {
  struct Counts {
    int pure = 0;
    int prime = 0;
    friend bool operator==(const Counts&, const Counts&) = default;
  };
  std::map<int, Counts> by_diff;

  std::vector<int> pure_diffs() const {
    std::vector<int> out;
    for (const auto& [d, c] : by_diff)
      if (c.pure) out.push_back(d);
    return out;
  }
  std::vector<int> prime_diffs() const {
    std::vector<int> out;
    for (const auto& [d, c] : by_diff)
      if (c.prime) out.push_back(d);
    return out;
  }
};

}  // namespace starfact
