#pragma once

// Lifting an almost 5-star factor on g points to a spanning 5-star factor on
// v = 6g points, and developing that base block by +6 (mod v).

#include <algorithm>
#include <string>
#include <vector>

#include "starfact/base_factor.hpp"
#include "starfact/core.hpp"

namespace starfact {

enum class Provenance { pure_lift, mixed_lift, prime_lift, patch, direct };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::pure_lift: return "pure";
    case Provenance::mixed_lift: return "mixed";
    case Provenance::prime_lift: return "prime";
    case Provenance::patch: return "patch";
    case Provenance::direct: return "direct";
  }
  return "?";
}

struct BaseBlock {
  int v = 0;
  std::vector<Star> stars;
  std::vector<Provenance> provenance;  // parallel to stars
};

inline void check_copy_index(int i) {
  if (i < 0 || i > 5)
    throw std::out_of_range("lift copy index must lie in 0..5, got " + std::to_string(i));
}

/// (c; l1..l5) -> (6c+i; 6l1+i, ..., 6l5+i).
inline Star lift_pure(const Star& s, int i) {
  check_copy_index(i);
  Star out{6 * s.center + i, {}};
  for (Vertex l : s.leaves) out.leaves.push_back(6 * l + i);
  return out;
}

/// Pure leaves lift as in lift_pure; the two prime leaves (in listed order)
/// take residues (i+1) mod 6 and (i+2) mod 6.
inline Star lift_mixed(const LabeledStar& ms, int i) {
  check_copy_index(i);
  const std::vector<Vertex> pure = ms.leaves_with(EdgeLabel::pure);
  const std::vector<Vertex> prime = ms.leaves_with(EdgeLabel::prime);
  if (ms.labels.size() != ms.leaves.size() || pure.size() != 3 || prime.size() != 2) {
    throw StarfactError(StarfactError::Kind::malformed_star,
                        "mixed star centred at " + std::to_string(ms.center) +
                            " must have 3 pure and 2 prime leaves");
  }
  Star out{6 * ms.center + i, {}};
  for (Vertex l : pure) out.leaves.push_back(6 * l + i);
  out.leaves.push_back(6 * prime[0] + (i + 1) % 6);
  out.leaves.push_back(6 * prime[1] + (i + 2) % 6);
  return out;
}

/// (c'; l1'..l5') -> (6c'+i; 6lj'+((j+i) mod 6)) for slots j = 1..5.
inline Star lift_prime(const Star& p, int i) {
  check_copy_index(i);
  Star out{6 * p.center + i, {}};
  for (std::size_t k = 0; k < p.leaves.size(); ++k)
    out.leaves.push_back(6 * p.leaves[k] + (static_cast<int>(k) + 1 + i) % 6);
  return out;
}

namespace detail {

inline std::vector<Vertex> isolated_of(int t, const std::optional<Star>& little,
                                       const std::vector<Vertex>& isolated) {
  std::vector<Vertex> xs = isolated;
  if (little) {
    xs = little->leaves;
    xs.push_back(little->center);
  }
  std::sort(xs.begin(), xs.end());
  if (static_cast<int>(xs.size()) != t) {
    throw StarfactError(StarfactError::Kind::malformed_star,
                        "patch for t=" + std::to_string(t) + " needs " + std::to_string(t) +
                            " excluded vertices, got " + std::to_string(xs.size()));
  }
  return xs;
}

inline Star block(Vertex c, std::initializer_list<Vertex> ls) { return {c, ls}; }

}  // namespace detail

/// Patch stars exactly as listed in the construction, for t = 0..5, from the
/// ascending excluded vertices x1 < x2 < ... . The t=2 second star uses leaf
/// 6x2 (the listed 6x2+1 is already taken by the first star).
inline std::vector<Star> patch_stars_as_printed(int t, const std::vector<Vertex>& xs) {
  using detail::block;
  if (static_cast<int>(xs.size()) != t || t < 0 || t > 5)
    throw StarfactError(StarfactError::Kind::malformed_star,
                        "patch for t=" + std::to_string(t) + " got " + std::to_string(xs.size()) +
                            " excluded vertices");
  if (t == 0) return {};
  const Vertex a = 6 * xs[0];
  if (t == 1) return {block(a, {a + 1, a + 2, a + 3, a + 4, a + 5})};
  const Vertex b = 6 * xs[1];
  std::vector<Star> out{block(a, {b + 1, b + 2, b + 3, b + 4, b + 5})};
  if (t == 2) {
    out.push_back(block(a + 1, {a + 2, a + 3, a + 4, a + 5, b}));
    return out;
  }
  const Vertex c = 6 * xs[2];
  if (t == 3) {
    out.push_back(block(a + 1, {c, c + 2, c + 3, c + 4, c + 5}));
    out.push_back(block(a + 2, {a + 3, a + 4, a + 5, b, c + 1}));
    return out;
  }
  const Vertex d = 6 * xs[3];
  if (t == 4) {
    out.push_back(block(a + 1, {c + 2, c + 3, c + 4, c + 5, c}));
    out.push_back(block(a + 2, {d + 3, d + 4, d + 5, d, d + 1}));
    out.push_back(block(a + 3, {a + 4, a + 5, b, c + 1, d + 2}));
    return out;
  }
  const Vertex e = 6 * xs[4];
  out.push_back(block(a + 1, {c, c + 2, c + 3, c + 4, c + 5}));
  out.push_back(block(a + 2, {d, d + 1, d + 3, d + 4, d + 5}));
  out.push_back(block(a + 3, {e, e + 1, e + 2, e + 4, e + 5}));
  out.push_back(block(a + 4, {a + 5, b, c + 1, d + 2, e + 3}));
  return out;
}

/// Patch stars covering the 6t lifted excluded vertices. For t=3 with
/// 2(x3-x1)+1 = g, the listed second star would contain the edge
/// {6x1+1, 6x3+4} of difference 3g = v/2; that layout is replaced by one
/// whose stars avoid the half-period difference.
inline std::vector<Star> patch_stars(int t, const std::vector<Vertex>& xs, int g) {
  using detail::block;
  if (t == 3 && xs.size() == 3 && 2 * (xs[2] - xs[0]) + 1 == g) {
    const Vertex a = 6 * xs[0];
    const Vertex b = 6 * xs[1];
    const Vertex c = 6 * xs[2];
    return {block(a, {b + 1, b + 2, b + 3, b + 4, b + 5}),
            block(a + 1, {a + 2, a + 4, a + 5, b, c + 3}),
            block(a + 3, {c + 4, c + 5, c + 2, c + 1, c})};
  }
  return patch_stars_as_printed(t, xs);
}

/// Throws lift_defect naming the first uncovered or doubly covered vertex.
inline void check_partition(const std::vector<Star>& stars, int v) {
  std::vector<int> hits(v, 0);
  for (const Star& s : stars) {
    auto hit = [&](Vertex x) {
      if (x < 0 || x >= v)
        throw StarfactError(StarfactError::Kind::lift_defect,
                            "vertex " + std::to_string(x) + " outside Z_" + std::to_string(v));
      if (++hits[x] == 2)
        throw StarfactError(StarfactError::Kind::lift_defect,
                            "vertex " + std::to_string(x) + " covered twice (star " +
                                to_string(s) + ")");
    };
    hit(s.center);
    for (Vertex l : s.leaves) hit(l);
  }
  for (Vertex x = 0; x < v; ++x)
    if (hits[x] == 0)
      throw StarfactError(StarfactError::Kind::lift_defect,
                          "vertex " + std::to_string(x) + " not covered");
}

inline BaseBlock build_base_block(const AlmostStarFactor& f) {
  BaseBlock b;
  b.v = 6 * f.g;
  auto add = [&](Star s, Provenance p) {
    b.stars.push_back(std::move(s));
    b.provenance.push_back(p);
  };
  for (const Star& s : f.pure_stars)
    for (int i = 0; i < 6; ++i) add(lift_pure(s, i), Provenance::pure_lift);
  if (f.mixed_star)
    for (int i = 0; i < 6; ++i) add(lift_mixed(*f.mixed_star, i), Provenance::mixed_lift);
  for (const Star& s : f.prime_stars)
    for (int i = 0; i < 6; ++i) add(lift_prime(s, i), Provenance::prime_lift);
  const std::vector<Vertex> xs = detail::isolated_of(f.t, f.little_star, f.isolated);
  for (Star& s : patch_stars(f.t, xs, f.g)) add(std::move(s), Provenance::patch);

  check_partition(b.stars, b.v);
  for (const Star& s : b.stars)
    for (Vertex l : s.leaves)
      if (2 * edge_difference(s.center, l, b.v).diff == b.v)
        throw StarfactError(StarfactError::Kind::lift_defect,
                            "star " + to_string(s) + " uses the half-period difference " +
                                std::to_string(b.v / 2));
  return b;
}

/// Translate a star by `shift` modulo v.
inline Star translate(const Star& s, int shift, int v) {
  auto mv = [&](Vertex x) { return static_cast<Vertex>(((x + shift) % v + v) % v); };
  Star out{mv(s.center), {}};
  out.leaves.reserve(s.leaves.size());
  for (Vertex l : s.leaves) out.leaves.push_back(mv(l));
  return out;
}

/// Factors block + 6j (mod v) for j = 0..count-1.
inline std::vector<Factor> develop(const std::vector<Star>& block, int v, int count) {
  if (count < 0 || 6 * count > v)
    throw std::invalid_argument("develop count must satisfy 0 <= 6*count <= v");
  std::vector<Factor> out(count);
  for (int j = 0; j < count; ++j) {
    out[j].stars.reserve(block.size());
    for (const Star& s : block) out[j].stars.push_back(translate(s, 6 * j, v));
  }
  return out;
}

}  // namespace starfact
