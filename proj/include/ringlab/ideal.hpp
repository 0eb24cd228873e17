/* Copyright (C) 2026 The ringlab authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef RINGLAB_IDEAL_HPP
#define RINGLAB_IDEAL_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/ring_map.hpp"

namespace ringlab {

/// Carrier sizes past this make full two-sided ideal enumeration
/// impractical; radical computations fall back to the m-sequence method.
inline constexpr int kIdealEnumerationCap = 64;

/// A two-sided ideal of a finite ring, stored as a sorted member list plus
/// a membership mask.
class Ideal {
 public:
  RingPtr ring;
  std::vector<Elem> members;  // sorted, always contains ring->zero

  Ideal() = default;
  Ideal(RingPtr r, std::vector<Elem> ms) : ring(std::move(r)), members(std::move(ms)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    mask_.assign(static_cast<size_t>(ring->order), false);
    for (Elem m : members) mask_[static_cast<size_t>(m)] = true;
  }

  bool contains(Elem x) const { return mask_[static_cast<size_t>(x)]; }
  size_t size() const { return members.size(); }
  bool operator==(const Ideal& o) const { return members == o.members; }
  bool operator<(const Ideal& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
  }

 private:
  std::vector<bool> mask_;
};

/// Checks the two-sided ideal laws: closure under addition and negation,
/// absorption of ring multiplication on both sides, and 0 membership.
inline bool is_ideal(const Ideal& I) {
  const FiniteRing& R = *I.ring;
  if (!I.contains(R.zero)) return false;
  for (Elem a : I.members) {
    if (!I.contains(R.neg(a))) return false;
    for (Elem b : I.members)
      if (!I.contains(R.add(a, b))) return false;
    for (Elem r = 0; r < R.order; ++r)
      if (!I.contains(R.mul(r, a)) || !I.contains(R.mul(a, r))) return false;
  }
  return true;
}

/// Additive subgroup generated by `gens`.
inline std::vector<Elem> additive_closure(const FiniteRing& R, std::vector<Elem> gens) {
  std::vector<bool> in(static_cast<size_t>(R.order), false);
  std::vector<Elem> work;
  auto push = [&](Elem x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = true;
      work.push_back(x);
    }
  };
  push(R.zero);
  for (Elem g : gens) push(g);
  for (size_t i = 0; i < work.size(); ++i) {
    Elem a = work[i];
    push(R.neg(a));
    for (size_t j = 0; j <= i; ++j) push(R.add(a, work[j]));
  }
  std::sort(work.begin(), work.end());
  return work;
}

/// Two-sided ideal generated by one element: the additive span of R x R.
inline Ideal ideal_generated_by(const RingPtr& R, Elem x) {
  std::set<Elem> prods;
  for (Elem r = 0; r < R->order; ++r) {
    Elem rx = R->mul(r, x);
    for (Elem s = 0; s < R->order; ++s) prods.insert(R->mul(rx, s));
  }
  return Ideal(R, additive_closure(*R, {prods.begin(), prods.end()}));
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Elem> gens = I.members;
  gens.insert(gens.end(), J.members.begin(), J.members.end());
  return Ideal(I.ring, additive_closure(*I.ring, std::move(gens)));
}

inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  std::vector<Elem> out;
  for (Elem m : I.members)
    if (J.contains(m)) out.push_back(m);
  return Ideal(I.ring, std::move(out));
}

/// All two-sided ideals: the principal ideals closed under pairwise sums
/// to a fixpoint. Sorted by size then lexicographic membership; includes
/// {0} and R. Throws past the enumeration cap.
inline std::vector<Ideal> enumerate_ideals(const RingPtr& R) {
  if (R->order > kIdealEnumerationCap)
    throw std::invalid_argument(
        "enumerate_ideals: order " + std::to_string(R->order) +
        " exceeds cap " + std::to_string(kIdealEnumerationCap) +
        "; use the m-sequence radical instead");
  std::set<Ideal> found;
  found.insert(Ideal(R, {R->zero}));
  for (Elem x = 0; x < R->order; ++x) found.insert(ideal_generated_by(R, x));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Ideal> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Ideal s = ideal_sum(cur[i], cur[j]);
        if (found.insert(s).second) grew = true;
      }
  }
  return {found.begin(), found.end()};
}

/// Two-sided primality: P proper and aRb <= P forces a in P or b in P.
inline bool is_prime_ideal(const Ideal& P) {
  const FiniteRing& R = *P.ring;
  if (P.size() == static_cast<size_t>(R.order)) return false;
  for (Elem a = 0; a < R.order; ++a) {
    if (P.contains(a)) continue;
    for (Elem b = 0; b < R.order; ++b) {
      if (P.contains(b)) continue;
      bool inside = true;
      for (Elem r = 0; r < R.order && inside; ++r)
        if (!P.contains(R.mul(R.mul(a, r), b))) inside = false;
      if (inside) return false;  // aRb <= P with a, b outside
    }
  }
  return true;
}

/// Quotient ring R/I together with the projection map. Coset representatives
/// are the minimal member of each coset, re-indexed in increasing order.
struct QuotientResult {
  RingPtr ring;
  RingMap projection;
};

inline QuotientResult quotient(const RingPtr& R, const Ideal& I) {
  if (!is_ideal(I)) throw std::invalid_argument("quotient: not an ideal of R");
  const int n = R->order;
  std::vector<Elem> rep(static_cast<size_t>(n), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (rep[static_cast<size_t>(x)] != -1) continue;
    reps.push_back(x);
    for (Elem i : I.members) rep[static_cast<size_t>(R->add(x, i))] = x;
  }
  std::vector<Elem> index_of(static_cast<size_t>(n), -1);
  for (size_t k = 0; k < reps.size(); ++k) index_of[static_cast<size_t>(reps[k])] = static_cast<Elem>(k);
  auto cls = [&](Elem x) { return index_of[static_cast<size_t>(rep[static_cast<size_t>(x)])]; };

  std::vector<std::string> labels(reps.size());
  for (size_t k = 0; k < reps.size(); ++k) labels[k] = R->label(reps[k]) + "+I";
  auto q = make_ring(
      R->name + "/I", static_cast<int>(reps.size()),
      [&](Elem a, Elem b) { return cls(R->add(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)])); },
      [&](Elem a, Elem b) { return cls(R->mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)])); },
      cls(R->zero), cls(R->one), std::move(labels));

  RingMap proj;
  proj.source = R;
  proj.target = q;
  proj.table.resize(static_cast<size_t>(n));
  for (Elem x = 0; x < n; ++x) proj.table[static_cast<size_t>(x)] = cls(x);
  return {q, std::move(proj)};
}

}  // namespace ringlab

#endif  // RINGLAB_IDEAL_HPP
