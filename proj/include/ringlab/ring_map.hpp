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

#ifndef RINGLAB_RING_MAP_HPP
#define RINGLAB_RING_MAP_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// A unital ring homomorphism given by its full value table.
struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[static_cast<size_t>(x)]; }

  bool is_identity() const {
    for (size_t i = 0; i < table.size(); ++i)
      if (table[i] != static_cast<Elem>(i)) return false;
    return source == target;
  }
};

inline RingMap identity_map(const RingPtr& R) {
  RingMap m;
  m.source = R;
  m.target = R;
  m.table.resize(static_cast<size_t>(R->order));
  for (Elem x = 0; x < R->order; ++x) m.table[static_cast<size_t>(x)] = x;
  return m;
}

inline RingMap compose(const RingMap& g, const RingMap& f) {
  RingMap m;
  m.source = f.source;
  m.target = g.target;
  m.table.resize(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i) m.table[i] = g(f.table[i]);
  return m;
}

/// Checks preservation of add, mul, zero and one over the full table.
inline bool is_homomorphism(const RingMap& f) {
  const FiniteRing& S = *f.source;
  const FiniteRing& T = *f.target;
  if (f.table.size() != static_cast<size_t>(S.order)) return false;
  if (f(S.zero) != T.zero || f(S.one) != T.one) return false;
  for (Elem a = 0; a < S.order; ++a)
    for (Elem b = 0; b < S.order; ++b) {
      if (f(S.add(a, b)) != T.add(f(a), f(b))) return false;
      if (f(S.mul(a, b)) != T.mul(f(a), f(b))) return false;
    }
  return true;
}

inline bool is_injective(const RingMap& f) {
  std::vector<bool> seen(static_cast<size_t>(f.target->order), false);
  for (Elem y : f.table) {
    if (seen[static_cast<size_t>(y)]) return false;
    seen[static_cast<size_t>(y)] = true;
  }
  return true;
}

namespace detail {

/// Additive order of x: least k >= 1 with k*x = 0.
inline int additive_order(const FiniteRing& R, Elem x) {
  Elem a = x;
  int k = 1;
  while (a != R.zero) {
    a = R.add(a, x);
    ++k;
  }
  return k;
}

/// Least k >= 1 with x^k = 0, or 0 when x is not nilpotent.
inline int nilpotency_index(const FiniteRing& R, Elem x) {
  if (x == R.zero) return 1;
  Elem a = x;
  for (int k = 1; k <= R.order; ++k) {
    if (a == R.zero) return k;
    a = R.mul(a, x);
  }
  return a == R.zero ? R.order + 1 : 0;
}

struct IsoSearch {
  const FiniteRing& R;
  const FiniteRing& S;
  std::vector<Elem> gens;          // generators of R, in closure order
  std::vector<Elem> img;           // partial map R -> S, -1 = unset
  std::vector<bool> used;          // elements of S already hit
  long nodes = 0;
  long node_budget;
  bool budget_hit = false;

  IsoSearch(const FiniteRing& r, const FiniteRing& s, long budget)
      : R(r), S(s), img(static_cast<size_t>(r.order), -1),
        used(static_cast<size_t>(s.order), false), node_budget(budget) {}

  // Extends the partial map by the ring closure of the newly assigned
  // generator. Returns the list of assignments made, or nullopt on clash.
  std::optional<std::vector<Elem>> close(std::vector<Elem> frontier) {
    std::vector<Elem> assigned;
    auto set = [&](Elem x, Elem y) -> bool {
      Elem cur = img[static_cast<size_t>(x)];
      if (cur != -1) return cur == y;
      if (used[static_cast<size_t>(y)]) return false;
      img[static_cast<size_t>(x)] = y;
      used[static_cast<size_t>(y)] = true;
      assigned.push_back(x);
      frontier.push_back(x);
      return true;
    };
    auto undo = [&]() {
      for (Elem x : assigned) {
        used[static_cast<size_t>(img[static_cast<size_t>(x)])] = false;
        img[static_cast<size_t>(x)] = -1;
      }
    };
    std::vector<Elem> domain;
    for (Elem x = 0; x < R.order; ++x)
      if (img[static_cast<size_t>(x)] != -1) domain.push_back(x);
    for (size_t i = 0; i < frontier.size(); ++i) {
      Elem x = frontier[i];
      Elem fx = img[static_cast<size_t>(x)];
      if (!set(R.neg(x), S.neg(fx))) { undo(); return std::nullopt; }
      // refresh the known domain lazily
      domain.clear();
      for (Elem d = 0; d < R.order; ++d)
        if (img[static_cast<size_t>(d)] != -1) domain.push_back(d);
      for (Elem d : domain) {
        Elem fd = img[static_cast<size_t>(d)];
        if (!set(R.add(x, d), S.add(fx, fd)) || !set(R.add(d, x), S.add(fd, fx)) ||
            !set(R.mul(x, d), S.mul(fx, fd)) || !set(R.mul(d, x), S.mul(fd, fx))) {
          undo();
          return std::nullopt;
        }
      }
    }
    return assigned;
  }

  bool dfs(size_t gi) {
    if (++nodes > node_budget) {
      budget_hit = true;
      return false;
    }
    if (gi == gens.size()) {
      for (Elem x = 0; x < R.order; ++x)
        if (img[static_cast<size_t>(x)] == -1) return false;
      return true;
    }
    Elem g = gens[gi];
    if (img[static_cast<size_t>(g)] != -1) return dfs(gi + 1);
    // a unital isomorphism must send one to one
    const Elem y_begin = (g == R.one) ? S.one : 0;
    const Elem y_end = (g == R.one) ? S.one + 1 : S.order;
    for (Elem y = y_begin; y < y_end; ++y) {
      if (used[static_cast<size_t>(y)]) continue;
      if (additive_order(R, g) != additive_order(S, y)) continue;
      if (nilpotency_index(R, g) != nilpotency_index(S, y)) continue;
      img[static_cast<size_t>(g)] = y;
      used[static_cast<size_t>(y)] = true;
      auto extra = close({g});
      if (extra) {
        if (dfs(gi + 1)) return true;
        for (Elem x : *extra) {
          used[static_cast<size_t>(img[static_cast<size_t>(x)])] = false;
          img[static_cast<size_t>(x)] = -1;
        }
      }
      used[static_cast<size_t>(y)] = false;
      img[static_cast<size_t>(g)] = -1;
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace detail

struct IsoResult {
  std::optional<RingMap> map;  // present iff an isomorphism was found
  bool budget_exceeded = false;
};

/// Backtracking search for a ring isomorphism R -> S over generator images,
/// pruned by additive order and nilpotency index. A search-budget overrun is
/// reported distinctly from a definite "no isomorphism".
inline IsoResult find_isomorphism(const RingPtr& R, const RingPtr& S,
                                  long node_budget = 2'000'000) {
  if (R->order != S->order) return {std::nullopt, false};
  detail::IsoSearch search(*R, *S, node_budget);
  // greedy generating set: keep adding the least element outside the closure
  std::vector<bool> closed(static_cast<size_t>(R->order), false);
  auto grow = [&](Elem g) {
    std::vector<Elem> work{g};
    closed[static_cast<size_t>(g)] = true;
    std::vector<Elem> all;
    for (Elem x = 0; x < R->order; ++x)
      if (closed[static_cast<size_t>(x)]) all.push_back(x);
    for (size_t i = 0; i < work.size(); ++i) {
      Elem x = work[i];
      auto push = [&](Elem z) {
        if (!closed[static_cast<size_t>(z)]) {
          closed[static_cast<size_t>(z)] = true;
          work.push_back(z);
          all.push_back(z);
        }
      };
      push(R->neg(x));
      for (Elem d : all) {
        push(R->add(x, d));
        push(R->mul(x, d));
        push(R->mul(d, x));
      }
    }
  };
  closed[static_cast<size_t>(R->zero)] = true;
  search.gens.push_back(R->one);
  grow(R->one);
  for (Elem x = 0; x < R->order; ++x)
    if (!closed[static_cast<size_t>(x)]) {
      search.gens.push_back(x);
      grow(x);
    }
  search.img[static_cast<size_t>(R->zero)] = S->zero;
  search.used[static_cast<size_t>(S->zero)] = true;

  if (search.dfs(0)) {
    RingMap m;
    m.source = R;
    m.target = S;
    m.table = search.img;
    return {std::move(m), false};
  }
  return {std::nullopt, search.budget_hit};
}

/// Smallest subset of R containing `gens` (plus one, when requested) closed
/// under addition, negation and multiplication, re-indexed as a ring.
/// The closure must contain a two-sided multiplicative identity of its own;
/// otherwise the subset is a rng only and this throws.
struct SubringResult {
  RingPtr ring;
  RingMap inclusion;           // subring index -> ambient index
  std::vector<Elem> elements;  // ambient carrier, sorted
};

inline SubringResult subring_generated(const RingPtr& R, std::vector<Elem> gens,
                                       bool with_one) {
  if (with_one) gens.push_back(R->one);
  std::vector<bool> in(static_cast<size_t>(R->order), false);
  std::vector<Elem> work;
  auto push = [&](Elem x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = true;
      work.push_back(x);
    }
  };
  push(R->zero);
  for (Elem g : gens) push(g);
  for (size_t i = 0; i < work.size(); ++i) {
    Elem x = work[i];
    push(R->neg(x));
    for (size_t j = 0; j <= i; ++j) {
      push(R->add(x, work[j]));
      push(R->mul(x, work[j]));
      push(R->mul(work[j], x));
    }
  }
  std::sort(work.begin(), work.end());
  std::vector<Elem> back(static_cast<size_t>(R->order), -1);
  for (size_t k = 0; k < work.size(); ++k) back[static_cast<size_t>(work[k])] = static_cast<Elem>(k);

  Elem ident = -1;
  for (Elem e : work) {
    bool ok = true;
    for (Elem x : work)
      if (R->mul(e, x) != x || R->mul(x, e) != x) { ok = false; break; }
    if (ok) { ident = e; break; }
  }
  if (ident == -1)
    throw std::invalid_argument("subring_generated: closure of " + R->name +
                                " generators has no multiplicative identity");

  std::vector<std::string> labels(work.size());
  for (size_t k = 0; k < work.size(); ++k) labels[k] = R->label(work[k]);
  auto sub = make_ring(
      R->name + ".sub", static_cast<int>(work.size()),
      [&](Elem a, Elem b) { return back[static_cast<size_t>(R->add(work[static_cast<size_t>(a)], work[static_cast<size_t>(b)]))]; },
      [&](Elem a, Elem b) { return back[static_cast<size_t>(R->mul(work[static_cast<size_t>(a)], work[static_cast<size_t>(b)]))]; },
      back[static_cast<size_t>(R->zero)], back[static_cast<size_t>(ident)], std::move(labels));
  RingMap incl;
  incl.source = sub;
  incl.target = R;
  incl.table = work;
  return {sub, std::move(incl), work};
}

/// Central localization at a multiplicatively closed set of central regular
/// elements. Over a finite ring every regular element is already invertible
/// (left multiplication is injective, hence onto), so the localization
/// collapses onto R itself; the result records the collapse and the inverse
/// of each denominator.
struct LocalizationResult {
  RingPtr ring;                 // = the input ring
  RingMap canonical;            // identity embedding
  std::vector<Elem> inverses;   // inverse per denominator, parallel to set
  bool collapsed = true;
};

inline LocalizationResult localization(const RingPtr& R, const std::vector<Elem>& S) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("localization: " + why);
  };
  std::vector<bool> in(static_cast<size_t>(R->order), false);
  for (Elem s : S) in[static_cast<size_t>(s)] = true;
  if (!in[static_cast<size_t>(R->one)]) fail("set must contain one");
  for (Elem s : S) {
    for (Elem x = 0; x < R->order; ++x) {
      if (R->mul(s, x) != R->mul(x, s)) fail("element " + R->label(s) + " is not central");
      if (x != R->zero && (R->mul(s, x) == R->zero || R->mul(x, s) == R->zero))
        fail("element " + R->label(s) + " is a zero divisor, not regular");
    }
    for (Elem t : S)
      if (!in[static_cast<size_t>(R->mul(s, t))]) fail("set is not multiplicatively closed");
  }
  LocalizationResult out;
  out.ring = R;
  out.canonical = identity_map(R);
  out.inverses.reserve(S.size());
  for (Elem s : S) {
    Elem inv = -1;
    for (Elem x = 0; x < R->order; ++x)
      if (R->mul(s, x) == R->one) { inv = x; break; }
    if (inv == -1) fail("regular element with no inverse (not a finite ring?)");
    out.inverses.push_back(inv);
  }
  return out;
}

}  // namespace ringlab

#endif  // RINGLAB_RING_MAP_HPP
