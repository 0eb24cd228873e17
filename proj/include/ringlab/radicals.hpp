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

#ifndef RINGLAB_RADICALS_HPP
#define RINGLAB_RADICALS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/ideal.hpp"

namespace ringlab {

/// {x : x^k = 0 for some k}. Power iteration; a cycle that never hits zero
/// within |R| steps rules the element out.
inline std::vector<Elem> nilpotents(const FiniteRing& R) {
  std::vector<Elem> out;
  for (Elem x = 0; x < R.order; ++x) {
    Elem a = x;
    for (int k = 0; k <= R.order; ++k) {
      if (a == R.zero) {
        out.push_back(x);
        break;
      }
      a = R.mul(a, x);
    }
  }
  return out;
}

/// Least k with x^k = 0, or 0 when x is not nilpotent.
inline int nilpotency_index(const FiniteRing& R, Elem x) {
  int k = detail::nilpotency_index(R, x);
  return k <= R.order ? k : 0;
}

/// Prime radical as the intersection of all prime ideals. Needs full ideal
/// enumeration, so it only works below the enumeration cap; it is the oracle
/// the m-sequence algorithm is checked against. With no prime ideal at all
/// (the trivial ring) the empty intersection is the whole carrier.
inline std::vector<Elem> lower_nilradical_primes(const RingPtr& R) {
  auto ideals = enumerate_ideals(R);
  std::vector<bool> in(static_cast<size_t>(R->order), true);
  bool any_prime = false;
  for (const auto& P : ideals) {
    if (!is_prime_ideal(P)) continue;
    any_prime = true;
    for (Elem x = 0; x < R->order; ++x)
      if (!P.contains(x)) in[static_cast<size_t>(x)] = false;
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < R->order; ++x)
    if (!any_prime || in[static_cast<size_t>(x)]) out.push_back(x);
  return out;
}

namespace detail {

/// Successor sets of the m-sequence graph: a -> b iff b in aRa, b != 0.
/// The graph is over nonzero elements; index 0 is unused.
inline std::vector<std::vector<Elem>> msequence_graph(const FiniteRing& R) {
  std::vector<std::vector<Elem>> adj(static_cast<size_t>(R.order));
  std::vector<bool> seen(static_cast<size_t>(R.order));
  for (Elem a = 1; a < R.order; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elem r = 0; r < R.order; ++r) {
      Elem b = R.mul(R.mul(a, r), a);
      if (b != R.zero && !seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = true;
        adj[static_cast<size_t>(a)].push_back(b);
      }
    }
  }
  return adj;
}

/// Nodes of the graph that can reach a cycle through nonzero elements.
/// Iterative Tarjan SCC, then reverse reachability from cyclic components.
inline std::vector<bool> reaches_cycle(const std::vector<std::vector<Elem>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> low(n, -1), num(n, -1), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack, comp_of_size;
  int counter = 0, comps = 0;
  std::vector<std::pair<int, size_t>> call;
  for (int s = 1; s < n; ++s) {
    if (num[s] != -1) continue;
    call.push_back({s, 0});
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei == 0) {
        num[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (ei < adj[static_cast<size_t>(v)].size()) {
        int w = adj[static_cast<size_t>(v)][ei++];
        if (num[w] == -1) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        const int done = v;  // copy before the frame is popped
        if (low[done] == num[done]) {
          int size = 0;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comps;
            ++size;
            if (w == done) break;
          }
          comp_of_size.push_back(size);
          ++comps;
        }
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().first;
          low[parent] = std::min(low[parent], low[done]);
        }
      }
    }
  }
  std::vector<bool> cyclic(n, false);
  for (int v = 1; v < n; ++v) {
    if (comp_of_size[static_cast<size_t>(comp[v])] > 1) cyclic[static_cast<size_t>(v)] = true;
    for (int w : adj[static_cast<size_t>(v)])
      if (w == v) cyclic[static_cast<size_t>(v)] = true;  // self-loop
  }
  // reverse reachability from cyclic nodes
  std::vector<std::vector<int>> radj(static_cast<size_t>(n));
  for (int v = 1; v < n; ++v)
    for (int w : adj[static_cast<size_t>(v)]) radj[static_cast<size_t>(w)].push_back(v);
  std::vector<int> work;
  std::vector<bool> reach = cyclic;
  for (int v = 1; v < n; ++v)
    if (reach[static_cast<size_t>(v)]) work.push_back(v);
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    for (int u : radj[static_cast<size_t>(v)])
      if (!reach[static_cast<size_t>(u)]) {
        reach[static_cast<size_t>(u)] = true;
        work.push_back(u);
      }
  }
  return reach;
}

}  // namespace detail

/// Prime radical as the set of strongly nilpotent elements: every m-sequence
/// a0 = a, a_{n+1} in a_n R a_n terminates at 0. On the successor graph this
/// means no nonzero cycle is reachable from a. Works at any table order.
inline std::vector<Elem> lower_nilradical_msequence(const FiniteRing& R) {
  auto adj = detail::msequence_graph(R);
  auto reach = detail::reaches_cycle(adj);
  std::vector<Elem> out{R.zero};
  for (Elem a = 1; a < R.order; ++a)
    if (!reach[static_cast<size_t>(a)]) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

/// Membership test for a single element, sharing the graph machinery.
inline bool is_strongly_nilpotent(const FiniteRing& R, Elem a) {
  if (a == R.zero) return true;
  auto adj = detail::msequence_graph(R);
  auto reach = detail::reaches_cycle(adj);
  return !reach[static_cast<size_t>(a)];
}

/// Upper nilradical: the largest nil ideal, computed as the set of x whose
/// principal two-sided ideal consists of nilpotents. The result is asserted
/// to be a nil ideal before it is returned.
inline std::vector<Elem> upper_nilradical(const RingPtr& R) {
  auto nil = nilpotents(*R);
  std::vector<bool> is_nil(static_cast<size_t>(R->order), false);
  for (Elem x : nil) is_nil[static_cast<size_t>(x)] = true;
  std::vector<Elem> out;
  for (Elem x : nil) {
    Ideal I = ideal_generated_by(R, x);
    bool ok = true;
    for (Elem m : I.members)
      if (!is_nil[static_cast<size_t>(m)]) { ok = false; break; }
    if (ok) out.push_back(x);
  }
  Ideal result(R, out);
  if (!is_ideal(result))
    throw std::logic_error("upper_nilradical: result is not an ideal (bug)");
  return result.members;
}

/// Alternative computation following the sum-of-nil-ideals definition
/// directly: all nil ideals from the enumeration, summed to a fixpoint.
/// Cross-check partner for upper_nilradical; capped like enumerate_ideals.
inline std::vector<Elem> upper_nilradical_by_enumeration(const RingPtr& R) {
  auto nil = nilpotents(*R);
  std::vector<bool> is_nil(static_cast<size_t>(R->order), false);
  for (Elem x : nil) is_nil[static_cast<size_t>(x)] = true;
  Ideal acc(R, {R->zero});
  for (const auto& I : enumerate_ideals(R)) {
    bool isnil = true;
    for (Elem m : I.members)
      if (!is_nil[static_cast<size_t>(m)]) { isnil = false; break; }
    if (isnil) acc = ideal_sum(acc, I);
  }
  for (Elem m : acc.members)
    if (!is_nil[static_cast<size_t>(m)])
      throw std::logic_error("upper_nilradical_by_enumeration: sum is not nil");
  return acc.members;
}

/// N(R), N_*(R), N^*(R) and per-element nilpotency data for one ring.
struct RadicalProfile {
  RingPtr ring;
  std::vector<Elem> nilpotents;        // N(R)
  std::vector<Elem> lower;             // N_*(R)
  std::vector<Elem> upper;             // N^*(R)
  std::vector<int> nilpotency_index;   // per element; 0 = not nilpotent
};

inline RadicalProfile radical_profile(const RingPtr& R) {
  RadicalProfile p;
  p.ring = R;
  p.nilpotents = nilpotents(*R);
  p.lower = lower_nilradical_msequence(*R);
  p.upper = upper_nilradical(R);
  p.nilpotency_index.resize(static_cast<size_t>(R->order), 0);
  for (Elem x : p.nilpotents)
    p.nilpotency_index[static_cast<size_t>(x)] = nilpotency_index(*R, x);
  return p;
}

struct SemicommutativityWitness {
  Elem a = -1, c = -1, b = -1;  // ab = 0 but acb != 0
};

/// ab = 0 implies aRb = 0, with the first failing triple in index order.
inline std::optional<SemicommutativityWitness> semicommutative_witness(
    const FiniteRing& R) {
  for (Elem a = 0; a < R.order; ++a)
    for (Elem b = 0; b < R.order; ++b) {
      if (R.mul(a, b) != R.zero) continue;
      for (Elem c = 0; c < R.order; ++c)
        if (R.mul(R.mul(a, c), b) != R.zero) return SemicommutativityWitness{a, c, b};
    }
  return std::nullopt;
}

struct ClassPredicates {
  bool reduced = false;
  bool semicommutative = false;
  bool two_primal = false;
  bool ni = false;
  bool dedekind_finite = false;
  std::optional<SemicommutativityWitness> semicommutative_failure;
};

inline bool dedekind_finite(const FiniteRing& R) {
  for (Elem a = 0; a < R.order; ++a)
    for (Elem b = 0; b < R.order; ++b)
      if (R.mul(a, b) == R.one && R.mul(b, a) != R.one) return false;
  return true;
}

inline ClassPredicates class_predicates(const RadicalProfile& p) {
  ClassPredicates c;
  const FiniteRing& R = *p.ring;
  c.reduced = p.nilpotents.size() == 1;  // just {0}
  c.semicommutative_failure = semicommutative_witness(R);
  c.semicommutative = !c.semicommutative_failure.has_value();
  c.two_primal = p.lower == p.nilpotents;
  c.ni = p.upper == p.nilpotents;
  c.dedekind_finite = dedekind_finite(R);
  return c;
}

inline ClassPredicates class_predicates(const RingPtr& R) {
  return class_predicates(radical_profile(R));
}

/// Semicommutativity of an ideal viewed as a ring without identity:
/// for a, b in I with ab = 0, aIb = 0.
inline std::optional<SemicommutativityWitness> semicommutative_ideal_witness(
    const Ideal& I) {
  const FiniteRing& R = *I.ring;
  for (Elem a : I.members)
    for (Elem b : I.members) {
      if (R.mul(a, b) != R.zero) continue;
      for (Elem c : I.members)
        if (R.mul(R.mul(a, c), b) != R.zero) return SemicommutativityWitness{a, c, b};
    }
  return std::nullopt;
}

inline bool is_semicommutative_ideal(const Ideal& I) {
  return !semicommutative_ideal_witness(I).has_value();
}

/// Two-primality of an ideal as a rng: the nilpotent elements of I equal the
/// elements strongly nilpotent for products restricted to I (a -> b iff
/// b in aIa).
inline bool is_two_primal_rng(const Ideal& I) {
  const FiniteRing& R = *I.ring;
  const int n = static_cast<int>(I.members.size());
  std::vector<int> pos(static_cast<size_t>(R.order), -1);
  for (int k = 0; k < n; ++k) pos[static_cast<size_t>(I.members[static_cast<size_t>(k)])] = k;
  // nilpotents of I (powers stay inside I, so plain ring powers apply)
  std::vector<bool> nil_in_I(static_cast<size_t>(n), false);
  for (int k = 0; k < n; ++k) {
    Elem x = I.members[static_cast<size_t>(k)];
    Elem a = x;
    for (int t = 0; t <= n + 1; ++t) {
      if (a == R.zero) { nil_in_I[static_cast<size_t>(k)] = true; break; }
      a = R.mul(a, x);
    }
  }
  // restricted m-sequence graph over nonzero members
  std::vector<std::vector<Elem>> adj(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    Elem a = I.members[static_cast<size_t>(k)];
    if (a == R.zero) continue;
    std::set<int> succ;
    for (Elem r : I.members) {
      Elem b = R.mul(R.mul(a, r), a);
      if (b != R.zero) succ.insert(pos[static_cast<size_t>(b)]);
    }
    adj[static_cast<size_t>(k)].assign(succ.begin(), succ.end());
  }
  // reuse cycle reachability on the restricted graph; the zero member is
  // remapped to the unused node 0 and dropped from all edges
  int zero_pos = pos[static_cast<size_t>(R.zero)];
  auto sh = [&](int k) { return k == zero_pos ? 0 : (k < zero_pos ? k + 1 : k); };
  std::vector<std::vector<Elem>> shifted(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    if (k == zero_pos) continue;
    for (int w : adj[static_cast<size_t>(k)])
      if (w != zero_pos) shifted[static_cast<size_t>(sh(k))].push_back(sh(w));
  }
  auto reach = detail::reaches_cycle(shifted);
  for (int k = 0; k < n; ++k) {
    bool strongly = (k == zero_pos) || !reach[static_cast<size_t>(sh(k))];
    if (strongly != nil_in_I[static_cast<size_t>(k)]) return false;
  }
  return true;
}

/// Weak annihilator N_R(X) = {a : xa in N(R) for all x in X}.
inline std::vector<Elem> weak_annihilator(const RingPtr& R, const std::vector<Elem>& X) {
  auto nil = nilpotents(*R);
  std::vector<bool> is_nil(static_cast<size_t>(R->order), false);
  for (Elem x : nil) is_nil[static_cast<size_t>(x)] = true;
  std::vector<Elem> out;
  for (Elem a = 0; a < R->order; ++a) {
    bool ok = true;
    for (Elem x : X)
      if (!is_nil[static_cast<size_t>(R->mul(x, a))]) { ok = false; break; }
    if (ok) out.push_back(a);
  }
  return out;
}

/// The family {N_R(U) : U subset of R}, deduplicated. Since N_R(U) is the
/// intersection of the singleton annihilators over U, the family is the
/// closure of {R} under intersecting with each N_R({x}).
inline std::set<std::vector<Elem>> weak_annihilator_family(const RingPtr& R) {
  std::vector<std::vector<Elem>> singles;
  for (Elem x = 0; x < R->order; ++x) singles.push_back(weak_annihilator(R, {x}));
  std::vector<Elem> all(static_cast<size_t>(R->order));
  for (Elem x = 0; x < R->order; ++x) all[static_cast<size_t>(x)] = x;
  std::set<std::vector<Elem>> family{all};  // N_R(empty) = R
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Elem>> cur(family.begin(), family.end());
    for (const auto& F : cur)
      for (const auto& S : singles) {
        std::vector<Elem> inter;
        std::set_intersection(F.begin(), F.end(), S.begin(), S.end(),
                              std::back_inserter(inter));
        if (family.insert(inter).second) grew = true;
      }
  }
  return family;
}

/// Nilpotent p.p. certificate: for every q outside N(R) a nilpotent s with
/// N_R(q) = sR, or the first q with no such generator.
struct NilpotentPpReport {
  bool holds = true;
  std::map<Elem, Elem> generator;  // q -> s
  std::optional<Elem> failing;
};

inline NilpotentPpReport is_nilpotent_pp(const RingPtr& R) {
  NilpotentPpReport rep;
  auto nil = nilpotents(*R);
  std::vector<bool> is_nil(static_cast<size_t>(R->order), false);
  for (Elem x : nil) is_nil[static_cast<size_t>(x)] = true;
  for (Elem q = 0; q < R->order; ++q) {
    if (is_nil[static_cast<size_t>(q)]) continue;
    auto ann = weak_annihilator(R, {q});
    bool found = false;
    for (Elem s : nil) {
      std::set<Elem> sR;
      for (Elem r = 0; r < R->order; ++r) sR.insert(R->mul(s, r));
      if (std::vector<Elem>(sR.begin(), sR.end()) == ann) {
        rep.generator[q] = s;
        found = true;
        break;
      }
    }
    if (!found) {
      rep.holds = false;
      rep.failing = q;
      return rep;
    }
  }
  return rep;
}

}  // namespace ringlab

#endif  // RINGLAB_RADICALS_HPP
