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

#ifndef RINGLAB_FINITE_RING_HPP
#define RINGLAB_FINITE_RING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

/// Element of a finite ring, identified by its index in the carrier 0..order-1.
using Elem = int;

/// Largest carrier size for which operation tables are materialized.
inline constexpr int kMaxRingOrder = 4096;

/// A finite associative unital ring given by exact operation tables over
/// an indexed carrier {0, ..., order-1}. Values are immutable once built
/// and safe to share across threads.
class FiniteRing {
 public:
  std::string name;
  int order = 0;
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::string> labels;

  FiniteRing() = default;
  FiniteRing(std::string nm, int ord, Elem z, Elem o)
      : name(std::move(nm)), order(ord), zero(z), one(o) {
    if (ord < 1 || ord > kMaxRingOrder)
      throw std::invalid_argument("FiniteRing: order out of range: " +
                                  std::to_string(ord));
    add_.assign(static_cast<size_t>(ord) * ord, 0);
    mul_.assign(static_cast<size_t>(ord) * ord, 0);
    neg_.assign(static_cast<size_t>(ord), 0);
  }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[static_cast<size_t>(a)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  /// a^k for k >= 1 by repeated multiplication.
  Elem pow(Elem a, int k) const {
    Elem r = a;
    for (int i = 1; i < k; ++i) r = mul(r, a);
    return r;
  }

  void set_add(Elem a, Elem b, Elem c) { add_[idx(a, b)] = static_cast<uint16_t>(c); }
  void set_mul(Elem a, Elem b, Elem c) { mul_[idx(a, b)] = static_cast<uint16_t>(c); }

  /// Recomputes the negation table from the addition table. Fails if some
  /// element has no additive inverse.
  void finalize() {
    for (Elem a = 0; a < order; ++a) {
      bool found = false;
      for (Elem b = 0; b < order; ++b)
        if (add(a, b) == zero) {
          neg_[static_cast<size_t>(a)] = static_cast<uint16_t>(b);
          found = true;
          break;
        }
      if (!found)
        throw std::invalid_argument("FiniteRing " + name +
                                    ": element without additive inverse");
    }
    if (labels.empty()) {
      labels.resize(static_cast<size_t>(order));
      for (Elem a = 0; a < order; ++a) labels[static_cast<size_t>(a)] = std::to_string(a);
    }
  }

  bool is_commutative() const {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = a + 1; b < order; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  const std::string& label(Elem a) const { return labels[static_cast<size_t>(a)]; }

 private:
  size_t idx(Elem a, Elem b) const {
    return static_cast<size_t>(a) * order + static_cast<size_t>(b);
  }
  std::vector<uint16_t> add_, mul_;
  std::vector<uint16_t> neg_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Builds a ring by tabulating the given operation callbacks.
inline RingPtr make_ring(std::string name, int order,
                         const std::function<Elem(Elem, Elem)>& add,
                         const std::function<Elem(Elem, Elem)>& mul, Elem zero,
                         Elem one, std::vector<std::string> labels = {}) {
  auto r = std::make_shared<FiniteRing>(std::move(name), order, zero, one);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b) {
      r->set_add(a, b, add(a, b));
      r->set_mul(a, b, mul(a, b));
    }
  r->labels = std::move(labels);
  r->finalize();
  return r;
}

/// The ring of integers modulo n. Rejects n = 0.
inline RingPtr make_zmod(int n) {
  if (n < 1) throw std::invalid_argument("make_zmod: n must be >= 1");
  return make_ring(
      "z" + std::to_string(n), n, [n](Elem a, Elem b) { return (a + b) % n; },
      [n](Elem a, Elem b) { return int((long(a) * b) % n); }, 0, n == 1 ? 0 : 1);
}

/// The one-element zero ring.
inline RingPtr trivial_ring() {
  return make_ring("triv", 1, [](Elem, Elem) { return 0; },
                   [](Elem, Elem) { return 0; }, 0, 0);
}

/// Componentwise product of rings. Element index is mixed-radix over the
/// factors, first factor least significant.
inline RingPtr direct_product(const std::vector<RingPtr>& factors,
                              std::string name = "") {
  if (factors.empty())
    throw std::invalid_argument("direct_product: empty factor list");
  long order = 1;
  for (const auto& f : factors) {
    order *= f->order;
    if (order > kMaxRingOrder)
      throw std::invalid_argument("direct_product: order cap exceeded");
  }
  auto split = [&](Elem x) {
    std::vector<Elem> c(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
      c[i] = x % factors[i]->order;
      x /= factors[i]->order;
    }
    return c;
  };
  auto join = [&](const std::vector<Elem>& c) {
    Elem x = 0;
    for (size_t i = factors.size(); i-- > 0;) x = x * factors[i]->order + c[i];
    return x;
  };
  if (name.empty()) {
    for (size_t i = 0; i < factors.size(); ++i)
      name += (i ? "x" : "") + factors[i]->name;
  }
  std::vector<std::string> labels(static_cast<size_t>(order));
  for (Elem x = 0; x < order; ++x) {
    auto c = split(x);
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i)
      s += (i ? "," : "") + factors[i]->label(c[i]);
    labels[static_cast<size_t>(x)] = s + ")";
  }
  std::vector<Elem> onec(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) onec[i] = factors[i]->one;
  return make_ring(
      std::move(name), static_cast<int>(order),
      [&](Elem a, Elem b) {
        auto ca = split(a), cb = split(b);
        for (size_t i = 0; i < factors.size(); ++i) ca[i] = factors[i]->add(ca[i], cb[i]);
        return join(ca);
      },
      [&](Elem a, Elem b) {
        auto ca = split(a), cb = split(b);
        for (size_t i = 0; i < factors.size(); ++i) ca[i] = factors[i]->mul(ca[i], cb[i]);
        return join(ca);
      },
      0, join(onec), std::move(labels));
}

/// Projection of a product-ring element onto factor `i`, for products built
/// by direct_product with the given factor orders.
inline Elem product_component(const std::vector<int>& factor_orders, Elem x, size_t i) {
  for (size_t k = 0; k < i; ++k) x /= factor_orders[k];
  return x % factor_orders[i];
}

/// One violated ring law with a witness triple (unused slots are -1).
struct AxiomViolation {
  std::string law;
  Elem a = -1, b = -1, c = -1;
};

/// Scans the operation tables for the ring laws. Returns the empty report
/// iff the tables describe an associative unital ring. Orders above
/// `full_scan_cap` are checked on a deterministic sample of triples so the
/// check stays usable on the largest table rings.
inline std::vector<AxiomViolation> check_ring_axioms(const FiniteRing& r,
                                                     int full_scan_cap = 512) {
  std::vector<AxiomViolation> out;
  const int n = r.order;
  auto bad = [&](const char* law, Elem a, Elem b, Elem c) {
    out.push_back({law, a, b, c});
    return out.size() >= 16;  // cap the report, repairs start from the first
  };
  for (Elem a = 0; a < n && out.empty(); ++a) {
    if (r.add(r.zero, a) != a || r.add(a, r.zero) != a) {
      bad("additive-identity", a, -1, -1);
      break;
    }
    if (r.add(a, r.neg(a)) != r.zero) {
      bad("additive-inverse", a, -1, -1);
      break;
    }
    if (r.mul(r.one, a) != a || r.mul(a, r.one) != a) {
      bad("multiplicative-identity", a, -1, -1);
      break;
    }
  }
  if (!out.empty()) return out;
  if (n > 1 && r.zero == r.one) {
    bad("zero-equals-one", r.zero, -1, -1);
    return out;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a)) {
        bad("additive-commutativity", a, b, -1);
        return out;
      }

  auto check_triple = [&](Elem a, Elem b, Elem c) -> bool {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
      return bad("additive-associativity", a, b, c);
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
      return bad("multiplicative-associativity", a, b, c);
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
      return bad("left-distributivity", a, b, c);
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
      return bad("right-distributivity", a, b, c);
    return false;
  };

  if (n <= full_scan_cap) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (check_triple(a, b, c)) return out;
  } else {
    // xorshift-seeded sample, deterministic across runs
    uint64_t s = 0x9e3779b97f4a7c15ull ^ (uint64_t)n;
    auto next = [&s]() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    };
    const long samples = 2'000'000;
    for (long i = 0; i < samples; ++i) {
      Elem a = static_cast<Elem>(next() % n);
      Elem b = static_cast<Elem>(next() % n);
      Elem c = static_cast<Elem>(next() % n);
      if (check_triple(a, b, c)) return out;
    }
  }
  return out;
}

}  // namespace ringlab

#endif  // RINGLAB_FINITE_RING_HPP
