#pragma once

// Small named structures used across the suites, plus brute-force oracles
// that deliberately avoid the library's enumeration and search code.

#include <cstdint>
#include <vector>

#include "osg/structure.hpp"

namespace osg::testing {

// LZ2: left-zero band xy = x, discrete order.
inline OrderedSemigroup lz2() {
  const std::vector<Element> t = {0, 0, 1, 1};
  return make_structure("LZ2", 2, t, {});
}

// RZ2: right-zero band xy = y, discrete order.
inline OrderedSemigroup rz2() {
  const std::vector<Element> t = {0, 1, 0, 1};
  return make_structure("RZ2", 2, t, {});
}

// CH2: min on the chain 0 < 1.
inline OrderedSemigroup ch2() {
  const std::vector<Element> t = {0, 0, 0, 1};
  const std::vector<std::pair<Element, Element>> le = {{0, 1}};
  return make_structure("CH2", 2, t, le);
}

// CH2 table with the order reversed (1 < 0).
inline OrderedSemigroup ch2_reversed() {
  const std::vector<Element> t = {0, 0, 0, 1};
  const std::vector<std::pair<Element, Element>> le = {{1, 0}};
  return make_structure("CH2r", 2, t, le);
}

// G2: addition mod 2, discrete order.
inline OrderedSemigroup g2() {
  const std::vector<Element> t = {0, 1, 1, 0};
  return make_structure("G2", 2, t, {});
}

// N2: null semigroup xy = 0, discrete order.
inline OrderedSemigroup n2() {
  const std::vector<Element> t = {0, 0, 0, 0};
  return make_structure("N2", 2, t, {});
}

// CH3: min on the chain 0 < 1 < 2.
inline OrderedSemigroup ch3() {
  const std::vector<Element> t = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  const std::vector<std::pair<Element, Element>> le = {{0, 1}, {0, 2}, {1, 2}};
  return make_structure("CH3", 3, t, le);
}

inline Subset set(const OrderedSemigroup& s, std::initializer_list<Element> e) { return Subset::of(s.size(), e); }

// ---- oracles --------------------------------------------------------------

/// All n^(n*n) tables filtered by the associative law, in lexicographic order.
inline std::vector<std::vector<Element>> brute_associative_tables(unsigned n) {
  std::vector<std::vector<Element>> out;
  std::size_t total = 1;
  for (unsigned i = 0; i < n * n; ++i) total *= n;
  std::vector<Element> t(n * n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (unsigned i = n * n; i-- > 0;) {
      t[i] = static_cast<Element>(c % n);
      c /= n;
    }
    bool ok = true;
    for (unsigned a = 0; a < n && ok; ++a)
      for (unsigned b = 0; b < n && ok; ++b)
        for (unsigned d = 0; d < n && ok; ++d) ok = t[t[a * n + b] * n + d] == t[a * n + t[b * n + d]];
    if (ok) out.push_back(t);
  }
  return out;
}

/// All 2^(n*n) relations filtered by the partial-order axioms.
inline std::vector<std::vector<std::uint8_t>> brute_posets(unsigned n) {
  std::vector<std::vector<std::uint8_t>> out;
  for (std::uint32_t code = 0; code < (1u << (n * n)); ++code) {
    std::vector<std::uint8_t> r(n * n);
    for (unsigned i = 0; i < n * n; ++i) r[i] = (code >> i) & 1u;
    bool ok = true;
    for (unsigned a = 0; a < n; ++a) ok = ok && r[a * n + a];
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) {
        if (a != b && r[a * n + b] && r[b * n + a]) ok = false;
        for (unsigned c = 0; c < n; ++c)
          if (r[a * n + b] && r[b * n + c] && !r[a * n + c]) ok = false;
      }
    if (ok) out.push_back(r);
  }
  return out;
}

/// Labeled ordered semigroups of order n: every table x relation pair that
/// validate_structure accepts.
inline std::vector<OrderedSemigroup> brute_labeled_structures(unsigned n) {
  std::vector<OrderedSemigroup> out;
  for (const auto& t : brute_associative_tables(n))
    for (const auto& r : brute_posets(n)) {
      try {
        out.push_back(validate_structure(n, t, r));
      } catch (const Error&) {
      }
    }
  return out;
}

/// Element-level downward closure: t in (H] iff t <= h for some h in H.
inline Mask oracle_closure(const OrderedSemigroup& s, Mask h) {
  Mask out = 0;
  for (Element t = 0; t < s.size(); ++t)
    for (Element x = 0; x < s.size(); ++x)
      if (((h >> x) & 1u) && s.leq(t, x)) out |= Mask{1} << t;
  return out;
}

inline Mask oracle_product(const OrderedSemigroup& s, Mask a, Mask b) {
  Mask out = 0;
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      if (((a >> x) & 1u) && ((b >> y) & 1u)) out |= Mask{1} << s.mul(x, y);
  return out;
}

}  // namespace osg::testing

namespace osg::testing {

inline Mask oracle_power(const OrderedSemigroup& s, unsigned m) {
  const Mask all = Subset::full_mask(s.size());
  Mask acc = all;
  for (unsigned k = 1; k < m; ++k) acc = oracle_product(s, acc, all);
  return acc;
}

/// Ideal predicates written directly from the definitions over masks.
/// kind: 0 left, 1 right, 2 two-sided, 3 quasi, 4 bi, 5 interior, 6 bi-interior.
inline bool oracle_is_ideal(const OrderedSemigroup& s, Mask b, int kind, unsigned m, bool strict = false) {
  auto within = [](Mask x, Mask y) { return (x & ~y) == 0; };
  const Mask sm = oracle_power(s, m);
  const bool closed = oracle_closure(s, b) == b;
  const bool subsg = b != 0 && within(oracle_product(s, b, b), b);
  const bool left = within(oracle_product(s, sm, b), b);
  const bool right = within(oracle_product(s, b, sm), b);
  if (b == 0 || !closed) return false;
  switch (kind) {
    case 0: return subsg && left;
    case 1: return subsg && right;
    case 2: return subsg && left && right;
    case 3: return subsg && within(oracle_closure(s, oracle_product(s, sm, b)) & oracle_closure(s, oracle_product(s, b, sm)), b);
    case 4: return subsg && within(oracle_product(s, oracle_product(s, b, sm), b), b);
    case 5: return subsg && within(oracle_product(s, oracle_product(s, sm, b), sm), b);
    default:
      return (!strict || subsg) &&
             within(oracle_closure(s, oracle_product(s, oracle_product(s, b, sm), b)) &
                        oracle_closure(s, oracle_product(s, oracle_product(s, sm, b), sm)),
                    b);
  }
}

}  // namespace osg::testing
