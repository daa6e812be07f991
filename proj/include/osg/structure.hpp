#pragma once

// Finite ordered semigroups and the subset algebra over them.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "osg/errors.hpp"

namespace osg {

inline constexpr unsigned kMaxSize = 12;
inline constexpr unsigned kMaxPotency = 8;

using Element = unsigned;
using Mask = std::uint32_t;

/// A subset of a structure's universe, stored as a bit vector. The width is
/// kept so that a subset built for one structure is rejected by another.
class Subset {
 public:
  Subset() = default;
  Subset(unsigned width, Mask bits);

  static Subset empty(unsigned width) { return Subset(width, 0); }
  static Subset full(unsigned width);
  static Subset singleton(unsigned width, Element a);
  static Subset of(unsigned width, std::initializer_list<Element> elems);

  unsigned width() const noexcept { return width_; }
  Mask bits() const noexcept { return bits_; }
  bool empty() const noexcept { return bits_ == 0; }
  unsigned count() const noexcept;
  bool contains(Element a) const noexcept { return a < width_ && ((bits_ >> a) & 1U); }
  bool is_full() const noexcept { return bits_ == full_mask(width_); }

  bool subset_of(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;

  std::vector<Element> elements() const;
  /// "{0,2}" style rendering.
  std::string str() const;

  bool operator==(const Subset&) const = default;
  auto operator<=>(const Subset& other) const { return bits_ <=> other.bits_; }

  static Mask full_mask(unsigned width) noexcept { return width >= 32 ? ~Mask{0} : (Mask{1} << width) - 1; }

 private:
  void check_width(const Subset& other) const;

  unsigned width_ = 0;
  Mask bits_ = 0;
};

/// The exponent m in S^m.
class Potency {
 public:
  explicit Potency(unsigned m);
  unsigned value() const noexcept { return m_; }
  bool operator==(const Potency&) const = default;

 private:
  unsigned m_;
};

/// Validated, immutable ordered semigroup on elements 0..n-1.
class OrderedSemigroup {
 public:
  unsigned size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  bool leq(Element a, Element b) const noexcept { return (down_[b] >> a) & 1U; }
  /// Elements t with t <= a.
  Mask down_set(Element a) const noexcept { return down_[a]; }
  const std::vector<Element>& table() const noexcept { return table_; }
  /// Strict pairs (i,j), i < j in the order, sorted lexicographically.
  std::vector<std::pair<Element, Element>> strict_pairs() const;
  bool is_discrete() const noexcept;

  Subset universe() const { return Subset::full(n_); }
  /// S^m, read from the cache filled at validation.
  const Subset& power(Potency m) const noexcept { return powers_[m.value()]; }

  bool operator==(const OrderedSemigroup& other) const {
    return n_ == other.n_ && table_ == other.table_ && down_ == other.down_ && name_ == other.name_;
  }

 private:
  OrderedSemigroup() = default;
  friend OrderedSemigroup validate_structure(unsigned, std::span<const Element>,
                                             std::span<const std::uint8_t>, std::string);
  unsigned n_ = 0;
  std::string name_;
  std::vector<Element> table_;
  std::array<Mask, kMaxSize> down_{};
  std::array<Subset, kMaxPotency + 1> powers_{};
};

/// Builds a structure from a row-major n*n table and a row-major n*n
/// relation (relation[i*n+j] != 0 means i <= j). Throws Error with
/// SizeOutOfRange, NotAssociative(a,b,c), NotPartialOrderError or
/// NotCompatible(a,b,x).
OrderedSemigroup validate_structure(unsigned n, std::span<const Element> table,
                                    std::span<const std::uint8_t> relation, std::string name = "S");

/// Convenience: relation given as strict pairs (i,j) meaning i < j.
OrderedSemigroup make_structure(std::string name, unsigned n, std::span<const Element> table,
                                std::span<const std::pair<Element, Element>> strict_pairs);

/// { ab : a in A, b in B }.
Subset subset_product(const OrderedSemigroup& s, const Subset& a, const Subset& b);
/// Set of all m-fold products.
Subset universe_power(const OrderedSemigroup& s, Potency m);
/// { t in S : t <= h for some h in H }.
Subset downward_closure(const OrderedSemigroup& s, const Subset& h);
bool is_downward_closed(const OrderedSemigroup& s, const Subset& a);
bool is_subsemigroup(const OrderedSemigroup& s, const Subset& a);

/// Throws BindingMismatch unless `a` was built for a structure of size n.
void check_binding(const OrderedSemigroup& s, const Subset& a);

}  // namespace osg
