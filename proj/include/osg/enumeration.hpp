#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "osg/ideals.hpp"

namespace osg {

struct IdealList {
  std::string structure;
  IdealKind kind;
  unsigned m;
  std::vector<Subset> subsets;  // ascending bit-vector order
};

/// Calls `visit` once per nonempty downward-closed subset, in no particular
/// order. Walks order ideals directly: each branch decides the lowest
/// undecided element, including its down-set or excluding its up-set.
void for_each_downward_closed(const OrderedSemigroup& s, const std::function<void(const Subset&)>& visit);

/// Every nonempty A with (A] = A, ascending by bit vector.
std::vector<Subset> enumerate_downward_closed(const OrderedSemigroup& s);

IdealList enumerate_ideals(const OrderedSemigroup& s, IdealKind kind, Potency m, const IdealOptions& opts = {});
std::size_t count_ideals(const OrderedSemigroup& s, IdealKind kind, Potency m, const IdealOptions& opts = {});

/// Unpruned reference: filters all 2^n - 1 nonempty subsets through is_ideal.
std::vector<Subset> brute_force_ideals(const OrderedSemigroup& s, IdealKind kind, Potency m,
                                       const IdealOptions& opts = {});

}  // namespace osg
