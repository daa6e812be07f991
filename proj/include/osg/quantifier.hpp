#pragma once

// Bounded universal quantification over a structure: the search loop shared
// by conjecture checks and the verifier's registry.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "osg/ideals.hpp"

namespace osg {

enum class Domain {
  AllSubsets,       // includes the empty set
  NonemptySubsets,
  DownClosed,       // nonempty, (A] = A
  Subsemigroups,    // nonempty, AA <= A
  Elements,
  Ideals,           // kind(K) at the ambient potency
};

enum class Sort { Subset, Element };

struct Quantifier {
  std::string name;
  Domain domain = Domain::AllSubsets;
  IdealKind kind = IdealKind::MLeft;  // used when domain == Ideals
  unsigned potency = 0;               // Ideals at this potency; 0 = ambient

  Sort sort() const noexcept { return domain == Domain::Elements ? Sort::Element : Sort::Subset; }
  bool operator==(const Quantifier&) const = default;
};

/// Value of one quantified variable: a subset bit mask or an element index.
using Assignment = std::vector<unsigned>;

/// Values of the domain in ascending order. With `pruned` set, downward-
/// closed and ideal domains come from the order-ideal walk; otherwise every
/// subset is filtered through the definitional predicate.
std::vector<unsigned> domain_values(const OrderedSemigroup& s, const Quantifier& q, Potency m,
                                    const IdealOptions& opts, bool pruned = true);

/// Definitional membership test, used when replaying witnesses.
bool in_domain(const OrderedSemigroup& s, const Quantifier& q, Potency m, const IdealOptions& opts,
               unsigned value);

/// First assignment (outermost binder varies slowest) on which `holds`
/// returns false, or nullopt if it holds everywhere.
std::optional<Assignment> find_counterexample(const OrderedSemigroup& s, const std::vector<Quantifier>& binders,
                                              Potency m, const IdealOptions& opts,
                                              const std::function<bool(const Assignment&)>& holds,
                                              bool pruned = true);

}  // namespace osg
