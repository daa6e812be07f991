#pragma once

// Decision procedures for the m-ideal notions. Every predicate evaluates
// the literal definition; callers that need speed should prune candidates
// (see enumeration.hpp) rather than shortcut these.

#include <array>
#include <optional>
#include <string_view>

#include "osg/structure.hpp"

namespace osg {

enum class IdealKind { MLeft, MRight, MTwoSided, MQuasi, MBi, MInterior, MBiInterior };

inline constexpr std::array<IdealKind, 7> kAllIdealKinds = {
    IdealKind::MLeft,  IdealKind::MRight,    IdealKind::MTwoSided,  IdealKind::MQuasi,
    IdealKind::MBi,    IdealKind::MInterior, IdealKind::MBiInterior};

/// DSL / CLI spelling: m_left, m_right, m_two_sided, m_quasi, m_bi,
/// m_interior, m_bi_interior.
std::string_view kind_name(IdealKind kind) noexcept;
std::optional<IdealKind> parse_kind(std::string_view name) noexcept;

enum class SimplicityKind { LeftSimple, RightSimple, Simple, BiInteriorSimple };

/// Which singleton is substituted into the pattern: (aS^ma], (S^maS^m],
/// (S^ma], (aS^m].
enum class PrincipalPattern { aSma, SmaSm, Sma, aSm };

struct IdealOptions {
  /// Also require m-bi-interior ideals to be subsemigroups.
  bool strict_bi_interior = false;
};

struct SimplicityOptions {
  /// Alternative reading of "proper non trivial": ignore one-element ideals.
  bool exempt_singletons = false;
  IdealOptions ideal{};
};

/// Throws EmptySubset for an empty B and BindingMismatch for a foreign B.
bool is_ideal(const OrderedSemigroup& s, const Subset& b, IdealKind kind, Potency m,
              const IdealOptions& opts = {});

Subset principal_set(const OrderedSemigroup& s, Element a, PrincipalPattern pattern, Potency m);

bool is_m_regular_element(const OrderedSemigroup& s, Element a, Potency m);
bool is_m_regular(const OrderedSemigroup& s, Potency m);
/// First element that is not m-regular, if any.
std::optional<Element> non_regular_element(const OrderedSemigroup& s, Potency m);

/// Decided by enumerating downward-closed subsets.
bool simplicity(const OrderedSemigroup& s, SimplicityKind kind, Potency m, const SimplicityOptions& opts = {});

/// A proper ideal of the kind that refutes simplicity, if one exists.
/// Simple is refuted by a proper m-left or m-right ideal.
std::optional<Subset> simplicity_counterexample(const OrderedSemigroup& s, SimplicityKind kind, Potency m,
                                                const SimplicityOptions& opts = {});

}  // namespace osg
