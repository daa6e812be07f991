#include "osg/ideals.hpp"

#include "osg/enumeration.hpp"

namespace osg {

std::string_view kind_name(IdealKind kind) noexcept {
  switch (kind) {
    case IdealKind::MLeft: return "m_left";
    case IdealKind::MRight: return "m_right";
    case IdealKind::MTwoSided: return "m_two_sided";
    case IdealKind::MQuasi: return "m_quasi";
    case IdealKind::MBi: return "m_bi";
    case IdealKind::MInterior: return "m_interior";
    case IdealKind::MBiInterior: return "m_bi_interior";
  }
  return "?";
}

std::optional<IdealKind> parse_kind(std::string_view name) noexcept {
  for (IdealKind k : kAllIdealKinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

namespace {

void check_element(const OrderedSemigroup& s, Element a) {
  if (a >= s.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(a) + " out of range for size " + std::to_string(s.size()), {a});
}

Subset prod(const OrderedSemigroup& s, const Subset& a, const Subset& b) { return subset_product(s, a, b); }
Subset prod(const OrderedSemigroup& s, const Subset& a, const Subset& b, const Subset& c) {
  return subset_product(s, subset_product(s, a, b), c);
}

bool left_condition(const OrderedSemigroup& s, const Subset& b, const Subset& sm) {
  return prod(s, sm, b).subset_of(b);
}
bool right_condition(const OrderedSemigroup& s, const Subset& b, const Subset& sm) {
  return prod(s, b, sm).subset_of(b);
}

}  // namespace

bool is_ideal(const OrderedSemigroup& s, const Subset& b, IdealKind kind, Potency m, const IdealOptions& opts) {
  check_binding(s, b);
  if (b.empty()) throw Error(ErrorKind::EmptySubset, "ideal predicates require a nonempty subset");
  if (!is_downward_closed(s, b)) return false;

  const Subset& sm = s.power(m);
  switch (kind) {
    case IdealKind::MLeft:
      return is_subsemigroup(s, b) && left_condition(s, b, sm);
    case IdealKind::MRight:
      return is_subsemigroup(s, b) && right_condition(s, b, sm);
    case IdealKind::MTwoSided:
      return is_subsemigroup(s, b) && left_condition(s, b, sm) && right_condition(s, b, sm);
    case IdealKind::MQuasi: {
      const Subset meet = downward_closure(s, prod(s, sm, b)) & downward_closure(s, prod(s, b, sm));
      return is_subsemigroup(s, b) && meet.subset_of(b);
    }
    case IdealKind::MBi:
      return is_subsemigroup(s, b) && prod(s, b, sm, b).subset_of(b);
    case IdealKind::MInterior:
      return is_subsemigroup(s, b) && prod(s, sm, b, sm).subset_of(b);
    case IdealKind::MBiInterior: {
      if (opts.strict_bi_interior && !is_subsemigroup(s, b)) return false;
      const Subset meet = downward_closure(s, prod(s, b, sm, b)) & downward_closure(s, prod(s, sm, b, sm));
      return meet.subset_of(b);
    }
  }
  return false;
}

Subset principal_set(const OrderedSemigroup& s, Element a, PrincipalPattern pattern, Potency m) {
  check_element(s, a);
  const Subset one = Subset::singleton(s.size(), a);
  const Subset& sm = s.power(m);
  switch (pattern) {
    case PrincipalPattern::aSma: return downward_closure(s, prod(s, one, sm, one));
    case PrincipalPattern::SmaSm: return downward_closure(s, prod(s, sm, one, sm));
    case PrincipalPattern::Sma: return downward_closure(s, prod(s, sm, one));
    case PrincipalPattern::aSm: return downward_closure(s, prod(s, one, sm));
  }
  return Subset::empty(s.size());
}

bool is_m_regular_element(const OrderedSemigroup& s, Element a, Potency m) {
  check_element(s, a);
  for (Element x : s.power(m).elements())
    if (s.leq(a, s.mul(s.mul(a, x), a))) return true;
  return false;
}

std::optional<Element> non_regular_element(const OrderedSemigroup& s, Potency m) {
  for (Element a = 0; a < s.size(); ++a)
    if (!is_m_regular_element(s, a, m)) return a;
  return std::nullopt;
}

bool is_m_regular(const OrderedSemigroup& s, Potency m) { return !non_regular_element(s, m).has_value(); }

std::optional<Subset> simplicity_counterexample(const OrderedSemigroup& s, SimplicityKind kind, Potency m,
                                                const SimplicityOptions& opts) {
  std::optional<Subset> found;
  auto refutes = [&](const Subset& b) {
    if (b.is_full()) return false;
    if (opts.exempt_singletons && b.count() == 1) return false;
    switch (kind) {
      case SimplicityKind::LeftSimple: return is_ideal(s, b, IdealKind::MLeft, m, opts.ideal);
      case SimplicityKind::RightSimple: return is_ideal(s, b, IdealKind::MRight, m, opts.ideal);
      case SimplicityKind::Simple:
        return is_ideal(s, b, IdealKind::MLeft, m, opts.ideal) || is_ideal(s, b, IdealKind::MRight, m, opts.ideal);
      case SimplicityKind::BiInteriorSimple: return is_ideal(s, b, IdealKind::MBiInterior, m, opts.ideal);
    }
    return false;
  };
  for (const Subset& b : enumerate_downward_closed(s)) {
    if (refutes(b)) {
      found = b;
      break;
    }
  }
  return found;
}

bool simplicity(const OrderedSemigroup& s, SimplicityKind kind, Potency m, const SimplicityOptions& opts) {
  return !simplicity_counterexample(s, kind, m, opts).has_value();
}

}  // namespace osg
