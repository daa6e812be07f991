#include "osg/quantifier.hpp"

#include "osg/enumeration.hpp"

namespace osg {

bool in_domain(const OrderedSemigroup& s, const Quantifier& q, Potency m, const IdealOptions& opts,
               unsigned value) {
  if (q.domain == Domain::Elements) return value < s.size();
  if ((value & ~Subset::full_mask(s.size())) != 0) return false;
  const Subset a(s.size(), value);
  switch (q.domain) {
    case Domain::AllSubsets: return true;
    case Domain::NonemptySubsets: return !a.empty();
    case Domain::DownClosed: return !a.empty() && is_downward_closed(s, a);
    case Domain::Subsemigroups: return is_subsemigroup(s, a);
    case Domain::Ideals: return !a.empty() && is_ideal(s, a, q.kind, q.potency ? Potency(q.potency) : m, opts);
    case Domain::Elements: break;
  }
  return false;
}

std::vector<unsigned> domain_values(const OrderedSemigroup& s, const Quantifier& q, Potency m,
                                    const IdealOptions& opts, bool pruned) {
  std::vector<unsigned> out;
  if (q.domain == Domain::Elements) {
    for (Element a = 0; a < s.size(); ++a) out.push_back(a);
    return out;
  }
  if (pruned && q.domain == Domain::DownClosed) {
    for (const Subset& a : enumerate_downward_closed(s)) out.push_back(a.bits());
    return out;
  }
  if (pruned && q.domain == Domain::Ideals) {
    for (const Subset& a : enumerate_ideals(s, q.kind, q.potency ? Potency(q.potency) : m, opts).subsets) out.push_back(a.bits());
    return out;
  }
  const Mask all = Subset::full_mask(s.size());
  for (Mask bits = 0; bits <= all; ++bits)
    if (in_domain(s, q, m, opts, bits)) out.push_back(bits);
  return out;
}

namespace {

bool search(const std::vector<std::vector<unsigned>>& values, std::size_t depth, Assignment& current,
            const std::function<bool(const Assignment&)>& holds) {
  if (depth == values.size()) return !holds(current);
  for (unsigned v : values[depth]) {
    current[depth] = v;
    if (search(values, depth + 1, current, holds)) return true;
  }
  return false;
}

}  // namespace

std::optional<Assignment> find_counterexample(const OrderedSemigroup& s, const std::vector<Quantifier>& binders,
                                              Potency m, const IdealOptions& opts,
                                              const std::function<bool(const Assignment&)>& holds, bool pruned) {
  std::vector<std::vector<unsigned>> values;
  values.reserve(binders.size());
  for (const Quantifier& q : binders) values.push_back(domain_values(s, q, m, opts, pruned));
  Assignment current(binders.size(), 0);
  if (search(values, 0, current, holds)) return current;
  return std::nullopt;
}

}  // namespace osg
