#include "osg/enumeration.hpp"

#include <algorithm>
#include <bit>

namespace osg {

namespace {

struct OrderIdealWalker {
  const OrderedSemigroup& s;
  std::vector<Mask> up;
  const std::function<void(const Subset&)>& visit;

  void walk(Mask included, Mask excluded) {
    const Mask all = Subset::full_mask(s.size());
    const Mask undecided = all & ~(included | excluded);
    if (undecided == 0) {
      if (included != 0) visit(Subset(s.size(), included));
      return;
    }
    const auto x = static_cast<Element>(std::countr_zero(undecided));
    walk(included, excluded | up[x]);
    walk(included | s.down_set(x), excluded);
  }
};

}  // namespace

void for_each_downward_closed(const OrderedSemigroup& s, const std::function<void(const Subset&)>& visit) {
  std::vector<Mask> up(s.size(), 0);
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b)
      if (s.leq(a, b)) up[a] |= Mask{1} << b;
  OrderIdealWalker walker{s, std::move(up), visit};
  walker.walk(0, 0);
}

std::vector<Subset> enumerate_downward_closed(const OrderedSemigroup& s) {
  std::vector<Subset> out;
  for_each_downward_closed(s, [&](const Subset& a) { out.push_back(a); });
  std::sort(out.begin(), out.end());
  return out;
}

IdealList enumerate_ideals(const OrderedSemigroup& s, IdealKind kind, Potency m, const IdealOptions& opts) {
  IdealList list{s.name(), kind, m.value(), {}};
  for_each_downward_closed(s, [&](const Subset& b) {
    if (is_ideal(s, b, kind, m, opts)) list.subsets.push_back(b);
  });
  std::sort(list.subsets.begin(), list.subsets.end());
  return list;
}

std::size_t count_ideals(const OrderedSemigroup& s, IdealKind kind, Potency m, const IdealOptions& opts) {
  std::size_t count = 0;
  for_each_downward_closed(s, [&](const Subset& b) {
    if (is_ideal(s, b, kind, m, opts)) ++count;
  });
  return count;
}

std::vector<Subset> brute_force_ideals(const OrderedSemigroup& s, IdealKind kind, Potency m,
                                       const IdealOptions& opts) {
  std::vector<Subset> out;
  const Mask all = Subset::full_mask(s.size());
  for (Mask bits = 1; bits <= all; ++bits) {
    const Subset b(s.size(), bits);
    if (is_ideal(s, b, kind, m, opts)) out.push_back(b);
  }
  return out;
}

}  // namespace osg
