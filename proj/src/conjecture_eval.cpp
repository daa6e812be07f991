#include "osg/conjecture.hpp"

namespace osg {

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Skipped: return "skipped";
    case Status::Error: return "error";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view name) noexcept {
  for (Status s : {Status::Holds, Status::Fails, Status::Skipped, Status::Error})
    if (status_name(s) == name) return s;
  return std::nullopt;
}

std::string_view sort_name(Sort s) noexcept {
  switch (s) {
    case Sort::Subset: return "subset";
    case Sort::Element: return "element";
  }
  return "?";
}

std::optional<Sort> parse_sort(std::string_view name) noexcept {
  for (Sort s : {Sort::Subset, Sort::Element})
    if (sort_name(s) == name) return s;
  return std::nullopt;
}

Subset eval_set_expr(const OrderedSemigroup& s, const Env& env, Potency m, const SetExpr& e) {
  switch (e.kind) {
    case ExprKind::Universe: return s.universe();
    case ExprKind::Var: {
      auto it = env.subsets.find(e.name);
      if (it == env.subsets.end()) throw Error(ErrorKind::UnboundVariable, "unbound subset variable '" + e.name + "'");
      check_binding(s, it->second);
      return it->second;
    }
    case ExprKind::Singleton: {
      auto it = env.elements.find(e.name);
      if (it == env.elements.end())
        throw Error(ErrorKind::UnboundVariable, "unbound element variable '" + e.name + "'");
      return Subset::singleton(s.size(), it->second);
    }
    case ExprKind::Product:
      return subset_product(s, eval_set_expr(s, env, m, e.args[0]), eval_set_expr(s, env, m, e.args[1]));
    case ExprKind::Power: {
      const Subset base = eval_set_expr(s, env, m, e.args[0]);
      const unsigned k = e.exponent == 0 ? m.value() : e.exponent;
      Subset acc = base;
      for (unsigned i = 1; i < k; ++i) acc = subset_product(s, acc, base);
      return acc;
    }
    case ExprKind::Closure: return downward_closure(s, eval_set_expr(s, env, m, e.args[0]));
    case ExprKind::Union: return eval_set_expr(s, env, m, e.args[0]) | eval_set_expr(s, env, m, e.args[1]);
    case ExprKind::Intersection: return eval_set_expr(s, env, m, e.args[0]) & eval_set_expr(s, env, m, e.args[1]);
  }
  return Subset::empty(s.size());
}

bool eval_body(const OrderedSemigroup& s, const Env& env, Potency m, const std::vector<Comparison>& body) {
  for (const Comparison& r : body) {
    const Subset lhs = eval_set_expr(s, env, m, r.lhs);
    const Subset rhs = eval_set_expr(s, env, m, r.rhs);
    if (r.op == RelOp::Contained ? !lhs.subset_of(rhs) : lhs != rhs) return false;
  }
  return true;
}

bool eval_guard(const OrderedSemigroup& s, Guard g, Potency m, const IdealOptions& opts) {
  SimplicityOptions sopts;
  sopts.ideal = opts;
  switch (g) {
    case Guard::None: return true;
    case Guard::Regular: return is_m_regular(s, m);
    case Guard::Simple: return simplicity(s, SimplicityKind::Simple, m, sopts);
    case Guard::LeftSimple: return simplicity(s, SimplicityKind::LeftSimple, m, sopts);
    case Guard::RightSimple: return simplicity(s, SimplicityKind::RightSimple, m, sopts);
    case Guard::BiIntSimple: return simplicity(s, SimplicityKind::BiInteriorSimple, m, sopts);
  }
  return false;
}

Env env_from(const OrderedSemigroup& s, const std::vector<Quantifier>& binders, const Assignment& values) {
  Env env;
  for (std::size_t i = 0; i < binders.size(); ++i) {
    if (binders[i].sort() == Sort::Element)
      env.elements[binders[i].name] = values[i];
    else
      env.subsets[binders[i].name] = Subset(s.size(), values[i]);
  }
  return env;
}

std::vector<WitnessBinding> witness_from(const std::vector<Quantifier>& binders, const Assignment& values) {
  std::vector<WitnessBinding> out;
  for (std::size_t i = 0; i < binders.size(); ++i) out.push_back({binders[i].name, binders[i].sort(), values[i]});
  return out;
}

CheckResult check_conjecture(const OrderedSemigroup& s, const Conjecture& c, Potency m, const IdealOptions& opts) {
  CheckResult r{s.name(), "conjecture", m.value(), Status::Holds, {}, {}, {}};
  if (!eval_guard(s, c.guard, m, opts)) {
    r.status = Status::Skipped;
    return r;
  }
  auto cex = find_counterexample(s, c.binders, m, opts, [&](const Assignment& values) {
    return eval_body(s, env_from(s, c.binders, values), m, c.body);
  });
  if (cex) {
    r.status = Status::Fails;
    r.witness = witness_from(c.binders, *cex);
  }
  return r;
}

bool replay_conjecture_witness(const OrderedSemigroup& s, const Conjecture& c, Potency m,
                               const std::vector<WitnessBinding>& witness, const IdealOptions& opts) {
  if (witness.size() != c.binders.size())
    throw Error(ErrorKind::MalformedWitness, "witness binds " + std::to_string(witness.size()) + " variables, expected " +
                                                 std::to_string(c.binders.size()));
  Assignment values(c.binders.size());
  for (std::size_t i = 0; i < c.binders.size(); ++i) {
    const Quantifier& q = c.binders[i];
    const WitnessBinding& w = witness[i];
    if (w.name != q.name || w.sort != q.sort())
      throw Error(ErrorKind::MalformedWitness, "witness binding '" + w.name + "' does not match binder '" + q.name + "'");
    if (q.sort() == Sort::Element ? w.value >= s.size() : (w.value & ~Subset::full_mask(s.size())) != 0)
      throw Error(ErrorKind::MalformedWitness, "witness value for '" + w.name + "' out of range");
    values[i] = w.value;
  }
  if (!eval_guard(s, c.guard, m, opts)) return false;
  for (std::size_t i = 0; i < c.binders.size(); ++i)
    if (!in_domain(s, c.binders[i], m, opts, values[i])) return false;
  return !eval_body(s, env_from(s, c.binders, values), m, c.body);
}

}  // namespace osg
