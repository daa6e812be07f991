#pragma once

// Quantified set-expression conjectures.
//
// Concrete syntax (ASCII):
//
//   conjecture := binder+ [guard] ":" body
//   binder     := "forall" IDENT "in" range
//   range      := "all" | "downclosed" | "elements" | "kind" "(" kindname ")"
//   guard      := "where" ("regular" | "simple" | "left_simple" | "right_simple" | "biint_simple")
//   body       := relation ("and" relation)*
//   relation   := expr ("<=" | "=") expr
//   expr       := term ("|" term)*            union
//   term       := factor ("&" factor)*        intersection
//   factor     := atom ("*" atom)*            product
//   atom       := "S" | IDENT | "{" IDENT "}" | "cl" "(" expr ")" | "(" expr ")" | atom "^" (INT | "M")
//
// `cl(e)` is the downward closure (e], `S^M` the ambient power S^m.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osg/quantifier.hpp"

namespace osg {

enum class ExprKind { Universe, Var, Singleton, Product, Power, Closure, Union, Intersection };

/// Expression tree with value semantics. `exponent == 0` on a Power node is
/// the symbolic potency M.
struct SetExpr {
  ExprKind kind = ExprKind::Universe;
  std::string name;
  unsigned exponent = 0;
  std::vector<SetExpr> args;

  static SetExpr universe() { return {}; }
  static SetExpr var(std::string n) { return {ExprKind::Var, std::move(n), 0, {}}; }
  static SetExpr singleton(std::string n) { return {ExprKind::Singleton, std::move(n), 0, {}}; }
  static SetExpr power(SetExpr base, unsigned k) { return {ExprKind::Power, {}, k, {std::move(base)}}; }
  static SetExpr closure(SetExpr e) { return {ExprKind::Closure, {}, 0, {std::move(e)}}; }
  static SetExpr product(SetExpr l, SetExpr r) { return binary(ExprKind::Product, std::move(l), std::move(r)); }
  static SetExpr meet(SetExpr l, SetExpr r) { return binary(ExprKind::Intersection, std::move(l), std::move(r)); }
  static SetExpr join(SetExpr l, SetExpr r) { return binary(ExprKind::Union, std::move(l), std::move(r)); }
  static SetExpr binary(ExprKind k, SetExpr l, SetExpr r) {
    SetExpr e{k, {}, 0, {}};
    e.args.push_back(std::move(l));
    e.args.push_back(std::move(r));
    return e;
  }

  bool operator==(const SetExpr&) const = default;
};

enum class Guard { None, Regular, Simple, LeftSimple, RightSimple, BiIntSimple };
enum class RelOp { Contained, Equal };

struct Comparison {
  SetExpr lhs;
  RelOp op = RelOp::Contained;
  SetExpr rhs;
  bool operator==(const Comparison&) const = default;
};

struct Conjecture {
  std::vector<Quantifier> binders;  // domains limited to AllSubsets, DownClosed, Elements, Ideals
  Guard guard = Guard::None;
  std::vector<Comparison> body;     // conjunction
  bool operator==(const Conjecture&) const = default;
};

/// Throws ParseError (SyntaxError, UnboundVariable, DuplicateBinder).
Conjecture parse_conjecture(std::string_view text);
std::string format_conjecture(const Conjecture& c);
std::string format_expr(const SetExpr& e);

/// Variable bindings: subsets by name, elements by name.
struct Env {
  std::map<std::string, Subset, std::less<>> subsets;
  std::map<std::string, Element, std::less<>> elements;
};

/// Throws UnboundVariable for a free name missing from `env`.
Subset eval_set_expr(const OrderedSemigroup& s, const Env& env, Potency m, const SetExpr& e);
bool eval_body(const OrderedSemigroup& s, const Env& env, Potency m, const std::vector<Comparison>& body);
bool eval_guard(const OrderedSemigroup& s, Guard g, Potency m, const IdealOptions& opts = {});

// ---- check results --------------------------------------------------------

enum class Status { Holds, Fails, Skipped, Error };
std::string_view status_name(Status s) noexcept;
std::optional<Status> parse_status(std::string_view name) noexcept;
std::string_view sort_name(Sort s) noexcept;
std::optional<Sort> parse_sort(std::string_view name) noexcept;

struct WitnessBinding {
  std::string name;
  Sort sort = Sort::Subset;
  unsigned value = 0;  // subset bit mask or element index
  bool operator==(const WitnessBinding&) const = default;
};

struct CheckResult {
  std::string structure;
  std::string check;
  unsigned m = 1;
  Status status = Status::Holds;
  std::vector<WitnessBinding> witness;  // nonempty iff status == Fails
  std::string direction;                // biconditional / variant tag, may be empty
  std::string error;                    // message when status == Error
  bool operator==(const CheckResult&) const = default;
};

Env env_from(const OrderedSemigroup& s, const std::vector<Quantifier>& binders, const Assignment& values);
std::vector<WitnessBinding> witness_from(const std::vector<Quantifier>& binders, const Assignment& values);

/// Evaluates the guard, then searches the quantifier prefix for a
/// falsifying assignment.
CheckResult check_conjecture(const OrderedSemigroup& s, const Conjecture& c, Potency m,
                             const IdealOptions& opts = {});

/// True iff the witness binds every quantifier, lies in its range (checked
/// definitionally), the guard holds, and the body evaluates to false.
/// Throws MalformedWitness for missing/unknown names or out-of-range values.
bool replay_conjecture_witness(const OrderedSemigroup& s, const Conjecture& c, Potency m,
                               const std::vector<WitnessBinding>& witness, const IdealOptions& opts = {});

}  // namespace osg
