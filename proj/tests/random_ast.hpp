#pragma once

// Random well-bound conjecture ASTs for round-trip testing.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "osg/conjecture.hpp"

namespace osg::testing {

class AstGenerator {
 public:
  explicit AstGenerator(std::uint32_t seed) : rng_(seed) {}

  Conjecture conjecture() {
    Conjecture c;
    static const char* kNames[] = {"A", "B", "C", "L", "R", "a", "b", "x", "Q1", "I_2"};
    const int nb = pick(1, 3);
    std::vector<std::string> used;
    for (int i = 0; i < nb; ++i) {
      Quantifier q;
      do q.name = kNames[pick(0, 9)];
      while (std::find(used.begin(), used.end(), q.name) != used.end());
      used.push_back(q.name);
      switch (pick(0, 3)) {
        case 0: q.domain = Domain::AllSubsets; break;
        case 1: q.domain = Domain::DownClosed; break;
        case 2: q.domain = Domain::Elements; break;
        default:
          q.domain = Domain::Ideals;
          q.kind = kAllIdealKinds[static_cast<std::size_t>(pick(0, 6))];
      }
      c.binders.push_back(q);
    }
    c.guard = static_cast<Guard>(pick(0, 5));
    const int nr = pick(1, 3);
    for (int i = 0; i < nr; ++i)
      c.body.push_back({expr(c.binders, 4), pick(0, 1) ? RelOp::Equal : RelOp::Contained, expr(c.binders, 4)});
    return c;
  }

  SetExpr expr(const std::vector<Quantifier>& scope, int depth) {
    const int choice = depth <= 0 ? pick(0, 1) : pick(0, 6);
    switch (choice) {
      case 0: return SetExpr::universe();
      case 1: {
        const Quantifier& q = scope[static_cast<std::size_t>(pick(0, static_cast<int>(scope.size()) - 1))];
        return q.sort() == Sort::Element ? SetExpr::singleton(q.name) : SetExpr::var(q.name);
      }
      case 2: return SetExpr::power(expr(scope, depth - 1), pick(0, 1) ? 0u : static_cast<unsigned>(pick(1, 9)));
      case 3: return SetExpr::closure(expr(scope, depth - 1));
      case 4: return SetExpr::product(expr(scope, depth - 1), expr(scope, depth - 1));
      case 5: return SetExpr::meet(expr(scope, depth - 1), expr(scope, depth - 1));
      default: return SetExpr::join(expr(scope, depth - 1), expr(scope, depth - 1));
    }
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937 rng_;
};

}  // namespace osg::testing
