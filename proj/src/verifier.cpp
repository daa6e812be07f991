#include "osg/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "osg/enumeration.hpp"

namespace osg {

namespace {

struct Ctx {
  const OrderedSemigroup& s;
  Potency m;
  const IdealOptions& opts;
  bool pruned;  // false on the replay path: every range is a full filter
};

using Holds = std::function<bool(const Ctx&, const Assignment&)>;

/// One universally quantified statement. `tag` names the variant in the
/// report's direction field.
struct Part {
  std::string tag;
  std::vector<Quantifier> binders;
  Holds holds;
};

/// Structure-level property on the left of a biconditional.
enum class Property { None, Regular, BiIntSimple };

struct CheckDef {
  CheckInfo info;
  Guard guard = Guard::None;
  Property iff = Property::None;
  std::function<std::vector<Part>(Potency)> parts;
};

// ---- helpers --------------------------------------------------------------

Subset sub(const Ctx& c, unsigned bits) { return Subset(c.s.size(), bits); }
Subset cl(const Ctx& c, const Subset& a) { return downward_closure(c.s, a); }
Subset mul(const Ctx& c, const Subset& a, const Subset& b) { return subset_product(c.s, a, b); }
Subset mul(const Ctx& c, const Subset& a, const Subset& b, const Subset& d) { return mul(c, mul(c, a, b), d); }
bool ideal(const Ctx& c, const Subset& b, IdealKind k) { return !b.empty() && is_ideal(c.s, b, k, c.m, c.opts); }
bool ideal_at(const Ctx& c, const Subset& b, IdealKind k, Potency p) {
  return !b.empty() && is_ideal(c.s, b, k, p, c.opts);
}

Quantifier q_all(std::string n) { return {std::move(n), Domain::AllSubsets, IdealKind::MLeft, 0}; }
Quantifier q_nonempty(std::string n) { return {std::move(n), Domain::NonemptySubsets, IdealKind::MLeft, 0}; }
Quantifier q_down(std::string n) { return {std::move(n), Domain::DownClosed, IdealKind::MLeft, 0}; }
Quantifier q_subsg(std::string n) { return {std::move(n), Domain::Subsemigroups, IdealKind::MLeft, 0}; }
Quantifier q_kind(std::string n, IdealKind k, unsigned potency = 0) {
  return {std::move(n), Domain::Ideals, k, potency};
}

std::vector<Subset> ideals_of(const Ctx& c, IdealKind k) {
  if (c.pruned) return enumerate_ideals(c.s, k, c.m, c.opts).subsets;
  return brute_force_ideals(c.s, k, c.m, c.opts);
}

/// Some m-right R and m-left L with B = (RL].
bool representable_as_rl(const Ctx& c, const Subset& b) {
  const auto rights = ideals_of(c, IdealKind::MRight);
  const auto lefts = ideals_of(c, IdealKind::MLeft);
  for (const Subset& r : rights)
    for (const Subset& l : lefts)
      if (cl(c, mul(c, r, l)) == b) return true;
  return false;
}

/// Part whose instance predicate is the body of a DSL conjecture.
Part dsl_part(std::string_view text, std::string tag = {}) {
  Conjecture conj = parse_conjecture(text);
  Part p{std::move(tag), conj.binders, {}};
  p.holds = [body = std::move(conj.body), binders = conj.binders](const Ctx& c, const Assignment& v) {
    return eval_body(c.s, env_from(c.s, binders, v), c.m, body);
  };
  return p;
}

std::function<std::vector<Part>(Potency)> fixed(std::vector<Part> parts) {
  return [parts = std::move(parts)](Potency) { return parts; };
}

/// "every ideal of kind `from` is an m-bi-interior ideal".
std::function<std::vector<Part>(Potency)> implies_bi_interior(IdealKind from, std::string var) {
  Part p{{}, {q_kind(var, from)}, [](const Ctx& c, const Assignment& v) {
           return ideal(c, sub(c, v[0]), IdealKind::MBiInterior);
         }};
  return fixed({p});
}

CheckDef make(std::string id, std::string statement, Expectation e, std::function<std::vector<Part>(Potency)> parts,
              Guard guard = Guard::None, Property iff = Property::None, bool experimental = false) {
  return CheckDef{{std::move(id), std::move(statement), e, experimental}, guard, iff, std::move(parts)};
}

std::vector<CheckDef> build_registry() {
  using E = Expectation;
  using K = IdealKind;
  std::vector<CheckDef> r;

  // Closure-operator laws; m plays no role.
  r.push_back(make("L1", "A <= (A]", E::Theorem, fixed({dsl_part("forall A in all: A <= cl(A)")})));
  r.push_back(make("L2", "((A]] = (A]", E::Theorem, fixed({dsl_part("forall A in all: cl(cl(A)) = cl(A)")})));
  r.push_back(make("L3", "A <= B implies (A] <= (B]", E::Theorem,
                   fixed({Part{{}, {q_all("A"), q_all("B")}, [](const Ctx& c, const Assignment& v) {
                                 const Subset a = sub(c, v[0]), b = sub(c, v[1]);
                                 return !a.subset_of(b) || cl(c, a).subset_of(cl(c, b));
                               }}})));
  r.push_back(make("L4", "(A & B] <= (A] & (B]", E::Theorem,
                   fixed({dsl_part("forall A in all forall B in all: cl(A & B) <= cl(A) & cl(B)")})));
  r.push_back(make("L5", "(A | B] = (A] | (B]", E::Theorem,
                   fixed({dsl_part("forall A in all forall B in all: cl(A | B) = cl(A) | cl(B)")})));
  r.push_back(make("L6", "(A](B] <= (AB]", E::Theorem,
                   fixed({dsl_part("forall A in all forall B in all: cl(A) * cl(B) <= cl(A * B)")})));
  r.push_back(make("L7", "((A](B]] = (AB]", E::Theorem,
                   fixed({dsl_part("forall A in all forall B in all: cl(cl(A) * cl(B)) = cl(A * B)")})));

  r.push_back(make("T1", "every m-left ideal is m-bi-interior", E::Theorem, implies_bi_interior(K::MLeft, "L")));
  r.push_back(make("T1'", "every m-right ideal is m-bi-interior", E::Theorem, implies_bi_interior(K::MRight, "R")));
  r.push_back(make("T2", "every m-ideal is m-bi-interior", E::Theorem, implies_bi_interior(K::MTwoSided, "I")));
  r.push_back(make("T3", "A, B m-bi-interior, A & B nonempty implies A & B m-bi-interior", E::Theorem,
                   fixed({Part{{},
                               {q_kind("A", K::MBiInterior), q_kind("B", K::MBiInterior)},
                               [](const Ctx& c, const Assignment& v) {
                                 const Subset ab = sub(c, v[0]) & sub(c, v[1]);
                                 return ab.empty() || ideal(c, ab, K::MBiInterior);
                               }}})));
  r.push_back(make("T4", "R m-right, L m-left implies R & L m-bi-interior", E::Theorem,
                   fixed({Part{{}, {q_kind("R", K::MRight), q_kind("L", K::MLeft)},
                               [](const Ctx& c, const Assignment& v) {
                                 return ideal(c, sub(c, v[0]) & sub(c, v[1]), K::MBiInterior);
                               }}})));
  r.push_back(make("T5", "every m-quasi-ideal is m-bi-interior", E::Theorem, implies_bi_interior(K::MQuasi, "Q")));
  r.push_back(make("T6", "every m-bi-ideal is m-bi-interior", E::Theorem, implies_bi_interior(K::MBi, "B")));
  r.push_back(make("T7", "every m-interior ideal is m-bi-interior", E::Theorem, implies_bi_interior(K::MInterior, "I")));
  r.push_back(make("T8", "B m-bi-interior implies (BS] and (SB] m-bi-interior", E::Theorem,
                   fixed({Part{{}, {q_kind("B", K::MBiInterior)}, [](const Ctx& c, const Assignment& v) {
                                 const Subset b = sub(c, v[0]), s = c.s.universe();
                                 return ideal(c, cl(c, mul(c, b, s)), K::MBiInterior) &&
                                        ideal(c, cl(c, mul(c, s, b)), K::MBiInterior);
                               }}})));
  r.push_back(make("T9", "B m-bi-interior, T m-right, B & T nonempty implies B & T m-bi-interior", E::Theorem,
                   fixed({Part{{}, {q_kind("B", K::MBiInterior), q_kind("T", K::MRight)},
                               [](const Ctx& c, const Assignment& v) {
                                 const Subset bt = sub(c, v[0]) & sub(c, v[1]);
                                 return bt.empty() || ideal(c, bt, K::MBiInterior);
                               }}})));

  r.push_back(make("T10", "S m-simple implies every m-bi-interior ideal is an m-bi-ideal", E::Claim,
                   fixed({Part{{}, {q_kind("B", K::MBiInterior)}, [](const Ctx& c, const Assignment& v) {
                                 return ideal(c, sub(c, v[0]), K::MBi);
                               }}}),
                   Guard::Simple));
  r.push_back(make("T11", "A m-left, C subsemigroup implies (AC] m-bi-interior", E::Claim,
                   fixed({Part{{}, {q_kind("A", K::MLeft), q_subsg("C")}, [](const Ctx& c, const Assignment& v) {
                                 return ideal(c, cl(c, mul(c, sub(c, v[0]), sub(c, v[1]))), K::MBiInterior);
                               }}})));
  {
    auto ca_bi_interior = [](const Ctx& c, const Assignment& v) {
      return ideal(c, cl(c, mul(c, sub(c, v[1]), sub(c, v[0]))), K::MBiInterior);
    };
    r.push_back(make("T11'", "(CA] m-bi-interior: A m-right (as stated) / C m-right (proof hypothesis)", E::Claim,
                     fixed({Part{"as_stated", {q_kind("A", K::MRight), q_subsg("C")}, ca_bi_interior},
                            Part{"proof_hypothesis", {q_subsg("A"), q_kind("C", K::MRight)}, ca_bi_interior}})));
  }
  r.push_back(make("T12", "S m-bi-interior simple iff (S^m a S^m] & (a S^m a] = S for all a", E::Claim,
                   fixed({dsl_part("forall a in elements: cl(S^M * {a} * S^M) & cl({a} * S^M * {a}) = S")}),
                   Guard::None, Property::BiIntSimple));
  r.push_back(make("T13", "S m-regular iff B & I & L <= (BIL] for m-bi-interior B, m-ideal I, m-left L",
                   E::Claim,
                   fixed({dsl_part("forall B in kind(m_bi_interior) forall I in kind(m_two_sided) "
                                   "forall L in kind(m_left): B & I & L <= cl(B * I * L)")}),
                   Guard::None, Property::Regular));
  r.push_back(make("T14", "S m-regular implies m-ideals and m-interior ideals coincide", E::Claim,
                   fixed({Part{{}, {q_down("I")}, [](const Ctx& c, const Assignment& v) {
                                 const Subset i = sub(c, v[0]);
                                 return ideal(c, i, K::MInterior) == ideal(c, i, K::MTwoSided);
                               }}}),
                   Guard::Regular));
  r.push_back(make("T15", "S m-regular iff (BS^mB] & (S^mBS^m] = B for every m-bi-interior B", E::Claim,
                   fixed({dsl_part("forall B in kind(m_bi_interior): cl(B * S^M * B) & cl(S^M * B * S^M) = B")}),
                   Guard::None, Property::Regular));
  r.push_back(make("T16", "S m-regular, B subsemigroup: B = (RL] for some R, L iff B m-bi-interior", E::Claim,
                   fixed({Part{{}, {q_subsg("B")}, [](const Ctx& c, const Assignment& v) {
                                 const Subset b = sub(c, v[0]);
                                 return representable_as_rl(c, b) == ideal(c, b, K::MBiInterior);
                               }}}),
                   Guard::Regular));
  r.push_back(make("R1", "S m-regular iff (RL] = R & L for every m-right R, m-left L", E::Claim,
                   fixed({dsl_part("forall R in kind(m_right) forall L in kind(m_left): cl(R * L) = R & L")}),
                   Guard::None, Property::Regular));
  r.push_back(make("R2", "S m-regular: B m-bi-ideal iff B = (RL] for some m-right R, m-left L", E::Claim,
                   fixed({Part{{}, {q_nonempty("B")}, [](const Ctx& c, const Assignment& v) {
                                 const Subset b = sub(c, v[0]);
                                 return ideal(c, b, K::MBi) == representable_as_rl(c, b);
                               }}}),
                   Guard::Regular));
  r.push_back(make("E1", "B m-bi-interior implies (S^m B S^m] is an m-ideal", E::Claim,
                   fixed({Part{{}, {q_kind("B", K::MBiInterior)}, [](const Ctx& c, const Assignment& v) {
                                 const Subset& sm = c.s.power(c.m);
                                 return ideal(c, cl(c, mul(c, sm, sub(c, v[0]), sm)), K::MTwoSided);
                               }}}),
                   Guard::None, Property::None, true));
  r.push_back(make(
      "E2", "A m1-bi-interior, B m2-bi-interior, m1 != m2: A & B is max(m1,m2)-bi-interior", E::Claim,
      [](Potency m) {
        std::vector<Part> parts;
        const unsigned top = std::min(m.value() + 1, kMaxPotency);
        for (unsigned m2 = 1; m2 <= top; ++m2) {
          if (m2 == m.value()) continue;
          const Potency hi(std::max(m.value(), m2));
          parts.push_back(Part{"m2=" + std::to_string(m2),
                               {q_kind("A", K::MBiInterior), q_kind("B", K::MBiInterior, m2)},
                               [hi](const Ctx& c, const Assignment& v) {
                                 const Subset ab = sub(c, v[0]) & sub(c, v[1]);
                                 return ab.empty() || ideal_at(c, ab, K::MBiInterior, hi);
                               }});
        }
        return parts;
      },
      Guard::None, Property::None, true));
  return r;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = build_registry();
  return defs;
}

const CheckDef& find_def(std::string_view id) {
  for (const CheckDef& d : registry())
    if (d.info.id == id) return d;
  throw Error(ErrorKind::UnknownCheckId, "unknown check id '" + std::string(id) + "'");
}

bool guard_holds(const Ctx& c, Guard g) { return eval_guard(c.s, g, c.m, c.opts); }

/// Biconditional property and, when it is false, a witness binding.
std::pair<bool, std::optional<WitnessBinding>> property(const Ctx& c, Property p) {
  switch (p) {
    case Property::None: return {true, std::nullopt};
    case Property::Regular: {
      auto a = non_regular_element(c.s, c.m);
      if (!a) return {true, std::nullopt};
      return {false, WitnessBinding{"a", Sort::Element, *a}};
    }
    case Property::BiIntSimple: {
      SimplicityOptions so;
      so.ideal = c.opts;
      auto b = simplicity_counterexample(c.s, SimplicityKind::BiInteriorSimple, c.m, so);
      if (!b) return {true, std::nullopt};
      return {false, WitnessBinding{"B", Sort::Subset, b->bits()}};
    }
  }
  return {true, std::nullopt};
}

/// Replays a property witness: true iff it shows the property is false.
bool property_refuted_by(const Ctx& c, Property p, const std::vector<WitnessBinding>& w) {
  if (w.size() != 1) throw Error(ErrorKind::MalformedWitness, "converse witness must bind exactly one variable");
  const WitnessBinding& b = w[0];
  switch (p) {
    case Property::Regular:
      if (b.name != "a" || b.sort != Sort::Element || b.value >= c.s.size())
        throw Error(ErrorKind::MalformedWitness, "converse witness must be an element 'a' in range");
      return !is_m_regular_element(c.s, b.value, c.m);
    case Property::BiIntSimple: {
      if (b.name != "B" || b.sort != Sort::Subset || (b.value & ~Subset::full_mask(c.s.size())) != 0)
        throw Error(ErrorKind::MalformedWitness, "converse witness must be a subset 'B' in range");
      const Subset s = sub(c, b.value);
      return !s.empty() && !s.is_full() && is_ideal(c.s, s, IdealKind::MBiInterior, c.m, c.opts);
    }
    case Property::None: break;
  }
  throw Error(ErrorKind::MalformedWitness, "check has no converse direction");
}

struct Found {
  const Part* part;
  Assignment values;
};

std::optional<Found> first_failure(const Ctx& c, const std::vector<Part>& parts) {
  for (const Part& p : parts) {
    auto cex = find_counterexample(c.s, p.binders, c.m, c.opts,
                                   [&](const Assignment& v) { return p.holds(c, v); }, c.pruned);
    if (cex) return Found{&p, *cex};
  }
  return std::nullopt;
}

Assignment decode_witness(const Ctx& c, const Part& part, const std::vector<WitnessBinding>& w) {
  if (w.size() != part.binders.size())
    throw Error(ErrorKind::MalformedWitness, "witness binds " + std::to_string(w.size()) + " variables, expected " +
                                                 std::to_string(part.binders.size()));
  Assignment v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Quantifier& q = part.binders[i];
    if (w[i].name != q.name || w[i].sort != q.sort())
      throw Error(ErrorKind::MalformedWitness, "witness binding '" + w[i].name + "' does not match '" + q.name + "'");
    const bool in_range =
        q.sort() == Sort::Element ? w[i].value < c.s.size() : (w[i].value & ~Subset::full_mask(c.s.size())) == 0;
    if (!in_range) throw Error(ErrorKind::MalformedWitness, "witness value for '" + q.name + "' out of range");
    v[i] = w[i].value;
  }
  return v;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const CheckDef& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const CheckInfo& find_check(std::string_view id) { return find_def(id).info; }

std::vector<std::string> parse_check_list(std::string_view spec) {
  std::vector<std::string> out;
  if (spec == "all") {
    for (const CheckInfo& i : check_registry()) out.push_back(i.id);
    return out;
  }
  std::vector<std::string> wanted;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', start), spec.size());
    std::string id(spec.substr(start, comma - start));
    if (!id.empty()) {
      find_def(id);
      wanted.push_back(std::move(id));
    }
    start = comma + 1;
  }
  for (const CheckInfo& i : check_registry())
    if (std::find(wanted.begin(), wanted.end(), i.id) != wanted.end()) out.push_back(i.id);
  return out;
}

CheckResult run_check(const OrderedSemigroup& s, std::string_view id, Potency m, const IdealOptions& opts) {
  const CheckDef& def = find_def(id);
  const Ctx c{s, m, opts, true};
  CheckResult r{s.name(), def.info.id, m.value(), Status::Holds, {}, {}, {}};
  if (!guard_holds(c, def.guard)) {
    r.status = Status::Skipped;
    return r;
  }
  const auto parts = def.parts(m);
  const auto fail = first_failure(c, parts);
  if (def.iff == Property::None) {
    if (fail) {
      r.status = Status::Fails;
      r.witness = witness_from(fail->part->binders, fail->values);
      r.direction = fail->part->tag;
    }
    return r;
  }
  const auto [prop, prop_witness] = property(c, def.iff);
  if (prop && fail) {
    r.status = Status::Fails;
    r.direction = "forward";
    r.witness = witness_from(fail->part->binders, fail->values);
  } else if (!prop && !fail) {
    r.status = Status::Fails;
    r.direction = "converse";
    r.witness = {*prop_witness};
  }
  return r;
}

bool validate_witness(const OrderedSemigroup& s, const CheckResult& result, const IdealOptions& opts) {
  const CheckDef& def = find_def(result.check);
  if (result.status != Status::Fails) throw Error(ErrorKind::MalformedWitness, "result is not a failure");
  if (result.m < 1 || result.m > kMaxPotency) throw Error(ErrorKind::MalformedWitness, "potency out of range");
  const Potency m(result.m);
  const Ctx c{s, m, opts, false};
  const auto parts = def.parts(m);

  if (def.iff != Property::None) {
    if (result.direction == "converse") {
      const bool refuted = property_refuted_by(c, def.iff, result.witness);
      return refuted && !first_failure(c, parts).has_value();
    }
    if (result.direction != "forward")
      throw Error(ErrorKind::MalformedWitness, "unknown direction '" + result.direction + "'");
    const Part& part = parts.front();
    const Assignment v = decode_witness(c, part, result.witness);
    if (!property(c, def.iff).first) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!in_domain(s, part.binders[i], m, opts, v[i])) return false;
    return !part.holds(c, v);
  }

  auto it = std::find_if(parts.begin(), parts.end(), [&](const Part& p) { return p.tag == result.direction; });
  if (it == parts.end()) throw Error(ErrorKind::MalformedWitness, "unknown direction '" + result.direction + "'");
  const Assignment v = decode_witness(c, *it, result.witness);
  if (!guard_holds(c, def.guard)) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!in_domain(s, it->binders[i], m, opts, v[i])) return false;
  return !it->holds(c, v);
}

namespace {

std::vector<CheckResult> run_pair(const OrderedSemigroup& s, unsigned m, const std::vector<std::string>& checks,
                                  const IdealOptions& opts) {
  std::vector<CheckResult> out;
  out.reserve(checks.size());
  for (const std::string& id : checks) {
    try {
      out.push_back(run_check(s, id, Potency(m), opts));
    } catch (const std::exception& e) {
      out.push_back(CheckResult{s.name(), id, m, Status::Error, {}, {}, e.what()});
    }
  }
  return out;
}

VerificationReport assemble(std::vector<std::vector<CheckResult>> blocks, const std::vector<unsigned>& potencies,
                            const std::vector<std::string>& checks, std::string corpus_id) {
  VerificationReport report;
  report.corpus_id = std::move(corpus_id);
  report.potencies = potencies;
  std::map<std::string, std::size_t> index;
  for (const std::string& id : checks) {
    index.emplace(id, report.summary.size());
    report.summary.push_back(CheckSummary{id});
  }
  for (auto& block : blocks)
    for (CheckResult& r : block) {
      CheckSummary& sum = report.summary[index.at(r.check)];
      switch (r.status) {
        case Status::Holds: ++sum.holds; break;
        case Status::Fails: ++sum.fails; break;
        case Status::Skipped: ++sum.skipped; break;
        case Status::Error: ++sum.errors; break;
      }
      report.results.push_back(std::move(r));
    }
  return report;
}

}  // namespace

VerificationReport run_suite_serial(const std::vector<OrderedSemigroup>& corpus,
                                    const std::vector<unsigned>& potencies, const std::vector<std::string>& checks,
                                    const IdealOptions& opts, std::string corpus_id) {
  for (const std::string& id : checks) find_def(id);
  std::vector<std::vector<CheckResult>> blocks;
  for (const OrderedSemigroup& s : corpus)
    for (unsigned m : potencies) blocks.push_back(run_pair(s, m, checks, opts));
  return assemble(std::move(blocks), potencies, checks, std::move(corpus_id));
}

VerificationReport run_suite(const std::vector<OrderedSemigroup>& corpus, const std::vector<unsigned>& potencies,
                             const std::vector<std::string>& checks, const IdealOptions& opts,
                             std::string corpus_id) {
  for (const std::string& id : checks) find_def(id);
  registry();  // build once before the parallel region
  const std::size_t pairs = corpus.size() * potencies.size();
  std::vector<std::vector<CheckResult>> blocks(pairs);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pairs); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    blocks[idx] = run_pair(corpus[idx / potencies.size()], potencies[idx % potencies.size()], checks, opts);
  }
  return assemble(std::move(blocks), potencies, checks, std::move(corpus_id));
}

bool has_blocking_failures(const VerificationReport& report) {
  for (const CheckResult& r : report.results) {
    if (r.status == Status::Error) return true;
    if (r.status == Status::Fails && find_check(r.check).expected == Expectation::Theorem) return true;
  }
  return false;
}

}  // namespace osg
