#include "osg/structure.hpp"

#include <bit>
#include <sstream>

namespace osg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotPartialOrder: return "NotPartialOrder";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::BindingMismatch: return "BindingMismatch";
    case ErrorKind::PotencyOutOfRange: return "PotencyOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::DuplicateBinder: return "DuplicateBinder";
    case ErrorKind::UnknownCheckId: return "UnknownCheckId";
    case ErrorKind::MalformedWitness: return "MalformedWitness";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Unknown";
}

// ---- Subset ---------------------------------------------------------------

Subset::Subset(unsigned width, Mask bits) : width_(width), bits_(bits) {
  if (width > kMaxSize) throw Error(ErrorKind::SizeOutOfRange, "subset width exceeds size cap");
  if ((bits & ~full_mask(width)) != 0)
    throw Error(ErrorKind::BindingMismatch, "subset has bits beyond its width");
}

Subset Subset::full(unsigned width) { return Subset(width, full_mask(width)); }

Subset Subset::singleton(unsigned width, Element a) {
  if (a >= width) throw Error(ErrorKind::IndexOutOfRange, "element index out of range", {a});
  return Subset(width, Mask{1} << a);
}

Subset Subset::of(unsigned width, std::initializer_list<Element> elems) {
  Mask bits = 0;
  for (Element a : elems) {
    if (a >= width) throw Error(ErrorKind::IndexOutOfRange, "element index out of range", {a});
    bits |= Mask{1} << a;
  }
  return Subset(width, bits);
}

unsigned Subset::count() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }

void Subset::check_width(const Subset& other) const {
  if (width_ != other.width_)
    throw Error(ErrorKind::BindingMismatch, "subsets bound to structures of different size");
}

bool Subset::subset_of(const Subset& other) const {
  check_width(other);
  return (bits_ & ~other.bits_) == 0;
}

Subset Subset::operator&(const Subset& other) const {
  check_width(other);
  return Subset(width_, bits_ & other.bits_);
}

Subset Subset::operator|(const Subset& other) const {
  check_width(other);
  return Subset(width_, bits_ | other.bits_);
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) out.push_back(static_cast<Element>(std::countr_zero(rest)));
  return out;
}

std::string Subset::str() const {
  std::string out = "{";
  bool first = true;
  for (Element a : elements()) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

Potency::Potency(unsigned m) : m_(m) {
  if (m < 1 || m > kMaxPotency)
    throw Error(ErrorKind::PotencyOutOfRange, "potency " + std::to_string(m) + " outside 1.." +
                                                  std::to_string(kMaxPotency));
}

// ---- OrderedSemigroup -----------------------------------------------------

std::vector<std::pair<Element, Element>> OrderedSemigroup::strict_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element i = 0; i < n_; ++i)
    for (Element j = 0; j < n_; ++j)
      if (i != j && leq(i, j)) out.emplace_back(i, j);
  return out;
}

bool OrderedSemigroup::is_discrete() const noexcept {
  for (Element a = 0; a < n_; ++a)
    if (down_[a] != (Mask{1} << a)) return false;
  return true;
}

namespace {

std::string triple(const char* what, unsigned a, unsigned b, unsigned c) {
  std::ostringstream os;
  os << what << " (" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

OrderedSemigroup validate_structure(unsigned n, std::span<const Element> table,
                                    std::span<const std::uint8_t> relation, std::string name) {
  if (n < 1 || n > kMaxSize)
    throw Error(ErrorKind::SizeOutOfRange, "structure size " + std::to_string(n) + " outside 1.." +
                                               std::to_string(kMaxSize));
  if (table.size() != std::size_t{n} * n || relation.size() != std::size_t{n} * n)
    throw Error(ErrorKind::SizeOutOfRange, "table or relation is not n x n");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw Error(ErrorKind::IndexOutOfRange, "table entry out of range",
                  {static_cast<unsigned>(i / n), static_cast<unsigned>(i % n)});

  auto mul = [&](unsigned a, unsigned b) { return table[a * n + b]; };
  auto le = [&](unsigned a, unsigned b) { return relation[a * n + b] != 0; };

  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorKind::NotAssociative, triple("not associative at", a, b, c), {a, b, c});

  for (unsigned a = 0; a < n; ++a)
    if (!le(a, a))
      throw NotPartialOrderError(OrderAxiom::Reflexivity, "relation not reflexive at " + std::to_string(a),
                                 {a, a});
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (le(a, b) && le(b, a))
        throw NotPartialOrderError(OrderAxiom::Antisymmetry,
                                   "relation not antisymmetric at (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")",
                                   {a, b});
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          throw NotPartialOrderError(OrderAxiom::Transitivity, triple("relation not transitive at", a, b, c),
                                     {a, c});

  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      if (a == b || !le(a, b)) continue;
      for (unsigned x = 0; x < n; ++x)
        if (!le(mul(x, a), mul(x, b)) || !le(mul(a, x), mul(b, x)))
          throw Error(ErrorKind::NotCompatible, triple("order not compatible at (a,b,x) =", a, b, x), {a, b, x});
    }

  OrderedSemigroup s;
  s.n_ = n;
  s.name_ = std::move(name);
  s.table_.assign(table.begin(), table.end());
  for (unsigned b = 0; b < n; ++b)
    for (unsigned a = 0; a < n; ++a)
      if (le(a, b)) s.down_[b] |= Mask{1} << a;

  s.powers_[0] = Subset::empty(n);  // unused slot
  s.powers_[1] = Subset::full(n);
  for (unsigned k = 2; k <= kMaxPotency; ++k) s.powers_[k] = subset_product(s, s.powers_[k - 1], s.powers_[1]);
  return s;
}

OrderedSemigroup make_structure(std::string name, unsigned n, std::span<const Element> table,
                                std::span<const std::pair<Element, Element>> strict_pairs) {
  if (n < 1 || n > kMaxSize) throw Error(ErrorKind::SizeOutOfRange, "structure size out of range");
  std::vector<std::uint8_t> rel(std::size_t{n} * n, 0);
  for (unsigned a = 0; a < n; ++a) rel[a * n + a] = 1;
  for (auto [i, j] : strict_pairs) {
    if (i >= n || j >= n) throw Error(ErrorKind::IndexOutOfRange, "order pair out of range", {i, j});
    rel[i * n + j] = 1;
  }
  return validate_structure(n, table, rel, std::move(name));
}

// ---- subset algebra -------------------------------------------------------

void check_binding(const OrderedSemigroup& s, const Subset& a) {
  if (a.width() != s.size())
    throw Error(ErrorKind::BindingMismatch, "subset of width " + std::to_string(a.width()) +
                                                " used with structure of size " + std::to_string(s.size()));
}

Subset subset_product(const OrderedSemigroup& s, const Subset& a, const Subset& b) {
  check_binding(s, a);
  check_binding(s, b);
  Mask out = 0;
  for (Mask ra = a.bits(); ra != 0; ra &= ra - 1) {
    const auto x = static_cast<Element>(std::countr_zero(ra));
    for (Mask rb = b.bits(); rb != 0; rb &= rb - 1) out |= Mask{1} << s.mul(x, static_cast<Element>(std::countr_zero(rb)));
  }
  return Subset(s.size(), out);
}

Subset universe_power(const OrderedSemigroup& s, Potency m) { return s.power(m); }

Subset downward_closure(const OrderedSemigroup& s, const Subset& h) {
  check_binding(s, h);
  Mask out = 0;
  for (Mask rest = h.bits(); rest != 0; rest &= rest - 1) out |= s.down_set(static_cast<Element>(std::countr_zero(rest)));
  return Subset(s.size(), out);
}

bool is_downward_closed(const OrderedSemigroup& s, const Subset& a) { return downward_closure(s, a) == a; }

bool is_subsemigroup(const OrderedSemigroup& s, const Subset& a) {
  check_binding(s, a);
  return !a.empty() && subset_product(s, a, a).subset_of(a);
}

}  // namespace osg
