#include "osg/generation.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace osg {

namespace {

constexpr Element kUnset = ~Element{0};

void check_order(unsigned n) {
  if (n < 1 || n > kMaxGenerationOrder)
    throw Error(ErrorKind::SizeOutOfRange,
                "generation order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGenerationOrder));
}

/// False if some triple with all four lookups defined breaks associativity.
bool consistent(unsigned n, const Table& t) {
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      const Element ab = t[a * n + b];
      if (ab == kUnset) continue;
      for (unsigned c = 0; c < n; ++c) {
        const Element bc = t[b * n + c];
        if (bc == kUnset) continue;
        const Element lhs = t[ab * n + c];
        const Element rhs = t[a * n + bc];
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
      }
    }
  return true;
}

void fill(unsigned n, Table& t, unsigned cell, std::vector<Table>& out) {
  if (cell == n * n) {
    out.push_back(t);
    return;
  }
  for (Element v = 0; v < n; ++v) {
    t[cell] = v;
    if (consistent(n, t)) fill(n, t, cell + 1, out);
  }
  t[cell] = kUnset;
}

/// Decodes shard index into the first row, most significant cell first.
Table first_row_prefix(unsigned n, std::size_t shard) {
  Table t(n * n, kUnset);
  for (unsigned j = n; j-- > 0;) {
    t[j] = static_cast<Element>(shard % n);
    shard /= n;
  }
  return t;
}

bool is_partial_order(unsigned n, const Relation& r) {
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      if (a != b && r[a * n + b] && r[b * n + a]) return false;
      for (unsigned c = 0; c < n; ++c)
        if (r[a * n + b] && r[b * n + c] && !r[a * n + c]) return false;
    }
  return true;
}

bool compatible(unsigned n, const Table& t, const Relation& r) {
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      if (a == b || !r[a * n + b]) continue;
      for (unsigned x = 0; x < n; ++x)
        if (!r[t[x * n + a] * n + t[x * n + b]] || !r[t[a * n + x] * n + t[b * n + x]]) return false;
    }
  return true;
}

}  // namespace

std::vector<Table> enumerate_associative_tables_serial(unsigned n) {
  check_order(n);
  std::vector<Table> out;
  Table t(n * n, kUnset);
  fill(n, t, 0, out);
  return out;
}

std::vector<Table> enumerate_associative_tables(unsigned n) {
  check_order(n);
  std::size_t shards = 1;
  for (unsigned j = 0; j < n; ++j) shards *= n;

  std::vector<std::vector<Table>> parts(shards);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(shards); ++i) {
    Table t = first_row_prefix(n, static_cast<std::size_t>(i));
    if (consistent(n, t)) fill(n, t, n, parts[static_cast<std::size_t>(i)]);
  }

  std::vector<Table> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

const std::vector<Relation>& labeled_posets(unsigned n) {
  check_order(n);
  static const std::array<std::vector<Relation>, kMaxGenerationOrder + 1> cache = [] {
    std::array<std::vector<Relation>, kMaxGenerationOrder + 1> all;
    for (unsigned k = 1; k <= kMaxGenerationOrder; ++k) {
      std::vector<std::pair<unsigned, unsigned>> pairs;
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
          if (i != j) pairs.emplace_back(i, j);
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        Relation r(k * k, 0);
        for (unsigned i = 0; i < k; ++i) r[i * k + i] = 1;
        for (std::size_t p = 0; p < pairs.size(); ++p)
          if ((mask >> p) & 1U) r[pairs[p].first * k + pairs[p].second] = 1;
        if (is_partial_order(k, r)) all[k].push_back(std::move(r));
      }
    }
    return all;
  }();
  return cache[n];
}

std::vector<Relation> enumerate_compatible_orders(unsigned n, const Table& table) {
  check_order(n);
  if (table.size() != n * n) throw Error(ErrorKind::SizeOutOfRange, "table is not n x n");
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
          throw Error(ErrorKind::NotAssociative, "table is not associative", {a, b, c});

  std::vector<Relation> out;
  for (const Relation& r : labeled_posets(n))
    if (compatible(n, table, r)) out.push_back(r);
  return out;
}

std::string canonical_form(const OrderedSemigroup& s) {
  const unsigned n = s.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  std::string best;
  std::string cur(1 + 2 * n * n, '\0');
  do {
    // perm maps old label -> new label.
    cur[0] = static_cast<char>(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        cur[1 + perm[a] * n + perm[b]] = static_cast<char>(perm[s.mul(a, b)]);
        cur[1 + n * n + perm[a] * n + perm[b]] = static_cast<char>(s.leq(a, b));
      }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<OrderedSemigroup> generate_corpus(const GenerationSpec& spec) {
  check_order(spec.max_order);
  std::vector<OrderedSemigroup> out;
  std::set<std::string> seen;
  for (unsigned n = 1; n <= spec.max_order; ++n) {
    const auto tables = enumerate_associative_tables(n);
    for (std::size_t ti = 0; ti < tables.size(); ++ti) {
      const auto orders = enumerate_compatible_orders(n, tables[ti]);
      for (std::size_t oi = 0; oi < orders.size(); ++oi) {
        std::string name = "n" + std::to_string(n) + "_t" + std::to_string(ti) + "_o" + std::to_string(oi);
        OrderedSemigroup s = validate_structure(n, tables[ti], orders[oi], std::move(name));
        if (spec.up_to_iso && !seen.insert(canonical_form(s)).second) continue;
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace osg
