#pragma once

// Exhaustive construction of small ordered semigroups.

#include <cstdint>
#include <string>
#include <vector>

#include "osg/structure.hpp"

namespace osg {

inline constexpr unsigned kMaxGenerationOrder = 4;

using Table = std::vector<Element>;          // row-major n*n
using Relation = std::vector<std::uint8_t>;  // row-major n*n, 1 where i <= j

struct GenerationSpec {
  unsigned max_order = 3;
  bool up_to_iso = false;
};

/// Associative n*n tables in lexicographic order. Depth-first cell fill,
/// pruned as soon as a fully determined triple fails associativity. The
/// search is sharded by first row across OpenMP threads.
std::vector<Table> enumerate_associative_tables(unsigned n);
/// Single-threaded reference for the above; identical output.
std::vector<Table> enumerate_associative_tables_serial(unsigned n);

/// All partial orders on n elements, discrete order first.
const std::vector<Relation>& labeled_posets(unsigned n);

/// Partial orders compatible with `table`. Throws NotAssociative.
std::vector<Relation> enumerate_compatible_orders(unsigned n, const Table& table);

/// Minimum over all relabelings of the serialized (table, order) pair.
std::string canonical_form(const OrderedSemigroup& s);

std::vector<OrderedSemigroup> generate_corpus(const GenerationSpec& spec);

}  // namespace osg
