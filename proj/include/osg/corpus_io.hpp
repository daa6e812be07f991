#pragma once

// The `.osg` corpus format. One record per structure:
//
//   %osg 1
//   name <ident>
//   size <n>
//   mul
//   <n lines of n space-separated indices>
//   leq
//   <zero or more lines "i j": element i < element j>
//   end
//
// Lines starting with '#' and blank lines are ignored. leq pairs are strict
// and must already be transitively closed.

#include <string>
#include <string_view>
#include <vector>

#include "osg/structure.hpp"

namespace osg {

/// Throws ParseError(FormatError) with the line number, or the structure's
/// validation error prefixed with record name and line.
std::vector<OrderedSemigroup> parse_corpus(std::string_view text);
std::string write_corpus(const std::vector<OrderedSemigroup>& corpus);

std::vector<OrderedSemigroup> read_corpus_file(const std::string& path);
std::string read_file(const std::string& path);

/// FNV-1a 64, lower-case hex.
std::string content_hash(std::string_view bytes);

}  // namespace osg
