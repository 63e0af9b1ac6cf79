#pragma once

#include <string>

#include "kmw/monoid.hpp"

namespace kmw {

// Element words: whitespace-separated tokens, left-to-right product.
//   sI        simple reflection (1-based index I)
//   e[i,j]    idempotent of the standard face of the special set {i,j}
//   e[]       the unit
// The empty word is the unit.
struct ParsedElement {
  MonoidElement elem;
  IsectStatus status;  // worst status over the folded products
};

ParsedElement parse_element_word(const RealizationPtr& r, const std::string& word,
                                 const IsectOptions& opts = {});

// Canonical re-parseable rendering from the Type1 normal form; the unit
// prints as "e[]".
std::string format_element_word(const MonoidElement& x);

}  // namespace kmw
