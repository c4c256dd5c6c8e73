#pragma once

#include <vector>

#include "tlcat/diagram.hpp"

namespace tlcat {

// all noncrossing perfect matchings between the rows spanned by the two words,
// in canonical order; Catalan((|upper|+|lower|)) many
std::vector<Diagram> enumerate_cell(const Word& upper, const Word& lower);

// all words over {a,b} of the given length, lexicographic
std::vector<Word> all_words(std::size_t length);

}  // namespace tlcat
