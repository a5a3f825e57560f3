#pragma once

#include <string>
#include <vector>

namespace chinoid {

/// Generator index. Valid letters lie in 1..n for the ambient rank n.
using Gen = int;

/// A word over the generators; the empty word is the monoid identity.
using Word = std::vector<Gen>;

/// Throws std::invalid_argument unless every letter lies in 1..n.
void check_word(const Word& w, int n);

/// Parses whitespace-separated tokens "a3 a1 a2". The token "1" (alone) and
/// the empty string both denote the empty word.
Word word_from_string(const std::string& text);

/// Formats as "a3 a1 a2"; the empty word prints as "1".
std::string word_to_string(const Word& w);

/// Number of occurrences of `gen` in `w`.
long letter_count(const Word& w, Gen gen);

Word concat(const Word& a, const Word& b);

}  // namespace chinoid
