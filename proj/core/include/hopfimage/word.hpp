#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hopfimage {

/// A letter i or its adjoint copy i*.
struct Letter {
  std::size_t index = 0;
  bool starred = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Element of the word language over an index set; the empty word is allowed.
using Word = std::vector<Letter>;

/// Reverse the word and toggle every star.
Word involute(const Word& w);
/// True iff a embeds in b as an order-preserving subsequence.
bool is_subword(const Word& a, const Word& b);
/// All (2 * index_set_size)^length words, lexicographic with i < i* < (i+1).
std::vector<Word> enumerate_words(std::size_t index_set_size, std::size_t length);
/// Lexicographic successor in enumerate_words order; false after the last word.
bool next_word(Word& w, std::size_t index_set_size);

struct AlignedWords {
  Word left;      // wI followed by padding
  Word right;     // padding followed by wJ
  Word combined;  // letter (i, j) -> i * right_index_set_size + j
};

/// Pads two words to a common length with matching star patterns and pairs them.
AlignedWords align_words(const Word& left, const Word& right, std::size_t default_left,
                         std::size_t default_right, std::size_t right_index_set_size);

/// Star pattern of a word.
std::vector<bool> star_pattern(const Word& w);

/// "i0 i2* i1"; the empty word prints as "".
std::string format_word(const Word& w);
Word parse_word(std::string_view text);

}  // namespace hopfimage
