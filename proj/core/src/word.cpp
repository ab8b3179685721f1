#include "hopfimage/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hopfimage/error.hpp"

namespace hopfimage {

Word involute(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& letter : out) letter.starred = !letter.starred;
  return out;
}

bool is_subword(const Word& a, const Word& b) {
  std::size_t pos = 0;
  for (const auto& letter : b) {
    if (pos < a.size() && a[pos] == letter) ++pos;
  }
  return pos == a.size();
}

bool next_word(Word& w, std::size_t index_set_size) {
  for (std::size_t t = w.size(); t-- > 0;) {
    Letter& letter = w[t];
    if (!letter.starred) {
      letter.starred = true;
      return true;
    }
    if (letter.index + 1 < index_set_size) {
      letter = {letter.index + 1, false};
      return true;
    }
    letter = {0, false};
  }
  return false;
}

std::vector<Word> enumerate_words(std::size_t index_set_size, std::size_t length) {
  std::vector<Word> out;
  if (index_set_size == 0 && length > 0) return out;
  Word w(length, Letter{0, false});
  do {
    out.push_back(w);
  } while (next_word(w, index_set_size));
  return out;
}

std::vector<bool> star_pattern(const Word& w) {
  std::vector<bool> out;
  out.reserve(w.size());
  for (const auto& letter : w) out.push_back(letter.starred);
  return out;
}

AlignedWords align_words(const Word& left, const Word& right, std::size_t default_left,
                         std::size_t default_right, std::size_t right_index_set_size) {
  AlignedWords out;
  out.left = left;
  for (const auto& letter : right) out.left.push_back({default_left, letter.starred});
  for (const auto& letter : left) out.right.push_back({default_right, letter.starred});
  out.right.insert(out.right.end(), right.begin(), right.end());
  for (std::size_t t = 0; t < out.left.size(); ++t) {
    out.combined.push_back(
        {out.left[t].index * right_index_set_size + out.right[t].index, out.left[t].starred});
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t > 0) out += ' ';
    out += 'i';
    out += std::to_string(w[t].index);
    if (w[t].starred) out += '*';
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    bool starred = false;
    if (!token.empty() && token.back() == '*') {
      starred = true;
      token.pop_back();
    }
    if (token.size() < 2 || token.front() != 'i') {
      throw HopfError(ErrorCode::ParseError, "bad word letter '" + token + "'");
    }
    std::size_t index = 0;
    const auto* first = token.data() + 1;
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc() || ptr != last) {
      throw HopfError(ErrorCode::ParseError, "bad word letter '" + token + "'");
    }
    out.push_back({index, starred});
  }
  return out;
}

}  // namespace hopfimage
