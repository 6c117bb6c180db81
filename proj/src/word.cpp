#include "ohno/word.hpp"

#include <algorithm>

#include "ohno/error.hpp"

namespace ohno {

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch == 'X' || ch == 'x') {
      letters.push_back(Letter::X);
    } else if (ch == 'Y' || ch == 'y') {
      letters.push_back(Letter::Y);
    } else {
      throw DomainError(std::string("word letters must be X or Y, got '") + ch + "'");
    }
  }
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out += (l == Letter::X ? 'X' : 'Y');
  return out;
}

Word to_word(const Index& k) {
  if (!k.admissible()) {
    throw DomainError("to_word requires an admissible index, got (" + k.to_string() + ")");
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(k.weight()));
  for (std::size_t i = k.depth(); i-- > 0;) {
    letters.insert(letters.end(), static_cast<std::size_t>(k[i] - 1), Letter::X);
    letters.push_back(Letter::Y);
  }
  return Word(std::move(letters));
}

Index from_word(const Word& w) {
  const auto& letters = w.letters();
  if (letters.empty() || letters.front() != Letter::X || letters.back() != Letter::Y) {
    throw DomainError("from_word: word must start with X and end with Y, got '" + w.to_string() + "'");
  }
  // Each Y closes a run X^{k_i - 1} Y; runs appear from k_r down to k_1.
  std::vector<int> reversed;
  int run = 0;
  for (Letter l : letters) {
    if (l == Letter::X) {
      ++run;
    } else {
      reversed.push_back(run + 1);
      run = 0;
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return Index(std::move(reversed));
}

Word reverse_swap(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = (l == Letter::X ? Letter::Y : Letter::X);
  return Word(std::move(out));
}

std::vector<Letter> series_letters(const Index& k) {
  auto letters = to_word(k).letters();
  std::reverse(letters.begin(), letters.end());
  return letters;
}

}  // namespace ohno
