#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ohno/index.hpp"

namespace ohno {

/// X stands for the form dt/t, Y for dt/(1-t).
enum class Letter : std::uint8_t { X = 0, Y = 1 };

/// Iterated-integral word of an admissible index, written from the upper
/// integration endpoint down:
///   (k_1, ..., k_r)  ->  X^{k_r-1} Y X^{k_{r-1}-1} Y ... X^{k_1-1} Y
/// Under this encoding the dual index is the reversed, letter-swapped word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  /// Parses a string over {X, Y}.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Throws DomainError unless k is admissible.
Word to_word(const Index& k);
/// Inverse of to_word; throws DomainError unless w starts with X and ends with Y.
Index from_word(const Word& w);
Word reverse_swap(const Word& w);

/// Letters of k's word from the lower endpoint up (the order in which the
/// power-series recursion consumes them): Y X^{k_1-1} ... Y X^{k_r-1}.
std::vector<Letter> series_letters(const Index& k);

}  // namespace ohno
