#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ohno {

/// A finite sequence of positive integers. The empty index is the unit of
/// the shuffle product and is never evaluated.
///
/// Indices order canonically: by depth first, then lexicographically by
/// entries. Every container keyed by Index relies on that order for
/// deterministic serialization.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> entries);
  explicit Index(std::vector<int> entries);

  /// Parses "1,3" (whitespace tolerated) or "()" for the empty index.
  static Index parse(std::string_view text);

  std::span<const int> entries() const { return entries_; }
  std::size_t depth() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  int weight() const;
  /// Nonempty with last entry >= 2.
  bool admissible() const;

  /// "1,3"; the empty index prints as "()".
  std::string to_string() const;

  friend bool operator==(const Index&, const Index&) = default;
  friend std::strong_ordering operator<=>(const Index& a, const Index& b);

 private:
  std::vector<int> entries_;
};

/// Nonnegative integer sequence used with oplus.
using ShiftVector = std::vector<int>;

struct IndexHash {
  std::size_t operator()(const Index& k) const noexcept;
};

inline int weight(const Index& k) { return k.weight(); }
inline std::size_t depth(const Index& k) { return k.depth(); }
inline bool admissible(const Index& k) { return k.admissible(); }

/// The dual index, computed from the decomposition of k into runs
/// ({1}^{a-1}, b+1). Throws DomainError unless k is admissible.
Index dual(const Index& k);

/// Componentwise sum. Throws DomainError on a depth mismatch or a negative
/// shift entry.
Index oplus(const Index& k, std::span<const int> e);

/// All length-r nonnegative vectors with entry sum m, in lexicographic
/// order. r = 0 yields the single empty vector when m = 0 and is rejected
/// otherwise.
std::vector<ShiftVector> enumerate_shifts(int r, int m);

/// Calls fn(span) for each vector enumerate_shifts(r, m) would return, in
/// the same order, without materializing the list.
void for_each_shift(int r, int m, const std::function<void(std::span<const int>)>& fn);

/// {a}^l.
Index repeat(int a, int l);

/// Concatenation of index pieces; entries must already be positive.
Index concat(std::initializer_list<Index> pieces);

/// Every admissible index of the given weight, in canonical order.
std::vector<Index> admissible_indices(int weight);

/// Binomial coefficient as an exact 64-bit value (small arguments only).
unsigned long long binomial(int n, int k);

}  // namespace ohno
