#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>

#include "ohno/index.hpp"

namespace ohno {

/// Exact rational coefficient, always in canonical (reduced) form.
using Coefficient = mpq_class;

/// A finite Q-linear combination of indices. Zero coefficients are never
/// stored; iteration follows the canonical index order.
class IndexCombination {
 public:
  using Map = std::map<Index, Coefficient>;
  using const_iterator = Map::const_iterator;

  IndexCombination() = default;
  /// The combination 1*k.
  IndexCombination(const Index& k);  // NOLINT(google-explicit-constructor)
  IndexCombination(const Index& k, const Coefficient& c);

  void add(const Index& k, const Coefficient& c);
  void add(Index&& k, const Coefficient& c);
  void add(const IndexCombination& other, const Coefficient& scale = 1);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  /// Zero when k is absent.
  Coefficient coefficient(const Index& k) const;
  /// Sum of absolute values of the coefficients.
  Coefficient l1_norm() const;

  IndexCombination& operator+=(const IndexCombination& o);
  IndexCombination& operator-=(const IndexCombination& o);
  IndexCombination& operator*=(const Coefficient& c);

  friend IndexCombination operator+(IndexCombination a, const IndexCombination& b) { return a += b; }
  friend IndexCombination operator-(IndexCombination a, const IndexCombination& b) { return a -= b; }
  friend IndexCombination operator-(IndexCombination a) { return a *= -1; }
  friend IndexCombination operator*(const Coefficient& c, IndexCombination a) { return a *= c; }
  friend bool operator==(const IndexCombination& a, const IndexCombination& b) { return a.terms_ == b.terms_; }

  /// Canonical text: "2*(1,2) - (3) + 1/3*(2,2)"; the zero combination is "0".
  std::string to_string() const;

 private:
  Map terms_;
};

/// Shuffle product of two indices (all interleavings, with multiplicity).
IndexCombination sha(const Index& a, const Index& b);
/// Bilinear shuffle product.
IndexCombination sha(const IndexCombination& p, const IndexCombination& q);

/// (k) hast L: adds k to each position of each support index in turn.
/// Throws DomainError if the empty index is in the support.
IndexCombination hast(int k, const IndexCombination& l);

/// (k) * L = (k) sha L + (k) hast L, the single-entry harmonic product.
IndexCombination star_single(int k, const IndexCombination& l);

/// Termwise dual. Throws DomainError naming the first non-admissible
/// support index.
IndexCombination dual_linear(const IndexCombination& c);

/// Appends the entries of tail to every support index: the "(X, tail)"
/// notation applied to a combination X.
IndexCombination append(const IndexCombination& c, const Index& tail);

/// {a}^l as a combination; l < 0 gives the zero combination.
IndexCombination repeat_combination(int a, int l);

/// x sha {2}^l, zero when l < 0.
IndexCombination sha_twos(const IndexCombination& x, int l);

}  // namespace ohno
