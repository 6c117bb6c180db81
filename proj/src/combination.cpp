#include "ohno/combination.hpp"

#include <vector>

#include "ohno/error.hpp"

namespace ohno {

IndexCombination::IndexCombination(const Index& k) { add(k, 1); }

IndexCombination::IndexCombination(const Index& k, const Coefficient& c) { add(k, c); }

namespace {

// GMP arithmetic assumes canonical operands; callers may pass e.g. 6/4.
Coefficient canonical(const Coefficient& c) {
  Coefficient out = c;
  if (mpz_cmp_ui(out.get_den_mpz_t(), 1) != 0) out.canonicalize();
  return out;
}

}  // namespace

void IndexCombination::add(const Index& k, const Coefficient& coefficient) {
  const Coefficient c = canonical(coefficient);
  if (c == 0) return;
  auto it = terms_.lower_bound(k);
  if (it != terms_.end() && it->first == k) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace_hint(it, k, c);
  }
}

void IndexCombination::add(Index&& k, const Coefficient& coefficient) {
  const Coefficient c = canonical(coefficient);
  if (c == 0) return;
  auto it = terms_.lower_bound(k);
  if (it != terms_.end() && it->first == k) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace_hint(it, std::move(k), c);
  }
}

void IndexCombination::add(const IndexCombination& other, const Coefficient& scale) {
  if (scale == 0) return;
  for (const auto& [k, c] : other.terms_) add(k, c * scale);
}

Coefficient IndexCombination::coefficient(const Index& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

Coefficient IndexCombination::l1_norm() const {
  Coefficient total = 0;
  for (const auto& [k, c] : terms_) total += abs(c);
  return total;
}

IndexCombination& IndexCombination::operator+=(const IndexCombination& o) {
  add(o, 1);
  return *this;
}

IndexCombination& IndexCombination::operator-=(const IndexCombination& o) {
  add(o, -1);
  return *this;
}

IndexCombination& IndexCombination::operator*=(const Coefficient& scale) {
  const Coefficient c = canonical(scale);
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string IndexCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Coefficient mag = abs(c);
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += '(';
    if (!k.empty()) out += k.to_string();
    out += ')';
  }
  return out;
}

IndexCombination sha(const Index& a, const Index& b) {
  IndexCombination out;
  const std::size_t p = a.depth();
  const std::size_t q = b.depth();
  std::vector<int> buf(p + q);
  // Depth-first over interleavings; each leaf is one term of the recursion.
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == p && j == q) {
      out.add(Index(buf), 1);
      return;
    }
    if (i < p) {
      buf[i + j] = a[i];
      self(self, i + 1, j);
    }
    if (j < q) {
      buf[i + j] = b[j];
      self(self, i, j + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

IndexCombination sha(const IndexCombination& p, const IndexCombination& q) {
  IndexCombination out;
  for (const auto& [a, ca] : p) {
    for (const auto& [b, cb] : q) out.add(sha(a, b), ca * cb);
  }
  return out;
}

IndexCombination hast(int k, const IndexCombination& l) {
  if (k < 1) throw DomainError("hast: the scalar argument must be a positive integer");
  IndexCombination out;
  for (const auto& [idx, c] : l) {
    if (idx.empty()) throw DomainError("hast is undefined on the empty index");
    std::vector<int> entries(idx.begin(), idx.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      entries[i] += k;
      out.add(Index(entries), c);
      entries[i] -= k;
    }
  }
  return out;
}

IndexCombination star_single(int k, const IndexCombination& l) {
  IndexCombination out = hast(k, l);
  out += sha(IndexCombination(Index{k}), l);
  return out;
}

IndexCombination dual_linear(const IndexCombination& c) {
  IndexCombination out;
  for (const auto& [k, v] : c) out.add(dual(k), v);
  return out;
}

IndexCombination append(const IndexCombination& c, const Index& tail) {
  IndexCombination out;
  for (const auto& [k, v] : c) out.add(concat({k, tail}), v);
  return out;
}

IndexCombination repeat_combination(int a, int l) {
  if (l < 0) return {};
  return IndexCombination(repeat(a, l));
}

IndexCombination sha_twos(const IndexCombination& x, int l) {
  if (l < 0) return {};
  return sha(x, IndexCombination(repeat(2, l)));
}

}  // namespace ohno
