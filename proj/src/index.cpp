#include "ohno/index.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "ohno/error.hpp"

namespace ohno {

namespace {

void check_positive(const std::vector<int>& entries) {
  for (int v : entries) {
    if (v < 1) {
      throw DomainError("index entries must be positive, got " + std::to_string(v));
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Index::Index(std::initializer_list<int> entries) : entries_(entries) { check_positive(entries_); }

Index::Index(std::vector<int> entries) : entries_(std::move(entries)) { check_positive(entries_); }

Index Index::parse(std::string_view text) {
  text = trim(text);
  if (text == "()" || text.empty()) {
    if (text.empty()) throw DomainError("empty index text (write \"()\" for the empty index)");
    return Index{};
  }
  if (text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  std::vector<int> entries;
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw DomainError("malformed index entry '" + std::string(field) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Index(std::move(entries));
}

int Index::weight() const {
  int w = 0;
  for (int v : entries_) w += v;
  return w;
}

bool Index::admissible() const { return !entries_.empty() && entries_.back() >= 2; }

std::string Index::to_string() const {
  if (entries_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Index& a, const Index& b) {
  if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

std::size_t IndexHash::operator()(const Index& k) const noexcept {
  // FNV-1a over the entries.
  std::size_t h = 1469598103934665603ull;
  for (int v : k) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h ^ k.depth();
}

Index dual(const Index& k) {
  if (!k.admissible()) {
    throw DomainError("dual requires an admissible index, got (" + k.to_string() + ")");
  }
  // k = ({1}^{a_1-1}, b_1+1, ..., {1}^{a_n-1}, b_n+1)
  struct Run {
    int a;
    int b;
  };
  std::vector<Run> runs;
  int ones = 0;
  for (int v : k) {
    if (v == 1) {
      ++ones;
    } else {
      runs.push_back({ones + 1, v - 1});
      ones = 0;
    }
  }
  // k^dagger = ({1}^{b_n-1}, a_n+1, ..., {1}^{b_1-1}, a_1+1)
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k.weight()) - k.depth());
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    out.insert(out.end(), static_cast<std::size_t>(it->b - 1), 1);
    out.push_back(it->a + 1);
  }
  return Index(std::move(out));
}

Index oplus(const Index& k, std::span<const int> e) {
  if (e.size() != k.depth()) {
    throw DomainError("oplus: depth mismatch between (" + k.to_string() + ") and a shift of length " +
                      std::to_string(e.size()));
  }
  std::vector<int> out(k.begin(), k.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (e[i] < 0) throw DomainError("oplus: shift entries must be nonnegative");
    out[i] += e[i];
  }
  return Index(std::move(out));
}

void for_each_shift(int r, int m, const std::function<void(std::span<const int>)>& fn) {
  if (r < 0 || m < 0) throw DomainError("enumerate_shifts: r and m must be nonnegative");
  if (r == 0) {
    if (m > 0) throw DomainError("enumerate_shifts: no shift of length 0 has positive weight");
    fn({});
    return;
  }
  // Lexicographic successor: bump the rightmost slot i < r-1 whose suffix
  // e[i+1..] is nonzero and move the rest of that suffix to the last slot.
  const auto last = static_cast<std::size_t>(r - 1);
  std::vector<int> e(static_cast<std::size_t>(r), 0);
  e[last] = m;
  while (true) {
    fn(e);
    int tail = e[last];
    e[last] = 0;
    int i = r - 2;
    while (i >= 0 && tail == 0) {
      tail += e[static_cast<std::size_t>(i)];
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++e[static_cast<std::size_t>(i)];
    e[last] = tail - 1;
  }
}

std::vector<ShiftVector> enumerate_shifts(int r, int m) {
  std::vector<ShiftVector> out;
  for_each_shift(r, m, [&](std::span<const int> e) { out.emplace_back(e.begin(), e.end()); });
  return out;
}

Index repeat(int a, int l) {
  if (l < 0) throw DomainError("repeat: negative repetition count");
  if (a < 1) throw DomainError("repeat: entries must be positive");
  return Index(std::vector<int>(static_cast<std::size_t>(l), a));
}

Index concat(std::initializer_list<Index> pieces) {
  std::vector<int> out;
  for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
  return Index(std::move(out));
}

std::vector<Index> admissible_indices(int weight) {
  std::vector<Index> out;
  if (weight < 2) return out;
  // Compositions of weight with last part >= 2.
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      if (cur.back() >= 2) out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= remaining; ++v) {
      cur.push_back(v);
      rec(remaining - v);
      cur.pop_back();
    }
  };
  rec(weight);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

}  // namespace ohno
