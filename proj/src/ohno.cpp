#include "ohno/ohno.hpp"

#include <string>

#include "ohno/error.hpp"

namespace ohno {

namespace {

void require_admissible_support(const IndexCombination& c, const char* what) {
  for (const auto& [k, coef] : c) {
    if (!k.admissible()) {
      throw DomainError(std::string(what) + " requires admissible indices, got (" + k.to_string() + ")");
    }
  }
}

}  // namespace

IndexCombination shift_sum(const IndexCombination& c, int m) {
  if (m < 0) throw DomainError("shift weight must be nonnegative, got " + std::to_string(m));
  if (m == 0) return c;
  IndexCombination out;
  for (const auto& [k, coef] : c) {
    if (k.empty()) throw DomainError("cannot shift the empty index by a positive weight");
    for_each_shift(static_cast<int>(k.depth()), m, [&](std::span<const int> e) { out.add(oplus(k, e), coef); });
  }
  return out;
}

IndexCombination ohno_m_symbolic(const IndexCombination& c, int m) {
  require_admissible_support(c, "the Ohno sum");
  return shift_sum(c, m);
}

double ohno_m(const IndexCombination& c, int m, const ZetaEvaluator& z) {
  return z.combination(ohno_m_symbolic(c, m));
}

double ohno_m(const IndexCombination& c, int m, const EvalConfig& cfg) {
  return ohno_m(c, m, ZetaEvaluator(cfg));
}

TruncatedSeries ohno_series(const IndexCombination& c, int M, const ZetaEvaluator& z) {
  if (M < 0) throw DomainError("series length M must be nonnegative");
  TruncatedSeries out;
  out.tol = z.config().tol;
  out.coefficients.reserve(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) out.coefficients.push_back(ohno_m(c, m, z));
  return out;
}

TruncatedSeries ohno_series(const IndexCombination& c, int M, const EvalConfig& cfg) {
  return ohno_series(c, M, ZetaEvaluator(cfg));
}

IndexCombination hast_shift_sum(int base, const IndexCombination& x, int m) {
  IndexCombination out;
  for (int m1 = 0; m1 <= m; ++m1) out += hast(base + m1, shift_sum(x, m - m1));
  return out;
}

IndexCombination f_combination(int s, const Index& k, int l, int m) {
  if (s < 2) throw DomainError("F needs s >= 2, got " + std::to_string(s));
  if (!k.admissible()) throw DomainError("F needs an admissible index, got (" + k.to_string() + ")");
  if (l < 0 || m < 0) throw DomainError("F needs l, m >= 0");
  const IndexCombination head(Index{s});
  const IndexCombination body = sha_twos(k, l);
  return ohno_m_symbolic(sha(head, body), m) - ohno_m_symbolic(sha(head, dual_linear(body)), m);
}

IndexCombination d_combination(int s, int t, int l, int m) {
  return f_combination(s, Index{t + 1}, l, m) - f_combination(t, Index{s + 1}, l, m);
}

double F_ml(int s, const Index& k, int l, int m, const ZetaEvaluator& z) {
  return z.combination(f_combination(s, k, l, m));
}

double F_ml(int s, const Index& k, int l, int m, const EvalConfig& cfg) {
  return F_ml(s, k, l, m, ZetaEvaluator(cfg));
}

double D_ml(int s, int t, int l, int m, const ZetaEvaluator& z) { return z.combination(d_combination(s, t, l, m)); }

double D_ml(int s, int t, int l, int m, const EvalConfig& cfg) { return D_ml(s, t, l, m, ZetaEvaluator(cfg)); }

HoffmanSides hoffman_sides(const Index& k) {
  if (!k.admissible()) {
    throw DomainError("Hoffman's relation needs an admissible index, got (" + k.to_string() + ")");
  }
  HoffmanSides out;
  const auto e = k.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::vector<int> bumped(e.begin(), e.end());
    ++bumped[i];
    out.lhs.add(Index(std::move(bumped)), 1);
    for (int j = 0; j + 2 <= e[i]; ++j) {
      std::vector<int> split(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i));
      split.push_back(j + 1);
      split.push_back(e[i] - j);
      split.insert(split.end(), e.begin() + static_cast<std::ptrdiff_t>(i) + 1, e.end());
      out.rhs.add(Index(std::move(split)), 1);
    }
  }
  return out;
}

double hoffman_lhs_minus_rhs(const Index& k, const ZetaEvaluator& z) {
  const auto sides = hoffman_sides(k);
  return z.combination(sides.lhs - sides.rhs);
}

double hoffman_lhs_minus_rhs(const Index& k, const EvalConfig& cfg) {
  return hoffman_lhs_minus_rhs(k, ZetaEvaluator(cfg));
}

}  // namespace ohno
