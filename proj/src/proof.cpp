#include "ohno/proof.hpp"

#include <algorithm>
#include <string>

#include "ohno/error.hpp"
#include "ohno/ohno.hpp"

namespace ohno {

namespace {

Index twos(int n) { return repeat(2, n); }
Index ones(int n) { return repeat(1, n); }
Index one(int v) { return Index{v}; }
IndexCombination comb(const Index& k) { return IndexCombination(k); }

void validate_pq(const ProofQuantityParams& x) {
  if (x.l < 1) throw DomainError("G, H, I, J need l >= 1, got l = " + std::to_string(x.l));
  if (x.s < 2) throw DomainError("G, H, I, J need s >= 2, got s = " + std::to_string(x.s));
  if (x.m < 0) throw DomainError("G, H, I, J need m >= 0, got m = " + std::to_string(x.m));
  if (x.p < 1 || x.p > x.l + 1 || x.q < 1 || x.q > x.l + 1) {
    throw DomainError("p and q must lie in 1.." + std::to_string(x.l + 1) + ", got p = " + std::to_string(x.p) +
                      ", q = " + std::to_string(x.q));
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

/// Calls fn(parts) for every composition of total into n nonnegative parts.
template <class Fn>
void compositions(int n, int total, Fn&& fn) {
  for_each_shift(n, total, [&](std::span<const int> parts) { fn(parts); });
}

/// Entries parts[i] + 2, starting at position `from`, up to `to` (exclusive).
void push_twos_plus(std::vector<int>& out, std::span<const int> parts, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) out.push_back(parts[i] + 2);
}

int composition_weight(std::span<const int> parts, int s) {
  int w = 0;
  for (int v : parts) w += std::max(v - s + 1, 0);
  return w;
}

/// sum over compositions of (m + s) into l+1 parts of weight(parts) * body(parts).
template <class Weight, class Body>
IndexCombination composition_sum(int s, int l, int m, Weight&& weight, Body&& body) {
  IndexCombination out;
  compositions(l + 1, m + s, [&](std::span<const int> parts) {
    const int w = weight(parts);
    if (w != 0) out.add(body(parts), w);
  });
  return out;
}

/// (m_1+2, ..., m_i+3, ..., m_n+2).
Index bumped_at(std::span<const int> parts, std::size_t i) {
  std::vector<int> e;
  push_twos_plus(e, parts, 0, parts.size());
  e[i] += 1;
  return Index(std::move(e));
}

/// sum_{j=0}^{m_i} (m_1+2, ..., j+1, m_i-j+2, ..., m_n+2).
IndexCombination split_at(std::span<const int> parts, std::size_t i) {
  IndexCombination out;
  for (int j = 0; j <= parts[i]; ++j) {
    std::vector<int> e;
    push_twos_plus(e, parts, 0, i);
    e.push_back(j + 1);
    e.push_back(parts[i] - j + 2);
    push_twos_plus(e, parts, i + 1, parts.size());
    out.add(Index(std::move(e)), 1);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// G, H, I, J

IndexCombination G_pq(const ProofQuantityParams& x) {
  validate_pq(x);
  const int s = x.s, l = x.l, m = x.m, p = x.p, q = x.q;
  IndexCombination out;
  for (int a = 0; a <= m; ++a) {
    Index k;
    if (p < q) {
      k = concat({twos(p - 1), one(s + a + 2), twos(q - p - 1), one(3), twos(l - q + 1)});
    } else if (p == q) {
      k = concat({twos(p - 1), one(s + a + 3), twos(l - p + 1)});
    } else {
      k = concat({twos(q - 1), one(3), twos(p - q - 1), one(s + a + 2), twos(l - p + 1)});
    }
    out += ohno_m_symbolic(comb(k), m - a);
  }
  return out;
}

IndexCombination H_pq(const ProofQuantityParams& x) {
  validate_pq(x);
  const auto p = static_cast<std::size_t>(x.p - 1);
  const auto q = static_cast<std::size_t>(x.q - 1);
  return composition_sum(
      x.s, x.l, x.m, [&](std::span<const int> parts) { return std::max(parts[p] - x.s + 1, 0); },
      [&](std::span<const int> parts) { return comb(bumped_at(parts, q)); });
}

IndexCombination I_pq(const ProofQuantityParams& x) {
  validate_pq(x);
  const int s = x.s, l = x.l, m = x.m, p = x.p, q = x.q;
  IndexCombination out;
  for (int a = 0; a <= m; ++a) {
    if (p < q) {
      out += ohno_m_symbolic(comb(concat({twos(p - 1), one(s + a + 2), twos(q - p - 1), one(1), twos(l - q + 2)})),
                             m - a);
    } else if (p == q) {
      out += ohno_m_symbolic(comb(concat({twos(p - 1), one(1), one(s + a + 2), twos(l - p + 1)})), m - a);
      out += ohno_m_symbolic(comb(concat({twos(p - 1), one(s + a + 1), twos(l - p + 2)})), m - a);
    } else {
      out += ohno_m_symbolic(comb(concat({twos(q - 1), one(1), twos(p - q), one(s + a + 2), twos(l - p + 1)})),
                             m - a);
    }
  }
  if (p == q) {
    for (int j = 0; j <= s - 2; ++j) {
      out += ohno_m_symbolic(comb(concat({twos(p - 1), one(j + 2), one(s - j + 1), twos(l - p + 1)})), m);
    }
  }
  return out;
}

IndexCombination J_pq(const ProofQuantityParams& x) {
  validate_pq(x);
  const auto p = static_cast<std::size_t>(x.p - 1);
  const auto q = static_cast<std::size_t>(x.q - 1);
  IndexCombination out;
  compositions(x.l + 1, x.m + x.s, [&](std::span<const int> parts) {
    const int w = std::max(parts[p] - x.s + 1, 0);
    if (w != 0) out.add(split_at(parts, q), w);
  });
  return out;
}

Sides i_diagonal_piece(int which, const ProofQuantityParams& x) {
  validate_pq(x);
  require(x.p == x.q, "the diagonal pieces of I need p = q");
  require(which >= 1 && which <= 3, "diagonal piece must be 1, 2 or 3");
  const int s = x.s, l = x.l, m = x.m, p = x.p;

  Sides out;
  for (int a = 0; a <= m; ++a) {
    if (which == 1) {
      out.lhs += ohno_m_symbolic(comb(concat({twos(p - 1), one(1), one(s + a + 2), twos(l - p + 1)})), m - a);
    } else if (which == 2) {
      out.lhs += ohno_m_symbolic(comb(concat({twos(p - 1), one(s + a + 1), twos(l - p + 2)})), m - a);
    }
  }
  if (which == 3) {
    for (int j = 0; j <= s - 2; ++j) {
      out.lhs += ohno_m_symbolic(comb(concat({twos(p - 1), one(j + 2), one(s - j + 1), twos(l - p + 1)})), m);
    }
  }

  // sum_v sum_{m_1+..+m_l = m-v} sum_{u=0}^{v} sum_{j in range(v,u)}
  //   (m_1+2, .., m_{p-1}+2, j, s+v-j+3, m_p+2, .., m_l+2)
  const auto split = static_cast<std::size_t>(p - 1);
  for (int v = 0; v <= m; ++v) {
    compositions(l, m - v, [&](std::span<const int> parts) {
      for (int u = 0; u <= v; ++u) {
        int lo = 0, hi = -1;
        if (which == 1) {
          lo = 1;
          hi = v - u + 1;
        } else if (which == 2) {
          lo = s + v - u + 1;
          hi = s + v + 1;
        } else {
          lo = v - u + 2;
          hi = s + v - u;
        }
        for (int j = lo; j <= hi; ++j) {
          std::vector<int> e;
          push_twos_plus(e, parts, 0, split);
          e.push_back(j);
          e.push_back(s + v - j + 3);
          push_twos_plus(e, parts, split, parts.size());
          out.rhs.add(Index(std::move(e)), 1);
        }
      }
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// A, B, C

namespace {

void require_abc(int s, int l, int m) {
  require(s >= 2, "the decomposition needs s >= 2, got s = " + std::to_string(s));
  require(l >= 0 && m >= 0, "the decomposition needs l, m >= 0");
}

}  // namespace

std::vector<IndexCombination> quantity_a_terms(int s, int l, int m) {
  require_abc(s, l, m);
  std::vector<IndexCombination> out;
  for (int a = 0; a <= m; ++a) {
    out.push_back(sha_twos(comb(one(s + a + 3)), l) + sha_twos(sha(one(s + a + 2), one(3)), l - 1));
  }
  return out;
}

IndexCombination a_definition(int s, int l, int m) {
  require_abc(s, l, m);
  return -hast_shift_sum(s, sha_twos(comb(one(3)), l), m);
}

IndexCombination a_expansion(int s, int l, int m) {
  const auto terms = quantity_a_terms(s, l, m);
  IndexCombination out;
  for (int a = 0; a <= m; ++a) out -= ohno_m_symbolic(terms[static_cast<std::size_t>(a)], m - a);
  return out;
}

IndexCombination a_composition(int s, int l, int m) {
  require_abc(s, l, m);
  return -composition_sum(
      s, l, m, [&](std::span<const int> parts) { return composition_weight(parts, s); },
      [&](std::span<const int> parts) {
        IndexCombination body;
        for (std::size_t i = 0; i < parts.size(); ++i) body.add(bumped_at(parts, i), 1);
        return body;
      });
}

IndexCombination b_definition(int s, int l, int m) {
  require_abc(s, l, m);
  return hast_shift_sum(s, dual_linear(sha_twos(comb(one(3)), l)), m);
}

IndexCombination b_expansion(int s, int l, int m) {
  require_abc(s, l, m);
  IndexCombination out;
  for (int a = 0; a <= m; ++a) {
    out += ohno_m_symbolic(append(sha_twos(sha(one(1), one(s + a + 2)), l - 1), one(2)), m - a);
    out += ohno_m_symbolic(append(sha_twos(comb(one(s + a + 1)), l), one(2)), m - a);
    out += ohno_m_symbolic(append(sha_twos(comb(one(1)), l), one(s + a + 2)), m - a);
  }
  return out;
}

IndexCombination c_definition(int s, int l, int m) {
  require_abc(s, l, m);
  IndexCombination out = ohno_m_symbolic(sha_twos(comb(one(s + 1)), l + 1), m);
  out *= -(l + 1);
  out += ohno_m_symbolic(sha(comb(one(2)), dual_linear(sha_twos(comb(one(s + 1)), l))), m);
  return out;
}

IndexCombination c_closed_form(int s, int l, int m) {
  require_abc(s, l, m);
  IndexCombination out;
  for (int i = 0; i <= l; ++i) {
    for (int j = 0; j <= s - 2; ++j) {
      out += ohno_m_symbolic(comb(concat({twos(i), one(j + 2), one(s - j + 1), twos(l - i)})), m);
    }
  }
  return out;
}

IndexCombination bc_expansion(int s, int l, int m) { return b_expansion(s, l, m) + c_closed_form(s, l, m); }

IndexCombination bc_composition(int s, int l, int m) {
  require_abc(s, l, m);
  return composition_sum(
      s, l, m, [&](std::span<const int> parts) { return composition_weight(parts, s); },
      [&](std::span<const int> parts) {
        IndexCombination body;
        for (std::size_t i = 0; i < parts.size(); ++i) body += split_at(parts, i);
        return body;
      });
}

// ---------------------------------------------------------------------------
// Sides of the numeric lemmas

namespace {

IndexCombination t_block(int t, int l) { return sha_twos(comb(one(t + 1)), l); }

}  // namespace

Sides fmpre1_sides(int s, int t, int l, int m) {
  require(s >= 2 && t >= 1 && l >= 0 && m >= 0, "the F expansion needs s >= 2, t >= 1, l, m >= 0");
  const auto T = t_block(t, l);
  return {f_combination(s, one(t + 1), l, m), hast_shift_sum(s, dual_linear(T), m) - hast_shift_sum(s, T, m)};
}

Sides fmpre2_sides(int part, int s, int t, int l, int m) {
  require(s >= 1 && t >= 1 && l >= 0 && m >= 1, "the hast telescoping needs s, t >= 1, m >= 1, l >= 0");
  require(part == 1 || part == 2, "the hast telescoping has parts 1 and 2");
  auto X = t_block(t, l);
  if (part == 2) X = dual_linear(X);
  return {hast_shift_sum(s, X, m) - hast_shift_sum(s + 1, X, m - 1), ohno_m_symbolic(hast(s, X), m)};
}

Sides fm_sides(int s, int t, int l, int m) {
  require(s >= 3 && t >= 1 && l >= 0 && m >= 1, "the F recursion needs s >= 3, t >= 1, m >= 1, l >= 0");
  const auto T = t_block(t, l);
  return {f_combination(s - 1, one(t + 1), l, m) - f_combination(s, one(t + 1), l, m - 1),
          ohno_m_symbolic(hast(s - 1, dual_linear(T)), m) - ohno_m_symbolic(hast(s - 1, T), m)};
}

Sides oooo_sides(int s, int t, int l, int m) {
  require(s >= 3 && t >= 3 && l >= 0 && m >= 0, "the four-term cancellation needs s, t >= 3, l, m >= 0");
  const auto half = [&](int x, int y) {
    return ohno_m_symbolic(sha(comb(one(x)), dual_linear(sha_twos(comb(one(y)), l))), m) -
           ohno_m_symbolic(hast(x - 1, dual_linear(t_block(y, l))), m);
  };
  return {half(s, t) - half(t, s), {}};
}

Sides dddd_sides(int s, int t, int l, int m) {
  require(s >= 3 && t >= 3 && l >= 0 && m >= 1, "the D recursion needs s, t >= 3, m >= 1, l >= 0");
  return {d_combination(s, t, l, m - 1), d_combination(s - 1, t, l, m) + d_combination(s, t - 1, l, m)};
}

Sides abc_sides(int s, int l, int m) {
  require_abc(s, l, m);
  return {f_combination(s, one(3), l, m) - f_combination(2, one(s + 1), l, m),
          a_definition(s, l, m) + b_definition(s, l, m) + c_definition(s, l, m)};
}

// ---------------------------------------------------------------------------
// Expansions behind the cancellation and the D recursion

namespace {

void require_expansion(int s, int t, int l) {
  require(s >= 2 && t >= 2 && l >= 0, "the expansions need s, t >= 2 and l >= 0");
}

}  // namespace

Sides oooo_sha_expansion(int s, int t, int l) {
  require_expansion(s, t, l);
  Sides out{sha(comb(one(s)), dual_linear(sha_twos(comb(one(t)), l))), {}};
  for (int i = 0; i <= l; ++i) {
    for (int j = 0; j <= i; ++j) {
      out.rhs.add(concat({twos(j), one(s), twos(i - j), ones(t - 2), twos(l - i + 1)}), 1);
    }
    for (int j = 1; j <= t - 2; ++j) {
      out.rhs.add(concat({twos(i), ones(j), one(s), ones(t - j - 2), twos(l - i + 1)}), 1);
    }
    for (int j = 0; j <= l - i; ++j) {
      out.rhs.add(concat({twos(i), ones(t - 2), twos(j + 1), one(s), twos(l - i - j)}), 1);
    }
  }
  return out;
}

Sides oooo_hast_expansion(int s, int t, int l) {
  require_expansion(s, t, l);
  Sides out{hast(s - 1, dual_linear(t_block(t, l))), {}};
  for (int i = 1; i <= l; ++i) {
    for (int j = 0; j <= i - 1; ++j) {
      out.rhs.add(concat({twos(j), one(s + 1), twos(i - j - 1), ones(t - 1), twos(l - i + 1)}), 1);
    }
  }
  for (int i = 0; i <= l; ++i) {
    for (int j = 0; j <= t - 2; ++j) {
      out.rhs.add(concat({twos(i), ones(j), one(s), ones(t - j - 2), twos(l - i + 1)}), 1);
    }
    for (int j = 0; j <= l - i; ++j) {
      out.rhs.add(concat({twos(i), ones(t - 1), twos(j), one(s + 1), twos(l - i - j)}), 1);
    }
  }
  return out;
}

Sides oooo_difference_expansion(int s, int t, int l, int m) {
  require_expansion(s, t, l);
  require(m >= 0, "m must be nonnegative");
  Sides out{ohno_m_symbolic(oooo_sha_expansion(s, t, l).lhs, m) - ohno_m_symbolic(oooo_hast_expansion(s, t, l).lhs, m),
            {}};
  IndexCombination body;
  for (int a = 0; a <= l; ++a) {
    for (int b = 0; a + b <= l; ++b) {
      const int c = l - a - b;
      body.add(concat({twos(a), one(s), twos(b), ones(t - 2), twos(c + 1)}), 1);
      body.add(concat({twos(a), ones(t - 2), twos(b + 1), one(s), twos(c)}), 1);
      body.add(concat({twos(a), ones(t - 1), twos(b), one(s + 1), twos(c)}), -1);
    }
    body.add(concat({twos(a), one(s), ones(t - 2), twos(l - a + 1)}), -1);
  }
  for (int a = 0; a <= l - 1; ++a) {
    for (int b = 0; a + b <= l - 1; ++b) {
      const int c = l - 1 - a - b;
      body.add(concat({twos(a), one(s + 1), twos(b), ones(t - 1), twos(c + 1)}), -1);
    }
  }
  out.rhs = ohno_m_symbolic(body, m);
  return out;
}

Sides hast_symmetry_sides(int s, int t, int l, int m) {
  require_expansion(s, t, l);
  require(m >= 0, "m must be nonnegative");
  const auto form = sha_twos(comb(one(s + t)), l) + sha_twos(sha(one(s + 1), one(t + 1)), l - 1);
  return {ohno_m_symbolic(hast(s - 1, t_block(t, l)), m), ohno_m_symbolic(form, m)};
}

}  // namespace ohno
