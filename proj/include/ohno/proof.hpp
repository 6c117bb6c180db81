#pragma once

#include <vector>

#include "ohno/combination.hpp"

namespace ohno {

/// Parameters shared by the main-theorem proof quantities. p and q are
/// positions 1..l+1 and only matter for G, H, I, J.
struct ProofQuantityParams {
  int s = 2;
  int t = 2;
  int l = 0;
  int m = 0;
  int p = 1;
  int q = 1;
};

/// Two sides of an identity between formal sums.
struct Sides {
  IndexCombination lhs;
  IndexCombination rhs;
};

// --- G, H, I, J (require l >= 1, 1 <= p, q <= l+1, s >= 2, m >= 0) ---------

/// sum_a O_{m-a} of the (p, q)-placed index with entries s+a+2 (or s+a+3
/// when p = q) and 3 among twos.
IndexCombination G_pq(const ProofQuantityParams& x);
/// Sum over m_1 + ... + m_{l+1} = m + s of max(m_p - s + 1, 0) times
/// (m_1+2, ..., m_q+3, ..., m_{l+1}+2).
IndexCombination H_pq(const ProofQuantityParams& x);
IndexCombination I_pq(const ProofQuantityParams& x);
/// Like H, with position q split into (j+1, m_q-j+2) for j = 0..m_q.
IndexCombination J_pq(const ProofQuantityParams& x);

/// The three pieces of I_{p,p}, each against its rewritten form; which is
/// 1, 2 or 3. Requires p = q.
Sides i_diagonal_piece(int which, const ProofQuantityParams& x);

// --- Main-theorem decomposition F_{m,l}(s;(3)) - F_{m,l}(2;(s+1)) = A+B+C --

/// (s+a+3) sha {2}^l + (s+a+2) sha (3) sha {2}^{l-1} for a = 0..m; A is
/// minus the sum of O_{m-a} over these.
std::vector<IndexCombination> quantity_a_terms(int s, int l, int m);
/// A as defined: minus the hast double sum over (3) sha {2}^l.
IndexCombination a_definition(int s, int l, int m);
/// A through quantity_a_terms.
IndexCombination a_expansion(int s, int l, int m);
/// A as a weighted sum over compositions of m + s into l+1 parts.
IndexCombination a_composition(int s, int l, int m);

/// B as defined: the hast double sum over ((3) sha {2}^l)^dual.
IndexCombination b_definition(int s, int l, int m);
/// B as three families of Ohno sums of indices ending in 2 or s+a+2.
IndexCombination b_expansion(int s, int l, int m);

/// C as defined: -(l+1) O_m((s+1) sha {2}^{l+1}) + O_m((2) sha ((s+1) sha {2}^l)^dual).
IndexCombination c_definition(int s, int l, int m);
/// sum_{i=0}^{l} sum_{j=0}^{s-2} O_m({2}^i, j+2, s-j+1, {2}^{l-i}). Equal to
/// c_definition only after zeta is applied.
IndexCombination c_closed_form(int s, int l, int m);

/// b_expansion + c_closed_form.
IndexCombination bc_expansion(int s, int l, int m);
/// B + C as a weighted sum over compositions of m + s into l+1 parts.
IndexCombination bc_composition(int s, int l, int m);

// --- Sides of the numeric lemmas -----------------------------------------

/// F_{m,l}(s;(t+1)) against its two hast double sums.
Sides fmpre1_sides(int s, int t, int l, int m);
/// part 1 uses (t+1) sha {2}^l, part 2 its dual. Requires m >= 1.
Sides fmpre2_sides(int part, int s, int t, int l, int m);
/// F_{m,l}(s-1;(t+1)) - F_{m-1,l}(s;(t+1)) against the two hast Ohno sums.
Sides fm_sides(int s, int t, int l, int m);
/// The four-term Ohno-sum cancellation against zero.
Sides oooo_sides(int s, int t, int l, int m);
/// D_{m-1,l}(s,t) against D_{m,l}(s-1,t) + D_{m,l}(s,t-1).
Sides dddd_sides(int s, int t, int l, int m);
/// F_{m,l}(s;(3)) - F_{m,l}(2;(s+1)) against A + B + C (definitions).
Sides abc_sides(int s, int l, int m);

// --- Exact expansions behind the cancellation and the D recursion ---------

/// (s) sha ((t) sha {2}^l)^dual against its explicit three-family sum.
Sides oooo_sha_expansion(int s, int t, int l);
/// (s-1) hast ((t+1) sha {2}^l)^dual against its explicit sum.
Sides oooo_hast_expansion(int s, int t, int l);
/// O_m of the sha side minus O_m of the hast side against the a+b+c form.
Sides oooo_difference_expansion(int s, int t, int l, int m);
/// (s-1) hast ((t+1) sha {2}^l) against (s+t) sha {2}^l + (s+1) sha (t+1) sha {2}^{l-1},
/// both under O_m; swapping s and t gives the same right side.
Sides hast_symmetry_sides(int s, int t, int l, int m);

}  // namespace ohno
