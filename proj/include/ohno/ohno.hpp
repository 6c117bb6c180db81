#pragma once

#include <vector>

#include "ohno/combination.hpp"
#include "ohno/index.hpp"
#include "ohno/zeta.hpp"

namespace ohno {

/// Sum over |e| = m of k (+) e for every support index, with coefficients.
/// No admissibility requirement; the empty index is rejected for m > 0.
IndexCombination shift_sum(const IndexCombination& c, int m);

/// Symbolic Ohno sum O_m(C): the formal sum of shifted indices before zeta
/// is applied. Every support index of C must be admissible.
IndexCombination ohno_m_symbolic(const IndexCombination& c, int m);

/// O_m(C) evaluated within the evaluator's tolerance.
double ohno_m(const IndexCombination& c, int m, const ZetaEvaluator& z);
double ohno_m(const IndexCombination& c, int m, const EvalConfig& cfg = {});

/// Coefficients O_0(C) .. O_M(C) of the Ohno generating series.
struct TruncatedSeries {
  std::vector<double> coefficients;
  double tol = 0.0;
};

TruncatedSeries ohno_series(const IndexCombination& c, int M, const ZetaEvaluator& z);
TruncatedSeries ohno_series(const IndexCombination& c, int M, const EvalConfig& cfg = {});

/// Sum over m1 + m2 = m of (base + m1) hast (sum over |e| = m2 of X (+) e):
/// the double sums in the two-sided expansion of F.
IndexCombination hast_shift_sum(int base, const IndexCombination& x, int m);

/// The combination behind F_{m,l}(s; k):
///   O_m((s) sha k sha {2}^l) - O_m((s) sha (k sha {2}^l)^dual).
/// Requires s >= 2 and k admissible.
IndexCombination f_combination(int s, const Index& k, int l, int m);

/// The combination behind D_{m,l}(s, t) = F_{m,l}(s; (t+1)) - F_{m,l}(t; (s+1)).
IndexCombination d_combination(int s, int t, int l, int m);

/// Numeric values through ZetaEvaluator::combination. Large l and m give
/// combinations whose l1 norm pushes the per-value budget below 1e-15 at
/// the default tolerance; that raises PrecisionError, so pass a coarser tol.
double F_ml(int s, const Index& k, int l, int m, const ZetaEvaluator& z);
double F_ml(int s, const Index& k, int l, int m, const EvalConfig& cfg = {});
double D_ml(int s, int t, int l, int m, const ZetaEvaluator& z);
double D_ml(int s, int t, int l, int m, const EvalConfig& cfg = {});

/// Both sides of Hoffman's relation for an admissible index k:
///   lhs = sum_i (.., k_i + 1, ..)
///   rhs = sum_{k_i >= 2} sum_{j=0}^{k_i-2} (.., j+1, k_i - j, ..)
struct HoffmanSides {
  IndexCombination lhs;
  IndexCombination rhs;
};
HoffmanSides hoffman_sides(const Index& k);

double hoffman_lhs_minus_rhs(const Index& k, const ZetaEvaluator& z);
double hoffman_lhs_minus_rhs(const Index& k, const EvalConfig& cfg = {});

}  // namespace ohno
