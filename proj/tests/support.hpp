#pragma once

#include <map>
#include <random>
#include <vector>

#include "ohno/combination.hpp"
#include "ohno/index.hpp"

namespace testing {

/// zeta(n) for n >= 2 from MPFR, rounded to double.
double mpfr_zeta(unsigned n);

/// pi^n / d, evaluated in MPFR and rounded once.
double pi_power_over(unsigned n, double d);

/// Brute-force Ohno sum: all (k + e) with |e| = m, by plain recursion.
std::map<ohno::Index, long> brute_ohno(const std::vector<int>& k, int m);

/// Same as above but as a combination, for direct comparison.
ohno::IndexCombination brute_ohno_combination(const std::vector<int>& k, int m);

/// Index with entries drawn from 1..max_entry, depth 1..max_depth.
ohno::Index random_index(std::mt19937_64& rng, int max_depth, int max_entry, bool admissible);

/// Combination of up to `terms` random indices with small rational coefficients.
ohno::IndexCombination random_combination(std::mt19937_64& rng, int terms, int max_depth, int max_entry,
                                          bool admissible);

}  // namespace testing
