#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "ohno/combination.hpp"
#include "ohno/double_double.hpp"
#include "ohno/index.hpp"
#include "ohno/kernels.hpp"

namespace ohno {

/// Evaluation settings.
///
/// The tolerance is snapped down to its decade, 10^floor(log10(tol)); the
/// snapped value fixes the series length and the arithmetic, so every
/// request in one decade produces the same bits. Half of the snapped
/// tolerance goes to series truncation, half is reserved for rounding,
/// which needs at least 2*ceil(log2(1/tol)) + 16 bits of mantissa.
/// Double-double covers up to 104 bits; beyond that MPFR takes over.
struct EvalConfig {
  double tol = 1e-12;
  int max_terms = 256;
  /// Bits of mantissa; 0 derives the minimum from tol.
  int working_precision = 0;
  kernels::KernelKind kernel = kernels::KernelKind::Auto;
};

/// Finest supported tolerance decade. Results are returned as doubles,
/// whose spacing near zeta(2) is about 2e-16.
inline constexpr int kFinestBucket = -15;
/// Mantissa bits provided by the double-double path.
inline constexpr int kDoubleDoubleBits = 104;

/// floor(log10(tol)), computed exactly against correctly rounded powers of
/// ten. Throws ConfigError for tol <= 0 or non-finite tol.
int tol_bucket(double tol);
/// 10^bucket, correctly rounded.
double bucket_tolerance(int bucket);
/// 2*ceil(log2(1/tol)) + 16 for the decade's tolerance.
int required_precision_bits(int bucket);
/// Extra terms past the truncation budget, so printed doubles at the
/// default tolerance carry correct trailing digits. Costs ~10 terms.
inline constexpr int kTruncationGuardBits = 10;

/// Series length for an index of the given weight: the smallest N with
/// 2^-N <= tol / (4 (weight + 1)), plus kTruncationGuardBits.
int series_terms(int weight, int bucket);

/// Memoized zeta values keyed by (index, tolerance decade). Safe for
/// concurrent readers and writers; a repeated store of a key keeps the
/// last value, and all writers of a key compute identical values.
class ZetaCache {
 public:
  std::optional<double> find(const Index& k, int bucket) const;
  void store(const Index& k, int bucket, double value);
  std::size_t size() const;
  void clear();
  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }

  /// One "index<TAB>tol-bucket<TAB>hex-float" line per entry, canonical
  /// order; e.g. "1,2\t1e-12\t0x1.33ba004f00621p+0".
  void save(const std::filesystem::path& path) const;
  /// Merges entries from a file written by save(). Missing files are not
  /// an error; malformed lines are (ConfigError).
  void load(const std::filesystem::path& path);

 private:
  struct Key {
    Index index;
    int bucket;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return IndexHash{}(k.index) * 31u + static_cast<std::size_t>(k.bucket + 64);
    }
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, double, KeyHash> values_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Evaluates zeta at admissible indices by splitting the iterated integral
/// at 1/2: for an index of weight w,
///   zeta(k) = sum_{j=0}^{w} P_k[j] * P_dual(k)[w - j]
/// where P_k[j] is the iterated integral over [0, 1/2] of the first j
/// letters of k's word, summed as a power series with ratio 1/2.
class ZetaEvaluator {
 public:
  explicit ZetaEvaluator(EvalConfig cfg = {}, std::shared_ptr<ZetaCache> cache = nullptr);

  const EvalConfig& config() const { return cfg_; }
  const std::shared_ptr<ZetaCache>& cache() const { return cache_; }

  /// zeta(k) within config().tol. Throws DomainError for a non-admissible
  /// index, PrecisionError if the series cap is too small.
  double zeta(const Index& k) const;
  /// Batched zeta, each within config().tol.
  std::vector<double> zeta(std::span<const Index> ks) const;

  /// Sum of c * zeta(k) within config().tol in total: each term gets
  /// tol / sum|c| of the budget.
  double combination(const IndexCombination& c) const;

  /// Sum of c * zeta(k) with every zeta evaluated within config().tol
  /// (total error at most sum|c| * tol). Accumulated in double-double.
  DoubleDouble termwise(const IndexCombination& c) const;

  /// Number of zeta values computed (cache misses) so far.
  std::uint64_t computed() const { return computed_.load(); }

 private:
  std::vector<double> evaluate(std::span<const Index> ks, int bucket) const;
  std::vector<double> compute(std::span<const Index> ks, int bucket) const;
  bool cache_usable() const;

  EvalConfig cfg_;
  std::shared_ptr<ZetaCache> cache_;
  mutable std::atomic<std::uint64_t> computed_{0};
};

/// zeta(k) within cfg.tol, without a cache.
double eval_zeta(const Index& k, const EvalConfig& cfg = {});

/// Sum of c * zeta(k) within cfg.tol in total, without a cache.
double eval_combination(const IndexCombination& c, const EvalConfig& cfg = {});

struct DirectSum {
  double value;       ///< sum over 1 <= m_1 < ... < m_r <= N
  double tail_bound;  ///< proven upper bound on zeta(k) - value
};

/// Truncated nested sum. Throws DomainError for a non-admissible index or
/// N < depth(k).
DirectSum eval_zeta_direct(const Index& k, std::int64_t N);

}  // namespace ohno
