#include "ohno/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <limits>
#include <mutex>
#include <string>
#include <unordered_map>

#include "ohno/error.hpp"
#include "ohno/word.hpp"

namespace ohno {

namespace {

void check_admissible(const Index& k) {
  if (k.empty()) throw DomainError("zeta is never evaluated at the empty index");
  if (!k.admissible()) {
    throw DomainError("zeta requires an admissible index, got (" + k.to_string() + ")");
  }
}

DoubleDouble coefficient_to_dd(const Coefficient& c) {
  const mpz_class& num = c.get_num();
  const mpz_class& den = c.get_den();
  constexpr double kExact = 9007199254740992.0;  // 2^53
  const double n = num.get_d();
  const double d = den.get_d();
  if (std::fabs(n) <= kExact && d <= kExact) return dd::div(n, d);
  return DoubleDouble(c.get_d());
}

}  // namespace

double bucket_tolerance(int bucket) {
  const std::string text = "1e" + std::to_string(bucket);
  return std::strtod(text.c_str(), nullptr);
}

int tol_bucket(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw ConfigError("tolerance must be a positive finite number");
  }
  int b = static_cast<int>(std::floor(std::log10(tol)));
  while (bucket_tolerance(b) > tol) --b;
  while (bucket_tolerance(b + 1) <= tol) ++b;
  return b;
}

int required_precision_bits(int bucket) {
  const double tol = bucket_tolerance(bucket);
  int bits = 0;
  while (std::ldexp(1.0, -bits) > tol) ++bits;  // ceil(log2(1/tol))
  return 2 * bits + 16;
}

int series_terms(int weight, int bucket) {
  const double delta = bucket_tolerance(bucket) / (4.0 * (weight + 1));
  int n = 1;
  while (std::ldexp(1.0, -n) > delta) ++n;
  return n + kTruncationGuardBits;
}

// ---------------------------------------------------------------------------
// ZetaCache

std::optional<double> ZetaCache::find(const Index& k, int bucket) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(Key{k, bucket});
  if (it == values_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void ZetaCache::store(const Index& k, int bucket, double value) {
  std::unique_lock lock(mutex_);
  values_[Key{k, bucket}] = value;
}

std::size_t ZetaCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void ZetaCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

void ZetaCache::save(const std::filesystem::path& path) const {
  std::vector<std::pair<Key, double>> entries;
  {
    std::shared_lock lock(mutex_);
    entries.assign(values_.begin(), values_.end());
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.index != b.first.index) return a.first.index < b.first.index;
    return a.first.bucket > b.first.bucket;
  });
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write cache file " + path.string());
  char hex[64];
  for (const auto& [key, value] : entries) {
    std::snprintf(hex, sizeof hex, "%a", value);
    out << key.index.to_string() << '\t' << "1e" << key.bucket << '\t' << hex << '\n';
  }
  if (!out) throw ConfigError("failed writing cache file " + path.string());
}

void ZetaCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto bad = [&] {
      return ConfigError(path.string() + ":" + std::to_string(line_no) + ": malformed cache line");
    };
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw bad();
    const std::string bucket_text = line.substr(t1 + 1, t2 - t1 - 1);
    if (bucket_text.size() < 3 || bucket_text.compare(0, 2, "1e") != 0) throw bad();
    Index k;
    int bucket = 0;
    double value = 0.0;
    try {
      k = Index::parse(line.substr(0, t1));
      std::size_t used = 0;
      bucket = std::stoi(bucket_text.substr(2), &used);
      if (used != bucket_text.size() - 2) throw bad();
      const std::string value_text = line.substr(t2 + 1);
      char* end = nullptr;
      value = std::strtod(value_text.c_str(), &end);
      if (end == value_text.c_str() || *end != '\0') throw bad();
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw bad();
    }
    store(k, bucket, value);
  }
}

// ---------------------------------------------------------------------------
// ZetaEvaluator

ZetaEvaluator::ZetaEvaluator(EvalConfig cfg, std::shared_ptr<ZetaCache> cache)
    : cfg_(cfg), cache_(std::move(cache)) {
  tol_bucket(cfg_.tol);
  if (cfg_.max_terms < 1) throw ConfigError("max_terms must be positive");
  if (cfg_.working_precision < 0) throw ConfigError("working precision must be nonnegative");
}

// Keys carry only the bucket, so an explicit working precision bypasses the
// cache rather than mixing values computed at different precisions.
bool ZetaEvaluator::cache_usable() const { return cache_ != nullptr && cfg_.working_precision == 0; }

std::vector<double> ZetaEvaluator::compute(std::span<const Index> ks, int bucket) const {
  const int required = required_precision_bits(bucket);
  if (cfg_.working_precision > 0 && cfg_.working_precision < required) {
    throw ConfigError("working precision of " + std::to_string(cfg_.working_precision) +
                      " bits is below the " + std::to_string(required) + " bits needed for tolerance 1e" +
                      std::to_string(bucket));
  }
  const int bits = std::max(required, cfg_.working_precision);

  struct Prepared {
    std::vector<Letter> lower;
    std::vector<Letter> upper;
    int terms;
  };
  std::vector<Prepared> prepared;
  prepared.reserve(ks.size());
  for (const auto& k : ks) {
    const int terms = series_terms(k.weight(), bucket);
    if (terms > cfg_.max_terms) {
      throw PrecisionError("zeta(" + k.to_string() + ") needs " + std::to_string(terms) +
                           " series terms for tolerance 1e" + std::to_string(bucket) + " but max_terms is " +
                           std::to_string(cfg_.max_terms));
    }
    prepared.push_back({series_letters(k), series_letters(dual(k)), terms});
  }

  std::vector<double> out(ks.size());
  if (bits > kDoubleDoubleBits) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto& p = prepared[i];
      out[i] = kernels::holder_sum_mpfr(p.lower, p.upper, p.terms, bits).to_double();
    }
  } else {
    std::vector<std::vector<DoubleDouble>> prefix(2 * ks.size());
    std::vector<kernels::SeriesJob> jobs;
    jobs.reserve(2 * ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto& p = prepared[i];
      prefix[2 * i].resize(p.lower.size() + 1);
      prefix[2 * i + 1].resize(p.upper.size() + 1);
      jobs.push_back({p.lower, p.terms, prefix[2 * i]});
      jobs.push_back({p.upper, p.terms, prefix[2 * i + 1]});
    }
    kernels::select(cfg_.kernel)(jobs);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto& lower = prefix[2 * i];
      const auto& upper = prefix[2 * i + 1];
      const std::size_t w = lower.size() - 1;
      DoubleDouble total;
      for (std::size_t j = 0; j <= w; ++j) total = dd::add(total, dd::mul(lower[j], upper[w - j]));
      out[i] = total.to_double();
    }
  }
  computed_.fetch_add(ks.size(), std::memory_order_relaxed);
  return out;
}

std::vector<double> ZetaEvaluator::evaluate(std::span<const Index> ks, int bucket) const {
  if (bucket < kFinestBucket) {
    throw PrecisionError("tolerance 1e" + std::to_string(bucket) + " is below the supported floor 1e" +
                         std::to_string(kFinestBucket));
  }
  for (const auto& k : ks) check_admissible(k);
  if (!cache_usable()) return compute(ks, bucket);

  std::vector<double> out(ks.size());
  std::vector<Index> missing;
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (auto v = cache_->find(ks[i], bucket)) {
      out[i] = *v;
    } else {
      missing.push_back(ks[i]);
      slots.push_back(i);
    }
  }
  if (!missing.empty()) {
    const auto fresh = compute(missing, bucket);
    for (std::size_t i = 0; i < missing.size(); ++i) {
      cache_->store(missing[i], bucket, fresh[i]);
      out[slots[i]] = fresh[i];
    }
  }
  return out;
}

double ZetaEvaluator::zeta(const Index& k) const {
  return evaluate(std::span<const Index>(&k, 1), tol_bucket(cfg_.tol)).front();
}

std::vector<double> ZetaEvaluator::zeta(std::span<const Index> ks) const {
  return evaluate(ks, tol_bucket(cfg_.tol));
}

namespace {

DoubleDouble accumulate(const IndexCombination& c, std::span<const double> values) {
  DoubleDouble total;
  std::size_t i = 0;
  for (const auto& [k, coef] : c) {
    total = dd::add(total, dd::mul(coefficient_to_dd(coef), DoubleDouble(values[i++])));
  }
  return total;
}

std::vector<Index> support(const IndexCombination& c) {
  std::vector<Index> ks;
  ks.reserve(c.size());
  for (const auto& [k, coef] : c) ks.push_back(k);
  return ks;
}

}  // namespace

double ZetaEvaluator::combination(const IndexCombination& c) const {
  if (c.empty()) return 0.0;
  const double norm = c.l1_norm().get_d();
  const auto ks = support(c);
  const auto values = evaluate(ks, tol_bucket(cfg_.tol / norm));
  return accumulate(c, values).to_double();
}

DoubleDouble ZetaEvaluator::termwise(const IndexCombination& c) const {
  if (c.empty()) return {};
  const auto ks = support(c);
  const auto values = evaluate(ks, tol_bucket(cfg_.tol));
  return accumulate(c, values);
}

double eval_zeta(const Index& k, const EvalConfig& cfg) { return ZetaEvaluator(cfg).zeta(k); }

double eval_combination(const IndexCombination& c, const EvalConfig& cfg) {
  return ZetaEvaluator(cfg).combination(c);
}

// ---------------------------------------------------------------------------
// Direct summation oracle

DirectSum eval_zeta_direct(const Index& k, std::int64_t N) {
  check_admissible(k);
  const auto r = k.depth();
  if (N < static_cast<std::int64_t>(r)) {
    throw DomainError("eval_zeta_direct: N = " + std::to_string(N) + " is below the depth of (" +
                      k.to_string() + ")");
  }
  int max_k = 0;
  for (int v : k) max_k = std::max(max_k, v);

  // partial[j] = sum over m_1 < ... < m_j <= n of prod m_i^{-k_i}; one
  // sweep over n, levels updated from the top so partial[j-1] is still
  // the value at n - 1.
  std::vector<DoubleDouble> partial(r + 1);
  partial[0] = 1.0;
  std::vector<DoubleDouble> powers(static_cast<std::size_t>(max_k) + 1);
  for (std::int64_t n = 1; n <= N; ++n) {
    const DoubleDouble inv = dd::div(1.0, static_cast<double>(n));
    powers[1] = inv;
    for (int e = 2; e <= max_k; ++e) powers[static_cast<std::size_t>(e)] = dd::mul(powers[e - 1], inv);
    for (std::size_t j = std::min<std::size_t>(r, static_cast<std::size_t>(n)); j >= 1; --j) {
      partial[j] = dd::add(partial[j], dd::mul(powers[static_cast<std::size_t>(k[j - 1])], partial[j - 1]));
    }
  }

  // Tail: every omitted tuple has m_r > N, and the inner sum over
  // m_1 < ... < m_{r-1} < m is at most H_{m-1}^{r-1}/(r-1)!, so
  //   tail <= sum_{m > N} (1 + ln m)^a m^{-k_r} / a!,   a = r - 1.
  // With c = k_r - 1 and U = ln N the integral of the summand from N is
  //   N^{-c} sum_{i=0}^{a} a!/(a-i)! (1+U)^{a-i} / c^{i+1};
  // it dominates the sum when the summand decreases past N, otherwise the
  // summand's maximum is added.
  const int a = static_cast<int>(r) - 1;
  const int c = k[r - 1] - 1;
  const double U = std::log(static_cast<double>(N));
  double falling = 1.0;  // a!/(a-i)!
  double integral = 0.0;
  for (int i = 0; i <= a; ++i) {
    if (i > 0) falling *= (a - i + 1);
    integral += falling * std::pow(1.0 + U, a - i) / std::pow(static_cast<double>(c), i + 1);
  }
  integral *= std::pow(static_cast<double>(N), -c);
  double bound = integral;
  const double kr = k[r - 1];
  if (a > 0 && !(1.0 + U > a / kr)) {
    const double x_star = std::exp(a / kr - 1.0);
    bound += std::pow(1.0 + std::log(x_star), a) * std::pow(x_star, -kr);
  }
  double factorial = 1.0;
  for (int i = 2; i <= a; ++i) factorial *= i;
  bound = bound / factorial * (1.0 + 1e-9);
  return {partial[r].to_double(), bound};
}

}  // namespace ohno
