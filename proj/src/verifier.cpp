#include "ohno/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <thread>

#include <json.hpp>

#include "ohno/error.hpp"
#include "ohno/ohno.hpp"
#include "ohno/proof.hpp"

namespace ohno::verify {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// One grid point.
struct Point {
  std::optional<Index> k;
  std::map<std::string, int> v;
  std::string part;

  int at(const std::string& key) const { return v.at(key); }
};

using Hypothesis = std::function<std::optional<std::string>(const Point&)>;
using Builder = std::function<std::vector<Sides>(const Point&)>;

struct NumericOutcome {
  double residual;
  std::size_t evals;
};
using CustomCheck = std::function<NumericOutcome(const Point&, const VerifyOptions&)>;

struct Entry {
  IdentitySpec spec;
  Hypothesis hypothesis;
  Builder build;
  CustomCheck custom;
  /// Filters (point, part) pairs; all parts apply when unset.
  std::function<bool(const Point&)> part_applies;
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::optional<std::string> need(bool ok, std::string reason) {
  if (ok) return std::nullopt;
  return reason;
}

std::optional<std::string> need_admissible(const Point& x) {
  return need(x.k && x.k->admissible(), "the index must be admissible");
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  const auto numeric = IdentityKind::Numeric;
  const auto exact = IdentityKind::ExactSymbolic;

  r.push_back({{"duality", numeric, "zeta(k) = zeta(k^dual): the Ohno relation at m = 0", {}, true, {},
                "k admissible", {}, range(2, 5), {}},
               need_admissible,
               [](const Point& x) { return std::vector<Sides>{{IndexCombination(*x.k), IndexCombination(dual(*x.k))}}; },
               {}, {}});

  r.push_back({{"ohno", numeric, "Ohno relation O_m(k) = O_m(k^dual), coefficientwise in m", {"m"}, true, {},
                "k admissible, m >= 0", {{"m", range(0, 2)}}, range(2, 5), {}},
               need_admissible,
               [](const Point& x) {
                 const int m = x.at("m");
                 return std::vector<Sides>{
                     {ohno_m_symbolic(*x.k, m), ohno_m_symbolic(IndexCombination(dual(*x.k)), m)}};
               },
               {}, {}});

  r.push_back({{"stuffle_single", numeric, "harmonic product zeta(s) zeta(k) = zeta((s) * k)", {"s"}, true, {},
                "s >= 2, k admissible", {{"s", range(2, 3)}}, {}, {Index{2}, Index{3}, Index{1, 2}}},
               [](const Point& x) {
                 if (auto bad = need_admissible(x)) return bad;
                 return need(x.at("s") >= 2, "s must be at least 2");
               },
               {},
               [](const Point& x, const VerifyOptions& o) {
                 const int s = x.at("s");
                 const auto product = star_single(s, *x.k);
                 std::set<Index> distinct{Index{s}, *x.k};
                 for (const auto& [k, c] : product) distinct.insert(k);
                 const double n = static_cast<double>(distinct.size());
                 const double budget = 4.0 + product.l1_norm().get_d();
                 EvalConfig cfg = o.cfg;
                 cfg.tol = std::clamp(o.cfg.tol * n / budget, bucket_tolerance(kFinestBucket), o.cfg.tol);
                 const ZetaEvaluator z(cfg, o.cache);
                 const DoubleDouble lhs = dd::mul(DoubleDouble(z.zeta(Index{s})), DoubleDouble(z.zeta(*x.k)));
                 const DoubleDouble diff = dd::sub(lhs, z.termwise(product));
                 return NumericOutcome{std::fabs(diff.to_double()), distinct.size()};
               },
               {}});

  r.push_back({{"hoffman", numeric, "Hoffman's relation: sum of entry increments = sum of entry splittings", {}, true,
                {}, "k admissible", {}, range(2, 5), {}},
               need_admissible,
               [](const Point& x) {
                 auto sides = hoffman_sides(*x.k);
                 return std::vector<Sides>{{std::move(sides.lhs), std::move(sides.rhs)}};
               },
               {}, {}});

  const auto st_at_least = [](int s_min, int t_min, int m_min) -> Hypothesis {
    return [=](const Point& x) -> std::optional<std::string> {
      if (x.v.count("s") && x.at("s") < s_min) return "s must be at least " + std::to_string(s_min);
      if (x.v.count("t") && x.at("t") < t_min) return "t must be at least " + std::to_string(t_min);
      if (x.v.count("m") && x.at("m") < m_min) return "m must be at least " + std::to_string(m_min);
      if (x.v.count("l") && x.at("l") < 0) return std::string("l must be nonnegative");
      return std::nullopt;
    };
  };

  r.push_back({{"hmos", numeric, "F(s;(t+1)) = F(t;(s+1)), i.e. D_{m,0}(s,t) = 0", {"s", "t", "m"}, false, {},
                "s, t >= 2, m >= 0", {{"s", range(2, 3)}, {"t", range(2, 3)}, {"m", range(0, 1)}}, {}, {}},
               st_at_least(2, 2, 0),
               [](const Point& x) {
                 return std::vector<Sides>{{d_combination(x.at("s"), x.at("t"), 0, x.at("m")), {}}};
               },
               {}, {}});

  r.push_back({{"main", numeric, "F(s;(t+1) sha {2}^l) = F(t;(s+1) sha {2}^l), i.e. D_{m,l}(s,t) = 0",
                {"s", "t", "l", "m"}, false, {}, "s, t >= 2, l, m >= 0",
                {{"s", range(2, 3)}, {"t", range(2, 3)}, {"l", range(0, 1)}, {"m", range(0, 1)}}, {}, {}},
               st_at_least(2, 2, 0),
               [](const Point& x) {
                 return std::vector<Sides>{{d_combination(x.at("s"), x.at("t"), x.at("l"), x.at("m")), {}}};
               },
               {}, {}});

  r.push_back({{"lemma_fmpre1", numeric, "F_{m,l}(s;(t+1)) as a difference of two hast double sums",
                {"s", "t", "l", "m"}, false, {}, "s >= 2, t >= 1, l, m >= 0",
                {{"s", range(2, 3)}, {"t", range(1, 2)}, {"l", range(0, 1)}, {"m", range(0, 1)}}, {}, {}},
               st_at_least(2, 1, 0),
               [](const Point& x) {
                 return std::vector<Sides>{fmpre1_sides(x.at("s"), x.at("t"), x.at("l"), x.at("m"))};
               },
               {}, {}});

  r.push_back({{"lemma_fmpre2", numeric,
                "hast double sums telescope to O_m((s) hast X) for X = (t+1) sha {2}^l and its dual",
                {"s", "t", "l", "m"}, false, {"direct", "dual"}, "s, t >= 1, m >= 1, l >= 0",
                {{"s", range(1, 2)}, {"t", range(1, 2)}, {"l", range(0, 1)}, {"m", range(1, 2)}}, {}, {}},
               st_at_least(1, 1, 1),
               [](const Point& x) {
                 const int part = x.part == "direct" ? 1 : 2;
                 return std::vector<Sides>{fmpre2_sides(part, x.at("s"), x.at("t"), x.at("l"), x.at("m"))};
               },
               {}, {}});

  r.push_back({{"lemma_fm", numeric, "F_{m,l}(s-1;(t+1)) - F_{m-1,l}(s;(t+1)) as two hast Ohno sums",
                {"s", "t", "l", "m"}, false, {}, "s >= 3, t >= 1, m >= 1, l >= 0",
                {{"s", range(3, 4)}, {"t", range(1, 2)}, {"l", range(0, 1)}, {"m", range(1, 2)}}, {}, {}},
               st_at_least(3, 1, 1),
               [](const Point& x) {
                 return std::vector<Sides>{fm_sides(x.at("s"), x.at("t"), x.at("l"), x.at("m"))};
               },
               {}, {}});

  r.push_back({{"lemma_oooo", numeric, "four-term cancellation of sha and hast Ohno sums symmetric in s, t",
                {"s", "t", "l", "m"}, false, {}, "s, t >= 3, l, m >= 0",
                {{"s", range(3, 4)}, {"t", range(3, 4)}, {"l", range(0, 1)}, {"m", range(0, 1)}}, {}, {}},
               st_at_least(3, 3, 0),
               [](const Point& x) {
                 return std::vector<Sides>{oooo_sides(x.at("s"), x.at("t"), x.at("l"), x.at("m"))};
               },
               {}, {}});

  r.push_back({{"lemma_dddd", numeric, "D_{m-1,l}(s,t) = D_{m,l}(s-1,t) + D_{m,l}(s,t-1)", {"s", "t", "l", "m"},
                false, {}, "s, t >= 3, m >= 1, l >= 0",
                {{"s", range(3, 4)}, {"t", range(3, 4)}, {"l", range(0, 1)}, {"m", range(1, 2)}}, {}, {}},
               st_at_least(3, 3, 1),
               [](const Point& x) {
                 return std::vector<Sides>{dddd_sides(x.at("s"), x.at("t"), x.at("l"), x.at("m"))};
               },
               {}, {}});

  r.push_back({{"sha_expansion_oooo", exact,
                "closed forms of (s) sha ((t) sha {2}^l)^dual, (s-1) hast ((t+1) sha {2}^l)^dual and their O_m "
                "difference",
                {"s", "t", "l", "m"}, false, {"sha", "hast", "difference"}, "s, t >= 2, l, m >= 0",
                {{"s", range(2, 4)}, {"t", range(2, 4)}, {"l", range(1, 2)}, {"m", range(0, 1)}}, {}, {}},
               st_at_least(2, 2, 0),
               [](const Point& x) {
                 const int s = x.at("s"), t = x.at("t"), l = x.at("l"), m = x.at("m");
                 if (x.part == "difference") return std::vector<Sides>{oooo_difference_expansion(s, t, l, m)};
                 const Sides raw = x.part == "sha" ? oooo_sha_expansion(s, t, l) : oooo_hast_expansion(s, t, l);
                 return std::vector<Sides>{{shift_sum(raw.lhs, m), shift_sum(raw.rhs, m)}};
               },
               {}, {}});

  r.push_back({{"hast_symmetry", exact,
                "(s-1) hast ((t+1) sha {2}^l) = (s+t) sha {2}^l + (s+1) sha (t+1) sha {2}^{l-1}, symmetric in s, t",
                {"s", "t", "l", "m"}, false, {}, "s, t >= 2, l, m >= 0",
                {{"s", range(2, 4)}, {"t", range(2, 4)}, {"l", range(1, 2)}, {"m", range(0, 1)}}, {}, {}},
               st_at_least(2, 2, 0),
               [](const Point& x) {
                 const int s = x.at("s"), t = x.at("t"), l = x.at("l"), m = x.at("m");
                 const Sides st = hast_symmetry_sides(s, t, l, m);
                 const Sides ts = hast_symmetry_sides(t, s, l, m);
                 return std::vector<Sides>{st, {ts.lhs, st.rhs}};
               },
               {}, {}});

  const Hypothesis pq_hypothesis = [](const Point& x) -> std::optional<std::string> {
    const int l = x.at("l");
    if (l < 1) return std::string("l must be at least 1");
    if (x.at("s") < 2) return std::string("s must be at least 2");
    if (x.at("m") < 0) return std::string("m must be nonnegative");
    const int p = x.at("p"), q = x.at("q");
    if (p < 1 || p > l + 1 || q < 1 || q > l + 1) return "p and q must lie in 1.." + std::to_string(l + 1);
    return std::nullopt;
  };
  const auto pq_params = [](const Point& x) {
    return ProofQuantityParams{x.at("s"), 2, x.at("l"), x.at("m"), x.at("p"), x.at("q")};
  };

  r.push_back({{"add1", exact, "G_{p,q} = H_{p,q}", {"s", "l", "m", "p", "q"}, false, {},
                "l >= 1, 1 <= p, q <= l+1, s >= 2, m >= 0",
                {{"s", range(2, 3)}, {"l", range(1, 2)}, {"m", range(0, 1)}}, {}, {}},
               pq_hypothesis,
               [=](const Point& x) {
                 const auto params = pq_params(x);
                 return std::vector<Sides>{{G_pq(params), H_pq(params)}};
               },
               {}, {}});

  r.push_back({{"add2", exact, "I_{p,q} = J_{p,q}, with the three diagonal pieces g1, g2, g3 at p = q",
                {"s", "l", "m", "p", "q"}, false, {"IJ", "g1", "g2", "g3"},
                "l >= 1, 1 <= p, q <= l+1, s >= 2, m >= 0; g1..g3 only at p = q",
                {{"s", range(2, 3)}, {"l", range(1, 2)}, {"m", range(0, 1)}}, {}, {}},
               pq_hypothesis,
               [=](const Point& x) {
                 const auto params = pq_params(x);
                 if (x.part == "IJ") return std::vector<Sides>{{I_pq(params), J_pq(params)}};
                 return std::vector<Sides>{i_diagonal_piece(x.part[1] - '0', params)};
               },
               {},
               [](const Point& x) { return x.part == "IJ" || x.at("p") == x.at("q"); }});

  r.push_back({{"abc_decomposition", numeric,
                "F_{m,l}(s;(3)) - F_{m,l}(2;(s+1)) = A + B + C, by definitions and by composition sums",
                {"s", "l", "m"}, false, {"definitions", "compositions"}, "s >= 2, l, m >= 0",
                {{"s", range(2, 4)}, {"l", range(0, 2)}, {"m", range(0, 1)}}, {}, {}},
               st_at_least(2, 0, 0),
               [](const Point& x) {
                 const int s = x.at("s"), l = x.at("l"), m = x.at("m");
                 Sides sides = abc_sides(s, l, m);
                 if (x.part == "compositions") sides.rhs = a_composition(s, l, m) + bc_composition(s, l, m);
                 return std::vector<Sides>{sides};
               },
               {}, {}});
  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = build_registry();
  return entries;
}

const Entry& find_entry(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.spec.name == name) return e;
  }
  throw ConfigError("unknown identity '" + std::string(name) + "' (see the list subcommand)");
}

std::string compress(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) return "";
  if (values.size() > 1 && values.back() - values.front() + 1 == static_cast<int>(values.size())) {
    return std::to_string(values.front()) + ".." + std::to_string(values.back());
  }
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

ParamList describe(const Point& x) {
  ParamList out;
  if (x.k) out.emplace_back("k", x.k->to_string());
  for (const char* key : {"s", "t", "l", "m", "p", "q"}) {
    if (auto it = x.v.find(key); it != x.v.end()) out.emplace_back(key, std::to_string(it->second));
  }
  if (!x.part.empty()) out.emplace_back("part", x.part);
  return out;
}

struct Plan {
  std::vector<Point> points;
  std::string description;
};

Plan plan(const Entry& entry, const Grid& grid) {
  const auto& spec = entry.spec;
  for (const auto& [key, values] : grid.values) {
    if (std::find(spec.axes.begin(), spec.axes.end(), key) == spec.axes.end()) {
      throw ConfigError("identity '" + spec.name + "' does not take parameter --" + key);
    }
    if (values.empty()) throw ConfigError("empty range for --" + key);
  }
  if (!spec.takes_index && (!grid.indices.empty() || !grid.weights.empty())) {
    throw ConfigError("identity '" + spec.name + "' does not take an index");
  }

  Plan out;
  std::vector<std::optional<Index>> indices{std::nullopt};
  if (spec.takes_index) {
    indices.clear();
    if (!grid.indices.empty()) {
      for (const auto& k : grid.indices) indices.emplace_back(k);
      out.description = "k=";
      for (std::size_t i = 0; i < grid.indices.size(); ++i) {
        out.description += (i ? ";" : "") + grid.indices[i].to_string();
      }
    } else {
      const auto weights = !grid.weights.empty() ? grid.weights
                           : spec.default_indices.empty() ? spec.default_weights
                                                          : std::vector<int>{};
      if (weights.empty()) {
        for (const auto& k : spec.default_indices) indices.emplace_back(k);
        out.description = "k=";
        for (std::size_t i = 0; i < spec.default_indices.size(); ++i) {
          out.description += (i ? ";" : "") + spec.default_indices[i].to_string();
        }
      } else {
        for (int w : weights) {
          for (auto& k : admissible_indices(w)) indices.emplace_back(std::move(k));
        }
        out.description = "weight=" + compress(weights);
      }
    }
  }

  // Axes other than p, q in schema order; p, q default to 1..l+1.
  std::vector<std::pair<std::string, std::vector<int>>> axes;
  bool pq = false;
  for (const auto& key : spec.axes) {
    if (key == "p" || key == "q") {
      pq = true;
      continue;
    }
    auto it = grid.values.find(key);
    const auto& values = it != grid.values.end() ? it->second : spec.default_grid.at(key);
    axes.emplace_back(key, values);
    out.description += (out.description.empty() ? "" : " ") + key + "=" + compress(values);
  }
  const auto pq_values = [&](const std::string& key, int l) {
    auto it = grid.values.find(key);
    return it != grid.values.end() ? it->second : range(1, l + 1);
  };
  if (pq) {
    for (const char* key : {"p", "q"}) {
      auto it = grid.values.find(key);
      out.description += std::string(" ") + key + "=" + (it != grid.values.end() ? compress(it->second) : "1..l+1");
    }
  }
  const std::vector<std::string> parts = spec.parts.empty() ? std::vector<std::string>{""} : spec.parts;

  for (const auto& k : indices) {
    Point base;
    base.k = k;
    std::function<void(std::size_t)> descend = [&](std::size_t axis) {
      if (axis < axes.size()) {
        for (int v : axes[axis].second) {
          base.v[axes[axis].first] = v;
          descend(axis + 1);
        }
        return;
      }
      const auto emit = [&](Point x) {
        for (const auto& part : parts) {
          x.part = part;
          if (!entry.part_applies || entry.part_applies(x)) out.points.push_back(x);
        }
      };
      if (!pq) {
        emit(base);
        return;
      }
      const int l = base.at("l");
      for (int p : pq_values("p", l)) {
        for (int q : pq_values("q", l)) {
          Point x = base;
          x.v["p"] = p;
          x.v["q"] = q;
          emit(x);
        }
      }
    };
    descend(0);
  }
  return out;
}

std::size_t distinct_support(const Sides& sides) {
  std::set<Index> all;
  for (const auto& [k, c] : sides.lhs) all.insert(k);
  for (const auto& [k, c] : sides.rhs) all.insert(k);
  return all.size();
}

PointResult run_point(const Entry& entry, const Point& x, const VerifyOptions& options) {
  const auto start = Clock::now();
  PointResult out;
  out.params = describe(x);
  try {
    for (const auto& [key, value] : x.v) {
      if (value < 0 && key != "p" && key != "q") throw DomainError(key + " must be nonnegative");
    }
    if (auto reason = entry.hypothesis(x)) {
      out.refused = "outside hypotheses: " + *reason;
    } else if (entry.spec.kind == IdentityKind::ExactSymbolic) {
      double l1 = 0.0;
      for (const auto& sides : entry.build(x)) {
        const auto diff = sides.lhs - sides.rhs;
        l1 += diff.l1_norm().get_d();
      }
      out.equal = l1 == 0.0;
      out.residual = l1;
      out.pass = out.equal;
    } else {
      NumericOutcome outcome{};
      if (entry.custom) {
        outcome = entry.custom(x, options);
      } else {
        const auto sides = entry.build(x).front();
        const auto diff = sides.lhs - sides.rhs;
        outcome.evals = distinct_support(sides);
        if (!diff.empty()) {
          // Each zeta gets tol * evals / sum|c| so the total error stays
          // below tol * evals, a quarter of the pass threshold.
          EvalConfig cfg = options.cfg;
          const double per_zeta = options.cfg.tol * static_cast<double>(outcome.evals) / diff.l1_norm().get_d();
          cfg.tol = std::clamp(per_zeta, bucket_tolerance(kFinestBucket), options.cfg.tol);
          outcome.residual = std::fabs(ZetaEvaluator(cfg, options.cache).termwise(diff).to_double());
        }
      }
      out.residual = outcome.residual;
      out.evals = outcome.evals;
      out.threshold = options.cfg.tol * static_cast<double>(outcome.evals) * 4.0;
      out.pass = out.residual <= out.threshold;
    }
  } catch (const Error& e) {
    out.refused = e.what();
    out.pass = false;
  }
  if (out.refused) out.pass = false;
  out.elapsed_ms = ms_since(start);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view kind_name(IdentityKind kind) {
  return kind == IdentityKind::ExactSymbolic ? "exact-symbolic" : "numeric";
}

const std::vector<IdentitySpec>& list_identities() {
  static const std::vector<IdentitySpec> specs = [] {
    std::vector<IdentitySpec> out;
    for (const auto& e : registry()) out.push_back(e.spec);
    return out;
  }();
  return specs;
}

const IdentitySpec& find_identity(std::string_view name) { return find_entry(name).spec; }

VerificationReport verify(std::string_view name, const Grid& grid, const VerifyOptions& options) {
  const auto start = Clock::now();
  const Entry& entry = find_entry(name);
  tol_bucket(options.cfg.tol);
  const Plan p = plan(entry, grid);

  VerificationReport report;
  report.identity = entry.spec.name;
  report.kind = entry.spec.kind;
  report.grid = p.description;
  report.tol = entry.spec.kind == IdentityKind::Numeric ? options.cfg.tol : 0.0;
  report.points.resize(p.points.size());

  unsigned workers = options.jobs > 0 ? static_cast<unsigned>(options.jobs) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(p.points.size())));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < p.points.size(); i = next++) {
      report.points[i] = run_point(entry, p.points[i], options);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  report.pass = !report.points.empty();
  for (const auto& pt : report.points) {
    report.pass = report.pass && pt.pass;
    if (!pt.refused) report.max_residual = std::max(report.max_residual, pt.residual);
    report.evals += pt.evals;
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

ReportFormat parse_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw ConfigError("unsupported report format '" + std::string(text) + "' (expected json or csv)");
}

std::string join_params(const ParamList& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i ? ";" : "") + params[i].first + "=" + params[i].second;
  }
  return out;
}

std::string to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["identity"] = report.identity;
  doc["kind"] = kind_name(report.kind);
  doc["grid"] = report.grid;
  doc["tol"] = report.tol;
  doc["pass"] = report.pass;
  doc["max_residual"] = report.max_residual;
  doc["evals"] = report.evals;
  doc["elapsed_ms"] = report.elapsed_ms;
  ordered_json points = ordered_json::array();
  for (const auto& pt : report.points) {
    ordered_json j;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : pt.params) {
      if (key == "k" || key == "part") {
        params[key] = value;
      } else {
        params[key] = std::stoi(value);
      }
    }
    j["params"] = params;
    if (report.kind == IdentityKind::ExactSymbolic) {
      j["equal"] = pt.equal;
    } else {
      j["residual"] = pt.residual;
      j["threshold"] = pt.threshold;
    }
    j["pass"] = pt.pass;
    j["evals"] = pt.evals;
    j["elapsed_ms"] = pt.elapsed_ms;
    if (pt.refused) j["refused"] = *pt.refused;
    points.push_back(std::move(j));
  }
  doc["points"] = std::move(points);
  return doc.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "identity,params,residual,tol,pass,evals,elapsed_ms\n";
  for (const auto& pt : report.points) {
    out += csv_field(report.identity) + "," + csv_field(join_params(pt.params)) + "," + format_double(pt.residual) +
           "," + format_double(pt.threshold) + "," + (pt.pass ? "true" : "false") + "," + std::to_string(pt.evals) +
           "," + format_double(pt.elapsed_ms) + "\n";
  }
  return out;
}

void report_to_file(const VerificationReport& report, const std::filesystem::path& path, ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open report file " + path.string() + " for writing");
  out << (format == ReportFormat::Json ? to_json(report) : to_csv(report));
  out.flush();
  if (!out) throw Error("failed writing report file " + path.string());
}

}  // namespace ohno::verify
