#include "ohno/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ohno/error.hpp"
#include "ohno/expression.hpp"
#include "ohno/ohno.hpp"
#include "ohno/verifier.hpp"
#include "ohno/zeta.hpp"

namespace ohno::cli {

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("expected an integer, got '" + text + "'");
  return v;
}

struct Options {
  std::string index;
  std::string expr;
  double tol = EvalConfig{}.tol;
  int terms_cap = EvalConfig{}.max_terms;
  int precision_bits = 0;
  std::string kernel = "auto";
  std::string cache = "on";
  int jobs = 1;

  std::string name;
  std::map<std::string, std::string> axes;
  std::string weight;
  std::string m_single;
  int M = -1;
  std::string out;
  std::string format;
  bool symbolic = false;
};

EvalConfig make_config(const Options& o) {
  EvalConfig cfg;
  cfg.tol = o.tol;
  cfg.max_terms = o.terms_cap;
  cfg.working_precision = o.precision_bits;
  cfg.kernel = kernels::parse_kernel(o.kernel);
  tol_bucket(cfg.tol);
  return cfg;
}

/// In-memory cache unless "off"; a path (or OHNO_CACHE) adds persistence.
class CacheSession {
 public:
  explicit CacheSession(const std::string& setting) {
    std::string path;
    if (setting != "on" && setting != "off") path = setting;
    if (const char* env = std::getenv("OHNO_CACHE"); env && *env && setting != "off") path = env;
    if (setting == "off" && path.empty()) return;
    cache_ = std::make_shared<ZetaCache>();
    if (!path.empty()) {
      path_ = path;
      cache_->load(path_);
    }
  }
  void save() const {
    if (cache_ && !path_.empty()) cache_->save(path_);
  }
  const std::shared_ptr<ZetaCache>& get() const { return cache_; }

 private:
  std::shared_ptr<ZetaCache> cache_;
  std::string path_;
};

IndexCombination input_combination(const Options& o) {
  if (!o.index.empty() && !o.expr.empty()) throw ConfigError("give either --index or --expr, not both");
  if (!o.index.empty()) return IndexCombination(Index::parse(o.index));
  if (!o.expr.empty()) return expr::expand(o.expr);
  throw ConfigError("one of --index or --expr is required");
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto cfg = make_config(o);
  CacheSession cache(o.cache);
  const ZetaEvaluator z(cfg, cache.get());
  double value = 0.0;
  if (!o.index.empty() && o.expr.empty()) {
    value = z.zeta(Index::parse(o.index));
  } else {
    value = z.combination(input_combination(o));
  }
  out << format_value(value) << "\n";
  cache.save();
  return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  if (o.expr.empty()) throw ConfigError("expand needs --expr");
  out << expr::expand(o.expr).to_string() << "\n";
  return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  if (!o.index.empty() && o.expr.empty()) {
    out << dual(Index::parse(o.index)).to_string() << "\n";
  } else {
    out << dual_linear(input_combination(o)).to_string() << "\n";
  }
  return kExitOk;
}

int cmd_ohno(const Options& o, std::ostream& out) {
  const auto c = input_combination(o);
  std::vector<int> ms;
  if (!o.m_single.empty() && o.M >= 0) throw ConfigError("give either --m or --M, not both");
  if (!o.m_single.empty()) {
    ms = parse_range(o.m_single);
  } else if (o.M >= 0) {
    for (int m = 0; m <= o.M; ++m) ms.push_back(m);
  } else {
    throw ConfigError("ohno needs --m or --M");
  }
  const auto cfg = make_config(o);
  CacheSession cache(o.cache);
  const ZetaEvaluator z(cfg, cache.get());
  for (int m : ms) {
    const auto sum = ohno_m_symbolic(c, m);
    out << "m=" << m << "\t" << sum.to_string();
    if (!o.symbolic) out << "\t" << format_value(z.combination(sum));
    out << "\n";
  }
  cache.save();
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.name.empty()) throw ConfigError("verify needs --name");
  const auto& spec = verify::find_identity(o.name);

  verify::Grid grid;
  for (const auto& [key, text] : o.axes) {
    if (!text.empty()) grid.values[key] = parse_range(text);
  }
  if (!o.m_single.empty() && grid.values.count("m") == 0) grid.values["m"] = parse_range(o.m_single);
  if (o.M >= 0) {
    if (grid.values.count("m")) throw ConfigError("give either --m or --M, not both");
    for (int m = 0; m <= o.M; ++m) grid.values["m"].push_back(m);
  }
  if (!o.index.empty()) {
    std::stringstream ss(o.index);
    std::string piece;
    while (std::getline(ss, piece, ';')) grid.indices.push_back(Index::parse(piece));
  }
  if (!o.weight.empty()) grid.weights = parse_range(o.weight);

  verify::VerifyOptions vo;
  vo.cfg = make_config(o);
  CacheSession cache(o.cache);
  vo.cache = cache.get();
  vo.jobs = o.jobs;

  std::optional<verify::ReportFormat> format;
  if (!o.format.empty()) format = verify::parse_format(o.format);
  if (!format && !o.out.empty()) {
    const bool csv = o.out.size() >= 4 && o.out.compare(o.out.size() - 4, 4, ".csv") == 0;
    format = csv ? verify::ReportFormat::Csv : verify::ReportFormat::Json;
  }

  const auto report = verify::verify(spec.name, grid, vo);
  if (!o.out.empty()) verify::report_to_file(report, o.out, *format);
  cache.save();

  std::size_t failed = 0;
  for (const auto& pt : report.points) {
    if (pt.pass) continue;
    if (++failed <= 5) {
      out << "  fail " << verify::join_params(pt.params) << ": "
          << (pt.refused ? *pt.refused : "residual " + format_value(pt.residual)) << "\n";
    }
  }
  char line[256];
  std::snprintf(line, sizeof line, "%s [%s]: %s  points=%zu failed=%zu max_residual=%.3g tol=%.3g evals=%zu\n",
                report.identity.c_str(), std::string(verify::kind_name(report.kind)).c_str(),
                report.pass ? "PASS" : "FAIL", report.points.size(), failed, report.max_residual, report.tol,
                report.evals);
  out << line;
  return report.pass ? kExitOk : kExitFailure;
}

int cmd_list(std::ostream& out) {
  for (const auto& spec : verify::list_identities()) {
    out << spec.name << "\t" << verify::kind_name(spec.kind) << "\t" << spec.statement << "\n";
  }
  return kExitOk;
}

void add_eval_flags(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "target absolute error (default 1e-12)");
  sub->add_option("--terms-cap", o.terms_cap, "maximum series terms per factor (default 256)");
  sub->add_option("--precision-bits", o.precision_bits, "mantissa bits; 0 derives them from --tol");
  sub->add_option("--kernel", o.kernel, "series kernel: auto, scalar or avx2");
  sub->add_option("--cache", o.cache, "on, off, or a cache file path (OHNO_CACHE overrides the path)");
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const auto dots = piece.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(piece));
      continue;
    }
    const int lo = parse_int(piece.substr(0, dots));
    const int hi = parse_int(piece.substr(dots + 2));
    if (hi < lo) throw ConfigError("empty range '" + piece + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty range '" + text + "'");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ohno sums and multiple zeta values: evaluation, expansion and identity checks", "ohno"};
  app.require_subcommand(1);
  app.footer(std::string(expr::grammar_help()));

  auto* eval = app.add_subcommand("eval", "evaluate zeta at an index or an expression");
  eval->add_option("--index", o.index, "index, e.g. 1,2");
  eval->add_option("--expr", o.expr, "expression (see grammar below)");
  add_eval_flags(eval, o);

  auto* expand = app.add_subcommand("expand", "expand an expression into a combination");
  expand->add_option("--expr", o.expr, "expression")->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual of an index or expression");
  dual_cmd->add_option("--index", o.index, "admissible index");
  dual_cmd->add_option("--expr", o.expr, "expression");

  auto* ohno = app.add_subcommand("ohno", "Ohno sums O_m of an index or expression");
  ohno->add_option("--index", o.index, "admissible index");
  ohno->add_option("--expr", o.expr, "expression");
  ohno->add_option("--m", o.m_single, "shift weight (value or range a..b)");
  ohno->add_option("--M", o.M, "all shift weights 0..M");
  ohno->add_flag("--symbolic", o.symbolic, "print combinations only");
  add_eval_flags(ohno, o);

  auto* verify_cmd = app.add_subcommand("verify", "check a registered identity over a grid");
  verify_cmd->add_option("--name", o.name, "identity name (see list)")->required();
  for (const char* key : {"s", "t", "l", "p", "q"}) {
    verify_cmd->add_option(std::string("--") + key, o.axes[key], std::string(key) + " values or range a..b");
  }
  verify_cmd->add_option("--m", o.m_single, "m values or range a..b");
  verify_cmd->add_option("--M", o.M, "m = 0..M");
  verify_cmd->add_option("--index", o.index, "indices for index-based identities, separated by ';'");
  verify_cmd->add_option("--weight", o.weight, "all admissible indices of these weights");
  verify_cmd->add_option("--out", o.out, "report file");
  verify_cmd->add_option("--format", o.format, "json or csv (default from --out extension)");
  verify_cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  add_eval_flags(verify_cmd, o);

  auto* list = app.add_subcommand("list", "list registered identities");

  std::vector<const char*> argv{"ohno"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "ohno: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*expand) return cmd_expand(o, out);
    if (*dual_cmd) return cmd_dual(o, out);
    if (*ohno) return cmd_ohno(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*list) return cmd_list(out);
  } catch (const expr::ParseError& e) {
    err << "ohno: syntax error at " << e.what() << "\n\n" << expr::grammar_help();
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "ohno: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "ohno: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "ohno: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ohno::cli
