#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ohno/index.hpp"
#include "ohno/zeta.hpp"

namespace ohno::verify {

enum class IdentityKind { ExactSymbolic, Numeric };

std::string_view kind_name(IdentityKind kind);

/// Registry entry describing one identity and the parameters it takes.
struct IdentitySpec {
  std::string name;
  IdentityKind kind;
  /// The statement being checked, in words.
  std::string statement;
  /// Integer axes ("s", "t", "l", "m", "p", "q") the identity takes.
  std::vector<std::string> axes;
  /// True when the identity ranges over indices (--index / --weight).
  bool takes_index = false;
  /// Named sub-checks, each a separate grid point; empty when there is one.
  std::vector<std::string> parts;
  /// Parameter hypotheses; points outside them are refused.
  std::string hypotheses;
  /// Grid used for axes the caller leaves unset.
  std::map<std::string, std::vector<int>> default_grid;
  std::vector<int> default_weights;
  /// Used instead of default_weights when nonempty.
  std::vector<Index> default_indices;
};

/// Values to sweep. Unset axes fall back to the identity's defaults; unset
/// p and q run over 1..l+1 at each l. Indices come from `indices`, else
/// from all admissible indices of the listed weights.
struct Grid {
  std::map<std::string, std::vector<int>> values;
  std::vector<Index> indices;
  std::vector<int> weights;
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct PointResult {
  ParamList params;
  /// Numeric: |lhs - rhs|. Exact: l1 norm of lhs - rhs (0 when equal).
  double residual = 0.0;
  /// Exact identities only.
  bool equal = true;
  /// Numeric pass threshold: tol * evals * 4. Zero for exact identities.
  double threshold = 0.0;
  /// Distinct zeta values the instance involves.
  std::size_t evals = 0;
  double elapsed_ms = 0.0;
  /// Set when the point violates the identity's hypotheses or fails to
  /// evaluate; such a point never passes.
  std::optional<std::string> refused;
  bool pass = false;
};

struct VerificationReport {
  std::string identity;
  IdentityKind kind = IdentityKind::Numeric;
  std::string grid;
  double tol = 0.0;
  bool pass = false;
  double max_residual = 0.0;
  std::size_t evals = 0;
  double elapsed_ms = 0.0;
  std::vector<PointResult> points;
};

struct VerifyOptions {
  EvalConfig cfg;
  std::shared_ptr<ZetaCache> cache;
  /// Worker threads; 0 uses the hardware concurrency.
  int jobs = 1;
};

/// The full registry, in a fixed order.
const std::vector<IdentitySpec>& list_identities();
/// Throws ConfigError for an unknown name.
const IdentitySpec& find_identity(std::string_view name);

/// Runs the identity over the grid. Points are evaluated concurrently and
/// reported in grid order. Throws ConfigError for an unknown name or an
/// axis the identity does not take.
VerificationReport verify(std::string_view name, const Grid& grid, const VerifyOptions& options = {});

enum class ReportFormat { Json, Csv };

/// "json" or "csv"; throws ConfigError otherwise.
ReportFormat parse_format(std::string_view text);

std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
/// Writes the report; throws Error when the file cannot be written.
void report_to_file(const VerificationReport& report, const std::filesystem::path& path, ReportFormat format);

/// "s=2;t=3;k=1,2".
std::string join_params(const ParamList& params);

}  // namespace ohno::verify
