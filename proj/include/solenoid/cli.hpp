#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "solenoid/groups.hpp"
#include "solenoid/posetlab.hpp"
#include "solenoid/profile.hpp"
#include "solenoid/reducibility.hpp"

namespace solenoid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitFalse = 3;  // --exit-verdict with a false verdict; failed selftest

/// Bad verb, flag, or literal. Nothing has been executed when this is thrown.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verb {
  Reduce,
  Compare,
  Dual,
  Dim,
  Normalize,
  Preceq,
  FamilyNew,
  FamilyCompare,
  FamilyExpand,
  FamilyDemo,
  Selftest,
  Help,
};

[[nodiscard]] std::string to_string(Verb v);

/// A fully parsed invocation: literals are already turned into values.
struct Command {
  Verb verb = Verb::Help;
  std::vector<std::string> inputs;  // literal arguments as given

  std::vector<GroupExpr> groups;               // reduce, compare: {G, H}; dual, dim, normalize: {G}
  std::vector<SupernaturalProfile> profiles;   // preceq: {q, p}
  std::optional<SupernaturalProfile> family_p;  // family-new
  std::optional<SupernaturalProfile> family_q;
  std::optional<poset::UPSet> set_a;
  std::optional<poset::UPSet> set_b;

  bool json = false;
  bool certificate = false;
  bool exit_verdict = false;
  std::optional<std::size_t> oracle_window;
  std::optional<std::size_t> crosscheck;
  std::size_t power = 1;
  std::size_t length = 0;
  std::size_t depth = 3;

  std::string help_text;
};

/// Parses argv without the program name. Throws UsageError.
[[nodiscard]] Command parse_command(std::span<const std::string> args);

/// One edge of a rendered certificate, with 1-based factor positions.
struct ReportEdge {
  std::size_t left = 0;
  std::size_t right = 0;
  std::string reason;
  std::vector<std::pair<Prime, Mult>> deficit;

  friend bool operator==(const ReportEdge&, const ReportEdge&) = default;
};

/// Hall violator with 1-based factor positions.
struct ReportViolator {
  std::vector<std::size_t> k;
  std::vector<std::size_t> nk;

  friend bool operator==(const ReportViolator&, const ReportViolator&) = default;
};

using ReportCertificate = std::variant<std::vector<ReportEdge>, ReportViolator>;

struct Report {
  std::string verb;
  std::vector<std::string> inputs;
  std::variant<bool, std::string> verdict;
  std::optional<ReportCertificate> certificate;
  std::vector<std::string> diagnostics;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Verdict positions shifted to 1-based, matching θ*: {1..m} → {1..n}.
[[nodiscard]] ReportCertificate to_report_certificate(const Verdict& v);

[[nodiscard]] nlohmann::ordered_json to_json(const Report& r);
/// Inverse of to_json; throws nlohmann::json exceptions on schema mismatch.
[[nodiscard]] Report report_from_json(const nlohmann::ordered_json& j);

[[nodiscard]] std::string render_text(const Report& r);
[[nodiscard]] std::string render_json(const Report& r);

struct Outcome {
  Report report;
  int exit_code = kExitOk;
};

/// Executes a parsed command. Domain errors become exit code 2 with the
/// message in the diagnostics.
[[nodiscard]] Outcome run(const Command& c);

/// parse_command + run + rendering, as the executable does it.
struct Invocation {
  std::string out;
  std::string err;
  int exit_code = kExitOk;
};

[[nodiscard]] Invocation invoke(std::span<const std::string> args);

}  // namespace solenoid::cli
