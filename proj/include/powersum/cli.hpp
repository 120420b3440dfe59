#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "powersum/methods.hpp"
#include "powersum/polynomial.hpp"
#include "powersum/rational.hpp"

namespace powersum::cli {

enum class Format { plain, latex, json, coeffs };
enum class FibMethod { doubling, binet };

std::string_view format_name(Format f);
std::optional<Format> parse_format(std::string_view name);

struct PowerSumCmd {
  Integer d;
  std::optional<Method> method;  // nullopt means all
  Format format = Format::plain;
  std::optional<Integer> eval_at;
  friend bool operator==(const PowerSumCmd&, const PowerSumCmd&) = default;
};

struct FallingSumCmd {
  Integer k;
  Format format = Format::plain;
  std::optional<Integer> eval_at;
  friend bool operator==(const FallingSumCmd&, const FallingSumCmd&) = default;
};

struct FibCmd {
  Integer n;
  FibMethod method = FibMethod::doubling;
  friend bool operator==(const FibCmd&, const FibCmd&) = default;
};

struct GeomCmd {
  Rational a0;
  Rational r;
  Integer n;
  friend bool operator==(const GeomCmd&, const GeomCmd&) = default;
};

struct VerifyCmd {
  Integer dmax = 20;
  Integer nmax = 50;
  bool json = false;
  friend bool operator==(const VerifyCmd&, const VerifyCmd&) = default;
};

struct BenchCmd {
  Integer dmax = 10;
  bool json = false;
  friend bool operator==(const BenchCmd&, const BenchCmd&) = default;
};

struct HelpCmd {
  friend bool operator==(const HelpCmd&, const HelpCmd&) = default;
};

using Command = std::variant<PowerSumCmd, FallingSumCmd, FibCmd, GeomCmd, VerifyCmd, BenchCmd, HelpCmd>;

/// Raised for anything the grammar rejects; what() names the offending token.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// argv without the program name.
Command parse_args(const std::vector<std::string>& args);

/// Inverse of parse_args: every field is spelled out explicitly.
std::vector<std::string> to_args(const Command& cmd);

std::string usage();

/// plain: "1/3*n^3 + 1/2*n^2 + 1/6*n"
/// latex: "\frac{1}{3}n^{3} + \frac{1}{2}n^{2} + \frac{1}{6}n"
/// json:  {"degree": 2, "coefficients": ["0/1", "1/2", "1/2"]}
/// coeffs: "0/1 1/2 1/2"
std::string format_polynomial(const Polynomial& p, Format fmt);

/// Parses the coeffs/json coefficient list back into a Polynomial.
Polynomial parse_coefficients(const std::vector<std::string>& coeffs);

struct MethodResult {
  std::optional<Polynomial> poly;
  std::string error;
  long long micros = 0;
  bool agrees = false;
};

struct DegreeReport {
  unsigned d = 0;
  std::optional<Polynomial> poly;
  std::map<Method, MethodResult> methods;
  bool oracle_match = false;
  /// Shape checks are only meaningful for d >= 1 and count as passed at d = 0.
  bool degree_ok = false;
  bool leading_ok = false;
  bool constant_ok = false;
  std::string failure;

  bool passed() const;
};

struct VerifyReport {
  unsigned dmax = 0;
  unsigned nmax = 0;
  std::vector<DegreeReport> degrees;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 2; }
};

/// Computes every method for each d <= dmax, checks structural agreement,
/// agreement with brute force on 0..nmax and the shape of the result.
VerifyReport run_verify(unsigned dmax, unsigned nmax);

std::string render_text(const VerifyReport& report);
std::string render_json(const VerifyReport& report);

/// Wall-time table of each method for d = 0..dmax.
std::string run_bench(unsigned dmax, bool json);

/// Runs a parsed command, writing machine output to `out` and diagnostics to
/// `err`. Returns the process exit code.
int execute(const Command& cmd, std::string& out, std::string& err);

/// Full CLI entry point.
int run(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace powersum::cli
