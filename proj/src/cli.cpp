#include "powersum/cli.hpp"

#include <chrono>
#include <future>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "powersum/sequences.hpp"

namespace powersum::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Integer parse_count(std::string_view token, std::string_view what) {
  Integer value;
  try {
    value = parse_integer(token);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed integer for " + std::string(what) + ": '" + std::string(token) + "'");
  }
  if (value.sign() < 0) {
    throw UsageError(std::string(what) + " must be non-negative, got '" + std::string(token) + "'");
  }
  return value;
}

Rational parse_rational_arg(std::string_view token, std::string_view what) {
  try {
    return Rational::parse(token);
  } catch (const std::exception&) {
    throw UsageError("malformed rational for " + std::string(what) + ": '" + std::string(token) + "'");
  }
}

template <class T>
T to_native(const Integer& value, std::string_view what) {
  if (value > std::numeric_limits<T>::max()) {
    throw UsageError(std::string(what) + " is too large: " + value.str());
  }
  return value.convert_to<T>();
}

// Cursor over the argument list for one subcommand.
class ArgReader {
 public:
  ArgReader(const std::vector<std::string>& args, std::size_t start) : args_(args), pos_(start) {}

  bool done() const { return pos_ >= args_.size(); }
  const std::string& peek() const { return args_[pos_]; }
  const std::string& next() { return args_[pos_++]; }

  std::string positional(std::string_view what) {
    if (done()) throw UsageError("missing argument <" + std::string(what) + ">");
    if (peek().starts_with("--")) {
      throw UsageError("expected <" + std::string(what) + ">, got option '" + peek() + "'");
    }
    return next();
  }

  std::string option_value(const std::string& option) {
    if (done()) throw UsageError("option '" + option + "' needs a value");
    return next();
  }

 private:
  const std::vector<std::string>& args_;
  std::size_t pos_;
};

[[noreturn]] void unknown_option(const std::string& token) {
  throw UsageError("unknown option '" + token + "'");
}

Format read_format(ArgReader& reader, const std::string& option) {
  const std::string value = reader.option_value(option);
  auto f = parse_format(value);
  if (!f) throw UsageError("unknown format '" + value + "'");
  return *f;
}

Command parse_powersum(ArgReader& r) {
  PowerSumCmd cmd;
  cmd.d = parse_count(r.positional("d"), "d");
  while (!r.done()) {
    const std::string opt = r.next();
    if (opt == "--method") {
      const std::string value = r.option_value(opt);
      if (value == "all") {
        cmd.method.reset();
      } else if (auto m = parse_method(value)) {
        cmd.method = *m;
      } else {
        throw UsageError("unknown method '" + value + "'");
      }
    } else if (opt == "--format") {
      cmd.format = read_format(r, opt);
    } else if (opt == "--eval") {
      cmd.eval_at = parse_count(r.option_value(opt), "--eval");
    } else {
      unknown_option(opt);
    }
  }
  return cmd;
}

Command parse_fallingsum(ArgReader& r) {
  FallingSumCmd cmd;
  cmd.k = parse_count(r.positional("k"), "k");
  while (!r.done()) {
    const std::string opt = r.next();
    if (opt == "--format") {
      cmd.format = read_format(r, opt);
    } else if (opt == "--eval") {
      cmd.eval_at = parse_count(r.option_value(opt), "--eval");
    } else {
      unknown_option(opt);
    }
  }
  return cmd;
}

Command parse_fib(ArgReader& r) {
  FibCmd cmd;
  cmd.n = parse_count(r.positional("n"), "n");
  while (!r.done()) {
    const std::string opt = r.next();
    if (opt == "--method") {
      const std::string value = r.option_value(opt);
      if (value == "doubling") {
        cmd.method = FibMethod::doubling;
      } else if (value == "binet") {
        cmd.method = FibMethod::binet;
      } else {
        throw UsageError("unknown method '" + value + "'");
      }
    } else {
      unknown_option(opt);
    }
  }
  return cmd;
}

Command parse_geom(ArgReader& r) {
  GeomCmd cmd;
  cmd.a0 = parse_rational_arg(r.positional("a0"), "a0");
  cmd.r = parse_rational_arg(r.positional("r"), "r");
  cmd.n = parse_count(r.positional("n"), "n");
  if (!r.done()) throw UsageError("unexpected argument '" + r.peek() + "'");
  return cmd;
}

Command parse_verify(ArgReader& r) {
  VerifyCmd cmd;
  while (!r.done()) {
    const std::string opt = r.next();
    if (opt == "--dmax") {
      cmd.dmax = parse_count(r.option_value(opt), "--dmax");
    } else if (opt == "--nmax") {
      cmd.nmax = parse_count(r.option_value(opt), "--nmax");
    } else if (opt == "--json") {
      cmd.json = true;
    } else {
      unknown_option(opt);
    }
  }
  return cmd;
}

Command parse_bench(ArgReader& r) {
  BenchCmd cmd;
  while (!r.done()) {
    const std::string opt = r.next();
    if (opt == "--dmax") {
      cmd.dmax = parse_count(r.option_value(opt), "--dmax");
    } else if (opt == "--json") {
      cmd.json = true;
    } else {
      unknown_option(opt);
    }
  }
  return cmd;
}

// Absolute value of a coefficient, with a unit coefficient elided when it
// multiplies a power of n.
std::string plain_term(const Rational& magnitude, std::size_t power) {
  std::string s;
  if (power == 0) return magnitude.to_string();
  if (magnitude != Rational(1)) s = magnitude.to_string() + "*";
  s += "n";
  if (power > 1) s += "^" + std::to_string(power);
  return s;
}

std::string latex_term(const Rational& magnitude, std::size_t power) {
  std::string s;
  if (power == 0 || magnitude != Rational(1)) {
    s = magnitude.is_integer() ? magnitude.num().str()
                               : "\\frac{" + magnitude.num().str() + "}{" + magnitude.den().str() + "}";
  }
  if (power == 0) return s;
  s += "n";
  if (power > 1) s += "^{" + std::to_string(power) + "}";
  return s;
}

template <class TermFn>
std::string join_terms(const Polynomial& p, TermFn term) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const bool negative = c[k].sign() < 0;
    const Rational magnitude = negative ? -c[k] : c[k];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term(magnitude, k);
  }
  return out;
}

ordered_json coefficients_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.fraction_string());
  return arr;
}

ordered_json polynomial_json(const Polynomial& p) {
  ordered_json j;
  j["degree"] = p.is_zero() ? ordered_json(nullptr) : ordered_json(p.degree());
  j["coefficients"] = coefficients_json(p);
  return j;
}

long long micros_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
}

DegreeReport verify_degree(unsigned d, unsigned nmax) {
  DegreeReport rep;
  rep.d = d;
  for (Method m : kAllMethods) {
    MethodResult res;
    const auto start = std::chrono::steady_clock::now();
    try {
      res.poly = power_sum(d, m);
    } catch (const std::exception& e) {
      res.error = e.what();
    }
    res.micros = micros_since(start);
    rep.methods.emplace(m, std::move(res));
  }

  for (auto& [m, res] : rep.methods) {
    if (res.poly && !rep.poly) rep.poly = res.poly;
  }
  if (!rep.poly) {
    rep.failure = "every method failed";
    return rep;
  }
  for (auto& [m, res] : rep.methods) res.agrees = res.poly && *res.poly == *rep.poly;

  rep.oracle_match = true;
  Integer running = 0;
  for (unsigned n = 0; n <= nmax; ++n) {
    Integer term = 1;
    for (unsigned i = 0; i < d; ++i) term *= n;
    running += term;
    if (evaluate(*rep.poly, Rational(n)) != Rational(running)) {
      rep.oracle_match = false;
      rep.failure = "oracle mismatch at n = " + std::to_string(n);
      break;
    }
  }

  if (d == 0) {
    rep.degree_ok = rep.leading_ok = rep.constant_ok = true;
  } else {
    rep.degree_ok = rep.poly->degree() == static_cast<int>(d) + 1;
    rep.leading_ok = rep.poly->leading_coefficient() == Rational(Integer(1), Integer(d + 1));
    rep.constant_ok = rep.poly->coefficient(0).is_zero();
  }
  return rep;
}

const char* flag(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

std::string_view format_name(Format f) {
  switch (f) {
    case Format::plain: return "plain";
    case Format::latex: return "latex";
    case Format::json: return "json";
    case Format::coeffs: return "coeffs";
  }
  return "?";
}

std::optional<Format> parse_format(std::string_view name) {
  for (Format f : {Format::plain, Format::latex, Format::json, Format::coeffs}) {
    if (format_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string usage() {
  return R"(usage: powersum <command> [options]

commands:
  powersum <d> [--method lhopital|matrix|stirling|euler-maclaurin|all]
               [--format plain|latex|json|coeffs] [--eval <n>]
      p_d(n) = 0^d + 1^d + ... + n^d as an exact polynomial in n.
      Defaults: --method all, --format plain.
  fallingsum <k> [--format plain|latex|json|coeffs] [--eval <n>]
      q_k(n) = sum_{m=0..n} (m+k)(m+k-1)...(m+1).
  fib <n> [--method doubling|binet]
      The n-th Fibonacci number (default: doubling).
  geom <a0> <r> <n>
      a0 (1 + r + ... + r^n); a0 and r are integers or fractions p/q.
  verify [--dmax D] [--nmax N] [--json]
      Cross-check all methods for d = 0..D against brute force on n = 0..N.
      Defaults: --dmax 20, --nmax 50.
  bench [--dmax D] [--json]
      Time each method for d = 0..D (default 10).

exit codes: 0 success, 1 usage error, 2 verification failure or internal error
)";
}

Command parse_args(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing command");
  const std::string& sub = args[0];
  if (sub == "help" || sub == "--help" || sub == "-h") {
    if (args.size() > 1) throw UsageError("unexpected argument '" + args[1] + "'");
    return HelpCmd{};
  }
  ArgReader reader(args, 1);
  if (sub == "powersum") return parse_powersum(reader);
  if (sub == "fallingsum") return parse_fallingsum(reader);
  if (sub == "fib") return parse_fib(reader);
  if (sub == "geom") return parse_geom(reader);
  if (sub == "verify") return parse_verify(reader);
  if (sub == "bench") return parse_bench(reader);
  throw UsageError("unknown command '" + sub + "'");
}

std::vector<std::string> to_args(const Command& cmd) {
  return std::visit(
      overloaded{
          [](const PowerSumCmd& c) {
            std::vector<std::string> a{"powersum", c.d.str(), "--method",
                                       c.method ? std::string(method_name(*c.method)) : "all", "--format",
                                       std::string(format_name(c.format))};
            if (c.eval_at) a.insert(a.end(), {"--eval", c.eval_at->str()});
            return a;
          },
          [](const FallingSumCmd& c) {
            std::vector<std::string> a{"fallingsum", c.k.str(), "--format", std::string(format_name(c.format))};
            if (c.eval_at) a.insert(a.end(), {"--eval", c.eval_at->str()});
            return a;
          },
          [](const FibCmd& c) {
            return std::vector<std::string>{"fib", c.n.str(), "--method",
                                            c.method == FibMethod::binet ? "binet" : "doubling"};
          },
          [](const GeomCmd& c) {
            return std::vector<std::string>{"geom", c.a0.fraction_string(), c.r.fraction_string(), c.n.str()};
          },
          [](const VerifyCmd& c) {
            std::vector<std::string> a{"verify", "--dmax", c.dmax.str(), "--nmax", c.nmax.str()};
            if (c.json) a.emplace_back("--json");
            return a;
          },
          [](const BenchCmd& c) {
            std::vector<std::string> a{"bench", "--dmax", c.dmax.str()};
            if (c.json) a.emplace_back("--json");
            return a;
          },
          [](const HelpCmd&) { return std::vector<std::string>{"--help"}; },
      },
      cmd);
}

std::string format_polynomial(const Polynomial& p, Format fmt) {
  switch (fmt) {
    case Format::plain: return join_terms(p, plain_term);
    case Format::latex: return join_terms(p, latex_term);
    case Format::json: {
      std::string out = "{\"degree\": ";
      out += p.is_zero() ? "null" : std::to_string(p.degree());
      out += ", \"coefficients\": [";
      const auto& c = p.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += ", ";
        out += "\"" + c[i].fraction_string() + "\"";
      }
      return out + "]}";
    }
    case Format::coeffs: {
      if (p.is_zero()) return "0/1";
      std::string out;
      for (const auto& c : p.coefficients()) {
        if (!out.empty()) out += ' ';
        out += c.fraction_string();
      }
      return out;
    }
  }
  return {};
}

Polynomial parse_coefficients(const std::vector<std::string>& coeffs) {
  std::vector<Rational> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) values.push_back(Rational::parse(c));
  return Polynomial(std::move(values));
}

bool DegreeReport::passed() const {
  if (!poly || !failure.empty()) return false;
  for (const auto& [m, res] : methods) {
    if (!res.agrees) return false;
  }
  return oracle_match && degree_ok && leading_ok && constant_ok;
}

bool VerifyReport::passed() const {
  for (const auto& d : degrees) {
    if (!d.passed()) return false;
  }
  return !degrees.empty();
}

VerifyReport run_verify(unsigned dmax, unsigned nmax) {
  VerifyReport report;
  report.dmax = dmax;
  report.nmax = nmax;
  std::vector<std::future<DegreeReport>> jobs;
  jobs.reserve(dmax + 1);
  for (unsigned d = 0; d <= dmax; ++d) {
    jobs.push_back(std::async(std::launch::async, verify_degree, d, nmax));
  }
  for (auto& job : jobs) report.degrees.push_back(job.get());
  return report;
}

std::string render_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "d    lhopital  matrix  stirling  euler-maclaurin  oracle  shape  polynomial\n";
  for (const auto& rep : report.degrees) {
    auto method_flag = [&](Method m) { return flag(rep.methods.at(m).agrees); };
    char line[128];
    std::snprintf(line, sizeof line, "%-4u %-9s %-7s %-9s %-16s %-7s %-6s ", rep.d, method_flag(Method::lhopital),
                  method_flag(Method::matrix), method_flag(Method::stirling), method_flag(Method::euler_maclaurin),
                  flag(rep.oracle_match), flag(rep.degree_ok && rep.leading_ok && rep.constant_ok));
    os << line << (rep.poly ? format_polynomial(*rep.poly, Format::plain) : "-") << "\n";
    for (const auto& [m, res] : rep.methods) {
      if (!res.error.empty()) os << "     " << method_name(m) << " error: " << res.error << "\n";
    }
    if (!rep.failure.empty()) os << "     " << rep.failure << "\n";
  }
  os << "verify: " << (report.passed() ? "PASS" : "FAIL") << " (d = 0.." << report.dmax << ", n = 0.."
     << report.nmax << ")\n";
  return os.str();
}

std::string render_json(const VerifyReport& report) {
  ordered_json root;
  root["dmax"] = report.dmax;
  root["nmax"] = report.nmax;
  root["passed"] = report.passed();
  ordered_json degrees = ordered_json::array();
  for (const auto& rep : report.degrees) {
    ordered_json j;
    j["d"] = rep.d;
    j["passed"] = rep.passed();
    j["polynomial"] = rep.poly ? polynomial_json(*rep.poly) : ordered_json(nullptr);
    ordered_json methods;
    for (const auto& [m, res] : rep.methods) {
      ordered_json mj;
      mj["agrees"] = res.agrees;
      mj["micros"] = res.micros;
      mj["error"] = res.error.empty() ? ordered_json(nullptr) : ordered_json(res.error);
      methods[std::string(method_name(m))] = std::move(mj);
    }
    j["methods"] = std::move(methods);
    j["oracle_match"] = rep.oracle_match;
    j["shape"] = {{"degree", rep.degree_ok}, {"leading_coefficient", rep.leading_ok}, {"constant_term", rep.constant_ok}};
    degrees.push_back(std::move(j));
  }
  root["degrees"] = std::move(degrees);
  return root.dump(2) + "\n";
}

std::string run_bench(unsigned dmax, bool json) {
  ordered_json records = ordered_json::array();
  std::ostringstream os;
  os << "d    lhopital(us)  matrix(us)  stirling(us)  euler-maclaurin(us)\n";
  for (unsigned d = 0; d <= dmax; ++d) {
    char line[128];
    long long t[4] = {};
    for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
      const auto start = std::chrono::steady_clock::now();
      const Polynomial p = power_sum(d, kAllMethods[i]);
      t[i] = micros_since(start);
      records.push_back({{"d", d}, {"method", method_name(kAllMethods[i])}, {"micros", t[i]}});
    }
    std::snprintf(line, sizeof line, "%-4u %-13lld %-11lld %-13lld %lld\n", d, t[0], t[1], t[2], t[3]);
    os << line;
  }
  return json ? records.dump(2) + "\n" : os.str();
}

int execute(const Command& cmd, std::string& out, std::string& err) {
  try {
    return std::visit(
        overloaded{
            [&](const PowerSumCmd& c) {
              const auto d = to_native<unsigned>(c.d, "d");
              Polynomial p;
              ordered_json agreement;
              if (c.method) {
                p = power_sum(d, *c.method);
              } else {
                p = power_sum(d, Method::lhopital);
                bool all_agree = true;
                for (Method m : kAllMethods) {
                  const bool ok = power_sum(d, m) == p;
                  agreement[std::string(method_name(m))] = ok;
                  all_agree = all_agree && ok;
                }
                if (!all_agree) {
                  err += "methods disagree for d = " + std::to_string(d) + ": " + agreement.dump() + "\n";
                  return 2;
                }
              }
              std::optional<Rational> value;
              if (c.eval_at) value = evaluate(p, Rational(*c.eval_at));

              if (c.format == Format::json) {
                ordered_json j;
                j["d"] = d;
                j["method"] = c.method ? method_name(*c.method) : "all";
                j["degree"] = p.is_zero() ? ordered_json(nullptr) : ordered_json(p.degree());
                j["coefficients"] = coefficients_json(p);
                if (!c.method) j["agreement"] = agreement;
                if (value) j["eval"] = {{"n", c.eval_at->str()}, {"value", value->fraction_string()}};
                out += j.dump() + "\n";
                return 0;
              }
              out += format_polynomial(p, c.format) + "\n";
              if (!c.method) {
                out += "methods agree:";
                for (Method m : kAllMethods) out += " " + std::string(method_name(m));
                out += "\n";
              }
              if (value) out += "p_" + std::to_string(d) + "(" + c.eval_at->str() + ") = " + value->to_string() + "\n";
              return 0;
            },
            [&](const FallingSumCmd& c) {
              const auto k = to_native<unsigned>(c.k, "k");
              const Polynomial p = falling_power_sum_poly(k);
              std::optional<Rational> value;
              if (c.eval_at) value = evaluate(p, Rational(*c.eval_at));
              if (c.format == Format::json) {
                ordered_json j;
                j["k"] = k;
                j["degree"] = p.degree();
                j["coefficients"] = coefficients_json(p);
                if (value) j["eval"] = {{"n", c.eval_at->str()}, {"value", value->fraction_string()}};
                out += j.dump() + "\n";
                return 0;
              }
              out += format_polynomial(p, c.format) + "\n";
              if (value) out += "q_" + std::to_string(k) + "(" + c.eval_at->str() + ") = " + value->to_string() + "\n";
              return 0;
            },
            [&](const FibCmd& c) {
              const auto n = to_native<std::uint64_t>(c.n, "n");
              out += (c.method == FibMethod::binet ? fib_binet(n) : fib_doubling(n)).str() + "\n";
              return 0;
            },
            [&](const GeomCmd& c) {
              out += geometric_sum(c.a0, c.r, to_native<std::uint64_t>(c.n, "n")).to_string() + "\n";
              return 0;
            },
            [&](const VerifyCmd& c) {
              const VerifyReport report =
                  run_verify(to_native<unsigned>(c.dmax, "--dmax"), to_native<unsigned>(c.nmax, "--nmax"));
              out += c.json ? render_json(report) : render_text(report);
              if (!report.passed()) err += "verification failed\n";
              return report.exit_code();
            },
            [&](const BenchCmd& c) {
              out += run_bench(to_native<unsigned>(c.dmax, "--dmax"), c.json);
              return 0;
            },
            [&](const HelpCmd&) {
              out += usage();
              return 0;
            },
        },
        cmd);
  } catch (const UsageError& e) {
    err += std::string("error: ") + e.what() + "\n";
    return 1;
  } catch (const std::exception& e) {
    err += std::string("internal error: ") + e.what() + "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const UsageError& e) {
    err += std::string("error: ") + e.what() + "\n\n" + usage();
    return 1;
  }
  return execute(cmd, out, err);
}

}  // namespace powersum::cli
