// Command-line front end.
//
// Exit status: 0 success or Inconclusive, 1 failed verification suite,
// 10 NotRealizable, 11 Adams violation, 64 usage error, 65 input error,
// 70 internal error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "steenrod/error.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/obstruct.hpp"
#include "steenrod/odd_p.hpp"
#include "steenrod/parse.hpp"
#include "steenrod/report.hpp"
#include "steenrod/suites.hpp"

namespace {

using namespace steenrod;

constexpr int kExitNotRealizable = 10;
constexpr int kExitAdamsViolation = 11;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;
constexpr int kExitInternal = 70;

struct Flags {
  std::uint32_t prime = 2;
  std::optional<std::size_t> d;
  std::uint32_t alpha = 1;
  std::optional<long> bound;
  bool machine = false;
  std::uint64_t seed = suites::SuiteOptions{}.seed;
};

// Number of variables written in an element: entries of the first "(...)", or the largest xN.
std::size_t infer_rank(const std::string& text) {
  if (auto open = text.find('('); open != std::string::npos) {
    const auto close = text.find(')', open);
    const std::string inner = text.substr(open + 1, close == std::string::npos ? std::string::npos : close - open - 1);
    if (inner.find_first_not_of(" \t") == std::string::npos) return 0;
    return 1 + static_cast<std::size_t>(std::count(inner.begin(), inner.end(), ','));
  }
  std::size_t rank = 1;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == 'x') {
      std::size_t j = i + 1, v = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
      rank = std::max(rank, v);
    }
  return rank;
}

ElementContext context_for(const Flags& f, const std::string& element_text) {
  return {f.prime, f.d.value_or(infer_rank(element_text)), f.alpha};
}

void emit(const Flags& f, const std::string& text, nlohmann::json record) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << "\n";
  if (f.machine) {
    record["schema"] = kReportSchema;
    std::cout << record.dump() << "\n";
  }
}

int cmd_apply(const Flags& f, const std::string& op_text, const std::string& elem_text) {
  const OperationExpr op = parse_operation(op_text, f.prime);
  const auto ctx = context_for(f, elem_text);
  std::string result;
  if (f.prime == 2) result = to_string(evaluate(op, parse_element(elem_text, ctx)));
  else result = odd::to_string(evaluate(op, parse_odd_element(elem_text, ctx)));
  emit(f, result, {{"command", "apply"}, {"operation", to_string(op)}, {"result", result}});
  return 0;
}

int cmd_milnor_mul(const Flags& f, const std::string& a, const std::string& b) {
  if (f.prime != 2) throw InvalidInput("milnor-mul: only p=2 is supported");
  const std::string result = to_string(multiply(parse_milnor(a), parse_milnor(b)));
  emit(f, result, {{"command", "milnor-mul"}, {"result", result}});
  return 0;
}

int cmd_qts(const Flags& f, int t, int s, const std::optional<std::string>& apply_to) {
  if (t < 0 || s < 0) throw InvalidInput("qts: t and s must be non-negative");
  std::string result;
  if (apply_to) {
    const auto ctx = context_for(f, *apply_to);
    if (f.prime == 2) result = to_string(qts_apply(t, s, parse_element(*apply_to, ctx)));
    else result = odd::to_string(odd::qts_apply_odd(t, s, parse_odd_element(*apply_to, ctx)));
  } else {
    if (f.prime != 2) throw InvalidInput("qts --milnor: only p=2 is supported");
    result = to_string(qts_milnor(t, s));
  }
  emit(f, result, {{"command", "qts"}, {"t", t}, {"s", s}, {"result", result}});
  return 0;
}

AnyModule load_module(const Flags& f, const std::string& path) {
  AnyModule mod = parse_module(read_file(path), {f.prime, f.d.value_or(1), f.alpha});
  if (f.bound) std::visit([&](auto& m) { m.degree_bound = *f.bound; m.validate(); }, mod);
  return mod;
}

int cmd_gaps(const Flags& f, const std::string& path) {
  const AnyModule mod = load_module(f, path);
  const GapReport r = std::visit([](const auto& m) { return gap_scan(m); }, mod);
  nlohmann::json rec = to_json(r);
  rec["command"] = "gaps";
  emit(f, describe(r), rec);
  return 0;
}

int cmd_check(const Flags& f, const std::string& path) {
  const AnyModule mod = load_module(f, path);
  const Verdict v = std::visit([](const auto& m) { return m.prime == 2 ? verdict(m) : verdict_odd(m); }, mod);
  nlohmann::json rec = to_json(v);
  rec["command"] = "check";
  emit(f, describe(v), rec);
  return v.outcome == Outcome::NotRealizable ? kExitNotRealizable : 0;
}

int cmd_adams(const Flags& f, const std::string& path) {
  const FiniteModuleTable t = parse_table(read_file(path), f.prime);
  const auto violations = t.prime == 2 ? adams_check(t) : adams_check_odd(t);
  emit(f, describe(violations), {{"command", "adams"}, {"violations", to_json(violations)}});
  return violations.empty() ? 0 : kExitAdamsViolation;
}

int cmd_verify_suite(const Flags& f, const std::string& name) {
  suites::SuiteOptions opts;
  opts.seed = f.seed;
  for (const auto& [suite_name, fn] : suites::registry()) {
    if (suite_name != name) continue;
    const auto r = fn(opts);
    std::string text = name + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures) +
                       " failures\n";
    for (const auto& n : r.notes) text += "  " + n + "\n";
    emit(f, text, {{"command", "verify-suite"}, {"suite", name}, {"cases", r.cases}, {"failures", r.failures},
                   {"notes", r.notes}, {"seed", f.seed}});
    return r.passed() ? 0 : 1;
  }
  std::string known;
  for (const auto& [suite_name, fn] : suites::registry()) known += " " + suite_name;
  throw InvalidInput("unknown suite '" + name + "'; known:" + known);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Steenrod algebra computations and non-realizability checks.\n"
      "Operations: Sq^n Q[t] Q[t;s] Sq0^s (p=2), P^n beta P0^s Q[t] Q[t;s] (odd p).\n"
      "Juxtaposition composes right to left and binds tighter than +."};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  std::size_t d_flag = 0;
  long bound_flag = 0;
  app.add_option("--prime", flags.prime, "Prime (default 2)")->check(CLI::PositiveNumber);
  auto* d_opt = app.add_option("--d", d_flag, "Number of variables (default: from the input)");
  app.add_option("--alpha", flags.alpha, "Number of summands (default 1)")->check(CLI::PositiveNumber);
  auto* bound_opt = app.add_option("--bound", bound_flag, "Override the module degree bound");
  app.add_flag("--machine", flags.machine, "Also print a JSON record");
  app.add_option("--seed", flags.seed, "Seed for randomized suites");

  std::string op_text, elem_text, a_text, b_text, path, suite;
  int t = 0, s = 0;
  std::string apply_to;
  bool milnor_flag = false;

  auto* apply = app.add_subcommand("apply", "Apply an operation expression to an element");
  apply->add_option("op", op_text)->required();
  apply->add_option("element", elem_text)->required();
  auto* mul = app.add_subcommand("milnor-mul", "Multiply two Milnor-basis sums");
  mul->add_option("a", a_text)->required();
  mul->add_option("b", b_text)->required();
  auto* qts = app.add_subcommand("qts", "Q_t^s in the Milnor basis, or applied to an element");
  qts->add_option("t", t)->required();
  qts->add_option("s", s)->required();
  auto* milnor_opt = qts->add_flag("--milnor", milnor_flag, "Milnor-basis expansion (default)");
  auto* apply_opt = qts->add_option("--apply", apply_to, "Element to act on");
  milnor_opt->excludes(apply_opt);
  auto* gaps = app.add_subcommand("gaps", "Occupied degrees and gaps of a module file");
  gaps->add_option("module", path)->required();
  auto* check = app.add_subcommand("check", "Non-realizability verdict for a module file");
  check->add_option("module", path)->required();
  auto* adams = app.add_subcommand("adams", "Hopf-invariant-one test on a finite table file");
  adams->add_option("table", path)->required();
  auto* verify = app.add_subcommand("verify-suite", "Run a named verification suite");
  verify->add_option("name", suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (*d_opt) flags.d = d_flag;
  if (*bound_opt) flags.bound = bound_flag;

  try {
    if (!is_prime(flags.prime)) throw InvalidInput("--prime must be prime");
    if (*apply) return cmd_apply(flags, op_text, elem_text);
    if (*mul) return cmd_milnor_mul(flags, a_text, b_text);
    if (*qts) return cmd_qts(flags, t, s, *apply_opt ? std::optional<std::string>(apply_to) : std::nullopt);
    if (*gaps) return cmd_gaps(flags, path);
    if (*check) return cmd_check(flags, path);
    if (*adams) return cmd_adams(flags, path);
    if (*verify) return cmd_verify_suite(flags, suite);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
