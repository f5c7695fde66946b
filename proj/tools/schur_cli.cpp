// schur: command-line front end for the affine Schur algebra library.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 domain error,
// 4 property or oracle failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schur/schur.hpp"

namespace {

using namespace schur;

constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kDomain = 3;
constexpr int kFailure = 4;

struct CliConfig {
  std::int64_t n = 2;
  std::int64_t r = 2;
  std::string field = "rational";
  std::uint64_t seed = 0;
  std::size_t cases = 500;
  std::optional<std::int64_t> bound;  // defaults to 3n
  std::string output = "text";
  bool json() const { return output == "json"; }
};

/// Reads stdin once for the first "-" argument.
std::string resolve_input(const std::string& arg) {
  static std::optional<std::string> stdin_text;
  if (arg != "-") return arg;
  if (!stdin_text) {
    stdin_text = std::string(std::istreambuf_iterator<char>(std::cin), {});
    while (!stdin_text->empty() && (stdin_text->back() == '\n' || stdin_text->back() == '\r')) {
      stdin_text->pop_back();
    }
  }
  return *stdin_text;
}

Tuple parse_tuple(const std::string& text) {
  Tuple out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("malformed integer '" + item + "'", pos);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

AlgebraContext context_of(const CliConfig& cfg) {
  return AlgebraContext(cfg.n, cfg.r, parse_field(cfg.field));
}

Json symbol_json(const BasisSymbol& x) {
  Json j = Json::object();
  j["top"] = x.top();
  j["bottom"] = x.bottom();
  return j;
}

void print(const CliConfig& cfg, const AlgebraElement& e) {
  std::cout << (cfg.json() ? to_json(e).dump() : format_element(e)) << "\n";
}

int cmd_mul(const CliConfig& cfg, const std::string& a, const std::string& b, bool oracle) {
  const AlgebraContext ctx = context_of(cfg);
  const AlgebraElement x = parse_element(resolve_input(a), ctx);
  const AlgebraElement y = parse_element(resolve_input(b), ctx);
  const AlgebraElement product = x * y;
  print(cfg, product);
  if (oracle) {
    AlgebraElement check(ctx);
    for (const auto& [s, cs] : x.terms()) {
      for (const auto& [t, ct] : y.terms()) {
        AlgebraElement term = multiply_oracle(s, t, ctx);
        term *= cs * ct;
        check += term;
      }
    }
    if (check != product) {
      std::cerr << "oracle mismatch: counting gives " << format_element(check) << "\n";
      return kFailure;
    }
  }
  return 0;
}

int cmd_canon(const CliConfig& cfg, const std::string& a, const std::string& b) {
  const AlgebraContext ctx = context_of(cfg);
  const Tuple top = parse_tuple(resolve_input(a));
  const Tuple bottom = parse_tuple(resolve_input(b));
  if (top.size() != ctx.rank() || bottom.size() != ctx.rank()) {
    throw DomainError("tuples must have length r = " + std::to_string(ctx.r()));
  }
  const CanonicalPair c = canonicalize_pair(top, bottom, ctx);
  if (cfg.json()) {
    Json j = symbol_json(c.symbol);
    j["witness"] = {{"sigma", c.witness.sigma.one_based()}, {"shift", c.witness.shift}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << format_symbol(c.symbol) << "\n";
  }
  return 0;
}

int cmd_center(const CliConfig& cfg, const std::string& eps) {
  print(cfg, center_element(parse_tuple(eps), context_of(cfg)));
  return 0;
}

int cmd_nf(const CliConfig& cfg, const std::string& expr) {
  const AlgebraContext ctx = context_of(cfg);
  const LaurentPoly p = laurent_normal_form(parse_element(resolve_input(expr), ctx));
  std::cout << (cfg.json() ? laurent_to_json(p).dump() : format_laurent(p)) << "\n";
  return 0;
}

int cmd_rewrite(const CliConfig& cfg, const std::string& expr) {
  const AlgebraContext ctx = context_of(cfg);
  const AlgebraElement e = parse_element(resolve_input(expr), ctx);
  if (e.size() != 1 || !e.terms().begin()->second.is_one()) {
    throw DomainError("rewrite expects a single basis symbol");
  }
  const BasisSymbol x = e.terms().begin()->first;
  const auto terms = fg_rewrite(x, ctx);
  if (cfg.json()) {
    Json j = Json::object();
    j["n"] = ctx.n();
    j["r"] = ctx.r();
    j["field"] = field_to_json(ctx.field());
    j["symbol"] = symbol_json(x);
    Json list = Json::array();
    for (const auto& t : terms) {
      Json item = Json::object();
      item["diag_shift"] = t.diag_shift;
      item["coeff"] = t.coeff.to_string();
      item["generator"] = symbol_json(t.generator);
      list.push_back(std::move(item));
    }
    j["terms"] = std::move(list);
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& t : terms) {
      std::cout << t.coeff.to_string() << " * " << format_symbol(diagonal_symbol(x.top(), t.diag_shift, ctx))
                << " * " << format_symbol(t.generator) << "\n";
    }
  }
  return 0;
}

int cmd_one(const CliConfig& cfg) {
  print(cfg, one(context_of(cfg)));
  return 0;
}

int cmd_suite(const CliConfig& cfg, const std::string& name) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    std::cerr << "error: unknown suite '" << name << "'\n";
    return kUsage;
  }
  SuiteConfig sc;
  sc.n = cfg.n;
  sc.r = static_cast<std::size_t>(cfg.r);
  sc.field = parse_field(cfg.field);
  sc.seed = cfg.seed;
  sc.cases = cfg.cases;
  sc.bound = cfg.bound.value_or(3 * cfg.n);
  context_of(cfg);  // validates n and r before running
  const SuiteReport report = run_suite(name, sc);
  if (cfg.json()) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << format_report(report);
  }
  return report.ok() ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the affine Schur algebra S(n,r)"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::int64_t bound = 0;
  app.add_option("--n", cfg.n, "number of values n")->capture_default_str();
  app.add_option("--r", cfg.r, "tuple length r")->capture_default_str();
  app.add_option("--field", cfg.field, "rational or gf:p")->capture_default_str();
  app.add_option("--seed", cfg.seed, "suite seed")->capture_default_str();
  app.add_option("--cases", cfg.cases, "suite cases per check")->check(CLI::PositiveNumber)->capture_default_str();
  auto* bound_opt = app.add_option("--bound", bound, "entry bound for random bottoms (default 3n)")
                        ->check(CLI::NonNegativeNumber);
  app.add_option("--output", cfg.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string a, b, expr, eps, suite;
  bool oracle = false;

  auto* mul = app.add_subcommand("mul", "multiply two elements");
  mul->add_option("a", a, "left factor, or - for stdin")->required();
  mul->add_option("b", b, "right factor, or - for stdin")->required();
  mul->add_flag("--oracle", oracle, "cross-check against the counting oracle");

  auto* canon = app.add_subcommand("canon", "canonical symbol of a pair of tuples");
  canon->add_option("top", a, "comma-separated tuple")->required();
  canon->add_option("bottom", b, "comma-separated tuple")->required();

  auto* center = app.add_subcommand("center", "central element c_eps");
  center->add_option("--eps", eps, "comma-separated shift")->required();

  auto* nf = app.add_subcommand("nf", "Laurent normal form of an element of the 1...1 corner");
  nf->add_option("expr", expr, "element, or - for stdin")->required();

  auto* rewrite = app.add_subcommand("rewrite", "rewrite a symbol over B_i in finitely many generators");
  rewrite->add_option("symbol", expr, "basis symbol, or - for stdin")->required();

  auto* unit = app.add_subcommand("one", "the identity element");

  auto* suite_cmd = app.add_subcommand("suite", "run a property suite");
  suite_cmd->add_option("name", suite, "associativity | oracle | center | laurent | schur-weyl | rewrite | cosets | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (bound_opt->count() > 0) cfg.bound = bound;

  try {
    if (*mul) return cmd_mul(cfg, a, b, oracle);
    if (*canon) return cmd_canon(cfg, a, b);
    if (*center) return cmd_center(cfg, eps);
    if (*nf) return cmd_nf(cfg, expr);
    if (*rewrite) return cmd_rewrite(cfg, expr);
    if (*unit) return cmd_one(cfg);
    if (*suite_cmd) return cmd_suite(cfg, suite);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const Error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
