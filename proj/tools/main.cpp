// Command-line driver: parse an arithmetic expression over x, differentiate
// it with a chosen engine (possibly iterated), evaluate at a point, emit the
// symbolic derivative, cross-check all engines against each other, print a
// backward trace, or run the scripted effects dialogue.
//
// Exit codes: 0 success; 1 malformed input (expression or usage); 2 a
// cross-check comparison failed; 3 an internal contract violation.

#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tad/effects.hpp"
#include "tad/errors.hpp"
#include "tad/expr.hpp"
#include "tad/forward_diff.hpp"
#include "tad/handler_diff.hpp"
#include "tad/parse.hpp"
#include "tad/semiring.hpp"
#include "tad/symbolic.hpp"
#include "tad/tape_diff.hpp"
#include "tad/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitContractViolation = 3;

tad::Expression apply_diff(const std::string& backend, tad::Expression e,
                           unsigned order) {
  for (unsigned i = 0; i < order; ++i) {
    if (backend == "forward") {
      e = tad::ad::diff_forward(e);
    } else if (backend == "tape") {
      e = tad::ad::diff_tape(e);
    } else {
      e = tad::ad::diff_handler(e);
    }
  }
  return e;
}

tad::SymPtr symbolic_diff(tad::SymPtr tree, unsigned order) {
  for (unsigned i = 0; i < order; ++i) {
    tree = tad::derivative(tree);
  }
  return tree;
}

double value_at(const std::string& backend, const tad::SymPtr& tree,
                unsigned order, double at) {
  const tad::SemiringOps reals = tad::semiring::reals();
  if (backend == "symbolic") {
    tad::Env env(reals.zero);
    env.bind(tad::VarId::input(), tad::Value::of(at));
    return tad::eval_env(symbolic_diff(tree, order), reals, env)
        .as<double>();
  }
  return apply_diff(backend, tad::from_ast(tree), order)
      .evaluate(reals, tad::Value::of(at))
      .as<double>();
}

int run_check(const tad::SymPtr& tree, unsigned order, double at) {
  const tad::SemiringOps reals = tad::semiring::reals();
  const std::vector<std::string> backends = {"forward", "tape", "handler",
                                             "symbolic"};
  std::vector<double> results;
  results.reserve(backends.size());
  for (const std::string& b : backends) {
    results.push_back(value_at(b, tree, order, at));
  }

  bool all_pass = true;
  for (std::size_t i = 0; i < backends.size(); ++i) {
    for (std::size_t j = i + 1; j < backends.size(); ++j) {
      const bool ok = reals.equiv(tad::Value::of(results[i]),
                                  tad::Value::of(results[j]));
      all_pass = all_pass && ok;
      std::cout << backends[i] << " vs " << backends[j] << ": "
                << (ok ? "PASS" : "FAIL") << "\n";
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_trace(const std::string& backend, const tad::SymPtr& tree,
              unsigned order, double at) {
  if (backend != "tape" && backend != "handler") {
    std::cerr << "--trace requires --backend tape or handler\n";
    return kExitBadInput;
  }
  if (order == 0) {
    std::cerr << "--trace requires --order of at least 1\n";
    return kExitBadInput;
  }
  const tad::SemiringOps reals = tad::semiring::reals();
  // Differentiate order-1 times, then trace the final differentiation.
  const tad::Expression inner =
      apply_diff(backend, tad::from_ast(tree), order - 1);
  const tad::ad::BackwardTrace trace =
      backend == "tape"
          ? tad::ad::backward_trace(inner, reals, tad::Value::of(at))
          : tad::ad::handler_backward_trace(inner, reals,
                                            tad::Value::of(at));
  for (const std::string& line :
       tad::ad::trace_lines(trace, tad::ad::show_real)) {
    std::cout << line << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "differentiate expressions over x (grammar: +, *, ^natural, natural "
      "literals, parentheses) with interchangeable engines"};

  std::string backend = "handler";
  app.add_option("--backend", backend,
                 "differentiation engine: forward, tape, handler, symbolic")
      ->check(CLI::IsMember({"forward", "tape", "handler", "symbolic"}));
  std::optional<double> at;
  app.add_option("--at", at, "evaluation point (decimal)");
  unsigned order = 1;
  app.add_option("--order", order, "how many times to differentiate");
  bool emit_symbolic = false;
  app.add_flag("--emit-symbolic", emit_symbolic,
               "print the derivative as a fully parenthesized expression");
  bool check = false;
  app.add_flag("--check", check,
               "run every engine plus the symbolic oracle and compare all "
               "pairs");
  bool trace = false;
  app.add_flag("--trace", trace,
               "print the backward pass of the final differentiation, one "
               "snapshot per line");
  bool demo_ask = false;
  app.add_flag("--demo-ask", demo_ask,
               "run the scripted effect-handler dialogue and print its five "
               "lines");
  std::string source;
  app.add_option("expression", source, "expression text, e.g. \"(x+1)^3\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (demo_ask) {
      for (const std::string& line : tad::effects::ask_demo()) {
        std::cout << line << "\n";
      }
      return kExitOk;
    }

    if (source.empty()) {
      std::cerr << "an expression is required\n";
      return kExitBadInput;
    }
    const tad::SymPtr tree = tad::parse_expression(source);

    if (emit_symbolic) {
      // The canonical (purely syntactic) derivative of the parsed tree; the
      // engines agree with it up to provable equality, so symbolic emission
      // is engine-independent.
      std::cout << tad::render(symbolic_diff(tree, order)) << "\n";
      return kExitOk;
    }

    if (!at.has_value()) {
      std::cerr << "--at is required unless --emit-symbolic or --demo-ask "
                   "is given\n";
      return kExitBadInput;
    }
    if (check) {
      return run_check(tree, order, *at);
    }
    if (trace) {
      return run_trace(backend, tree, order, *at);
    }

    std::cout << tad::ad::show_real(
                     tad::Value::of(value_at(backend, tree, order, *at)))
              << "\n";
    return kExitOk;
  } catch (const tad::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitBadInput;
  } catch (const tad::ContractViolation& err) {
    std::cerr << "contract violation: " << err.what() << "\n";
    return kExitContractViolation;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitContractViolation;
  }
}
