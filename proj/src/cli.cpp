#include "hanoigram/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hanoigram/constructions.hpp"

namespace hanoigram::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kEnumerateCap = 4;
constexpr std::size_t kTraceCap = 6;

enum class Format { Text, Json };

struct Options {
  std::size_t n = 0;
  std::string engine = "grammar";
  std::string format = "text";
  bool stream = false;
  bool unsafe_no_cap = false;
  std::size_t bound = 0;
  std::size_t limit = 0;
  std::string input = "-";
};

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

json moves_json(const std::vector<MoveSymbol>& moves) {
  json arr = json::array();
  for (const auto& m : moves) arr.push_back(to_string(m));
  return arr;
}

/// Throws for the caller's usage path.
struct UsageError : Error {
  using Error::Error;
};

void require_cap(const Options& o, std::size_t cap, const char* what) {
  if (!o.unsafe_no_cap && o.n > cap) {
    throw UsageError(std::string(what) + " is limited to --n <= " + std::to_string(cap) +
                     " (pass --unsafe-no-cap to override)");
  }
}

int cmd_solve(const Options& o, Format fmt, std::ostream& out) {
  const Engine engine = *parse_engine(o.engine);
  SequenceValidator validator(o.n);
  std::vector<MoveSymbol> moves;
  const auto t0 = Clock::now();
  std::size_t count = 0;

  if (o.stream && fmt == Format::Text) {
    count = solve_streaming(
        engine, o.n,
        [&](const MoveSymbol& m) {
          validator.feed(m);
          out << to_string(m) << '\n';
        },
        !o.unsafe_no_cap);
  } else if (o.stream) {
    count = solve_streaming(
        engine, o.n,
        [&](const MoveSymbol& m) {
          validator.feed(m);
          moves.push_back(m);
        },
        !o.unsafe_no_cap);
  } else {
    moves = solve(engine, o.n, !o.unsafe_no_cap);
    for (const auto& m : moves) validator.feed(m);
    count = moves.size();
  }
  const double ms = elapsed_ms(t0);
  const auto report = validator.report();
  const bool verified = report.legal && report.final_solved;

  if (fmt == Format::Json) {
    out << json{{"engine", o.engine},    {"n_discs", o.n},         {"moves", moves_json(moves)},
                {"move_count", count},   {"elapsed_ms", ms},       {"verified", verified}}
               .dump()
        << '\n';
  } else {
    if (!o.stream) out << format_moves(moves) << '\n';
    out << "# engine=" << o.engine << " n_discs=" << o.n << " move_count=" << count
        << " elapsed_ms=" << format_ms(ms) << " verified=" << (verified ? "true" : "false")
        << '\n';
  }
  return verified ? kSuccess : kSemanticFailure;
}

int cmd_verify(const Options& o, Format fmt, std::istream& in, std::ostream& out) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot open " + o.input);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  const auto moves = parse_moves(text);
  const auto report = validate_sequence(o.n, moves);

  if (fmt == Format::Json) {
    json j{{"n_discs", o.n},
           {"legal", report.legal},
           {"final_solved", report.final_solved},
           {"failing_index", nullptr},
           {"failure", nullptr},
           {"moves_checked", report.moves_checked}};
    if (report.failing_index) j["failing_index"] = *report.failing_index;
    if (report.failure) j["failure"] = std::string(to_string(*report.failure));
    out << j.dump() << '\n';
  } else {
    out << "legal: " << (report.legal ? "true" : "false") << '\n'
        << "final_solved: " << (report.final_solved ? "true" : "false") << '\n'
        << "moves_checked: " << report.moves_checked << '\n';
    if (report.failing_index) {
      out << "failing_index: " << *report.failing_index << '\n'
          << "failure: " << to_string(*report.failure) << '\n';
    }
  }
  return report.legal && report.final_solved ? kSuccess : kSemanticFailure;
}

int cmd_compare(const Options& o, Format fmt, std::ostream& out) {
  struct Leg {
    Engine engine;
    std::vector<MoveSymbol> moves;
    double ms = 0;
  };
  std::vector<Leg> legs;
  std::vector<std::string> skipped;
  for (Engine e : {Engine::Grammar, Engine::Pda, Engine::Recursive, Engine::Bfs}) {
    if (e == Engine::Bfs && o.n > kBfsDiscCap && !o.unsafe_no_cap) {
      skipped.emplace_back(to_string(e));
      continue;
    }
    const auto t0 = Clock::now();
    auto moves = solve(e, o.n, !o.unsafe_no_cap);
    legs.push_back({e, std::move(moves), elapsed_ms(t0)});
  }

  const auto& reference = legs.front().moves;
  std::optional<std::pair<std::string, std::size_t>> divergence;
  for (const auto& leg : legs) {
    if (leg.moves == reference) continue;
    auto [a, b] = std::mismatch(reference.begin(), reference.end(), leg.moves.begin(),
                                leg.moves.end());
    divergence = {std::string(to_string(leg.engine)),
                  static_cast<std::size_t>(a - reference.begin())};
    break;
  }

  if (fmt == Format::Json) {
    json engines = json::array();
    for (const auto& leg : legs) {
      engines.push_back({{"engine", to_string(leg.engine)},
                         {"move_count", leg.moves.size()},
                         {"elapsed_ms", leg.ms}});
    }
    json j{{"n_discs", o.n},
           {"agreement", !divergence},
           {"length", reference.size()},
           {"engines", engines},
           {"skipped", skipped},
           {"first_difference", nullptr}};
    if (divergence) {
      j["first_difference"] = {{"engine", divergence->first}, {"index", divergence->second}};
    }
    out << j.dump() << '\n';
  } else {
    for (const auto& leg : legs) {
      out << std::left << std::setw(10) << to_string(leg.engine) << " length=" << leg.moves.size()
          << " elapsed_ms=" << format_ms(leg.ms) << '\n';
    }
    for (const auto& s : skipped) {
      out << std::left << std::setw(10) << s << " skipped (n > " << kBfsDiscCap << ")\n";
    }
    if (divergence) {
      out << "divergence: " << divergence->first << " differs from grammar at index "
          << divergence->second << '\n';
    } else {
      out << "agreement: true length=" << reference.size() << '\n';
    }
  }
  return divergence ? kSemanticFailure : kSuccess;
}

int cmd_enumerate(const Options& o, Format fmt, std::ostream& out) {
  require_cap(o, kEnumerateCap, "enumerate");
  const std::size_t bound = o.bound != 0 ? o.bound : default_derivation_limit(o.n) / 2;
  const auto language = cfg::enumerate_language(build_hanoi_grammar(o.n), bound);

  if (fmt == Format::Json) {
    json words = json::array();
    for (const auto& w : language) words.push_back(format_moves(w));
    out << json{{"n_discs", o.n}, {"bound", bound}, {"words", words},
                {"cardinality", language.size()}}
               .dump()
        << '\n';
  } else {
    for (const auto& w : language) out << format_moves(w) << '\n';
    out << "cardinality: " << language.size() << '\n';
  }
  return kSuccess;
}

std::string join_form(const HanoiGrammar::SententialForm& form) {
  std::string s;
  for (const auto& sym : form) {
    if (!s.empty()) s += ' ';
    s += std::visit([](const auto& v) { return to_string(v); }, sym);
  }
  return s.empty() ? "ε" : s;
}

json form_json(const HanoiGrammar::SententialForm& form) {
  json arr = json::array();
  for (const auto& sym : form) arr.push_back(std::visit([](const auto& v) { return to_string(v); }, sym));
  return arr;
}

int trace_grammar(const Options& o, Format fmt, std::ostream& out) {
  const auto grammar = build_hanoi_grammar(o.n);
  const std::size_t limit = o.limit != 0 ? o.limit : default_derivation_limit(o.n);
  std::vector<HanoiGrammar::SententialForm> forms{{HanoiGrammar::Symbol{grammar.start()}}};
  while (auto next = cfg::derive_step(grammar, forms.back())) {
    if (forms.size() > limit) {
      throw StepLimitExceeded("derivation did not terminate within the step limit");
    }
    forms.push_back(std::move(*next));
  }

  if (fmt == Format::Json) {
    json steps = json::array();
    for (std::size_t i = 0; i < forms.size(); ++i) {
      steps.push_back({{"step", i}, {"form", form_json(forms[i])}});
    }
    out << json{{"engine", "grammar"}, {"n_discs", o.n}, {"trace", steps}}.dump() << '\n';
  } else {
    for (std::size_t i = 1; i < forms.size(); ++i) {
      out << join_form(forms[i - 1]) << " ⊢ " << join_form(forms[i]) << '\n';
    }
  }
  return kSuccess;
}

int trace_pda(const Options& o, Format fmt, std::ostream& out) {
  const auto pda = build_hanoi_pda(o.n);
  const std::size_t limit = o.limit != 0 ? o.limit : default_run_limit(o.n);
  pda::Runner<HanoiPda> runner(pda, {});
  std::vector<pda::Configuration<HanoiPda>> configs{runner.configuration()};
  while (!runner.halted()) {
    if (configs.size() > limit) {
      throw StepLimitExceeded("automaton did not empty its stack within the step limit");
    }
    if (!runner.advance([](const auto&) {})) throw Error("automaton got stuck");
    configs.push_back(runner.configuration());
  }

  if (fmt == Format::Json) {
    json steps = json::array();
    for (std::size_t i = 0; i < configs.size(); ++i) {
      json stack = json::array();
      for (const auto& s : configs[i].stack) stack.push_back(to_string(s));
      steps.push_back({{"step", i}, {"state", configs[i].state}, {"stack", stack}});
    }
    out << json{{"engine", "pda"}, {"n_discs", o.n}, {"trace", steps}}.dump() << '\n';
  } else {
    for (const auto& c : configs) {
      std::string stack;
      for (const auto& s : c.stack) {
        if (!stack.empty()) stack += ' ';
        stack += to_string(s);
      }
      out << "⟨" << c.state << ", ε, " << (stack.empty() ? "ε" : stack) << "⟩\n";
    }
  }
  return kSuccess;
}

int cmd_trace(const Options& o, Format fmt, std::ostream& out) {
  require_cap(o, kTraceCap, "trace");
  if (o.engine == "grammar") return trace_grammar(o, fmt, out);
  if (o.engine == "pda") return trace_pda(o, fmt, out);
  throw UsageError("trace supports --engine grammar or pda");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Towers of Hanoi as a context-free grammar and a pushdown automaton"};
  app.name("hanoigram");
  app.require_subcommand(1);

  Options o;
  const CLI::Validator kAtLeastOne(
      [](std::string& v) -> std::string {
        return v.find_first_not_of("0123456789") == std::string::npos &&
                       v.find_first_not_of('0') != std::string::npos
                   ? std::string{}
                   : "must be a positive integer, got " + v;
      },
      "POSITIVE");
  const std::vector<std::string> engines{"grammar", "pda", "recursive", "bfs"};
  const std::vector<std::string> formats{"text", "json"};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Number of discs")->required()->check(kAtLeastOne);
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* solve_cmd = app.add_subcommand("solve", "Print the move sequence produced by an engine");
  add_common(solve_cmd);
  solve_cmd->add_option("--engine", o.engine, "grammar|pda|recursive|bfs")
      ->check(CLI::IsMember(engines));
  solve_cmd->add_flag("--stream", o.stream, "Emit moves as they are produced");
  solve_cmd->add_flag("--unsafe-no-cap", o.unsafe_no_cap, "Lift size caps");

  auto* verify_cmd = app.add_subcommand("verify", "Replay a move sequence and check it");
  add_common(verify_cmd);
  verify_cmd->add_option("input,--input", o.input, "Move file, or - for stdin");

  auto* compare_cmd = app.add_subcommand("compare", "Check that all engines agree");
  add_common(compare_cmd);
  compare_cmd->add_flag("--unsafe-no-cap", o.unsafe_no_cap, "Lift size caps");

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List the grammar's language up to a derivation bound");
  add_common(enumerate_cmd);
  enumerate_cmd->add_option("--bound", o.bound, "Maximum derivation length")
      ->check(kAtLeastOne);
  enumerate_cmd->add_flag("--unsafe-no-cap", o.unsafe_no_cap, "Lift size caps");

  auto* trace_cmd = app.add_subcommand("trace", "Show each derivation step or configuration");
  add_common(trace_cmd);
  trace_cmd->add_option("--engine", o.engine, "grammar|pda")
      ->check(CLI::IsMember(std::vector<std::string>{"grammar", "pda"}));
  trace_cmd->add_option("--limit", o.limit, "Step limit")->check(kAtLeastOne);
  trace_cmd->add_flag("--unsafe-no-cap", o.unsafe_no_cap, "Lift size caps");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const Format fmt = o.format == "json" ? Format::Json : Format::Text;
  try {
    if (solve_cmd->parsed()) return cmd_solve(o, fmt, out);
    if (verify_cmd->parsed()) return cmd_verify(o, fmt, in, out);
    if (compare_cmd->parsed()) return cmd_compare(o, fmt, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, fmt, out);
    if (trace_cmd->parsed()) return cmd_trace(o, fmt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "engine failure: " << e.what() << '\n';
    return kEngineFailure;
  }
  return kUsage;
}

}  // namespace hanoigram::cli
