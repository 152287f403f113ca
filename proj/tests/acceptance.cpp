// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hanoigram/cli.hpp"
#include "hanoigram/constructions.hpp"

using namespace hanoigram;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::size_t word_length(std::size_t n) { return (std::size_t{1} << n) - 1; }

std::string golden_word() {
  std::ifstream f(std::string(HANOIGRAM_GOLDEN_DIR) + "/n5_word.txt");
  std::string line;
  std::getline(f, line);
  return line;
}

Outcome golden_word_check() {
  Outcome o;
  const std::string expected =
      "p13 p12 p32 p13 p21 p23 p13 p12 p32 p31 p21 p32 p13 p12 p32 p13 p21 p23 p13 p21 p32 p31 "
      "p21 p23 p13 p12 p32 p13 p21 p23 p13";
  if (golden_word() != expected) o.fail("golden file does not hold the expected word");
  for (const char* engine : {"grammar", "pda", "recursive"}) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run({"solve", "--n", "5", "--engine", engine}, in, out, err);
    const std::string text = out.str();
    const std::string word = text.substr(0, text.find('\n'));
    if (code != 0) o.fail(std::string(engine) + ": exit " + std::to_string(code));
    if (word != expected) o.fail(std::string(engine) + ": word differs");
  }
  if (o.pass) o.detail = "3 engines byte-identical to the 31-move word";
  return o;
}

Outcome length_law() {
  Outcome o;
  for (std::size_t n = 1; n <= 16; ++n) {
    for (Engine e : {Engine::Grammar, Engine::Pda, Engine::Recursive, Engine::Bfs}) {
      if (e == Engine::Bfs && n > kBfsDiscCap) continue;
      const auto len = solve(e, n).size();
      if (len != word_length(n)) {
        o.fail(std::string(to_string(e)) + " N=" + std::to_string(n) + " length " +
               std::to_string(len));
      }
    }
  }
  if (o.pass) o.detail = "N=1..16 grammar/pda/recursive, N=1..10 bfs";
  return o;
}

Outcome language_cardinality() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = build_hanoi_grammar(n);
    const auto language = cfg::enumerate_language(g, word_length(n));
    if (language.size() != 1) {
      o.fail("N=" + std::to_string(n) + " cardinality " + std::to_string(language.size()));
    } else if (*language.begin() != cfg::derive_full(g, default_derivation_limit(n)).word) {
      o.fail("N=" + std::to_string(n) + " enumerated word differs from the leftmost derivation");
    }
  }
  if (o.pass) o.detail = "|L| = 1 for N=1..4 over all derivation orders";
  return o;
}

Outcome legality() {
  Outcome o;
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto report = validate_sequence(n, solve(Engine::Grammar, n));
    if (!report.legal || !report.final_solved) o.fail("N=" + std::to_string(n));
  }
  if (o.pass) o.detail = "legal and solved for N=1..16";
  return o;
}

Outcome oracle_minimality() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto bfs = bfs_optimal(n);
    const std::string at = "N=" + std::to_string(n) + ": ";
    if (bfs.moves.size() != word_length(n)) o.fail(at + "length");
    if (bfs.shortest_path_count != 1) {
      o.fail(at + std::to_string(bfs.shortest_path_count) + " shortest paths");
    }
    if (bfs.moves != solve(Engine::Grammar, n)) o.fail(at + "differs from grammar word");
  }
  if (o.pass) o.detail = "unique shortest path equals the grammar word for N=1..8";
  return o;
}

Outcome determinism() {
  Outcome o;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto m = build_hanoi_pda(n);
    const auto report = pda::is_deterministic(m);
    if (!report.deterministic) o.fail("N=" + std::to_string(n) + " not deterministic");
    if (report.epsilon_driven_pairs != m.states().size() * m.stack_alphabet().size()) {
      o.fail("N=" + std::to_string(n) + " some pair is not epsilon-driven");
    }
  }
  if (o.pass) o.detail = "every (state, stack symbol) pair epsilon-driven for N=1..12";
  return o;
}

Outcome halting() {
  Outcome o;
  // Hand-traced totals: N=2 -> 6, N=3 -> 14.
  const std::size_t hand[] = {0, 0, 6, 14};
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto trace =
        pda::run_to_empty_stack(build_hanoi_pda(n), {}, [](const auto&) {}, default_run_limit(n));
    const std::size_t expected = (std::size_t{2} << n) - 2;
    if (trace.outcome != pda::Outcome::EmptyStackHalt) o.fail("N=" + std::to_string(n) + " no halt");
    if (trace.steps != expected) {
      o.fail("N=" + std::to_string(n) + " took " + std::to_string(trace.steps) + " transitions");
    }
    if (n <= 3 && trace.steps != hand[n]) o.fail("hand trace mismatch at N=" + std::to_string(n));
  }
  if (o.pass) o.detail = "empty-stack halt after 2^(N+1)-2 transitions for N=2..12";
  return o;
}

Outcome property_suite() {
  Outcome o;
  std::mt19937_64 rng(20261016);
  std::size_t rejected = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t length = 1 + rng() % 300;
    auto state = initial_state(n);
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<MoveSymbol> legal;
      for (const auto& m : all_moves()) {
        const auto err = check_move(state, m);
        const bool empty = !state.top(m.from);
        const bool larger = !empty && state.top(m.to) && *state.top(m.to) < *state.top(m.from);
        if (empty || larger) {
          const auto want = empty ? MoveError::EmptySource : MoveError::LargerOnSmaller;
          bool threw = false;
          try {
            (void)apply_move(state, m);
          } catch (const IllegalMove& e) {
            threw = e.kind() == want;
          }
          if (err != want || !threw) o.fail("illegal move " + to_string(m) + " accepted");
          ++rejected;
        } else if (err) {
          o.fail("legal move " + to_string(m) + " rejected");
        } else {
          legal.push_back(m);
        }
      }
      if (legal.empty()) {
        o.fail("no legal move available");
        break;
      }
      // apply_move goes through the checked state constructor, so any
      // invariant breach throws here.
      try {
        state = apply_move(state, legal[rng() % legal.size()]);
      } catch (const std::exception& e) {
        o.fail(std::string("invariant violated: ") + e.what());
        break;
      }
      if (state.disc_count() != n) o.fail("disc count changed");
    }
  }
  if (o.pass) {
    o.detail = "1000 random walks, 0 violations, " + std::to_string(rejected) +
               " illegal moves rejected";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "golden N=5 word", 1.0, golden_word_check},
      {"AC2", "length law 2^N-1", 10.0, length_law},
      {"AC3", "language cardinality 1", 30.0, language_cardinality},
      {"AC4", "legality and completion", 10.0, legality},
      {"AC5", "oracle minimality and uniqueness", 60.0, oracle_minimality},
      {"AC6", "determinism certificate", 1.0, determinism},
      {"AC7", "halting and step count", 5.0, halting},
      {"AC8", "property suite", 10.0, property_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.budget_seconds) {
      o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) +
             " s");
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s %-34s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
