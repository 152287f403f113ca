#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hanoigram/constructions.hpp"
#include "hanoigram/hanoi.hpp"

using namespace hanoigram;

namespace {

using Pegs = std::array<HanoiState::Peg, 3>;

// Independent restatement of the board invariants.
bool well_formed(const HanoiState& s, std::size_t n) {
  std::vector<Disc> all;
  for (const auto& peg : s.pegs()) {
    if (!std::is_sorted(peg.rbegin(), peg.rend())) return false;
    if (std::adjacent_find(peg.begin(), peg.end()) != peg.end()) return false;
    all.insert(all.end(), peg.begin(), peg.end());
  }
  std::sort(all.begin(), all.end());
  if (all.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (all[i] != i + 1) return false;
  }
  return true;
}

std::vector<MoveSymbol> legal_moves(const HanoiState& s) {
  std::vector<MoveSymbol> out;
  for (const auto& m : all_moves()) {
    if (!check_move(s, m)) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("peg and move symbols") {
  CHECK_THROWS_AS(PegId(0), std::invalid_argument);
  CHECK_THROWS_AS(PegId(4), std::invalid_argument);
  CHECK_THROWS_AS(MoveSymbol(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(HanoiNonterminal(1, 3, 0), std::invalid_argument);
  CHECK(third_peg(PegId(1), PegId(3)) == PegId(2));
  CHECK(third_peg(PegId(3), PegId(2)) == PegId(1));
  CHECK(all_moves().size() == 6);
  CHECK(std::is_sorted(all_moves().begin(), all_moves().end()));
}

TEST_CASE("textual encoding") {
  CHECK(to_string(MoveSymbol{1, 3}) == "p13");
  CHECK(to_string(HanoiNonterminal{1, 2, 4}) == "h12(4)");
  CHECK(to_string(HanoiNonterminal{3, 2, 17}) == "h32(17)");

  for (const char* bad : {"p14", "p11", "P13", "p1", "p133", "", "q13", "p1 3"}) {
    CAPTURE(bad);
    CHECK_FALSE(parse_move(bad));
  }
  for (const char* bad : {"h12()", "h12(0)", "h12(01)", "h11(2)", "h12(2", "h12(x)", "h12(-1)"}) {
    CAPTURE(bad);
    CHECK_FALSE(parse_nonterminal(bad));
  }
  CHECK(parse_nonterminal("h23(12)") == HanoiNonterminal{2, 3, 12});

  SUBCASE("round trip over every symbol") {
    for (const auto& m : all_moves()) {
      CHECK(parse_move(to_string(m)) == m);
      for (unsigned n : {1u, 9u, 10u, 24u}) {
        HanoiNonterminal h{m.from, m.to, n};
        CHECK(parse_nonterminal(to_string(h)) == h);
      }
    }
  }
  SUBCASE("sequences") {
    CHECK(parse_moves(" p13\n\tp12  p32 \n") ==
          std::vector<MoveSymbol>{{1, 3}, {1, 2}, {3, 2}});
    CHECK(parse_moves("").empty());
    try {
      (void)parse_moves("p13 p12 p14 p21");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
      CHECK(std::string(e.what()).find("p14") != std::string::npos);
    }
    std::vector<MoveSymbol> moves{{1, 3}, {2, 1}};
    CHECK(format_moves(moves) == "p13 p21");
    CHECK(parse_moves(format_moves(moves)) == moves);
  }
}

TEST_CASE("initial_state") {
  CHECK(initial_state(1).pegs() == Pegs{{{1}, {}, {}}});
  CHECK(initial_state(3).pegs() == Pegs{{{3, 2, 1}, {}, {}}});
  CHECK_THROWS_AS((void)initial_state(0), InvalidDiscCount);
}

TEST_CASE("state constructor rejects malformed boards") {
  CHECK_THROWS_AS(HanoiState(Pegs{{{1, 2}, {}, {}}}), std::invalid_argument);
  CHECK_THROWS_AS(HanoiState(Pegs{{{2}, {2}, {1}}}), std::invalid_argument);
  CHECK_THROWS_AS(HanoiState(Pegs{{{3}, {}, {1}}}), std::invalid_argument);
  CHECK_NOTHROW(HanoiState(Pegs{{{3}, {2}, {1}}}));
}

TEST_CASE("apply_move") {
  auto s2 = initial_state(2);
  CHECK(apply_move(s2, MoveSymbol{1, 3}).pegs() == Pegs{{{2}, {}, {1}}});
  CHECK(s2 == initial_state(2));

  try {
    (void)apply_move(s2, MoveSymbol{2, 3});
    FAIL("expected IllegalMove");
  } catch (const IllegalMove& e) {
    CHECK(e.kind() == MoveError::EmptySource);
  }
  HanoiState split(Pegs{{{2}, {}, {1}}});
  CHECK(check_move(split, MoveSymbol{1, 3}) == MoveError::LargerOnSmaller);
  CHECK_THROWS_AS((void)apply_move(split, MoveSymbol{1, 3}), IllegalMove);
}

TEST_CASE("is_solved") {
  CHECK_FALSE(is_solved(initial_state(3), 3));
  CHECK(is_solved(HanoiState(Pegs{{{}, {}, {3, 2, 1}}}), 3));
  CHECK_FALSE(is_solved(HanoiState(Pegs{{{3}, {}, {2, 1}}}), 3));
  CHECK_THROWS_AS((void)is_solved(initial_state(3), 4), DiscCountMismatch);
}

TEST_CASE("validate_sequence") {
  SUBCASE("one disc") {
    auto r = validate_sequence(1, std::vector<MoveSymbol>{{1, 3}});
    CHECK(r.legal);
    CHECK(r.final_solved);
    CHECK_FALSE(r.failing_index);
    CHECK(r.moves_checked == 1);
  }
  SUBCASE("five discs, golden word") {
    auto moves = parse_moves(
        "p13 p12 p32 p13 p21 p23 p13 p12 p32 p31 p21 p32 p13 p12 p32 p13 p21 p23 p13 p21 p32 "
        "p31 p21 p23 p13 p12 p32 p13 p21 p23 p13");
    auto r = validate_sequence(5, moves);
    CHECK(r.legal);
    CHECK(r.final_solved);
    CHECK(r.moves_checked == 31);
  }
  SUBCASE("second p13 puts disc 2 on disc 1") {
    auto r = validate_sequence(2, std::vector<MoveSymbol>{{1, 3}, {1, 3}});
    CHECK_FALSE(r.legal);
    CHECK(r.failing_index == 1);
    CHECK(r.failure == MoveError::LargerOnSmaller);
    CHECK_FALSE(r.final_solved);
    CHECK(r.moves_checked == 2);
  }
  SUBCASE("moves after the first failure are not replayed") {
    auto r = validate_sequence(2, std::vector<MoveSymbol>{{2, 1}, {1, 3}, {1, 2}, {3, 2}});
    CHECK(r.failing_index == 0);
    CHECK(r.failure == MoveError::EmptySource);
    CHECK(r.moves_checked == 1);
  }
  SUBCASE("legal but unfinished") {
    auto r = validate_sequence(2, std::vector<MoveSymbol>{{1, 2}});
    CHECK(r.legal);
    CHECK_FALSE(r.final_solved);
  }
  SUBCASE("empty sequence") {
    auto r = validate_sequence(3, {});
    CHECK(r.legal);
    CHECK_FALSE(r.final_solved);
    CHECK(r.moves_checked == 0);
  }
  CHECK_THROWS_AS((void)validate_sequence(0, {}), InvalidDiscCount);
}

TEST_CASE("property: random legal walks preserve the board invariants") {
  std::mt19937_64 rng(0x4a4e4f49ULL);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t length = rng() % 200;
    auto state = initial_state(n);
    SequenceValidator validator(n);
    for (std::size_t i = 0; i < length; ++i) {
      auto options = legal_moves(state);
      REQUIRE_FALSE(options.empty());
      const auto m = options[rng() % options.size()];
      auto next = apply_move(state, m);
      REQUIRE(well_formed(next, n));
      // Only the two touched pegs change, by exactly one disc.
      CHECK(next.peg(m.from).size() + 1 == state.peg(m.from).size());
      CHECK(next.peg(m.to).size() == state.peg(m.to).size() + 1);
      CHECK(next.peg(m.to).back() == state.peg(m.from).back());
      CHECK(apply_move(next, m.reversed()) == state);
      REQUIRE(validator.feed(m));
      state = std::move(next);
    }
    CHECK(validator.state() == state);

    // Every illegal move from the reached state is rejected with the right reason.
    for (const auto& m : all_moves()) {
      auto err = check_move(state, m);
      if (!state.top(m.from)) {
        CHECK(err == MoveError::EmptySource);
        CHECK_THROWS_AS((void)apply_move(state, m), IllegalMove);
      } else if (state.top(m.to) && *state.top(m.to) < *state.top(m.from)) {
        CHECK(err == MoveError::LargerOnSmaller);
        CHECK_THROWS_AS((void)apply_move(state, m), IllegalMove);
      } else {
        CHECK_FALSE(err);
      }
    }
  }
}

TEST_CASE("grammar words are legal, solve, and no proper prefix solves") {
  for (std::size_t n = 1; n <= 16; ++n) {
    CAPTURE(n);
    auto word = solve(Engine::Grammar, n);
    auto r = validate_sequence(n, word);
    CHECK(r.legal);
    CHECK(r.final_solved);
    if (n <= 10) {
      SequenceValidator v(n);
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        REQUIRE(v.feed(word[i]));
        REQUIRE_FALSE(v.report().final_solved);
      }
    }
  }
}
