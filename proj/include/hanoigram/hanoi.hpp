#pragma once

// Towers of Hanoi domain model: pegs, move and subproblem symbols, board
// states, move legality and whole-sequence validation.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hanoigram/errors.hpp"

namespace hanoigram {

/// One of the three pegs, numbered 1..3.
class PegId {
 public:
  constexpr explicit PegId(int value) : value_(value) {
    if (value < 1 || value > 3) throw std::invalid_argument("peg id must be 1, 2 or 3");
  }

  [[nodiscard]] constexpr int value() const noexcept { return value_; }
  [[nodiscard]] constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(value_ - 1);
  }

  friend constexpr auto operator<=>(PegId, PegId) = default;

 private:
  int value_;
};

/// The peg that is neither `a` nor `b`.
[[nodiscard]] constexpr PegId third_peg(PegId a, PegId b) {
  if (a == b) throw std::invalid_argument("third_peg needs two distinct pegs");
  return PegId(6 - a.value() - b.value());
}

/// Terminal p_ij: move the top disc from peg `from` to peg `to`.
struct MoveSymbol {
  PegId from;
  PegId to;

  constexpr MoveSymbol(PegId from_peg, PegId to_peg) : from(from_peg), to(to_peg) {
    if (from == to) throw std::invalid_argument("a move needs two distinct pegs");
  }
  constexpr MoveSymbol(int from_peg, int to_peg) : MoveSymbol(PegId(from_peg), PegId(to_peg)) {}

  [[nodiscard]] constexpr MoveSymbol reversed() const { return {to, from}; }

  friend constexpr auto operator<=>(const MoveSymbol&, const MoveSymbol&) = default;
};

/// Nonterminal h_ij(n): move `discs` discs from peg `from` to peg `to`.
struct HanoiNonterminal {
  PegId from;
  PegId to;
  unsigned discs;

  constexpr HanoiNonterminal(PegId from_peg, PegId to_peg, unsigned n)
      : from(from_peg), to(to_peg), discs(n) {
    if (from == to) throw std::invalid_argument("h_ij(n) needs two distinct pegs");
    if (n == 0) throw std::invalid_argument("h_ij(n) needs n >= 1");
  }
  constexpr HanoiNonterminal(int from_peg, int to_peg, unsigned n)
      : HanoiNonterminal(PegId(from_peg), PegId(to_peg), n) {}

  friend constexpr auto operator<=>(const HanoiNonterminal&, const HanoiNonterminal&) = default;
};

/// The six moves in lexicographic (from, to) order.
[[nodiscard]] const std::array<MoveSymbol, 6>& all_moves() noexcept;

/// "p13"
[[nodiscard]] std::string to_string(const MoveSymbol& m);
/// "h12(4)"
[[nodiscard]] std::string to_string(const HanoiNonterminal& h);

[[nodiscard]] std::optional<MoveSymbol> parse_move(std::string_view token);
[[nodiscard]] std::optional<HanoiNonterminal> parse_nonterminal(std::string_view token);

/// Whitespace-separated move codes. Throws ParseError naming the first bad
/// token and its 0-based index.
[[nodiscard]] std::vector<MoveSymbol> parse_moves(std::string_view text);

/// Space-joined move codes.
[[nodiscard]] std::string format_moves(std::span<const MoveSymbol> moves);

using Disc = unsigned;

/// Three pegs of discs, each listed bottom-to-top in strictly decreasing size,
/// together holding exactly the discs 1..N.
class HanoiState {
 public:
  using Peg = std::vector<Disc>;

  explicit HanoiState(std::array<Peg, 3> pegs);

  [[nodiscard]] const Peg& peg(PegId p) const noexcept { return pegs_[p.index()]; }
  [[nodiscard]] const std::array<Peg, 3>& pegs() const noexcept { return pegs_; }
  [[nodiscard]] std::size_t disc_count() const noexcept;
  [[nodiscard]] std::optional<Disc> top(PegId p) const noexcept;

  friend bool operator==(const HanoiState&, const HanoiState&) = default;

 private:
  friend class SequenceValidator;

  std::array<Peg, 3> pegs_;
};

enum class MoveError { EmptySource, LargerOnSmaller };

[[nodiscard]] std::string_view to_string(MoveError e) noexcept;

class IllegalMove : public Error {
 public:
  IllegalMove(MoveError kind, const MoveSymbol& move);
  [[nodiscard]] MoveError kind() const noexcept { return kind_; }

 private:
  MoveError kind_;
};

/// Peg 1 holds N..1 bottom-to-top; pegs 2 and 3 empty.
[[nodiscard]] HanoiState initial_state(std::size_t n_discs);

/// Why `move` is illegal in `state`, or nullopt if it is legal.
[[nodiscard]] std::optional<MoveError> check_move(const HanoiState& state, const MoveSymbol& move);

/// The state after moving the top disc of `move.from` onto `move.to`.
/// Throws IllegalMove.
[[nodiscard]] HanoiState apply_move(const HanoiState& state, const MoveSymbol& move);

/// All discs on peg 3. Throws DiscCountMismatch if the state does not hold
/// exactly `n_discs` discs.
[[nodiscard]] bool is_solved(const HanoiState& state, std::size_t n_discs);

struct ValidationReport {
  bool legal = true;
  /// 0-based index of the first illegal move.
  std::optional<std::size_t> failing_index;
  std::optional<MoveError> failure;
  bool final_solved = false;
  /// Moves replayed, including the failing one.
  std::size_t moves_checked = 0;
};

/// Incremental replay from the initial state; moves after the first illegal
/// one are ignored.
class SequenceValidator {
 public:
  explicit SequenceValidator(std::size_t n_discs);

  /// Returns whether the sequence is still legal.
  bool feed(const MoveSymbol& move);

  [[nodiscard]] const HanoiState& state() const noexcept { return state_; }
  [[nodiscard]] ValidationReport report() const;

 private:
  std::size_t n_discs_;
  HanoiState state_;
  ValidationReport report_;
};

[[nodiscard]] ValidationReport validate_sequence(std::size_t n_discs,
                                                 std::span<const MoveSymbol> moves);

}  // namespace hanoigram

template <>
struct std::hash<hanoigram::MoveSymbol> {
  std::size_t operator()(const hanoigram::MoveSymbol& m) const noexcept {
    return static_cast<std::size_t>(m.from.value() * 4 + m.to.value());
  }
};

template <>
struct std::hash<hanoigram::HanoiNonterminal> {
  std::size_t operator()(const hanoigram::HanoiNonterminal& h) const noexcept {
    return (static_cast<std::size_t>(h.discs) << 4) ^
           static_cast<std::size_t>(h.from.value() * 4 + h.to.value());
  }
};
