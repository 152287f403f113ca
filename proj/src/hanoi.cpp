#include "hanoigram/hanoi.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hanoigram {

const std::array<MoveSymbol, 6>& all_moves() noexcept {
  static const std::array<MoveSymbol, 6> moves{
      MoveSymbol{1, 2}, MoveSymbol{1, 3}, MoveSymbol{2, 1},
      MoveSymbol{2, 3}, MoveSymbol{3, 1}, MoveSymbol{3, 2},
  };
  return moves;
}

std::string to_string(const MoveSymbol& m) {
  return {'p', static_cast<char>('0' + m.from.value()), static_cast<char>('0' + m.to.value())};
}

std::string to_string(const HanoiNonterminal& h) {
  std::string out{'h', static_cast<char>('0' + h.from.value()),
                  static_cast<char>('0' + h.to.value()), '('};
  out += std::to_string(h.discs);
  out += ')';
  return out;
}

namespace {

std::optional<std::pair<PegId, PegId>> parse_peg_pair(char a, char b) {
  if (a < '1' || a > '3' || b < '1' || b > '3' || a == b) return std::nullopt;
  return std::pair{PegId(a - '0'), PegId(b - '0')};
}

}  // namespace

std::optional<MoveSymbol> parse_move(std::string_view token) {
  if (token.size() != 3 || token[0] != 'p') return std::nullopt;
  auto pegs = parse_peg_pair(token[1], token[2]);
  if (!pegs) return std::nullopt;
  return MoveSymbol{pegs->first, pegs->second};
}

std::optional<HanoiNonterminal> parse_nonterminal(std::string_view token) {
  if (token.size() < 6 || token[0] != 'h' || token[3] != '(' || token.back() != ')') {
    return std::nullopt;
  }
  auto pegs = parse_peg_pair(token[1], token[2]);
  if (!pegs) return std::nullopt;
  auto digits = token.substr(4, token.size() - 5);
  if (digits.empty() || digits.front() == '0') return std::nullopt;
  unsigned n = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
  return HanoiNonterminal{pegs->first, pegs->second, n};
}

std::vector<MoveSymbol> parse_moves(std::string_view text) {
  std::vector<MoveSymbol> moves;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    auto token = text.substr(i, j - i);
    auto move = parse_move(token);
    if (!move) {
      throw ParseError("invalid move token '" + std::string(token) + "' at position " +
                           std::to_string(moves.size()),
                       moves.size());
    }
    moves.push_back(*move);
    i = j;
  }
  return moves;
}

std::string format_moves(std::span<const MoveSymbol> moves) {
  std::string out;
  out.reserve(moves.size() * 4);
  for (const auto& m : moves) {
    if (!out.empty()) out += ' ';
    out += to_string(m);
  }
  return out;
}

HanoiState::HanoiState(std::array<Peg, 3> pegs) : pegs_(std::move(pegs)) {
  std::vector<Disc> all;
  for (const auto& peg : pegs_) {
    for (std::size_t i = 1; i < peg.size(); ++i) {
      if (peg[i] >= peg[i - 1]) {
        throw std::invalid_argument("peg is not strictly decreasing bottom-to-top");
      }
    }
    all.insert(all.end(), peg.begin(), peg.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i + 1) throw std::invalid_argument("pegs do not hold exactly discs 1..N");
  }
}

std::size_t HanoiState::disc_count() const noexcept {
  return pegs_[0].size() + pegs_[1].size() + pegs_[2].size();
}

std::optional<Disc> HanoiState::top(PegId p) const noexcept {
  const auto& peg = pegs_[p.index()];
  if (peg.empty()) return std::nullopt;
  return peg.back();
}

std::string_view to_string(MoveError e) noexcept {
  switch (e) {
    case MoveError::EmptySource:
      return "EmptySource";
    case MoveError::LargerOnSmaller:
      return "LargerOnSmaller";
  }
  return "?";
}

IllegalMove::IllegalMove(MoveError kind, const MoveSymbol& move)
    : Error(std::string(to_string(kind)) + ": " + to_string(move)), kind_(kind) {}

HanoiState initial_state(std::size_t n_discs) {
  if (n_discs == 0) throw InvalidDiscCount("disc count must be at least 1");
  std::array<HanoiState::Peg, 3> pegs;
  pegs[0].resize(n_discs);
  std::iota(pegs[0].rbegin(), pegs[0].rend(), Disc{1});
  return HanoiState(std::move(pegs));
}

std::optional<MoveError> check_move(const HanoiState& state, const MoveSymbol& move) {
  auto disc = state.top(move.from);
  if (!disc) return MoveError::EmptySource;
  auto below = state.top(move.to);
  if (below && *below < *disc) return MoveError::LargerOnSmaller;
  return std::nullopt;
}

HanoiState apply_move(const HanoiState& state, const MoveSymbol& move) {
  if (auto err = check_move(state, move)) throw IllegalMove(*err, move);
  auto pegs = state.pegs();
  pegs[move.to.index()].push_back(pegs[move.from.index()].back());
  pegs[move.from.index()].pop_back();
  return HanoiState(std::move(pegs));
}

bool is_solved(const HanoiState& state, std::size_t n_discs) {
  if (state.disc_count() != n_discs) {
    throw DiscCountMismatch("state holds " + std::to_string(state.disc_count()) +
                            " discs, expected " + std::to_string(n_discs));
  }
  return state.peg(PegId(3)).size() == n_discs;
}

SequenceValidator::SequenceValidator(std::size_t n_discs)
    : n_discs_(n_discs), state_(initial_state(n_discs)) {
  report_.final_solved = is_solved(state_, n_discs_);
}

bool SequenceValidator::feed(const MoveSymbol& move) {
  if (!report_.legal) return false;
  const std::size_t index = report_.moves_checked++;
  if (auto err = check_move(state_, move)) {
    report_.legal = false;
    report_.failing_index = index;
    report_.failure = err;
    report_.final_solved = false;
    return false;
  }
  // In-place replay; check_move already established the invariants hold.
  auto& from = state_.pegs_[move.from.index()];
  state_.pegs_[move.to.index()].push_back(from.back());
  from.pop_back();
  report_.final_solved = state_.pegs_[2].size() == n_discs_;
  return true;
}

ValidationReport SequenceValidator::report() const { return report_; }

ValidationReport validate_sequence(std::size_t n_discs, std::span<const MoveSymbol> moves) {
  SequenceValidator validator(n_discs);
  for (const auto& m : moves) {
    if (!validator.feed(m)) break;
  }
  return validator.report();
}

}  // namespace hanoigram
