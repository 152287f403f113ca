#pragma once

// Builders for the Hanoi grammar and the Hanoi pushdown automaton, the
// classic recursive solver, and an exhaustive breadth-first oracle over the
// 3^N board states.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hanoigram/cfg.hpp"
#include "hanoigram/hanoi.hpp"
#include "hanoigram/pda.hpp"

namespace hanoigram {

/// Grammar whose terminals are moves p_ij and nonterminals subproblems h_ij(n).
using HanoiGrammar = cfg::Grammar<MoveSymbol, HanoiNonterminal>;

/// The distinguished start stack symbol z0.
struct StartMarker {
  friend constexpr auto operator<=>(const StartMarker&, const StartMarker&) = default;
};

}  // namespace hanoigram

template <>
struct std::hash<hanoigram::StartMarker> {
  std::size_t operator()(const hanoigram::StartMarker&) const noexcept { return 0x5a; }
};

namespace hanoigram {

using HanoiStackSymbol = std::variant<MoveSymbol, HanoiNonterminal, StartMarker>;

/// The automaton reads no input; `char` is a placeholder letter type for its
/// (empty) input alphabet.
using HanoiPda = pda::Pda<char, HanoiStackSymbol>;

[[nodiscard]] std::string to_string(const HanoiStackSymbol& s);
/// Accepts "p13", "h12(4)" and "z0".
[[nodiscard]] std::optional<HanoiStackSymbol> parse_stack_symbol(std::string_view token);

inline constexpr std::size_t kBfsDiscCap = 10;
inline constexpr std::size_t kMaterializedDiscCap = 24;

struct HanoiInstance {
  std::size_t n_discs = 1;
  PegId source{1};
  PegId target{3};
  PegId auxiliary{2};
};

/// Start symbol h13(N); h_ij(1) -> p_ij and h_ij(n) -> h_ik(n-1) p_ij h_kj(n-1)
/// for n = 2..N, k being the third peg.
[[nodiscard]] HanoiGrammar build_hanoi_grammar(std::size_t n_discs);

/// Single state q0, empty input alphabet, no accepting states. z0 expands to
/// h12(N-1) p13 h23(N-1) (to p13 when N = 1), h_ij(n) expands like the
/// grammar for n < N, and p_ij is popped. Every p_ij is observable.
[[nodiscard]] HanoiPda build_hanoi_pda(std::size_t n_discs);

/// 2^(N+1) rewrites; one more than twice what the Hanoi grammar needs.
[[nodiscard]] std::size_t default_derivation_limit(std::size_t n_discs);
/// 2^(N+2) automaton moves.
[[nodiscard]] std::size_t default_run_limit(std::size_t n_discs);

[[nodiscard]] std::vector<MoveSymbol> recursive_solve(const HanoiInstance& instance);

/// Same order as recursive_solve, one move at a time.
void recursive_emit(const HanoiInstance& instance,
                    const std::function<void(const MoveSymbol&)>& sink);

struct BfsResult {
  std::vector<MoveSymbol> moves;
  /// Number of distinct shortest solutions (saturates at UINT64_MAX).
  std::uint64_t shortest_path_count = 0;
};

/// Breadth-first search over every legal board state from the initial state
/// to the solved state. Moves are expanded in (from, to) order and the first
/// discovery of a state fixes its parent, so the returned path is
/// reproducible. Throws CapExceeded above `max_discs`.
[[nodiscard]] BfsResult bfs_optimal(std::size_t n_discs, std::size_t max_discs = kBfsDiscCap);

enum class Engine { Grammar, Pda, Recursive, Bfs };

[[nodiscard]] std::string_view to_string(Engine e) noexcept;
[[nodiscard]] std::optional<Engine> parse_engine(std::string_view name);

/// Materialized solution by the given engine. Grammar, Pda and Recursive
/// refuse N above kMaterializedDiscCap unless `enforce_caps` is false.
[[nodiscard]] std::vector<MoveSymbol> solve(Engine engine, std::size_t n_discs,
                                            bool enforce_caps = true);

/// Streams the solution to `sink` without materializing it (Bfs still
/// materializes internally). Returns the number of moves emitted.
std::size_t solve_streaming(Engine engine, std::size_t n_discs,
                            const std::function<void(const MoveSymbol&)>& sink,
                            bool enforce_caps = true);

}  // namespace hanoigram
