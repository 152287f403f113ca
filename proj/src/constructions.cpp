#include "hanoigram/constructions.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>

namespace hanoigram {

namespace {

// Step limits are 2^(N+2); keep them representable.
constexpr std::size_t kStreamingDiscCap = 61;
// 3^15 states is the most the uncapped search will attempt.
constexpr std::size_t kBfsHardCap = 15;

void require_discs(std::size_t n_discs) {
  if (n_discs == 0) throw InvalidDiscCount("disc count must be at least 1");
}

}  // namespace

std::string to_string(const HanoiStackSymbol& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, StartMarker>) {
          return "z0";
        } else {
          return hanoigram::to_string(v);
        }
      },
      s);
}

std::optional<HanoiStackSymbol> parse_stack_symbol(std::string_view token) {
  if (token == "z0") return StartMarker{};
  if (auto m = parse_move(token)) return *m;
  if (auto h = parse_nonterminal(token)) return *h;
  return std::nullopt;
}

HanoiGrammar build_hanoi_grammar(std::size_t n_discs) {
  require_discs(n_discs);
  using Symbol = HanoiGrammar::Symbol;

  std::vector<MoveSymbol> terminals(all_moves().begin(), all_moves().end());
  std::vector<HanoiNonterminal> nonterminals;
  std::vector<HanoiGrammar::Production> productions;
  const auto n_max = static_cast<unsigned>(n_discs);
  for (const auto& m : all_moves()) {
    productions.push_back({HanoiNonterminal{m.from, m.to, 1}, {Symbol{m}}});
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    for (const auto& m : all_moves()) {
      nonterminals.emplace_back(m.from, m.to, n);
      if (n == 1) continue;
      const PegId k = third_peg(m.from, m.to);
      productions.push_back({HanoiNonterminal{m.from, m.to, n},
                             {Symbol{HanoiNonterminal{m.from, k, n - 1}}, Symbol{m},
                              Symbol{HanoiNonterminal{k, m.to, n - 1}}}});
    }
  }
  return HanoiGrammar(std::move(terminals), std::move(nonterminals),
                      HanoiNonterminal{1, 3, n_max}, std::move(productions));
}

HanoiPda build_hanoi_pda(std::size_t n_discs) {
  require_discs(n_discs);
  const std::string q0 = "q0";
  const auto top_level = static_cast<unsigned>(n_discs - 1);

  std::set<HanoiStackSymbol> alphabet{StartMarker{}};
  std::set<HanoiStackSymbol> observable;
  HanoiPda::Transitions delta;
  auto eps_rule = [&](HanoiStackSymbol top, std::vector<HanoiStackSymbol> push) {
    delta[{q0, std::nullopt, std::move(top)}] = {HanoiPda::Target{q0, std::move(push)}};
  };

  if (top_level == 0) {
    eps_rule(StartMarker{}, {MoveSymbol{1, 3}});
  } else {
    eps_rule(StartMarker{}, {HanoiNonterminal{1, 2, top_level}, MoveSymbol{1, 3},
                             HanoiNonterminal{2, 3, top_level}});
  }
  for (const auto& m : all_moves()) {
    alphabet.insert(m);
    observable.insert(m);
    eps_rule(m, {});
    for (unsigned n = 1; n <= top_level; ++n) {
      const HanoiNonterminal h{m.from, m.to, n};
      alphabet.insert(h);
      if (n == 1) {
        eps_rule(h, {m});
      } else {
        const PegId k = third_peg(m.from, m.to);
        eps_rule(h, {HanoiNonterminal{m.from, k, n - 1}, m, HanoiNonterminal{k, m.to, n - 1}});
      }
    }
  }

  HanoiPda pda({q0}, {}, std::move(alphabet), std::move(delta), q0, StartMarker{}, {},
               std::move(observable));
  if (auto dead = pda::dead_end_symbols(pda); !dead.empty()) {
    throw InvalidConstruction("stack symbol " + to_string(dead.front()) +
                              " is reachable but has no transition");
  }
  return pda;
}

std::size_t default_derivation_limit(std::size_t n_discs) {
  return std::size_t{1} << (n_discs + 1);
}

std::size_t default_run_limit(std::size_t n_discs) { return std::size_t{1} << (n_discs + 2); }

namespace {

void emit_recursive(std::size_t n, PegId from, PegId to, PegId via,
                    const std::function<void(const MoveSymbol&)>& sink) {
  if (n == 0) return;
  emit_recursive(n - 1, from, via, to, sink);
  sink(MoveSymbol{from, to});
  emit_recursive(n - 1, via, to, from, sink);
}

}  // namespace

void recursive_emit(const HanoiInstance& instance,
                    const std::function<void(const MoveSymbol&)>& sink) {
  require_discs(instance.n_discs);
  if (instance.source == instance.target || instance.target == instance.auxiliary ||
      instance.source == instance.auxiliary) {
    throw std::invalid_argument("source, target and auxiliary must be the three pegs");
  }
  emit_recursive(instance.n_discs, instance.source, instance.target, instance.auxiliary, sink);
}

std::vector<MoveSymbol> recursive_solve(const HanoiInstance& instance) {
  std::vector<MoveSymbol> out;
  if (instance.n_discs < 64) out.reserve((std::size_t{1} << instance.n_discs) - 1);
  recursive_emit(instance, [&](const MoveSymbol& m) { out.push_back(m); });
  return out;
}

BfsResult bfs_optimal(std::size_t n_discs, std::size_t max_discs) {
  require_discs(n_discs);
  if (n_discs > max_discs) {
    throw CapExceeded("breadth-first search is capped at " + std::to_string(max_discs) +
                      " discs");
  }
  // State code: sum over discs d (0 = smallest) of peg(d) * 3^d.
  std::vector<std::uint32_t> pow3(n_discs + 1, 1);
  for (std::size_t d = 1; d <= n_discs; ++d) pow3[d] = pow3[d - 1] * 3;
  const std::uint32_t n_states = pow3[n_discs];
  const std::uint32_t start = 0;
  const std::uint32_t goal = n_states - 1;

  constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::int32_t> dist(n_states, -1);
  std::vector<std::uint64_t> paths(n_states, 0);
  std::vector<std::uint32_t> parent(n_states, 0);
  std::vector<std::uint8_t> parent_move(n_states, 0);

  dist[start] = 0;
  paths[start] = 1;
  std::deque<std::uint32_t> queue{start};
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    if (u == goal) continue;

    // Smallest disc on each peg; n_discs means none.
    std::array<std::size_t, 3> top{n_discs, n_discs, n_discs};
    for (std::size_t d = n_discs; d-- > 0;) top[(u / pow3[d]) % 3] = d;

    for (std::size_t mi = 0; mi < all_moves().size(); ++mi) {
      const auto& m = all_moves()[mi];
      const std::size_t disc = top[m.from.index()];
      if (disc == n_discs || top[m.to.index()] < disc) continue;
      const std::uint32_t v = u - static_cast<std::uint32_t>(m.from.index()) * pow3[disc] +
                              static_cast<std::uint32_t>(m.to.index()) * pow3[disc];
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        paths[v] = paths[u];
        parent[v] = u;
        parent_move[v] = static_cast<std::uint8_t>(mi);
        queue.push_back(v);
      } else if (dist[v] == dist[u] + 1) {
        paths[v] = paths[v] > kSaturated - paths[u] ? kSaturated : paths[v] + paths[u];
      }
    }
  }

  BfsResult result;
  result.shortest_path_count = paths[goal];
  for (std::uint32_t s = goal; s != start; s = parent[s]) {
    result.moves.push_back(all_moves()[parent_move[s]]);
  }
  std::reverse(result.moves.begin(), result.moves.end());
  return result;
}

std::string_view to_string(Engine e) noexcept {
  switch (e) {
    case Engine::Grammar:
      return "grammar";
    case Engine::Pda:
      return "pda";
    case Engine::Recursive:
      return "recursive";
    case Engine::Bfs:
      return "bfs";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
  for (Engine e : {Engine::Grammar, Engine::Pda, Engine::Recursive, Engine::Bfs}) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

namespace {

std::vector<MoveSymbol> moves_from_trace(const pda::RunTrace<HanoiPda>& trace) {
  if (trace.outcome == pda::Outcome::StepLimit) {
    throw StepLimitExceeded("automaton did not empty its stack within the step limit");
  }
  if (trace.outcome != pda::Outcome::EmptyStackHalt) {
    throw Error("automaton got stuck before emptying its stack");
  }
  std::vector<MoveSymbol> out;
  out.reserve(trace.emitted.size());
  for (const auto& s : trace.emitted) out.push_back(std::get<MoveSymbol>(s));
  return out;
}

}  // namespace

std::vector<MoveSymbol> solve(Engine engine, std::size_t n_discs, bool enforce_caps) {
  require_discs(n_discs);
  if (engine == Engine::Bfs) {
    return bfs_optimal(n_discs, enforce_caps ? kBfsDiscCap : kBfsHardCap).moves;
  }
  if (enforce_caps && n_discs > kMaterializedDiscCap) {
    throw CapExceeded("materialized solutions are capped at " +
                      std::to_string(kMaterializedDiscCap) + " discs; use streaming");
  }
  if (n_discs > kStreamingDiscCap) throw CapExceeded("disc count too large");
  switch (engine) {
    case Engine::Grammar:
      return cfg::derive_full(build_hanoi_grammar(n_discs), default_derivation_limit(n_discs))
          .word;
    case Engine::Pda:
      return moves_from_trace(pda::run_to_empty_stack(
          build_hanoi_pda(n_discs), {}, [](const auto&) {}, default_run_limit(n_discs)));
    case Engine::Recursive:
    default:
      return recursive_solve(HanoiInstance{n_discs});
  }
}

std::size_t solve_streaming(Engine engine, std::size_t n_discs,
                            const std::function<void(const MoveSymbol&)>& sink,
                            bool enforce_caps) {
  require_discs(n_discs);
  if (n_discs > kStreamingDiscCap) {
    throw CapExceeded("streaming is capped at " + std::to_string(kStreamingDiscCap) + " discs");
  }
  switch (engine) {
    case Engine::Grammar:
      return cfg::derive_streaming(build_hanoi_grammar(n_discs), sink,
                                   default_derivation_limit(n_discs));
    case Engine::Pda: {
      // Drive the runner directly so moves are not retained in a trace.
      const auto pda = build_hanoi_pda(n_discs);
      pda::Runner<HanoiPda> runner(pda, {});
      std::size_t emitted = 0;
      const std::size_t limit = default_run_limit(n_discs);
      auto observe = [&](const HanoiStackSymbol& s) {
        sink(std::get<MoveSymbol>(s));
        ++emitted;
      };
      for (std::size_t steps = 0; !runner.halted(); ++steps) {
        if (steps == limit) {
          throw StepLimitExceeded("automaton did not empty its stack within the step limit");
        }
        if (!runner.advance(observe)) throw Error("automaton got stuck before emptying its stack");
      }
      return emitted;
    }
    case Engine::Recursive: {
      std::size_t emitted = 0;
      recursive_emit(HanoiInstance{n_discs}, [&](const MoveSymbol& m) {
        sink(m);
        ++emitted;
      });
      return emitted;
    }
    case Engine::Bfs:
    default: {
      const auto moves = solve(Engine::Bfs, n_discs, enforce_caps);
      for (const auto& m : moves) sink(m);
      return moves.size();
    }
  }
}

}  // namespace hanoigram
