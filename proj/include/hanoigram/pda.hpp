#pragma once

// Pushdown automata: a septuple of states, input alphabet, stack alphabet,
// transition relation, start state, start stack symbol and accepting states.
// Stacks are kept top-at-front; a transition replaces the top with its pushed
// word, whose first symbol becomes the new top.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hanoigram/cfg.hpp"
#include "hanoigram/errors.hpp"

namespace hanoigram::pda {

template <cfg::Payload Input, cfg::Payload StackSymbol>
class Pda {
 public:
  using input_type = Input;
  using stack_symbol_type = StackSymbol;
  using State = std::string;
  /// nullopt is the empty input (epsilon move).
  using InputOrEpsilon = std::optional<Input>;
  using Key = std::tuple<State, InputOrEpsilon, StackSymbol>;

  struct Target {
    State state;
    std::vector<StackSymbol> push;

    friend bool operator==(const Target&, const Target&) = default;
    friend bool operator<(const Target& a, const Target& b) {
      return std::tie(a.state, a.push) < std::tie(b.state, b.push);
    }
  };

  using Transitions = std::map<Key, std::vector<Target>>;

  Pda(std::set<State> states, std::set<Input> input_alphabet,
      std::set<StackSymbol> stack_alphabet, Transitions transitions, State start_state,
      StackSymbol start_stack, std::set<State> accepting, std::set<StackSymbol> observable = {})
      : states_(std::move(states)),
        input_alphabet_(std::move(input_alphabet)),
        stack_alphabet_(std::move(stack_alphabet)),
        transitions_(std::move(transitions)),
        start_state_(std::move(start_state)),
        start_stack_(std::move(start_stack)),
        accepting_(std::move(accepting)),
        observable_(std::move(observable)) {
    if (stack_alphabet_.empty()) throw InvalidConstruction("stack alphabet is empty");
    if (!states_.contains(start_state_)) throw InvalidConstruction("start state not in K");
    if (!stack_alphabet_.contains(start_stack_)) {
      throw InvalidConstruction("start stack symbol not in stack alphabet");
    }
    if (!std::includes(states_.begin(), states_.end(), accepting_.begin(), accepting_.end())) {
      throw InvalidConstruction("accepting states are not a subset of K");
    }
    if (!std::includes(stack_alphabet_.begin(), stack_alphabet_.end(), observable_.begin(),
                       observable_.end())) {
      throw InvalidConstruction("observable symbols are not in the stack alphabet");
    }
    for (auto& [key, targets] : transitions_) {
      const auto& [q, a, z] = key;
      if (!states_.contains(q)) throw InvalidConstruction("transition from unknown state");
      if (a && !input_alphabet_.contains(*a)) {
        throw InvalidConstruction("transition reads a letter outside the input alphabet");
      }
      if (!stack_alphabet_.contains(z)) {
        throw InvalidConstruction("transition consults an unknown stack symbol");
      }
      for (const auto& t : targets) {
        if (!states_.contains(t.state)) throw InvalidConstruction("transition to unknown state");
        for (const auto& s : t.push) {
          if (!stack_alphabet_.contains(s)) {
            throw InvalidConstruction("transition pushes an unknown stack symbol");
          }
        }
      }
      // delta maps into a set of targets.
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
  }

  [[nodiscard]] const std::set<State>& states() const noexcept { return states_; }
  [[nodiscard]] const std::set<Input>& input_alphabet() const noexcept { return input_alphabet_; }
  [[nodiscard]] const std::set<StackSymbol>& stack_alphabet() const noexcept {
    return stack_alphabet_;
  }
  [[nodiscard]] const Transitions& transitions() const noexcept { return transitions_; }
  [[nodiscard]] const State& start_state() const noexcept { return start_state_; }
  [[nodiscard]] const StackSymbol& start_stack() const noexcept { return start_stack_; }
  [[nodiscard]] const std::set<State>& accepting() const noexcept { return accepting_; }
  [[nodiscard]] const std::set<StackSymbol>& observable() const noexcept { return observable_; }

  [[nodiscard]] bool is_observable(const StackSymbol& s) const { return observable_.contains(s); }

  /// delta(q, a, z); empty when undefined.
  [[nodiscard]] const std::vector<Target>& targets(const State& q, const InputOrEpsilon& a,
                                                   const StackSymbol& z) const {
    static const std::vector<Target> none;
    auto it = transitions_.find(Key{q, a, z});
    return it == transitions_.end() ? none : it->second;
  }

 private:
  std::set<State> states_;
  std::set<Input> input_alphabet_;
  std::set<StackSymbol> stack_alphabet_;
  Transitions transitions_;
  State start_state_;
  StackSymbol start_stack_;
  std::set<State> accepting_;
  std::set<StackSymbol> observable_;
};

/// Instantaneous description <state, remaining input, stack>.
template <class P>
struct Configuration {
  typename P::State state;
  std::deque<typename P::input_type> input;
  /// Front is the top of the stack.
  std::deque<typename P::stack_symbol_type> stack;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend bool operator<(const Configuration& a, const Configuration& b) {
    return std::tie(a.state, a.input, a.stack) < std::tie(b.state, b.input, b.stack);
  }
};

template <class P>
[[nodiscard]] Configuration<P> initial_configuration(const P& pda,
                                                     std::vector<typename P::input_type> input) {
  return {pda.start_state(), {input.begin(), input.end()}, {pda.start_stack()}};
}

namespace detail {

template <class P>
Configuration<P> apply(const Configuration<P>& from, const typename P::Target& target,
                       bool consume) {
  Configuration<P> to{target.state, from.input, from.stack};
  if (consume) to.input.pop_front();
  to.stack.pop_front();
  to.stack.insert(to.stack.begin(), target.push.begin(), target.push.end());
  return to;
}

}  // namespace detail

/// All successors of `config`: reading the next input letter, and epsilon
/// moves. An empty result means the configuration is stuck.
template <class P>
[[nodiscard]] std::vector<Configuration<P>> step(const P& pda, const Configuration<P>& config) {
  if (config.stack.empty()) {
    throw EmptyStack("configuration has an empty stack and no successor");
  }
  const auto& top = config.stack.front();
  std::vector<Configuration<P>> out;
  if (!config.input.empty()) {
    for (const auto& t : pda.targets(config.state, config.input.front(), top)) {
      out.push_back(detail::apply(config, t, true));
    }
  }
  for (const auto& t : pda.targets(config.state, std::nullopt, top)) {
    out.push_back(detail::apply(config, t, false));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

enum class Violation {
  /// Both an input move and an epsilon move are defined.
  InputAndEpsilon,
  MultipleInputMoves,
  MultipleEpsilonMoves,
};

template <class P>
struct DeterminismReport {
  struct Witness {
    typename P::State state;
    typename P::stack_symbol_type top;
    Violation violation;
  };

  bool deterministic = true;
  std::optional<Witness> witness;
  /// (q, z) pairs with no moves at all; both conditions hold.
  std::size_t idle_pairs = 0;
  /// Pairs satisfying only the input-driven rule: at most one move per letter, no epsilon move.
  std::size_t input_driven_pairs = 0;
  /// Pairs satisfying only the epsilon-driven rule: no letter moves, at most one epsilon move.
  std::size_t epsilon_driven_pairs = 0;
};

template <class P>
[[nodiscard]] DeterminismReport<P> is_deterministic(const P& pda) {
  DeterminismReport<P> report;
  for (const auto& q : pda.states()) {
    for (const auto& z : pda.stack_alphabet()) {
      const std::size_t eps = pda.targets(q, std::nullopt, z).size();
      std::size_t max_letter = 0;
      for (const auto& a : pda.input_alphabet()) {
        max_letter = std::max(max_letter, pda.targets(q, a, z).size());
      }
      const bool cond1 = max_letter <= 1 && eps == 0;
      const bool cond2 = max_letter == 0 && eps <= 1;
      if (cond1 && cond2) {
        ++report.idle_pairs;
      } else if (cond1) {
        ++report.input_driven_pairs;
      } else if (cond2) {
        ++report.epsilon_driven_pairs;
      } else if (report.deterministic) {
        report.deterministic = false;
        Violation v = eps > 0 && max_letter > 0 ? Violation::InputAndEpsilon
                      : eps > 1                 ? Violation::MultipleEpsilonMoves
                                                : Violation::MultipleInputMoves;
        report.witness = typename DeterminismReport<P>::Witness{q, z, v};
      }
    }
  }
  return report;
}

/// Stack symbols that can reach the top of the stack from the start
/// configuration but have no transition in any state.
template <class P>
[[nodiscard]] std::vector<typename P::stack_symbol_type> dead_end_symbols(const P& pda) {
  using S = typename P::stack_symbol_type;
  std::set<S> handled;
  std::multimap<S, const typename P::Target*> pushes;
  for (const auto& [key, targets] : pda.transitions()) {
    const auto& z = std::get<2>(key);
    if (!targets.empty()) handled.insert(z);
    for (const auto& t : targets) pushes.emplace(z, &t);
  }
  std::set<S> reachable{pda.start_stack()};
  std::vector<S> work{pda.start_stack()};
  while (!work.empty()) {
    S z = work.back();
    work.pop_back();
    auto [lo, hi] = pushes.equal_range(z);
    for (auto it = lo; it != hi; ++it) {
      for (const auto& s : it->second->push) {
        if (reachable.insert(s).second) work.push_back(s);
      }
    }
  }
  std::vector<S> out;
  for (const auto& s : reachable) {
    if (!handled.contains(s)) out.push_back(s);
  }
  return out;
}

/// Follows the unique transition chain of a deterministic automaton one
/// move at a time.
template <class P>
class Runner {
 public:
  using Symbol = typename P::stack_symbol_type;

  Runner(const P& pda, std::vector<typename P::input_type> input)
      : pda_(&pda), config_(initial_configuration(pda, std::move(input))) {
    if (auto report = is_deterministic(pda); !report.deterministic) {
      throw NondeterministicPda("automaton violates both determinism conditions");
    }
  }

  [[nodiscard]] const Configuration<P>& configuration() const noexcept { return config_; }

  /// Input exhausted and stack empty.
  [[nodiscard]] bool halted() const noexcept {
    return config_.input.empty() && config_.stack.empty();
  }

  /// Takes one transition. Observable tops are reported to `observer` as
  /// they are consulted. Returns false if no transition applies.
  template <class Observer>
  bool advance(Observer&& observer) {
    if (config_.stack.empty()) return false;
    const auto& top = config_.stack.front();
    const typename P::Target* target = nullptr;
    bool consume = false;
    if (!config_.input.empty()) {
      const auto& on_letter = pda_->targets(config_.state, config_.input.front(), top);
      if (!on_letter.empty()) {
        target = &on_letter.front();
        consume = true;
      }
    }
    if (target == nullptr) {
      const auto& on_eps = pda_->targets(config_.state, std::nullopt, top);
      if (on_eps.empty()) return false;
      target = &on_eps.front();
    }
    if (pda_->is_observable(top)) std::invoke(observer, top);
    config_.state = target->state;
    if (consume) config_.input.pop_front();
    config_.stack.pop_front();
    config_.stack.insert(config_.stack.begin(), target->push.begin(), target->push.end());
    return true;
  }

 private:
  const P* pda_;
  Configuration<P> config_;
};

enum class Outcome { EmptyStackHalt, AcceptingStateHalt, Stuck, StepLimit };

template <class P>
struct RunTrace {
  std::size_t steps = 0;
  std::vector<typename P::stack_symbol_type> emitted;
  Outcome outcome = Outcome::Stuck;
  std::size_t max_stack_depth = 0;
};

/// Runs a deterministic automaton from <q0, input, z0> until the input and
/// the stack are both empty, no move applies, or `step_limit` moves were taken.
template <class P, class Observer>
RunTrace<P> run_to_empty_stack(const P& pda, std::vector<typename P::input_type> input,
                               Observer&& observer, std::size_t step_limit) {
  Runner<P> runner(pda, std::move(input));
  RunTrace<P> trace;
  trace.max_stack_depth = runner.configuration().stack.size();
  auto record = [&](const typename P::stack_symbol_type& s) {
    trace.emitted.push_back(s);
    std::invoke(observer, s);
  };
  for (;;) {
    if (runner.halted()) {
      trace.outcome = Outcome::EmptyStackHalt;
      break;
    }
    if (trace.steps == step_limit) {
      trace.outcome = Outcome::StepLimit;
      break;
    }
    if (!runner.advance(record)) {
      trace.outcome = Outcome::Stuck;
      break;
    }
    ++trace.steps;
    trace.max_stack_depth = std::max(trace.max_stack_depth, runner.configuration().stack.size());
  }
  return trace;
}

struct FinalStateResult {
  bool accepted = false;
  /// The step limit cut the search off before it was exhausted.
  bool inconclusive = false;
};

/// Breadth-first search over configurations for one with exhausted input in
/// an accepting state.
template <class P>
[[nodiscard]] FinalStateResult accepts_by_final_state(
    const P& pda, const std::vector<typename P::input_type>& input, std::size_t step_limit) {
  if (pda.accepting().empty()) return {};

  auto accepts = [&](const Configuration<P>& c) {
    return c.input.empty() && pda.accepting().contains(c.state);
  };
  std::set<Configuration<P>> seen;
  std::vector<Configuration<P>> frontier{initial_configuration(pda, input)};
  seen.insert(frontier.front());
  if (accepts(frontier.front())) return {true, false};

  for (std::size_t depth = 0; depth < step_limit && !frontier.empty(); ++depth) {
    std::vector<Configuration<P>> next;
    for (const auto& c : frontier) {
      if (c.stack.empty()) continue;
      for (auto& succ : step(pda, c)) {
        if (accepts(succ)) return {true, false};
        if (seen.insert(succ).second) next.push_back(std::move(succ));
      }
    }
    frontier = std::move(next);
  }
  const bool more = std::any_of(frontier.begin(), frontier.end(),
                                [](const auto& c) { return !c.stack.empty(); });
  return {false, more};
}

}  // namespace hanoigram::pda
