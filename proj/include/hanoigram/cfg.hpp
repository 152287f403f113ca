#pragma once

// Context-free grammars over opaque terminal/nonterminal payloads, with a
// leftmost derivation engine (flat, list-backed and streaming variants) and a
// bounded breadth-first language enumerator that explores every rewrite
// position.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <list>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "hanoigram/errors.hpp"

namespace hanoigram::cfg {

template <class T>
concept Payload = std::totally_ordered<T> && requires(const T& t) {
  { std::hash<T>{}(t) } -> std::convertible_to<std::size_t>;
};

template <Payload Terminal, Payload Nonterminal>
class Grammar {
 public:
  using terminal_type = Terminal;
  using nonterminal_type = Nonterminal;
  /// The alternative index is the tag: 0 = terminal, 1 = nonterminal.
  using Symbol = std::variant<Terminal, Nonterminal>;
  /// A word over terminals and nonterminals; empty is epsilon.
  using SententialForm = std::vector<Symbol>;
  using Word = std::vector<Terminal>;

  struct Production {
    Nonterminal lhs;
    SententialForm rhs;

    friend bool operator==(const Production&, const Production&) = default;
  };

  Grammar(std::vector<Terminal> terminals, std::vector<Nonterminal> nonterminals,
          Nonterminal start, std::vector<Production> productions)
      : terminals_(terminals.begin(), terminals.end()),
        nonterminals_(nonterminals.begin(), nonterminals.end()),
        start_(std::move(start)),
        productions_(std::move(productions)) {
    if (!nonterminals_.contains(start_)) {
      throw InvalidConstruction("grammar start symbol is not a nonterminal");
    }
    for (std::size_t i = 0; i < productions_.size(); ++i) {
      const auto& p = productions_[i];
      if (!nonterminals_.contains(p.lhs)) {
        throw InvalidConstruction("production lhs is not a declared nonterminal");
      }
      for (const auto& s : p.rhs) {
        if (!declares(s)) {
          throw InvalidConstruction("production rhs uses an undeclared symbol");
        }
      }
      index_[p.lhs].push_back(i);
    }
  }

  [[nodiscard]] const std::set<Terminal>& terminals() const noexcept { return terminals_; }
  [[nodiscard]] const std::set<Nonterminal>& nonterminals() const noexcept {
    return nonterminals_;
  }
  [[nodiscard]] const Nonterminal& start() const noexcept { return start_; }
  [[nodiscard]] const std::vector<Production>& productions() const noexcept {
    return productions_;
  }

  /// Productions with the given lhs, in insertion order.
  [[nodiscard]] std::vector<const Production*> productions_for(const Nonterminal& lhs) const {
    std::vector<const Production*> out;
    if (auto it = index_.find(lhs); it != index_.end()) {
      for (std::size_t i : it->second) out.push_back(&productions_[i]);
    }
    return out;
  }

  /// First production for lhs in insertion order.
  [[nodiscard]] const Production& first_production(const Nonterminal& lhs) const {
    auto it = index_.find(lhs);
    if (it == index_.end() || it->second.empty()) {
      throw NoApplicableProduction("no production rewrites the leftmost nonterminal");
    }
    return productions_[it->second.front()];
  }

  [[nodiscard]] bool declares(const Symbol& s) const {
    if (const auto* t = std::get_if<Terminal>(&s)) return terminals_.contains(*t);
    return nonterminals_.contains(std::get<Nonterminal>(s));
  }

 private:
  std::set<Terminal> terminals_;
  std::set<Nonterminal> nonterminals_;
  Nonterminal start_;
  std::vector<Production> productions_;
  std::unordered_map<Nonterminal, std::vector<std::size_t>> index_;
};

template <class Symbol>
[[nodiscard]] constexpr bool is_terminal(const Symbol& s) noexcept {
  return s.index() == 0;
}

template <class Symbol>
[[nodiscard]] constexpr bool is_nonterminal(const Symbol& s) noexcept {
  return s.index() == 1;
}

/// Number of nonterminals in a sentential form.
template <class Form>
[[nodiscard]] std::size_t count_nonterminals(const Form& form) {
  return static_cast<std::size_t>(
      std::count_if(form.begin(), form.end(), [](const auto& s) { return is_nonterminal(s); }));
}

/// One direct derivation at the leftmost nonterminal using its first
/// production. Returns nullopt when the form is already terminal.
template <class G>
[[nodiscard]] std::optional<typename G::SententialForm> derive_step(
    const G& grammar, const typename G::SententialForm& form) {
  using NT = typename G::nonterminal_type;
  auto pos = std::find_if(form.begin(), form.end(),
                          [](const auto& s) { return is_nonterminal(s); });
  if (pos == form.end()) return std::nullopt;

  const auto& production = grammar.first_production(std::get<NT>(*pos));
  typename G::SententialForm out;
  out.reserve(form.size() - 1 + production.rhs.size());
  out.insert(out.end(), form.begin(), pos);
  out.insert(out.end(), production.rhs.begin(), production.rhs.end());
  out.insert(out.end(), std::next(pos), form.end());
  return out;
}

template <class Terminal>
struct Derivation {
  std::vector<Terminal> word;
  /// Number of direct derivations performed.
  std::size_t length = 0;
};

/// Leftmost derivation from the start symbol to a terminal word.
///
/// The form is kept in a linked list so each rewrite splices in place; the
/// cursor only moves forward because everything left of the leftmost
/// nonterminal is terminal.
template <class G>
[[nodiscard]] Derivation<typename G::terminal_type> derive_full(const G& grammar,
                                                                std::size_t step_limit) {
  using T = typename G::terminal_type;
  using NT = typename G::nonterminal_type;

  std::list<typename G::Symbol> form{typename G::Symbol{grammar.start()}};
  auto cursor = form.begin();
  std::size_t steps = 0;
  for (;;) {
    cursor = std::find_if(cursor, form.end(), [](const auto& s) { return is_nonterminal(s); });
    if (cursor == form.end()) break;
    if (steps == step_limit) {
      throw StepLimitExceeded("derivation did not terminate within the step limit");
    }
    const auto& rhs = grammar.first_production(std::get<NT>(*cursor)).rhs;
    auto after = std::next(cursor);
    auto first = form.insert(cursor, rhs.begin(), rhs.end());
    form.erase(cursor);
    cursor = rhs.empty() ? after : first;
    ++steps;
  }

  Derivation<T> out;
  out.length = steps;
  out.word.reserve(form.size());
  for (const auto& s : form) out.word.push_back(std::get<T>(s));
  return out;
}

/// Leftmost derivation that hands each terminal to `sink` as soon as it
/// becomes the leftmost symbol. Memory is bounded by the pending suffix, not
/// the word length. Returns the number of terminals emitted.
template <class G, class Sink>
  requires std::invocable<Sink&, const typename G::terminal_type&>
std::size_t derive_streaming(const G& grammar, Sink&& sink, std::size_t step_limit) {
  using T = typename G::terminal_type;
  using NT = typename G::nonterminal_type;

  // Pending suffix of the sentential form, leftmost symbol at the back.
  std::vector<typename G::Symbol> pending{typename G::Symbol{grammar.start()}};
  std::size_t steps = 0;
  std::size_t emitted = 0;
  while (!pending.empty()) {
    auto top = std::move(pending.back());
    pending.pop_back();
    if (const auto* t = std::get_if<T>(&top)) {
      std::invoke(sink, *t);
      ++emitted;
      continue;
    }
    if (steps == step_limit) {
      throw StepLimitExceeded("derivation did not terminate within the step limit");
    }
    const auto& rhs = grammar.first_production(std::get<NT>(top)).rhs;
    pending.insert(pending.end(), rhs.rbegin(), rhs.rend());
    ++steps;
  }
  return emitted;
}

/// Every terminal word reachable from the start symbol in at most
/// `max_derivation_length` direct derivations, rewriting at any position with
/// any applicable production.
template <class G>
[[nodiscard]] std::set<typename G::Word> enumerate_language(const G& grammar,
                                                            std::size_t max_derivation_length) {
  using NT = typename G::nonterminal_type;
  using Form = typename G::SententialForm;

  std::set<typename G::Word> language;
  std::set<Form> seen;
  std::vector<Form> frontier{Form{typename G::Symbol{grammar.start()}}};
  seen.insert(frontier.front());

  for (std::size_t depth = 0; depth < max_derivation_length && !frontier.empty(); ++depth) {
    std::vector<Form> next;
    for (const auto& form : frontier) {
      for (std::size_t i = 0; i < form.size(); ++i) {
        if (!is_nonterminal(form[i])) continue;
        for (const auto* p : grammar.productions_for(std::get<NT>(form[i]))) {
          Form rewritten;
          rewritten.reserve(form.size() - 1 + p->rhs.size());
          rewritten.insert(rewritten.end(), form.begin(), form.begin() + i);
          rewritten.insert(rewritten.end(), p->rhs.begin(), p->rhs.end());
          rewritten.insert(rewritten.end(), form.begin() + i + 1, form.end());
          if (!seen.insert(rewritten).second) continue;
          if (count_nonterminals(rewritten) == 0) {
            typename G::Word word;
            word.reserve(rewritten.size());
            for (const auto& s : rewritten) word.push_back(std::get<0>(s));
            language.insert(std::move(word));
          } else {
            next.push_back(std::move(rewritten));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return language;
}

}  // namespace hanoigram::cfg
