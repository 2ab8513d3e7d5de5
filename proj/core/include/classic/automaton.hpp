#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "classic/concept.hpp"
#include "classic/description_graph.hpp"

namespace classic {

using State = std::size_t;

/// Nondeterministic automaton over attribute names, without epsilon moves.
/// States are 0 .. state_count-1.
struct PathAutomaton {
  std::size_t state_count = 1;
  std::set<std::string> alphabet;
  std::set<std::tuple<State, std::string, State>> transitions;
  State initial = 0;
  std::set<State> accepting;
  /// Optional display names, indexed by state.
  std::vector<std::string> state_names;

  bool accepts(const AttrChain& word) const;
};

/// Labels of the paths from `from` to `to` in g. Only edges whose attribute
/// is in `alphabet` are used; the alphabet then is exactly `alphabet`. With
/// no alphabet given, all edge attributes of g are used.
PathAutomaton path_automaton(const DescriptionGraph& g, NodeId from, NodeId to,
                             const std::optional<std::set<std::string>>& alphabet = std::nullopt);

/// Accepts L(a1) and L(a2) intersected with the words whose first letter is
/// in `first_letters`. Never accepts the empty word.
PathAutomaton intersect_and_restrict(const PathAutomaton& a1, const PathAutomaton& a2,
                                     const std::set<std::string>& first_letters);

/// Keeps only states that are reachable and co-reachable. If none remains the
/// result has one non-accepting state.
PathAutomaton trim(const PathAutomaton& a);

bool is_empty(const PathAutomaton& a);
bool is_infinite(const PathAutomaton& a);

/// All accepted words in lexicographic order. Throws std::invalid_argument on
/// an infinite language.
std::vector<AttrChain> enumerate_finite(const PathAutomaton& a);

/// Accepted words of length at most `max_length`, shortest first, then
/// lexicographic.
std::vector<AttrChain> words_up_to(const PathAutomaton& a, std::size_t max_length);

/// prefix loop^k suffix is accepted for every k >= 0; loop is non-empty.
struct Pump {
  AttrChain prefix;
  AttrChain loop;
  AttrChain suffix;
};

/// A pump if the language is infinite.
std::optional<Pump> find_pump(const PathAutomaton& a);

std::string to_dot(const PathAutomaton& a, const std::string& name = "A");

}  // namespace classic
