#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "classic/automaton.hpp"
#include "classic/concept.hpp"
#include "classic/description_graph.hpp"

namespace classic {

/// Which operand owns the nodes h1, h2, e1, e2 and f; p0 belongs to the other.
enum class Side { First, Second };

/// Two product nodes (h1, p0) and (h2, p0) whose h-components have paths to
/// e1 and e2, where e1 and e2 are distinct a-predecessors of f. Node ids
/// refer to the canonical graphs of the two operands.
struct SameAsConfiguration {
  Side side = Side::First;
  NodeId h1 = 0, h2 = 0, p0 = 0, e1 = 0, e2 = 0, f = 0;
  std::string attribute;
};

/// Evidence that no least common subsumer exists in the same-as fragment:
/// a configuration whose language, restricted to words starting with
/// `first_letter`, is infinite.
struct NonExistenceWitness {
  SameAsConfiguration configuration;
  std::string first_letter;
  Pump pump;
  /// Shortest accepted words, shortest first.
  std::vector<AttrChain> sample_words;
  /// Configuration nodes as shortest access words from their graph's root.
  std::map<std::string, AttrChain> access;
  /// Access words of (h1, p0) and (h2, p0) in the product. For every word x
  /// of the language both operands are subsumed by
  /// first_path x a | second_path x a.
  AttrChain first_path;
  AttrChain second_path;

  std::string describe() const;
};

struct LcsExistenceReport {
  bool exists = true;
  std::size_t configurations = 0;
  std::optional<NonExistenceWitness> witness;
};

class LcsNotExistError : public std::runtime_error {
public:
  explicit LcsNotExistError(NonExistenceWitness w);
  const NonExistenceWitness& witness() const { return witness_; }

private:
  NonExistenceWitness witness_;
};

struct LcsTotalHooks {
  /// Called with every configuration's automaton, before trimming.
  std::function<void(const SameAsConfiguration&, const PathAutomaton&)> on_automaton;
};

/// Existence of the lcs of two same-as concepts under total attributes.
/// Throws SemanticModeError outside the same-as fragment.
LcsExistenceReport check_lcs_exists(const Concept& c, const Concept& d, const LcsTotalHooks& hooks = {});
bool lcs_exists(const Concept& c, const Concept& d);

/// Canonical graph of the lcs under total attributes. Throws
/// LcsNotExistError if there is none.
DescriptionGraph lcs_total_graph(const Concept& c, const Concept& d, const LcsTotalHooks& hooks = {});
Concept lcs_total(const Concept& c, const Concept& d, const LcsTotalHooks& hooks = {});

}  // namespace classic
