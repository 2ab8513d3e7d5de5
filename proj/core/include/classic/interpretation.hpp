#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "classic/common.hpp"
#include "classic/concept.hpp"
#include "classic/description_graph.hpp"

namespace classic {

using Element = std::uint32_t;

/// A finite interpretation over the domain {0, ..., domain_size - 1}.
/// Identifiers missing from the maps have empty extensions (attributes are
/// then undefined everywhere).
struct Interpretation {
  std::uint32_t domain_size = 1;
  Semantics mode = Semantics::Partial;
  std::map<std::string, std::set<Element>> concepts;
  std::map<std::string, std::set<std::pair<Element, Element>>> roles;
  std::map<std::string, std::map<Element, Element>> attributes;

  std::optional<Element> image(const std::string& attribute, Element x) const;
  std::optional<Element> image(const AttrChain& chain, Element x) const;
  std::vector<Element> successors(const std::string& role, Element x) const;

  /// Elements in range; in total mode every listed attribute is defined
  /// everywhere.
  bool valid() const;
  std::string describe() const;
};

bool eval_concept(const Concept& c, const Interpretation& interp, Element x);

/// Membership of `x` in the extension of `g`: some assignment of domain
/// elements to nodes maps the root to `x`, every node into its label and
/// every a-edge onto the attribute function.
bool eval_graph(const DescriptionGraph& g, const Interpretation& interp, Element x);

struct Countermodel {
  Interpretation interpretation;
  Element element;
};

struct CountermodelOptions {
  std::uint32_t max_domain = 3;
  Semantics mode = Semantics::Partial;
  /// Stop after this many candidate interpretations; 0 means no limit.
  std::uint64_t max_candidates = 0;
};

/// First interpretation (domain sizes ascending, extension tables in
/// lexicographic order) with an element in c but not in d. Only symbols of c
/// and d are interpreted. Absence of a result is not a proof of subsumption.
/// max_domain must be between 1 and 8.
std::optional<Countermodel> find_countermodel(const Concept& c, const Concept& d, const CountermodelOptions& options);

std::optional<Countermodel> find_countermodel(const Concept& c, const Concept& d, std::uint32_t max_domain,
                                              Semantics mode);

}  // namespace classic
