#pragma once

#include "classic/common.hpp"
#include "classic/concept.hpp"
#include "classic/description_graph.hpp"

namespace classic {

/// Structural check whether the concept `d` subsumes the graph `g` (partial
/// attributes). Sound for any graph; complete when `g` is canonical.
bool subsumes_graph(const Concept& d, const DescriptionGraph& g);

/// Same check under total attributes; `d` must be in the S fragment and `g`
/// an S-graph. A same-as holds if prefixes of both chains meet at a common
/// node and the remaining suffixes are equal.
bool subsumes_total_graph(const Concept& d, const DescriptionGraph& g);

/// c is subsumed by d under partial-attribute semantics.
bool subsumes(const Concept& c, const Concept& d);

/// c is subsumed by d under total-attribute semantics. Both must be in the
/// S fragment; otherwise SemanticModeError.
bool subsumes_total(const Concept& c, const Concept& d);

bool subsumes(const Concept& c, const Concept& d, Semantics mode);

bool is_inconsistent(const Concept& c);

bool equivalent(const Concept& c, const Concept& d, Semantics mode);

}  // namespace classic
