#pragma once

#include <vector>

#include "classic/concept.hpp"
#include "classic/description_graph.hpp"

namespace classic {

/// Product of two description graphs, restricted to pairs reachable from the
/// root pair and relabelled with fresh node ids. Not canonicalized.
///
/// A pair node with one incoherent component takes the other component's
/// label. A whole G(BOTTOM) operand yields a copy of the other operand, so
/// that its a-edges survive as well.
DescriptionGraph product(const DescriptionGraph& g1, const DescriptionGraph& g2);

/// Canonical graph of the least common subsumer under partial attributes.
DescriptionGraph lcs_graph(const Concept& c, const Concept& d);
DescriptionGraph lcs_graph(const std::vector<Concept>& cs);

Concept lcs2(const Concept& c, const Concept& d);

/// Left fold of lcs2. `cs` must not be empty.
Concept lcs_n(const std::vector<Concept>& cs);

}  // namespace classic
