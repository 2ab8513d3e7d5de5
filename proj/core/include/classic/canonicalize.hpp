#pragma once

#include "classic/concept.hpp"
#include "classic/description_graph.hpp"

namespace classic {

/// Applies the normalization rules until none is applicable. The result is
/// deterministic: per node at most one a-edge or r-edge with a given name.
///
/// Nested restriction graphs are normalized before their parent. An
/// incoherent node inside a nested graph turns only that nested graph into
/// G(BOTTOM); the parent r-edge then gets max 0.
///
/// Throws InternalError if the step budget runs out.
DescriptionGraph canonicalize(const DescriptionGraph& g);

/// True iff no normalization rule applies anywhere in `g`.
bool is_canonical(const DescriptionGraph& g);

/// canonicalize(concept_to_graph(c))
DescriptionGraph canonical_graph(const Concept& c);

}  // namespace classic
