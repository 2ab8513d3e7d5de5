#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "classic/concept.hpp"
#include "classic/description_graph.hpp"
#include "classic/interpretation.hpp"

namespace classic::testing {

/// Parses `text` against the declarations in `preamble` (one concept).
Concept parse_with(const std::string& preamble, const std::string& text);

std::string lemon_preamble();
Concept lemon();
Concept car();
/// Canonical graph of lemon(), built by hand: root {Car} with the
/// model/madeBy diamond carrying Model and Manufacturer, and a repairs r-edge
/// [10, inf] to RepairReport.
DescriptionGraph lemon_graph();

/// a|b  and  a|ac & b|bc & ad|bd  over attributes a b c d: no lcs exists
/// for them under total attributes.
Concept merged_ab();
Concept looping_ab();

/// The i-th (1-based) of n concepts whose partial lcs needs 2^n - 1 nodes,
/// over attributes a1 .. an.
Concept parity_concept(int i, int n);
std::string parity_attribute(int i);

/// a|b and the k-th concept whose total lcs with it needs 2^k nodes.
Concept tree_left();
Concept tree_right(int k);

/// Every word over `alphabet` of length at most `max_length`, shortest first.
std::vector<AttrChain> all_words(const std::vector<std::string>& alphabet, std::size_t max_length);

struct RandomSignature {
  std::vector<std::string> concepts;
  std::vector<std::string> roles;
  std::vector<std::string> attributes;
};

/// Random concepts up to a nesting depth, over a fixed small signature.
class ConceptGenerator {
public:
  ConceptGenerator(RandomSignature sig, std::uint64_t seed) : sig_(std::move(sig)), rng_(seed) {}

  Concept concept_of_depth(int depth);
  /// Conjunctions of 1..max_conjuncts same-as equalities with chains of
  /// length at most max_chain.
  Concept same_as_concept(int max_conjuncts, int max_chain);
  AttrChain chain(int max_length);

  std::mt19937_64& rng() { return rng_; }
  const RandomSignature& signature() const { return sig_; }

private:
  Concept leaf();
  RandomSignature sig_;
  std::mt19937_64 rng_;
};

/// A uniformly random interpretation of the given symbols.
Interpretation random_interpretation(const Symbols& symbols, std::uint32_t domain_size, Semantics mode,
                                     std::mt19937_64& rng);

}  // namespace classic::testing
