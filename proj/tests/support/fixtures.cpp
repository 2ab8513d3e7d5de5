#include "fixtures.hpp"

#include <stdexcept>

namespace classic::testing {

Concept parse_with(const std::string& preamble, const std::string& text) {
  ConceptFile f = parse_concept_file(preamble + "\n" + text);
  if (f.concepts.size() != 1) throw std::invalid_argument("expected exactly one concept");
  return f.concepts.front();
}

std::string lemon_preamble() {
  return "@concept Car Model Manufacturer RepairReport\n@role repairs\n@attribute model madeBy\n";
}

Concept lemon() {
  return parse_with(lemon_preamble(),
                    "(and Car (all model Model) (all madeBy Manufacturer)"
                    " (same-as (madeBy) (model madeBy))"
                    " (at-least 10 repairs) (all repairs RepairReport))");
}

Concept car() { return parse_with(lemon_preamble(), "Car"); }

namespace {
DescriptionGraph single(std::set<std::string> atoms) {
  DescriptionGraph g;
  g.label(g.root()).atoms = std::move(atoms);
  return g;
}
}  // namespace

DescriptionGraph lemon_graph() {
  DescriptionGraph g = single({"TOP", "Car"});
  const NodeId model = g.add_node(NodeLabel{false, {"TOP", "Model"}, {}});
  const NodeId maker = g.add_node(NodeLabel{false, {"TOP", "Manufacturer"}, {}});
  g.add_edge(g.root(), "model", model);
  g.add_edge(model, "madeBy", maker);
  g.add_edge(g.root(), "madeBy", maker);
  g.label(g.root()).redges.push_back(REdge{"repairs", false, 10, kUnbounded, single({"TOP", "RepairReport"})});
  return g;
}

namespace {
const std::string kAbcd = "@attribute a b c d\n";
}

Concept merged_ab() { return parse_with(kAbcd, "(same-as (a) (b))"); }

Concept looping_ab() { return parse_with(kAbcd, "(and (same-as (a) (a c)) (same-as (b) (b c)) (same-as (a d) (b d)))"); }

std::string parity_attribute(int i) { return "a" + std::to_string(i); }

Concept parity_concept(int i, int n) {
  std::vector<Concept> parts;
  const std::string ai = parity_attribute(i);
  for (int j = 1; j <= n; ++j)
    if (j != i) parts.push_back(Concept::same_as({}, {parity_attribute(j)}));
  for (int j = 1; j <= n; ++j)
    if (j != i) parts.push_back(Concept::same_as({ai}, {ai, parity_attribute(j)}));
  parts.push_back(Concept::same_as({}, {ai, ai}));
  return Concept::conj(std::move(parts));
}

Concept tree_left() { return Concept::same_as({"a"}, {"b"}); }

Concept tree_right(int k) {
  std::vector<Concept> parts;
  auto power = [](AttrChain w, const std::string& x, int n) {
    for (int i = 0; i < n; ++i) w.push_back(x);
    return w;
  };
  for (int i = 1; i <= k; ++i) parts.push_back(Concept::same_as(power({"a"}, "c", i), power({"a"}, "d", i)));
  for (int i = 1; i <= k; ++i) parts.push_back(Concept::same_as(power({"b"}, "c", i), power({"b"}, "d", i)));
  AttrChain l = power({"a"}, "c", k), r = power({"b"}, "c", k);
  l.push_back("a");
  r.push_back("a");
  parts.push_back(Concept::same_as(l, r));
  return Concept::conj(std::move(parts));
}

std::vector<AttrChain> all_words(const std::vector<std::string>& alphabet, std::size_t max_length) {
  std::vector<AttrChain> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& x : alphabet) {
        AttrChain w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

namespace {

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int roll(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

AttrChain ConceptGenerator::chain(int max_length) {
  AttrChain w;
  const int len = roll(rng_, 0, max_length);
  for (int i = 0; i < len; ++i) w.push_back(pick(sig_.attributes, rng_));
  return w;
}

Concept ConceptGenerator::leaf() {
  for (;;) {
    switch (roll(rng_, 0, 5)) {
      case 0: return Concept::top();
      case 1:
        if (!sig_.concepts.empty()) return Concept::name(pick(sig_.concepts, rng_));
        break;
      case 2:
        if (!sig_.roles.empty()) return Concept::at_least(static_cast<std::uint32_t>(roll(rng_, 0, 2)), pick(sig_.roles, rng_));
        break;
      case 3:
        if (!sig_.roles.empty()) return Concept::at_most(static_cast<std::uint32_t>(roll(rng_, 0, 2)), pick(sig_.roles, rng_));
        break;
      case 4:
        if (!sig_.attributes.empty()) return Concept::same_as(chain(2), chain(2));
        break;
      default:
        if (roll(rng_, 0, 7) == 0) return Concept::bottom();
        break;
    }
  }
}

Concept ConceptGenerator::concept_of_depth(int depth) {
  if (depth <= 0) return leaf();
  switch (roll(rng_, 0, 3)) {
    case 0: return leaf();
    case 1: {
      std::vector<Concept> parts;
      const int n = roll(rng_, 2, 3);
      for (int i = 0; i < n; ++i) parts.push_back(concept_of_depth(depth - 1));
      return Concept::conj(std::move(parts));
    }
    default: {
      const bool attr = !sig_.attributes.empty() && (sig_.roles.empty() || roll(rng_, 0, 1) == 0);
      if (attr) return Concept::all_attribute(pick(sig_.attributes, rng_), concept_of_depth(depth - 1));
      if (!sig_.roles.empty()) return Concept::all(pick(sig_.roles, rng_), concept_of_depth(depth - 1));
      return leaf();
    }
  }
}

Concept ConceptGenerator::same_as_concept(int max_conjuncts, int max_chain) {
  std::vector<Concept> parts;
  const int n = roll(rng_, 1, max_conjuncts);
  for (int i = 0; i < n; ++i) parts.push_back(Concept::same_as(chain(max_chain), chain(max_chain)));
  return parts.size() == 1 ? parts.front() : Concept::conj(std::move(parts));
}

Interpretation random_interpretation(const Symbols& symbols, std::uint32_t domain_size, Semantics mode,
                                     std::mt19937_64& rng) {
  Interpretation I;
  I.domain_size = domain_size;
  I.mode = mode;
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<Element> element(0, domain_size - 1);
  for (const auto& c : symbols.concepts) {
    auto& ext = I.concepts[c];
    for (Element x = 0; x < domain_size; ++x)
      if (coin(rng)) ext.insert(x);
  }
  for (const auto& r : symbols.roles) {
    auto& ext = I.roles[r];
    for (Element x = 0; x < domain_size; ++x)
      for (Element y = 0; y < domain_size; ++y)
        if (coin(rng)) ext.insert({x, y});
  }
  std::bernoulli_distribution defined(0.75);
  for (const auto& a : symbols.attributes) {
    auto& fn = I.attributes[a];
    for (Element x = 0; x < domain_size; ++x)
      if (mode == Semantics::Total || defined(rng)) fn[x] = element(rng);
  }
  return I;
}

}  // namespace classic::testing
