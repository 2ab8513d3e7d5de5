#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace classic {

/// A sequence of attribute names; the empty chain is epsilon.
using AttrChain = std::vector<std::string>;

/// Role that every signature carries implicitly; BOTTOM desugars to
/// (and (at-least 1 _bottom) (at-most 0 _bottom)).
inline constexpr std::string_view kBottomRole = "_bottom";

enum class SymbolKind { Concept, Role, Attribute, Undeclared };

/// Declared identifiers, partitioned into concept, role and attribute names.
class Signature {
public:
  Signature();

  void add_concept(const std::string& id);
  void add_role(const std::string& id);
  void add_attribute(const std::string& id);

  SymbolKind kind_of(const std::string& id) const;
  bool is_attribute(const std::string& id) const { return attributes_.count(id) != 0; }
  bool is_role(const std::string& id) const { return roles_.count(id) != 0; }

  const std::set<std::string>& concepts() const { return concepts_; }
  const std::set<std::string>& roles() const { return roles_; }
  const std::set<std::string>& attributes() const { return attributes_; }

private:
  void check_fresh(const std::string& id) const;

  std::set<std::string> concepts_;
  std::set<std::string> roles_;
  std::set<std::string> attributes_;
};

/// A CLASSIC- concept description.
///
/// Value type; children are held by value. `symbol()` is the concept name of
/// a Name term, the role of a number restriction, or the role-or-attribute of
/// a value restriction.
class Concept {
public:
  enum class Kind { Top, Name, AtLeast, AtMost, And, All, SameAs };

  static Concept top();
  static Concept name(std::string id);
  static Concept at_least(std::uint32_t n, std::string role);
  static Concept at_most(std::uint32_t n, std::string role);
  static Concept conj(std::vector<Concept> parts);
  static Concept all(std::string role, Concept body);
  static Concept all_attribute(std::string attribute, Concept body);
  static Concept same_as(AttrChain lhs, AttrChain rhs);
  /// (and (at-least 1 _bottom) (at-most 0 _bottom))
  static Concept bottom();

  Kind kind() const { return kind_; }
  const std::string& symbol() const { return symbol_; }
  /// For All terms: whether the restricted name is an attribute.
  bool on_attribute() const { return on_attribute_; }
  std::uint32_t count() const { return count_; }
  const std::vector<Concept>& parts() const { return parts_; }
  const Concept& body() const { return parts_.front(); }
  const AttrChain& lhs() const { return lhs_; }
  const AttrChain& rhs() const { return rhs_; }

  bool is_bottom_sugar() const;
  /// Number of constructor occurrences plus chain lengths.
  std::size_t size() const;

  friend bool operator==(const Concept&, const Concept&) = default;

private:
  Concept() = default;

  Kind kind_ = Kind::Top;
  std::string symbol_;
  std::uint32_t count_ = 0;
  bool on_attribute_ = false;
  std::vector<Concept> parts_;
  AttrChain lhs_;
  AttrChain rhs_;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses a single concept; identifiers must be declared in `sig`.
/// Number restrictions on attributes are rewritten into equivalent
/// attribute-free terms.
Concept parse_concept(std::string_view text, const Signature& sig);

/// A concept file: '@attribute', '@role', '@concept' preamble lines followed
/// by any number of concepts.
struct ConceptFile {
  Signature signature;
  std::vector<Concept> concepts;
};

ConceptFile parse_concept_file(std::string_view text);

std::string print_concept(const Concept& c);
std::string print_chain(const AttrChain& chain);

/// True iff `c` is built from conjunction and same-as only. TOP counts as
/// the empty conjunction.
bool in_S_fragment(const Concept& c);

/// Collects the identifiers occurring in `c`, split by kind of position.
struct Symbols {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> attributes;
};
void collect_symbols(const Concept& c, Symbols& out);

}  // namespace classic
