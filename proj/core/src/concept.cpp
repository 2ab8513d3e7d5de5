#include "classic/concept.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace classic {

// ---------------------------------------------------------------- Signature

Signature::Signature() { roles_.insert(std::string(kBottomRole)); }

void Signature::check_fresh(const std::string& id) const {
  if (kind_of(id) != SymbolKind::Undeclared)
    throw std::invalid_argument("identifier declared twice: " + id);
}

void Signature::add_concept(const std::string& id) {
  if (concepts_.count(id)) return;
  check_fresh(id);
  concepts_.insert(id);
}

void Signature::add_role(const std::string& id) {
  if (roles_.count(id)) return;
  check_fresh(id);
  roles_.insert(id);
}

void Signature::add_attribute(const std::string& id) {
  if (attributes_.count(id)) return;
  check_fresh(id);
  attributes_.insert(id);
}

SymbolKind Signature::kind_of(const std::string& id) const {
  if (concepts_.count(id)) return SymbolKind::Concept;
  if (roles_.count(id)) return SymbolKind::Role;
  if (attributes_.count(id)) return SymbolKind::Attribute;
  return SymbolKind::Undeclared;
}

// ------------------------------------------------------------------ Concept

Concept Concept::top() { return Concept(); }

Concept Concept::name(std::string id) {
  Concept c;
  c.kind_ = Kind::Name;
  c.symbol_ = std::move(id);
  return c;
}

Concept Concept::at_least(std::uint32_t n, std::string role) {
  Concept c;
  c.kind_ = Kind::AtLeast;
  c.count_ = n;
  c.symbol_ = std::move(role);
  return c;
}

Concept Concept::at_most(std::uint32_t n, std::string role) {
  Concept c;
  c.kind_ = Kind::AtMost;
  c.count_ = n;
  c.symbol_ = std::move(role);
  return c;
}

Concept Concept::conj(std::vector<Concept> parts) {
  if (parts.empty()) throw std::invalid_argument("empty conjunction");
  Concept c;
  c.kind_ = Kind::And;
  c.parts_ = std::move(parts);
  return c;
}

Concept Concept::all(std::string role, Concept body) {
  Concept c;
  c.kind_ = Kind::All;
  c.symbol_ = std::move(role);
  c.parts_.push_back(std::move(body));
  return c;
}

Concept Concept::all_attribute(std::string attribute, Concept body) {
  Concept c = all(std::move(attribute), std::move(body));
  c.on_attribute_ = true;
  return c;
}

Concept Concept::same_as(AttrChain lhs, AttrChain rhs) {
  Concept c;
  c.kind_ = Kind::SameAs;
  c.lhs_ = std::move(lhs);
  c.rhs_ = std::move(rhs);
  return c;
}

Concept Concept::bottom() {
  const std::string r(kBottomRole);
  return conj({at_least(1, r), at_most(0, r)});
}

bool Concept::is_bottom_sugar() const {
  return kind_ == Kind::And && parts_.size() == 2 && parts_[0] == at_least(1, std::string(kBottomRole)) &&
         parts_[1] == at_most(0, std::string(kBottomRole));
}

std::size_t Concept::size() const {
  std::size_t n = 1 + lhs_.size() + rhs_.size();
  for (const auto& p : parts_) n += p.size();
  return n;
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

// ------------------------------------------------------------------- Parser

namespace {

struct Token {
  enum class Type { LParen, RParen, Atom, End } type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
public:
  Lexer(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {}

  Token next() {
    skip_space();
    Token t{Token::Type::End, {}, line_, column_};
    if (pos_ >= text_.size()) return t;
    char ch = text_[pos_];
    if (ch == '(' || ch == ')') {
      t.type = ch == '(' ? Token::Type::LParen : Token::Type::RParen;
      t.text = std::string(1, ch);
      advance();
      return t;
    }
    t.type = Token::Type::Atom;
    while (pos_ < text_.size()) {
      ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')' || ch == ';') break;
      t.text.push_back(ch);
      advance();
    }
    return t;
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
};

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto first = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(first) || first == '_' || first >= 0x80)) return false;
  for (char ch : s) {
    auto u = static_cast<unsigned char>(ch);
    if (!(std::isalnum(u) || u == '_' || u == '-' || u == '.' || u == '\'' || u >= 0x80)) return false;
  }
  return true;
}

class Parser {
public:
  Parser(std::string_view text, const Signature& sig, std::size_t first_line)
      : lexer_(text, first_line), sig_(sig) {
    shift();
  }

  bool at_end() const { return cur_.type == Token::Type::End; }
  [[noreturn]] void fail_here(const std::string& msg) const { fail(cur_, msg); }

  Concept term() {
    if (cur_.type == Token::Type::Atom) {
      Token t = take();
      if (t.text == "TOP") return Concept::top();
      if (t.text == "BOTTOM") return Concept::bottom();
      require_identifier(t);
      if (sig_.kind_of(t.text) != SymbolKind::Concept)
        fail(t, "expected a concept name, got " + describe(t.text));
      return Concept::name(t.text);
    }
    if (cur_.type != Token::Type::LParen) fail(cur_, "expected a concept");
    take();
    if (cur_.type != Token::Type::Atom) fail(cur_, "expected a constructor keyword");
    Token kw = take();
    Concept result = Concept::top();
    if (kw.text == "and") {
      std::vector<Concept> parts;
      while (cur_.type != Token::Type::RParen) {
        if (at_end()) fail(cur_, "unbalanced parentheses");
        parts.push_back(term());
      }
      if (parts.empty()) fail(kw, "'and' needs at least one operand");
      result = Concept::conj(std::move(parts));
    } else if (kw.text == "at-least" || kw.text == "at-most") {
      std::uint32_t n = number();
      Token id = take_identifier();
      result = number_restriction(kw.text == "at-least", n, id);
    } else if (kw.text == "all") {
      Token id = take_identifier();
      Concept body = term();
      switch (sig_.kind_of(id.text)) {
        case SymbolKind::Role: result = Concept::all(id.text, std::move(body)); break;
        case SymbolKind::Attribute: result = Concept::all_attribute(id.text, std::move(body)); break;
        default: fail(id, "expected a role or attribute, got " + describe(id.text));
      }
    } else if (kw.text == "same-as") {
      AttrChain lhs = chain();
      AttrChain rhs = chain();
      result = Concept::same_as(std::move(lhs), std::move(rhs));
    } else {
      fail(kw, "unknown constructor '" + kw.text + "'");
    }
    expect(Token::Type::RParen, "expected ')'");
    return result;
  }

private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

  std::string describe(const std::string& id) const {
    switch (sig_.kind_of(id)) {
      case SymbolKind::Concept: return "concept name '" + id + "'";
      case SymbolKind::Role: return "role '" + id + "'";
      case SymbolKind::Attribute: return "attribute '" + id + "'";
      case SymbolKind::Undeclared: break;
    }
    return "undeclared identifier '" + id + "'";
  }

  void shift() { cur_ = lexer_.next(); }

  Token take() {
    Token t = cur_;
    shift();
    return t;
  }

  void expect(Token::Type type, const char* msg) {
    if (cur_.type != type) fail(cur_, at_end() ? "unbalanced parentheses" : msg);
    shift();
  }

  void require_identifier(const Token& t) const {
    if (!is_identifier(t.text)) fail(t, "malformed identifier '" + t.text + "'");
    if (sig_.kind_of(t.text) == SymbolKind::Undeclared) fail(t, "undeclared identifier '" + t.text + "'");
  }

  Token take_identifier() {
    if (cur_.type != Token::Type::Atom) fail(cur_, "expected an identifier");
    Token t = take();
    require_identifier(t);
    return t;
  }

  std::uint32_t number() {
    if (cur_.type != Token::Type::Atom) fail(cur_, "expected a non-negative integer");
    Token t = take();
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail(t, "expected a non-negative integer, got '" + t.text + "'");
    return n;
  }

  AttrChain chain() {
    expect(Token::Type::LParen, "expected '(' opening an attribute chain");
    AttrChain out;
    while (cur_.type == Token::Type::Atom) {
      Token t = take_identifier();
      if (!sig_.is_attribute(t.text)) fail(t, "same-as chains take attributes only, got " + describe(t.text));
      out.push_back(t.text);
    }
    expect(Token::Type::RParen, "expected ')' closing an attribute chain");
    return out;
  }

  // Attribute number restrictions are rewritten:
  //   (>= 0 a) = TOP, (>= 1 a) = a|a, (>= n a) = BOTTOM for n >= 2,
  //   (<= 0 a) = (all a BOTTOM), (<= n a) = TOP for n >= 1.
  Concept number_restriction(bool at_least, std::uint32_t n, const Token& id) const {
    switch (sig_.kind_of(id.text)) {
      case SymbolKind::Role: return at_least ? Concept::at_least(n, id.text) : Concept::at_most(n, id.text);
      case SymbolKind::Attribute:
        if (at_least) {
          if (n == 0) return Concept::top();
          if (n == 1) return Concept::same_as({id.text}, {id.text});
          return Concept::bottom();
        }
        if (n == 0) return Concept::all_attribute(id.text, Concept::bottom());
        return Concept::top();
      default: fail(id, "number restrictions take a role or attribute, got " + describe(id.text));
    }
  }

  Lexer lexer_;
  const Signature& sig_;
  Token cur_{};
};

}  // namespace

Concept parse_concept(std::string_view text, const Signature& sig) {
  Parser p(text, sig, 1);
  if (p.at_end()) throw ParseError("empty input", 1, 1);
  Concept c = p.term();
  if (!p.at_end()) p.fail_here("trailing input after concept");
  return c;
}

ConceptFile parse_concept_file(std::string_view text) {
  ConceptFile out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == ';') {
      pos = eol + 1;
      ++line_no;
      continue;
    }
    if (line[first] != '@') break;
    ++line_no;
    std::istringstream words{std::string(line.substr(first))};
    std::string directive, id;
    words >> directive;
    bool any = false;
    while (words >> id) {
      if (id[0] == ';') break;
      any = true;
      if (!is_identifier(id) || id == "TOP" || id == "BOTTOM")
        throw ParseError("malformed identifier '" + id + "'", line_no, first + 1);
      try {
        if (directive == "@attribute") out.signature.add_attribute(id);
        else if (directive == "@role") out.signature.add_role(id);
        else if (directive == "@concept") out.signature.add_concept(id);
        else throw ParseError("unknown directive '" + directive + "'", line_no, first + 1);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, first + 1);
      }
    }
    if (!any) throw ParseError("directive without identifier", line_no, first + 1);
    pos = eol + 1;
  }
  if (pos < text.size()) {
    Parser p(text.substr(pos), out.signature, line_no + 1);
    while (!p.at_end()) out.concepts.push_back(p.term());
  }
  return out;
}

// ------------------------------------------------------------------ Printer

std::string print_chain(const AttrChain& chain) {
  std::string out = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ' ';
    out += chain[i];
  }
  return out + ")";
}

namespace {

void print_to(const Concept& c, std::string& out) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top: out += "TOP"; return;
    case K::Name: out += c.symbol(); return;
    case K::AtLeast:
    case K::AtMost:
      out += c.kind() == K::AtLeast ? "(at-least " : "(at-most ";
      out += std::to_string(c.count()) + " " + c.symbol() + ")";
      return;
    case K::And:
      if (c.is_bottom_sugar()) {
        out += "BOTTOM";
        return;
      }
      out += "(and";
      for (const auto& p : c.parts()) {
        out += ' ';
        print_to(p, out);
      }
      out += ')';
      return;
    case K::All:
      out += "(all " + c.symbol() + " ";
      print_to(c.body(), out);
      out += ')';
      return;
    case K::SameAs: out += "(same-as " + print_chain(c.lhs()) + " " + print_chain(c.rhs()) + ")"; return;
  }
}

}  // namespace

std::string print_concept(const Concept& c) {
  std::string out;
  print_to(c, out);
  return out;
}

bool in_S_fragment(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Top:
    case Concept::Kind::SameAs: return true;
    case Concept::Kind::And:
      for (const auto& p : c.parts())
        if (!in_S_fragment(p)) return false;
      return true;
    default: return false;
  }
}

void collect_symbols(const Concept& c, Symbols& out) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top: break;
    case K::Name: out.concepts.insert(c.symbol()); break;
    case K::AtLeast:
    case K::AtMost: out.roles.insert(c.symbol()); break;
    case K::And:
      for (const auto& p : c.parts()) collect_symbols(p, out);
      break;
    case K::All:
      (c.on_attribute() ? out.attributes : out.roles).insert(c.symbol());
      collect_symbols(c.body(), out);
      break;
    case K::SameAs:
      out.attributes.insert(c.lhs().begin(), c.lhs().end());
      out.attributes.insert(c.rhs().begin(), c.rhs().end());
      break;
  }
}

}  // namespace classic
