#include "classic/interpretation.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace classic {

std::optional<Element> Interpretation::image(const std::string& attribute, Element x) const {
  auto it = attributes.find(attribute);
  if (it == attributes.end()) return std::nullopt;
  auto jt = it->second.find(x);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::optional<Element> Interpretation::image(const AttrChain& chain, Element x) const {
  std::optional<Element> cur = x;
  for (const auto& a : chain) {
    cur = image(a, *cur);
    if (!cur) return std::nullopt;
  }
  return cur;
}

std::vector<Element> Interpretation::successors(const std::string& role, Element x) const {
  std::vector<Element> out;
  auto it = roles.find(role);
  if (it == roles.end()) return out;
  for (auto jt = it->second.lower_bound({x, 0}); jt != it->second.end() && jt->first == x; ++jt)
    out.push_back(jt->second);
  return out;
}

bool Interpretation::valid() const {
  if (domain_size == 0) return false;
  auto in_range = [&](Element e) { return e < domain_size; };
  for (const auto& [name, ext] : concepts)
    if (!std::all_of(ext.begin(), ext.end(), in_range)) return false;
  for (const auto& [name, ext] : roles)
    for (const auto& [x, y] : ext)
      if (!in_range(x) || !in_range(y)) return false;
  for (const auto& [name, fn] : attributes) {
    for (const auto& [x, y] : fn)
      if (!in_range(x) || !in_range(y)) return false;
    if (mode == Semantics::Total && fn.size() != domain_size) return false;
  }
  return true;
}

std::string Interpretation::describe() const {
  std::ostringstream os;
  os << "domain {0.." << domain_size - 1 << "} (" << to_string(mode) << ")\n";
  for (const auto& [name, ext] : concepts) {
    os << "  " << name << " = {";
    const char* sep = "";
    for (Element e : ext) os << std::exchange(sep, ", ") << e;
    os << "}\n";
  }
  for (const auto& [name, ext] : roles) {
    os << "  " << name << " = {";
    const char* sep = "";
    for (const auto& [x, y] : ext) os << std::exchange(sep, ", ") << '(' << x << ',' << y << ')';
    os << "}\n";
  }
  for (const auto& [name, fn] : attributes) {
    os << "  " << name << " = {";
    const char* sep = "";
    for (const auto& [x, y] : fn) os << std::exchange(sep, ", ") << x << "->" << y;
    os << "}\n";
  }
  return os.str();
}

bool eval_concept(const Concept& c, const Interpretation& interp, Element x) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top: return true;
    case K::Name: {
      auto it = interp.concepts.find(c.symbol());
      return it != interp.concepts.end() && it->second.count(x);
    }
    case K::AtLeast: return interp.successors(c.symbol(), x).size() >= c.count();
    case K::AtMost: return interp.successors(c.symbol(), x).size() <= c.count();
    case K::And:
      return std::all_of(c.parts().begin(), c.parts().end(),
                         [&](const Concept& p) { return eval_concept(p, interp, x); });
    case K::All: {
      if (c.on_attribute()) {
        auto y = interp.image(c.symbol(), x);
        return !y || eval_concept(c.body(), interp, *y);
      }
      for (Element y : interp.successors(c.symbol(), x))
        if (!eval_concept(c.body(), interp, y)) return false;
      return true;
    }
    case K::SameAs: {
      auto l = interp.image(c.lhs(), x);
      auto r = interp.image(c.rhs(), x);
      return l && r && *l == *r;
    }
  }
  return false;
}

namespace {

class GraphEvaluator {
public:
  explicit GraphEvaluator(const Interpretation& interp) : interp_(interp) {}

  bool in_graph(const DescriptionGraph& g, Element x) {
    auto key = std::make_pair(&g, x);
    if (auto it = graph_memo_.find(key); it != graph_memo_.end()) return it->second;
    bool result = search(g, x);
    graph_memo_[key] = result;
    return result;
  }

private:
  bool in_label(const DescriptionGraph& g, NodeId n, Element x) {
    auto key = std::make_tuple(&g, n, x);
    if (auto it = label_memo_.find(key); it != label_memo_.end()) return it->second;
    bool result = check_label(g.label(n), x);
    label_memo_[key] = result;
    return result;
  }

  bool check_label(const NodeLabel& l, Element x) {
    if (l.incoherent) return false;
    for (const auto& atom : l.atoms) {
      if (atom == kTopAtom) continue;
      auto it = interp_.concepts.find(atom);
      if (it == interp_.concepts.end() || !it->second.count(x)) return false;
    }
    for (const auto& r : l.redges) {
      std::vector<Element> succ;
      if (r.attribute) {
        if (auto y = interp_.image(r.name, x)) succ.push_back(*y);
      } else {
        succ = interp_.successors(r.name, x);
      }
      if (succ.size() < r.min) return false;
      if (r.max != kUnbounded && succ.size() > r.max) return false;
      for (Element y : succ)
        if (!in_graph(*r.restriction, y)) return false;
    }
    return true;
  }

  struct Plan {
    std::vector<NodeId> order;
    std::map<NodeId, std::size_t> index;
    // Edges whose endpoints are both placed once order[i] is placed.
    std::vector<std::vector<AEdge>> closing;
  };

  static Plan plan(const DescriptionGraph& g) {
    Plan p;
    std::deque<NodeId> queue{g.root()};
    auto place = [&](NodeId n) {
      if (p.index.count(n)) return false;
      p.index[n] = p.order.size();
      p.order.push_back(n);
      return true;
    };
    place(g.root());
    while (!queue.empty()) {
      NodeId n = queue.front();
      queue.pop_front();
      for (const auto& e : g.out_edges(n))
        if (place(e.to)) queue.push_back(e.to);
    }
    for (const auto& [id, l] : g.nodes()) place(id);
    p.closing.resize(p.order.size());
    for (const auto& e : g.edges()) p.closing[std::max(p.index.at(e.from), p.index.at(e.to))].push_back(e);
    return p;
  }

  bool search(const DescriptionGraph& g, Element x) {
    Plan p = plan(g);
    std::vector<Element> value(p.order.size());
    return assign(g, p, value, 0, x);
  }

  bool assign(const DescriptionGraph& g, const Plan& p, std::vector<Element>& value, std::size_t i, Element x) {
    if (i == p.order.size()) return true;
    std::optional<Element> forced;
    if (i == 0) forced = x;
    for (const auto& e : p.closing[i]) {
      if (e.to != p.order[i] || p.index.at(e.from) == i) continue;
      auto y = interp_.image(e.attribute, value[p.index.at(e.from)]);
      if (!y || (forced && *forced != *y)) return false;
      forced = y;
    }
    auto attempt = [&](Element v) {
      if (!in_label(g, p.order[i], v)) return false;
      value[i] = v;
      for (const auto& e : p.closing[i]) {
        auto y = interp_.image(e.attribute, value[p.index.at(e.from)]);
        if (!y || *y != value[p.index.at(e.to)]) return false;
      }
      return assign(g, p, value, i + 1, x);
    };
    if (forced) return attempt(*forced);
    for (Element v = 0; v < interp_.domain_size; ++v)
      if (attempt(v)) return true;
    return false;
  }

  const Interpretation& interp_;
  std::map<std::pair<const DescriptionGraph*, Element>, bool> graph_memo_;
  std::map<std::tuple<const DescriptionGraph*, NodeId, Element>, bool> label_memo_;
};

// Bitmask evaluation for the countermodel search. Subsets of the domain are
// bit sets; attributes are tables with kUndefined for missing values.
using Mask = std::uint64_t;
constexpr std::uint32_t kMaxDomain = 8;
constexpr int kUndefined = -1;

struct Tables {
  std::uint32_t n = 1;
  std::vector<Mask> concepts;
  std::vector<std::vector<Mask>> roles;  // role -> element -> successors
  std::vector<std::vector<int>> attributes;
};

struct Compiled {
  Concept::Kind kind = Concept::Kind::Top;
  int symbol = -1;  // index into the matching table, -1 if never interpreted
  bool on_attribute = false;
  std::uint32_t count = 0;
  std::vector<Compiled> kids;
  std::vector<int> lhs, rhs;
};

struct SymbolIndex {
  std::vector<std::string> concepts, roles, attributes;

  static int find(const std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
  }
};

Compiled compile(const Concept& c, const SymbolIndex& idx) {
  using K = Concept::Kind;
  Compiled out;
  out.kind = c.kind();
  out.count = c.count();
  out.on_attribute = c.on_attribute();
  switch (c.kind()) {
    case K::Top: break;
    case K::Name: out.symbol = SymbolIndex::find(idx.concepts, c.symbol()); break;
    case K::AtLeast:
    case K::AtMost: out.symbol = SymbolIndex::find(idx.roles, c.symbol()); break;
    case K::And:
      for (const auto& p : c.parts()) out.kids.push_back(compile(p, idx));
      break;
    case K::All:
      out.symbol = SymbolIndex::find(c.on_attribute() ? idx.attributes : idx.roles, c.symbol());
      out.kids.push_back(compile(c.body(), idx));
      break;
    case K::SameAs:
      for (const auto& a : c.lhs()) out.lhs.push_back(SymbolIndex::find(idx.attributes, a));
      for (const auto& a : c.rhs()) out.rhs.push_back(SymbolIndex::find(idx.attributes, a));
      break;
  }
  return out;
}

int chain_image(const Tables& t, const std::vector<int>& chain, int x) {
  for (int a : chain) {
    if (a < 0) return kUndefined;
    x = t.attributes[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
    if (x == kUndefined) return kUndefined;
  }
  return x;
}

Mask extension(const Compiled& c, const Tables& t) {
  using K = Concept::Kind;
  const Mask full = (Mask{1} << t.n) - 1;
  const auto sym = static_cast<std::size_t>(c.symbol);
  auto succ_count = [&](std::uint32_t x) {
    return c.symbol < 0 ? 0 : static_cast<std::uint32_t>(std::popcount(t.roles[sym][x]));
  };
  Mask out = 0;
  switch (c.kind) {
    case K::Top: return full;
    case K::Name: return c.symbol < 0 ? 0 : t.concepts[sym];
    case K::AtLeast:
      for (std::uint32_t x = 0; x < t.n; ++x)
        if (succ_count(x) >= c.count) out |= Mask{1} << x;
      return out;
    case K::AtMost:
      for (std::uint32_t x = 0; x < t.n; ++x)
        if (succ_count(x) <= c.count) out |= Mask{1} << x;
      return out;
    case K::And:
      out = full;
      for (const auto& k : c.kids) {
        out &= extension(k, t);
        if (!out) break;
      }
      return out;
    case K::All: {
      const Mask body = extension(c.kids.front(), t);
      if (c.symbol < 0) return full;
      for (std::uint32_t x = 0; x < t.n; ++x) {
        bool ok;
        if (c.on_attribute) {
          int y = t.attributes[sym][x];
          ok = y == kUndefined || (body >> y & 1);
        } else {
          ok = (t.roles[sym][x] & ~body) == 0;
        }
        if (ok) out |= Mask{1} << x;
      }
      return out;
    }
    case K::SameAs:
      for (std::uint32_t x = 0; x < t.n; ++x) {
        int l = chain_image(t, c.lhs, static_cast<int>(x));
        if (l != kUndefined && l == chain_image(t, c.rhs, static_cast<int>(x))) out |= Mask{1} << x;
      }
      return out;
  }
  return out;
}

Interpretation to_interpretation(const Tables& t, const SymbolIndex& idx, Semantics mode) {
  Interpretation I;
  I.domain_size = t.n;
  I.mode = mode;
  for (std::size_t i = 0; i < idx.concepts.size(); ++i) {
    auto& ext = I.concepts[idx.concepts[i]];
    for (Element x = 0; x < t.n; ++x)
      if (t.concepts[i] >> x & 1) ext.insert(x);
  }
  for (std::size_t i = 0; i < idx.roles.size(); ++i) {
    auto& ext = I.roles[idx.roles[i]];
    for (Element x = 0; x < t.n; ++x)
      for (Element y = 0; y < t.n; ++y)
        if (t.roles[i][x] >> y & 1) ext.insert({x, y});
  }
  for (std::size_t i = 0; i < idx.attributes.size(); ++i) {
    auto& fn = I.attributes[idx.attributes[i]];
    for (Element x = 0; x < t.n; ++x)
      if (t.attributes[i][x] != kUndefined) fn[x] = static_cast<Element>(t.attributes[i][x]);
  }
  return I;
}

// Odometer over all extension tables of one domain size; the last symbol
// varies fastest.
class TableEnumerator {
public:
  TableEnumerator(const SymbolIndex& idx, std::uint32_t n, Semantics mode) : n_(n), mode_(mode) {
    t_.n = n;
    t_.concepts.assign(idx.concepts.size(), 0);
    t_.roles.assign(idx.roles.size(), std::vector<Mask>(n, 0));
    t_.attributes.assign(idx.attributes.size(), std::vector<int>(n, first_attr_value()));
  }

  const Tables& tables() const { return t_; }

  bool next() {
    for (std::size_t i = t_.attributes.size(); i-- > 0;)
      if (advance_attribute(t_.attributes[i])) return true;
    for (std::size_t i = t_.roles.size(); i-- > 0;)
      if (advance_role(t_.roles[i])) return true;
    const Mask full = (Mask{1} << n_) - 1;
    for (std::size_t i = t_.concepts.size(); i-- > 0;) {
      if (t_.concepts[i] != full) {
        ++t_.concepts[i];
        return true;
      }
      t_.concepts[i] = 0;
    }
    return false;
  }

private:
  int first_attr_value() const { return mode_ == Semantics::Total ? 0 : kUndefined; }

  bool advance_attribute(std::vector<int>& fn) const {
    for (std::size_t x = fn.size(); x-- > 0;) {
      if (fn[x] + 1 < static_cast<int>(n_)) {
        ++fn[x];
        return true;
      }
      fn[x] = first_attr_value();
    }
    return false;
  }

  bool advance_role(std::vector<Mask>& rows) const {
    const Mask full = (Mask{1} << n_) - 1;
    for (std::size_t x = rows.size(); x-- > 0;) {
      if (rows[x] != full) {
        ++rows[x];
        return true;
      }
      rows[x] = 0;
    }
    return false;
  }

  std::uint32_t n_;
  Semantics mode_;
  Tables t_;
};

}  // namespace

bool eval_graph(const DescriptionGraph& g, const Interpretation& interp, Element x) {
  GraphEvaluator ev(interp);
  return ev.in_graph(g, x);
}

std::optional<Countermodel> find_countermodel(const Concept& c, const Concept& d, const CountermodelOptions& options) {
  if (options.max_domain == 0 || options.max_domain > kMaxDomain)
    throw std::invalid_argument("find_countermodel: max_domain must be between 1 and 8");
  Symbols symbols;
  collect_symbols(c, symbols);
  collect_symbols(d, symbols);
  // The bottom role only occurs in (at-least 1) together with (at-most 0),
  // which is empty under every extension.
  symbols.roles.erase(std::string(kBottomRole));
  SymbolIndex idx{{symbols.concepts.begin(), symbols.concepts.end()},
                  {symbols.roles.begin(), symbols.roles.end()},
                  {symbols.attributes.begin(), symbols.attributes.end()}};
  const Compiled cc = compile(c, idx);
  const Compiled dc = compile(d, idx);
  std::uint64_t candidates = 0;
  for (std::uint32_t n = 1; n <= options.max_domain; ++n) {
    TableEnumerator it(idx, n, options.mode);
    do {
      if (options.max_candidates && candidates++ >= options.max_candidates) return std::nullopt;
      const Mask hit = extension(cc, it.tables()) & ~extension(dc, it.tables());
      if (hit) {
        return Countermodel{to_interpretation(it.tables(), idx, options.mode),
                            static_cast<Element>(std::countr_zero(hit))};
      }
    } while (it.next());
  }
  return std::nullopt;
}

std::optional<Countermodel> find_countermodel(const Concept& c, const Concept& d, std::uint32_t max_domain,
                                              Semantics mode) {
  return find_countermodel(c, d, CountermodelOptions{max_domain, mode, 0});
}

}  // namespace classic
