#include "classic/automaton.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace classic {

namespace {

std::vector<std::vector<std::pair<std::string, State>>> forward(const PathAutomaton& a) {
  std::vector<std::vector<std::pair<std::string, State>>> out(a.state_count);
  for (const auto& [p, x, q] : a.transitions) out[p].emplace_back(x, q);
  return out;
}

std::vector<bool> reach(std::size_t n, const std::vector<State>& start,
                        const std::vector<std::vector<State>>& succ) {
  std::vector<bool> seen(n, false);
  std::deque<State> queue;
  for (State s : start)
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (State t : succ[s])
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
  }
  return seen;
}

// Shortest word from `from` to some state in `targets` (BFS, letters in
// order). Empty optional if none.
std::optional<AttrChain> shortest_word(const PathAutomaton& a, State from, const std::set<State>& targets) {
  auto fwd = forward(a);
  std::vector<std::optional<std::pair<State, std::string>>> parent(a.state_count);
  std::vector<bool> seen(a.state_count, false);
  std::deque<State> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (targets.count(s)) {
      AttrChain w;
      for (State cur = s; parent[cur]; cur = parent[cur]->first) w.push_back(parent[cur]->second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (const auto& [x, t] : fwd[s])
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = {s, x};
        queue.push_back(t);
      }
  }
  return std::nullopt;
}

}  // namespace

bool PathAutomaton::accepts(const AttrChain& word) const {
  std::set<State> cur{initial};
  for (const auto& x : word) {
    std::set<State> next;
    for (const auto& [p, y, q] : transitions)
      if (y == x && cur.count(p)) next.insert(q);
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(), [&](State s) { return accepting.count(s) != 0; });
}

PathAutomaton path_automaton(const DescriptionGraph& g, NodeId from, NodeId to,
                             const std::optional<std::set<std::string>>& alphabet) {
  if (!g.contains(from) || !g.contains(to)) throw std::invalid_argument("path_automaton: unknown node");
  PathAutomaton a;
  std::map<NodeId, State> index;
  for (const auto& [id, l] : g.nodes()) {
    index[id] = a.state_names.size();
    a.state_names.push_back(std::to_string(id));
  }
  a.state_count = index.size();
  if (alphabet) a.alphabet = *alphabet;
  for (const auto& e : g.edges()) {
    if (alphabet && !alphabet->count(e.attribute)) continue;
    if (!alphabet) a.alphabet.insert(e.attribute);
    a.transitions.emplace(index.at(e.from), e.attribute, index.at(e.to));
  }
  a.initial = index.at(from);
  a.accepting = {index.at(to)};
  return a;
}

PathAutomaton intersect_and_restrict(const PathAutomaton& a1, const PathAutomaton& a2,
                                     const std::set<std::string>& first_letters) {
  PathAutomaton out;
  std::set_intersection(a1.alphabet.begin(), a1.alphabet.end(), a2.alphabet.begin(), a2.alphabet.end(),
                        std::inserter(out.alphabet, out.alphabet.end()));
  out.state_names = {"start"};
  const auto f1 = forward(a1);
  const auto f2 = forward(a2);
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  auto visit = [&](State p1, State p2) {
    auto [it, fresh] = index.emplace(std::make_pair(p1, p2), out.state_count);
    if (fresh) {
      ++out.state_count;
      out.state_names.push_back(
          "(" + (a1.state_names.empty() ? std::to_string(p1) : a1.state_names[p1]) + "," +
          (a2.state_names.empty() ? std::to_string(p2) : a2.state_names[p2]) + ")");
      if (a1.accepting.count(p1) && a2.accepting.count(p2)) out.accepting.insert(it->second);
      queue.emplace_back(p1, p2);
    }
    return it->second;
  };
  out.initial = 0;
  for (const auto& [x1, q1] : f1[a1.initial])
    for (const auto& [x2, q2] : f2[a2.initial])
      if (x1 == x2 && first_letters.count(x1) && out.alphabet.count(x1))
        out.transitions.emplace(0, x1, visit(q1, q2));
  while (!queue.empty()) {
    auto [p1, p2] = queue.front();
    queue.pop_front();
    const State from = index.at({p1, p2});
    for (const auto& [x1, q1] : f1[p1])
      for (const auto& [x2, q2] : f2[p2])
        if (x1 == x2 && out.alphabet.count(x1)) out.transitions.emplace(from, x1, visit(q1, q2));
  }
  return out;
}

PathAutomaton trim(const PathAutomaton& a) {
  std::vector<std::vector<State>> succ(a.state_count), pred(a.state_count);
  for (const auto& [p, x, q] : a.transitions) {
    succ[p].push_back(q);
    pred[q].push_back(p);
  }
  auto fwd = reach(a.state_count, {a.initial}, succ);
  auto bwd = reach(a.state_count, {a.accepting.begin(), a.accepting.end()}, pred);
  PathAutomaton out;
  out.alphabet = a.alphabet;
  if (!fwd[a.initial] || !bwd[a.initial]) {
    out.state_count = 1;
    out.state_names = {a.state_names.empty() ? "0" : a.state_names[a.initial]};
    return out;
  }
  std::vector<std::optional<State>> index(a.state_count);
  out.state_count = 0;
  for (State s = 0; s < a.state_count; ++s) {
    if (!fwd[s] || !bwd[s]) continue;
    index[s] = out.state_count++;
    out.state_names.push_back(a.state_names.empty() ? std::to_string(s) : a.state_names[s]);
  }
  out.initial = *index[a.initial];
  for (State s : a.accepting)
    if (index[s]) out.accepting.insert(*index[s]);
  for (const auto& [p, x, q] : a.transitions)
    if (index[p] && index[q]) out.transitions.emplace(*index[p], x, *index[q]);
  return out;
}

bool is_empty(const PathAutomaton& a) { return trim(a).accepting.empty(); }

bool is_infinite(const PathAutomaton& a) { return find_pump(a).has_value(); }

std::optional<Pump> find_pump(const PathAutomaton& input) {
  const PathAutomaton a = trim(input);
  if (a.accepting.empty()) return std::nullopt;
  const auto fwd = forward(a);
  enum Color { White, Grey, Black };
  std::vector<Color> color(a.state_count, White);
  std::vector<std::pair<State, std::string>> stack;  // (state, letter taken into it)
  std::optional<Pump> pump;
  std::function<bool(State)> dfs = [&](State s) {
    color[s] = Grey;
    for (const auto& [x, t] : fwd[s]) {
      if (color[t] == Grey) {
        // Cycle t ... s -x-> t.
        AttrChain loop;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const auto& e) { return e.first == t; });
        for (auto jt = std::next(it); jt != stack.end(); ++jt) loop.push_back(jt->second);
        loop.push_back(x);
        AttrChain prefix;
        for (auto jt = std::next(stack.begin()); jt != std::next(it); ++jt) prefix.push_back(jt->second);
        pump = Pump{prefix, loop, *shortest_word(a, t, a.accepting)};
        return true;
      }
      if (color[t] == White) {
        stack.emplace_back(t, x);
        if (dfs(t)) return true;
        stack.pop_back();
      }
    }
    color[s] = Black;
    return false;
  };
  stack.emplace_back(a.initial, "");
  dfs(a.initial);
  return pump;
}

std::vector<AttrChain> enumerate_finite(const PathAutomaton& input) {
  const PathAutomaton a = trim(input);
  if (find_pump(a)) throw std::invalid_argument("enumerate_finite: language is infinite");
  std::set<AttrChain> words;
  if (a.accepting.empty()) return {};
  const auto fwd = forward(a);
  AttrChain cur;
  std::function<void(State)> dfs = [&](State s) {
    if (a.accepting.count(s)) words.insert(cur);
    for (const auto& [x, t] : fwd[s]) {
      cur.push_back(x);
      dfs(t);
      cur.pop_back();
    }
  };
  dfs(a.initial);
  return {words.begin(), words.end()};
}

std::vector<AttrChain> words_up_to(const PathAutomaton& input, std::size_t max_length) {
  const PathAutomaton a = trim(input);
  std::vector<AttrChain> out;
  if (a.accepting.empty()) return out;
  // Breadth-first over (word, reachable state set); letters in order so each
  // layer is lexicographic.
  std::vector<std::pair<AttrChain, std::set<State>>> layer{{{}, {a.initial}}};
  for (std::size_t len = 0; len <= max_length && !layer.empty(); ++len) {
    std::vector<std::pair<AttrChain, std::set<State>>> next;
    for (const auto& [w, states] : layer) {
      if (std::any_of(states.begin(), states.end(), [&](State s) { return a.accepting.count(s) != 0; }))
        out.push_back(w);
      if (len == max_length) continue;
      std::map<std::string, std::set<State>> moves;
      for (const auto& [p, x, q] : a.transitions)
        if (states.count(p)) moves[x].insert(q);
      for (auto& [x, targets] : moves) {
        AttrChain w2 = w;
        w2.push_back(x);
        next.emplace_back(std::move(w2), std::move(targets));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::string to_dot(const PathAutomaton& a, const std::string& name) {
  std::ostringstream os;
  auto label = [&](State s) { return a.state_names.size() == a.state_count ? a.state_names[s] : std::to_string(s); };
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (State s = 0; s < a.state_count; ++s)
    os << "  s" << s << " [label=\"" << label(s) << "\"" << (a.accepting.count(s) ? ", shape=doublecircle" : "")
       << "];\n";
  os << "  __start -> s" << a.initial << ";\n";
  for (const auto& [p, x, q] : a.transitions) os << "  s" << p << " -> s" << q << " [label=\"" << x << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace classic
