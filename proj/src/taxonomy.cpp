#include "ontalign/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

#include "ontalign/errors.hpp"

namespace ontalign {

const ConceptContext& ContextTable::at(const ConceptId& c) const {
  auto it = contexts_.find(c);
  if (it == contexts_.end()) throw NotFoundError(c.str());
  return it->second;
}

namespace {

using Step = const ConceptSet& (Ontology::*)(const ConceptId&) const;

ConceptSet reach(const Ontology& ontology, const ConceptId& start, Step step) {
  ConceptSet seen;
  std::vector<ConceptId> frontier{start};
  while (!frontier.empty()) {
    const ConceptId c = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& next : (ontology.*step)(c)) {
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return seen;
}

// Concepts ordered so that every parent precedes its children.
std::vector<ConceptId> top_down_order(const Ontology& ontology) {
  std::map<ConceptId, std::size_t> pending;
  std::deque<ConceptId> ready;
  for (const auto& c : ontology.concepts()) {
    pending[c] = ontology.direct_supers(c).size();
    if (pending[c] == 0) ready.push_back(c);
  }
  std::vector<ConceptId> order;
  order.reserve(pending.size());
  while (!ready.empty()) {
    ConceptId c = std::move(ready.front());
    ready.pop_front();
    for (const auto& child : ontology.direct_subs(c)) {
      if (--pending[child] == 0) ready.push_back(child);
    }
    order.push_back(std::move(c));
  }
  return order;
}

}  // namespace

ConceptSet ancestors(const Ontology& ontology, const ConceptId& c) {
  return reach(ontology, c, &Ontology::direct_supers);
}

ConceptSet descendants(const Ontology& ontology, const ConceptId& c) {
  return reach(ontology, c, &Ontology::direct_subs);
}

ConceptSet siblings(const Ontology& ontology, const ConceptId& c) {
  const auto& supers = ontology.direct_supers(c);
  ConceptSet out;
  if (supers.empty()) {
    out = ontology.roots();
  } else {
    for (const auto& p : supers) {
      const auto& kids = ontology.direct_subs(p);
      out.insert(kids.begin(), kids.end());
    }
  }
  out.erase(c);
  return out;
}

ConceptSet leaves_under(const Ontology& ontology, const ConceptId& c) {
  if (ontology.direct_subs(c).empty()) return {c};
  ConceptSet out;
  for (const auto& d : descendants(ontology, c)) {
    if (ontology.direct_subs(d).empty()) out.insert(d);
  }
  return out;
}

ContextTable build_contexts(const Ontology& ontology) {
  if (auto cycles = detect_cycles(ontology); !cycles.empty()) {
    std::vector<std::vector<std::string>> named;
    for (const auto& cycle : cycles) {
      auto& out = named.emplace_back();
      for (const auto& c : cycle) out.push_back(c.str());
    }
    throw CycleError(std::move(named));
  }

  const auto order = top_down_order(ontology);
  std::map<ConceptId, ConceptSet> supc;
  for (const auto& c : order) {
    ConceptSet acc;
    for (const auto& p : ontology.direct_supers(c)) {
      acc.insert(p);
      const auto& above = supc.at(p);
      acc.insert(above.begin(), above.end());
    }
    supc.emplace(c, std::move(acc));
  }
  std::map<ConceptId, ConceptSet> subc;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    ConceptSet acc;
    for (const auto& k : ontology.direct_subs(*it)) {
      acc.insert(k);
      const auto& below = subc.at(k);
      acc.insert(below.begin(), below.end());
    }
    subc.emplace(*it, std::move(acc));
  }

  const ConceptSet roots = ontology.roots();
  std::map<ConceptId, ConceptContext> contexts;
  for (const auto& c : ontology.concepts()) {
    ConceptContext ctx{.id = c,
                       .supc = supc.at(c),
                       .subc = subc.at(c),
                       .sblc = {},
                       .direct_supers = ontology.direct_supers(c),
                       .direct_subs = ontology.direct_subs(c),
                       .leaves = {},
                       .root_path = {}};
    if (ctx.direct_supers.empty()) {
      ctx.sblc = roots;
    } else {
      for (const auto& p : ctx.direct_supers) {
        const auto& kids = ontology.direct_subs(p);
        ctx.sblc.insert(kids.begin(), kids.end());
      }
    }
    ctx.sblc.erase(c);
    if (ctx.direct_subs.empty()) {
      ctx.leaves.insert(c);
    } else {
      for (const auto& d : ctx.subc) {
        if (ontology.direct_subs(d).empty()) ctx.leaves.insert(d);
      }
    }
    ctx.root_path = ctx.supc;
    contexts.emplace(c, std::move(ctx));
  }
  return ContextTable(ontology.id(), std::move(contexts));
}

std::vector<std::vector<ConceptId>> detect_cycles(const std::set<SubclassEdge>& edges) {
  std::map<ConceptId, std::vector<ConceptId>> up;
  for (const auto& e : edges) {
    up[e.child].push_back(e.parent);
    up.try_emplace(e.parent);
  }

  // Tarjan's strongly connected components, iterative.
  std::map<ConceptId, std::size_t> index;
  std::map<ConceptId, std::size_t> low;
  std::set<ConceptId> on_stack;
  std::vector<ConceptId> stack;
  std::vector<std::vector<ConceptId>> components;
  std::size_t counter = 0;

  struct Frame {
    ConceptId node;
    std::size_t next;
  };
  for (const auto& [start, unused] : up) {
    if (index.contains(start)) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack.insert(start);
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& out = up[f.node];
      if (f.next < out.size()) {
        const ConceptId& w = out[f.next++];
        if (!index.contains(w)) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack.insert(w);
          frames.push_back({w, 0});
        } else if (on_stack.contains(w)) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const ConceptId node = f.node;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[node]);
      if (low[node] == index[node]) {
        std::vector<ConceptId> comp;
        for (;;) {
          ConceptId w = stack.back();
          stack.pop_back();
          on_stack.erase(w);
          const bool last = w == node;
          comp.push_back(std::move(w));
          if (last) break;
        }
        components.push_back(std::move(comp));
      }
    }
  }

  std::vector<std::vector<ConceptId>> cycles;
  for (auto& comp : components) {
    std::sort(comp.begin(), comp.end());
    const ConceptId& first = comp.front();
    if (comp.size() == 1) {
      const auto& out = up[first];
      if (std::find(out.begin(), out.end(), first) != out.end()) cycles.push_back({first});
      continue;
    }
    // Shortest cycle through the smallest member, by BFS inside the component.
    const ConceptSet members(comp.begin(), comp.end());
    std::map<ConceptId, ConceptId> parent_of;
    std::deque<ConceptId> queue{first};
    std::optional<ConceptId> closing;
    while (!queue.empty() && !closing) {
      ConceptId c = queue.front();
      queue.pop_front();
      auto out = up[c];
      std::sort(out.begin(), out.end());
      for (const auto& w : out) {
        if (!members.contains(w)) continue;
        if (w == first) {
          closing = c;
          break;
        }
        if (!parent_of.contains(w)) {
          parent_of.emplace(w, c);
          queue.push_back(w);
        }
      }
    }
    std::vector<ConceptId> cycle;
    for (ConceptId c = *closing; c != first; c = parent_of.at(c)) cycle.push_back(c);
    cycle.push_back(first);
    std::reverse(cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::vector<std::vector<ConceptId>> detect_cycles(const Ontology& ontology) {
  return detect_cycles(ontology.edges());
}

std::map<ConceptId, std::size_t> depths(const Ontology& ontology) {
  std::map<ConceptId, std::size_t> depth;
  for (const auto& c : top_down_order(ontology)) {
    std::size_t d = 0;
    for (const auto& p : ontology.direct_supers(c)) d = std::max(d, depth.at(p) + 1);
    depth.emplace(c, d);
  }
  return depth;
}

std::vector<ConceptId> order_by_depth(const ConceptSet& concepts,
                                      const std::map<ConceptId, std::size_t>& depth) {
  std::vector<ConceptId> out(concepts.begin(), concepts.end());
  std::stable_sort(out.begin(), out.end(), [&](const ConceptId& a, const ConceptId& b) {
    return depth.at(a) < depth.at(b);
  });
  return out;
}

}  // namespace ontalign
