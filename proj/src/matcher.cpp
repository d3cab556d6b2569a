#include "ontalign/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ontalign/errors.hpp"

namespace ontalign {

const char* to_string(MatchMode mode) { return mode == MatchMode::strict ? "strict" : "named"; }

MatchMode parse_match_mode(std::string_view text) {
  if (text == "strict") return MatchMode::strict;
  if (text == "named") return MatchMode::named;
  throw ConfigError("unknown mode '" + std::string(text) + "' (expected strict or named)");
}

bool is_predicate_name(std::string_view name) {
  return std::find(kPredicateNames.begin(), kPredicateNames.end(), name) != kPredicateNames.end();
}

void MatchConfig::validate() const {
  if (!(tau > 0.0 && tau <= 1.0)) throw ConfigError("tau must lie in (0, 1]");
  const double parts[] = {weights.base, weights.sibling, weights.sub, weights.relation};
  double sum = 0.0;
  for (const double w : parts) {
    if (!(w >= 0.0)) throw ConfigError("score weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("score weights must sum to 1");
  for (const auto& c : criteria) {
    if (!is_predicate_name(c)) throw ConfigError("unknown criterion '" + c + "'");
  }
}

PairSet Alignment::pair_set() const {
  PairSet out;
  for (const auto& p : pairs) out.insert({p.source, p.target});
  return out;
}

namespace {

std::set<std::string> keys_of(const ConceptSet& s, const SynonymLexicon& lex) {
  std::set<std::string> out;
  for (const auto& c : s) out.insert(lex.key(c.str()));
  return out;
}

double coverage(const ConceptSet& from, const std::set<std::string>& other_keys, const SynonymLexicon& lex) {
  std::size_t hit = 0;
  for (const auto& c : from) hit += other_keys.contains(lex.key(c.str())) ? 1 : 0;
  return static_cast<double>(hit) / static_cast<double>(from.size());
}

}  // namespace

PairSet any_super_same(const ConceptSet& sup_a, const ConceptSet& sup_b, const SynonymLexicon& lex) {
  std::unordered_map<std::string, std::vector<const ConceptId*>> by_key;
  for (const auto& b : sup_b) by_key[lex.key(b.str())].push_back(&b);
  PairSet out;
  for (const auto& a : sup_a) {
    auto it = by_key.find(lex.key(a.str()));
    if (it == by_key.end()) continue;
    for (const auto* b : it->second) out.insert({a, *b});
  }
  return out;
}

bool set_similar(const ConceptSet& s1, const ConceptSet& s2, const SynonymLexicon& lex, double tau) {
  if (s1.empty() && s2.empty()) return true;
  if (s1.empty() || s2.empty()) return false;
  // Tolerate rounding in tau (e.g. 2/3 given as 0.6666666667).
  constexpr double kSlack = 1e-9;
  return coverage(s1, keys_of(s2, lex), lex) + kSlack >= tau &&
         coverage(s2, keys_of(s1, lex), lex) + kSlack >= tau;
}

bool direct_super_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau) {
  return set_similar(a.direct_supers, b.direct_supers, lex, tau);
}

bool sibling_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau) {
  return set_similar(a.sblc, b.sblc, lex, tau);
}

bool direct_sub_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau) {
  return set_similar(a.direct_subs, b.direct_subs, lex, tau);
}

bool descendant_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau) {
  return set_similar(a.subc, b.subc, lex, tau);
}

bool leaf_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau) {
  return set_similar(a.leaves, b.leaves, lex, tau);
}

bool root_path_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau) {
  return set_similar(a.root_path, b.root_path, lex, tau);
}

bool proposed_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, MatchMode mode) {
  if (mode == MatchMode::named && a.supc.empty() && b.supc.empty()) return true;
  return !any_super_same(a.supc, b.supc, lex).empty();
}

bool evaluate_predicate(std::string_view name, const ConceptContext& a, const ConceptContext& b,
                        const MatchConfig& cfg) {
  const auto& lex = cfg.lexicon;
  if (name == "direct_super_sim") return direct_super_sim(a, b, lex, cfg.tau);
  if (name == "sibling_sim") return sibling_sim(a, b, lex, cfg.tau);
  if (name == "direct_sub_sim") return direct_sub_sim(a, b, lex, cfg.tau);
  if (name == "descendant_sim") return descendant_sim(a, b, lex, cfg.tau);
  if (name == "leaf_sim") return leaf_sim(a, b, lex, cfg.tau);
  if (name == "root_path_sim") return root_path_sim(a, b, lex, cfg.tau);
  if (name == "proposed_sim") return proposed_sim(a, b, lex, cfg.mode);
  throw ConfigError("unknown predicate '" + std::string(name) + "'");
}

double jaccard(const std::set<std::string>& s1, const std::set<std::string>& s2, const SynonymLexicon& lex) {
  if (s1.empty() && s2.empty()) return 1.0;
  std::set<std::string> k1;
  std::set<std::string> k2;
  for (const auto& s : s1) k1.insert(lex.key(s));
  for (const auto& s : s2) k2.insert(lex.key(s));
  std::size_t common = 0;
  for (const auto& k : k1) common += k2.contains(k) ? 1 : 0;
  const std::size_t total = k1.size() + k2.size() - common;
  return static_cast<double>(common) / static_cast<double>(total);
}

double jaccard(const ConceptSet& s1, const ConceptSet& s2, const SynonymLexicon& lex) {
  std::set<std::string> a;
  std::set<std::string> b;
  for (const auto& c : s1) a.insert(c.str());
  for (const auto& c : s2) b.insert(c.str());
  return jaccard(a, b, lex);
}

double rank_score(const ConceptContext& a, const ConceptContext& b, const std::set<std::string>& relations_a,
                  const std::set<std::string>& relations_b, const ScoreWeights& weights,
                  const SynonymLexicon& lex) {
  const double score = weights.base + weights.sibling * jaccard(a.sblc, b.sblc, lex) +
                       weights.sub * jaccard(a.subc, b.subc, lex) +
                       weights.relation * jaccard(relations_a, relations_b, lex);
  return std::clamp(score, 0.0, 1.0);
}

namespace {

struct Side {
  const Ontology& ontology;
  ContextTable contexts;
};

AlignmentPair make_pair(const Side& src, const Side& tgt, const ConceptContext& a, const ConceptContext& b,
                        PairSet shared, const MatchConfig& cfg) {
  AlignmentPair pair{.source = a.id,
                     .target = b.id,
                     .shared_ancestors = std::move(shared),
                     .criteria_flags = {},
                     .score = 0.0};
  for (const auto& name : cfg.criteria) pair.criteria_flags[name] = evaluate_predicate(name, a, b, cfg);
  pair.score = rank_score(a, b, src.ontology.relations_of(a.id), tgt.ontology.relations_of(b.id),
                          cfg.weights, cfg.lexicon);
  return pair;
}

Alignment empty_alignment(const Ontology& source, const Ontology& target, const MatchConfig& cfg) {
  cfg.validate();
  Alignment out;
  out.source_ontology = source.id();
  out.target_ontology = target.id();
  out.config = cfg;
  return out;
}

}  // namespace

Alignment align(const Ontology& source, const Ontology& target, const MatchConfig& cfg) {
  Alignment out = empty_alignment(source, target, cfg);
  const Side src{source, build_contexts(source)};
  const Side tgt{target, build_contexts(target)};
  const auto& lex = cfg.lexicon;

  for (const auto& [ca, a] : src.contexts.contexts()) {
    for (const auto& [cb, b] : tgt.contexts.contexts()) {
      auto shared = any_super_same(a.supc, b.supc, lex);
      bool keep = false;
      if (cfg.mode == MatchMode::strict) {
        keep = !shared.empty();
      } else {
        keep = equivalent(ca.str(), cb.str(), lex) && (!shared.empty() || (a.is_root() && b.is_root()));
      }
      if (keep) out.pairs.push_back(make_pair(src, tgt, a, b, std::move(shared), cfg));
    }
  }
  return out;
}

Alignment align_indexed(const Ontology& source, const Ontology& target, const MatchConfig& cfg) {
  Alignment out = empty_alignment(source, target, cfg);
  const Side src{source, build_contexts(source)};
  const Side tgt{target, build_contexts(target)};
  const auto& lex = cfg.lexicon;

  // key -> target concepts, kept sorted because contexts iterate in order.
  std::unordered_map<std::string, std::vector<const ConceptContext*>> index;
  for (const auto& [cb, b] : tgt.contexts.contexts()) {
    if (cfg.mode == MatchMode::strict) {
      for (const auto& key : keys_of(b.supc, lex)) index[key].push_back(&b);
    } else {
      index[lex.key(cb.str())].push_back(&b);
    }
  }

  for (const auto& [ca, a] : src.contexts.contexts()) {
    std::vector<const ConceptContext*> candidates;
    if (cfg.mode == MatchMode::strict) {
      for (const auto& key : keys_of(a.supc, lex)) {
        if (auto it = index.find(key); it != index.end()) {
          candidates.insert(candidates.end(), it->second.begin(), it->second.end());
        }
      }
      std::sort(candidates.begin(), candidates.end(),
                [](const ConceptContext* x, const ConceptContext* y) { return x->id < y->id; });
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    } else if (auto it = index.find(lex.key(ca.str())); it != index.end()) {
      candidates = it->second;
    }

    for (const auto* b : candidates) {
      auto shared = any_super_same(a.supc, b->supc, lex);
      if (cfg.mode == MatchMode::named && shared.empty() && !(a.is_root() && b->is_root())) continue;
      out.pairs.push_back(make_pair(src, tgt, a, *b, std::move(shared), cfg));
    }
  }
  return out;
}

}  // namespace ontalign
