#include "aimp/nlp.hpp"

#include <algorithm>
#include <map>

namespace aimp::nlp {

DepGraph::DepGraph(std::vector<Token> tokens, std::vector<int> heads, std::vector<std::string> relations)
    : tokens_(std::move(tokens)), heads_(std::move(heads)), relations_(std::move(relations)) {
  const int n = size();
  if (static_cast<int>(heads_.size()) != n || static_cast<int>(relations_.size()) != n) {
    throw InvalidGraph("heads and relations must match the token count");
  }
  for (int i = 0; i < n; ++i) {
    if (tokens_[i].index != i + 1) throw InvalidGraph("token indices must be 1..n in order");
    if (tokens_[i].text.empty()) throw InvalidGraph("empty token text at " + std::to_string(i + 1));
    int h = heads_[i];
    if (h < 0 || h > n || h == i + 1) throw InvalidGraph("bad head for token " + std::to_string(i + 1));
    if (h == 0) {
      if (root_ != 0) throw InvalidGraph("more than one root");
      root_ = i + 1;
    }
  }
  if (n > 0 && root_ == 0) throw InvalidGraph("no root");
  // Each walk upward must reach the root within n steps.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    for (int steps = 0; cur != 0; ++steps) {
      if (steps > n) throw InvalidGraph("cycle through token " + std::to_string(i));
      cur = heads_[cur - 1];
    }
  }
}

DepGraph DepGraph::from_arcs(std::vector<Token> tokens, const std::vector<Arc>& arcs, int root) {
  const int n = static_cast<int>(tokens.size());
  std::vector<int> heads(n, -1);
  std::vector<std::string> rels(n);
  for (const Arc& a : arcs) {
    if (a.dependent < 1 || a.dependent > n) throw InvalidGraph("arc dependent out of range");
    if (heads[a.dependent - 1] != -1) {
      throw InvalidGraph("token " + std::to_string(a.dependent) + " has two heads");
    }
    heads[a.dependent - 1] = a.head;
    rels[a.dependent - 1] = a.relation;
  }
  if (root < 1 || root > n) throw InvalidGraph("root out of range");
  if (heads[root - 1] != -1) throw InvalidGraph("root must not have a head");
  heads[root - 1] = 0;
  rels[root - 1] = "root";
  for (int i = 0; i < n; ++i) {
    if (heads[i] == -1) throw InvalidGraph("token " + std::to_string(i + 1) + " has no head");
  }
  return DepGraph(std::move(tokens), std::move(heads), std::move(rels));
}

std::vector<Arc> DepGraph::edges() const {
  std::vector<Arc> out;
  for (int i = 1; i <= size(); ++i) {
    if (heads_[i - 1] != 0) out.push_back({heads_[i - 1], i, relations_[i - 1]});
  }
  return out;
}

std::vector<int> DepGraph::children(int index) const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i) {
    if (heads_[i - 1] == index) out.push_back(i);
  }
  return out;
}

std::vector<int> DepGraph::children(int index, std::string_view relation) const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i) {
    if (heads_[i - 1] == index && relations_[i - 1] == relation) out.push_back(i);
  }
  return out;
}

std::vector<int> DepGraph::subtree(int index) const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i) {
    for (int cur = i; cur != 0; cur = heads_[cur - 1]) {
      if (cur == index) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

DepGraph DepGraph::restrict(const std::vector<int>& keep, const std::vector<Arc>& overrides) const {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::map<int, int> renumber;
  for (std::size_t k = 0; k < sorted.size(); ++k) renumber[sorted[k]] = static_cast<int>(k) + 1;

  std::map<int, const Arc*> over;
  for (const Arc& a : overrides) over[a.dependent] = &a;

  std::vector<Token> toks;
  std::vector<int> heads;
  std::vector<std::string> rels;
  for (int old : sorted) {
    Token t = token(old);
    t.index = renumber[old];
    toks.push_back(std::move(t));
    int h = head(old);
    std::string rel = relation(old);
    if (auto it = over.find(old); it != over.end()) {
      h = it->second->head;
      rel = it->second->relation;
    }
    auto mapped = renumber.find(h);
    if (h == 0 || mapped == renumber.end()) {
      heads.push_back(0);
      rels.push_back("root");
    } else {
      heads.push_back(mapped->second);
      rels.push_back(rel);
    }
  }
  return DepGraph(std::move(toks), std::move(heads), std::move(rels));
}

bool is_verb_tag(std::string_view pos) {
  return pos.starts_with("VB") || pos == "VERB";
}

bool is_noun_tag(std::string_view pos) {
  return pos.starts_with("NN") || pos == "NOUN" || pos == "PROPN";
}

bool is_proper_noun_tag(std::string_view pos) {
  return pos.starts_with("NNP") || pos == "PROPN";
}

bool is_adjective_tag(std::string_view pos) {
  return pos == "JJ" || pos == "ADJ";
}

std::string_view to_string(RelationClass c) {
  switch (c) {
    case RelationClass::SubjectLike: return "subject_like";
    case RelationClass::DirectObjectLike: return "direct_object_like";
    case RelationClass::IndirectObjectLike: return "indirect_object_like";
    case RelationClass::ModifierLike: return "modifier_like";
    case RelationClass::Other: return "other";
  }
  return "other";
}

TagClassConfig TagClassConfig::defaults() {
  return TagClassConfig{
      {"nsubj", "nsubj:pass", "nsubjpass"},
      {"dobj", "obj"},
      {"iobj", "nmod", "obl", "nmod:to", "nmod:from", "obl:to", "obl:from"},
      {"nmod:poss", "poss", "amod", "compound", "nn"},
  };
}

void TagClassConfig::validate() const {
  const std::set<std::string>* sets[] = {&subject_like, &direct_object_like, &indirect_object_like,
                                         &modifier_like};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (const auto& label : *sets[i]) {
        if (sets[j]->count(label)) throw Error("relation '" + label + "' is in two tag classes");
      }
    }
  }
}

RelationClass classify_relation(std::string_view label, const TagClassConfig& cfg) {
  std::string key(label);
  if (cfg.subject_like.count(key)) return RelationClass::SubjectLike;
  if (cfg.direct_object_like.count(key)) return RelationClass::DirectObjectLike;
  if (cfg.indirect_object_like.count(key)) return RelationClass::IndirectObjectLike;
  if (cfg.modifier_like.count(key)) return RelationClass::ModifierLike;
  return RelationClass::Other;
}

namespace {

bool attaches_left(const std::string& w) {
  return w == "." || w == "?" || w == "!" || w == "," || w == "'s" || w == "'";
}

}  // namespace

std::string render(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty() && !attaches_left(w)) out += ' ';
    out += w;
  }
  return out;
}

std::string render(const DepGraph& g) {
  std::vector<std::string> words;
  for (const auto& t : g.tokens()) words.push_back(t.text);
  return render(words);
}

}  // namespace aimp::nlp
