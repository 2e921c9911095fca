// Deterministic arc assignment for the restricted clause grammar of word problems.

#include <optional>

#include "aimp/tagger.hpp"

namespace aimp::nlp {

namespace {

struct Phrase {
  int head = 0;  // 0-based
  int end = 0;   // one past the last consumed token
  std::vector<Arc> arcs;
};

class ClauseParser {
 public:
  explicit ClauseParser(const std::vector<Token>& toks) : toks_(toks) {}

  SentenceAnnotation parse(const std::vector<std::string>& words) {
    if (toks_.empty()) fail(0, 0);
    int root = -1;
    int pos = 0;
    if (lower(0) == "how") {
      root = question(pos);
    } else {
      root = declarative(pos);
    }
    if (pos < n() && is_final_punct(pos)) {
      arc(root, pos, "punct");
      ++pos;
    }
    if (pos != n()) fail(pos, n() - 1);
    return SentenceAnnotation{render(words), DepGraph::from_arcs(toks_, arcs_, root + 1)};
  }

 private:
  int n() const { return static_cast<int>(toks_.size()); }
  const std::string& pos_at(int i) const { return toks_[i].pos; }
  std::string lower(int i) const { return lowercase(toks_[i].text); }
  bool in_range(int i) const { return i >= 0 && i < n(); }

  bool is_final_punct(int i) const { return in_range(i) && pos_at(i) == "."; }
  bool is_verb(int i) const { return in_range(i) && is_verb_tag(pos_at(i)) && toks_[i].lemma != "do"; }
  bool is_aux(int i) const { return in_range(i) && toks_[i].lemma == "do" && is_verb_tag(pos_at(i)); }
  bool is_coord(int i) const { return in_range(i) && (pos_at(i) == "CC" || pos_at(i) == ","); }
  bool is_noun(int i) const { return in_range(i) && is_noun_tag(pos_at(i)); }
  bool is_adj(int i) const {
    return in_range(i) && pos_at(i) == "JJ" && lower(i) != "many" && lower(i) != "much";
  }
  bool is_card(int i) const { return in_range(i) && pos_at(i) == "CD"; }
  bool is_prep(int i) const { return in_range(i) && (pos_at(i) == "IN" || pos_at(i) == "TO"); }
  bool is_adverb(int i) const { return in_range(i) && pos_at(i) == "RB"; }

  [[noreturn]] void fail(int begin, int end) const {
    std::string span;
    for (int i = begin; i <= end && i < n(); ++i) {
      if (!span.empty()) span += ' ';
      span += toks_[i].text;
    }
    throw UnsupportedSentence(begin + 1, end + 1, span);
  }

  void arc(int head, int dep, std::string rel) { arcs_.push_back(Arc{head + 1, dep + 1, std::move(rel)}); }

  static void add(Phrase& p, int head, int dep, std::string rel) {
    p.arcs.push_back(Arc{head + 1, dep + 1, std::move(rel)});
  }

  void commit(const Phrase& p) { arcs_.insert(arcs_.end(), p.arcs.begin(), p.arcs.end()); }

  // [det | poss-pronoun] [how many|much] {group 's} group
  // group := {number} [more] [adj {(and|,) adj}] noun {noun}  |  pronoun
  std::optional<Phrase> noun_phrase(int i) const {
    Phrase p;
    int j = i;
    int det = -1;
    int how = -1, many = -1;
    if (in_range(j) && (pos_at(j) == "DT" || pos_at(j) == "PRP$")) det = j++;
    if (in_range(j) && pos_at(j) == "WRB" && in_range(j + 1) && (lower(j + 1) == "many" || lower(j + 1) == "much")) {
      how = j;
      many = j + 1;
      j += 2;
    }

    std::vector<int> heads;
    while (true) {
      std::vector<int> cards, adjs, nouns;
      int comparative = -1;
      std::vector<std::pair<int, int>> adj_links;  // (coordinator, following adjective)
      if (in_range(j) && pos_at(j) == "PRP" && det < 0 && many < 0 && heads.empty()) {
        p.head = j;
        p.end = j + 1;
        return p;
      }
      while (is_card(j)) cards.push_back(j++);
      if (in_range(j) && pos_at(j) == "JJR") comparative = j++;
      if (is_adj(j)) {
        adjs.push_back(j++);
        while (is_coord(j) && is_adj(j + 1)) {
          adj_links.emplace_back(j, j + 1);
          adjs.push_back(j + 1);
          j += 2;
        }
        while (is_adj(j)) adjs.push_back(j++);
      }
      while (is_noun(j)) nouns.push_back(j++);
      if (nouns.empty()) return std::nullopt;

      int head = nouns.back();
      for (std::size_t k = 0; k + 1 < nouns.size(); ++k) add(p, head, nouns[k], "compound");
      for (int c : cards) add(p, head, c, "nummod");
      if (comparative >= 0) add(p, head, comparative, "advmod");
      // Coordinated adjectives: the first attaches to the noun, later conjuncts to the first.
      int first_adj = adjs.empty() ? -1 : adjs.front();
      for (int a : adjs) {
        bool coordinated = false;
        for (auto [c, next] : adj_links) {
          if (next == a) {
            coordinated = true;
            add(p, a, c, pos_at(c) == "CC" ? "cc" : "punct");
          }
        }
        if (a == first_adj) {
          add(p, head, a, "amod");
        } else if (coordinated) {
          add(p, first_adj, a, "conj");
        } else {
          add(p, head, a, "amod");
        }
      }
      heads.push_back(head);
      if (in_range(j) && pos_at(j) == "POS") {
        add(p, head, j, "case");
        ++j;
        continue;
      }
      break;
    }
    for (std::size_t k = 0; k + 1 < heads.size(); ++k) add(p, heads[k + 1], heads[k], "nmod:poss");
    int first = heads.front();
    if (det >= 0) add(p, first, det, pos_at(det) == "DT" ? "det" : "nmod:poss");
    p.head = heads.back();
    if (many >= 0) {
      add(p, p.head, many, "amod");
      add(p, many, how, "advmod");
    }
    p.end = j;
    return p;
  }

  // NP {(,|and) NP}. With `stop_before_clause`, a conjunct followed by a verb is
  // left for clause coordination.
  std::optional<Phrase> coordinated_np(int i, bool stop_before_clause) const {
    auto first = noun_phrase(i);
    if (!first) return std::nullopt;
    Phrase p = *first;
    int j = p.end;
    while (is_coord(j)) {
      int k = j + 1;
      std::vector<int> coords{j};
      if (pos_at(j) == "," && in_range(k) && pos_at(k) == "CC") coords.push_back(k++);
      auto next = noun_phrase(k);
      if (!next) break;
      if (stop_before_clause && is_verb(next->end)) break;
      p.arcs.insert(p.arcs.end(), next->arcs.begin(), next->arcs.end());
      add(p, p.head, next->head, "conj");
      for (int c : coords) add(p, next->head, c, pos_at(c) == "CC" ? "cc" : "punct");
      j = next->end;
    }
    p.end = j;
    return p;
  }

  // How many NP does NP V {tail} ?
  int question(int& pos) {
    auto object = noun_phrase(pos);
    if (!object) fail(pos, n() - 1);
    pos = object->end;
    if (!is_aux(pos)) fail(pos, pos);
    int aux = pos++;
    auto subject = coordinated_np(pos, false);
    if (!subject) fail(pos, n() - 1);
    pos = subject->end;
    if (!is_verb(pos)) fail(pos, pos);
    int verb = pos++;
    commit(*object);
    commit(*subject);
    arc(verb, object->head, "dobj");
    arc(verb, aux, "aux");
    arc(verb, subject->head, "nsubj");
    tails(verb, pos);
    return verb;
  }

  int declarative(int& pos) {
    auto subject = coordinated_np(pos, false);
    if (!subject) fail(pos, n() - 1);
    pos = subject->end;
    if (!is_verb(pos)) fail(pos, pos);
    int verb = pos++;
    commit(*subject);
    arc(verb, subject->head, "nsubj");
    clause_rest(verb, pos);
    return verb;
  }

  // Objects, then prepositional and adverbial tails, then an optional
  // coordinated clause.
  void clause_rest(int verb, int& pos) {
    auto first = noun_phrase(pos);
    if (!first) fail(pos, n() - 1);
    auto second = noun_phrase(first->end);
    if (second && !is_verb(second->end)) {
      // V NP NP: the first is the recipient.
      commit(*first);
      arc(verb, first->head, "iobj");
      auto object = coordinated_np(first->end, true);
      commit(*object);
      arc(verb, object->head, "dobj");
      pos = object->end;
    } else {
      auto object = coordinated_np(pos, true);
      commit(*object);
      arc(verb, object->head, "dobj");
      pos = object->end;
    }
    tails(verb, pos);

    if (!is_coord(pos)) return;
    int cc = pos;
    int k = pos + 1;
    if (pos_at(cc) == "," && in_range(k) && pos_at(k) == "CC") ++k;
    if (is_verb(k)) {
      // Shared subject: "... and eats one apple".
      int verb2 = k;
      for (int c = cc; c < k; ++c) arc(verb2, c, pos_at(c) == "CC" ? "cc" : "punct");
      arc(verb, verb2, "conj");
      pos = k + 1;
      clause_rest(verb2, pos);
      return;
    }
    auto subject = coordinated_np(k, false);
    if (subject && is_verb(subject->end)) {
      int verb2 = subject->end;
      for (int c = cc; c < k; ++c) arc(verb2, c, pos_at(c) == "CC" ? "cc" : "punct");
      arc(verb, verb2, "conj");
      commit(*subject);
      arc(verb2, subject->head, "nsubj");
      pos = verb2 + 1;
      clause_rest(verb2, pos);
      return;
    }
    fail(cc, n() - 1);
  }

  void tails(int verb, int& pos) {
    while (in_range(pos)) {
      if (is_adverb(pos)) {
        arc(verb, pos, "advmod");
        ++pos;
        continue;
      }
      if (is_prep(pos) && in_range(pos + 1) && (lower(pos + 1) == "total" || lower(pos + 1) == "all")) {
        // "in total", "in all"
        arc(verb, pos + 1, "advmod");
        arc(pos + 1, pos, "case");
        pos += 2;
        continue;
      }
      if (is_prep(pos)) {
        auto object = noun_phrase(pos + 1);
        if (!object) fail(pos, n() - 1);
        commit(*object);
        arc(verb, object->head, "nmod");
        arc(object->head, pos, "case");
        pos = object->end;
        continue;
      }
      break;
    }
  }

  const std::vector<Token>& toks_;
  std::vector<Arc> arcs_;
};

}  // namespace

SentenceAnnotation Tagger::tag_and_parse(const std::vector<std::string>& words) const {
  std::vector<Token> toks = tag(words);
  return ClauseParser(toks).parse(words);
}

}  // namespace aimp::nlp
