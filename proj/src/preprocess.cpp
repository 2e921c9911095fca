#include "aimp/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace aimp::pre {

using nlp::DepGraph;
using nlp::SentenceAnnotation;
using nlp::Token;

namespace {

bool is_sentence_end(char c) {
  return c == '.' || c == '?' || c == '!';
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string capitalize(std::string w) {
  if (!w.empty()) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
  return w;
}

}  // namespace

ProblemText ProblemText::split(std::string_view raw) {
  ProblemText p;
  p.source = std::string(raw);
  std::string cur;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    cur += c == '\n' || c == '\r' || c == '\t' ? ' ' : c;
    if (!is_sentence_end(c)) continue;
    // A mark ends the sentence only when followed by whitespace or the end.
    std::size_t j = i + 1;
    while (j < raw.size() && is_sentence_end(raw[j])) cur += raw[j++];
    if (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) {
      i = j - 1;
      continue;
    }
    i = j - 1;
    if (auto s = trim(cur); !s.empty()) p.sentences.push_back(std::move(s));
    cur.clear();
  }
  if (auto s = trim(cur); !s.empty()) p.sentences.push_back(std::move(s));
  return p;
}

bool is_pronoun(std::string_view w) {
  static const std::set<std::string, std::less<>> pronouns = {"he",  "she", "it",   "they", "him", "her",
                                                              "them", "his", "hers", "its",  "their"};
  return pronouns.count(w) > 0;
}

bool is_possessive_pronoun(std::string_view w) {
  return w == "his" || w == "hers" || w == "its" || w == "their";
}

// ---------------------------------------------------------------------------
// Text route.

namespace {

struct TextMention {
  std::vector<std::string> words;
  MentionKind kind = MentionKind::CommonNoun;
};

// Subject span [begin, end) in token positions, if the sentence has one.
std::optional<std::pair<int, int>> subject_span(const std::vector<Token>& tags) {
  auto is_main_verb = [&](int k) { return nlp::is_verb_tag(tags[k].pos) && tags[k].lemma != "do"; };
  const int n = static_cast<int>(tags.size());
  int begin = 0;
  if (n > 0 && nlp::lowercase(tags[0].text) == "how") {
    int aux = -1;
    for (int k = 0; k < n; ++k) {
      if (nlp::is_verb_tag(tags[k].pos) && tags[k].lemma == "do") {
        aux = k;
        break;
      }
    }
    if (aux < 0) return std::nullopt;
    begin = aux + 1;
  }
  for (int k = begin; k < n; ++k) {
    if (is_main_verb(k)) {
      if (k == begin) return std::nullopt;
      return std::make_pair(begin, k);
    }
  }
  return std::nullopt;
}

}  // namespace

ProblemText resolve_coreferences(const ProblemText& p, const nlp::Tagger& tagger, CorefLog* log) {
  ProblemText out;
  out.source = p.source;
  std::optional<TextMention> antecedent;

  for (std::size_t si = 0; si < p.sentences.size(); ++si) {
    const auto words = nlp::tokenize(p.sentences[si]);
    const auto tags = tagger.tag(words);
    const auto span = subject_span(tags);
    const int n = static_cast<int>(words.size());

    std::vector<std::string> rewritten;
    std::size_t span_start = 0;
    bool changed = false;

    auto close_span = [&]() {
      std::vector<std::string> mention(rewritten.begin() + static_cast<std::ptrdiff_t>(span_start), rewritten.end());
      if (mention.empty()) return;
      // Only nominal spans count: a pronoun left unresolved is not an antecedent.
      // A pronoun subject (resolved or not) keeps the existing antecedent.
      int head = -1;
      for (int k = span->first; k < span->second; ++k) {
        if (nlp::is_noun_tag(tags[k].pos)) head = k;
      }
      if (head < 0) return;
      if (tags[span->first].pos == "DT") mention.front() = nlp::lowercase(mention.front());
      TextMention m{mention, nlp::is_proper_noun_tag(tags[head].pos) ? MentionKind::PersonName
                                                                      : MentionKind::CommonNoun};
      if (log) log->mentions.push_back({nlp::render(mention), static_cast<int>(si), head + 1, m.kind});
      antecedent = std::move(m);
    };

    for (int k = 0; k < n; ++k) {
      if (span && k == span->first) span_start = rewritten.size();
      if (span && k == span->second) close_span();

      std::string lower = nlp::lowercase(words[k]);
      if (!is_pronoun(lower)) {
        rewritten.push_back(words[k]);
        continue;
      }
      if (!antecedent) {
        rewritten.push_back(words[k]);
        if (log) {
          log->diagnostics.push_back("unresolved pronoun '" + words[k] + "' in sentence " + std::to_string(si + 1));
        }
        continue;
      }
      bool possessive = is_possessive_pronoun(lower) || lower == "hers" || (lower == "her" && tags[k].pos == "PRP$");
      std::vector<std::string> repl = antecedent->words;
      if (k == 0) repl.front() = capitalize(repl.front());
      if (possessive) repl.push_back("'s");
      if (log) log->substitutions.push_back({static_cast<int>(si), k + 1, words[k], nlp::render(repl)});
      rewritten.insert(rewritten.end(), repl.begin(), repl.end());
      changed = true;
    }
    out.sentences.push_back(changed ? nlp::render(rewritten) : p.sentences[si]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph route.

namespace {

struct GraphMention {
  std::vector<Token> tokens;
  std::vector<int> heads;  // local index of the head, -1 for the mention head
  std::vector<std::string> relations;
  int head_local = 0;
};

GraphMention extract_mention(const DepGraph& g, int head) {
  GraphMention m;
  std::vector<int> keep;
  for (int i : g.subtree(head)) {
    if (g.relation(i) != "punct") keep.push_back(i);
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    int i = keep[k];
    m.tokens.push_back(g.token(i));
    if (k == 0 && (m.tokens.back().pos == "DT" || m.tokens.back().pos == "DET")) {
      m.tokens.back().text = nlp::lowercase(m.tokens.back().text);
    }
    m.relations.push_back(g.relation(i));
    if (i == head) {
      m.heads.push_back(-1);
      m.head_local = static_cast<int>(k);
    } else {
      auto it = std::find(keep.begin(), keep.end(), g.head(i));
      m.heads.push_back(it == keep.end() ? -1 : static_cast<int>(it - keep.begin()));
    }
  }
  return m;
}

struct Replacement {
  int pronoun = 0;
  const GraphMention* mention = nullptr;
  bool possessive = false;
};

DepGraph splice(const DepGraph& g, const std::vector<Replacement>& reps) {
  const int n = g.size();
  std::vector<int> remap(n + 1, 0);
  std::vector<Token> toks;
  std::vector<nlp::Arc> arcs;
  struct Placed {
    int old_index;
    int base;  // new index of the first mention token
    const Replacement* rep;
  };
  std::vector<Placed> placed;

  for (int i = 1; i <= n; ++i) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](const Replacement& r) { return r.pronoun == i; });
    if (it == reps.end()) {
      Token t = g.token(i);
      t.index = static_cast<int>(toks.size()) + 1;
      remap[i] = t.index;
      toks.push_back(std::move(t));
      continue;
    }
    int base = static_cast<int>(toks.size()) + 1;
    for (std::size_t k = 0; k < it->mention->tokens.size(); ++k) {
      Token t = it->mention->tokens[k];
      t.index = base + static_cast<int>(k);
      if (i == 1 && k == 0) t.text = capitalize(t.text);
      toks.push_back(std::move(t));
    }
    remap[i] = base + it->mention->head_local;
    if (it->possessive) toks.push_back(Token{static_cast<int>(toks.size()) + 1, "'s", "'s", "POS"});
    placed.push_back({i, base, &*it});
  }

  for (int i = 1; i <= n; ++i) {
    auto p = std::find_if(placed.begin(), placed.end(), [&](const Placed& x) { return x.old_index == i; });
    int head = g.head(i) == 0 ? 0 : remap[g.head(i)];
    if (p == placed.end()) {
      if (head != 0) arcs.push_back({head, remap[i], g.relation(i)});
      continue;
    }
    const GraphMention& m = *p->rep->mention;
    for (std::size_t k = 0; k < m.tokens.size(); ++k) {
      int self = p->base + static_cast<int>(k);
      if (m.heads[k] == -1) {
        if (head != 0) arcs.push_back({head, self, g.relation(i)});
      } else {
        arcs.push_back({p->base + m.heads[k], self, m.relations[k]});
      }
    }
    if (p->rep->possessive) {
      arcs.push_back({remap[i], p->base + static_cast<int>(m.tokens.size()), "case"});
    }
  }
  return DepGraph::from_arcs(std::move(toks), arcs, remap[g.root()]);
}

std::optional<int> subject_of_root(const DepGraph& g, const nlp::TagClassConfig& cfg) {
  for (int c : g.children(g.root())) {
    if (nlp::classify_relation(g.relation(c), cfg) == nlp::RelationClass::SubjectLike) return c;
  }
  return std::nullopt;
}

}  // namespace

std::vector<SentenceAnnotation> resolve_coreferences(const std::vector<SentenceAnnotation>& sentences,
                                                     const nlp::TagClassConfig& cfg, CorefLog* log) {
  std::vector<SentenceAnnotation> out;
  std::optional<GraphMention> antecedent;

  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const DepGraph& g = sentences[si].graph;
    auto subject = subject_of_root(g, cfg);
    int subject_end = 0;
    if (subject) subject_end = g.subtree(*subject).back();

    auto pronouns_in = [&](int lo, int hi) {
      std::vector<int> idx;
      for (int i = lo; i <= hi; ++i) {
        if (is_pronoun(nlp::lowercase(g.token(i).text))) idx.push_back(i);
      }
      return idx;
    };
    auto make_reps = [&](const std::vector<int>& idx, const GraphMention* m) {
      std::vector<Replacement> reps;
      for (int i : idx) {
        std::string lower = nlp::lowercase(g.token(i).text);
        if (!m) {
          if (log) {
            log->diagnostics.push_back("unresolved pronoun '" + g.token(i).text + "' in sentence " +
                                       std::to_string(si + 1));
          }
          continue;
        }
        bool possessive = is_possessive_pronoun(lower) ||
                          (lower == "her" && nlp::classify_relation(g.relation(i), cfg) ==
                                                 nlp::RelationClass::ModifierLike);
        reps.push_back({i, m, possessive});
        if (log) {
          std::vector<std::string> words;
          for (const auto& t : m->tokens) words.push_back(t.text);
          if (possessive) words.push_back("'s");
          log->substitutions.push_back({static_cast<int>(si), i, g.token(i).text, nlp::render(words)});
        }
      }
      return reps;
    };

    // Pronouns up to the end of the subject use the previous antecedent; the
    // (resolved) subject then becomes the antecedent for the rest.
    std::vector<Replacement> reps = make_reps(pronouns_in(1, subject_end), antecedent ? &*antecedent : nullptr);
    std::optional<GraphMention> current = antecedent;
    if (subject) {
      DepGraph partial = splice(g, reps);
      auto s = subject_of_root(partial, cfg);
      if (s && !is_pronoun(nlp::lowercase(partial.token(*s).text))) {
        current = extract_mention(partial, *s);
        if (log) {
          std::vector<std::string> words;
          for (const auto& t : current->tokens) words.push_back(t.text);
          bool proper = nlp::is_proper_noun_tag(partial.token(*s).pos);
          log->mentions.push_back({nlp::render(words), static_cast<int>(si), *s,
                                   proper ? MentionKind::PersonName : MentionKind::CommonNoun});
        }
      }
    }
    auto rest = make_reps(pronouns_in(subject_end + 1, g.size()), current ? &*current : nullptr);
    reps.insert(reps.end(), rest.begin(), rest.end());
    antecedent = current;

    if (reps.empty()) {
      out.push_back(sentences[si]);
    } else {
      DepGraph spliced = splice(g, reps);
      out.push_back({nlp::render(spliced), std::move(spliced)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjunction breaking.

namespace {

std::vector<int> minus(std::vector<int> a, const std::vector<int>& b) {
  a.erase(std::remove_if(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); }),
          a.end());
  return a;
}

std::vector<int> all_tokens(const DepGraph& g) {
  std::vector<int> v(g.size());
  for (int i = 0; i < g.size(); ++i) v[i] = i + 1;
  return v;
}

// Coordinators ("and", ",") attached to a conjunct.
std::vector<int> coordinators(const DepGraph& g, int conjunct) {
  std::vector<int> out;
  for (int c : g.children(conjunct)) {
    if (c < conjunct && (g.relation(c) == "cc" || g.relation(c) == "punct")) out.push_back(c);
  }
  return out;
}

std::optional<std::vector<DepGraph>> split_once(const DepGraph& g, const nlp::TagClassConfig& cfg) {
  for (int d = 1; d <= g.size(); ++d) {
    if (g.relation(d) != "conj" || g.head(d) == 0) continue;
    const int h = g.head(d);
    const auto all = all_tokens(g);

    if (nlp::is_adjective_tag(g.token(h).pos) || nlp::is_adjective_tag(g.token(d).pos)) {
      // Adjectives: drop the coordinator, stack the conjunct on the noun.
      auto keep = minus(all, coordinators(g, d));
      nlp::Arc over{g.head(h), d, g.relation(h)};
      return std::vector<DepGraph>{g.restrict(keep, {over})};
    }

    if (nlp::is_verb_tag(g.token(h).pos) && nlp::is_verb_tag(g.token(d).pos)) {
      std::vector<DepGraph> parts;
      parts.push_back(g.restrict(minus(all, g.subtree(d))));

      auto second = minus(g.subtree(d), coordinators(g, d));
      std::vector<nlp::Arc> overrides;
      bool has_subject = false;
      for (int c : g.children(d)) {
        if (nlp::classify_relation(g.relation(c), cfg) == nlp::RelationClass::SubjectLike) has_subject = true;
      }
      if (!has_subject) {
        for (int c : g.children(h)) {
          if (nlp::classify_relation(g.relation(c), cfg) != nlp::RelationClass::SubjectLike) continue;
          auto sub = g.subtree(c);
          second.insert(second.end(), sub.begin(), sub.end());
          overrides.push_back({d, c, g.relation(c)});
        }
      }
      // The closing mark belongs to every clause.
      for (int c : g.children(h, "punct")) {
        if (c > d) {
          second.push_back(c);
          overrides.push_back({d, c, "punct"});
        }
      }
      parts.push_back(g.restrict(second, overrides));
      return parts;
    }

    // Nominal coordination: one fragment per conjunct around the shared verb.
    std::vector<int> conjuncts{h};
    for (int c : g.children(h, "conj")) conjuncts.push_back(c);
    const auto outside = minus(all, g.subtree(h));
    std::vector<DepGraph> parts;
    for (int c : conjuncts) {
      std::vector<int> keep = outside;
      std::vector<int> mine = g.subtree(c);
      if (c == h) {
        for (int other : conjuncts) {
          if (other != h) mine = minus(mine, g.subtree(other));
        }
      } else {
        mine = minus(mine, coordinators(g, c));
      }
      keep.insert(keep.end(), mine.begin(), mine.end());
      std::vector<nlp::Arc> overrides;
      if (c != h) overrides.push_back({g.head(h), c, g.relation(h)});
      parts.push_back(g.restrict(keep, overrides));
    }
    return parts;
  }
  return std::nullopt;
}

}  // namespace

std::vector<SentenceAnnotation> split_conjunctions(const SentenceAnnotation& ann, const nlp::TagClassConfig& cfg) {
  std::vector<SentenceAnnotation> done;
  std::vector<DepGraph> work{ann.graph};
  while (!work.empty()) {
    DepGraph g = std::move(work.front());
    work.erase(work.begin());
    auto parts = split_once(g, cfg);
    if (!parts) {
      if (g.size() == ann.graph.size()) {
        done.push_back({ann.original_text, std::move(g)});
      } else {
        done.push_back({nlp::render(g), std::move(g)});
      }
      continue;
    }
    work.insert(work.begin(), parts->begin(), parts->end());
  }
  return done;
}

std::vector<std::string> break_conjunctions(const SentenceAnnotation& ann, const nlp::TagClassConfig& cfg) {
  std::vector<std::string> out;
  for (const auto& frag : split_conjunctions(ann, cfg)) out.push_back(frag.original_text);
  return out;
}

}  // namespace aimp::pre
