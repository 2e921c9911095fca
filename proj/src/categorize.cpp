#include "aimp/categorize.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "aimp/detail/overloaded.hpp"

namespace aimp::cat {

std::string_view to_string(CandidateSet c) {
  switch (c) {
    case CandidateSet::Get: return "{get}";
    case CandidateSet::Observation: return "{observation}";
    case CandidateSet::ConstructOrDestroy: return "{construct, destroy}";
    case CandidateSet::Transfer: return "{positive_transfer, negative_transfer}";
  }
  return "";
}

std::size_t candidate_count(CandidateSet c) {
  return c == CandidateSet::Get || c == CandidateSet::Observation ? 1 : 2;
}

std::string_view to_string(Polarity p) {
  return p == Polarity::Positive ? "positive" : "negative";
}

// ---------------------------------------------------------------------------

VerbLexicon VerbLexicon::parse(std::string_view text) {
  VerbLexicon lex;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) throw FormatError(line_no, "expected verb<TAB>positive|negative");
    std::string verb = nlp::lowercase(line.substr(0, tab));
    std::string_view label = line.substr(tab + 1);
    Polarity p;
    if (label == "positive") {
      p = Polarity::Positive;
    } else if (label == "negative") {
      p = Polarity::Negative;
    } else {
      throw FormatError(line_no, "unknown polarity '" + std::string(label) + "'");
    }
    if (verb.empty()) throw FormatError(line_no, "empty verb");
    auto existing = lex.find(verb);
    if (existing && *existing != p) throw FormatError(line_no, "'" + verb + "' annotated with both polarities");
    lex.insert(std::move(verb), p);
  }
  return lex;
}

VerbLexicon VerbLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open verb lexicon '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void VerbLexicon::insert(std::string lemma, Polarity p) {
  lemma = nlp::lowercase(lemma);
  auto it = entries_.find(lemma);
  if (it != entries_.end() && it->second != p) {
    throw InconsistentInputs("'" + lemma + "' annotated with both polarities");
  }
  entries_[std::move(lemma)] = p;
}

std::optional<Polarity> VerbLexicon::find(std::string_view lemma) const {
  auto it = entries_.find(lemma);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

VerbLexicon VerbLexicon::without(std::string_view lemma) const {
  VerbLexicon out = *this;
  if (auto it = out.entries_.find(lemma); it != out.entries_.end()) out.entries_.erase(it);
  return out;
}

void ProgramState::declare(const VerbSignature& s) {
  std::visit(detail::overloaded{
                 [&](const sig::Observation& o) { declared.insert(o.target); },
                 [&](const sig::Construct& c) { declared.insert(c.target); },
                 [&](const sig::Destroy& d) { declared.insert(d.target); },
                 [&](const sig::PositiveTransfer& t) {
                   declared.insert(t.first);
                   declared.insert(t.second);
                 },
                 [&](const sig::NegativeTransfer& t) {
                   declared.insert(t.first);
                   declared.insert(t.second);
                 },
                 [](const sig::Get&) {},
             },
             s);
}

// ---------------------------------------------------------------------------

namespace {

bool is_unvalued_word(std::string_view lower) {
  return lower == "many" || lower == "much";
}

std::optional<double> literal_value(std::string_view w) {
  if (w.empty() || w[0] < '0' || w[0] > '9') return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size()) return std::nullopt;
  return v;
}

bool is_quantity_word(const nlp::Token& t) {
  std::string lower = nlp::lowercase(t.text);
  return t.pos == "CD" || t.pos == "NUM" || is_unvalued_word(lower) || literal_value(lower).has_value();
}

}  // namespace

std::vector<Quantifier> find_quantifiers(const nlp::SentenceAnnotation& ann, const nlp::NumberWords& numbers) {
  const auto& toks = ann.graph.tokens();
  const int n = static_cast<int>(toks.size());
  std::vector<Quantifier> out;
  std::vector<Quantifier> articles;
  for (int k = 0; k < n; ++k) {
    std::string w = nlp::lowercase(toks[k].text);
    std::string next = k + 1 < n ? nlp::lowercase(toks[k + 1].text) : "";
    if (is_unvalued_word(w)) {
      out.push_back({k + 1, std::nullopt});
      continue;
    }
    if (auto lit = literal_value(w)) {
      out.push_back({k + 1, *lit});
      continue;
    }
    auto v = numbers.lookup(w);
    if (!v) continue;
    if (numbers.is_article(w)) {
      // "a dozen" is one quantity.
      if (!numbers.lookup(next) || numbers.is_article(next)) articles.push_back({k + 1, *v});
      continue;
    }
    if (numbers.is_tens(w) && numbers.is_unit(next)) {
      out.push_back({k + 1, *v + *numbers.lookup(next)});
      ++k;
      continue;
    }
    out.push_back({k + 1, *v});
  }
  return out.empty() ? articles : out;
}

int head_verb_of(const Quantifier& q, const nlp::DepGraph& g) {
  if (q.token_index < 1 || q.token_index > g.size()) throw NoVerbFound("quantifier index out of range");
  for (int cur = g.head(q.token_index); cur != 0; cur = g.head(cur)) {
    if (nlp::is_verb_tag(g.token(cur).pos)) return cur;
  }
  throw NoVerbFound("no verb above '" + g.token(q.token_index).text + "'");
}

namespace {

std::string sanitize(std::string_view word) {
  std::string out;
  for (char c : nlp::lowercase(word)) {
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) out += c;
  }
  return out;
}

std::optional<int> first_child(const nlp::DepGraph& g, int head, nlp::RelationClass cls,
                               const nlp::TagClassConfig& cfg) {
  for (int c : g.children(head)) {
    if (nlp::classify_relation(g.relation(c), cfg) == cls) return c;
  }
  return std::nullopt;
}

}  // namespace

std::string phrase_name(int head, const nlp::DepGraph& g, const nlp::TagClassConfig& cfg, bool lemmatize_head) {
  std::vector<int> members{head};
  std::vector<int> frontier{head};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int c : g.children(x)) {
      if (nlp::classify_relation(g.relation(c), cfg) != nlp::RelationClass::ModifierLike) continue;
      if (is_quantity_word(g.token(c))) continue;
      members.push_back(c);
      frontier.push_back(c);
    }
  }
  std::sort(members.begin(), members.end());
  std::string name;
  for (int i : members) {
    const auto& t = g.token(i);
    std::string word;
    if (i == head && lemmatize_head) {
      std::string lemma = t.lemma.empty() || t.lemma == "_" ? t.text : t.lemma;
      word = sanitize(nlp::singularize(nlp::lowercase(lemma)));
    } else {
      word = sanitize(t.text);
    }
    if (word.empty()) continue;
    if (!name.empty()) name += '_';
    name += word;
  }
  if (name.empty()) name = "x";
  if (name[0] < 'a' || name[0] > 'z') name = "v_" + name;
  return name;
}

VariableNames infer_variable_name(int verb, const nlp::DepGraph& g, const nlp::TagClassConfig& cfg) {
  const std::string& verb_text = g.token(verb).text;
  auto subject = first_child(g, verb, nlp::RelationClass::SubjectLike, cfg);
  if (!subject) throw MissingArgument(Argument::Subject, verb_text);
  auto object = first_child(g, verb, nlp::RelationClass::DirectObjectLike, cfg);
  if (!object) throw MissingArgument(Argument::Object, verb_text);

  std::string subject_part = phrase_name(*subject, g, cfg, false);
  std::string object_part = phrase_name(*object, g, cfg, true);
  VariableNames names{subject_part, object_part, Address(subject_part + "_" + object_part), std::nullopt,
                      std::nullopt};
  if (auto indirect = first_child(g, verb, nlp::RelationClass::IndirectObjectLike, cfg)) {
    names.indirect_part = phrase_name(*indirect, g, cfg, false);
    for (int c : g.children(*indirect, "case")) names.preposition = nlp::lowercase(g.token(c).text);
  }
  return names;
}

CandidateSet select_candidates(const nlp::SentenceAnnotation& ann, const Quantifier& q, const VariableNames& vars,
                               const ProgramState& state) {
  bool question = false;
  for (const auto& t : ann.graph.tokens()) {
    if (t.text == "?") question = true;
  }
  if (question && !q.valued()) return CandidateSet::Get;
  if (!state.is_declared(vars.combined)) return CandidateSet::Observation;
  if (vars.indirect_part) return CandidateSet::Transfer;
  return CandidateSet::ConstructOrDestroy;
}

PolarityDecision nearest_polarity(std::span<const double> query, const VerbLexicon& lex, const EmbeddingTable& emb) {
  PolarityDecision best;
  bool found = false;
  for (const auto& [word, polarity] : lex.entries()) {
    const auto* v = emb.find(word);
    if (!v) continue;
    double s = cosine_similarity(query, *v);
    best.scores.emplace_back(word, s);
    bool better = !found || s > best.similarity ||
                  (s == best.similarity && polarity == Polarity::Positive && best.polarity == Polarity::Negative);
    // Same score and polarity: the earlier (lexicographically smaller) verb stays.
    if (better) {
      best.polarity = polarity;
      best.nearest = word;
      best.similarity = s;
      found = true;
    }
  }
  if (!found) throw UnknownVerb("no lexicon verb has an embedding");
  return best;
}

PolarityDecision classify_verb(std::string_view lemma, const VerbLexicon& lex, const EmbeddingTable* emb) {
  std::string key = nlp::lowercase(lemma);
  if (auto p = lex.find(key)) {
    PolarityDecision d;
    d.polarity = *p;
    d.from_lexicon = true;
    d.nearest = key;
    d.similarity = 1.0;
    return d;
  }
  if (!emb) throw UnknownVerb("'" + key + "' is not annotated and no embeddings are loaded");
  const auto* v = emb->find(key);
  if (!v) throw UnknownVerb("'" + key + "' has no embedding");
  return nearest_polarity(*v, lex, *emb);
}

VerbSignature build_signature(CandidateSet c, std::optional<Polarity> polarity, const VariableNames& vars,
                              const Quantifier& q) {
  if (candidate_count(c) == 2 && !polarity) throw InconsistentInputs("polarity required for " + std::string(to_string(c)));
  if (candidate_count(c) == 1 && polarity) throw InconsistentInputs("polarity given for " + std::string(to_string(c)));
  if (c == CandidateSet::Get) return sig::Get{vars.combined};
  if (!q.valued()) throw InconsistentInputs("unvalued quantifier outside a question");
  ExprPtr amount = build::num(*q.value);
  switch (c) {
    case CandidateSet::Observation:
      return sig::Observation{vars.combined, amount};
    case CandidateSet::ConstructOrDestroy:
      if (*polarity == Polarity::Positive) return sig::Construct{vars.combined, amount};
      return sig::Destroy{vars.combined, amount};
    case CandidateSet::Transfer: {
      if (!vars.indirect_part) throw InconsistentInputs("transfer without an indirect-object-like dependent");
      Address other(*vars.indirect_part + "_" + vars.object_part);
      if (*polarity == Polarity::Positive) return sig::PositiveTransfer{vars.combined, other, amount};
      return sig::NegativeTransfer{vars.combined, other, amount};
    }
    default:
      break;
  }
  throw InconsistentInputs("unreachable candidate set");
}

LeaveOneOutReport leave_one_out(const VerbLexicon& lex, const EmbeddingTable& emb) {
  LeaveOneOutReport report;
  for (const auto& [verb, annotated] : lex.entries()) {
    if (!emb.contains(verb)) continue;
    PolarityDecision d = nearest_polarity(*emb.find(verb), lex.without(verb), emb);
    report.entries.push_back({verb, annotated, d.polarity, d.nearest, d.similarity});
    if (d.polarity == annotated) ++report.correct;
  }
  return report;
}

std::string LeaveOneOutReport::text() const {
  std::ostringstream os;
  char buf[64];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof buf, "%.17g", e.similarity);
    os << e.verb << '\t' << to_string(e.annotated) << '\t' << to_string(e.predicted) << '\t' << e.nearest << '\t'
       << buf << '\n';
  }
  os << "correct " << correct << '/' << entries.size() << '\n';
  return os.str();
}

}  // namespace aimp::cat
