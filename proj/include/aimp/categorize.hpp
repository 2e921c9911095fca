#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aimp/ast.hpp"
#include "aimp/embedding.hpp"
#include "aimp/nlp.hpp"
#include "aimp/signature.hpp"
#include "aimp/tagger.hpp"

namespace aimp::cat {

/// A numeral, a number word, or the unvalued "many"/"much".
struct Quantifier {
  int token_index = 0;  // 1-based
  std::optional<double> value;

  bool valued() const { return value.has_value(); }
  friend bool operator==(const Quantifier&, const Quantifier&) = default;
};

enum class CandidateSet { Get, Observation, ConstructOrDestroy, Transfer };

std::string_view to_string(CandidateSet c);
std::size_t candidate_count(CandidateSet c);

enum class Polarity { Positive, Negative };

std::string_view to_string(Polarity p);

/// Hand-annotated verbs: lemma -> polarity.
class VerbLexicon {
 public:
  /// `verb<TAB>positive|negative` lines; `#` comments. Throws FormatError,
  /// including when a lemma is annotated with both polarities.
  static VerbLexicon parse(std::string_view text);
  static VerbLexicon load(const std::string& path);

  void insert(std::string lemma, Polarity p);
  std::optional<Polarity> find(std::string_view lemma) const;
  VerbLexicon without(std::string_view lemma) const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, Polarity, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, Polarity, std::less<>> entries_;
};

/// Addresses already initialized by the program emitted so far.
struct ProgramState {
  std::set<Address> declared;

  bool is_declared(const Address& a) const { return declared.count(a) > 0; }
  /// Adds every address the signature writes.
  void declare(const VerbSignature& s);
};

class NoVerbFound : public Error {
 public:
  using Error::Error;
};

enum class Argument { Subject, Object };

class MissingArgument : public Error {
 public:
  MissingArgument(Argument which, std::string verb)
      : Error(std::string("verb '") + verb + "' has no " + (which == Argument::Subject ? "subject" : "object")),
        which_(which) {}

  Argument which() const { return which_; }

 private:
  Argument which_;
};

class UnknownVerb : public Error {
 public:
  using Error::Error;
};

class InconsistentInputs : public Error {
 public:
  using Error::Error;
};

/// Quantifiers in token order. "twenty one" merges into a single quantifier at
/// the first word; an article directly before a number word ("a dozen") is
/// absorbed; a bare article counts as 1 only when nothing else in the sentence
/// is a quantifier.
std::vector<Quantifier> find_quantifiers(const nlp::SentenceAnnotation& ann, const nlp::NumberWords& numbers);

/// First verb-tagged token reached walking head links upward from the quantifier.
int head_verb_of(const Quantifier& q, const nlp::DepGraph& g);

struct VariableNames {
  std::string subject_part;           // "pooja_mom"
  std::string object_part;            // "green_apple"
  Address combined;                   // "pooja_mom_green_apple"
  std::optional<std::string> indirect_part;  // from an iobj/nmod dependent, if any
  std::optional<std::string> preposition;    // "from"/"to" marking the indirect dependent
};

/// Underscore-joined name of a phrase: its head plus every modifier-like
/// descendant reached through modifier-like arcs, in token order, lowercased.
/// Quantity words are skipped. With `lemmatize_head` the head contributes its
/// singular lemma.
std::string phrase_name(int head, const nlp::DepGraph& g, const nlp::TagClassConfig& cfg, bool lemmatize_head);

/// Subject name, object name and their combination for the verb at `verb`.
/// Throws MissingArgument when the subject-like or direct-object-like dependent
/// is absent.
VariableNames infer_variable_name(int verb, const nlp::DepGraph& g, const nlp::TagClassConfig& cfg);

/// Decision tree:
///   1. a question mark with an unvalued quantifier -> {get}
///   2. combined address not yet declared          -> {observation}
///   3. verb has an indirect-object-like dependent  -> {positive, negative transfer}
///   4. otherwise                                    -> {construct, destroy}
CandidateSet select_candidates(const nlp::SentenceAnnotation& ann, const Quantifier& q, const VariableNames& vars,
                               const ProgramState& state);

struct PolarityDecision {
  Polarity polarity = Polarity::Positive;
  bool from_lexicon = false;
  std::string nearest;  // lexicon verb with the highest similarity
  double similarity = 0.0;
  std::vector<std::pair<std::string, double>> scores;  // every lexicon verb consulted
};

/// Polarity of the lexicon verb nearest to `query` by cosine similarity. Ties go
/// to Positive, then to the lexicographically smaller verb. Throws UnknownVerb
/// when no lexicon verb has an embedding.
PolarityDecision nearest_polarity(std::span<const double> query, const VerbLexicon& lex, const EmbeddingTable& emb);

/// Lexicon annotation when present, else nearest_polarity of the lemma's vector.
/// Throws UnknownVerb when the lemma has no vector.
PolarityDecision classify_verb(std::string_view lemma, const VerbLexicon& lex, const EmbeddingTable* emb);

/// Populates the chosen signature. Transfers use `<subject>_<object>` and
/// `<indirect>_<object>`. Throws InconsistentInputs when polarity is missing for a
/// two-way candidate set, when the quantifier is unvalued outside {get}, or when
/// a transfer has no indirect dependent.
VerbSignature build_signature(CandidateSet c, std::optional<Polarity> polarity, const VariableNames& vars,
                              const Quantifier& q);

struct LeaveOneOutEntry {
  std::string verb;
  Polarity annotated;
  Polarity predicted;
  std::string nearest;
  double similarity;
};

struct LeaveOneOutReport {
  std::vector<LeaveOneOutEntry> entries;
  std::size_t correct = 0;

  double accuracy() const { return entries.empty() ? 0.0 : static_cast<double>(correct) / entries.size(); }
  /// One line per verb with similarities printed to 17 significant digits.
  std::string text() const;
};

/// Classifies every lexicon verb that has a vector against the lexicon minus
/// that verb.
LeaveOneOutReport leave_one_out(const VerbLexicon& lex, const EmbeddingTable& emb);

}  // namespace aimp::cat
