#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aimp/nlp.hpp"
#include "aimp/tagger.hpp"

namespace aimp::pre {

/// A problem split into sentences on `.`, `?` and `!`. The terminal mark stays
/// with its sentence.
struct ProblemText {
  std::vector<std::string> sentences;
  std::string source;

  static ProblemText split(std::string_view raw);
};

enum class MentionKind { PersonName, CommonNoun };

struct EntityMention {
  std::string text;
  int sentence_index = 0;
  int token_index = 0;  // 1-based head token
  MentionKind kind = MentionKind::CommonNoun;
};

struct Substitution {
  int sentence_index = 0;
  int token_index = 0;  // 1-based, in the sentence before substitution
  std::string pronoun;
  std::string replacement;
};

struct CorefLog {
  std::vector<EntityMention> mentions;  // subject-position antecedents, in order
  std::vector<Substitution> substitutions;
  std::vector<std::string> diagnostics;
};

bool is_pronoun(std::string_view lowercase_word);
bool is_possessive_pronoun(std::string_view lowercase_word);

/// Replaces each pronoun with the most recent preceding subject-position mention;
/// possessive pronouns become "<mention>'s". Pronouns with no antecedent are left
/// in place and reported in `log->diagnostics`.
ProblemText resolve_coreferences(const ProblemText& p, const nlp::Tagger& tagger, CorefLog* log = nullptr);

/// Same rule over supplied parses: the antecedent's subtree is spliced into the
/// graph in place of the pronoun.
std::vector<nlp::SentenceAnnotation> resolve_coreferences(const std::vector<nlp::SentenceAnnotation>& sentences,
                                                          const nlp::TagClassConfig& cfg,
                                                          CorefLog* log = nullptr);

/// Splits coordination until no `conj` arc remains:
///  - coordinated clauses become separate fragments; a clause without its own
///    subject borrows the first clause's subject;
///  - coordinated subjects or objects give one fragment per conjunct around the
///    shared verb;
///  - coordinated adjectives lose the conjunction and stay as stacked modifiers.
std::vector<nlp::SentenceAnnotation> split_conjunctions(const nlp::SentenceAnnotation& ann,
                                                        const nlp::TagClassConfig& cfg);

/// split_conjunctions rendered back to plain text.
std::vector<std::string> break_conjunctions(const nlp::SentenceAnnotation& ann, const nlp::TagClassConfig& cfg);

}  // namespace aimp::pre
