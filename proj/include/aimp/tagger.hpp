#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aimp/nlp.hpp"

namespace aimp::nlp {

/// Cardinal words and their values ("one" -> 1, "dozen" -> 12, "a" -> 1).
class NumberWords {
 public:
  /// zero..twenty, the tens up to ninety, a/an and dozen.
  static NumberWords defaults();

  /// Reads `word<TAB>value` lines on top of `base`; `#` starts a comment.
  static NumberWords parse(std::string_view text, NumberWords base = defaults());

  std::optional<double> lookup(std::string_view word) const;
  bool is_article(std::string_view word) const { return word == "a" || word == "an"; }
  /// Value is a multiple of ten in 20..90.
  bool is_tens(std::string_view word) const;
  /// Value is an integer in 1..9.
  bool is_unit(std::string_view word) const;

  void set(std::string word, double value) { table_[std::move(word)] = value; }

 private:
  std::map<std::string, double, std::less<>> table_;
};

/// Shipped open-class vocabulary: `word<TAB>POS<TAB>lemma` per line.
class TaggerLexicon {
 public:
  struct Entry {
    std::string pos;
    std::string lemma;
  };

  static TaggerLexicon parse(std::string_view text);
  static TaggerLexicon load(const std::string& path);

  const Entry* find(std::string_view lowercase_word) const;
  bool is_common_noun(std::string_view lowercase_word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

class UnsupportedSentence : public Error {
 public:
  UnsupportedSentence(int begin, int end, std::string unmatched)
      : Error("no rule pattern matches tokens " + std::to_string(begin) + ".." + std::to_string(end) + ": '" +
              unmatched + "'"),
        begin_(begin),
        end_(end),
        unmatched_(std::move(unmatched)) {}

  /// 1-based inclusive span of the unmatched tokens.
  int begin() const { return begin_; }
  int end() const { return end_; }
  const std::string& unmatched() const { return unmatched_; }

 private:
  int begin_;
  int end_;
  std::string unmatched_;
};

/// Whitespace split with terminal punctuation (. ? ! ,) and the possessive 's
/// split into their own tokens.
std::vector<std::string> tokenize(std::string_view text);

std::string lowercase(std::string_view s);

/// Plural noun to singular by suffix rule (candies -> candy, boxes -> box).
std::string singularize(std::string_view noun);

/// Rule-based tagger plus a deterministic arc-assignment parser for the clause
/// shapes of grade-school word problems:
///
///   NP V [NP] NP {PP | ADV} [and ...] .
///   How many NP does NP V {PP | ADV} ?
///
/// NPs are [det] {possessor 's} [numbers] [adjectives] nouns, with "and"
/// coordination of subjects, objects, adjectives and whole clauses.
class Tagger {
 public:
  Tagger(TaggerLexicon lexicon, NumberWords numbers)
      : lexicon_(std::move(lexicon)), numbers_(std::move(numbers)) {}

  std::vector<Token> tag(const std::vector<std::string>& words) const;

  /// Throws UnsupportedSentence when no rule pattern covers the tokens.
  SentenceAnnotation tag_and_parse(const std::vector<std::string>& words) const;
  SentenceAnnotation tag_and_parse(std::string_view sentence) const { return tag_and_parse(tokenize(sentence)); }

  const TaggerLexicon& lexicon() const { return lexicon_; }
  const NumberWords& numbers() const { return numbers_; }

 private:
  TaggerLexicon lexicon_;
  NumberWords numbers_;
};

}  // namespace aimp::nlp
