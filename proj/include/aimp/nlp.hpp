#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aimp/errors.hpp"

namespace aimp::nlp {

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

struct Token {
  int index = 0;  // 1-based
  std::string text;
  std::string lemma;
  std::string pos;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Arc {
  int head = 0;
  int dependent = 0;
  std::string relation;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A dependency tree over the tokens of one sentence. Every token but the root
/// has exactly one head; the root's head is 0.
class DepGraph {
 public:
  DepGraph() = default;

  /// `heads[i]` and `relations[i]` describe tokens[i]. Throws InvalidGraph unless
  /// indices are 1..n in order, exactly one token has head 0, and heads form a tree.
  DepGraph(std::vector<Token> tokens, std::vector<int> heads, std::vector<std::string> relations);

  static DepGraph from_arcs(std::vector<Token> tokens, const std::vector<Arc>& arcs, int root);

  int size() const { return static_cast<int>(tokens_.size()); }
  bool empty() const { return tokens_.empty(); }
  const std::vector<Token>& tokens() const { return tokens_; }
  const Token& token(int index) const { return tokens_.at(index - 1); }
  int head(int index) const { return heads_.at(index - 1); }
  const std::string& relation(int index) const { return relations_.at(index - 1); }
  int root() const { return root_; }

  std::vector<Arc> edges() const;
  /// Direct dependents in token order.
  std::vector<int> children(int index) const;
  std::vector<int> children(int index, std::string_view relation) const;
  /// `index` and all its descendants, in token order.
  std::vector<int> subtree(int index) const;

  /// Keeps only `keep` (old indices); re-indexes from 1. `head_override` entries
  /// (old index -> {old head, relation}) replace the original attachment. The
  /// token whose head becomes 0 or falls outside `keep` becomes the root.
  DepGraph restrict(const std::vector<int>& keep,
                    const std::vector<Arc>& overrides = {}) const;

  friend bool operator==(const DepGraph&, const DepGraph&) = default;

 private:
  std::vector<Token> tokens_;
  std::vector<int> heads_;
  std::vector<std::string> relations_;
  int root_ = 0;
};

struct SentenceAnnotation {
  std::string original_text;
  DepGraph graph;
};

/// Penn (VB, VBZ, ...) or universal (VERB) verb tag.
bool is_verb_tag(std::string_view pos);
/// Penn NN* or universal NOUN/PROPN.
bool is_noun_tag(std::string_view pos);
bool is_proper_noun_tag(std::string_view pos);
bool is_adjective_tag(std::string_view pos);

enum class RelationClass { SubjectLike, DirectObjectLike, IndirectObjectLike, ModifierLike, Other };

std::string_view to_string(RelationClass c);

/// Generalized groups of dependency labels.
struct TagClassConfig {
  std::set<std::string> subject_like;
  std::set<std::string> direct_object_like;
  std::set<std::string> indirect_object_like;
  std::set<std::string> modifier_like;

  /// Covers both the Universal Dependencies and the older Stanford inventories.
  static TagClassConfig defaults();

  /// Throws Error if any label belongs to two classes.
  void validate() const;
};

RelationClass classify_relation(std::string_view label, const TagClassConfig& cfg);

/// Joins tokens with spaces, attaching punctuation and the possessive clitic to
/// the preceding token.
std::string render(const std::vector<std::string>& words);
std::string render(const DepGraph& g);

}  // namespace aimp::nlp
