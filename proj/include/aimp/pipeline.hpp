#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aimp/ast.hpp"
#include "aimp/categorize.hpp"
#include "aimp/embedding.hpp"
#include "aimp/eval.hpp"
#include "aimp/nlp.hpp"
#include "aimp/preprocess.hpp"
#include "aimp/signature.hpp"
#include "aimp/tagger.hpp"

namespace aimp {

/// Paths and switches. Unset paths mean "not loaded".
struct PipelineConfig {
  std::optional<std::string> embeddings_path;
  std::optional<std::string> lexicon_path;
  std::optional<std::string> tagger_lexicon_path;
  std::optional<std::string> numwords_path;
  std::optional<std::string> conllu_path;
  nlp::TagClassConfig tagclasses = nlp::TagClassConfig::defaults();
  bool trace = false;

  /// The shipped data files.
  static PipelineConfig defaults(const std::filesystem::path& data_dir = AIMP_DATA_DIR);

  /// Applies a JSON config file on top of `base`. Keys: embeddings, lexicon,
  /// tagger_lexicon, numwords, conllu, trace, and tagclasses (an object with
  /// subject_like, direct_object_like, indirect_object_like and modifier_like
  /// arrays). Relative paths resolve against the config file's directory.
  static PipelineConfig from_file(const std::filesystem::path& path, PipelineConfig base = defaults());
};

/// Everything loaded from a PipelineConfig; read-only once built.
struct Resources {
  nlp::Tagger tagger;
  cat::VerbLexicon lexicon;
  std::optional<cat::EmbeddingTable> embeddings;
  nlp::TagClassConfig tagclasses;

  /// Throws Error when a configured file is missing or malformed.
  static Resources load(const PipelineConfig& cfg);
};

/// One quantifier's path through categorization.
struct StepRecord {
  cat::Quantifier quantifier;
  std::string quantifier_text;
  int head_verb = 0;
  std::string head_verb_text;
  std::string head_verb_lemma;
  std::optional<cat::VariableNames> variables;
  std::optional<cat::CandidateSet> candidates;
  std::optional<cat::PolarityDecision> polarity;
  std::optional<std::string> preposition_cue;
  std::optional<VerbSignature> signature;
  CmdPtr command;
};

struct FragmentRecord {
  std::string text;
  int sentence_index = 0;
  bool skipped = false;
  std::vector<StepRecord> steps;
};

struct CompilationTrace {
  std::vector<pre::Substitution> substitutions;
  std::vector<FragmentRecord> fragments;
  Diagnostics diagnostics;
};

class CompileError : public Error {
 public:
  CompileError(const std::string& message, std::string fragment, CompilationTrace trace)
      : Error(fragment.empty() ? message : message + " (in \"" + fragment + "\")"),
        fragment_(std::move(fragment)),
        trace_(std::move(trace)) {}

  const std::string& fragment() const { return fragment_; }
  const CompilationTrace& trace() const { return trace_; }

 private:
  std::string fragment_;
  CompilationTrace trace_;
};

struct Compilation {
  Program program;
  CompilationTrace trace;
};

/// Word problem -> A-IMP program. With `conllu`, the supplied parses replace the
/// built-in parser and the problem text is taken from them. Throws CompileError
/// (carrying the partial trace).
Compilation compile(const std::string& problem, const Resources& res, const std::string* conllu = nullptr);

struct Solution {
  std::vector<double> answers;
  Program program;
  CompilationTrace trace;
};

/// compile, then run the program on an empty store. Evaluation diagnostics are
/// appended to the trace. Throws CompileError or EvalError.
Solution solve(const std::string& problem, const Resources& res, const std::string* conllu = nullptr);

/// Integral values (within 1e-9) print without a fractional part.
std::string format_answer(double v);

struct CorpusProblem {
  std::string text;
  std::optional<std::vector<double>> expected;
};

/// `---`-separated problems; an `EXPECTED: <numbers>` line attaches answers.
std::vector<CorpusProblem> parse_corpus(const std::string& text);

struct CorpusResult {
  std::string problem;
  std::optional<std::vector<double>> expected;
  std::vector<double> answers;
  bool ok = false;     // compiled and ran
  bool passed = false; // ok and answers match expected (or nothing expected)
  std::string error;
  Diagnostics diagnostics;
};

struct CorpusReport {
  std::vector<CorpusResult> results;

  std::size_t passed() const;
  std::size_t mismatches() const;
  std::string text() const;
};

CorpusReport run_corpus(const std::vector<CorpusProblem>& problems, const Resources& res);
/// A corpus file, or every `*.txt` file of a directory in name order.
CorpusReport run_corpus(const std::filesystem::path& path, const Resources& res);

}  // namespace aimp
