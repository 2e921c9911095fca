#include "aimp/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "aimp/conllu.hpp"
#include "aimp/syntax.hpp"
#include "aimp/typecheck.hpp"

namespace aimp {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw Error(std::string("cannot open ") + what + " '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

PipelineConfig PipelineConfig::defaults(const fs::path& data_dir) {
  PipelineConfig cfg;
  cfg.embeddings_path = (data_dir / "embeddings_toy50.txt").string();
  cfg.lexicon_path = (data_dir / "verbs.tsv").string();
  cfg.tagger_lexicon_path = (data_dir / "tagger_lexicon.tsv").string();
  return cfg;
}

PipelineConfig PipelineConfig::from_file(const fs::path& path, PipelineConfig base) {
  json doc;
  try {
    doc = json::parse(read_file(path, "config"));
  } catch (const json::exception& e) {
    throw Error("config '" + path.string() + "': " + e.what());
  }
  if (!doc.is_object()) throw Error("config '" + path.string() + "' must be a JSON object");
  const fs::path dir = path.parent_path();
  auto path_key = [&](const char* key, std::optional<std::string>& slot) {
    if (!doc.contains(key)) return;
    if (doc[key].is_null()) {
      slot.reset();
      return;
    }
    fs::path p = doc[key].get<std::string>();
    slot = (p.is_relative() ? dir / p : p).string();
  };
  try {
    path_key("embeddings", base.embeddings_path);
    path_key("lexicon", base.lexicon_path);
    path_key("tagger_lexicon", base.tagger_lexicon_path);
    path_key("numwords", base.numwords_path);
    path_key("conllu", base.conllu_path);
    if (doc.contains("trace")) base.trace = doc["trace"].get<bool>();
    if (doc.contains("tagclasses")) {
      const json& tc = doc["tagclasses"];
      auto labels = [&](const char* key, std::set<std::string>& slot) {
        if (tc.contains(key)) slot = tc[key].get<std::set<std::string>>();
      };
      labels("subject_like", base.tagclasses.subject_like);
      labels("direct_object_like", base.tagclasses.direct_object_like);
      labels("indirect_object_like", base.tagclasses.indirect_object_like);
      labels("modifier_like", base.tagclasses.modifier_like);
    }
  } catch (const json::exception& e) {
    throw Error("config '" + path.string() + "': " + e.what());
  }
  base.tagclasses.validate();
  return base;
}

Resources Resources::load(const PipelineConfig& cfg) {
  cfg.tagclasses.validate();
  if (!cfg.tagger_lexicon_path) throw Error("a tagger lexicon is required");
  nlp::NumberWords numbers = nlp::NumberWords::defaults();
  if (cfg.numwords_path) numbers = nlp::NumberWords::parse(read_file(*cfg.numwords_path, "number words"));
  cat::VerbLexicon lexicon;
  if (cfg.lexicon_path) lexicon = cat::VerbLexicon::load(*cfg.lexicon_path);
  std::optional<cat::EmbeddingTable> embeddings;
  if (cfg.embeddings_path) embeddings = cat::load_word2vec(*cfg.embeddings_path);
  return Resources{nlp::Tagger(nlp::TaggerLexicon::load(*cfg.tagger_lexicon_path), std::move(numbers)),
                   std::move(lexicon), std::move(embeddings), cfg.tagclasses};
}

// ---------------------------------------------------------------------------

namespace {

struct Annotated {
  nlp::SentenceAnnotation ann;
  int sentence_index;
};

class Compiler {
 public:
  Compiler(const Resources& res) : res_(res) {}

  Compilation run(const std::string& problem, const std::string* conllu) {
    if (trim(problem).empty() && (!conllu || trim(*conllu).empty())) fail("empty problem", "");

    std::vector<std::optional<nlp::SentenceAnnotation>> sentences;
    bool builtin = conllu == nullptr;
    if (builtin) {
      pre::CorefLog log;
      auto text = pre::resolve_coreferences(pre::ProblemText::split(problem), res_.tagger, &log);
      absorb(log);
      for (std::size_t si = 0; si < text.sentences.size(); ++si) {
        sentences.push_back(parse(text.sentences[si], static_cast<int>(si)));
      }
    } else {
      std::vector<nlp::SentenceAnnotation> loaded;
      try {
        loaded = nlp::load_conllu(*conllu);
      } catch (const FormatError& e) {
        fail(std::string("CoNLL-U: ") + e.what(), "");
      }
      if (loaded.empty()) fail("empty problem", "");
      pre::CorefLog log;
      for (auto& a : pre::resolve_coreferences(loaded, res_.tagclasses, &log)) sentences.push_back(std::move(a));
      absorb(log);
    }

    std::vector<CmdPtr> commands;
    for (std::size_t si = 0; si < sentences.size(); ++si) {
      if (!sentences[si]) {
        const auto& [text, why] = unparsed_.at(static_cast<int>(si));
        trace_.fragments.push_back(FragmentRecord{text, static_cast<int>(si), true, {}});
        trace_.diagnostics.push_back("no quantifier in \"" + text + "\"; skipped (" + why + ")");
        continue;
      }
      for (auto& frag : pre::split_conjunctions(*sentences[si], res_.tagclasses)) {
        nlp::SentenceAnnotation ann = builtin ? reparse(frag) : frag;
        fragment(ann, static_cast<int>(si), commands);
      }
    }

    CmdPtr root = commands.empty() ? build::skip() : commands.back();
    for (std::size_t k = commands.size(); k-- > 1;) root = build::seq(commands[k - 1], root);
    try {
      typecheck_cmd(*root);
    } catch (const TypeError& e) {
      fail(std::string("emitted program does not typecheck: ") + e.what(), "");
    }
    return Compilation{Program{root}, std::move(trace_)};
  }

 private:
  [[noreturn]] void fail(const std::string& message, const std::string& fragment) {
    throw CompileError(message, fragment, trace_);
  }

  void absorb(const pre::CorefLog& log) {
    trace_.substitutions.insert(trace_.substitutions.end(), log.substitutions.begin(), log.substitutions.end());
    trace_.diagnostics.insert(trace_.diagnostics.end(), log.diagnostics.begin(), log.diagnostics.end());
  }

  // A sentence the parser cannot cover is only fatal if it could contribute a
  // step, i.e. it holds a number, "many"/"much" or a question mark.
  std::optional<nlp::SentenceAnnotation> parse(const std::string& sentence, int sentence_index) {
    try {
      return res_.tagger.tag_and_parse(sentence);
    } catch (const nlp::UnsupportedSentence& e) {
      for (const auto& t : res_.tagger.tag(nlp::tokenize(sentence))) {
        std::string w = nlp::lowercase(t.text);
        if (t.pos == "CD" || w == "many" || w == "much" || w == "?") fail(e.what(), sentence);
      }
      unparsed_[sentence_index] = {sentence, e.what()};
      return std::nullopt;
    }
  }

  // Fragments go back through the parser as plain text; the split graph is kept
  // if the text no longer parses.
  nlp::SentenceAnnotation reparse(const nlp::SentenceAnnotation& frag) {
    try {
      return res_.tagger.tag_and_parse(frag.original_text);
    } catch (const nlp::UnsupportedSentence& e) {
      trace_.diagnostics.push_back("fragment \"" + frag.original_text + "\" did not re-parse; using split graph");
      return frag;
    }
  }

  void fragment(const nlp::SentenceAnnotation& ann, int sentence_index, std::vector<CmdPtr>& commands) {
    trace_.fragments.push_back(FragmentRecord{ann.original_text, sentence_index, false, {}});
    const std::string& text = ann.original_text;
    auto quantifiers = cat::find_quantifiers(ann, res_.tagger.numbers());
    if (quantifiers.empty()) {
      trace_.fragments.back().skipped = true;
      trace_.diagnostics.push_back("no quantifier in \"" + text + "\"; skipped");
      return;
    }
    for (const auto& q : quantifiers) {
      StepRecord step;
      step.quantifier = q;
      step.quantifier_text = ann.graph.token(q.token_index).text;
      try {
        step.head_verb = cat::head_verb_of(q, ann.graph);
        const auto& verb = ann.graph.token(step.head_verb);
        step.head_verb_text = verb.text;
        step.head_verb_lemma = nlp::lowercase(verb.lemma.empty() || verb.lemma == "_" ? verb.text : verb.lemma);

        step.variables = cat::infer_variable_name(step.head_verb, ann.graph, res_.tagclasses);
        step.preposition_cue = step.variables->preposition;
        step.candidates = cat::select_candidates(ann, q, *step.variables, state_);

        std::optional<cat::Polarity> polarity;
        if (cat::candidate_count(*step.candidates) == 2) {
          const cat::EmbeddingTable* emb = res_.embeddings ? &*res_.embeddings : nullptr;
          step.polarity = cat::classify_verb(step.head_verb_lemma, res_.lexicon, emb);
          polarity = step.polarity->polarity;
        }
        step.signature = cat::build_signature(*step.candidates, polarity, *step.variables, q);
        step.command = lower(*step.signature);
        state_.declare(*step.signature);
        commands.push_back(step.command);
        trace_.fragments.back().steps.push_back(std::move(step));
      } catch (const Error& e) {
        trace_.fragments.back().steps.push_back(std::move(step));
        fail(e.what(), text);
      }
    }
  }

  const Resources& res_;
  cat::ProgramState state_;
  CompilationTrace trace_;
  std::map<int, std::pair<std::string, std::string>> unparsed_;
};

}  // namespace

Compilation compile(const std::string& problem, const Resources& res, const std::string* conllu) {
  return Compiler(res).run(problem, conllu);
}

Solution solve(const std::string& problem, const Resources& res, const std::string* conllu) {
  Compilation c = compile(problem, res, conllu);
  ExecResult r = exec_cmd(Store{}, *c.program.root);
  c.trace.diagnostics.insert(c.trace.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
  return Solution{std::move(r.outputs), std::move(c.program), std::move(c.trace)};
}

std::string format_answer(double v) {
  double r = std::round(v);
  if (std::fabs(v - r) <= 1e-9) {
    if (r == 0) r = 0;  // no "-0"
    return format_number(r);
  }
  return format_number(v);
}

// ---------------------------------------------------------------------------

std::vector<CorpusProblem> parse_corpus(const std::string& text) {
  std::vector<CorpusProblem> out;
  CorpusProblem cur;
  auto flush = [&] {
    cur.text = trim(cur.text);
    if (!cur.text.empty() || cur.expected) out.push_back(std::move(cur));
    cur = CorpusProblem{};
  };
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t == "---") {
      flush();
      continue;
    }
    if (t.rfind("#", 0) == 0) continue;
    if (t.rfind("EXPECTED:", 0) == 0) {
      std::vector<double> values;
      std::string rest = t.substr(9);
      for (char& c : rest) {
        if (c == ',') c = ' ';
      }
      std::istringstream nums(rest);
      std::string tok;
      while (nums >> tok) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw FormatError(line_no, "bad expected value '" + tok + "'");
        }
        values.push_back(v);
      }
      cur.expected = std::move(values);
      continue;
    }
    if (!t.empty()) cur.text += (cur.text.empty() ? "" : " ") + t;
  }
  flush();
  return out;
}

namespace {

bool same_answers(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > 1e-9) return false;
  }
  return true;
}

std::string join_answers(const std::vector<double>& v) {
  std::string out;
  for (double x : v) {
    if (!out.empty()) out += ", ";
    out += format_answer(x);
  }
  return "[" + out + "]";
}

}  // namespace

std::size_t CorpusReport::passed() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.passed;
  return n;
}

std::size_t CorpusReport::mismatches() const {
  return results.size() - passed();
}

std::string CorpusReport::text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    os << (r.passed ? "PASS" : "FAIL") << "  #" << (i + 1) << "  " << r.problem << '\n';
    if (!r.ok) {
      os << "      error: " << r.error << '\n';
    } else {
      os << "      answers " << join_answers(r.answers);
      if (r.expected) os << "  expected " << join_answers(*r.expected);
      os << '\n';
    }
    for (const auto& d : r.diagnostics) os << "      note: " << d << '\n';
  }
  os << "accuracy " << passed() << '/' << results.size() << '\n';
  return os.str();
}

CorpusReport run_corpus(const std::vector<CorpusProblem>& problems, const Resources& res) {
  CorpusReport report;
  for (const auto& p : problems) {
    CorpusResult r;
    r.problem = p.text;
    r.expected = p.expected;
    try {
      Solution s = solve(p.text, res);
      r.answers = s.answers;
      r.diagnostics = s.trace.diagnostics;
      r.ok = true;
      r.passed = !p.expected || same_answers(*p.expected, s.answers);
    } catch (const CompileError& e) {
      r.error = e.what();
      r.diagnostics = e.trace().diagnostics;
    } catch (const Error& e) {
      r.error = e.what();
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

CorpusReport run_corpus(const fs::path& path, const Resources& res) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<CorpusProblem> problems;
  for (const auto& f : files) {
    auto ps = parse_corpus(read_file(f, "corpus"));
    problems.insert(problems.end(), ps.begin(), ps.end());
  }
  return run_corpus(problems, res);
}

}  // namespace aimp
