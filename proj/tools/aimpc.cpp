#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "aimp/pipeline.hpp"
#include "aimp/serialize.hpp"
#include "aimp/syntax.hpp"

namespace {

enum Exit { Ok = 0, Mismatch = 1, CompileFailed = 2, Usage = 3 };

struct Options {
  std::string input;
  std::string conllu;
  std::string embeddings;
  std::string lexicon;
  std::string emit = "aimp";
  bool trace = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

aimp::PipelineConfig config(const Options& o) {
  aimp::PipelineConfig cfg = aimp::PipelineConfig::defaults();
  if (const char* env = std::getenv("AIMP_CONFIG"); env && *env) cfg = aimp::PipelineConfig::from_file(env, cfg);
  if (!o.embeddings.empty()) cfg.embeddings_path = o.embeddings;
  if (!o.lexicon.empty()) cfg.lexicon_path = o.lexicon;
  if (!o.conllu.empty()) cfg.conllu_path = o.conllu;
  if (o.trace) cfg.trace = true;
  return cfg;
}

std::string answers_text(const std::vector<double>& answers) {
  std::string out;
  for (double a : answers) out += aimp::format_answer(a) + "\n";
  return out;
}

int single(const Options& o, bool run) {
  aimp::PipelineConfig cfg = config(o);
  aimp::Resources res = aimp::Resources::load(cfg);
  std::string problem = slurp(o.input);
  std::optional<std::string> conllu;
  if (cfg.conllu_path) conllu = slurp(*cfg.conllu_path);
  const std::string* cp = conllu ? &*conllu : nullptr;

  aimp::Program program;
  aimp::CompilationTrace trace;
  std::vector<double> answers;
  if (run) {
    aimp::Solution s = aimp::solve(problem, res, cp);
    program = std::move(s.program);
    trace = std::move(s.trace);
    answers = std::move(s.answers);
  } else {
    aimp::Compilation c = aimp::compile(problem, res, cp);
    program = std::move(c.program);
    trace = std::move(c.trace);
  }

  if (o.emit == "json") {
    nlohmann::json doc = {{"program", aimp::to_json(*program.root)}, {"trace", aimp::to_json(trace)}};
    doc["answers"] = run ? nlohmann::json(answers) : nlohmann::json(nullptr);
    std::cout << doc.dump(2) << '\n';
    return Ok;
  }
  if (run) {
    std::cout << answers_text(answers);
  } else {
    std::cout << aimp::print_program(program) << '\n';
  }
  if (cfg.trace) std::cerr << aimp::to_json(trace).dump(2) << '\n';
  for (const auto& d : trace.diagnostics) std::cerr << "note: " << d << '\n';
  return Ok;
}

int corpus(const Options& o) {
  aimp::PipelineConfig cfg = config(o);
  aimp::Resources res = aimp::Resources::load(cfg);
  if (!std::filesystem::exists(o.input)) throw UsageError("cannot open '" + o.input + "'");
  aimp::CorpusReport report = aimp::run_corpus(std::filesystem::path(o.input), res);
  if (o.emit == "json") {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : report.results) {
      nlohmann::json j = {{"problem", r.problem}, {"answers", r.answers}, {"ok", r.ok}, {"passed", r.passed}};
      j["expected"] = r.expected ? nlohmann::json(*r.expected) : nlohmann::json(nullptr);
      if (!r.ok) j["error"] = r.error;
      j["diagnostics"] = r.diagnostics;
      results.push_back(j);
    }
    std::cout << nlohmann::json{{"results", results}, {"passed", report.passed()}, {"total", report.results.size()}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << report.text();
  }
  return report.mismatches() == 0 ? Ok : Mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile arithmetic word problems to A-IMP programs."};
  app.require_subcommand(1);
  Options o;
  auto add = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", o.input, what)->required();
    sub->add_option("--conllu", o.conllu, "CoNLL-U parses to use instead of the built-in parser");
    sub->add_option("--embeddings", o.embeddings, "word2vec text file");
    sub->add_option("--lexicon", o.lexicon, "verb polarity lexicon");
    sub->add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"aimp", "json"}));
    sub->add_flag("--trace", o.trace, "print the compilation trace to stderr");
    return sub;
  };
  auto* compile = add(app.add_subcommand("compile", "print the compiled program"), "problem text file");
  auto* run = add(app.add_subcommand("run", "compile and print the answers"), "problem text file");
  auto* corp = add(app.add_subcommand("corpus", "run a corpus file or directory"), "corpus file or directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  try {
    if (compile->parsed()) return single(o, false);
    if (run->parsed()) return single(o, true);
    if (corp->parsed()) return corpus(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Usage;
  } catch (const aimp::CompileError& e) {
    std::cerr << "compile error: " << e.what() << '\n';
    return CompileFailed;
  } catch (const aimp::EvalError& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return CompileFailed;
  } catch (const aimp::Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return Usage;
  }
  return Usage;
}
