#include "doctest.h"

#include <fstream>

#include "aimp/pipeline.hpp"
#include "aimp/serialize.hpp"
#include "aimp/syntax.hpp"

using namespace aimp;

namespace {

const Resources& res() {
  static const Resources r = Resources::load(PipelineConfig::defaults());
  return r;
}

std::string program_text(const std::string& problem) {
  return print_program(compile(problem, res()).program);
}

}  // namespace

TEST_CASE("compiled programs") {
  CHECK(program_text("Pooja has 3 apples. She eats one apple. How many apples does Pooja have now?") ==
        "pooja_apple := 3 ; pooja_apple := pooja_apple - 1 ; print pooja_apple");
  CHECK(program_text("Mary has 10 cookies. Tom has 2 cookies. Mary gave Tom 4 cookies.") ==
        "mary_cookie := 10 ; tom_cookie := 2 ; mary_cookie := mary_cookie - 4 ; tom_cookie := tom_cookie + 4");
  CHECK(program_text("Sam has 7 stickers. Lily has 9 stickers. Sam took 5 stickers from Lily.") ==
        "sam_sticker := 7 ; lily_sticker := 9 ; sam_sticker := sam_sticker + 5 ; lily_sticker := lily_sticker - 5");
}

TEST_CASE("solve") {
  auto s = solve("Kim has twenty one pencils. Raj has three pencils. Kim gives 5 pencils to Raj. "
                 "How many pencils does Raj have? How many pencils does Kim have?",
                 res());
  CHECK(s.answers == std::vector<double>{8, 16});

  auto unknown = solve("How many apples does Pooja have?", res());
  CHECK(unknown.answers == std::vector<double>{0});
  CHECK(unknown.trace.diagnostics.size() == 1);
}

TEST_CASE("trace") {
  auto c = compile("Pooja has 3 apples. The sky is blue. How many apples does she have?", res());
  REQUIRE(c.trace.fragments.size() == 3);
  CHECK(c.trace.fragments[1].skipped);
  CHECK(c.trace.fragments[2].steps.at(0).signature.has_value());
  CHECK(c.trace.substitutions.size() == 1);
  auto j = to_json(c.trace);
  CHECK(j["fragments"].size() == 3);
  CHECK(j["fragments"][0]["steps"][0]["signature"] == "observation[pooja_apple](3)");
}

TEST_CASE("compile is deterministic") {
  const std::string p = "Leo has 4 small and shiny marbles. Leo wins 6 small and shiny marbles. "
                        "How many small and shiny marbles does Leo have?";
  auto a = compile(p, res());
  auto b = compile(p, res());
  CHECK(a.program == b.program);
  CHECK(to_json(a.trace) == to_json(b.trace));
}

TEST_CASE("compile errors carry the fragment") {
  CHECK_THROWS_AS(compile("   ", res()), CompileError);
  try {
    compile("Pooja has 3 apples. Pooja zorped 2 apples.", res());
    FAIL("expected CompileError");
  } catch (const CompileError& e) {
    CHECK(e.fragment() == "Pooja zorped 2 apples.");
    CHECK(e.trace().fragments.size() == 2);
  }
  try {
    compile("Pooja has 3 apples. Blue blue blue 2.", res());
    FAIL("expected CompileError");
  } catch (const CompileError& e) {
    CHECK(e.fragment() == "Blue blue blue 2.");
  }
}

TEST_CASE("CoNLL-U input") {
  const std::string conllu =
      "1\tPooja\tPooja\tPROPN\tNNP\t_\t2\tnsubj\t_\t_\n"
      "2\thas\thave\tVERB\tVBZ\t_\t0\troot\t_\t_\n"
      "3\t3\t3\tNUM\tCD\t_\t4\tnummod\t_\t_\n"
      "4\tapples\tapple\tNOUN\tNNS\t_\t2\tobj\t_\t_\n"
      "5\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n"
      "\n"
      "1\tShe\tshe\tPRON\tPRP\t_\t2\tnsubj\t_\t_\n"
      "2\tate\teat\tVERB\tVBD\t_\t0\troot\t_\t_\n"
      "3\t1\t1\tNUM\tCD\t_\t4\tnummod\t_\t_\n"
      "4\tapple\tapple\tNOUN\tNN\t_\t2\tobj\t_\t_\n"
      "5\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n"
      "\n";
  auto c = compile("", res(), &conllu);
  CHECK(print_program(c.program) == "pooja_apple := 3 ; pooja_apple := pooja_apple - 1");
  const std::string bad = "1\tx\n";
  CHECK_THROWS_AS(compile("", res(), &bad), CompileError);
}

TEST_CASE("answer formatting") {
  CHECK(format_answer(2.0) == "2");
  CHECK(format_answer(2.0000000001) == "2");
  CHECK(format_answer(2.5) == "2.5");
  CHECK(format_answer(-0.0) == "0");
  CHECK(format_answer(-3.0) == "-3");
}

TEST_CASE("corpus parsing and running") {
  auto ps = parse_corpus("# c\nPooja has 3 apples.\nHow many apples does Pooja have?\nEXPECTED: 3\n---\n"
                         "John has 2 pens. How many pens does John have?\nEXPECTED: 5\n---\n");
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].text == "Pooja has 3 apples. How many apples does Pooja have?");
  CHECK(ps[0].expected == std::vector<double>{3});
  auto report = run_corpus(ps, res());
  CHECK(report.passed() == 1);
  CHECK(report.mismatches() == 1);
  CHECK(report.text().find("accuracy 1/2") != std::string::npos);
  CHECK(parse_corpus("").empty());
  CHECK_THROWS_AS(parse_corpus("x\nEXPECTED: many\n"), FormatError);
}

TEST_CASE("config files") {
  auto dir = std::filesystem::temp_directory_path() / "aimp_cfg_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "cfg.json") << R"({"embeddings": null, "lexicon": "lex.tsv", "trace": true,
                                           "tagclasses": {"modifier_like": ["amod"]}})";
    std::ofstream(dir / "lex.tsv") << "eat\tnegative\n";
  }
  auto cfg = PipelineConfig::from_file(dir / "cfg.json");
  CHECK_FALSE(cfg.embeddings_path);
  CHECK(cfg.lexicon_path == (dir / "lex.tsv").string());
  CHECK(cfg.trace);
  CHECK(cfg.tagclasses.modifier_like == std::set<std::string>{"amod"});
  auto r = Resources::load(cfg);
  CHECK(r.lexicon.size() == 1);
  CHECK_FALSE(r.embeddings);

  std::ofstream(dir / "bad.json") << "{";
  CHECK_THROWS_AS(PipelineConfig::from_file(dir / "bad.json"), Error);
  std::ofstream(dir / "clash.json") << R"({"tagclasses": {"modifier_like": ["nsubj"]}})";
  CHECK_THROWS_AS(PipelineConfig::from_file(dir / "clash.json"), Error);
  CHECK_THROWS_AS(PipelineConfig::from_file(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}
