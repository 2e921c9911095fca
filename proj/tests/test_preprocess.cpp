#include "doctest.h"

#include "aimp/conllu.hpp"
#include "aimp/pipeline.hpp"
#include "aimp/preprocess.hpp"

using namespace aimp;

namespace {

const Resources& res() {
  static const Resources r = Resources::load(PipelineConfig::defaults());
  return r;
}

std::vector<std::string> pieces(const std::string& text) {
  return pre::break_conjunctions(res().tagger.tag_and_parse(text), res().tagclasses);
}

std::vector<std::string> resolved(const std::string& text, pre::CorefLog* log = nullptr) {
  return pre::resolve_coreferences(pre::ProblemText::split(text), res().tagger, log).sentences;
}

}  // namespace

TEST_CASE("sentence split") {
  auto p = pre::ProblemText::split("Pooja has 2.5 apples. She eats one!  How many? ");
  CHECK(p.sentences == std::vector<std::string>{"Pooja has 2.5 apples.", "She eats one!", "How many?"});
  CHECK(pre::ProblemText::split("   ").sentences.empty());
  CHECK(pre::ProblemText::split("no mark").sentences == std::vector<std::string>{"no mark"});
}

TEST_CASE("pronoun sets") {
  CHECK(pre::is_pronoun("she"));
  CHECK(pre::is_pronoun("they"));
  CHECK_FALSE(pre::is_pronoun("pooja"));
  CHECK(pre::is_possessive_pronoun("his"));
  CHECK_FALSE(pre::is_possessive_pronoun("he"));
}

TEST_CASE("text coreference") {
  pre::CorefLog log;
  auto s = resolved("Pooja's Mom has 8 pears. She eats 3 pears. How many pears does she have?", &log);
  CHECK(s[1] == "Pooja's Mom eats 3 pears.");
  CHECK(s[2] == "How many pears does Pooja's Mom have?");
  CHECK(log.substitutions.size() == 2);
  CHECK(log.substitutions[0].pronoun == "She");
  CHECK(log.substitutions[0].replacement == "Pooja's Mom");

  auto poss = resolved("John has 4 pens. His sister has 2 pens.");
  CHECK(poss[1] == "John's sister has 2 pens.");

  auto common = resolved("The girl has 4 pens. She finds 2 pens.");
  CHECK(common[1] == "The girl finds 2 pens.");

  pre::CorefLog orphan;
  auto none = resolved("She has 4 pens.", &orphan);
  CHECK(none[0] == "She has 4 pens.");
  CHECK(orphan.diagnostics.size() == 1);
}

TEST_CASE("text coreference is idempotent") {
  const char* problems[] = {
      "Pooja has 3 apples. She eats one apple. How many apples does she have now?",
      "Pooja's Mom has 8 pears. She eats 3 pears. How many pears does she have?",
      "Kim has 4 pens. Raj has 2 pens. He gives her 1 pen.",
  };
  for (const char* p : problems) {
    auto once = pre::resolve_coreferences(pre::ProblemText::split(p), res().tagger);
    auto twice = pre::resolve_coreferences(once, res().tagger);
    CHECK(once.sentences == twice.sentences);
  }
}

TEST_CASE("graph coreference splices the antecedent") {
  const std::string conllu =
      "1\tPooja\tPooja\tPROPN\tNNP\t_\t2\tnsubj\t_\t_\n"
      "2\thas\thave\tVERB\tVBZ\t_\t0\troot\t_\t_\n"
      "3\t3\t3\tNUM\tCD\t_\t4\tnummod\t_\t_\n"
      "4\tapples\tapple\tNOUN\tNNS\t_\t2\tobj\t_\t_\n"
      "\n"
      "1\tShe\tshe\tPRON\tPRP\t_\t2\tnsubj\t_\t_\n"
      "2\teats\teat\tVERB\tVBZ\t_\t0\troot\t_\t_\n"
      "3\tone\tone\tNUM\tCD\t_\t4\tnummod\t_\t_\n"
      "4\tapple\tapple\tNOUN\tNN\t_\t2\tobj\t_\t_\n"
      "\n";
  pre::CorefLog log;
  auto out = pre::resolve_coreferences(nlp::load_conllu(conllu), res().tagclasses, &log);
  REQUIRE(out.size() == 2);
  CHECK(nlp::render(out[1].graph) == "Pooja eats one apple");
  CHECK(out[1].graph.relation(1) == "nsubj");
  CHECK(log.substitutions.size() == 1);
}

TEST_CASE("conjunction breaking") {
  CHECK(pieces("Pooja has two apples and John has one apple.") ==
        std::vector<std::string>{"Pooja has two apples.", "John has one apple."});
  CHECK(pieces("Pooja has two apples and three oranges.") ==
        std::vector<std::string>{"Pooja has two apples.", "Pooja has three oranges."});
  CHECK(pieces("Pooja and John have two apples.") ==
        std::vector<std::string>{"Pooja have two apples.", "John have two apples."});
  CHECK(pieces("Leo has 4 small and shiny marbles.") == std::vector<std::string>{"Leo has 4 small shiny marbles."});
  CHECK(pieces("Pooja has 2 apples and eats one apple.") ==
        std::vector<std::string>{"Pooja has 2 apples.", "Pooja eats one apple."});
  CHECK(pieces("Pooja has 2 apples.") == std::vector<std::string>{"Pooja has 2 apples."});
}

TEST_CASE("split fragments have no conj arcs") {
  const char* sentences[] = {
      "Pooja has two apples and John has one apple and three pears.",
      "Pooja and John have two red and green apples and three oranges.",
  };
  for (const char* s : sentences) {
    for (const auto& f : pre::split_conjunctions(res().tagger.tag_and_parse(s), res().tagclasses)) {
      for (const auto& arc : f.graph.edges()) CHECK(arc.relation != "conj");
    }
  }
}
