#include "doctest.h"

#include "aimp/pipeline.hpp"
#include "aimp/tagger.hpp"
#include "generators.hpp"

using namespace aimp;
using namespace aimp::nlp;

namespace {

const Tagger& tagger() {
  static const Resources res = Resources::load(PipelineConfig::defaults());
  return res.tagger;
}

std::vector<std::string> tags(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : tagger().tag(tokenize(s))) out.push_back(t.pos);
  return out;
}

}  // namespace

TEST_CASE("tokenize") {
  CHECK(tokenize("Pooja's Mom has 8 pears.") == std::vector<std::string>{"Pooja", "'s", "Mom", "has", "8", "pears", "."});
  CHECK(tokenize("How many, now?") == std::vector<std::string>{"How", "many", ",", "now", "?"});
  CHECK(tokenize("  ").empty());
  CHECK(tokenize("2.5 apples") == std::vector<std::string>{"2.5", "apples"});
}

TEST_CASE("tokenize is idempotent under render") {
  gen::Rng rng(3);
  const std::vector<std::string> words = {"Pooja", "has", "3", "apples", "'s", ".", "?", ",", "she", "eats"};
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> w;
    int n = gen::pick(rng, 1, 10);
    for (int k = 0; k < n; ++k) w.push_back(words[gen::pick(rng, 0, 9)]);
    auto once = tokenize(render(w));
    CHECK(tokenize(render(once)) == once);
  }
}

TEST_CASE("singularize and number words") {
  CHECK(singularize("apples") == "apple");
  CHECK(singularize("candies") == "candy");
  CHECK(singularize("boxes") == "box");
  CHECK(singularize("glass") == "glass");
  auto n = NumberWords::defaults();
  CHECK(n.lookup("twelve") == 12.0);
  CHECK(n.lookup("dozen") == 12.0);
  CHECK(n.lookup("a") == 1.0);
  CHECK_FALSE(n.lookup("eleventy"));
  CHECK(n.is_tens("twenty"));
  CHECK_FALSE(n.is_tens("a"));
  CHECK(n.is_unit("one"));
  auto extended = NumberWords::parse("score\t20\n# comment\n");
  CHECK(extended.lookup("score") == 20.0);
  CHECK(extended.lookup("one") == 1.0);
  CHECK_THROWS_AS(NumberWords::parse("score\tlots\n"), FormatError);
}

TEST_CASE("lexicon parsing") {
  auto lex = TaggerLexicon::parse("# h\nate\tVBD\teat\n");
  REQUIRE(lex.find("ate"));
  CHECK(lex.find("ate")->lemma == "eat");
  CHECK_THROWS_AS(TaggerLexicon::parse("ate\tVBD\n"), FormatError);
}

TEST_CASE("tagging") {
  CHECK(tags("Pooja has 3 apples .") == std::vector<std::string>{"NNP", "VBZ", "CD", "NNS", "."});
  CHECK(tags("How many apples does she have now ?") ==
        std::vector<std::string>{"WRB", "JJ", "NNS", "VBZ", "PRP", "VB", "RB", "."});
  CHECK(tags("She gave her friend two red apples") ==
        std::vector<std::string>{"PRP", "VBD", "PRP$", "NN", "CD", "JJ", "NNS"});
  CHECK(tags("Sam quickly painted") == std::vector<std::string>{"NNP", "RB", "VBD"});
}

TEST_CASE("parsing shapes") {
  auto g = tagger().tag_and_parse("Pooja has 3 apples.").graph;
  CHECK(g.token(g.root()).text == "has");
  CHECK(g.relation(1) == "nsubj");
  CHECK(g.relation(3) == "nummod");
  CHECK(g.relation(4) == "dobj");
  CHECK(g.relation(5) == "punct");

  auto q = tagger().tag_and_parse("How many apples does Pooja have now?").graph;
  CHECK(q.token(q.root()).text == "have");
  CHECK(q.relation(3) == "dobj");
  CHECK(q.relation(4) == "aux");
  CHECK(q.relation(5) == "nsubj");
  CHECK(q.relation(2) == "amod");

  auto t = tagger().tag_and_parse("Mary gave Tom 4 cookies.").graph;
  CHECK(t.relation(3) == "iobj");
  CHECK(t.relation(5) == "dobj");

  auto pp = tagger().tag_and_parse("Sam took 5 stickers from Lily.").graph;
  CHECK(pp.relation(6) == "nmod");
  CHECK(pp.relation(5) == "case");

  auto poss = tagger().tag_and_parse("Pooja's Mom has 8 pears.").graph;
  CHECK(poss.relation(1) == "nmod:poss");
  CHECK(poss.relation(2) == "case");
  CHECK(poss.relation(3) == "nsubj");
}

TEST_CASE("unsupported sentences report the span") {
  try {
    tagger().tag_and_parse("apples apples apples");
    FAIL("expected UnsupportedSentence");
  } catch (const UnsupportedSentence& e) {
    CHECK(e.begin() >= 1);
    CHECK(e.end() >= e.begin());
  }
  CHECK_THROWS_AS(tagger().tag_and_parse("Pooja has."), UnsupportedSentence);
}
