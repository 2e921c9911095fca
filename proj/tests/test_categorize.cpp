#include "doctest.h"

#include <cmath>

#include "aimp/categorize.hpp"
#include "aimp/pipeline.hpp"
#include "generators.hpp"

using namespace aimp;
using namespace aimp::cat;

namespace {

const Resources& res() {
  static const Resources r = Resources::load(PipelineConfig::defaults());
  return r;
}

nlp::SentenceAnnotation parse(const char* s) {
  return res().tagger.tag_and_parse(s);
}

std::vector<std::optional<double>> values(const char* s) {
  std::vector<std::optional<double>> out;
  for (const auto& q : find_quantifiers(parse(s), res().tagger.numbers())) out.push_back(q.value);
  return out;
}

// Reference cosine, computed directly.
double naive_cosine(const std::vector<double>& a, const std::vector<double>& b) {
  long double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += (long double)a[i] * b[i];
    na += (long double)a[i] * a[i];
    nb += (long double)b[i] * b[i];
  }
  return static_cast<double>(dot / std::sqrt(na * nb));
}

}  // namespace

TEST_CASE("quantifiers") {
  CHECK(values("Pooja has 3 apples.") == std::vector<std::optional<double>>{3.0});
  CHECK(values("Kim has twenty one pencils.") == std::vector<std::optional<double>>{21.0});
  CHECK(values("John buys a dozen apples.") == std::vector<std::optional<double>>{12.0});
  CHECK(values("John buys an apple.") == std::vector<std::optional<double>>{1.0});
  CHECK(values("Mary gave a friend 4 cookies.") == std::vector<std::optional<double>>{4.0});
  CHECK(values("How many apples does Pooja have?") == std::vector<std::optional<double>>{std::nullopt});
  CHECK(values("Pooja has 2.5 apples.") == std::vector<std::optional<double>>{2.5});
}

TEST_CASE("head verb and variable names") {
  auto a = parse("Pooja's Mom has 8 green pears.");
  auto qs = find_quantifiers(a, res().tagger.numbers());
  REQUIRE(qs.size() == 1);
  int v = head_verb_of(qs[0], a.graph);
  CHECK(a.graph.token(v).text == "has");
  auto names = infer_variable_name(v, a.graph, res().tagclasses);
  CHECK(names.subject_part == "pooja_mom");
  CHECK(names.object_part == "green_pear");
  CHECK(names.combined.name() == "pooja_mom_green_pear");

  auto t = parse("Sam took 5 stickers from Lily.");
  auto tn = infer_variable_name(t.graph.root(), t.graph, res().tagclasses);
  CHECK(tn.indirect_part == "lily");
  CHECK(tn.preposition == "from");

  auto q = parse("How many apples does Pooja have?");
  auto qn = infer_variable_name(q.graph.root(), q.graph, res().tagclasses);
  CHECK(qn.combined.name() == "pooja_apple");
}

TEST_CASE("missing arguments") {
  nlp::DepGraph g({{1, "eats", "eat", "VBZ"}, {2, "apples", "apple", "NNS"}}, {0, 1}, {"root", "dobj"});
  try {
    infer_variable_name(1, g, res().tagclasses);
    FAIL("expected MissingArgument");
  } catch (const MissingArgument& e) {
    CHECK(e.which() == Argument::Subject);
  }
  nlp::DepGraph h({{1, "Pooja", "Pooja", "NNP"}, {2, "eats", "eat", "VBZ"}}, {2, 0}, {"nsubj", "root"});
  CHECK_THROWS_AS(infer_variable_name(2, h, res().tagclasses), MissingArgument);
}

TEST_CASE("decision tree") {
  ProgramState state;
  auto pick = [&](const char* s) {
    auto a = parse(s);
    auto q = find_quantifiers(a, res().tagger.numbers()).at(0);
    auto vars = infer_variable_name(head_verb_of(q, a.graph), a.graph, res().tagclasses);
    return select_candidates(a, q, vars, state);
  };
  CHECK(pick("How many apples does Pooja have?") == CandidateSet::Get);
  CHECK(pick("Pooja has 3 apples.") == CandidateSet::Observation);
  state.declare(sig::Observation{Address("pooja_apple"), build::num(3)});
  CHECK(pick("Pooja eats one apple.") == CandidateSet::ConstructOrDestroy);
  CHECK(pick("Pooja gave John 1 apple.") == CandidateSet::Transfer);
  CHECK(candidate_count(CandidateSet::Transfer) == 2);
  CHECK(candidate_count(CandidateSet::Get) == 1);
}

TEST_CASE("signature construction") {
  VariableNames v{"kim", "pencil", Address("kim_pencil"), std::string("raj"), std::string("to")};
  Quantifier q{3, 5.0};
  CHECK(describe(build_signature(CandidateSet::Transfer, Polarity::Negative, v, q)) ==
        "negative_transfer[kim_pencil, raj_pencil](5)");
  CHECK(describe(build_signature(CandidateSet::ConstructOrDestroy, Polarity::Positive, v, q)) == "construct[kim_pencil](5)");
  CHECK(describe(build_signature(CandidateSet::Observation, std::nullopt, v, q)) == "observation[kim_pencil](5)");
  CHECK_THROWS_AS(build_signature(CandidateSet::Transfer, std::nullopt, v, q), InconsistentInputs);
  CHECK_THROWS_AS(build_signature(CandidateSet::Observation, std::nullopt, v, Quantifier{3, std::nullopt}),
                  InconsistentInputs);
  v.indirect_part.reset();
  CHECK_THROWS_AS(build_signature(CandidateSet::Transfer, Polarity::Positive, v, q), InconsistentInputs);
}

TEST_CASE("verb lexicon") {
  auto lex = VerbLexicon::parse("# v\neat\tnegative\nbuy\tpositive\n");
  CHECK(lex.find("eat") == Polarity::Negative);
  CHECK_FALSE(lex.find("run"));
  CHECK(lex.without("eat").size() == 1);
  CHECK_THROWS_AS(VerbLexicon::parse("eat\tnegative\neat\tpositive\n"), FormatError);
  CHECK_THROWS_AS(VerbLexicon::parse("eat\tsideways\n"), FormatError);
  CHECK(res().lexicon.size() == 20);
}

TEST_CASE("embeddings") {
  auto t = parse_word2vec("2 3\nup 1 0 0\nside 3 4 0\n");
  CHECK(t.dimension() == 3);
  CHECK((*t.find("side"))[0] == doctest::Approx(0.6));
  CHECK_THROWS_AS(parse_word2vec("2 3\nup 1 0 0\n"), FormatError);
  CHECK_THROWS_AS(parse_word2vec("1 3\nup 1 0\n"), FormatError);
  CHECK_THROWS_AS(parse_word2vec("1 3\nup 0 0 0\n"), FormatError);
  CHECK_THROWS_AS(parse_word2vec("x y\n"), FormatError);
  CHECK_THROWS_AS(cosine_similarity(std::vector<double>{1, 0}, std::vector<double>{1, 0, 0}), DimensionMismatch);
  CHECK_THROWS_AS(cosine_similarity(std::vector<double>{0, 0}, std::vector<double>{1, 0}), ZeroVector);
}

TEST_CASE("cosine agrees with a direct computation") {
  gen::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::unit_vector(rng, 50);
    auto b = gen::unit_vector(rng, 50);
    for (auto& x : b) x *= 3.5;
    CHECK(cosine_similarity(a, b) == doctest::Approx(naive_cosine(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("nearest polarity tie-break") {
  EmbeddingTable emb(2);
  emb.insert("gain", {1, 1});
  emb.insert("drop", {1, -1});
  emb.insert("add", {1, 1});
  VerbLexicon lex;
  lex.insert("gain", Polarity::Positive);
  lex.insert("add", Polarity::Positive);
  lex.insert("drop", Polarity::Negative);
  auto d = nearest_polarity(std::vector<double>{1, 0}, lex, emb);
  CHECK(d.polarity == Polarity::Positive);
  CHECK(d.nearest == "add");

  VerbLexicon neg;
  neg.insert("drop", Polarity::Negative);
  neg.insert("gain", Polarity::Positive);
  EmbeddingTable e2(2);
  e2.insert("drop", {1, -1});
  e2.insert("gain", {1, 1});
  CHECK(nearest_polarity(std::vector<double>{1, 0}, neg, e2).polarity == Polarity::Positive);
}

TEST_CASE("classify verb") {
  CHECK(classify_verb("eat", res().lexicon, nullptr).from_lexicon);
  CHECK(classify_verb("eat", res().lexicon, nullptr).polarity == Polarity::Negative);
  auto d = classify_verb("devour", res().lexicon, &*res().embeddings);
  CHECK_FALSE(d.from_lexicon);
  CHECK(d.nearest == "eat");
  CHECK(d.polarity == Polarity::Negative);
  CHECK(classify_verb("purchase", res().lexicon, &*res().embeddings).polarity == Polarity::Positive);
  CHECK_THROWS_AS(classify_verb("devour", res().lexicon, nullptr), UnknownVerb);
  CHECK_THROWS_AS(classify_verb("zorp", res().lexicon, &*res().embeddings), UnknownVerb);
}

TEST_CASE("leave-one-out report") {
  auto r1 = leave_one_out(res().lexicon, *res().embeddings);
  auto r2 = leave_one_out(res().lexicon, *res().embeddings);
  CHECK(r1.text() == r2.text());
  CHECK(r1.entries.size() == 20);
  std::size_t correct = 0;
  for (const auto& e : r1.entries) {
    correct += e.annotated == e.predicted;
    CHECK(e.nearest != e.verb);
  }
  CHECK(correct == r1.correct);
}
