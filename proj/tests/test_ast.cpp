#include "doctest.h"

#include <cmath>
#include <limits>

#include "aimp/eval.hpp"
#include "aimp/typecheck.hpp"
#include "generators.hpp"

using namespace aimp;
namespace b = aimp::build;

TEST_CASE("address validation") {
  CHECK(Address::is_valid("pooja_apple"));
  CHECK(Address::is_valid("x1"));
  CHECK_FALSE(Address::is_valid(""));
  CHECK_FALSE(Address::is_valid("1x"));
  CHECK_FALSE(Address::is_valid("Pooja"));
  CHECK_FALSE(Address::is_valid("a-b"));
  CHECK_FALSE(Address::is_valid("true"));
  CHECK_THROWS_AS(Address("false"), InvalidAddress);
  CHECK_THROWS_AS(b::addr("_x"), InvalidAddress);
}

TEST_CASE("literals reject non-finite values") {
  CHECK_THROWS_AS(b::num(std::numeric_limits<double>::infinity()), InvalidLiteral);
  CHECK_THROWS_AS(b::num(std::nan("")), InvalidLiteral);
  CHECK_NOTHROW(b::num(-0.0));
}

TEST_CASE("structural equality is deep") {
  auto p1 = b::seq(b::set("a", b::plus(b::addr("a"), b::num(1))), b::print(b::addr("a")));
  auto p2 = b::seq(b::set("a", b::plus(b::addr("a"), b::num(1))), b::print(b::addr("a")));
  auto p3 = b::seq(b::set("a", b::minus(b::addr("a"), b::num(1))), b::print(b::addr("a")));
  CHECK(*p1 == *p2);
  CHECK_FALSE(*p1 == *p3);
  CHECK_FALSE(*b::num(1) == *b::boolean(true));
}

TEST_CASE("typing judgments") {
  CHECK(typecheck_expr(*b::num(2)) == Type::Num);
  CHECK(typecheck_expr(*b::addr("a")) == Type::Num);
  CHECK(typecheck_expr(*b::boolean(false)) == Type::Bool);
  CHECK(typecheck_expr(*b::minus(b::addr("a"), b::num(2))) == Type::Num);
  CHECK_THROWS_AS(typecheck_expr(*b::plus(b::num(1), b::boolean(true))), TypeError);

  CHECK(is_well_typed(*b::skip()));
  CHECK(is_well_typed(*b::seq(b::set("a", b::num(1)), b::print(b::addr("a")))));
  CHECK_FALSE(is_well_typed(*b::set("a", b::boolean(true))));

  try {
    typecheck_cmd(*b::seq(b::skip(), b::print(b::boolean(true))));
    FAIL("expected TypeError");
  } catch (const TypeError& e) {
    CHECK(e.location() == "seq.second.print.source");
    CHECK(e.expected() == "num");
    CHECK(e.found() == "bool");
  }
}

TEST_CASE("evaluation") {
  Store s{{Address("a"), 5}};
  CHECK(eval_expr(s, *b::plus(b::addr("a"), b::num(2))) == 7);
  CHECK(eval_expr(s, *b::minus(b::num(1), b::minus(b::num(2), b::num(3)))) == 2);

  Diagnostics d;
  CHECK(eval_expr(s, *b::addr("zz"), &d) == 0);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == "unbound address zz");

  CHECK_THROWS_AS(eval_expr(s, *b::boolean(true)), EvalError);
  CHECK_THROWS_AS(eval_expr(Store{{Address("m"), 1.7e308}}, *b::plus(b::addr("m"), b::addr("m"))), EvalError);
}

TEST_CASE("execution") {
  auto prog = b::seq(b::set("a", b::num(3)),
                     b::seq(b::set("a", b::minus(b::addr("a"), b::num(1))), b::print(b::addr("a"))));
  ExecResult r = exec_cmd({}, *prog);
  CHECK(r.outputs == std::vector<double>{2});
  CHECK(r.store.at(Address("a")) == 2);
  CHECK(r.diagnostics.empty());

  ExecResult u = exec_cmd({}, *b::print(b::addr("nobody")));
  CHECK(u.outputs == std::vector<double>{0});
  CHECK(u.diagnostics.size() == 1);
}

TEST_CASE("sequencing laws") {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto c1 = gen::cmd(rng, 3, true, true);
    auto c2 = gen::cmd(rng, 3, true, true);
    auto c3 = gen::cmd(rng, 3, true, true);
    Store s = gen::store(rng, 100);
    auto left = exec_cmd(s, *b::seq(b::seq(c1, c2), c3));
    auto right = exec_cmd(s, *b::seq(c1, b::seq(c2, c3)));
    CHECK(left.store == right.store);
    CHECK(left.outputs == right.outputs);

    auto plain = exec_cmd(s, *c1);
    auto pre = exec_cmd(s, *b::seq(b::skip(), c1));
    auto post = exec_cmd(s, *b::seq(c1, b::skip()));
    CHECK(pre.store == plain.store);
    CHECK(post.store == plain.store);
    CHECK(pre.outputs == plain.outputs);
  }
}
