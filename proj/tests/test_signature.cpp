#include "doctest.h"

#include "aimp/eval.hpp"
#include "aimp/signature.hpp"
#include "aimp/syntax.hpp"
#include "generators.hpp"

using namespace aimp;
namespace b = aimp::build;

TEST_CASE("lowering renders as expected") {
  Address a("a"), c("c");
  auto e = b::num(4);
  CHECK(print_cmd(*lower(sig::Observation{a, e})) == "a := 4");
  CHECK(print_cmd(*lower(sig::Construct{a, e})) == "a := a + 4");
  CHECK(print_cmd(*lower(sig::Destroy{a, e})) == "a := a - 4");
  CHECK(print_cmd(*lower(sig::PositiveTransfer{a, c, e})) == "a := a + 4 ; c := c - 4");
  CHECK(print_cmd(*lower(sig::NegativeTransfer{a, c, e})) == "a := a - 4 ; c := c + 4");
  CHECK(print_cmd(*lower(sig::Get{a})) == "print a");
}

TEST_CASE("self transfer is rejected") {
  Address a("a");
  CHECK_THROWS_AS(lower(sig::PositiveTransfer{a, a, b::num(1)}), InvalidSignature);
  CHECK_THROWS_AS(lower(sig::NegativeTransfer{a, a, b::num(1)}), InvalidSignature);
}

TEST_CASE("kind names and descriptions") {
  Address a("x"), c("y");
  CHECK(kind_name(sig::Destroy{a, b::num(1)}) == "destroy");
  CHECK(kind_name(sig::PositiveTransfer{a, c, b::num(1)}) == "positive_transfer");
  CHECK(describe(sig::Destroy{a, b::num(1)}) == "destroy[x](1)");
  CHECK(describe(sig::Get{a}) == "get[x]");
}

TEST_CASE("transfers conserve the total") {
  gen::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    Store s = gen::store(rng, std::int64_t(1) << 40);
    auto t = gen::transfer(rng, std::int64_t(1) << 40);
    double before = 0, after = 0;
    for (auto& [k, v] : s) before += v;
    for (auto& [k, v] : exec_cmd(s, *lower(t)).store) after += v;
    CHECK(before == after);
  }
}
