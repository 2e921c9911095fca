#include "aimp/typecheck.hpp"

#include "aimp/detail/overloaded.hpp"

namespace aimp {

namespace {

using detail::overloaded;

std::string join(const std::string& path, const char* step) {
  return path.empty() ? std::string(step) : path + "." + step;
}

Type infer(const Expr& e, const std::string& path) {
  auto arith = [&](const ExprPtr& left, const ExprPtr& right, const char* op) {
    std::string here = join(path, op);
    Type l = infer(*left, join(here, "left"));
    if (l != Type::Num) throw TypeError(join(here, "left"), "num", std::string(to_string(l)));
    Type r = infer(*right, join(here, "right"));
    if (r != Type::Num) throw TypeError(join(here, "right"), "num", std::string(to_string(r)));
    return Type::Num;
  };
  return std::visit(overloaded{
                        [](const AddrRef&) { return Type::Num; },
                        [](const NumLit&) { return Type::Num; },
                        [](const BoolLit&) { return Type::Bool; },
                        [&](const Plus& p) { return arith(p.left, p.right, "plus"); },
                        [&](const Minus& m) { return arith(m.left, m.right, "minus"); },
                    },
                    e.node);
}

void expect_num(const Expr& e, const std::string& path) {
  Type t = infer(e, path);
  if (t != Type::Num) throw TypeError(path, "num", std::string(to_string(t)));
}

void check(const Cmd& c, const std::string& path) {
  std::visit(overloaded{
                 [&](const Set& s) { expect_num(*s.source, join(join(path, "set"), "source")); },
                 [](const Skip&) {},
                 [&](const Seq& s) {
                   check(*s.first, join(join(path, "seq"), "first"));
                   check(*s.second, join(join(path, "seq"), "second"));
                 },
                 [&](const Print& p) { expect_num(*p.source, join(join(path, "print"), "source")); },
             },
             c.node);
}

}  // namespace

Type typecheck_expr(const Expr& e) {
  return infer(e, "");
}

void typecheck_cmd(const Cmd& c) {
  check(c, "");
}

bool is_well_typed(const Cmd& c) {
  try {
    typecheck_cmd(c);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

}  // namespace aimp
