#include "aimp/ast.hpp"

#include <cmath>

#include "aimp/detail/overloaded.hpp"

namespace aimp {

std::string_view to_string(Type t) {
  return t == Type::Num ? "num" : "bool";
}

Address::Address(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) throw InvalidAddress("invalid address '" + name_ + "'");
}

bool Address::is_valid(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  if (name == "true" || name == "false") return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

namespace {

using detail::overloaded;

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool same(const CmdPtr& a, const CmdPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const AddrRef& x) { return x.address == std::get<AddrRef>(b.node).address; },
          [&](const NumLit& x) { return x.value == std::get<NumLit>(b.node).value; },
          [&](const BoolLit& x) { return x.value == std::get<BoolLit>(b.node).value; },
          [&](const Plus& x) {
            const auto& y = std::get<Plus>(b.node);
            return same(x.left, y.left) && same(x.right, y.right);
          },
          [&](const Minus& x) {
            const auto& y = std::get<Minus>(b.node);
            return same(x.left, y.left) && same(x.right, y.right);
          },
      },
      a.node);
}

bool operator==(const Cmd& a, const Cmd& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Set& x) {
            const auto& y = std::get<Set>(b.node);
            return x.target == y.target && same(x.source, y.source);
          },
          [&](const Skip&) { return true; },
          [&](const Seq& x) {
            const auto& y = std::get<Seq>(b.node);
            return same(x.first, y.first) && same(x.second, y.second);
          },
          [&](const Print& x) { return same(x.source, std::get<Print>(b.node).source); },
      },
      a.node);
}

bool operator==(const Program& a, const Program& b) {
  return same(a.root, b.root);
}

namespace build {

ExprPtr addr(const Address& a) {
  return std::make_shared<const Expr>(Expr{AddrRef{a}});
}

ExprPtr addr(std::string name) {
  return addr(Address(std::move(name)));
}

ExprPtr num(double value) {
  if (!std::isfinite(value)) throw InvalidLiteral("numeric literal must be finite");
  return std::make_shared<const Expr>(Expr{NumLit{value}});
}

ExprPtr boolean(bool value) {
  return std::make_shared<const Expr>(Expr{BoolLit{value}});
}

ExprPtr plus(ExprPtr left, ExprPtr right) {
  return std::make_shared<const Expr>(Expr{Plus{std::move(left), std::move(right)}});
}

ExprPtr minus(ExprPtr left, ExprPtr right) {
  return std::make_shared<const Expr>(Expr{Minus{std::move(left), std::move(right)}});
}

CmdPtr set(const Address& target, ExprPtr source) {
  return std::make_shared<const Cmd>(Cmd{Set{target, std::move(source)}});
}

CmdPtr set(std::string target, ExprPtr source) {
  return set(Address(std::move(target)), std::move(source));
}

CmdPtr skip() {
  return std::make_shared<const Cmd>(Cmd{Skip{}});
}

CmdPtr seq(CmdPtr first, CmdPtr second) {
  return std::make_shared<const Cmd>(Cmd{Seq{std::move(first), std::move(second)}});
}

CmdPtr print(ExprPtr source) {
  return std::make_shared<const Cmd>(Cmd{Print{std::move(source)}});
}

}  // namespace build

}  // namespace aimp
