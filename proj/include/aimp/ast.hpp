#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "aimp/errors.hpp"

namespace aimp {

enum class Type { Num, Bool };

std::string_view to_string(Type t);

/// An assignable. Names match [a-z][a-z0-9_]*; the boolean literals are reserved.
class Address {
 public:
  explicit Address(std::string name);

  const std::string& name() const { return name_; }

  static bool is_valid(std::string_view name);

  friend bool operator==(const Address&, const Address&) = default;
  friend auto operator<=>(const Address&, const Address&) = default;

 private:
  std::string name_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct AddrRef {
  Address address;
};

struct NumLit {
  double value;
};

struct BoolLit {
  bool value;
};

struct Plus {
  ExprPtr left;
  ExprPtr right;
};

struct Minus {
  ExprPtr left;
  ExprPtr right;
};

struct Expr {
  std::variant<AddrRef, NumLit, BoolLit, Plus, Minus> node;
};

/// Structural equality.
bool operator==(const Expr& a, const Expr& b);

struct Cmd;
using CmdPtr = std::shared_ptr<const Cmd>;

struct Set {
  Address target;
  ExprPtr source;
};

struct Skip {};

struct Seq {
  CmdPtr first;
  CmdPtr second;
};

struct Print {
  ExprPtr source;
};

struct Cmd {
  std::variant<Set, Skip, Seq, Print> node;
};

bool operator==(const Cmd& a, const Cmd& b);

struct Program {
  CmdPtr root;
};

bool operator==(const Program& a, const Program& b);

using Store = std::map<Address, double>;

// Constructors. Literals reject NaN and infinity.
namespace build {

ExprPtr addr(const Address& a);
ExprPtr addr(std::string name);
ExprPtr num(double value);
ExprPtr boolean(bool value);
ExprPtr plus(ExprPtr left, ExprPtr right);
ExprPtr minus(ExprPtr left, ExprPtr right);

CmdPtr set(const Address& target, ExprPtr source);
CmdPtr set(std::string target, ExprPtr source);
CmdPtr skip();
CmdPtr seq(CmdPtr first, CmdPtr second);
CmdPtr print(ExprPtr source);

}  // namespace build

}  // namespace aimp
