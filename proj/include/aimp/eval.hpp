#pragma once

#include <string>
#include <vector>

#include "aimp/ast.hpp"

namespace aimp {

/// Messages raised while evaluating, e.g. reads of unbound addresses.
using Diagnostics = std::vector<std::string>;

/// Big-step evaluation of a num-typed expression. An unbound address reads as 0
/// and appends "unbound address <name>" to `diags` when given.
/// Throws EvalError on a non-finite result or a boolean operand.
double eval_expr(const Store& store, const Expr& e, Diagnostics* diags = nullptr);

struct ExecResult {
  Store store;
  std::vector<double> outputs;
  Diagnostics diagnostics;
};

/// Runs `c` from `store`. The input store is not modified.
ExecResult exec_cmd(const Store& store, const Cmd& c);

}  // namespace aimp
