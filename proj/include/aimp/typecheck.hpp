#pragma once

#include "aimp/ast.hpp"

namespace aimp {

/// Infers the type of `e`. Throws TypeError when a plus/minus operand is not num.
Type typecheck_expr(const Expr& e);

/// Checks `c : ok`. Throws TypeError carrying the path to the offending subterm,
/// e.g. "seq.second.print.source".
void typecheck_cmd(const Cmd& c);

/// Non-throwing convenience wrapper.
bool is_well_typed(const Cmd& c);

}  // namespace aimp
