#pragma once

#include "json.hpp"

#include "aimp/ast.hpp"
#include "aimp/pipeline.hpp"

namespace aimp {

/// Commands: {"cmd":"set","addr":..,"expr":..}, {"cmd":"skip"},
/// {"cmd":"seq","first":..,"second":..}, {"cmd":"print","expr":..}.
/// Expressions: {"expr":"addr","name":..}, {"expr":"num","value":..},
/// {"expr":"bool","value":..}, {"expr":"plus"|"minus","left":..,"right":..}.
nlohmann::json to_json(const Expr& e);
nlohmann::json to_json(const Cmd& c);

/// Throws FormatError(0, ...) on malformed input.
ExprPtr expr_from_json(const nlohmann::json& j);
CmdPtr cmd_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CompilationTrace& t);

}  // namespace aimp
