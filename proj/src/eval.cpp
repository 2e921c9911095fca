#include "aimp/eval.hpp"

#include <cmath>

#include "aimp/detail/overloaded.hpp"

namespace aimp {

namespace {

using detail::overloaded;

double checked(double v) {
  if (!std::isfinite(v)) throw EvalError("arithmetic produced a non-finite value");
  return v;
}

void run(ExecResult& state, const Cmd& c) {
  std::visit(overloaded{
                 [&](const Set& s) {
                   double v = eval_expr(state.store, *s.source, &state.diagnostics);
                   state.store.insert_or_assign(s.target, v);
                 },
                 [](const Skip&) {},
                 [&](const Seq& s) {
                   run(state, *s.first);
                   run(state, *s.second);
                 },
                 [&](const Print& p) {
                   state.outputs.push_back(eval_expr(state.store, *p.source, &state.diagnostics));
                 },
             },
             c.node);
}

}  // namespace

double eval_expr(const Store& store, const Expr& e, Diagnostics* diags) {
  return std::visit(
      overloaded{
          [&](const AddrRef& a) {
            auto it = store.find(a.address);
            if (it != store.end()) return it->second;
            if (diags) diags->push_back("unbound address " + a.address.name());
            return 0.0;
          },
          [](const NumLit& n) { return n.value; },
          [](const BoolLit&) -> double { throw EvalError("boolean used where a number is required"); },
          [&](const Plus& p) {
            return checked(eval_expr(store, *p.left, diags) + eval_expr(store, *p.right, diags));
          },
          [&](const Minus& m) {
            return checked(eval_expr(store, *m.left, diags) - eval_expr(store, *m.right, diags));
          },
      },
      e.node);
}

ExecResult exec_cmd(const Store& store, const Cmd& c) {
  ExecResult state{store, {}, {}};
  run(state, c);
  return state;
}

}  // namespace aimp
