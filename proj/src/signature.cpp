#include "aimp/signature.hpp"

#include "aimp/detail/overloaded.hpp"
#include "aimp/syntax.hpp"

namespace aimp {

namespace {

using detail::overloaded;

CmdPtr construct(const Address& a, const ExprPtr& e) {
  return build::set(a, build::plus(build::addr(a), e));
}

CmdPtr destroy(const Address& a, const ExprPtr& e) {
  return build::set(a, build::minus(build::addr(a), e));
}

void require_distinct(const Address& a, const Address& b) {
  if (a == b) throw InvalidSignature("transfer from '" + a.name() + "' to itself");
}

}  // namespace

CmdPtr lower(const VerbSignature& s) {
  return std::visit(overloaded{
                        [](const sig::Observation& o) { return build::set(o.target, o.amount); },
                        [](const sig::Construct& c) { return construct(c.target, c.amount); },
                        [](const sig::Destroy& d) { return destroy(d.target, d.amount); },
                        [](const sig::PositiveTransfer& t) {
                          require_distinct(t.first, t.second);
                          return build::seq(construct(t.first, t.amount), destroy(t.second, t.amount));
                        },
                        [](const sig::NegativeTransfer& t) {
                          require_distinct(t.first, t.second);
                          return build::seq(destroy(t.first, t.amount), construct(t.second, t.amount));
                        },
                        [](const sig::Get& g) { return build::print(build::addr(g.target)); },
                    },
                    s);
}

std::string kind_name(const VerbSignature& s) {
  static constexpr const char* names[] = {"observation",       "construct",         "destroy",
                                          "positive_transfer", "negative_transfer", "get"};
  return names[s.index()];
}

std::string describe(const VerbSignature& s) {
  return std::visit(
      overloaded{
          [](const sig::Observation& o) { return "observation[" + o.target.name() + "](" + print_expr(*o.amount) + ")"; },
          [](const sig::Construct& c) { return "construct[" + c.target.name() + "](" + print_expr(*c.amount) + ")"; },
          [](const sig::Destroy& d) { return "destroy[" + d.target.name() + "](" + print_expr(*d.amount) + ")"; },
          [](const sig::PositiveTransfer& t) {
            return "positive_transfer[" + t.first.name() + ", " + t.second.name() + "](" + print_expr(*t.amount) + ")";
          },
          [](const sig::NegativeTransfer& t) {
            return "negative_transfer[" + t.first.name() + ", " + t.second.name() + "](" + print_expr(*t.amount) + ")";
          },
          [](const sig::Get& g) { return "get[" + g.target.name() + "]"; },
      },
      s);
}

}  // namespace aimp
