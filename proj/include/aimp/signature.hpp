#pragma once

#include <string>
#include <variant>

#include "aimp/ast.hpp"

namespace aimp {

/// Semantic templates that word-problem fragments are classified into.
namespace sig {

struct Observation {
  Address target;
  ExprPtr amount;
};

struct Construct {
  Address target;
  ExprPtr amount;
};

struct Destroy {
  Address target;
  ExprPtr amount;
};

/// `first` gains, `second` loses.
struct PositiveTransfer {
  Address first;
  Address second;
  ExprPtr amount;
};

/// `first` loses, `second` gains.
struct NegativeTransfer {
  Address first;
  Address second;
  ExprPtr amount;
};

struct Get {
  Address target;
};

}  // namespace sig

using VerbSignature = std::variant<sig::Observation, sig::Construct, sig::Destroy,
                                   sig::PositiveTransfer, sig::NegativeTransfer, sig::Get>;

/// Lowers a signature into A-IMP:
///
///   observation[a](e)          a := e
///   construct[a](e)            a := a + e
///   destroy[a](e)              a := a - e
///   positive_transfer[a,b](e)  construct[a](e) ; destroy[b](e)
///   negative_transfer[a,b](e)  destroy[a](e) ; construct[b](e)
///   get[a]                     print a
///
/// Throws InvalidSignature for a transfer between an address and itself.
CmdPtr lower(const VerbSignature& s);

/// Lowercase kind name: observation, construct, destroy, positive_transfer,
/// negative_transfer, get.
std::string kind_name(const VerbSignature& s);

std::string describe(const VerbSignature& s);

}  // namespace aimp
