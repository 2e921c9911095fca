#include "aimp/serialize.hpp"

#include "aimp/detail/overloaded.hpp"
#include "aimp/syntax.hpp"

namespace aimp {

using detail::overloaded;
using nlohmann::json;

json to_json(const Expr& e) {
  return std::visit(overloaded{
                        [](const AddrRef& a) -> json { return {{"expr", "addr"}, {"name", a.address.name()}}; },
                        [](const NumLit& n) -> json { return {{"expr", "num"}, {"value", n.value}}; },
                        [](const BoolLit& b) -> json { return {{"expr", "bool"}, {"value", b.value}}; },
                        [](const Plus& p) -> json {
                          return {{"expr", "plus"}, {"left", to_json(*p.left)}, {"right", to_json(*p.right)}};
                        },
                        [](const Minus& m) -> json {
                          return {{"expr", "minus"}, {"left", to_json(*m.left)}, {"right", to_json(*m.right)}};
                        },
                    },
                    e.node);
}

json to_json(const Cmd& c) {
  return std::visit(overloaded{
                        [](const Set& s) -> json {
                          return {{"cmd", "set"}, {"addr", s.target.name()}, {"expr", to_json(*s.source)}};
                        },
                        [](const Skip&) -> json { return {{"cmd", "skip"}}; },
                        [](const Seq& s) -> json {
                          return {{"cmd", "seq"}, {"first", to_json(*s.first)}, {"second", to_json(*s.second)}};
                        },
                        [](const Print& p) -> json { return {{"cmd", "print"}, {"expr", to_json(*p.source)}}; },
                    },
                    c.node);
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(0, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(0, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

ExprPtr expr_from_json(const json& j) {
  auto kind = get<std::string>(j, "expr");
  try {
    if (kind == "addr") return build::addr(get<std::string>(j, "name"));
    if (kind == "num") return build::num(get<double>(j, "value"));
    if (kind == "bool") return build::boolean(get<bool>(j, "value"));
  } catch (const InvalidAddress& e) {
    throw FormatError(0, e.what());
  } catch (const InvalidLiteral& e) {
    throw FormatError(0, e.what());
  }
  if (kind == "plus") return build::plus(expr_from_json(field(j, "left")), expr_from_json(field(j, "right")));
  if (kind == "minus") return build::minus(expr_from_json(field(j, "left")), expr_from_json(field(j, "right")));
  throw FormatError(0, "unknown expression kind '" + kind + "'");
}

CmdPtr cmd_from_json(const json& j) {
  auto kind = get<std::string>(j, "cmd");
  if (kind == "set") {
    auto name = get<std::string>(j, "addr");
    if (!Address::is_valid(name)) throw FormatError(0, "invalid address '" + name + "'");
    return build::set(Address(name), expr_from_json(field(j, "expr")));
  }
  if (kind == "skip") return build::skip();
  if (kind == "seq") return build::seq(cmd_from_json(field(j, "first")), cmd_from_json(field(j, "second")));
  if (kind == "print") return build::print(expr_from_json(field(j, "expr")));
  throw FormatError(0, "unknown command kind '" + kind + "'");
}

namespace {

json step_json(const StepRecord& s) {
  json j;
  j["quantifier"] = {{"token", s.quantifier.token_index}, {"text", s.quantifier_text}};
  if (s.quantifier.value) j["quantifier"]["value"] = *s.quantifier.value;
  j["head_verb"] = {{"token", s.head_verb}, {"text", s.head_verb_text}, {"lemma", s.head_verb_lemma}};
  if (s.variables) {
    j["variables"] = {{"subject", s.variables->subject_part},
                      {"object", s.variables->object_part},
                      {"combined", s.variables->combined.name()}};
    if (s.variables->indirect_part) j["variables"]["indirect"] = *s.variables->indirect_part;
  }
  if (s.candidates) j["candidates"] = std::string(cat::to_string(*s.candidates));
  if (s.polarity) {
    json p = {{"polarity", std::string(cat::to_string(s.polarity->polarity))},
              {"from_lexicon", s.polarity->from_lexicon}};
    if (!s.polarity->from_lexicon) {
      p["nearest"] = s.polarity->nearest;
      p["similarity"] = s.polarity->similarity;
    }
    j["polarity"] = p;
  }
  if (s.preposition_cue) j["preposition"] = *s.preposition_cue;
  if (s.signature) j["signature"] = describe(*s.signature);
  if (s.command) j["command"] = print_cmd(*s.command);
  return j;
}

}  // namespace

json to_json(const CompilationTrace& t) {
  json subs = json::array();
  for (const auto& s : t.substitutions) {
    subs.push_back({{"sentence", s.sentence_index},
                    {"token", s.token_index},
                    {"pronoun", s.pronoun},
                    {"replacement", s.replacement}});
  }
  json frags = json::array();
  for (const auto& f : t.fragments) {
    json steps = json::array();
    for (const auto& s : f.steps) steps.push_back(step_json(s));
    frags.push_back({{"text", f.text}, {"sentence", f.sentence_index}, {"skipped", f.skipped}, {"steps", steps}});
  }
  return {{"substitutions", subs}, {"fragments", frags}, {"diagnostics", t.diagnostics}};
}

}  // namespace aimp
