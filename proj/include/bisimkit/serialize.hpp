// Terms as JSON documents.
//
// Every node is an object with a "tag"; see README for the schema.
// Needs nlohmann/json (vendor/json.hpp) on the include path.

#ifndef BISIMKIT_SERIALIZE_HPP
#define BISIMKIT_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisimkit/ccs_term.hpp"
#include "bisimkit/pi_term.hpp"

namespace bisimkit {

using Json = nlohmann::json;

inline Json to_json(const Term& t) {
  switch (t.kind()) {
    case TermKind::Nil:
      return {{"tag", "nil"}};
    case TermKind::Var:
      return {{"tag", "var"}, {"name", t.ident().str()}};
    case TermKind::Prefix:
      return {{"tag", "prefix"},
              {"name", t.head().name.str()},
              {"polarity", t.head().is_coaction() ? "coaction" : "action"},
              {"continuation", to_json(t.continuation())}};
    case TermKind::Sum:
    case TermKind::Par: {
      Json kids = Json::array();
      for (const auto& k : t.children()) kids.push_back(to_json(k));
      return {{"tag", t.kind() == TermKind::Sum ? "sum" : "par"}, {"children", kids}};
    }
  }
  return nullptr;
}

inline Json to_json(const PiTerm& t) {
  switch (t.kind()) {
    case PiKind::Nil:
      return {{"tag", "nil"}};
    case PiKind::Input:
      return {{"tag", "input"},
              {"channel", t.channel().str()},
              {"binder", t.object().str()},
              {"continuation", to_json(t.continuation())}};
    case PiKind::Output:
      return {{"tag", "output"},
              {"channel", t.channel().str()},
              {"object", t.object().str()},
              {"continuation", to_json(t.continuation())}};
    case PiKind::Par: {
      Json kids = Json::array();
      for (const auto& k : t.children()) kids.push_back(to_json(k));
      return {{"tag", "par"}, {"children", kids}};
    }
    case PiKind::Nu:
      return {{"tag", "nu"}, {"binder", t.channel().str()}, {"body", to_json(t.continuation())}};
  }
  return nullptr;
}

namespace detail {
inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}
inline Name name_field(const Json& j, const char* key) { return Name::intern(field(j, key).get<std::string>()); }
}  // namespace detail

inline Term ccs_from_json(const Json& j) {
  const auto tag = detail::field(j, "tag").get<std::string>();
  if (tag == "nil") return Term::nil();
  if (tag == "var") return Term::var(detail::name_field(j, "name"));
  if (tag == "prefix") {
    const auto pol = detail::field(j, "polarity").get<std::string>();
    if (pol != "action" && pol != "coaction") throw std::invalid_argument("bad polarity \"" + pol + "\"");
    Name n = detail::name_field(j, "name");
    return Term::prefix(pol == "action" ? Prefix::action(n) : Prefix::coaction(n),
                        ccs_from_json(detail::field(j, "continuation")));
  }
  if (tag == "sum" || tag == "par") {
    std::vector<Term> kids;
    for (const auto& k : detail::field(j, "children")) kids.push_back(ccs_from_json(k));
    return tag == "sum" ? Term::sum(std::move(kids)) : Term::par(std::move(kids));
  }
  throw std::invalid_argument("unknown tag \"" + tag + "\"");
}

inline PiTerm pi_from_json(const Json& j) {
  const auto tag = detail::field(j, "tag").get<std::string>();
  if (tag == "nil") return PiTerm::nil();
  if (tag == "input")
    return PiTerm::input(detail::name_field(j, "channel"), detail::name_field(j, "binder"),
                         pi_from_json(detail::field(j, "continuation")));
  if (tag == "output")
    return PiTerm::output(detail::name_field(j, "channel"), detail::name_field(j, "object"),
                          pi_from_json(detail::field(j, "continuation")));
  if (tag == "par") {
    std::vector<PiTerm> kids;
    for (const auto& k : detail::field(j, "children")) kids.push_back(pi_from_json(k));
    return PiTerm::par(std::move(kids));
  }
  if (tag == "nu") return PiTerm::nu(detail::name_field(j, "binder"), pi_from_json(detail::field(j, "body")));
  throw std::invalid_argument("unknown tag \"" + tag + "\"");
}

}  // namespace bisimkit

#endif  // BISIMKIT_SERIALIZE_HPP
