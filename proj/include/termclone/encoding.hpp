#pragma once

// JSON encodings of elements, reports and model files.

#include <string>
#include <vector>

#include <json.hpp>

#include "termclone/clones.hpp"
#include "termclone/element.hpp"
#include "termclone/error.hpp"
#include "termclone/models.hpp"

namespace termclone {

using json = nlohmann::json;

/// {"kind":"zero"} | {"kind":"letter","letter":"x1"} |
/// {"kind":"word","head":"p","tail":["p","x1"]}
inline json to_json(const Element& e) {
  switch (e.kind()) {
    case Element::Kind::zero: return {{"kind", "zero"}};
    case Element::Kind::letter: return {{"kind", "letter"}, {"letter", e.head().str()}};
    case Element::Kind::word: {
      json tail = json::array();
      for (Letter l : e.tail()) tail.push_back(l.str());
      return {{"kind", "word"}, {"head", e.head().str()}, {"tail", std::move(tail)}};
    }
  }
  return nullptr;
}

inline Element element_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return Element::zero();
    if (kind == "letter") return Element::letter(Letter::from_string(j.at("letter").get<std::string>()));
    if (kind == "word") {
      std::vector<Letter> tail;
      for (const auto& l : j.at("tail")) tail.push_back(Letter::from_string(l.get<std::string>()));
      if (tail.empty()) throw error("word with empty tail");
      return Element::word(Letter::from_string(j.at("head").get<std::string>()), std::move(tail));
    }
    throw error("unknown element kind '" + kind + "'");
  } catch (const json::exception& ex) {
    throw error(std::string("malformed element: ") + ex.what());
  }
}

inline json to_json(const Substitution& s) {
  json out = json::object();
  for (const auto& [i, v] : s.bindings()) out["x" + std::to_string(i)] = to_json(v);
  return out;
}

inline json to_json(const CloneWitness& w) {
  return {{"member", to_json(w.member)},
          {"substitution", to_json(w.substitution)},
          {"result", to_json(w.result)},
          {"reason", w.reason}};
}

inline json to_json(const LawWitness& w) { return {{"law", w.law}, {"tuple", w.tuple}}; }

inline json to_json(const HomomorphismWitness& w) {
  json els = json::array();
  for (const Element& e : w.elements) els.push_back(to_json(e));
  return {{"condition", w.condition}, {"elements", std::move(els)}, {"expected", w.expected}, {"actual", w.actual}};
}

/// {"pass":bool, "counterexample":{...}|null, "checked":count}
template <class Witness>
json to_json(const Report<Witness>& r) {
  return {{"pass", r.pass},
          {"counterexample", r.counterexample ? to_json(*r.counterexample) : json(nullptr)},
          {"checked", r.checked}};
}

inline json to_json(const CloneSet& s) {
  json members = json::array();
  for (const Element& e : s.members) members.push_back(to_json(e));
  return {{"vars", s.var_bound}, {"closed", s.closed}, {"members", std::move(members)}};
}

/// {"size":k, "zero":i, "p":j, "table":[[...],...]}
inline json to_json(const FiniteModel& m) {
  json rows = json::array();
  for (carrier a = 0; a < m.size(); ++a) {
    json row = json::array();
    for (carrier b = 0; b < m.size(); ++b) row.push_back(m.op(a, b));
    rows.push_back(std::move(row));
  }
  return {{"size", m.size()}, {"zero", m.zero()}, {"p", m.p()}, {"table", std::move(rows)}};
}

inline FiniteModel model_from_json(const json& j) {
  try {
    const auto size = j.at("size").get<std::size_t>();
    const auto rows = j.at("table").get<std::vector<std::vector<carrier>>>();
    if (rows.size() != size) throw error("table has " + std::to_string(rows.size()) + " rows, size is " + std::to_string(size));
    return FiniteModel::from_rows(rows, j.at("zero").get<carrier>(), j.at("p").get<carrier>());
  } catch (const json::exception& ex) {
    throw error(std::string("malformed model: ") + ex.what());
  }
}

}  // namespace termclone
