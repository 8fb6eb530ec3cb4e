#include "parkfrob/serialize.hpp"

#include "parkfrob/errors.hpp"

namespace parkfrob {

Json to_json(const LaurentQT& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({Json::array({e.q, e.t}), c.get_str()}));
  return out;
}

LaurentQT laurent_from_json(const Json& j) {
  if (!j.is_array()) throw input_error("Laurent polynomial JSON must be an array");
  LaurentQT f;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array() || term[0].size() != 2) {
      throw input_error("malformed Laurent term");
    }
    BigInt c;
    if (c.set_str(term[1].get<std::string>(), 10) != 0) throw input_error("malformed coefficient");
    f.add_term({term[0][0].get<int>(), term[0][1].get<int>()}, c);
  }
  return f;
}

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [p, c] : f.terms()) {
    terms.push_back(Json{{"partition", p.parts()}, {"coeff", to_json(c)}});
  }
  return Json{{"degree", f.degree()}, {"basis", std::string(basis_name(f.basis()))}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j) {
  try {
    SymFunc f(j.at("degree").get<int>(), parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
      f.add_term(Partition(t.at("partition").get<std::vector<int>>()), laurent_from_json(t.at("coeff")));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed symmetric function JSON: ") + e.what());
  }
}

Json to_json(const AffinePermutation& w) { return Json{{"K", w.K()}, {"window", w.window()}}; }

Json to_json(const Stack& s) {
  return Json{{"n", s.n}, {"k", s.k}, {"stack", s.cols}};
}

Json to_json(const StackedPF& spf) {
  std::vector<int> heights(spf.runs.size());
  int h = 0;
  for (std::size_t i = 0; i < spf.runs.size(); ++i) heights[i] = h += spf.runs[i];
  return Json{{"n", spf.stack.n},
              {"k", spf.stack.k},
              {"stack", spf.stack.cols},
              {"path", heights},
              {"labels", spf.labels}};
}

Json pairs_to_json(const std::vector<IndexPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace parkfrob
