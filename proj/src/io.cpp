#include "azposet/io.hpp"

#include <sstream>

namespace azposet {

using nlohmann::json;

json poset_to_json(const RankedPoset& P) {
  json elements = json::array();
  for (ElementId a = 0; a < P.size(); ++a) {
    json e = {{"id", a}, {"rank", P.rank(a)}};
    if (P.has_labels()) e["label"] = P.label(a);
    elements.push_back(std::move(e));
  }
  json covers = json::array();
  for (const auto& c : P.covers()) covers.push_back({c.lo, c.hi});
  return {{"name", P.name()}, {"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

RankedPoset poset_from_json(const json& doc) {
  try {
    std::vector<ElementSpec> elements;
    for (const auto& e : doc.at("elements")) {
      const auto rank = e.at("rank").get<long long>();
      if (rank < 0) throw Error(ErrorCode::InvalidInput, "negative rank in poset JSON");
      elements.push_back({e.at("id").get<ElementId>(), static_cast<Rank>(rank),
                          e.contains("label") ? e.at("label").get<std::string>() : std::string{}});
    }
    std::vector<CoverEdge> covers;
    for (const auto& c : doc.at("covers")) {
      if (!c.is_array() || c.size() != 2) {
        throw Error(ErrorCode::InvalidInput, "each cover must be a [lo, hi] pair");
      }
      covers.push_back({c[0].get<ElementId>(), c[1].get<ElementId>()});
    }
    return build_poset(doc.value("name", std::string{"poset"}), std::move(elements), std::move(covers));
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed poset JSON: ") + ex.what());
  }
}

std::string poset_to_dot(const RankedPoset& P) {
  std::ostringstream out;
  out << "digraph \"" << P.name() << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (Rank r = 0; r <= P.max_rank(); ++r) {
    out << "  { rank=same;";
    for (ElementId a : P.level(r)) out << " n" << a << " [label=\"" << P.label(a) << "\"];";
    out << " }\n";
  }
  for (const auto& c : P.covers()) out << "  n" << c.lo << " -> n" << c.hi << ";\n";
  out << "}\n";
  return out.str();
}

json family_to_json(const Family& F) { return json(F.ids()); }

Family family_from_json(const json& doc) {
  try {
    return Family(doc.get<std::vector<ElementId>>());
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed family JSON: ") + ex.what());
  }
}

}  // namespace azposet
