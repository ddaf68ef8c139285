#include "domino/betti_io.hpp"

#include <algorithm>
#include <climits>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "domino/tilings.hpp"

namespace domino {

namespace {

using nlohmann::json;

json table_json(const BettiTable& t, int n) {
    json entries = json::array();
    for (const auto& [k, v] : t.entries)
        entries.push_back({{"i", k.first}, {"j", k.second}, {"value", v}});
    return json{{"n", n}, {"field", t.field.to_string()}, {"indexing", "ideal"}, {"entries", entries}};
}

json facet_list(const SimplicialComplex& c, const VariableUniverse& u) {
    json out = json::array();
    for (VarMask f : c.facets()) out.push_back(u.render(f));
    return out;
}

}  // namespace

std::string table_to_json(const BettiTable& t, int n, int indent) {
    return table_json(t, n).dump(indent);
}

ParsedTable table_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad table JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || doc.value("indexing", "") != "ideal")
        throw std::invalid_argument("bad table JSON: expected an ideal-indexed table object");
    ParsedTable out;
    out.n = doc.value("n", 0);
    out.table.field = FieldSpec::parse(doc.value("field", "Q"));
    for (const auto& e : doc["entries"])
        out.table.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("value").get<long long>());
    return out;
}

std::string table_to_text(const BettiTable& t) {
    std::ostringstream os;
    os << "field " << t.field.to_string() << ", ideal indexing (row = j-i, column = i)\n";
    if (t.entries.empty()) {
        os << "  (empty table)\n";
        return os.str();
    }
    int imin = INT_MAX, imax = INT_MIN, rmin = INT_MAX, rmax = INT_MIN;
    for (const auto& [k, v] : t.entries) {
        imin = std::min(imin, k.first);
        imax = std::max(imax, k.first);
        rmin = std::min(rmin, k.second - k.first);
        rmax = std::max(rmax, k.second - k.first);
    }
    imin = std::min(imin, 0);
    int w = 7;
    os << std::setw(w) << "j-i\\i";
    for (int i = imin; i <= imax; ++i) os << std::setw(w) << i;
    os << '\n';
    for (int r = rmin; r <= rmax; ++r) {
        os << std::setw(w) << (std::to_string(r) + ":");
        for (int i = imin; i <= imax; ++i) {
            long long v = t.at(i, i + r);
            if (v == 0)
                os << std::setw(w) << ".";
            else
                os << std::setw(w) << v;
        }
        os << '\n';
    }
    os << std::setw(w) << "total:";
    for (int i = imin; i <= imax; ++i) {
        long long s = 0;
        for (int r = rmin; r <= rmax; ++r) s += t.at(i, i + r);
        os << std::setw(w) << s;
    }
    os << '\n';
    return os.str();
}

std::string table_to_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "i,j,value\n";
    for (const auto& [k, v] : t.entries) os << k.first << ',' << k.second << ',' << v << '\n';
    return os.str();
}

std::string export_document(int n, FieldSpec f, int indent) {
    MonomialIdeal ideal = domino_ideal(n);
    VariableUniverse u = VariableUniverse::board(n);
    SimplicialComplex delta = facet_complex(ideal);
    SimplicialComplex gamma = complement_complex(delta, u.full_mask());

    json doc;
    doc["n"] = n;
    doc["field"] = f.to_string();
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(u.render(g.support));
    doc["generators"] = gens;
    doc["delta_facets"] = facet_list(delta, u);
    doc["gamma_complement_facets"] = facet_list(gamma, u);
    if (n >= 3) {
        int y_n1 = (2 * n - 2) + (n - 1) - 1;
        doc["link_vertex"] = u.name(y_n1);
        doc["link_facets"] = facet_list(link(gamma, y_n1), u);
        doc["deletion_facets"] = facet_list(deletion(gamma, y_n1), u);
    }
    doc["tables"]["koszul"] = table_json(betti_koszul(ideal, f), n);
    doc["tables"]["hochster"] = table_json(betti_hochster(ideal, f), n);
    return doc.dump(indent);
}

}  // namespace domino
