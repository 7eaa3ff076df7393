#include "uag/serialize.hpp"

#include "json.hpp"

namespace uag {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json points_json(const std::vector<Point>& pts) {
    ordered_json arr = ordered_json::array();
    for (const Point& p : pts) arr.push_back(p);
    return arr;
}

std::string system_text_oneline(const EquationSystem& s) {
    std::string out;
    for (std::size_t i = 0; i < s.equations.size(); ++i) {
        out += to_string(s.equations[i], s.vars);
        out += ";";
        if (i + 1 < s.equations.size()) out += " ";
    }
    return out;
}

std::string points_text(const std::vector<Point>& pts) {
    std::string out;
    for (const Point& p : pts) {
        out += "(";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(p[i]);
        }
        out += ")";
        out += " ";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

} // namespace

std::string render_solve(const AlgebraicSet& y, bool json) {
    if (json) {
        ordered_json j;
        j["points"] = points_json(y.points);
        j["consistent"] = !y.points.empty();
        j["system"] = y.system ? system_text_oneline(*y.system) : "";
        return dump(j);
    }
    std::string out = "consistent: " + std::string(y.points.empty() ? "no" : "yes") + "\n";
    out += "points: " + points_text(y.points) + "\n";
    return out;
}

std::string render_gamma(const AlgebraicSet& y, const TermFunctionAlgebra& t, bool json) {
    std::vector<std::string> witnesses;
    for (TermId w : t.witness) witnesses.push_back(to_string(w, y.vars));
    if (json) {
        ordered_json j;
        j["points"] = points_json(y.points);
        ordered_json g;
        g["size"] = t.size();
        g["witnesses"] = witnesses;
        j["gamma"] = std::move(g);
        return dump(j);
    }
    std::string out = "gamma size: " + std::to_string(t.size()) + "\n";
    out += "witnesses:";
    for (const auto& w : witnesses) out += " " + w;
    out += "\n";
    return out;
}

std::string render_components(const AlgebraicSet& y, const std::vector<AlgebraicSet>& comps,
                              bool json) {
    std::vector<char> covered(y.points.size(), 0);
    for (const auto& c : comps)
        for (const Point& p : c.points) {
            int idx = y.index_of(p);
            if (idx >= 0) covered[static_cast<std::size_t>(idx)] = 1;
        }
    bool union_ok = std::find(covered.begin(), covered.end(), 0) == covered.end();
    if (json) {
        ordered_json j;
        j["points"] = points_json(y.points);
        j["irreducible"] = comps.size() == 1;
        ordered_json arr = ordered_json::array();
        for (const auto& c : comps) arr.push_back(points_json(c.points));
        j["components"] = std::move(arr);
        j["union_check"] = union_ok;
        return dump(j);
    }
    std::string out = "components: " + std::to_string(comps.size()) + "\n";
    for (const auto& c : comps) out += "  " + points_text(c.points) + "\n";
    out += "union check: " + std::string(union_ok ? "true" : "false") + "\n";
    return out;
}

std::string render_reduce(const EquationSystem& reduced, const EquationSystem& original,
                          bool json) {
    if (json) {
        ordered_json j;
        j["system"] = system_text_oneline(reduced);
        j["kept"] = reduced.equations.size();
        j["original"] = original.equations.size();
        return dump(j);
    }
    std::string out = "kept " + std::to_string(reduced.equations.size()) + " of " +
                      std::to_string(original.equations.size()) + " equations\n";
    out += system_text_oneline(reduced) + "\n";
    return out;
}

std::string render_membership(const std::string& kind, const AtomicFormula& eq,
                              const VariableSet& vars, bool member, bool json) {
    if (json) {
        ordered_json j;
        j["equation"] = to_string(eq, vars);
        j[kind] = member;
        return dump(j);
    }
    return to_string(eq, vars) + " " + (member ? "is" : "is not") + " in the " + kind + "\n";
}

std::string render_verdict(const Verdict& v, bool json) {
    if (json) {
        ordered_json j;
        j["claim"] = to_string(v.claim);
        j["answer"] = v.answer;
        if (v.embedding) {
            ordered_json e;
            e["power"] = v.embedding->power;
            e["map"] = v.embedding->embedding.map;
            j["power_embedding"] = std::move(e);
        }
        if (v.realization) {
            ordered_json r;
            r["system"] = system_text_oneline(v.realization->system);
            r["points"] = points_json(v.realization->set.points);
            r["iso"] = v.realization->iso.map;
            if (v.realization->generic_point) r["generic_point"] = *v.realization->generic_point;
            j["realization"] = std::move(r);
        }
        if (v.discrimination_embedding) j["embedding"] = v.discrimination_embedding->map;
        if (v.refutation) {
            ordered_json q;
            q["premises"] = system_text_oneline(v.refutation->premises);
            q["conclusion"] = to_string(v.refutation->conclusion, v.refutation->premises.vars);
            j["refuting_quasi_identity"] = std::move(q);
        }
        if (v.inconsistent_system)
            j["inconsistent_system"] = system_text_oneline(*v.inconsistent_system);
        if (v.trivial_element) j["trivial_element"] = *v.trivial_element;
        if (v.witness_inconclusive) j["witness_inconclusive"] = true;
        if (!v.notes.empty()) j["notes"] = v.notes;
        return dump(j);
    }
    std::string out = to_string(v.claim) + ": " + (v.answer ? "yes" : "no") + "\n";
    if (v.embedding)
        out += "embeds into the " + std::to_string(v.embedding->power) + "-th direct power\n";
    if (v.realization)
        out += "realized by: " + system_text_oneline(v.realization->system) + "\n";
    if (v.refutation)
        out += "refuted by: forall (" + system_text_oneline(v.refutation->premises) + " -> " +
               to_string(v.refutation->conclusion, v.refutation->premises.vars) + ")\n";
    if (v.inconsistent_system)
        out += "inconsistent system: " + system_text_oneline(*v.inconsistent_system) + "\n";
    if (v.trivial_element) out += "trivial element: " + std::to_string(*v.trivial_element) + "\n";
    for (const auto& n : v.notes) out += "note: " + n + "\n";
    return out;
}

std::string render_duality(const std::vector<TermMap>& maps,
                           const std::vector<Homomorphism>& homs, bool bijection, bool json) {
    if (json) {
        ordered_json j;
        j["term_maps"] = maps.size();
        j["homomorphisms"] = homs.size();
        j["bijection"] = bijection;
        ordered_json table = ordered_json::array();
        for (std::size_t i = 0; i < maps.size(); ++i) {
            ordered_json row;
            std::vector<std::string> comps;
            if (!maps[i].empty_source())
                for (TermId t : maps[i].component_terms())
                    comps.push_back(to_string(t, maps[i].source.vars));
            row["components"] = comps;
            if (i < homs.size()) row["hom"] = homs[i].map;
            table.push_back(std::move(row));
        }
        j["table"] = std::move(table);
        return dump(j);
    }
    std::string out = "term maps: " + std::to_string(maps.size()) +
                      ", homomorphisms: " + std::to_string(homs.size()) + "\n";
    out += "bijection: " + std::string(bijection ? "true" : "false") + "\n";
    return out;
}

std::string render_isomorphic(const IsomorphismResult& res, bool json) {
    auto comps_text = [](const TermMap& m) {
        std::vector<std::string> out;
        if (!m.empty_source())
            for (TermId t : m.component_terms()) out.push_back(to_string(t, m.source.vars));
        return out;
    };
    if (json) {
        ordered_json j;
        j["isomorphic"] = res.isomorphic;
        if (res.maps) {
            j["forward"] = comps_text(res.maps->first);
            j["backward"] = comps_text(res.maps->second);
        }
        return dump(j);
    }
    std::string out = std::string("isomorphic: ") + (res.isomorphic ? "yes" : "no") + "\n";
    return out;
}

std::vector<Point> points_from_json(const std::string& text, const std::string& key) {
    ordered_json j = ordered_json::parse(text);
    const ordered_json& arr = j.contains(key) ? j[key] : j;
    std::vector<Point> out;
    for (const auto& p : arr) out.push_back(p.get<Point>());
    return out;
}

std::string string_from_json(const std::string& text, const std::string& key) {
    ordered_json j = ordered_json::parse(text);
    return j.at(key).get<std::string>();
}

bool bool_from_json(const std::string& text, const std::string& key) {
    ordered_json j = ordered_json::parse(text);
    return j.at(key).get<bool>();
}

} // namespace uag
