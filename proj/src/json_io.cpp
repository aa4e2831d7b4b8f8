#include "nielsen/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace nielsen {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json count_to_json(const Count& c) {
    if (c.continuum) {
        return json("continuum");
    }
    return json(c.value);
}

}  // namespace

std::string multimap_to_json(const MultiMap& m, int indent) {
    ordered_json doc;
    doc["n"] = m.valence();
    doc["branches"] = ordered_json::array();
    for (const auto& br : m.branches()) {
        ordered_json branch;
        branch["points"] = ordered_json::array();
        for (const auto& [t, y] : br.points) {
            branch["points"].push_back({format_rational(t), format_rational(y)});
        }
        doc["branches"].push_back(std::move(branch));
    }
    return doc.dump(indent);
}

MultiMap multimap_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("branches") ||
        !doc["n"].is_number_integer() || !doc["branches"].is_array()) {
        throw std::invalid_argument("multimap document needs integer \"n\" and array \"branches\"");
    }
    std::vector<LiftBranch> branches;
    for (const auto& branch_doc : doc["branches"]) {
        if (!branch_doc.is_object() || !branch_doc.contains("points") ||
            !branch_doc["points"].is_array()) {
            throw std::invalid_argument("every branch needs a \"points\" array");
        }
        LiftBranch br;
        for (const auto& pt : branch_doc["points"]) {
            if (!pt.is_array() || pt.size() != 2 || !pt[0].is_string() || !pt[1].is_string()) {
                throw std::invalid_argument("breakpoints must be [\"t\", \"y\"] string pairs");
            }
            br.points.emplace_back(parse_rational(pt[0].get<std::string>()),
                                   parse_rational(pt[1].get<std::string>()));
        }
        branches.push_back(std::move(br));
    }
    if (doc["n"].get<long long>() != static_cast<long long>(branches.size())) {
        throw std::invalid_argument("\"n\" does not match the number of branches");
    }
    MultiMap m(std::move(branches));
    require_valid(m);
    return m;
}

std::string coincidence_to_json(const GraphIntersections& gi, bool domain_mode, int indent) {
    ordered_json doc;
    doc["points"] = ordered_json::array();
    doc["intervals"] = ordered_json::array();
    DomainCoincidences dom = project_to_domain(gi);
    if (domain_mode) {
        for (const auto& x : dom.points) {
            doc["points"].push_back({{"x", format_rational(x.value)}});
        }
        for (const auto& [lo, hi] : dom.arcs) {
            doc["intervals"].push_back(
                {{"x_lo", format_rational(lo)}, {"x_hi", format_rational(hi)}});
        }
    } else {
        for (const auto& pt : gi.points) {
            doc["points"].push_back({{"x", format_rational(pt.x.value)},
                                     {"y", format_rational(pt.y.value)},
                                     {"f_branch", pt.f_branch},
                                     {"g_branch", pt.g_branch},
                                     {"offset", static_cast<long long>(pt.offset)}});
        }
        for (const auto& arc : gi.arcs) {
            doc["intervals"].push_back({{"t_lo", format_rational(arc.t_lo)},
                                        {"t_hi", format_rational(arc.t_hi)},
                                        {"f_branch", arc.f_branch},
                                        {"g_branch", arc.g_branch},
                                        {"offset", static_cast<long long>(arc.offset)}});
        }
    }
    doc["continuum"] = !gi.arcs.empty();
    doc["counts"] = {{"domain", count_to_json(dom.count())}, {"graph", count_to_json(gi.count())}};
    return doc.dump(indent);
}

std::string loop_to_json(const TorusLoop& l, int indent) {
    auto [n, a] = l.homology_class();
    ordered_json doc;
    doc["end"] = {n, a};
    doc["points"] = ordered_json::array();
    for (const auto& [u, v] : l.points) {
        doc["points"].push_back({format_rational(u), format_rational(v)});
    }
    return doc.dump(indent);
}

std::string class_index_to_json(const ClassIndex& c, int indent) {
    ordered_json doc;
    doc["rep"] = {static_cast<long long>(c.p), static_cast<long long>(c.q)};
    doc["det"] = static_cast<long long>(c.det);
    if (c.f_component != 0 || c.g_component != 0) {
        doc["components"] = {c.f_component, c.g_component};
    }
    return doc.dump(indent);
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "t,domain_count,graph_count\n";
    for (const auto& row : rows) {
        out += format_rational(row.t) + "," + format_count(row.domain_count) + "," +
               format_count(row.graph_count) + "\n";
    }
    return out;
}

}  // namespace nielsen
