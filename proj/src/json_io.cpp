#include "ghyp/json_io.hpp"

namespace ghyp {

using nlohmann::json;

namespace {

// json type errors become invalid_input so callers see one error family
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw invalid_input(std::string("bad ") + what + " JSON: " + e.what());
    }
}

}  // namespace

json graph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    return {{"vertex_count", g.vertex_count()}, {"edges", edges}};
}

Multigraph graph_from_json(const json& j) {
    return guarded("graph", [&] {
        std::vector<Edge> edges;
        for (const json& e : j.at("edges"))
            edges.push_back({e.at("id").get<int>(), e.at("tail").get<int>(),
                             e.at("head").get<int>()});
        return Multigraph(j.at("vertex_count").get<int>(), std::move(edges));
    });
}

json rotation_to_json(const RotationSystem& r) {
    json rot = json::array();
    for (const auto& order : r.rotation()) {
        json at_vertex = json::array();
        for (const HalfEdge& h : order)
            at_vertex.push_back({h.edge_id, h.end == EdgeEnd::Head ? "head" : "tail"});
        rot.push_back(at_vertex);
    }
    return {{"graph", graph_to_json(r.graph())}, {"rotation", rot}};
}

RotationSystem rotation_from_json(const json& j) {
    return guarded("rotation", [&] {
        Multigraph g = graph_from_json(j.at("graph"));
        std::vector<std::vector<HalfEdge>> rot;
        for (const json& at_vertex : j.at("rotation")) {
            std::vector<HalfEdge> order;
            for (const json& h : at_vertex) {
                std::string end = h.at(1).get<std::string>();
                if (end != "tail" && end != "head")
                    throw invalid_input("half-edge end must be \"tail\" or \"head\"");
                order.push_back({h.at(0).get<int>(),
                                 end == "head" ? EdgeEnd::Head : EdgeEnd::Tail});
            }
            rot.push_back(std::move(order));
        }
        return RotationSystem(std::move(g), std::move(rot));
    });
}

json poly_to_json(const SubsetPoly& p) {
    json terms = json::array();
    for (const auto& [vars, c] : p.terms()) {
        json ids = json::array();
        EdgeSubset rest = vars;
        while (rest) {
            ids.push_back(std::countr_zero(rest) + 1);
            rest &= rest - 1;
        }
        terms.push_back({{"vars", ids}, {"coeff", c}});
    }
    return {{"n", p.var_count()}, {"terms", terms}};
}

SubsetPoly poly_from_json(const json& j) {
    return guarded("polynomial", [&] {
        SubsetPoly p(j.at("n").get<int>());
        for (const json& t : j.at("terms")) {
            EdgeSubset vars = 0;
            for (const json& id : t.at("vars")) {
                int v = id.get<int>();
                if (v < 1 || v > p.var_count()) throw invalid_input("variable index out of range");
                vars |= edge_bit(v);
            }
            p.add_term(vars, t.at("coeff").get<std::int64_t>());
        }
        return p;
    });
}

json class_to_json(const ClassPoly& c) { return json(c.coeffs()); }

ClassPoly class_from_json(const json& j) {
    return guarded("class", [&] { return ClassPoly(j.get<std::vector<std::int64_t>>()); });
}

json strata_to_json(const StrataCount& sc) {
    return {{"total", sc.total}, {"off_sigma", sc.off_sigma}, {"on_sigma", sc.on_sigma}};
}

json verify_report_to_json(const VerifyClassReport& rep) {
    json j = strata_to_json(rep.counts);
    j["q"] = rep.q;
    j["class_value"] = rep.class_value;
    j["pass"] = rep.pass;
    return j;
}

json cremona_report_to_json(const CremonaReport& rep) {
    return {{"q", rep.q},
            {"primal_off_sigma", rep.primal_off_sigma},
            {"dual_off_sigma", rep.dual_off_sigma},
            {"bijection", rep.bijection},
            {"pass", rep.pass}};
}

json verdict_to_json(const Verdict& v) {
    json j{{"kind", to_string(v.kind)}};
    if (v.witness) {
        const ReducibleWitness& w = *v.witness;
        auto ids = [](EdgeSubset s) {
            json out = json::array();
            while (s) {
                out.push_back(std::countr_zero(s) + 1);
                s &= s - 1;
            }
            return out;
        };
        j["witness"] = {{"separating_vertex",
                         w.separating_vertex ? json(*w.separating_vertex) : json(nullptr)},
                        {"components", json::array({ids(w.component_a), ids(w.component_b)})},
                        {"factors", json::array({poly_to_json(w.factor_a),
                                                 poly_to_json(w.factor_b)})}};
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

}  // namespace ghyp
