#include "strata/json_io.hpp"

#include <fstream>

namespace strata {

Json rational_to_json(const Rational& r) {
    Json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    return j;
}

Rational rational_from_json(const Json& j) {
    return Rational(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
}

Json class_to_json(const DivisorClass& c) {
    Json j;
    j["g"] = c.g;
    j["n"] = c.n;
    j["lambda"] = rational_to_json(c.lambda);
    j["psi"] = Json::array();
    for (auto& p : c.psi) j["psi"].push_back(rational_to_json(p));
    j["delta_irr"] = rational_to_json(c.delta_irr);
    j["delta"] = Json::array();
    for (auto& [b, coeff] : c.delta) {
        Json entry;
        entry["i"] = b.i;
        entry["S"] = mask_elements(b.S);
        entry["coeff"] = rational_to_json(coeff);
        j["delta"].push_back(entry);
    }
    return j;
}

DivisorClass class_from_json(const Json& j) {
    DivisorClass c(j.at("g").get<int>(), j.at("n").get<int>());
    c.lambda = rational_from_json(j.at("lambda"));
    c.psi.clear();
    for (auto& p : j.at("psi")) c.psi.push_back(rational_from_json(p));
    if ((int)c.psi.size() != c.n) throw Error(Errc::ShapeError, "psi vector length must equal n");
    c.delta_irr = rational_from_json(j.at("delta_irr"));
    for (auto& entry : j.at("delta")) {
        Mask S = mask_from_elements(entry.at("S").get<std::vector<int>>());
        c.add_delta(entry.at("i").get<int>(), S, rational_from_json(entry.at("coeff")));
    }
    return c;
}

Json chart_to_json(const ChartData& c) {
    Json j;
    j["n"] = c.n;
    j["nplus"] = c.nplus;
    j["nminus"] = c.nminus;
    j["pit"] = c.pit;
    j["pib"] = c.pib;
    j["dvec"] = c.dvec;
    j["splus"] = c.splus;
    j["sminus"] = c.sminus;
    return j;
}

ChartData chart_from_json(const Json& j) {
    ChartData c;
    c.n = j.at("n").get<int>();
    c.nplus = j.at("nplus").get<std::vector<int>>();
    c.nminus = j.at("nminus").get<std::vector<int>>();
    c.pit = j.at("pit").get<std::vector<int>>();
    c.pib = j.at("pib").get<std::vector<int>>();
    c.dvec = j.at("dvec").get<std::vector<int>>();
    c.splus = j.at("splus").get<int>();
    c.sminus = j.at("sminus").get<int>();
    return c;
}

Json graph_to_json(const EdgeLabeledGraph& g) {
    Json j;
    j["n"] = g.n;
    j["edges"] = Json::array();
    for (auto& [pr, w] : g.e) {
        Json entry;
        entry["i"] = pr.first;
        entry["j"] = pr.second;
        entry["weight"] = rational_to_json(w);
        j["edges"].push_back(entry);
    }
    return j;
}

EdgeLabeledGraph graph_from_json(const Json& j) {
    EdgeLabeledGraph g;
    g.n = j.at("n").get<int>();
    for (auto& entry : j.at("edges")) {
        int a = entry.at("i").get<int>(), b = entry.at("j").get<int>();
        if (a > b) std::swap(a, b);
        g.e[{a, b}] = rational_from_json(entry.at("weight"));
    }
    return g;
}

Json twisted_to_json(const TwistedConfig& cfg) {
    Json j;
    j["vertices"] = Json::array();
    for (auto& v : cfg.graph.vertices) {
        Json vv;
        vv["genus"] = v.genus;
        vv["markings"] = v.markings;
        j["vertices"].push_back(vv);
    }
    j["edges"] = Json::array();
    for (auto& [a, b] : cfg.graph.edges) j["edges"].push_back(Json::array({a, b}));
    j["marking_order"] = Json::array();
    for (auto& [m, k] : cfg.marking_order) j["marking_order"].push_back(Json::array({m, k}));
    j["edge_orders"] = Json::array();
    for (auto& [a, b] : cfg.edge_orders) j["edge_orders"].push_back(Json::array({a, b}));
    j["levels"] = Json::array();
    for (auto& [v, l] : cfg.level) {
        Json e;
        e["vertex"] = v;
        e["level"] = rational_to_json(l);
        j["levels"].push_back(e);
    }
    j["zeroed"] = std::vector<int>(cfg.zeroed.begin(), cfg.zeroed.end());
    j["residues"] = Json::array();
    for (auto& [q, r] : cfg.residue) {
        Json e;
        e["edge"] = q.first;
        e["end"] = q.second;
        e["re"] = rational_to_json(r.re);
        e["im"] = rational_to_json(r.im);
        j["residues"].push_back(e);
    }
    return j;
}

TwistedConfig twisted_from_json(const Json& j) {
    TwistedConfig cfg;
    for (auto& vv : j.at("vertices"))
        cfg.graph.vertices.push_back({vv.at("genus").get<int>(), vv.at("markings").get<std::vector<int>>()});
    for (auto& e : j.at("edges")) cfg.graph.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    for (auto& e : j.at("marking_order")) cfg.marking_order[e.at(0).get<int>()] = e.at(1).get<int>();
    for (auto& e : j.at("edge_orders")) cfg.edge_orders.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    if (j.contains("levels"))
        for (auto& e : j.at("levels")) cfg.level[e.at("vertex").get<int>()] = rational_from_json(e.at("level"));
    if (j.contains("zeroed"))
        for (int m : j.at("zeroed").get<std::vector<int>>()) cfg.zeroed.insert(m);
    if (j.contains("residues"))
        for (auto& e : j.at("residues"))
            cfg.residue[{e.at("edge").get<int>(), e.at("end").get<int>()}] = {
                rational_from_json(e.at("re")), rational_from_json(e.at("im"))};
    return cfg;
}

Json tuple_to_json(const MonodromyTuple& t) {
    Json j;
    j["d"] = t.d;
    j["perms"] = Json::array();
    for (auto& p : t.perms) j["perms"].push_back(p);
    return j;
}

MonodromyTuple tuple_from_json(const Json& j) {
    MonodromyTuple t;
    t.d = j.at("d").get<int>();
    for (auto& p : j.at("perms")) t.perms.push_back(p.get<Perm>());
    return t;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw Error(Errc::InvalidInput, std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

}  // namespace strata
