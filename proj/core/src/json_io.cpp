#include "lltlab/json_io.hpp"

#include <algorithm>

#include "lltlab/errors.hpp"

namespace lltlab {

namespace {

mpz_class mpz_from_json(const nlohmann::json& j, const char* what) {
    try {
        if (j.is_string()) return mpz_class(j.get<std::string>(), 10);
        if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    } catch (const std::invalid_argument&) {
    }
    throw ParseError(std::string(what) + ": expected a decimal integer");
}

std::vector<std::pair<int, int>> pairs_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError(std::string(what) + ": expected [u,v] entries");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

ojson pairs_to_json(const std::vector<std::pair<int, int>>& es) {
    ojson a = ojson::array();
    for (auto [u, v] : es) a.push_back(ojson::array({u, v}));
    return a;
}

}  // namespace

ojson qpoly_to_json(const QPoly& p) {
    ojson a = ojson::array();
    for (const mpz_class& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("qpoly: expected an array of coefficients");
    std::vector<mpz_class> c;
    for (const auto& e : j) c.push_back(mpz_from_json(e, "qpoly coefficient"));
    return QPoly::from_coeffs(std::move(c));
}

ojson sympoly_to_json(const SymPoly& a) {
    ojson j;
    j["num_vars"] = a.num_vars();
    ojson terms = ojson::array();
    for (const auto& [lam, c] : a.terms()) {
        ojson t;
        t["exponents"] = lam.parts();
        t["q_coeffs"] = qpoly_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

SymPoly sympoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num_vars") || !j.contains("terms"))
        throw ParseError("sympoly: expected {\"num_vars\", \"terms\"}");
    if (!j["num_vars"].is_number_integer()) throw ParseError("sympoly: num_vars must be an integer");
    SymPoly a(j["num_vars"].get<int>());
    if (!j["terms"].is_array()) throw ParseError("sympoly: terms must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("q_coeffs"))
            throw ParseError("sympoly: expected {\"exponents\", \"q_coeffs\"} terms");
        if (!t["exponents"].is_array()) throw ParseError("sympoly: exponents must be an array");
        std::vector<int> parts;
        for (const auto& e : t["exponents"]) {
            if (!e.is_number_integer()) throw ParseError("sympoly: exponents must be integers");
            parts.push_back(e.get<int>());
        }
        a.add_term(Partition(std::move(parts)), qpoly_from_json(t["q_coeffs"]));
    }
    return a;
}

ojson graph_to_json(const LLTGraph& g) {
    ojson j;
    j["n"] = g.n;
    j["e1"] = pairs_to_json(g.e1);
    j["e2"] = pairs_to_json(g.e2);
    j["ed"] = pairs_to_json(g.ed);
    return j;
}

LLTGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n")) throw ParseError("graph: expected {\"n\", edge lists}");
    if (!j["n"].is_number_integer()) throw ParseError("graph: n must be an integer");
    auto edges = [&](const char* kind) {
        return j.contains(kind) ? pairs_from_json(j[kind], kind) : std::vector<std::pair<int, int>>{};
    };
    return LLTGraph(j["n"].get<int>(), edges("e1"), edges("e2"), edges("ed"));
}

ojson tree_to_json(const LabeledTree& t) { return pairs_to_json(t.edges); }

LabeledTree tree_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> edges;
    int m = 0;
    if (j.is_array()) {
        edges = pairs_from_json(j, "tree");
        for (auto [u, v] : edges) m = std::max({m, u, v});
        if (edges.empty()) m = 1;
    } else if (j.is_object() && j.contains("edges")) {
        edges = pairs_from_json(j["edges"], "tree");
        if (j.contains("m") && j["m"].is_number_integer()) {
            m = j["m"].get<int>();
        } else {
            for (auto [u, v] : edges) m = std::max({m, u, v});
            if (edges.empty()) m = 1;
        }
    } else {
        throw ParseError("tree: expected [[u,v],...] or {\"m\", \"edges\"}");
    }
    return LabeledTree(m, std::move(edges));
}

ojson parking_to_json(const ParkingFunction& f) { return ojson(f.f); }

ParkingFunction parking_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("parking: expected [f(1),...,f(m)]");
    std::vector<int> f;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("parking: entries must be integers");
        f.push_back(e.get<int>());
    }
    return ParkingFunction(std::move(f));
}

ojson shapes_to_json(const ShapeSequence& s) {
    ojson j;
    ojson arr = ojson::array();
    for (const SkewShape& sh : s.shapes()) arr.push_back(sh.to_string());
    j["shapes"] = std::move(arr);
    return j;
}

ojson report_to_json(const VerificationReport& r) {
    ojson j;
    j["claim"] = r.claim;
    j["params"] = r.params;
    j["holds"] = r.holds;
    // Timing stays out of the JSON so identical invocations serialize to
    // identical bytes; the human-readable renderer reports it instead.
    j["notes"] = r.notes;
    if (r.witness) {
        ojson w;
        w["lhs"] = sympoly_to_json(r.witness->lhs);
        w["rhs"] = sympoly_to_json(r.witness->rhs);
        w["difference"] = sympoly_to_json(r.witness->difference);
        j["witness"] = std::move(w);
    }
    return j;
}

}  // namespace lltlab
