#include "diffcech/presentation_io.hpp"

#include "diffcech/errors.hpp"

namespace diffcech {

std::string join_path(const std::string& path, const std::string& key) {
    if (path.empty()) return key;
    if (!key.empty() && key[0] == '[') return path + key;
    return path + "." + key;
}

const Json& require(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path.empty() ? "<root>" : path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(join_path(path, key), "missing required field");
    return *it;
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path, e.what());
        } catch (const Error& e) {
            throw ParseError(path, e.what());
        }
    }
    throw ParseError(path, "expected an exact scalar (string or integer)");
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

namespace {

int int_field(const Json& j, const std::string& key, const std::string& path) {
    const Json& v = require(j, key, path);
    if (!v.is_number_integer()) throw ParseError(join_path(path, key), "expected an integer");
    return v.get<int>();
}

bool bool_field(const Json& j, const std::string& key, const std::string& path, bool fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) throw ParseError(join_path(path, key), "expected true or false");
    return it->get<bool>();
}

std::vector<std::vector<int>> int_lists(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of index lists");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array()) throw ParseError(p, "expected an array of chart indices");
        std::vector<int> row;
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            if (!j[i][k].is_number_integer()) throw ParseError(p + "[" + std::to_string(k) + "]", "expected an integer");
            row.push_back(j[i][k].get<int>());
        }
        out.push_back(std::move(row));
    }
    return out;
}

FiniteNerve nerve_from_json(const Json& j, const std::string& path) {
    const Json& cj = require(j, "charts", path);
    std::vector<std::string> charts;
    if (cj.is_number_integer()) {
        for (int i = 0; i < cj.get<int>(); ++i) charts.push_back(std::to_string(i));
    } else if (cj.is_array()) {
        for (std::size_t i = 0; i < cj.size(); ++i) {
            if (cj[i].is_string()) charts.push_back(cj[i].get<std::string>());
            else if (cj[i].is_number_integer()) charts.push_back(std::to_string(cj[i].get<long long>()));
            else throw ParseError(join_path(path, "charts") + "[" + std::to_string(i) + "]", "expected a chart name");
        }
    } else {
        throw ParseError(join_path(path, "charts"), "expected a list of chart names");
    }
    const int k_max = int_field(j, "k_max", path);
    const bool alternating = bool_field(j, "alternating", path, false);

    std::optional<Supports> supports;
    if (auto it = j.find("supports"); it != j.end()) {
        const std::string sp = join_path(path, "supports");
        Supports s;
        s.chart_atoms = int_lists(require(*it, "atoms", sp), join_path(sp, "atoms"));
        s.adjacency = int_lists(require(*it, "adjacency", sp), join_path(sp, "adjacency"));
        supports = std::move(s);
    }

    const bool has_alive = j.contains("alive"), has_facets = j.contains("facets");
    if (has_alive == has_facets) throw ParseError(join_path(path, "alive"), "give exactly one of \"alive\" or \"facets\"");
    try {
        if (has_facets)
            return FiniteNerve::from_facets(charts, int_lists(j["facets"], join_path(path, "facets")), k_max, alternating,
                                            supports);
        return FiniteNerve(charts, int_lists(j["alive"], join_path(path, "alive")), k_max, alternating, supports);
    } catch (const ValidationError& e) {
        throw ParseError(join_path(path, has_facets ? "facets" : "alive"), e.what());
    }
}

GroupQuotient quotient_from_json(const Json& j, const std::string& path) {
    const int dim = int_field(j, "dim", path);
    if (dim < 0) throw ParseError(join_path(path, "dim"), "must be non-negative");
    const auto n = static_cast<std::size_t>(dim);
    const Json& gj = require(j, "generators", path);
    if (!gj.is_array()) throw ParseError(join_path(path, "generators"), "expected an array");
    std::vector<QuotientGenerator> gens;
    for (std::size_t i = 0; i < gj.size(); ++i) {
        const std::string gp = join_path(path, "generators") + "[" + std::to_string(i) + "]";
        QuotientGenerator g;
        const Json& t = require(gj[i], "torsion", gp);
        if (!t.is_number_integer()) throw ParseError(join_path(gp, "torsion"), "expected an integer");
        g.torsion = t.get<long>();
        const std::string ap = join_path(gp, "affine");
        const Json& aj = require(gj[i], "affine", gp);
        const Json& A = require(aj, "A", ap);
        const Json& b = require(aj, "b", ap);
        if (!A.is_array() || A.size() != n) throw ParseError(join_path(ap, "A"), "expected " + std::to_string(n) + " rows");
        if (!b.is_array() || b.size() != n) throw ParseError(join_path(ap, "b"), "expected " + std::to_string(n) + " entries");
        g.map.A = ScalarMatrix(n, n);
        g.map.b.resize(n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::string rp = join_path(ap, "A") + "[" + std::to_string(r) + "]";
            if (!A[r].is_array() || A[r].size() != n) throw ParseError(rp, "expected " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) g.map.A(r, c) = scalar_from_json(A[r][c], rp + "[" + std::to_string(c) + "]");
            g.map.b[r] = scalar_from_json(b[r], join_path(ap, "b") + "[" + std::to_string(r) + "]");
        }
        gens.push_back(std::move(g));
    }
    const Json& fj = require(j, "free", path);
    if (!fj.is_boolean()) throw ParseError(join_path(path, "free"), "expected true or false");
    const int degree = int_field(j, "function_class_degree", path);
    try {
        return GroupQuotient(dim, std::move(gens), fj.get<bool>(), degree);
    } catch (const ValidationError& e) {
        throw ParseError(join_path(path, "generators"), e.what());
    }
}

} // namespace

Json presentation_to_json(const Presentation& p) {
    Json j = Json::object();
    if (!p.id().empty()) j["id"] = p.id();
    if (p.is_nerve()) {
        const FiniteNerve& n = p.nerve();
        j["kind"] = "nerve";
        j["charts"] = n.charts();
        j["alive"] = Json::array();
        for (const auto& s : n.alive_simplices()) j["alive"].push_back(s);
        j["k_max"] = n.k_max();
        j["alternating"] = n.alternating();
        if (n.supports()) {
            j["supports"] = {{"atoms", n.supports()->chart_atoms}, {"adjacency", n.supports()->adjacency}};
        }
        return j;
    }
    const GroupQuotient& q = p.quotient();
    j["kind"] = "quotient";
    j["dim"] = q.dim();
    j["generators"] = Json::array();
    for (const auto& g : q.generators()) {
        Json A = Json::array();
        for (std::size_t r = 0; r < g.map.A.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < g.map.A.cols(); ++c) row.push_back(scalar_to_json(g.map.A(r, c)));
            A.push_back(row);
        }
        Json b = Json::array();
        for (const auto& v : g.map.b) b.push_back(scalar_to_json(v));
        j["generators"].push_back({{"torsion", g.torsion}, {"affine", {{"A", A}, {"b", b}}}});
    }
    j["free"] = q.is_free();
    j["function_class_degree"] = q.function_class_degree();
    return j;
}

Presentation presentation_from_json(const Json& j, const std::string& path) {
    const Json& kind = require(j, "kind", path);
    if (!kind.is_string()) throw ParseError(join_path(path, "kind"), "expected \"nerve\" or \"quotient\"");
    const std::string k = kind.get<std::string>();
    std::string id;
    if (auto it = j.find("id"); it != j.end() && it->is_string()) id = it->get<std::string>();
    if (k == "nerve") return Presentation(nerve_from_json(j, path), id);
    if (k == "quotient") return Presentation(quotient_from_json(j, path), id);
    throw ParseError(join_path(path, "kind"), "unknown kind \"" + k + "\"");
}

std::string canonical_text(const Presentation& p) { return presentation_to_json(p).dump(2); }

} // namespace diffcech
