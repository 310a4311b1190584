#include "singraph/io.hpp"

#include <fstream>
#include <sstream>

namespace sg::io {

namespace {

auto rational_from_json(const Json& j) -> Rational {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) return Rational(j.get<double>());
    throw ValidationError("expected a rational, got " + j.dump());
}

auto rationals(const std::vector<Rational>& v) -> Json {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

auto rationals_from_json(const Json& j) -> std::vector<Rational> {
    if (!j.is_array()) throw ValidationError("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

auto term_json(const Graph& g, const Rational& c) -> Json {
    return Json{{"graph6", to_graph6(g)}, {"numerator", to_string(Integer(c.get_num()))}, {"denominator", to_string(Integer(c.get_den()))}};
}

auto term_coeff(const Json& t) -> Rational {
    return parse_rational(t.at("numerator").get<std::string>() + "/" + t.at("denominator").get<std::string>());
}

}  // namespace

auto to_json(const Graph& g) -> Json {
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return Json{{"n", g.order()}, {"edges", edges}};
}

auto graph_from_json(const Json& j) -> Graph {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return Graph(j.at("n").get<int>(), edges);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad graph JSON: ") + e.what());
    }
}

auto to_json(const Observable& o) -> Json {
    Json out = Json::array();
    for (const auto& [key, t] : o.terms()) out.push_back(term_json(t.graph, t.coeff));
    return out;
}

auto observable_from_json(const Json& j) -> Observable {
    Observable o;
    try {
        for (const auto& t : j) o.add(from_graph6(t.at("graph6").get<std::string>()), term_coeff(t));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad observable JSON: ") + e.what());
    }
    return o;
}

auto to_json(const NPolynomial& p) -> Json {
    Json out = Json::array();
    for (const auto& [l, o] : p.falling())
        for (const auto& [key, t] : o.terms()) {
            Json row = term_json(t.graph, t.coeff);
            row["falling_degree"] = l;
            out.push_back(row);
        }
    return out;
}

auto npolynomial_from_json(const Json& j) -> NPolynomial {
    std::map<int, Observable> coeffs;
    try {
        for (const auto& t : j) coeffs[t.at("falling_degree").get<int>()].add(from_graph6(t.at("graph6").get<std::string>()), term_coeff(t));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad polynomial JSON: ") + e.what());
    }
    return NPolynomial::from_falling(coeffs);
}

auto to_json(const Graphon& g) -> Json {
    return std::visit(
        [](const auto& r) -> Json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ConstantGraphon>) {
                return Json{{"p", to_string(r.p)}};
            } else if constexpr (std::is_same_v<T, StepGraphon>) {
                Json values = Json::array();
                for (const auto& row : r.values) values.push_back(rationals(row));
                return Json{{"weights", rationals(r.weights)}, {"values", values}};
            } else if constexpr (std::is_same_v<T, RankOneGraphon>) {
                return Json{{"p", to_string(r.p)}, {"weights", rationals(r.weights)}, {"f", rationals(r.f)}};
            } else {
                throw ValidationError("kernel graphons have no JSON form");
            }
        },
        g.rep());
}

auto graphon_from_json(const Json& j) -> Graphon {
    if (!j.is_object()) throw ValidationError("graphon JSON must be an object");
    if (j.contains("f")) return Graphon::rank_one(rational_from_json(j.at("p")), rationals_from_json(j.at("weights")), rationals_from_json(j.at("f")));
    if (j.contains("values")) {
        std::vector<std::vector<Rational>> values;
        for (const auto& row : j.at("values")) values.push_back(rationals_from_json(row));
        return Graphon::step(rationals_from_json(j.at("weights")), values);
    }
    if (j.contains("p")) return Graphon::constant(rational_from_json(j.at("p")));
    throw ValidationError("unrecognised graphon JSON");
}

auto load_graphon(const std::string& spec) -> Graphon {
    if (spec.rfind("constant:", 0) == 0) return Graphon::constant(parse_rational(spec.substr(9)));
    if (spec.rfind("graph:", 0) == 0) return step_from_graph(parse_motive(spec.substr(6)));
    std::ifstream in(spec);
    if (!in) throw ValidationError("cannot open graphon file " + spec);
    try {
        return graphon_from_json(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("bad graphon file " + spec + ": " + e.what());
    }
}

auto to_json(const DensityValue& d) -> Json {
    Json out{{"value", d.value}};
    if (d.exact) out["exact"] = to_string(*d.exact);
    else out["std_error"] = d.std_error;
    return out;
}

auto to_json(const TreeSystemReport& r) -> Json {
    Json levels = Json::array();
    for (const auto& lv : r.levels) {
        Json trees = Json::array();
        for (const auto& t : lv.trees) trees.push_back(describe(t));
        levels.push_back({{"size", lv.size}, {"trees", trees}, {"equations", lv.equations}, {"rank", lv.rank},
                          {"determined", lv.determined}, {"pinned_to_edge_power", lv.pinned_to_edge_power}});
    }
    Json eqs = Json::array();
    for (const auto& e : r.equations) {
        const auto& lv = r.levels.at(static_cast<std::size_t>(e.size - 3));
        eqs.push_back({{"label", e.label}, {"size", e.size}, {"equation", format_tree_equation(e, lv)},
                       {"coefficients", rationals(e.coefficients)}, {"satisfied", e.satisfied}});
    }
    Json dropped = Json::array();
    for (const auto& d : r.dropped) dropped.push_back({{"label", d.label}, {"reason", d.reason}});
    return Json{{"max_size", r.max_size}, {"include_kappa3", r.include_kappa3}, {"all_satisfied", r.all_satisfied},
                {"levels", levels}, {"equations", eqs}, {"dropped", dropped}};
}

auto estimates_csv(const McResult& r) -> std::string {
    std::ostringstream out;
    out.precision(17);
    out << "motives,order,estimate,std_error,samples,n,seed\n";
    for (const auto& e : r.estimates) {
        std::string motives;
        for (std::size_t i = 0; i < e.order.size(); ++i)
            motives += (i ? ";" : "") + describe(e.motives.at(static_cast<std::size_t>(e.order[i])));
        out << motives << ',' << e.order.size() << ',' << e.estimate << ',' << e.std_error << ',' << e.samples << ',' << e.n << ','
            << e.seed << '\n';
    }
    return out.str();
}

auto to_json(const Manifest& m) -> Json {
    Json params = Json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    Json out{{"tool", "singraph"}, {"version", SINGRAPH_VERSION}, {"command", m.command}, {"parameters", params}};
    out["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
    return out;
}

}  // namespace sg::io
