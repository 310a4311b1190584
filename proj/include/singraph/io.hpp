#pragma once

#include "singraph/graphon.hpp"
#include "singraph/observable.hpp"
#include "singraph/sim.hpp"
#include "singraph/singular.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace sg::io {

using Json = nlohmann::ordered_json;

auto to_json(const Graph& g) -> Json;  // {"n": k, "edges": [[i,j],...]}
auto graph_from_json(const Json& j) -> Graph;

auto to_json(const Observable& o) -> Json;  // [{graph6, numerator, denominator}, ...]
auto observable_from_json(const Json& j) -> Observable;
auto to_json(const NPolynomial& p) -> Json;  // terms carry "falling_degree"
auto npolynomial_from_json(const Json& j) -> NPolynomial;

// Constant: {"p": "a/b"}; step: {"weights": [...], "values": [[...]]};
// rank one: {"p", "weights", "f"}. Entries are strings "a/b" or numbers.
auto to_json(const Graphon& g) -> Json;
auto graphon_from_json(const Json& j) -> Graphon;
// "constant:a/b", "graph:<motive>" (step graphon of a graph) or a JSON file path.
auto load_graphon(const std::string& spec) -> Graphon;

auto to_json(const DensityValue& d) -> Json;
auto to_json(const TreeSystemReport& r) -> Json;

// One row per estimate: motives,order,estimate,std_error,samples,n,seed.
auto estimates_csv(const McResult& r) -> std::string;

struct Manifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::optional<std::uint64_t> seed;
};
auto to_json(const Manifest& m) -> Json;

}  // namespace sg::io
