/*
 * Copyright 2026 The cyclepat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// JSON documents for graphs, arenas and cycle patterns. Needs nlohmann/json (vendor/json.hpp).

#include "cyclepat/graph.hpp"
#include "cyclepat/pattern.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace cyclepat::io {

using Json = nlohmann::ordered_json;

/// Vertices, edges and whichever optional attributes the document carries.
struct GraphDocument {
    Digraph graph;
    std::vector<std::optional<Player>> owners;
    std::vector<std::optional<Rational>> weights;
    std::vector<std::optional<unsigned long>> priorities;

    bool has_owners() const { return all_set(owners); }
    bool has_weights() const { return all_set(weights); }
    bool has_priorities() const { return all_set(priorities); }

    Arena arena() const
    {
        if (!has_owners()) throw Error(ErrorCode::NotAnArena, "graph document does not give every vertex an owner");
        std::vector<Player> o;
        for (auto &p : owners) o.push_back(*p);
        return Arena(graph, std::move(o));
    }

    WeightFn weight_fn() const
    {
        if (!has_weights()) throw Error(ErrorCode::DimensionMismatch, "graph document does not weight every edge");
        std::vector<Rational> w;
        for (auto &x : weights) w.push_back(*x);
        return WeightFn(std::move(w));
    }

    PriorityFn priority_fn() const
    {
        if (!has_priorities()) throw Error(ErrorCode::DimensionMismatch, "graph document does not give every edge a priority");
        std::vector<unsigned long> p;
        for (auto &x : priorities) p.push_back(*x);
        return PriorityFn(std::move(p));
    }

    static GraphDocument of(const Digraph &g)
    {
        GraphDocument d;
        d.graph = g;
        d.owners.assign(g.num_vertices(), std::nullopt);
        d.weights.assign(g.num_edges(), std::nullopt);
        d.priorities.assign(g.num_edges(), std::nullopt);
        return d;
    }

    static GraphDocument of(const Arena &a)
    {
        auto d = of(a.graph);
        for (VertexIndex v = 0; v < a.num_vertices(); ++v) d.owners[v] = a.owner[v];
        return d;
    }

    GraphDocument &with(const WeightFn &w)
    {
        for (EdgeIndex e = 0; e < w.size(); ++e) weights.at(e) = w[e];
        return *this;
    }

    GraphDocument &with(const PriorityFn &p)
    {
        for (EdgeIndex e = 0; e < p.size(); ++e) priorities.at(e) = p[e];
        return *this;
    }

private:
    template <class T>
    static bool all_set(const std::vector<std::optional<T>> &v)
    {
        for (auto &x : v)
            if (!x) return false;
        return true;
    }
};

namespace detail {

inline Error parse_error(const std::string &what) { return Error(ErrorCode::ParseError, what); }

inline void only_fields(const Json &obj, std::initializer_list<const char *> allowed, const std::string &where)
{
    if (!obj.is_object()) throw parse_error(where + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (auto *a : allowed) ok = ok || it.key() == a;
        if (!ok) throw parse_error("unknown field '" + it.key() + "' in " + where);
    }
}

inline const std::string &string_field(const Json &obj, const char *key, const std::string &where)
{
    if (!obj.contains(key) || !obj[key].is_string()) throw parse_error(where + " needs a string field '" + key + "'");
    return obj[key].get_ref<const std::string &>();
}

inline const Json &array_field(const Json &obj, const char *key, const std::string &where)
{
    if (!obj.contains(key) || !obj[key].is_array()) throw parse_error(where + " needs an array field '" + key + "'");
    return obj[key];
}

} // namespace detail

inline std::optional<Player> parse_player(std::string_view s)
{
    if (s == "Max") return Player::Max;
    if (s == "Min") return Player::Min;
    return std::nullopt;
}

inline std::string sign_string(Sign s) { return std::string(1, sign_char(s)); }

inline Sign parse_sign(const std::string &s)
{
    if (s == "+") return Sign::Plus;
    if (s == "0") return Sign::Zero;
    if (s == "-") return Sign::Minus;
    throw detail::parse_error("sign must be \"+\", \"0\" or \"-\", got '" + s + "'");
}

inline GraphDocument parse_graph(const Json &doc)
{
    using namespace detail;
    only_fields(doc, {"vertices", "edges"}, "graph document");
    GraphDocument out;
    for (auto &v : array_field(doc, "vertices", "graph document")) {
        only_fields(v, {"id", "owner"}, "vertex");
        out.graph.add_vertex(string_field(v, "id", "vertex"));
        std::optional<Player> owner;
        if (v.contains("owner")) {
            owner = parse_player(string_field(v, "owner", "vertex"));
            if (!owner) throw parse_error("owner must be \"Max\" or \"Min\"");
        }
        out.owners.push_back(owner);
    }
    for (auto &e : array_field(doc, "edges", "graph document")) {
        only_fields(e, {"id", "src", "dst", "weight", "priority"}, "edge");
        out.graph.add_edge(string_field(e, "id", "edge"), string_field(e, "src", "edge"), string_field(e, "dst", "edge"));
        std::optional<Rational> w;
        if (e.contains("weight")) {
            const auto &x = e["weight"];
            if (x.is_string())
                w = parse_rational(x.get_ref<const std::string &>());
            else if (x.is_number_integer())
                w = parse_rational(x.dump());
            else
                throw parse_error("weight must be an integer or an exact number string");
        }
        out.weights.push_back(w);
        std::optional<unsigned long> p;
        if (e.contains("priority")) {
            const auto &x = e["priority"];
            if (!x.is_number_unsigned()) throw parse_error("priority must be a nonnegative integer");
            p = x.get<unsigned long>();
        }
        out.priorities.push_back(p);
    }
    return out;
}

inline Json emit_graph(const GraphDocument &d)
{
    const auto &g = d.graph;
    Json vs = Json::array(), es = Json::array();
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        Json o = {{"id", g.vertex_id(v)}};
        if (d.owners.size() > v && d.owners[v]) o["owner"] = player_name(*d.owners[v]);
        vs.push_back(std::move(o));
    }
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        Json o = {{"id", g.edge_id(e)}, {"src", g.vertex_id(g.src(e))}, {"dst", g.vertex_id(g.dst(e))}};
        if (d.weights.size() > e && d.weights[e]) o["weight"] = to_string(*d.weights[e]);
        if (d.priorities.size() > e && d.priorities[e]) o["priority"] = *d.priorities[e];
        es.push_back(std::move(o));
    }
    return Json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

/// Table pattern over `g`; totality is checked against the enumerated cycles.
inline CyclePattern parse_pattern(const Json &doc, const Digraph &g, std::size_t budget = kDefaultCycleBudget)
{
    using namespace detail;
    only_fields(doc, {"cycles"}, "pattern document");
    std::map<CycleKey, Sign> signs;
    for (auto &c : array_field(doc, "cycles", "pattern document")) {
        only_fields(c, {"edges", "sign"}, "pattern cycle");
        std::vector<std::string> ids;
        for (auto &e : array_field(c, "edges", "pattern cycle")) {
            if (!e.is_string()) throw parse_error("cycle edges must be edge id strings");
            ids.push_back(e.get<std::string>());
        }
        Cycle cyc = Cycle::from_ids(g, ids);
        if (!signs.emplace(cyc.key, parse_sign(string_field(c, "sign", "pattern cycle"))).second)
            throw Error(ErrorCode::UnknownCycle, "cycle " + CyclePattern::describe_key(cyc.key) + " listed twice");
    }
    return CyclePattern::table(g, std::move(signs), budget);
}

inline Json emit_cycle_edges(const Cycle &c) { return Json(c.key); }

inline Json emit_pattern(const CyclePattern &p, std::size_t budget = kDefaultCycleBudget)
{
    Json cs = Json::array();
    for (auto &sc : p.signed_cycles(budget))
        cs.push_back(Json{{"edges", emit_cycle_edges(sc.cycle)}, {"sign", sign_string(sc.sign)}});
    return Json{{"cycles", std::move(cs)}};
}

inline Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw detail::parse_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw detail::parse_error("invalid JSON in '" + path + "': " + e.what());
    }
}

} // namespace cyclepat::io
