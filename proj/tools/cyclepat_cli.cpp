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

// cyclepat command-line driver. Every run prints one JSON report (or a table with --output table).

#include "cyclepat/cyclepat.hpp"
#include "cyclepat/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace cyclepat;
using io::Json;

namespace {

struct Globals {
    std::string algo = "gkk";
    std::size_t cycle_budget = kDefaultCycleBudget;
    std::uint64_t seed = 1;
    std::string output = "json";
};

/// Domain failure that carries structured details into the error payload.
struct Failure {
    ErrorCode code;
    std::string message;
    Json details = Json::object();
};

struct UsageFailure {
    std::string message;
};

// ---------------------------------------------------------------------------
// JSON fragments

Json vertex_ids(const Digraph &g, const VertexSet &s)
{
    Json a = Json::array();
    for (VertexIndex v = 0; v < g.num_vertices(); ++v)
        if (s[v]) a.push_back(g.vertex_id(v));
    return a;
}

Json edge_ids(const Digraph &g, const std::vector<EdgeIndex> &es)
{
    Json a = Json::array();
    for (auto e : es) a.push_back(g.edge_id(e));
    return a;
}

Json edge_set_ids(const Digraph &g, const EdgeSet &s)
{
    Json a = Json::array();
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        if (s[e]) a.push_back(g.edge_id(e));
    return a;
}

Json weights_json(const Digraph &g, const WeightFn &w)
{
    Json o = Json::object();
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) o[g.edge_id(e)] = to_string(w[e]);
    return o;
}

Json priorities_json(const Digraph &g, const PriorityFn &p)
{
    Json o = Json::object();
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) o[g.edge_id(e)] = p[e];
    return o;
}

Json cycle_json(const Digraph &g, const Cycle &c)
{
    Json vs = Json::array();
    for (auto v : c.vertices) vs.push_back(g.vertex_id(v));
    return Json{{"edges", io::emit_cycle_edges(c)}, {"vertices", std::move(vs)}};
}

Json optional_cycle(const Digraph &g, const std::optional<Cycle> &c) { return c ? cycle_json(g, *c) : Json(nullptr); }

Json strategy_json(const Digraph &g, const std::optional<Strategy> &s, const Arena &a, Player who)
{
    if (!s) return nullptr;
    Json o = Json::object();
    for (VertexIndex v = 0; v < g.num_vertices(); ++v)
        if (a.owner[v] == who && (*s)[v]) o[g.vertex_id(v)] = g.edge_id(*(*s)[v]);
    return o;
}

Json witness_json(const Digraph &g, const Witness &w)
{
    auto side = [&](const std::vector<WitnessTerm> &ts, Integer &total) {
        Json a = Json::array();
        for (auto &t : ts) {
            a.push_back(Json{{"edges", io::emit_cycle_edges(t.cycle)},
                             {"sign", io::sign_string(t.sign)},
                             {"multiplicity", to_string(t.multiplicity)}});
            total += t.multiplicity;
        }
        return a;
    };
    (void)g;
    Integer p = 0, q = 0;
    Json plus = side(w.plus, p), minus = side(w.minus, q);
    return Json{{"plus", std::move(plus)}, {"minus", std::move(minus)}, {"p", to_string(p)}, {"q", to_string(q)},
                {"size", to_string(Integer(p + q))}};
}

Json parity_witness_json(const Digraph &g, const ParityWitness &w)
{
    if (auto *z = std::get_if<ZeroCycleWitness>(&w)) return Json{{"type", "zeroCycle"}, {"cycle", cycle_json(g, z->cycle)}};
    const auto &ms = std::get<MixedSetWitness>(w);
    Json per = Json::object();
    for (auto e : ms.edges) {
        const auto &[p, q] = ms.per_edge.at(e);
        per[g.edge_id(e)] = Json{{"plus", io::emit_cycle_edges(p)}, {"minus", io::emit_cycle_edges(q)}};
    }
    return Json{{"type", "mixedSet"}, {"edges", edge_ids(g, ms.edges)}, {"perEdge", std::move(per)}};
}

Json partition_json(const Arena &a, const Partition &p)
{
    const auto &g = a.graph;
    VertexSet minus(p.v_plus.size());
    for (std::size_t v = 0; v < minus.size(); ++v) minus[v] = !p.v_plus[v];
    return Json{{"vPlus", vertex_ids(g, p.v_plus)},
                {"vMinus", vertex_ids(g, minus)},
                {"maxStrategy", strategy_json(g, p.max_strategy, a, Player::Max)},
                {"minStrategy", strategy_json(g, p.min_strategy, a, Player::Min)},
                {"iterations", p.iterations}};
}

// ---------------------------------------------------------------------------
// Inputs

io::GraphDocument load_graph(const std::string &path) { return io::parse_graph(io::read_json_file(path)); }

CyclePattern load_pattern(const std::string &path, const Digraph &g, const Globals &gl)
{
    return io::parse_pattern(io::read_json_file(path), g, gl.cycle_budget);
}

Algo algo_of(const Globals &gl)
{
    auto a = parse_algo(gl.algo);
    if (!a) throw UsageFailure{"unknown algorithm '" + gl.algo + "'"};
    return *a;
}

/// Weight function of an arena document, falling back to (-n)^priority when only priorities are given.
WeightFn game_weights(const io::GraphDocument &d)
{
    if (d.has_weights()) return d.weight_fn();
    if (d.has_priorities()) return parity_to_weights(d.graph, d.priority_fn());
    throw Error(ErrorCode::DimensionMismatch, "arena document needs weights or priorities on every edge");
}

Partition solve_for_cli(const Arena &a, const WeightFn &w, const Globals &gl)
{
    return solve_general(a, w, algo_of(gl), kDefaultStrategyBudget, gl.cycle_budget);
}

// ---------------------------------------------------------------------------
// Output

using Payload = std::pair<std::string, Json>; // kind, payload

std::string cell(const Json &v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void print_table(std::ostream &os, const Json &report)
{
    const Json &payload = report["payload"];
    os << "# " << report["command"].get<std::string>() << " (" << report["kind"].get<std::string>() << ")\n";
    if (payload.contains("rows") && payload["rows"].is_array()) {
        std::vector<std::string> cols;
        if (payload.contains("columns"))
            for (auto &c : payload["columns"]) cols.push_back(c.get<std::string>());
        std::vector<std::vector<std::string>> cells;
        for (auto &r : payload["rows"]) {
            std::vector<std::string> line;
            for (auto &c : cols) line.push_back(r.contains(c) ? cell(r[c]) : "");
            cells.push_back(std::move(line));
        }
        std::vector<std::size_t> width(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) {
            width[i] = cols[i].size();
            for (auto &l : cells) width[i] = std::max(width[i], l[i].size());
        }
        auto emit = [&](const std::vector<std::string> &l) {
            for (std::size_t i = 0; i < l.size(); ++i) {
                os << (i ? "  " : "") << l[i];
                if (i + 1 < l.size()) os << std::string(width[i] - l[i].size(), ' ');
            }
            os << "\n";
        };
        emit(cols);
        std::vector<std::string> rule;
        for (auto wd : width) rule.push_back(std::string(wd, '-'));
        emit(rule);
        for (auto &l : cells) emit(l);
        return;
    }
    for (auto it = payload.begin(); it != payload.end(); ++it) os << it.key() << "\t" << cell(it.value()) << "\n";
}

void emit(const Globals &gl, const std::string &command, const std::string &kind, const Json &payload)
{
    Json report{{"command", command}, {"kind", kind}, {"payload", payload}};
    if (gl.output == "table")
        print_table(std::cout, report);
    else
        std::cout << report.dump(2) << "\n";
}

int emit_error(const Globals &gl, const std::string &command, const std::string &code, const std::string &message,
               const Json &details, int exit_code)
{
    Json payload{{"code", code}, {"message", message}};
    for (auto it = details.begin(); it != details.end(); ++it) payload[it.key()] = it.value();
    // Errors always go out as JSON so scripts can rely on them.
    Globals json_out = gl;
    json_out.output = "json";
    emit(json_out, command, "error", payload);
    return exit_code;
}

// ---------------------------------------------------------------------------
// Subcommands

struct Args {
    std::string graph, pattern, other, cycle, eps = "1/4", source, target, family, experiment;
    std::size_t i = 1, k = 3, m = 6, imax = 2, count = 20, n = 3;
};

Payload cmd_cycles(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    const auto &g = d.graph;
    Json cs = Json::array();
    for (auto &c : enumerate_cycles(g, gl.cycle_budget)) {
        Json j = cycle_json(g, c);
        if (d.has_weights()) {
            auto w = d.weight_fn();
            j["weight"] = to_string(w.of(c));
            j["sign"] = io::sign_string(sign_of(w.of(c)));
        }
        cs.push_back(std::move(j));
    }
    Json p{{"count", cs.size()}, {"cycles", std::move(cs)}};
    return {"cycles", p};
}

Payload cmd_rank(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    const auto &g = d.graph;
    auto r = cycle_space_rank(g, gl.cycle_budget);
    return {"rank", Json{{"rank", r}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"components", weak_components(g)}}};
}

Payload cmd_realize(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto pat = load_pattern(a.pattern, d.graph, gl);
    auto res = check_realizable(pat, gl.cycle_budget);
    if (auto *nr = std::get_if<NotRealizable>(&res))
        throw Failure{ErrorCode::NotRealizablePattern, "pattern is not realizable", Json{{"witness", witness_json(d.graph, nr->witness)}}};
    const auto &w = std::get<Realization>(res).w;
    return {"realization", Json{{"weights", weights_json(d.graph, w)},
                                {"linf", to_string(w.linf())},
                                {"hadamardBound", to_string(hadamard_floor(d.graph))},
                                {"withinBound", within_hadamard_bound(d.graph, w)}}};
}

Payload cmd_minimize(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto pat = load_pattern(a.pattern, d.graph, gl);
    auto r = minimal_linf(build_cone(pat, gl.cycle_budget));
    return {"minimalRealization", Json{{"k", to_string(r.k)}, {"weights", weights_json(d.graph, r.w)}, {"ilpCalls", r.ilp_calls}}};
}

Payload cmd_witness(const Args &a, const Globals &gl, bool minimal)
{
    auto d = load_graph(a.graph);
    auto pat = load_pattern(a.pattern, d.graph, gl);
    auto cone = build_cone(pat, gl.cycle_budget);
    auto res = check_realizable(cone);
    if (auto *r = std::get_if<Realization>(&res))
        throw Failure{ErrorCode::IsRealizable, "pattern is realizable", Json{{"weights", weights_json(d.graph, r->w)}}};
    Witness w = minimal ? minimal_witness(cone) : std::get<NotRealizable>(res).witness;
    Json p = witness_json(d.graph, w);
    p["verified"] = verify_witness(d.graph, pat, w);
    return {"witness", p};
}

Payload cmd_parity(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto pat = load_pattern(a.pattern, d.graph, gl);
    auto out = check_parity_realizable(pat, gl.cycle_budget);
    if (!out.priorities)
        throw Failure{ErrorCode::NotParityRealizable, "pattern is not parity realizable",
                      Json{{"witness", parity_witness_json(d.graph, *out.witness)}}};
    return {"priorities", Json{{"priorities", priorities_json(d.graph, *out.priorities)},
                               {"peelOrder", edge_ids(d.graph, out.peel_order)}}};
}

Payload cmd_parity_to_weights(const Args &a, const Globals &)
{
    auto d = load_graph(a.graph);
    auto w = parity_to_weights(d.graph, d.priority_fn());
    return {"weights", Json{{"weights", weights_json(d.graph, w)}}};
}

Payload cmd_solve(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto arena = d.arena();
    auto w = game_weights(d);
    auto part = solve_for_cli(arena, w, gl);
    Json p = partition_json(arena, part);
    p["algo"] = gl.algo;
    return {"partition", p};
}

Payload cmd_solve_pattern(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto arena = d.arena();
    validate(arena.graph, true);
    auto pat = load_pattern(a.pattern, d.graph, gl);
    auto part = solve_pattern_only(arena, pat, kDefaultStrategyBudget, gl.cycle_budget);
    Json p = partition_json(arena, part);
    p["verified"] = verify_partition(arena, pat, part, gl.cycle_budget);
    return {"partition", p};
}

Payload cmd_distinguish(const Args &a, const Globals &gl)
{
    auto d1 = load_graph(a.graph), d2 = load_graph(a.other);
    if (!(d1.graph == d2.graph)) throw Error(ErrorCode::DimensionMismatch, "the two documents describe different graphs");
    auto w1 = d1.weight_fn(), w2 = d2.weight_fn();
    auto c = distinguish(w1, w2, d1.graph, gl.cycle_budget);
    Json signs = nullptr;
    if (c) signs = Json::array({io::sign_string(weight_sign(w1, *c)), io::sign_string(weight_sign(w2, *c))});
    return {"distinguish", Json{{"samePattern", !c}, {"cycle", optional_cycle(d1.graph, c)}, {"signs", signs}}};
}

Payload cmd_zero_cycle(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto c = zero_weight_cycle(d.graph, d.weight_fn(), gl.cycle_budget);
    return {"zeroCycle", Json{{"cycle", optional_cycle(d.graph, c)}}};
}

Payload cmd_family(const Args &a, const Globals &)
{
    using namespace families;
    auto instance = [](const PriorityInstance &pi) {
        auto doc = io::GraphDocument::of(pi.graph).with(pi.priorities);
        return Json{{"graph", io::emit_graph(doc)},
                    {"marked", pi.marked ? Json(pi.graph.edge_id(*pi.marked)) : Json(nullptr)},
                    {"simple", is_simple(pi.graph)}};
    };
    if (a.family == "gi") return {"family", instance(gen_gi(a.i))};
    if (a.family == "fas1") return {"family", instance(gen_fas1_variant(a.i))};
    if (a.family == "simple") return {"family", instance(gen_simple_variant(a.k, a.i))};
    if (a.family == "reduction") {
        auto fam = gen_reduction_arenas(a.m);
        Json ws = Json::array(), arenas = Json::array();
        for (auto &x : fam.weights) ws.push_back(to_string(x));
        for (std::size_t t = 0; t < fam.arenas.size(); ++t) {
            const auto &ra = fam.arenas[t];
            auto w = fam.true_weights(t);
            auto doc = io::GraphDocument::of(ra.arena).with(w);
            auto part = solve_general(ra.arena, w);
            arenas.push_back(Json{{"graph", io::emit_graph(doc)},
                                  {"cycleC", edge_ids(ra.arena.graph, ra.cycle_c)},
                                  {"cycleCPrime", edge_ids(ra.arena.graph, ra.cycle_c_prime)},
                                  {"vPlus", vertex_ids(ra.arena.graph, part.v_plus)}});
        }
        return {"family", Json{{"m", fam.m}, {"weights", std::move(ws)}, {"arenas", std::move(arenas)}}};
    }
    throw UsageFailure{"unknown family '" + a.family + "' (expected gi, fas1, simple or reduction)"};
}

Payload cmd_center(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto arena = d.arena();
    auto w = game_weights(d);
    auto part = solve_for_cli(arena, w, gl);
    auto z = star_center(arena, part.v_plus);
    Json samples = Json::array();
    bool all = true;
    for (Rational lambda : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        std::vector<Rational> x;
        for (EdgeIndex e = 0; e < w.size(); ++e) x.push_back(lambda * w[e] + (1 - lambda) * z[e]);
        WeightFn wx(std::move(x));
        auto px = solve_rational(arena, wx, algo_of(gl));
        all = all && px.v_plus == part.v_plus;
        samples.push_back(Json{{"lambda", to_string(lambda)}, {"vPlus", vertex_ids(arena.graph, px.v_plus)}});
    }
    return {"center", Json{{"vPlus", vertex_ids(arena.graph, part.v_plus)},
                           {"center", weights_json(arena.graph, z)},
                           {"samples", std::move(samples)},
                           {"segmentInside", all}}};
}

std::vector<std::string> split_ids(const std::string &s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Payload cmd_boundary_probe(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto arena = d.arena();
    const auto &g = arena.graph;
    auto c = Cycle::from_ids(g, split_ids(a.cycle));
    auto p = boundary_probe(arena, c, parse_rational(a.eps), algo_of(gl));
    return {"boundaryProbe", Json{{"cycle", cycle_json(g, p.cycle)},
                                  {"eps", to_string(p.eps)},
                                  {"forest", edge_set_ids(g, p.forest)},
                                  {"wBase", weights_json(g, p.w_base)},
                                  {"wPlus", weights_json(g, p.w_plus)},
                                  {"wMinus", weights_json(g, p.w_minus)},
                                  {"plusVPlus", vertex_ids(g, p.part_plus.v_plus)},
                                  {"minusVPlus", vertex_ids(g, p.part_minus.v_plus)}}};
}

Payload cmd_trace(const Args &a, const Globals &gl)
{
    auto d = load_graph(a.graph);
    auto arena = d.arena();
    validate(arena.graph, true);
    TracedAlgo algo;
    if (gl.algo == "gkk")
        algo = TracedAlgo::Gkk;
    else if (gl.algo == "energy")
        algo = TracedAlgo::ValueIteration;
    else
        throw UsageFailure{"trace supports --algo gkk or energy"};
    auto t = traced_solve(arena, game_weights(d), algo);
    Json qs = Json::array();
    for (std::size_t i = 0; i < t.trace.queries.size(); ++i) {
        Json form = Json::array();
        for (auto &x : t.trace.queries[i]) form.push_back(to_string(x));
        qs.push_back(Json{{"form", std::move(form)}, {"sign", io::sign_string(t.trace.outcomes[i])}});
    }
    bool replayed = replay_partition(arena, t.trace, algo) == t.partition.v_plus;
    return {"trace", Json{{"algo", gl.algo},
                          {"vPlus", vertex_ids(arena.graph, t.partition.v_plus)},
                          {"edgeOrder", edge_ids(arena.graph, [&] {
                               std::vector<EdgeIndex> es(arena.num_edges());
                               for (EdgeIndex e = 0; e < es.size(); ++e) es[e] = e;
                               return es;
                           }())},
                          {"queries", std::move(qs)},
                          {"distinctHyperplanes", t.trace.hyperplanes().size()},
                          {"replayed", replayed}}};
}

Payload cmd_ext_bf(const Args &a, const Globals &)
{
    auto d = load_graph(a.graph);
    const auto &g = d.graph;
    auto w = d.weight_fn();
    auto oracle = oracle_from_weights(g, w);
    Json p = Json::object();
    if (!a.source.empty() || !a.target.empty()) {
        if (a.source.empty() || a.target.empty()) throw UsageFailure{"--source and --target go together"};
        auto walk = ext_shortest_walk(oracle, g.vertex(a.source), g.vertex(a.target));
        if (walk) {
            Rational s = 0;
            for (auto e : *walk) s += w[e];
            p["walk"] = Json{{"edges", edge_ids(g, *walk)}, {"weight", to_string(s)}};
        } else {
            p["walk"] = nullptr;
        }
    } else {
        p["negativeCycle"] = optional_cycle(g, ext_negative_cycle(oracle));
    }
    p["oracleQueries"] = oracle.queries();
    return {"extendedBellmanFord", p};
}

// Experiments -------------------------------------------------------------------

Payload exp_fibonacci(const Args &a, const Globals &gl)
{
    Json rows = Json::array();
    std::optional<Integer> prev;
    bool growing = true;
    for (std::size_t i = 1; i <= a.imax; ++i) {
        auto gi = families::gen_gi(i);
        auto pat = CyclePattern::parity_induced(gi.graph, gi.priorities);
        auto r = minimal_linf(build_cone(pat, gl.cycle_budget));
        if (prev && !(r.k > *prev)) growing = false;
        prev = r.k;
        rows.push_back(Json{{"i", i},
                            {"m", gi.graph.num_edges()},
                            {"kStar", to_string(r.k)},
                            {"ilpCalls", r.ilp_calls},
                            {"fibonacciChain", families::fibonacci_chain_holds(gi.graph, r.w)}});
    }
    return {"table", Json{{"experiment", "fibonacci"},
                          {"columns", {"i", "m", "kStar", "ilpCalls", "fibonacciChain"}},
                          {"rows", std::move(rows)},
                          {"strictlyGrowing", growing}}};
}

Payload exp_cross_solver(const Args &a, const Globals &gl)
{
    Rng rng(gl.seed);
    Json rows = Json::array();
    std::size_t agree = 0;
    for (std::size_t t = 0; t < a.count; ++t) {
        RandomGraphOptions opt;
        opt.n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
        opt.extra_edges = static_cast<std::size_t>(uniform_int(rng, 0, 6));
        auto arena = random_arena(rng, opt);
        auto w = random_weights(rng, arena.graph, -4, 4);
        auto o = solve_oracle(arena, w);
        bool ok = solve_gkk(arena, w) == o && solve_energy(arena, w).second == o &&
                  solve_pattern_only(arena, CyclePattern::weight_induced(arena.graph, w)) == o;
        agree += ok;
        std::size_t plus = 0;
        for (bool b : o.v_plus) plus += b;
        rows.push_back(Json{{"instance", t}, {"n", arena.num_vertices()}, {"m", arena.num_edges()}, {"vPlus", plus}, {"agree", ok}});
    }
    return {"table", Json{{"experiment", "cross-solver"},
                          {"columns", {"instance", "n", "m", "vPlus", "agree"}},
                          {"rows", std::move(rows)},
                          {"agreeing", agree}}};
}

Payload exp_parity_fraction(const Args &a, const Globals &gl)
{
    // Sampling only: counts how many random realizable tables are also parity realizable.
    Rng rng(gl.seed);
    std::size_t realizable = 0, parity = 0;
    for (std::size_t t = 0; t < a.count; ++t) {
        RandomGraphOptions opt;
        opt.n = a.n;
        opt.extra_edges = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        auto g = random_strongly_connected(rng, opt);
        std::map<CycleKey, Sign> signs;
        for (auto &c : enumerate_cycles(g, gl.cycle_budget)) signs[c.key] = uniform_int(rng, 0, 1) ? Sign::Plus : Sign::Minus;
        auto pat = CyclePattern::table(g, std::move(signs), gl.cycle_budget);
        if (!std::holds_alternative<Realization>(check_realizable(pat, gl.cycle_budget))) continue;
        ++realizable;
        parity += check_parity_realizable(pat, gl.cycle_budget).priorities.has_value();
    }
    Rational frac = realizable ? Rational(static_cast<long>(parity), static_cast<long>(realizable)) : Rational(0);
    frac.canonicalize();
    Json row{{"n", a.n}, {"samples", a.count}, {"realizable", realizable}, {"parityRealizable", parity}, {"fraction", to_string(frac)}};
    return {"table", Json{{"experiment", "parity-fraction"},
                          {"columns", {"n", "samples", "realizable", "parityRealizable", "fraction"}},
                          {"rows", Json::array({row})}}};
}

Payload cmd_experiment(const Args &a, const Globals &gl)
{
    if (a.experiment == "fibonacci") return exp_fibonacci(a, gl);
    if (a.experiment == "cross-solver") return exp_cross_solver(a, gl);
    if (a.experiment == "parity-fraction") return exp_parity_fraction(a, gl);
    throw UsageFailure{"unknown experiment '" + a.experiment + "' (expected fibonacci, cross-solver or parity-fraction)"};
}

} // namespace

int main(int argc, char **argv)
{
    Globals gl;
    Args args;
    CLI::App app{"cycle patterns of directed graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--algo", gl.algo, "game solver: oracle, gkk, energy or pattern-only")
        ->check(CLI::IsMember({"oracle", "gkk", "energy", "pattern-only"}));
    app.add_option("--cycle-budget", gl.cycle_budget, "maximum number of enumerated cycles");
    app.add_option("--seed", gl.seed, "seed for randomized experiments");
    app.add_option("--output", gl.output, "json or table")->check(CLI::IsMember({"json", "table"}));

    using Handler = std::function<Payload()>;
    std::map<std::string, Handler> handlers;
    auto sub = [&](const std::string &name, const std::string &help, Handler h) {
        handlers[name] = std::move(h);
        return app.add_subcommand(name, help);
    };
    auto with_graph = [&](CLI::App *s) { s->add_option("--graph", args.graph, "graph document")->required(); };
    auto with_pattern = [&](CLI::App *s) { s->add_option("--pattern", args.pattern, "pattern document")->required(); };

    CLI::App *s;
    s = sub("cycles", "list simple cycles", [&] { return cmd_cycles(args, gl); });
    with_graph(s);
    s = sub("rank", "cycle space rank", [&] { return cmd_rank(args, gl); });
    with_graph(s);
    s = sub("realize", "realization or opposing pair", [&] { return cmd_realize(args, gl); });
    with_graph(s);
    with_pattern(s);
    s = sub("minimize", "least max-norm integral realization", [&] { return cmd_minimize(args, gl); });
    with_graph(s);
    with_pattern(s);
    s = sub("witness", "non-realizability witness", [&] { return cmd_witness(args, gl, false); });
    with_graph(s);
    with_pattern(s);
    s = sub("min-witness", "smallest non-realizability witness", [&] { return cmd_witness(args, gl, true); });
    with_graph(s);
    with_pattern(s);
    s = sub("parity", "parity realization or witness", [&] { return cmd_parity(args, gl); });
    with_graph(s);
    with_pattern(s);
    s = sub("parity-to-weights", "weights (-n)^priority", [&] { return cmd_parity_to_weights(args, gl); });
    with_graph(s);
    s = sub("solve", "zero-mean partition of an arena", [&] { return cmd_solve(args, gl); });
    with_graph(s);
    s = sub("solve-pattern", "partition from a cycle pattern alone", [&] { return cmd_solve_pattern(args, gl); });
    with_graph(s);
    with_pattern(s);
    s = sub("distinguish", "first cycle where two weightings differ in sign", [&] { return cmd_distinguish(args, gl); });
    with_graph(s);
    s->add_option("--other", args.other, "second graph document with weights")->required();
    s = sub("zero-cycle", "first zero-weight cycle", [&] { return cmd_zero_cycle(args, gl); });
    with_graph(s);
    s = sub("family", "generate a hard-instance family", [&] { return cmd_family(args, gl); });
    s->add_option("name", args.family, "gi, fas1, simple or reduction")->required();
    s->add_option("--i", args.i, "family index");
    s->add_option("--k", args.k, "cycle length of the simple variant");
    s->add_option("--m", args.m, "number of reduction weights");
    s = sub("center", "star center of the partition of an arena", [&] { return cmd_center(args, gl); });
    with_graph(s);
    s = sub("boundary-probe", "perturb one cycle across the partition boundary", [&] { return cmd_boundary_probe(args, gl); });
    with_graph(s);
    s->add_option("--cycle", args.cycle, "comma-separated edge ids")->required();
    s->add_option("--eps", args.eps, "perturbation in (0, 1/2)");
    s = sub("trace", "sign queries issued by a solver", [&] { return cmd_trace(args, gl); });
    with_graph(s);
    s = sub("ext-bf", "Bellman-Ford through walk comparisons", [&] { return cmd_ext_bf(args, gl); });
    with_graph(s);
    s->add_option("--source", args.source, "source vertex id");
    s->add_option("--target", args.target, "target vertex id");
    s = sub("experiment", "run an experiment table", [&] { return cmd_experiment(args, gl); });
    s->add_option("name", args.experiment, "fibonacci, cross-solver or parity-fraction")->required();
    s->add_option("--imax", args.imax, "largest G_i for fibonacci");
    s->add_option("--count", args.count, "instances for sampled experiments");
    s->add_option("--n", args.n, "vertices for parity-fraction");

    std::string command = "cyclepat";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        for (auto *sc : app.get_subcommands()) command = sc->get_name();
        return emit_error(gl, command, "UsageError", e.what(), Json::object(), 1);
    }
    command = app.get_subcommands().front()->get_name();
    try {
        auto [kind, payload] = handlers.at(command)();
        emit(gl, command, kind, payload);
        return 0;
    } catch (const Failure &f) {
        return emit_error(gl, command, std::string(error_name(f.code)), f.message, f.details, 2);
    } catch (const UsageFailure &u) {
        return emit_error(gl, command, "UsageError", u.message, Json::object(), 1);
    } catch (const Error &e) {
        int code = e.code() == ErrorCode::ParseError ? 1 : 2;
        return emit_error(gl, command, std::string(error_name(e.code())), e.what(), Json::object(), code);
    } catch (const std::exception &e) {
        return emit_error(gl, command, "InternalError", e.what(), Json::object(), 2);
    }
}
