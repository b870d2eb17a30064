#pragma once

#include <cctype>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "helly/action.hpp"
#include "helly/base.hpp"
#include "helly/cliquepath.hpp"
#include "helly/extremal.hpp"
#include "helly/graph.hpp"
#include "helly/isometry.hpp"
#include "helly/rational.hpp"
#include "helly/systolic.hpp"
#include "helly/view.hpp"

namespace helly {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::pair<int, int> line_col_of_offset(const std::string& text,
                                              std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline long long parse_int_token(const std::string& tok, int line, int col) {
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) throw ParseError(line, col, "expected an integer");
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw ParseError(line, col, "expected an integer, got '" + tok + "'");
    return std::stoll(tok);
}

}  // namespace detail

// Text graph format: first significant line `graph <n>`, then `e <u> <v>`
// lines with 0-based endpoints; `#` starts a comment.
inline FiniteGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::vector<std::pair<std::string, int>> toks;  // token, 1-based col
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            toks.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
            i = j;
        }
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks[0].first != "graph")
                throw ParseError(lineno, toks[0].second,
                                 "expected 'graph <n>'");
            if (toks.size() != 2)
                throw ParseError(lineno, toks[0].second,
                                 "expected 'graph <n>'");
            n = detail::parse_int_token(toks[1].first, lineno, toks[1].second);
            if (n < 1)
                throw ParseError(lineno, toks[1].second,
                                 "vertex count must be positive");
            continue;
        }
        if (toks[0].first != "e")
            throw ParseError(lineno, toks[0].second,
                             "expected 'e <u> <v>'");
        if (toks.size() != 3)
            throw ParseError(lineno, toks[0].second, "expected 'e <u> <v>'");
        long long u =
            detail::parse_int_token(toks[1].first, lineno, toks[1].second);
        long long v =
            detail::parse_int_token(toks[2].first, lineno, toks[2].second);
        for (auto [w, col] : {std::pair<long long, int>{u, toks[1].second},
                              {v, toks[2].second}})
            if (w < 0 || w >= n)
                throw ParseError(lineno, col, "vertex id out of range");
        if (u == v)
            throw ParseError(lineno, toks[1].second, "self-loops not allowed");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError(lineno + 1, 1, "missing 'graph <n>' line");
    return FiniteGraph(static_cast<int>(n), edges);
}

inline json json_from_string(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = detail::line_col_of_offset(text, e.byte);
        throw ParseError(line, col, "invalid JSON");
    }
}

inline FiniteGraph parse_graph_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        throw ParseError(1, 1, "graph JSON needs integer 'n' and 'edges' array");
    long long n = j["n"].get<long long>();
    if (n < 1) throw ParseError(1, 1, "vertex count must be positive");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError(1, 1, "each edge must be a pair of vertex ids");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(1, 1, "vertex id out of range");
        if (u == v) throw ParseError(1, 1, "self-loops not allowed");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return FiniteGraph(static_cast<int>(n), edges);
}

// Either text format or the JSON object form, detected by the first
// significant character.
inline FiniteGraph parse_graph(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(json_from_string(content));
        break;
    }
    return parse_graph_text(content);
}

// {"family":"king","dim":d} with optional "box":[k1,...,kd] (side lengths).
inline GraphView parse_family_json(const json& j) {
    if (!j.is_object() || j.value("family", "") != "king" ||
        !j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError(1, 1,
                         "family JSON needs \"family\":\"king\" and integer "
                         "\"dim\"");
    int d = j["dim"].get<int>();
    if (d < 1 || d > 8) throw ParseError(1, 1, "dim must be in 1..8");
    if (!j.contains("box")) return GraphView::king(d);
    const auto& b = j["box"];
    if (!b.is_array() || static_cast<int>(b.size()) != d)
        throw ParseError(1, 1, "box must list one side length per dimension");
    std::vector<long long> sides;
    for (const auto& s : b) {
        if (!s.is_number_integer() || s.get<long long>() < 1)
            throw ParseError(1, 1, "box sides must be positive integers");
        sides.push_back(s.get<long long>());
    }
    return GraphView::king_box(sides);
}

// {"perm":[...]} for finite views; {"affine":{"M":[[...]],"b":[...]}} for
// king views. Validated against the view.
inline Automorphism parse_automorphism_json(const json& j,
                                            const GraphView& view) {
    if (j.is_object() && j.contains("perm")) {
        if (view.is_king())
            throw ParseError(1, 1, "permutation map given for a king family");
        const auto& p = j["perm"];
        if (!p.is_array())
            throw ParseError(1, 1, "perm must be an array of vertex ids");
        std::vector<int> perm;
        for (const auto& v : p) {
            if (!v.is_number_integer())
                throw ParseError(1, 1, "perm must be an array of vertex ids");
            perm.push_back(v.get<int>());
        }
        try {
            return Automorphism::permutation(std::move(perm), view.graph());
        } catch (const Error& e) {
            throw ParseError(1, 1, e.what());
        }
    }
    if (j.is_object() && j.contains("affine")) {
        const auto& a = j["affine"];
        if (!a.is_object() || !a.contains("M") || !a.contains("b") ||
            !a["M"].is_array() || !a["b"].is_array())
            throw ParseError(1, 1, "affine map needs matrix M and vector b");
        std::vector<std::vector<long long>> m;
        for (const auto& row : a["M"]) {
            if (!row.is_array())
                throw ParseError(1, 1, "M must be a matrix");
            m.emplace_back();
            for (const auto& c : row) {
                if (!c.is_number_integer())
                    throw ParseError(1, 1, "M entries must be integers");
                m.back().push_back(c.get<long long>());
            }
        }
        std::vector<long long> b;
        for (const auto& c : a["b"]) {
            if (!c.is_number_integer())
                throw ParseError(1, 1, "b entries must be integers");
            b.push_back(c.get<long long>());
        }
        try {
            Automorphism g = Automorphism::affine(std::move(m), std::move(b));
            g.validate_on(view);
            return g;
        } catch (const Error& e) {
            throw ParseError(1, 1, e.what());
        }
    }
    throw ParseError(1, 1, "automorphism JSON needs 'perm' or 'affine'");
}

// Materializes a boxed king view as a finite graph plus the vertex labels in
// enumeration order; finite views pass through with their single-id labels.
inline std::pair<FiniteGraph, std::vector<Vertex>> materialize(
    const GraphView& view) {
    if (!view.is_king()) return {view.graph(), view.vertices()};
    if (!view.is_boxed())
        throw Error("cannot materialize an infinite lattice");
    std::vector<Vertex> labels = view.vertices();
    int n = static_cast<int>(labels.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (view.adjacent(labels[i], labels[j])) edges.emplace_back(i, j);
    return {FiniteGraph(n, edges), std::move(labels)};
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

inline json graph_to_json(const FiniteGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", std::move(edges)}};
}

inline json vertex_to_json(const Vertex& v, bool tuple) {
    if (!tuple) return v[0];
    json a = json::array();
    for (long long c : v) a.push_back(c);
    return a;
}

inline json clique_to_json(const Clique& c, bool tuple) {
    json a = json::array();
    for (const Vertex& v : c) a.push_back(vertex_to_json(v, tuple));
    return a;
}

inline std::string rat_json(const Rat& r) { return rat_to_string(r); }

// Exact rational point as {"values":[...], "den":q}: values are the
// coordinates scaled by the common denominator, 2 for every half-integer
// point (larger only for orbit-average fallbacks).
inline json point_to_json(const std::vector<Rat>& p) {
    long long den = 2;
    for (const Rat& c : p) den = std::lcm(den, c.denominator());
    json values = json::array();
    for (const Rat& c : p)
        values.push_back(c.numerator() * (den / c.denominator()));
    return {{"values", std::move(values)}, {"den", den}};
}

inline json hull_report_to_json(bool helly, const HullResult& hull,
                                int dimension, long long count_int,
                                long long count_half) {
    return {{"helly", helly},
            {"hull", graph_to_json(*hull.graph)},
            {"embedding", hull.embedding},
            {"dimension", dimension},
            {"extremal_count",
             {{"int", count_int}, {"half", count_half}}}};
}

inline json classification_to_json(const Classification& c, bool tuple) {
    json out{{"verdict", verdict_name(c.verdict)}};
    if (c.verdict == Verdict::Elliptic) {
        out["clique"] = clique_to_json(c.clique, tuple);
        if (c.fixed_point) out["fixed_point"] = point_to_json(*c.fixed_point);
        if (c.fixed_function) {
            std::vector<Rat> vals;
            for (Dist2 d : *c.fixed_function) vals.push_back(undouble(d));
            out["fixed_point"] = point_to_json(vals);
        }
    }
    if (c.verdict == Verdict::Hyperbolic && c.axis) {
        out["a"] = c.axis->a;
        out["L"] = rat_json(undouble(c.axis->L2));
        out["translation_length"] = rat_json(c.translation_length());
        out["certificate_window"] =
            static_cast<int>(c.axis->window.size()) - 1;
    }
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

inline json cliquepath_to_json(Dist2 L2, const std::vector<Clique>& cliques,
                               bool tuple, bool periodic = false,
                               int period = 0, int power_a = 0) {
    json cj = json::array();
    for (const Clique& c : cliques) cj.push_back(clique_to_json(c, tuple));
    return {{"L", rat_json(undouble(L2))},
            {"cliques", std::move(cj)},
            {"periodic", periodic},
            {"period", period},
            {"power_a", power_a}};
}

inline json action_to_json(const ActionOutcome& o, bool tuple) {
    json out{{"verdict", verdict_name(o.verdict)}};
    if (o.verdict == Verdict::Elliptic)
        out["clique"] = clique_to_json(o.clique, tuple);
    if (o.verdict == Verdict::Hyperbolic) {
        json w = json::array();
        for (const auto& [label, idx] : o.word) w.push_back({label, idx});
        out["word"] = std::move(w);
        out["translation_length"] = rat_json(o.tlen);
    }
    out["L"] = rat_json(undouble(o.L2));
    out["search_depth"] = o.depth;
    if (!o.note.empty()) out["note"] = o.note;
    return out;
}

inline json klarge_to_json(const LargenessReport& r) {
    return {{"k", r.k}, {"k_large", r.k_large}, {"witness", r.witness}};
}

// ---------------------------------------------------------------------------
// Human-readable one-liners
// ---------------------------------------------------------------------------

inline std::string human_clique(const Clique& c, bool tuple) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ", ";
        if (!tuple) {
            s += std::to_string(c[i][0]);
        } else {
            s += "(";
            for (std::size_t k = 0; k < c[i].size(); ++k) {
                if (k) s += ",";
                s += std::to_string(c[i][k]);
            }
            s += ")";
        }
    }
    return s + "}";
}

inline std::string human_classification(const Classification& c, bool tuple) {
    std::string s = "verdict: ";
    s += verdict_name(c.verdict);
    if (c.verdict == Verdict::Elliptic)
        s += "; stabilized clique " + human_clique(c.clique, tuple);
    if (c.verdict == Verdict::Hyperbolic && c.axis)
        s += "; translation length " + rat_to_string(c.translation_length()) +
             " (power " + std::to_string(c.axis->a) + ", step " +
             rat_to_string(undouble(c.axis->L2)) + ")";
    if (!c.note.empty()) s += "; " + c.note;
    return s;
}

inline std::string human_action(const ActionOutcome& o, bool tuple) {
    std::string s = "verdict: ";
    s += verdict_name(o.verdict);
    if (o.verdict == Verdict::Elliptic)
        s += "; common stabilized clique " + human_clique(o.clique, tuple);
    if (o.verdict == Verdict::Hyperbolic) {
        s += "; hyperbolic element with translation length " +
             rat_to_string(o.tlen) + ", word";
        for (const auto& [label, idx] : o.word)
            s += " " + label + std::to_string(idx);
    }
    if (!o.note.empty()) s += "; " + o.note;
    return s;
}

}  // namespace helly
