// Command-line front end for the Helly graph toolkit. Exit codes: 0 for a
// definite result, 2 for invalid input, 3 for Unknown / budget-style
// outcomes. JSON goes to standard output, diagnostics to standard error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "helly/io.hpp"

namespace {

using helly::json;

struct Options {
    std::string file;
    std::string family;
    int dim = 0;
    std::vector<long long> box;
    std::vector<std::string> auts;
    std::string L = "1";
    int k = 6;
    std::string format = "json";
    bool human = false;
    std::string output;
    std::string from, to;
    std::vector<std::string> points;
    helly::Budget budget;
};

void add_input_options(CLI::App* cmd, Options& o, bool family_allowed = true) {
    cmd->add_option("--file", o.file, "graph file (text or JSON)");
    if (family_allowed) {
        cmd->add_option("--family", o.family, "built-in family name (king)");
        cmd->add_option("--dim", o.dim, "family dimension");
        cmd->add_option("--box", o.box, "box side lengths (one per dimension)");
    }
}

void add_budget_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--max-vertices", o.budget.max_vertices,
                    "enumeration vertex cap");
    cmd->add_option("--max-nodes", o.budget.max_nodes, "search node cap");
    cmd->add_option("--max-word-len", o.budget.max_word_len,
                    "group word length cap per factor");
    cmd->add_option("--window", o.budget.window, "verification window");
    cmd->add_option("--format", o.format, "output format: json or human")
        ->check(CLI::IsMember({"json", "human"}));
    cmd->add_flag("--human", o.human, "append a prose summary");
    cmd->add_option("--output", o.output, "write JSON to a file");
}

helly::GraphView make_view(const Options& o) {
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw helly::Error("cannot open file: " + o.file);
        std::stringstream buf;
        buf << in.rdbuf();
        auto g = std::make_shared<helly::FiniteGraph>(
            helly::parse_graph(buf.str()));
        return helly::GraphView::finite(std::move(g));
    }
    if (o.family == "king") {
        json fam{{"family", "king"}, {"dim", o.dim}};
        if (!o.box.empty()) fam["box"] = o.box;
        return helly::parse_family_json(fam);
    }
    throw helly::Error("need --file or --family king --dim <d>");
}

helly::Rat parse_rat(const std::string& s) {
    auto r = helly::rat_from_string(s);
    if (!r) throw helly::Error("not a rational: " + s);
    return *r;
}

// L given in graph units as p or p/2; stored doubled.
helly::Dist2 parse_L2(const std::string& s) {
    helly::Rat r = parse_rat(s);
    helly::Rat doubled = r * 2;
    if (doubled.denominator() != 1 || doubled.numerator() <= 0)
        throw helly::Error("L must be a positive integer or half-integer");
    return doubled.numerator();
}

helly::Vertex parse_vertex(const json& j, const helly::GraphView& view) {
    if (!view.is_king()) {
        if (!j.is_number_integer())
            throw helly::ParseError(1, 1, "finite vertices are integer ids");
        return {j.get<long long>()};
    }
    if (!j.is_array() || static_cast<int>(j.size()) != view.dim())
        throw helly::ParseError(1, 1, "lattice vertices are coordinate tuples");
    helly::Vertex v;
    for (const auto& c : j) {
        if (!c.is_number_integer())
            throw helly::ParseError(1, 1, "coordinates must be integers");
        v.push_back(c.get<long long>());
    }
    if (!view.contains(v))
        throw helly::ParseError(1, 1, "vertex outside the view");
    return v;
}

helly::Clique parse_clique(const std::string& s, const helly::GraphView& view) {
    json j = helly::json_from_string(s);
    if (!j.is_array() || j.empty())
        throw helly::ParseError(1, 1, "a clique is a nonempty vertex array");
    helly::Clique c;
    for (const auto& vj : j) c.push_back(parse_vertex(vj, view));
    return helly::normalized_clique(std::move(c));
}

void emit(const Options& o, const json& j, const std::string& prose) {
    std::string text;
    if (o.format == "json") {
        text = j.dump();
        if (o.human && !prose.empty()) text += "\n" + prose;
    } else {
        text = prose.empty() ? j.dump() : prose;
    }
    if (!o.output.empty()) {
        std::ofstream out(o.output);
        if (!out) throw helly::Error("cannot write file: " + o.output);
        out << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

int run_check(const Options& o) {
    bool h;
    if (!o.file.empty()) {
        auto view = make_view(o);
        h = helly::is_helly(view.graph(), o.budget);
    } else {
        make_view(o);  // validate the family spec
        h = true;      // king lattices and boxes are Helly
    }
    emit(o, json{{"helly", h}},
         std::string("the graph is ") + (h ? "Helly" : "not Helly"));
    return 0;
}

json hull_report(const helly::FiniteGraph& g, const helly::Budget& budget) {
    bool h = helly::is_helly(g, budget);
    helly::HullResult hull = helly::helly_hull(g, budget);
    long long half =
        static_cast<long long>(helly::enumerate_extremal(g, 2, budget).size());
    int dim = helly::combinatorial_dimension(g, budget);
    return helly::hull_report_to_json(
        h, hull, dim, static_cast<long long>(hull.points.size()), half);
}

int run_hull(const Options& o, bool dim_only) {
    auto view = make_view(o);
    // boxed families are materialized for hull/dimension computations
    helly::FiniteGraph g =
        view.is_king() ? helly::materialize(view).first : view.graph();
    json rep = hull_report(g, o.budget);
    emit(o, rep,
         dim_only
             ? "combinatorial dimension " +
                   std::to_string(rep["dimension"].get<int>())
             : "hull with " + std::to_string(rep["hull"]["n"].get<int>()) +
                   " vertices");
    return 0;
}

int run_subdivide(const Options& o) {
    if (o.file.empty()) {
        auto view = make_view(o);
        json fam{{"family", "king"}, {"dim", view.dim()}, {"scale", "1/2"}};
        if (view.is_boxed()) {
            std::vector<long long> sides;
            for (int i = 0; i < view.dim(); ++i)
                sides.push_back(2 * (view.box_hi()[i] - view.box_lo()[i]) + 1);
            fam["box"] = sides;
        }
        emit(o, fam, "subdivision of the king family (edges have length 1/2)");
        return 0;
    }
    auto view = make_view(o);
    helly::HullResult sub = helly::subdivision(view.graph(), o.budget);
    json rep{{"hull", helly::graph_to_json(*sub.graph)},
             {"embedding", sub.embedding},
             {"extremal_count",
              {{"int",
                static_cast<long long>(
                    helly::enumerate_extremal(view.graph(), 1, o.budget)
                        .size())},
               {"half", static_cast<long long>(sub.points.size())}}}};
    emit(o, rep,
         "subdivision with " + std::to_string(sub.graph->n()) + " vertices");
    return 0;
}

int run_classify(const Options& o) {
    auto view = make_view(o);
    if (o.auts.size() != 1)
        throw helly::Error("classify needs exactly one --aut");
    helly::Automorphism g = helly::parse_automorphism_json(
        helly::json_from_string(o.auts[0]), view);
    helly::Classification c = helly::classify(view, g, o.budget);
    emit(o, helly::classification_to_json(c, view.is_king()),
         helly::human_classification(c, view.is_king()));
    return c.verdict == helly::Verdict::Unknown ? 3 : 0;
}

int run_tlen(const Options& o) {
    auto view = make_view(o);
    if (o.auts.size() != 1) throw helly::Error("tlen needs exactly one --aut");
    helly::Automorphism g = helly::parse_automorphism_json(
        helly::json_from_string(o.auts[0]), view);
    std::vector<helly::Vertex> points;
    for (const std::string& p : o.points)
        points.push_back(parse_vertex(helly::json_from_string(p), view));
    if (points.empty()) {
        if (view.is_king())
            points.push_back(helly::Vertex(view.dim(), 0));
        else
            points = view.vertices();
    }
    helly::Rat t = helly::translation_length(view, g, points);
    emit(o, json{{"translation_length", helly::rat_to_string(t)}},
         "translation length upper bound " + helly::rat_to_string(t));
    return 0;
}

int run_cliquepath(const Options& o) {
    auto view = make_view(o);
    if (o.from.empty() || o.to.empty())
        throw helly::Error("cliquepath needs --from and --to cliques");
    helly::Clique s = parse_clique(o.from, view);
    helly::Clique t = parse_clique(o.to, view);
    helly::Dist2 L2 = parse_L2(o.L);
    auto path = helly::build_clique_path(view, s, t, L2);
    emit(o, helly::cliquepath_to_json(L2, path, view.is_king()),
         "clique path with " + std::to_string(path.size()) + " cliques");
    return 0;
}

int run_decide(const Options& o) {
    auto view = make_view(o);
    if (o.auts.empty()) throw helly::Error("decide needs at least one --aut");
    std::vector<helly::Automorphism> gens;
    for (const std::string& a : o.auts)
        gens.push_back(helly::parse_automorphism_json(
            helly::json_from_string(a), view));
    helly::ActionOutcome out = helly::decide_action(view, gens, o.budget);
    emit(o, helly::action_to_json(out, view.is_king()),
         helly::human_action(out, view.is_king()));
    return out.verdict == helly::Verdict::Unknown ? 3 : 0;
}

int run_klarge(const Options& o) {
    auto view = make_view(o);
    helly::FiniteGraph g = view.is_king() ? helly::materialize(view).first
                                          : view.graph();
    helly::LargenessReport rep = helly::is_k_large(g, o.k, o.budget);
    std::string prose = rep.k_large
                            ? "the complex is " + std::to_string(o.k) + "-large"
                            : "not " + std::to_string(o.k) +
                                  "-large: induced cycle of length " +
                                  std::to_string(rep.witness.size());
    emit(o, helly::klarge_to_json(rep), prose);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Helly graph toolkit: hulls, dimension, automorphism "
                 "dynamics, clique paths, group actions"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "test the Helly property");
    add_input_options(check, o);
    add_budget_options(check, o);

    auto* hull = app.add_subcommand("hull", "Helly hull of a finite graph");
    add_input_options(hull, o);
    add_budget_options(hull, o);

    auto* dim = app.add_subcommand("dim", "combinatorial dimension");
    add_input_options(dim, o);
    add_budget_options(dim, o);

    auto* subdivide =
        app.add_subcommand("subdivide", "half-integer subdivision");
    add_input_options(subdivide, o);
    add_budget_options(subdivide, o);

    auto* classify =
        app.add_subcommand("classify", "classify an automorphism");
    add_input_options(classify, o);
    classify->add_option("--aut", o.auts, "automorphism JSON");
    add_budget_options(classify, o);

    auto* tlen = app.add_subcommand("tlen", "translation length bound");
    add_input_options(tlen, o);
    tlen->add_option("--aut", o.auts, "automorphism JSON");
    tlen->add_option("--point", o.points, "cell point (JSON vertex)");
    add_budget_options(tlen, o);

    auto* cliquepath =
        app.add_subcommand("cliquepath", "build a verified L-clique-path");
    add_input_options(cliquepath, o);
    cliquepath->add_option("--from", o.from, "start clique (JSON)");
    cliquepath->add_option("--to", o.to, "end clique (JSON)");
    cliquepath->add_option("--L", o.L, "step length (integer or p/2)");
    add_budget_options(cliquepath, o);

    auto* decide = app.add_subcommand(
        "decide", "decide the action generated by automorphisms");
    add_input_options(decide, o);
    decide->add_option("--aut", o.auts, "generator JSON (repeatable)");
    add_budget_options(decide, o);

    auto* klarge = app.add_subcommand("klarge", "k-largeness check");
    add_input_options(klarge, o);
    klarge->add_option("-k,--k", o.k, "largeness parameter (>= 4)");
    add_budget_options(klarge, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(o);
        if (hull->parsed()) return run_hull(o, false);
        if (dim->parsed()) return run_hull(o, true);
        if (subdivide->parsed()) return run_subdivide(o);
        if (classify->parsed()) return run_classify(o);
        if (tlen->parsed()) return run_tlen(o);
        if (cliquepath->parsed()) return run_cliquepath(o);
        if (decide->parsed()) return run_decide(o);
        if (klarge->parsed()) return run_klarge(o);
    } catch (const helly::BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const helly::SubdivisionInsufficient& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 3;
    } catch (const helly::SearchExhausted& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 3;
    } catch (const helly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const helly::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
