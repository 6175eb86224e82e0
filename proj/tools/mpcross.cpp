#include "mpcross/drawing_json.hpp"
#include "mpcross/errors.hpp"
#include "mpcross/extraction.hpp"
#include "mpcross/k4_table.hpp"
#include "mpcross/render.hpp"
#include "mpcross/template.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace mpcross;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const nlohmann::ordered_json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
}

Template load_template(const std::string& path) {
    return template_from_json(load_json(path));
}

std::vector<Permutation> parse_classes(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("classes: expected an array of vertex arrays");
    std::vector<Permutation> out;
    for (const auto& cls : j) {
        if (!cls.is_array()) throw ParseError("classes: expected an array of vertex arrays");
        std::vector<Vertex> vs;
        for (const auto& item : cls) {
            if (!item.is_string()) throw ParseError("classes: vertices are strings");
            vs.push_back(parse_vertex(item.get<std::string>()));
        }
        out.emplace_back(std::move(vs));
    }
    return out;
}

int run_realize(const std::string& rs_path, bool enumerate, long long budget,
                std::uint64_t seed, const std::string& out_path) {
    RotationSystem rs = load_rs(rs_path);
    RealizeOptions opt{budget, seed};
    if (enumerate) {
        auto completions = enumerate_completions(rs, opt);
        nlohmann::ordered_json j;
        j["count"] = completions.size();
        j["completions"] = nlohmann::ordered_json::array();
        for (const AbstractDrawing& d : completions)
            j["completions"].push_back(drawing_to_json(d));
        emit(j, out_path);
        if (completions.empty()) {
            std::cout << "unrealizable\n";
            return kExitNegative;
        }
        return kExitOk;
    }
    auto outcome = realize(rs, opt);
    if (!outcome.realizable) {
        std::cout << "unrealizable\n";
        return kExitNegative;
    }
    emit(witness_to_json(*outcome.witness), out_path);
    return kExitOk;
}

int run_k4_table(const std::string& out_path) {
    emit(k4_table_to_json(k4_table()), out_path);
    return kExitOk;
}

int run_template_validate(const std::string& tmpl_path, const std::string& out_path) {
    const Template t = load_template(tmpl_path);
    const auto problems = validate_template(t);
    nlohmann::ordered_json j;
    j["valid"] = problems.empty();
    j["problems"] = problems;
    emit(j, out_path);
    return problems.empty() ? kExitOk : kExitNegative;
}

int run_template_sign(const std::string& tmpl_path, const std::string& out_path) {
    emit(sign_to_json(sign_of(load_template(tmpl_path))), out_path);
    return kExitOk;
}

int run_template_realizable(const std::string& tmpl_path, long long budget, std::uint64_t seed,
                            const std::string& out_path) {
    const bool yes = is_realizable(load_template(tmpl_path), RealizeOptions{budget, seed});
    nlohmann::ordered_json j;
    j["realizable"] = yes;
    emit(j, out_path);
    if (!yes) {
        std::cout << "unrealizable\n";
        return kExitNegative;
    }
    return kExitOk;
}

int run_template_synth(const std::string& tmpl_path, int n, long long budget,
                       std::uint64_t seed, const std::string& out_path) {
    const Template t = load_template(tmpl_path);
    const AbstractDrawing d = canonical_drawing({t, n}, RealizeOptions{budget, seed});
    emit(drawing_to_json(d), out_path);
    return kExitOk;
}

int run_template_of(const std::string& drawing_path, const std::string& classes_path,
                    bool allow_invalid, const std::string& out_path) {
    const AbstractDrawing d = load_drawing(drawing_path, allow_invalid);
    const auto classes = parse_classes(load_json(classes_path));
    const auto t = template_of(d, classes);
    if (!t) {
        std::cout << "no template fits\n";
        return kExitNegative;
    }
    emit(template_to_json(*t), out_path);
    return kExitOk;
}

int run_drawing_validate(const std::string& drawing_path, const std::string& out_path) {
    const AbstractDrawing d = load_drawing(drawing_path, true);
    const auto report = validate(d);
    nlohmann::ordered_json j;
    j["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : report) {
        nlohmann::ordered_json entry;
        entry["kind"] = v.kind;
        entry["detail"] = v.detail;
        j["violations"].push_back(std::move(entry));
    }
    emit(j, out_path);
    return report.empty() ? kExitOk : kExitNegative;
}

int run_drawing_induce(const std::string& drawing_path, const std::string& vertices_path,
                       const std::string& edges_path, bool allow_invalid,
                       const std::string& out_path) {
    if (vertices_path.empty() == edges_path.empty()) {
        std::cerr << "error: induce needs exactly one of --vertices and --edges\n";
        return kExitUsage;
    }
    const AbstractDrawing d = load_drawing(drawing_path, allow_invalid);
    AbstractDrawing sub;
    if (!vertices_path.empty()) {
        const nlohmann::json j = load_json(vertices_path);
        if (!j.is_array()) throw ParseError("vertices: expected an array of vertex names");
        std::vector<Vertex> keep;
        for (const auto& item : j) {
            if (!item.is_string()) throw ParseError("vertices: expected vertex name strings");
            keep.push_back(parse_vertex(item.get<std::string>()));
        }
        sub = induce_vertices(d, keep);
    } else {
        const nlohmann::json j = load_json(edges_path);
        if (!j.is_array()) throw ParseError("edges: expected an array of endpoint pairs");
        std::vector<Edge> keep;
        for (const auto& pair : j) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                !pair[1].is_string())
                throw ParseError("edges: each entry lists two vertex names");
            keep.push_back(make_edge(parse_vertex(pair[0].get<std::string>()),
                                     parse_vertex(pair[1].get<std::string>())));
        }
        sub = induce_edges(d, keep);
    }
    emit(drawing_to_json(sub), out_path);
    return kExitOk;
}

int run_drawing_onepage(const std::string& onepage_path, const std::string& out_path) {
    const OnePageDrawing p = onepage_from_json(load_json(onepage_path));
    emit(drawing_to_json(from_onepage(p)), out_path);
    return kExitOk;
}

int run_extract(const std::string& drawing_path, int n, const std::string& schedule_path,
                long long budget, bool allow_invalid, const std::string& out_path) {
    const AbstractDrawing d = load_drawing(drawing_path, allow_invalid);
    ExtractOptions opt;
    opt.budget = budget;
    if (!schedule_path.empty()) {
        const nlohmann::json j = load_json(schedule_path);
        if (!j.is_object() || !j.contains("sizes") || !j["sizes"].is_array())
            throw ParseError("stage schedule: expected an object with a sizes array");
        for (const auto& item : j["sizes"]) {
            if (!item.is_number_integer())
                throw ParseError("stage schedule: sizes are integers");
            opt.stage_sizes.push_back(item.get<int>());
        }
    }
    const auto res = extract_canonical(d, n, opt);
    nlohmann::ordered_json j;
    j["found"] = res.has_value();
    if (!res) {
        emit(j, out_path);
        std::cout << "no canonical subdrawing found\n";
        return kExitNegative;
    }
    j["classes"] = nlohmann::ordered_json::array();
    std::vector<Vertex> kept;
    for (const Permutation& cls : res->classes) {
        auto arr = nlohmann::ordered_json::array();
        for (Vertex v : cls) {
            arr.push_back(to_string(v));
            kept.push_back(v);
        }
        j["classes"].push_back(std::move(arr));
    }
    j["template"] = template_to_json(res->tmpl);
    j["stage_sizes"] = res->stage_sizes;
    j["verification"] = verify_canonical(induce_vertices(d, kept), res->classes, res->tmpl);
    emit(j, out_path);
    return kExitOk;
}

int run_render(const std::string& tmpl_path, int n, const std::string& witness_path,
               long long budget, std::uint64_t seed, const std::string& out_path) {
    const Template t = load_template(tmpl_path);
    PlanarizedWitness w;
    if (!witness_path.empty()) {
        w = witness_from_json(load_json(witness_path));
    } else {
        auto r = realizability_of(t, RealizeOptions{budget, seed});
        if (!r.realizable) {
            std::cout << "unrealizable\n";
            return kExitNegative;
        }
        if (!r.witness) {
            std::cerr << "error: a single class has no figure to draw\n";
            return kExitUsage;
        }
        w = *r.witness;
    }
    emit_text(render_svg({t, n}, w), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rotation-system drawing toolkit"};
    app.require_subcommand(1);

    std::string rs_path, tmpl_path, drawing_path, classes_path, vertices_path, edges_path;
    std::string onepage_path, schedule_path, witness_path, out_path;
    bool enumerate = false, allow_invalid = false;
    int n = 1;
    long long budget = RealizeOptions{}.budget;
    std::uint64_t seed = 0;

    CLI::App* realize_cmd =
        app.add_subcommand("realize", "Find or enumerate drawings for a rotation system");
    realize_cmd->add_option("--rotation-system", rs_path, "Rotation system JSON file")
        ->required();
    realize_cmd->add_flag("--enumerate", enumerate, "List all distinct completions");
    realize_cmd->add_option("--budget", budget, "Route expansion budget");
    realize_cmd->add_option("--seed", seed, "Exploration order seed");
    realize_cmd->add_option("--out", out_path, "Output file (default stdout)");

    CLI::App* table_cmd =
        app.add_subcommand("k4-table", "Write the four-vertex classification table");
    table_cmd->add_option("--out", out_path, "Output file (default stdout)");

    CLI::App* template_cmd = app.add_subcommand("template", "Work with drawing templates");
    template_cmd->require_subcommand(1);
    CLI::App* t_validate = template_cmd->add_subcommand("validate", "Report structural problems");
    CLI::App* t_sign = template_cmd->add_subcommand("sign", "Write the side membership table");
    CLI::App* t_realizable =
        template_cmd->add_subcommand("realizable", "Decide whether the template has a drawing");
    CLI::App* t_synth = template_cmd->add_subcommand("synth", "Build the template's drawing");
    CLI::App* t_of = template_cmd->add_subcommand("of", "Read a template off a drawing");
    for (CLI::App* sub : {t_validate, t_sign, t_realizable, t_synth}) {
        sub->add_option("--template", tmpl_path, "Template JSON file")->required();
        sub->add_option("--out", out_path, "Output file (default stdout)");
    }
    for (CLI::App* sub : {t_realizable, t_synth}) {
        sub->add_option("--budget", budget, "Route expansion budget");
        sub->add_option("--seed", seed, "Exploration order seed");
    }
    t_synth->add_option("--n", n, "Vertices per class")->required();
    t_of->add_option("--drawing", drawing_path, "Drawing JSON file")->required();
    t_of->add_option("--classes", classes_path, "Class permutations JSON file")->required();
    t_of->add_flag("--allow-invalid", allow_invalid, "Skip drawing validation on load");
    t_of->add_option("--out", out_path, "Output file (default stdout)");

    CLI::App* drawing_cmd = app.add_subcommand("drawing", "Work with drawing files");
    drawing_cmd->require_subcommand(1);
    CLI::App* d_validate = drawing_cmd->add_subcommand("validate", "Report local axiom violations");
    d_validate->add_option("--drawing", drawing_path, "Drawing JSON file")->required();
    d_validate->add_option("--out", out_path, "Output file (default stdout)");
    CLI::App* d_induce = drawing_cmd->add_subcommand("induce", "Restrict to a vertex or edge set");
    d_induce->add_option("--drawing", drawing_path, "Drawing JSON file")->required();
    d_induce->add_option("--vertices", vertices_path, "JSON array of vertex names");
    d_induce->add_option("--edges", edges_path, "JSON array of endpoint pairs");
    d_induce->add_flag("--allow-invalid", allow_invalid, "Skip drawing validation on load");
    d_induce->add_option("--out", out_path, "Output file (default stdout)");
    CLI::App* d_onepage =
        drawing_cmd->add_subcommand("onepage", "Expand a one-page drawing file");
    d_onepage->add_option("--onepage", onepage_path, "One-page drawing JSON file")->required();
    d_onepage->add_option("--out", out_path, "Output file (default stdout)");

    CLI::App* extract_cmd =
        app.add_subcommand("extract", "Find a canonical subdrawing at a target class size");
    extract_cmd->add_option("--drawing", drawing_path, "Drawing JSON file")->required();
    extract_cmd->add_option("--n", n, "Target vertices per class")->required();
    extract_cmd->add_option("--stage-schedule", schedule_path,
                            "JSON file with intermediate class sizes");
    extract_cmd->add_option("--budget", budget, "Search budget");
    extract_cmd->add_flag("--allow-invalid", allow_invalid, "Skip drawing validation on load");
    extract_cmd->add_option("--out", out_path, "Output file (default stdout)");

    CLI::App* render_cmd = app.add_subcommand("render", "Draw a template figure as SVG");
    render_cmd->add_option("--template", tmpl_path, "Template JSON file")->required();
    render_cmd->add_option("--n", n, "Vertices per class")->required();
    render_cmd->add_option("--witness", witness_path,
                           "Planarized witness JSON file (default: search for one)");
    render_cmd->add_option("--budget", budget, "Route expansion budget");
    render_cmd->add_option("--seed", seed, "Exploration order seed");
    render_cmd->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (realize_cmd->parsed()) return run_realize(rs_path, enumerate, budget, seed, out_path);
        if (table_cmd->parsed()) return run_k4_table(out_path);
        if (template_cmd->parsed()) {
            if (t_validate->parsed()) return run_template_validate(tmpl_path, out_path);
            if (t_sign->parsed()) return run_template_sign(tmpl_path, out_path);
            if (t_realizable->parsed())
                return run_template_realizable(tmpl_path, budget, seed, out_path);
            if (t_synth->parsed())
                return run_template_synth(tmpl_path, n, budget, seed, out_path);
            if (t_of->parsed())
                return run_template_of(drawing_path, classes_path, allow_invalid, out_path);
        }
        if (drawing_cmd->parsed()) {
            if (d_validate->parsed()) return run_drawing_validate(drawing_path, out_path);
            if (d_induce->parsed())
                return run_drawing_induce(drawing_path, vertices_path, edges_path,
                                          allow_invalid, out_path);
            if (d_onepage->parsed()) return run_drawing_onepage(onepage_path, out_path);
        }
        if (extract_cmd->parsed())
            return run_extract(drawing_path, n, schedule_path, budget, allow_invalid, out_path);
        if (render_cmd->parsed())
            return run_render(tmpl_path, n, witness_path, budget, seed, out_path);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const UnrealizableTemplateError&) {
        std::cout << "unrealizable\n";
        return kExitNegative;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
