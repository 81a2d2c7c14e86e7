#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "treeforce/json_io.hpp"

namespace {

using tf::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitNegative = 3;

struct Output {
    std::string path;    // empty: stdout
    std::string format;  // json | dot | text

    void emit(const Json& j, const std::string& dot = "", const std::string& text = "") const {
        std::string payload;
        if (format == "dot" && !dot.empty())
            payload = dot;
        else if (format == "text" && !text.empty())
            payload = text;
        else
            payload = j.dump(2) + "\n";
        if (path.empty())
            std::cout << payload;
        else {
            std::ofstream out(path);
            out << payload;
        }
    }
};

tf::GraphSpec parse_graph_arg(const std::string& arg) {
    if (arg == "g0") return tf::GraphSpec::g0();
    if (arg == "g1") return tf::GraphSpec::g1();
    if (arg == "e0") return tf::GraphSpec::e0();
    return tf::io::graph_spec_from(tf::io::load_file(arg));
}

int cmd_chromatic(const std::string& graph_arg, std::size_t depth, std::uint64_t budget,
                  const Output& out) {
    if (depth > 14) throw tf::PreconditionError("exact mode needs depth <= 14");
    tf::GraphSpec g = parse_graph_arg(graph_arg);
    tf::FiniteGraph f = tf::restrict_graph(g, depth);
    tf::ChromaticResult res = tf::chromatic_number(f, {budget});
    if (tf::verify_coloring(f, res.coloring) != -1)
        throw tf::PreconditionError("internal: witness rejected");

    Json coloring = Json::array();
    for (std::uint32_t v = 0; v < f.vertex_count(); ++v)
        coloring.push_back(Json::array({f.vertex_word(v).str(), res.coloring[v]}));
    Json j{{"command", "chromatic"},
           {"graph", graph_arg},
           {"depth", depth},
           {"vertices", f.vertex_count()},
           {"edges", f.edge_count()},
           {"chi", res.chi},
           {"search_nodes", res.nodes},
           {"coloring", coloring},
           {"verified", true}};
    std::string text = "chi = " + std::to_string(res.chi) +
                       ", edges = " + std::to_string(f.edge_count()) + "\n";
    out.emit(j, f.to_dot(), text);
    return kExitOk;
}

int cmd_construct(const std::string& kind, const std::string& graph_path,
                  const std::string& tree_path, std::size_t depth, std::size_t budget,
                  const Output& out) {
    tf::ClopenGraph g = tf::io::clopen_graph_from(tf::io::load_file(graph_path));
    tf::BlockTree p = tree_path.empty()
                          ? tf::BlockTree::full_tree()
                          : tf::io::block_tree_from(tf::io::load_file(tree_path));

    if (kind == "independent-tree") {
        tf::DichotomyBudget db;
        db.sigma_depth = budget;
        db.depth_out = depth;
        tf::DichotomyOutcome o = tf::density_dichotomy(p, g, tf::Relation::G1, db);
        Json j = tf::io::dichotomy_json(o);
        if (o.kind == tf::DichotomyOutcome::Kind::IndependentTree) {
            bool ok = tf::verify_independence(o.tree, g, tf::Relation::G1, depth);
            j["verification"] = ok ? "independent to depth " + std::to_string(depth)
                                   : "verification failed";
            out.emit(j);
            return ok ? kExitOk : kExitNegative;
        }
        out.emit(j);
        return kExitNegative;
    }
    if (kind == "clique-tree") {
        try {
            tf::CliqueTree c = tf::perfect_clique(p, g, tf::Relation::E0, depth);
            bool ok = tf::verify_clique_tree(c.tree, g);
            Json j{{"command", "construct"},
                   {"kind", "clique-tree"},
                   {"split_levels", c.split_levels},
                   {"checked_pairs", c.checked_pairs},
                   {"tree", tf::io::finite_tree_json(c.tree)},
                   {"verified", ok}};
            out.emit(j, c.tree.to_dot());
            return ok ? kExitOk : kExitNegative;
        } catch (const tf::DensityFailure& e) {
            Json j{{"command", "construct"}, {"kind", "clique-tree"}, {"error", e.what()}};
            out.emit(j);
            return kExitNegative;
        }
    }
    if (kind == "four-cycle") {
        auto cycle = tf::four_cycle(p, g);
        Json pts = Json::array();
        for (const auto& z : cycle) pts.push_back(tf::io::point_json(z));
        Json j{{"command", "construct"},
               {"kind", "four-cycle"},
               {"points", pts},
               {"verified", true}};
        out.emit(j);
        return kExitOk;
    }
    throw CLI::ValidationError("construct: unknown kind " + kind);
}

int cmd_fat(const std::string& kind, const std::string& tree_path,
            const std::string& clopen_path, std::size_t split_depth, std::uint64_t probe,
            std::size_t levels, const Output& out) {
    if (kind == "check") {
        tf::BlockTree p = tree_path.empty()
                              ? tf::BlockTree::full_tree()
                              : tf::io::block_tree_from(tf::io::load_file(tree_path));
        tf::FatnessReport rep = tf::is_fat(p, split_depth, probe);
        out.emit(tf::io::fatness_report_json(rep));
        return rep.all_fat() ? kExitOk : kExitNegative;
    }
    if (kind == "build") {
        tf::ClopenSet a = tf::io::clopen_from(tf::io::load_file(clopen_path));
        tf::BlockTree t = tf::g0_tree_inside(a, levels);
        Json j{{"command", "fat-build"},
               {"levels", levels},
               {"tree", tf::io::block_tree_json(t)},
               {"branches_inside", tf::branches_subset(t, a)},
               {"silver", t.is_silver()}};
        out.emit(j);
        return kExitOk;
    }
    if (kind == "ladder") {
        tf::BlockTree p = tree_path.empty()
                              ? tf::BlockTree::full_tree()
                              : tf::io::block_tree_from(tf::io::load_file(tree_path));
        tf::Ladder lad = tf::ladder(p, levels);
        Json j = tf::io::ladder_json(lad);
        Json table = Json::array();
        for (std::size_t i = 0; i + 1 < lad.levels.size(); ++i) {
            table.push_back(Json{{"level", i},
                                 {"ht", lad.heights[i]},
                                 {"size", lad.levels[i].size()},
                                 {"next_size", lad.levels[i + 1].size()}});
        }
        j["growth"] = table;
        std::string text;
        for (const auto& row : table)
            text += "L" + row["level"].dump() + ": ht=" + row["ht"].dump() +
                    " |L|=" + row["size"].dump() + " -> " + row["next_size"].dump() + "\n";
        out.emit(j, "", text);
        return kExitOk;
    }
    throw CLI::ValidationError("fat: unknown kind " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-forcing combinatorics on Cantor space at finite scale"};
    app.require_subcommand(1);

    std::string graph_arg = "g1", tree_path, clopen_path, kind;
    std::size_t depth = 6, split_depth = 3, levels = 1;
    std::uint64_t budget = 50'000'000, probe = 1u << 13;
    std::uint64_t seed = 0;
    Output out{"", "json"};

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--out", out.path, "output file (default stdout)");
        cmd->add_option("--format", out.format, "json|dot|text")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        cmd->add_option("--seed", seed, "seed for randomized generators");
    };

    auto* chrom = app.add_subcommand("chromatic", "exact chromatic number of a restriction");
    chrom->add_option("--graph", graph_arg, "g0|g1|e0|<boxes.json>");
    chrom->add_option("--depth", depth, "restriction depth")->check(CLI::Range(0, 24));
    chrom->add_option("--budget", budget, "search node budget");
    add_io(chrom);

    auto* cons = app.add_subcommand("construct", "independent-tree | clique-tree | four-cycle");
    cons->add_option("kind", kind, "construction kind")->required();
    cons->add_option("--graph", graph_arg, "box graph JSON file")->required();
    cons->add_option("--tree", tree_path, "BlockTree JSON file (default: full tree)");
    cons->add_option("--depth", depth, "output presentation depth");
    cons->add_option("--budget", budget, "search budget");
    add_io(cons);

    auto* fat = app.add_subcommand("fat", "check | build | ladder");
    fat->add_option("kind", kind, "fat operation")->required();
    fat->add_option("--tree", tree_path, "BlockTree JSON file (default: full tree)");
    fat->add_option("--clopen", clopen_path, "ClopenSet JSON file");
    fat->add_option("--split-depth", split_depth, "fatness check split depth");
    fat->add_option("--probe", probe, "witness probe depth");
    fat->add_option("--levels", levels, "fat levels / ladder levels");
    fat->add_option("--budget", budget, "search budget");
    add_io(fat);

    CLI11_PARSE(app, argc, argv);

    try {
        if (chrom->parsed()) return cmd_chromatic(graph_arg, depth, budget, out);
        if (cons->parsed())
            return cmd_construct(kind, graph_arg, tree_path, depth,
                                 static_cast<std::size_t>(std::min<std::uint64_t>(budget, 6)),
                                 out);
        if (fat->parsed())
            return cmd_fat(kind, tree_path, clopen_path, split_depth, probe, levels, out);
    } catch (const tf::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what();
        if (e.upper) std::cerr << " (bounds " << e.lower << ".." << e.upper << ")";
        std::cerr << "\n";
        return kExitBudget;
    } catch (const tf::RefuterFailure& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const tf::DensityFailure& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const tf::FatnessMissing& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const tf::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tf::PreconditionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
