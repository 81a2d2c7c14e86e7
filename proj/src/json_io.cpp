#include "treeforce/json_io.hpp"

#include <fstream>

namespace tf::io {

Json word_json(const Word& w) { return w.str(); }

Word word_from(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a binary word string");
    return Word::parse(j.get<std::string>());
}

Json point_json(const Point& p) {
    return Json{{"prefix", p.prefix().str()}, {"period", p.period().str()}};
}

Point point_from(const Json& j) {
    return Point(word_from(j.at("prefix")), word_from(j.at("period")));
}

Json clopen_json(const ClopenSet& a) {
    Json words = Json::array();
    for (const auto& w : a.words()) words.push_back(w.str());
    return Json{{"depth", a.depth()}, {"words", words}};
}

ClopenSet clopen_from(const Json& j) {
    std::vector<Word> words;
    for (const auto& w : j.at("words")) words.push_back(word_from(w));
    return ClopenSet(j.at("depth").get<std::size_t>(), std::move(words));
}

Json clopen_graph_json(const ClopenGraph& g) {
    Json boxes = Json::array();
    for (const auto& [u, v] : g.boxes()) boxes.push_back(Json::array({u.str(), v.str()}));
    return Json{{"kind", "boxes"}, {"depth", g.depth()}, {"boxes", boxes}};
}

ClopenGraph clopen_graph_from(const Json& j) {
    std::vector<std::pair<Word, Word>> boxes;
    for (const auto& b : j.at("boxes"))
        boxes.emplace_back(word_from(b.at(0)), word_from(b.at(1)));
    return ClopenGraph(j.at("depth").get<std::size_t>(), std::move(boxes));
}

Json word_map_json(const WordMap& m) {
    Json j;
    switch (m.kind()) {
        case WordMap::Kind::Identity: j["kind"] = "identity"; break;
        case WordMap::Kind::XorMask: j["kind"] = "xor"; break;
        case WordMap::Kind::Prepend: j["kind"] = "prepend"; break;
        case WordMap::Kind::Constant: j["kind"] = "constant"; break;
        case WordMap::Kind::Table: j["kind"] = "table"; break;
    }
    j["word"] = m.parameter().str();
    j["injective"] = m.injective();
    return j;
}

WordMap word_map_from(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    Word w = j.contains("word") ? word_from(j.at("word")) : Word();
    if (kind == "identity") return WordMap::identity();
    if (kind == "xor") return WordMap::xor_mask(w);
    if (kind == "prepend") return WordMap::prepend(w);
    if (kind == "constant") return WordMap::constant(w);
    throw ParseError("word map kind '" + kind + "' not supported in files");
}

Json graph_spec_json(const GraphSpec& g) {
    switch (g.kind()) {
        case GraphKind::G0: return Json{{"kind", "g0"}};
        case GraphKind::G1: return Json{{"kind", "g1"}};
        case GraphKind::E0: return Json{{"kind", "e0"}};
        case GraphKind::Boxes: return clopen_graph_json(g.box_graph());
        case GraphKind::Pullback:
            return Json{{"kind", "pullback"},
                        {"map", word_map_json(g.map())},
                        {"inner", graph_spec_json(g.inner())}};
    }
    throw ParseError("graph_spec_json: bad kind");
}

GraphSpec graph_spec_from(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "g0") return GraphSpec::g0();
    if (kind == "g1") return GraphSpec::g1();
    if (kind == "e0") return GraphSpec::e0();
    if (kind == "boxes") return GraphSpec::boxes(clopen_graph_from(j));
    if (kind == "pullback")
        return pullback(word_map_from(j.at("map")), graph_spec_from(j.at("inner")));
    throw ParseError("unknown graph kind '" + kind + "'");
}

namespace {
Json block_json(const Block& b) { return Json::array({b.zero.str(), b.one.str()}); }
Block block_from(const Json& j) { return Block(word_from(j.at(0)), word_from(j.at(1))); }
}  // namespace

Json block_tree_json(const BlockTree& t) {
    Json blocks = Json::array();
    for (const auto& b : t.explicit_blocks()) blocks.push_back(block_json(b));
    Json tail;
    if (t.tail().kind == TailRule::Kind::Free) {
        tail = Json{{"kind", "free"}};
    } else {
        Json cyc = Json::array();
        for (const auto& b : t.tail().blocks) cyc.push_back(block_json(b));
        tail = Json{{"kind", "cycle"}, {"blocks", cyc}};
    }
    return Json{{"stem", t.stem().str()}, {"blocks", blocks}, {"tail", tail}};
}

BlockTree block_tree_from(const Json& j) {
    std::vector<Block> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(block_from(b));
    TailRule tail = TailRule::free();
    if (j.contains("tail")) {
        const auto& jt = j.at("tail");
        if (jt.at("kind").get<std::string>() == "cycle") {
            std::vector<Block> cyc;
            for (const auto& b : jt.at("blocks")) cyc.push_back(block_from(b));
            tail = TailRule::cycle(std::move(cyc));
        }
    }
    return BlockTree(word_from(j.at("stem")), std::move(blocks), std::move(tail));
}

Json finite_tree_json(const FiniteTree& t) {
    Json nodes = Json::array();
    for (const auto& w : t.nodes()) nodes.push_back(w.str());
    return Json{{"nodes", nodes}};
}

FiniteTree finite_tree_from(const Json& j) {
    std::vector<Word> nodes;
    for (const auto& w : j.at("nodes")) nodes.push_back(word_from(w));
    return FiniteTree(std::move(nodes));
}

Json finite_graph_json(const FiniteGraph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back(Json::array({g.vertex_word(a).str(), g.vertex_word(b).str()}));
    return Json{{"depth", g.depth()},
                {"vertices", g.vertex_count()},
                {"edges", edges}};
}

Json ladder_json(const Ladder& l) {
    Json levels = Json::array();
    for (const auto& level : l.levels) {
        Json lv = Json::array();
        for (const auto& w : level) lv.push_back(w.str());
        levels.push_back(lv);
    }
    Json heights = Json::array();
    for (auto h : l.heights) heights.push_back(h);
    return Json{{"levels", levels}, {"heights", heights}};
}

Json fatness_report_json(const FatnessReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json je{{"node", e.node.str()}, {"shift", e.shift.str()}};
        switch (e.kind) {
            case FatEntry::Kind::Witness:
                je["kind"] = "witness";
                je["coordinate"] = e.coordinate;
                je["witness"] = e.witness.str();
                break;
            case FatEntry::Kind::TailWitness:
                je["kind"] = "tail-witness";
                je["source"] = e.witness.str();
                break;
            case FatEntry::Kind::Exhausted:
                je["kind"] = "exhausted";
                je["probe"] = r.probe_depth;
                break;
        }
        entries.push_back(je);
    }
    return Json{{"split_depth", r.split_depth},
                {"probe_depth", r.probe_depth},
                {"fat", r.all_fat()},
                {"entries", entries}};
}

Json slalom_json(const Slalom& s) {
    Json width = Json::array(), values = Json::array();
    for (auto w : s.width) width.push_back(w);
    for (const auto& v : s.values) {
        Json jv = Json::array();
        for (auto x : v) jv.push_back(x);
        values.push_back(jv);
    }
    return Json{{"width", width}, {"values", values}};
}

Json agreement_json(const AgreementReport& r) {
    Json j{{"verdict", r.agrees ? "agrees" : "refuted"}, {"pairs_checked", r.pairs_checked}};
    if (!r.agrees) {
        j["witness"] = Json{{"z0", point_json(r.z0)},
                            {"z1", point_json(r.z1)},
                            {"prefix0", r.prefix0.str()},
                            {"prefix1", r.prefix1.str()}};
    }
    return j;
}

Json dichotomy_json(const DichotomyOutcome& o) {
    Json j;
    switch (o.kind) {
        case DichotomyOutcome::Kind::IndependentTree:
            j["outcome"] = "independent-tree";
            j["tree"] = block_tree_json(o.tree);
            j["below"] = o.witness_sigma.str();
            break;
        case DichotomyOutcome::Kind::CliqueEvidence:
            j["outcome"] = "clique-evidence";
            j["tree"] = finite_tree_json(o.clique.tree);
            j["split_levels"] = o.clique.split_levels;
            break;
        case DichotomyOutcome::Kind::Undecided: j["outcome"] = "undecided"; break;
    }
    j["trace"] = o.trace;
    return j;
}

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void save_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace tf::io
