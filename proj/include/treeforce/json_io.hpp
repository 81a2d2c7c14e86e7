#pragma once

#include <string>

#include <json.hpp>

#include "treeforce/constructions.hpp"
#include "treeforce/fat.hpp"
#include "treeforce/finite_graph.hpp"
#include "treeforce/fusion.hpp"

namespace tf::io {

using Json = nlohmann::ordered_json;

Json word_json(const Word& w);
Word word_from(const Json& j);

Json point_json(const Point& p);
Point point_from(const Json& j);

Json clopen_json(const ClopenSet& a);
ClopenSet clopen_from(const Json& j);

Json clopen_graph_json(const ClopenGraph& g);
ClopenGraph clopen_graph_from(const Json& j);

Json graph_spec_json(const GraphSpec& g);
GraphSpec graph_spec_from(const Json& j);

Json word_map_json(const WordMap& m);
WordMap word_map_from(const Json& j);

Json block_tree_json(const BlockTree& t);
BlockTree block_tree_from(const Json& j);

Json finite_tree_json(const FiniteTree& t);
FiniteTree finite_tree_from(const Json& j);

Json finite_graph_json(const FiniteGraph& g);

Json ladder_json(const Ladder& l);
Json fatness_report_json(const FatnessReport& r);
Json slalom_json(const Slalom& s);
Json agreement_json(const AgreementReport& r);
Json dichotomy_json(const DichotomyOutcome& o);

Json load_file(const std::string& path);
void save_file(const std::string& path, const Json& j);

}  // namespace tf::io
