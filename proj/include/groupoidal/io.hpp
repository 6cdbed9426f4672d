#pragma once

#include <string>

#include <json.hpp>

#include "groupoidal/exact_matrix.hpp"
#include "groupoidal/relation.hpp"
#include "groupoidal/spectrum.hpp"
#include "groupoidal/tower.hpp"

namespace groupoidal::io {

using nlohmann::json;

// Pair-set / relation schema: {"n": int, "pairs": [[i,j], ...]}
json pairset_to_json(const BitRel& rel);
BitRel pairset_from_json(const json& j);
json relation_to_json(const SupportRelation& P);
// Closes the parsed pair-set; user inputs are canonicalized into supports.
SupportRelation relation_from_json(const json& j, int max_n = 0);

// Ideal schema: {"parent": <relation>, "pairs": [[i,j], ...]}
json ideal_to_json(const IdealSet& F);
IdealSet ideal_from_json(const json& j, int max_n = 0);

// Tower schema: {"base": int, "levels": [{"kind": "refinement"|"standard", "q": int}, ...]}
json tower_to_json(const Tower& t);
Tower tower_from_json(const json& j);

// Matrix schema: {"n": int, "entries": [[[num,den,num_im,den_im], ...], ...]}
json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

// GSet / word-pair schema: {"depth": k, "pairs": [[[u...],[v...]], ...]}
json gset_to_json(const GSet& g);
GSet gset_from_json(const json& j, const WordSpace& space);
json wordrel_to_json(const WordSpace& space, const BitRel& pairs);
BitRel wordrel_from_json(const json& j, const WordSpace& space);

// Dyadic function schema: {"terms": [{"gset": ..., "num": int, "log2_den": int}, ...]}
json dyadic_function_to_json(const DyadicFunction& f);
DyadicFunction dyadic_function_from_json(const json& j, const WordSpace& space);

json projections_to_json(const std::vector<ProjectionSet>& ps);

// Parses with Parse errors instead of nlohmann exceptions.
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

// DOT export: one node per index, one edge per off-diagonal pair; ideal
// pairs highlighted (edges red, diagonal members filled).
std::string dot_export(const SupportRelation& P, const BitRel* ideal = nullptr);

// Star-pattern rendering: '*' where a pair is present, '0' elsewhere.
std::string star_pattern(const BitRel& rel);
std::string star_pattern(const ExactMatrix& m);

// CSV rows (pi(u), pi(v)) per pair of P, row-major, no header.
std::string csv_pi_pairs(const OrderRelation& P, int r);

}  // namespace groupoidal::io
