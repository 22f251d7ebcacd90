#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidfaces/arrangement.hpp"
#include "braidfaces/face_map.hpp"
#include "braidfaces/lattice.hpp"
#include "braidfaces/marked_trees.hpp"
#include "braidfaces/rational.hpp"
#include "braidfaces/trees.hpp"

namespace braidfaces {

// {"n": int, "triples": [[i,j,s], ...]}; the loader normalizes and validates.
nlohmann::json arrangement_to_json(const Arrangement& A);
Arrangement arrangement_from_json(const nlohmann::json& j);

// A node is [label, [c_0, ..., c_m]], a leaf is null; the empty tree is null.
nlohmann::json tree_to_json(const Tree& T);
Tree tree_from_json(const nlohmann::json& j);

// {"tree": <tree>, "marks": [[j,s], ...]}
nlohmann::json mtree_to_json(const MTree& t);
MTree mtree_from_json(const nlohmann::json& j);

// {"blocks": [[...], ...], "delta": [d_1, ..., d_n]}
nlohmann::json flat_to_json(const Flat& L);
Flat flat_from_json(const nlohmann::json& j);

// {"signs": [[i,j,s,sigma], ...], "dim": d, "witness": ["p/q", ...], "tree": <mtree>}
nlohmann::json face_to_json(const Arrangement& A, const SignVector& sv,
                            const std::optional<std::vector<Rat>>& witness,
                            const MTree* tree = nullptr);

std::string mtree_to_text(const MTree& t);

}  // namespace braidfaces
