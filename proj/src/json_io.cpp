#include "braidfaces/json_io.hpp"

#include <stdexcept>

namespace braidfaces {

using nlohmann::json;

json arrangement_to_json(const Arrangement& A) {
    json trs = json::array();
    for (const Triple& t : A.triples()) trs.push_back({t.i, t.j, t.s});
    return json{{"n", A.n()}, {"triples", trs}};
}

Arrangement arrangement_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Triple> ts;
    for (const auto& row : j.at("triples")) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("triple must be [i, j, s]");
        ts.push_back(canonical_triple(row[0].get<int>(), row[1].get<int>(), row[2].get<long>()));
    }
    return Arrangement(n, std::move(ts));
}

namespace {

json tree_node_json(const Tree& T, int v) {
    json kids = json::array();
    for (int s = 0; s <= T.m(); ++s) {
        int c = T.child(v, s);
        kids.push_back(c == 0 ? json(nullptr) : tree_node_json(T, c));
    }
    return json::array({v, kids});
}

void tree_node_parse(const json& j, int m, std::vector<std::pair<int, std::vector<int>>>& nodes,
                     int& label_out) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_array())
        throw std::invalid_argument("tree node must be [label, [children]]");
    int label = j[0].get<int>();
    const json& kids = j[1];
    if (static_cast<int>(kids.size()) != m + 1)
        throw std::invalid_argument("node child count disagrees with the arity");
    std::vector<int> row(m + 1, 0);
    nodes.push_back({label, row});
    std::size_t slot_of_node = nodes.size() - 1;
    for (int s = 0; s <= m; ++s) {
        if (kids[s].is_null()) continue;
        int child_label = 0;
        tree_node_parse(kids[s], m, nodes, child_label);
        nodes[slot_of_node].second[s] = child_label;
    }
    label_out = label;
}

}  // namespace

json tree_to_json(const Tree& T) {
    if (T.n() == 0) return nullptr;
    return tree_node_json(T, T.root());
}

Tree tree_from_json(const json& j) {
    if (j.is_null()) return Tree();
    if (!j.is_array() || j.size() != 2 || !j[1].is_array())
        throw std::invalid_argument("tree json must be [label, [children]] or null");
    int m = static_cast<int>(j[1].size()) - 1;
    std::vector<std::pair<int, std::vector<int>>> nodes;
    int root = 0;
    tree_node_parse(j, m, nodes, root);
    int n = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> kids(n);
    for (auto& [label, row] : nodes) {
        if (label < 1 || label > n) throw std::invalid_argument("node label out of range");
        kids[label - 1] = row;
    }
    return Tree(m, n, root, std::move(kids));
}

json mtree_to_json(const MTree& t) {
    json marks = json::array();
    for (auto [j, s] : t.marks) marks.push_back({j, s});
    return json{{"tree", tree_to_json(t.tree)}, {"marks", marks}};
}

MTree mtree_from_json(const json& j) {
    MTree t;
    t.tree = tree_from_json(j.at("tree"));
    for (const auto& row : j.at("marks")) {
        if (!row.is_array() || row.size() != 2)
            throw std::invalid_argument("mark must be [parent, slot]");
        int parent = row[0].get<int>(), slot = row[1].get<int>();
        if (parent < 1 || parent > t.tree.n() || slot < 0 || slot > t.tree.m())
            throw std::invalid_argument("mark out of range");
        int child = t.tree.child(parent, slot);
        if (child == 0) throw std::invalid_argument("mark must sit on a cadet edge");
        for (int s2 = slot + 1; s2 <= t.tree.m(); ++s2)
            if (t.tree.child(parent, s2) != 0)
                throw std::invalid_argument("mark must sit on a cadet edge");
        if (slot == 0 && parent > child)
            throw std::invalid_argument("slot-0 mark needs increasing labels");
        t.marks.push_back({parent, slot});
    }
    std::sort(t.marks.begin(), t.marks.end());
    t.marks.erase(std::unique(t.marks.begin(), t.marks.end()), t.marks.end());
    return t;
}

json flat_to_json(const Flat& L) {
    json blocks = json::array();
    for (const auto& b : L.blocks) blocks.push_back(b);
    json delta = json::array();
    for (std::size_t i = 1; i < L.delta.size(); ++i) delta.push_back(L.delta[i]);
    return json{{"blocks", blocks}, {"delta", delta}};
}

Flat flat_from_json(const json& j) {
    Flat L;
    int n = static_cast<int>(j.at("delta").size());
    L.delta.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) L.delta[i] = j.at("delta")[i - 1].get<long>();
    for (const auto& b : j.at("blocks")) {
        std::vector<int> blk;
        for (const auto& v : b) blk.push_back(v.get<int>());
        std::sort(blk.begin(), blk.end(), [&](int a, int c) {
            return std::pair(L.delta[a], a) < std::pair(L.delta[c], c);
        });
        L.blocks.push_back(std::move(blk));
    }
    std::sort(L.blocks.begin(), L.blocks.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    return L;
}

json face_to_json(const Arrangement& A, const SignVector& sv,
                  const std::optional<std::vector<Rat>>& witness, const MTree* tree) {
    json signs = json::array();
    for (std::size_t k = 0; k < A.size(); ++k) {
        const Triple& t = A.triples()[k];
        signs.push_back({t.i, t.j, t.s, static_cast<int>(sv.signs[k])});
    }
    json out{{"signs", signs}, {"dim", face_dim(A, sv)}};
    if (witness) {
        json w = json::array();
        for (const Rat& q : *witness) w.push_back(rat_string(q));
        out["witness"] = w;
    }
    if (tree) out["tree"] = mtree_to_json(*tree);
    return out;
}

std::string mtree_to_text(const MTree& t) {
    std::string out = t.tree.to_text();
    out += " marks:";
    if (t.marks.empty()) {
        out += "{}";
    } else {
        out += "{";
        for (std::size_t k = 0; k < t.marks.size(); ++k) {
            if (k) out += ",";
            out += "(" + std::to_string(t.marks[k].first) + "," +
                   std::to_string(t.marks[k].second) + ")";
        }
        out += "}";
    }
    return out;
}

}  // namespace braidfaces
