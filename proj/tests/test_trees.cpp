#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "braidfaces/trees.hpp"

using namespace braidfaces;

TEST_SUITE_BEGIN("trees");

TEST_CASE("enumeration counts match the closed formula") {
    CHECK(enumerate_trees(1, 2).size() == 4);
    CHECK(enumerate_trees(1, 3).size() == 30);
    CHECK(enumerate_trees(0, 3).size() == 6);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 4; ++n) {
            auto trees = enumerate_trees(m, n);
            CHECK(Int(static_cast<long>(trees.size())) == tree_count_formula(m, n));
            std::set<std::string> texts;
            for (const Tree& t : trees) texts.insert(t.to_text());
            CHECK(texts.size() == trees.size());  // each tree exactly once
        }
}

TEST_CASE("drift") {
    // (1,3)-tree: 1 at the root, 2 = 1-child(1), 3 = 0-child(2)
    Tree T(1, 3, 1, {{0, 2}, {3, 0}, {0, 0}});
    CHECK(T.drift(T.node_vertex(1)) == 0);
    CHECK(T.drift(T.node_vertex(2)) == 1);
    CHECK(T.drift(T.node_vertex(3)) == 1);
    CHECK(T.drift(T.child_vertex(3, 1)) == 2);
    CHECK(T.path_of(T.node_vertex(3)) == std::vector<int>{1, 0});

    Tree T2(2, 2, 1, {{0, 0, 2}, {0, 0, 0}});
    CHECK(T2.drift(T2.child_vertex(2, 2)) == 4);
}

TEST_CASE("vertex order basics") {
    Tree T(1, 3, 1, {{2, 3}, {0, 0}, {0, 0}});  // 2 = 0-child(1), 3 = 1-child(1)
    Vertex a = T.node_vertex(1), b = T.node_vertex(2), c = T.node_vertex(3);
    CHECK(T.cmp(a, a) == 0);
    CHECK(T.cmp(a, c) == -1);  // drift 0 < 1
    CHECK(T.cmp(c, a) == 1);
    CHECK(T.cmp(a, b) == -1);  // equal drift, ancestor first
    // equal drift, first divergence: the larger slot comes first
    Vertex v = T.child_vertex(3, 0);  // path (1,0), drift 1
    CHECK(T.cmp(v, T.child_vertex(2, 1)) == -1);  // (1,0) before (0,1)
    CHECK(T.cmp(c, T.child_vertex(2, 1)) == -1);  // (1) before (0,1)
}

TEST_CASE("the order is total on all vertices") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}}) {
        for (const Tree& T : enumerate_trees(m, n)) {
            std::vector<Vertex> vs;
            for (int v = 1; v <= n; ++v) {
                vs.push_back(T.node_vertex(v));
                for (int s = 0; s <= m; ++s)
                    if (T.child(v, s) == 0) vs.push_back(T.child_vertex(v, s));
            }
            for (const Vertex& v : vs)
                for (const Vertex& w : vs) {
                    int c1 = T.cmp(v, w), c2 = T.cmp(w, v);
                    CHECK(c1 == -c2);
                    CHECK((c1 == 0) == (v == w));
                }
            // transitivity
            for (const Vertex& v : vs)
                for (const Vertex& w : vs)
                    for (const Vertex& z : vs)
                        if (T.cmp(v, w) < 0 && T.cmp(w, z) < 0) CHECK(T.cmp(v, z) < 0);
            // proper ancestors precede descendants at equal drift
            for (int v = 1; v <= n; ++v)
                for (int w = 1; w <= n; ++w) {
                    if (v == w) continue;
                    auto pv = T.path_of(T.node_vertex(v));
                    auto pw = T.path_of(T.node_vertex(w));
                    bool ancestor = pv.size() < pw.size() &&
                                    std::equal(pv.begin(), pv.end(), pw.begin());
                    if (ancestor && T.drift(T.node_vertex(v)) == T.drift(T.node_vertex(w)))
                        CHECK(T.cmp(T.node_vertex(v), T.node_vertex(w)) < 0);
                }
        }
    }
}

TEST_CASE("cadet edges") {
    // root 1 with node 2 in slot 0, slot 1 a leaf
    Tree A(1, 2, 1, {{2, 0}, {0, 0}});
    CHECK(A.cadet_edges() == std::vector<CadetEdge>{{1, 0, 2}});
    // root 1 with node 2 in slot 1
    Tree B(1, 2, 1, {{0, 2}, {0, 0}});
    CHECK(B.cadet_edges() == std::vector<CadetEdge>{{1, 1, 2}});
    // children in both slots: only the slot-1 child is the cadet
    Tree C(1, 3, 1, {{2, 3}, {0, 0}, {0, 0}});
    CHECK(C.cadet_edges() == std::vector<CadetEdge>{{1, 1, 3}});
}

TEST_CASE("each node has at most one cadet") {
    for (const Tree& T : enumerate_trees(2, 3)) {
        auto edges = T.cadet_edges();
        std::set<int> parents;
        for (const CadetEdge& e : edges) {
            CHECK(!parents.count(e.parent));
            parents.insert(e.parent);
        }
    }
}

TEST_CASE("structural equality and text form") {
    Tree A(1, 2, 1, {{2, 0}, {0, 0}});
    Tree B(1, 2, 1, {{2, 0}, {0, 0}});
    Tree C(1, 2, 1, {{0, 2}, {0, 0}});
    CHECK(A == B);
    CHECK_FALSE(A == C);
    CHECK(A.to_text() == "1(2(.,.),.)");
    CHECK(Tree().to_text() == ".");
}

TEST_CASE("invalid trees are rejected") {
    CHECK_THROWS(Tree(1, 2, 1, {{2, 2}, {0, 0}}));     // label used twice
    CHECK_THROWS(Tree(1, 2, 1, {{0, 0}, {0, 0}}));     // node 2 unreachable
    CHECK_THROWS(Tree(1, 2, 3, {{2, 0}, {0, 0}}));     // root out of range
    CHECK_THROWS(Tree(1, 2, 1, {{2}, {0, 0}}));        // wrong slot count
}

TEST_SUITE_END();
