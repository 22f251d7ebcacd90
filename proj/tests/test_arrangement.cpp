#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "braidfaces/arrangement.hpp"

using namespace braidfaces;

TEST_SUITE_BEGIN("arrangement");

TEST_CASE("canonical triples") {
    CHECK(canonical_triple(1, 2, -1) == Triple{2, 1, 1});
    CHECK(canonical_triple(1, 2, 0) == Triple{2, 1, 0});
    CHECK(canonical_triple(2, 1, 0) == Triple{2, 1, 0});
    CHECK(canonical_triple(1, 2, 3) == Triple{1, 2, 3});
    CHECK_THROWS(canonical_triple(1, 1, 0));
}

TEST_CASE("catalan(1,2) triple set") {
    Arrangement A = catalan(1, 2);
    std::vector<Triple> expect = {{1, 2, 1}, {2, 1, 0}, {2, 1, 1}};
    std::sort(expect.begin(), expect.end());
    CHECK(A.triples() == expect);
    CHECK(A.m() == 1);
}

TEST_CASE("shi(1,3) has the six expected triples") {
    Arrangement A = shi(1, 3);
    CHECK(A.size() == 6);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            CHECK(A.contains(Triple{j, i, 0}));
            CHECK(A.contains(Triple{i, j, 1}));
        }
}

TEST_CASE("ideal arrangement of the two-pair ideal in dimension 3") {
    Ideal I{3, {{1, 2}, {1, 3}}};
    CHECK(I.is_up_closed());
    Arrangement A = ideal_arrangement(1, I, 3);
    std::vector<Triple> expect = {{2, 1, 0}, {3, 1, 0}, {3, 2, 0}, {1, 2, 1}, {1, 3, 1}};
    std::sort(expect.begin(), expect.end());
    CHECK(A.triples() == expect);

    Ideal bad{3, {{2, 3}}};  // (1,3) missing
    CHECK_FALSE(bad.is_up_closed());
    CHECK_THROWS(ideal_arrangement(1, bad, 3));
}

TEST_CASE("multi catalan triples") {
    Arrangement A = multi_catalan({1, 2});
    std::vector<Triple> expect = {{2, 1, 0}, {1, 2, 1}, {1, 2, 2}, {2, 1, 1}};
    std::sort(expect.begin(), expect.end());
    CHECK(A.triples() == expect);
    CHECK_THROWS(multi_catalan({1, -1}));
}

TEST_CASE("transitivity of the named families") {
    CHECK(is_transitive(linial(3)));
    CHECK(is_transitive(catalan(1, 3)));
    CHECK_FALSE(is_transitive(from_set({2}, 3)));

    CHECK_FALSE(is_strongly_transitive(linial(3)));
    CHECK(is_strongly_transitive(semiorder(1, 3)));
    CHECK(is_strongly_transitive(braid(3)));
    CHECK(is_strongly_transitive(catalan(2, 3)));
    CHECK(is_strongly_transitive(shi(2, 3)));
}

TEST_CASE("set condition") {
    CHECK(set_condition({-1, 0, 1}));
    CHECK_FALSE(set_condition({1}));
    CHECK(set_condition({}));
    CHECK(set_condition({0}));
    CHECK(set_condition({-1, 1}));
}

TEST_CASE("set condition matches strong transitivity over the small window") {
    std::vector<int> window = {-3, -2, -1, 0, 1, 2, 3};
    for (int mask = 0; mask < (1 << 7); ++mask) {
        std::set<int> S;
        for (int b = 0; b < 7; ++b)
            if (mask & (1 << b)) S.insert(window[b]);
        bool cond = set_condition(S);
        CHECK(cond == is_strongly_transitive(from_set(S, 3)));
        CHECK(cond == is_strongly_transitive(from_set(S, 4)));
    }
}

TEST_CASE("strong transitivity implies transitivity") {
    std::vector<Arrangement> all = {braid(3),     catalan(1, 3), shi(1, 3),
                                    semiorder(1, 3), linial(3),  from_set({0, 2}, 3)};
    for (const auto& A : all)
        if (is_strongly_transitive(A)) CHECK(is_transitive(A));
}

TEST_CASE("strong transitivity equals transitivity of every permutation image") {
    std::vector<Arrangement> all = {linial(3), shi(1, 3), from_set({1, 2}, 3),
                                    from_set({0, 2}, 3), semiorder(2, 3)};
    std::vector<int> pi = {1, 2, 3};
    for (const auto& A : all) {
        bool every = true;
        std::vector<int> p = pi;
        do {
            if (!is_transitive(permute(A, p))) every = false;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(every == is_strongly_transitive(A));
    }
}

TEST_CASE("permute behaves as a group action") {
    Arrangement A = shi(1, 2);
    Arrangement B = permute(A, {2, 1});
    std::vector<Triple> expect = {{2, 1, 0}, {2, 1, 1}};
    std::sort(expect.begin(), expect.end());
    CHECK(B.triples() == expect);

    Arrangement C = shi(1, 3);
    std::vector<int> rho = {2, 3, 1}, pi = {3, 1, 2};
    std::vector<int> comp(3);
    for (int i = 0; i < 3; ++i) comp[i] = pi[rho[i] - 1];
    CHECK(permute(permute(C, rho), pi) == permute(C, comp));

    std::vector<int> inv(3);
    for (int i = 0; i < 3; ++i) inv[rho[i] - 1] = i + 1;
    CHECK(permute(permute(C, rho), inv) == C);

    CHECK(permute(braid(3), {3, 1, 2}) == braid(3));
}

TEST_CASE("ideal chain") {
    auto chain2 = ideal_chain(2);
    REQUIRE(chain2.size() == 3);
    CHECK(chain2[0].pairs.empty());
    CHECK(chain2[1].pairs == std::set<std::pair<int, int>>{{1, 2}});
    CHECK(chain2[2].pairs == Ideal::all_pairs(2).pairs);

    auto chain3 = ideal_chain(3);
    REQUIRE(chain3.size() == 7);
    for (std::size_t k = 0; k < chain3.size(); ++k) {
        CHECK(chain3[k].pairs.size() == k);
        CHECK(chain3[k].is_up_closed());
    }
    CHECK(chain3[3].pairs == Ideal::increasing_pairs(3).pairs);
}

TEST_CASE("ideal arrangements are strongly transitive") {
    for (const Ideal& I : ideal_chain(3))
        for (int m : {1, 2}) CHECK(is_strongly_transitive(ideal_arrangement(m, I, 3)));
}

TEST_CASE("the ideal chain interpolates between the named families") {
    for (int m : {1, 2})
        for (int n : {2, 3}) {
            auto chain = ideal_chain(n);
            CHECK(ideal_arrangement(m, chain.front(), n) == catalan(m - 1, n));
            CHECK(ideal_arrangement(m, chain[n * (n - 1) / 2], n) == shi(m, n));
            CHECK(ideal_arrangement(m, chain.back(), n) == catalan(m, n));
            for (std::size_t k = 1; k < chain.size(); ++k)
                CHECK(ideal_arrangement(m, chain[k], n).size() ==
                      ideal_arrangement(m, chain[k - 1], n).size() + 1);
        }
}

TEST_SUITE_END();
