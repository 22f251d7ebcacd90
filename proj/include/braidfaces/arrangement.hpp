#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace braidfaces {

// Canonical label of the hyperplane {x_i - x_j = s}: either s > 0, or s = 0 and i > j.
// Both orientations of a hyperplane map to the same triple.
struct Triple {
    int i = 0;
    int j = 0;
    int s = 0;
    auto operator<=>(const Triple&) const = default;
};

Triple canonical_triple(int i, int j, long s);

// Up-closed set of ordered pairs on [n]: (i,j) in I, i' <= i, j' >= j, i' != j'  =>  (i',j') in I.
struct Ideal {
    int n = 0;
    std::set<std::pair<int, int>> pairs;

    bool contains(int i, int j) const { return pairs.count({i, j}) != 0; }
    bool is_up_closed() const;

    static Ideal empty(int n) { return Ideal{n, {}}; }
    static Ideal all_pairs(int n);       // R_n
    static Ideal increasing_pairs(int n);  // R_n^+
};

// A braid-type arrangement: hyperplanes {x_i - x_j = s} stored as canonical triples,
// sorted and deduplicated. The offset bound m is derived from the triple set.
class Arrangement {
public:
    Arrangement() = default;
    Arrangement(int n, std::vector<Triple> triples);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }

    bool contains(const Triple& t) const;
    // Accepts any orientation of {x_i - x_j = s}.
    bool contains_hyperplane(int i, int j, long s) const;
    // Index into triples() of the canonical form of {x_i - x_j = s}; -1 if absent.
    int index_of(int i, int j, long s) const;

    bool operator==(const Arrangement& other) const {
        return n_ == other.n_ && triples_ == other.triples_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Triple> triples_;
};

// Named families.
Arrangement braid(int n);
Arrangement catalan(int m, int n);       // A_m^n
Arrangement shi(int m, int n);           // A_{[-m+1;m]}^n
Arrangement semiorder(int m, int n);     // A_{[-m;m] \ {0}}^n
Arrangement linial(int n);               // A_{{1}}^n
Arrangement from_set(const std::set<int>& S, int n);           // A_S^n
Arrangement ideal_arrangement(int m, const Ideal& I, int n);   // B_{m,I}^n
Arrangement multi_catalan(const std::vector<int>& mvec);       // A_{\mathbf m}

bool is_transitive(const Arrangement& A);
bool is_strongly_transitive(const Arrangement& A);

// Condition (iii) on sets of integers: for s,t outside S,
// st >= 0 implies s+t outside S, and st <= 0 implies s-t and t-s outside S.
// Equivalent to strong transitivity of A_S^n for every n >= 3.
bool set_condition(const std::set<int>& S);

// pi[i-1] is the image of i; hyperplane {x_i - x_j = s} maps to {x_pi(i) - x_pi(j) = s}.
Arrangement permute(const Arrangement& A, const std::vector<int>& pi);

// A maximal chain of ideals from the empty set to R_n, adding one pair per step,
// passing through R_n^+ at position C(n,2). Pairs are added by increasing i-j,
// ties by increasing i, which keeps every prefix up-closed.
std::vector<Ideal> ideal_chain(int n);

}  // namespace braidfaces
