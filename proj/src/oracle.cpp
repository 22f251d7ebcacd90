#include "braidfaces/oracle.hpp"

#include <algorithm>
#include <climits>
#include <thread>

namespace braidfaces {

GridSpec GridSpec::for_arrangement(const Arrangement& A) {
    GridSpec g;
    g.n = A.n();
    g.a_max = static_cast<long>(A.n() - 1) * std::max(A.m(), 1);
    g.b_count = A.n();
    return g;
}

long long GridSpec::point_count() const {
    long long v = values_per_coordinate();
    long long total = 1;
    for (int k = 0; k < n; ++k) {
        if (total > LLONG_MAX / v) return LLONG_MAX;
        total *= v;
    }
    return total;
}

namespace {

void scan_range(const Arrangement& A, const std::vector<long>& coord_vals, long long lo,
                long long hi, std::set<SignVector>& out) {
    const int n = A.n();
    const long long V = static_cast<long long>(coord_vals.size());
    const auto& triples = A.triples();
    std::vector<long> x(n);
    SignVector sv;
    sv.signs.resize(triples.size());
    for (long long p = lo; p < hi; ++p) {
        long long q = p;
        for (int c = n - 1; c >= 0; --c) {
            x[c] = coord_vals[q % V];
            q /= V;
        }
        for (std::size_t k = 0; k < triples.size(); ++k) {
            // coordinates are scaled by n+1, so the offset is too
            long v = x[triples[k].i - 1] - x[triples[k].j - 1] -
                     static_cast<long>(triples[k].s) * (n + 1);
            sv.signs[k] = v < 0 ? -1 : (v > 0 ? 1 : 0);
        }
        out.insert(sv);
    }
}

}  // namespace

std::set<SignVector> enumerate_faces_grid(const Arrangement& A, long long budget_cap, int jobs) {
    const int n = A.n();
    if (n == 0) return {SignVector{}};
    GridSpec g = GridSpec::for_arrangement(A);
    long long total = g.point_count();
    if (total > budget_cap) throw BudgetExceeded(total);

    std::vector<long> coord_vals;
    coord_vals.reserve(g.values_per_coordinate());
    for (long a = 0; a <= g.a_max; ++a)
        for (int b = 0; b < g.b_count; ++b) coord_vals.push_back(a * (n + 1) + b);

    jobs = std::max(1, jobs);
    if (jobs == 1 || total < 4096) {
        std::set<SignVector> out;
        scan_range(A, coord_vals, 0, total, out);
        return out;
    }
    std::vector<std::set<SignVector>> partial(jobs);
    std::vector<std::thread> workers;
    long long chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        long long lo = w * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi, w] { scan_range(A, coord_vals, lo, hi, partial[w]); });
    }
    for (auto& t : workers) t.join();
    std::set<SignVector> out;
    for (auto& p : partial) out.merge(p);
    return out;
}

std::vector<long long> face_counts(const Arrangement& A, long long budget_cap, int jobs) {
    std::vector<long long> c(A.n(), 0);
    if (A.n() == 0) return c;
    for (const SignVector& sv : enumerate_faces_grid(A, budget_cap, jobs))
        ++c[face_dim(A, sv) - 1];
    return c;
}

long long region_count(const Arrangement& A, long long budget_cap, int jobs) {
    long long r = 0;
    for (const SignVector& sv : enumerate_faces_grid(A, budget_cap, jobs)) {
        bool full = true;
        for (auto s : sv.signs)
            if (s == 0) {
                full = false;
                break;
            }
        if (full) ++r;
    }
    return r;
}

}  // namespace braidfaces
