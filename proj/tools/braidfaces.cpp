// Command-line front end: build arrangements, enumerate faces two ways,
// print series tables, render dimension-3 pictures.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidfaces/json_io.hpp"
#include "braidfaces/lattice.hpp"
#include "braidfaces/oracle.hpp"
#include "braidfaces/series.hpp"
#include "braidfaces/svg.hpp"

using namespace braidfaces;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// split on separators that are not nested in parentheses
std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_int_list(std::string s) {
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<int> out;
    for (const std::string& part : split_top_level(s, ',')) {
        if (part.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(part, &pos);
        if (pos != part.size()) throw UsageError("bad integer '" + part + "'");
        out.push_back(v);
    }
    return out;
}

struct ArrSpec {
    Arrangement A;
    int arity = 0;  // tree arity to use for the bijection
};

ArrSpec parse_arrangement_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("expected family:key=value,...");
    std::string family = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    if (family == "file") {
        std::ifstream in(rest);
        if (!in) throw UsageError("cannot open arrangement file " + rest);
        nlohmann::json j;
        in >> j;
        Arrangement A = arrangement_from_json(j);
        return {A, A.m()};
    }

    std::map<std::string, std::string> kv;
    for (const std::string& item : split_top_level(rest, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("expected key=value in '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    auto geti = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw UsageError("missing " + key + "= for family " + family);
        return std::stoi(it->second);
    };

    if (family == "braid") return {braid(geti("n")), 0};
    if (family == "catalan") {
        int m = geti("m");
        return {catalan(m, geti("n")), m};
    }
    if (family == "shi") {
        int m = geti("m");
        return {shi(m, geti("n")), m};
    }
    if (family == "semiorder") {
        int m = geti("m");
        return {semiorder(m, geti("n")), m};
    }
    if (family == "linial") return {linial(geti("n")), 1};
    if (family == "fromset") {
        auto it = kv.find("S");
        if (it == kv.end()) throw UsageError("fromset needs S=(s1,s2,...)");
        std::vector<int> vals = parse_int_list(it->second);
        std::set<int> S(vals.begin(), vals.end());
        Arrangement A = from_set(S, geti("n"));
        return {A, A.m()};
    }
    if (family == "multi") {
        auto it = kv.find("m");
        if (it == kv.end()) throw UsageError("multi needs m=(m1,...,mn)");
        std::vector<int> mvec = parse_int_list(it->second);
        int arity = 0;
        for (int v : mvec) arity = std::max(arity, v);
        return {multi_catalan(mvec), arity};
    }
    if (family == "ideal") {
        int n = geti("n"), m = geti("m");
        Ideal I{n, {}};
        auto it = kv.find("I");
        if (it != kv.end()) {
            for (const std::string& pair : split_top_level(it->second, ';')) {
                if (pair.empty()) continue;
                std::vector<int> p = parse_int_list(pair);
                if (p.size() != 2) throw UsageError("ideal pairs look like (i,j)");
                I.pairs.insert({p[0], p[1]});
            }
        }
        return {ideal_arrangement(m, I, n), m};
    }
    throw UsageError("unknown family '" + family + "'");
}

long long grid_budget(std::optional<long long> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("BRAIDFACES_BUDGET")) return std::atoll(env);
    return kDefaultGridBudget;
}

std::string sign_string(const SignVector& sv) {
    std::string out;
    for (auto s : sv.signs) out += (s < 0 ? '-' : (s > 0 ? '+' : '0'));
    return out;
}

std::string witness_string(const std::vector<Rat>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += rat_string(w[i]);
    }
    return out + ")";
}

struct FaceRow {
    SignVector sv;
    int dim = 0;
    std::vector<Rat> witness;
    std::optional<MTree> tree;
};

int run_faces(const std::string& spec, const std::string& format, bool oracle_only,
              bool skip_check, std::optional<long long> budget_flag, int jobs, int arity_flag,
              const std::string& out_path) {
    ArrSpec as = parse_arrangement_spec(spec);
    const Arrangement& A = as.A;
    long long budget = grid_budget(budget_flag);
    int arity = arity_flag >= 0 ? arity_flag : as.arity;

    std::vector<FaceRow> rows;
    bool mismatch = false;

    if (oracle_only) {
        for (const SignVector& sv : enumerate_faces_grid(A, budget, jobs)) {
            auto w = feasible_witness(sv, A);
            rows.push_back({sv, face_dim(A, sv), w.value(), std::nullopt});
        }
    } else {
        std::map<std::string, FaceRow> by_tree;
        std::set<SignVector> seen;
        for (const MTree& t : enumerate_admissible(A, arity)) {
            SignVector sv = face_sign_vector(A, t);
            if (!seen.insert(sv).second) mismatch = true;
            auto w = feasible_witness(sv, A);
            if (!w) {
                mismatch = true;
                continue;
            }
            by_tree[mtree_to_text(t)] = {sv, face_dim(A, sv), *w, t};
        }
        if (!skip_check && seen != enumerate_faces_grid(A, budget, jobs)) mismatch = true;
        for (auto& [key, row] : by_tree) rows.push_back(std::move(row));
    }

    std::ostringstream body;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const FaceRow& r : rows)
            arr.push_back(face_to_json(A, r.sv, r.witness, r.tree ? &*r.tree : nullptr));
        body << arr.dump(2) << "\n";
    } else if (format == "csv") {
        body << "signs,dim,witness,tree\n";
        for (const FaceRow& r : rows) {
            body << sign_string(r.sv) << "," << r.dim << ",\"" << witness_string(r.witness)
                 << "\",\"" << (r.tree ? mtree_to_text(*r.tree) : "") << "\"\n";
        }
    } else {
        body << "# " << spec << ": n=" << A.n() << " hyperplanes=" << A.size()
             << " faces=" << rows.size() << "\n";
        for (const FaceRow& r : rows) {
            body << sign_string(r.sv) << "  dim=" << r.dim
                 << "  witness=" << witness_string(r.witness);
            if (r.tree) body << "  " << mtree_to_text(*r.tree);
            body << "\n";
        }
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        out << body.str();
    }
    return mismatch ? kExitMismatch : kExitOk;
}

int run_series(const std::vector<int>& svals, int order, bool check, int check_cap,
               const std::string& format, std::optional<long long> budget_flag, int jobs,
               const std::string& out_path) {
    std::set<int> S(svals.begin(), svals.end());
    if (!sym_condition(S))
        throw UsageError("S must be symmetric and closed under the transitivity condition");
    Series F = face_series(S, order);
    long long budget = grid_budget(budget_flag);

    bool mismatch = false;
    std::ostringstream body;
    if (format == "text") {
        for (int n = 0; n <= order; ++n) body << "n=" << n << ": " << F.c[n].to_string() << "\n";
    } else {
        body << "n,k,c\n";
        for (int n = 0; n <= order; ++n)
            for (int k = 0; k <= F.c[n].deg(); ++k)
                if (F.c[n].coeff(k) != 0)
                    body << n << "," << k << "," << rat_string(F.c[n].coeff(k)) << "\n";
    }
    if (check) {
        for (int n = 1; n <= std::min(order, check_cap); ++n) {
            std::vector<long long> counts = face_counts(from_set(S, n), budget, jobs);
            for (int k = 1; k <= n; ++k)
                if (F.c[n].coeff(k) != Rat(static_cast<long>(counts[k - 1]))) mismatch = true;
            for (int k = n + 1; k <= F.c[n].deg(); ++k)
                if (F.c[n].coeff(k) != 0) mismatch = true;
        }
        body << (mismatch ? "# oracle check: MISMATCH\n" : "# oracle check: ok\n");
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        out << body.str();
    }
    return mismatch ? kExitMismatch : kExitOk;
}

int run_render3(const std::string& spec, bool labels, double pixels,
                const std::string& out_path) {
    ArrSpec as = parse_arrangement_spec(spec);
    if (as.A.n() != 3) throw UsageError("render3 needs an arrangement with n=3");
    RenderOptions opts;
    opts.label_faces = labels;
    opts.pixels = pixels;
    opts.label_arity = as.arity;
    std::string svg = render_arrangement_svg(as.A, opts);
    if (out_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream out(out_path);
        out << svg;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"faces of braid-type hyperplane arrangements"};
    app.require_subcommand(1);

    std::string spec, format = "text", out_path;
    bool oracle_only = false, skip_check = false, labels = false, check = false;
    std::optional<long long> budget;
    long long budget_raw = -1;
    int jobs = 1, order = 5, check_cap = 4, arity_flag = -1;
    double pixels = 480;
    std::vector<int> svals;

    CLI::App* faces = app.add_subcommand("faces", "enumerate faces with trees and witnesses");
    faces->add_option("spec", spec, "family:key=value,... e.g. catalan:m=1,n=2")->required();
    faces->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    faces->add_flag("--oracle-only", oracle_only, "skip the bijection, grid only");
    faces->add_flag("--no-check", skip_check, "skip the oracle cross-check");
    faces->add_option("--budget", budget_raw, "grid point cap");
    faces->add_option("--jobs", jobs, "worker threads for the grid scan");
    faces->add_option("--arity", arity_flag, "tree arity (default: max offset)");
    faces->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* series = app.add_subcommand("series", "face generating function table");
    series->add_option("--S", svals, "offsets, e.g. --S=-1,0,1")->required()->delimiter(',');
    series->add_option("--N", order, "truncation order");
    series->add_flag("--check", check, "verify against the grid oracle");
    series->add_option("--check-cap", check_cap, "largest n for the oracle check");
    series->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    series->add_option("--budget", budget_raw, "grid point cap");
    series->add_option("--jobs", jobs, "worker threads");
    series->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* render = app.add_subcommand("render3", "svg picture of an n=3 arrangement");
    render->add_option("spec", spec, "family:key=value,...")->required();
    render->add_flag("--labels", labels, "label faces with their marked trees");
    render->add_option("--pixels", pixels, "image size");
    render->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (budget_raw >= 0) budget = budget_raw;

    try {
        if (faces->parsed())
            return run_faces(spec, format, oracle_only, skip_check, budget, jobs, arity_flag,
                             out_path);
        if (series->parsed())
            return run_series(svals, order, check, check_cap, format, budget, jobs, out_path);
        if (render->parsed()) return run_render3(spec, labels, pixels, out_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
