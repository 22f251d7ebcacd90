#include "braidfaces/svg.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "braidfaces/face_map.hpp"
#include "braidfaces/json_io.hpp"
#include "braidfaces/marked_trees.hpp"

namespace braidfaces {

namespace {

// Orthonormal basis of the plane x1 + x2 + x3 = 0.
const double kU[3] = {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
const double kV[3] = {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)};

struct Seg {
    double x1, y1, x2, y2;
};

// Clip the line a*p + b*q = c to the square [-w, w]^2.
std::optional<Seg> clip_line(double a, double b, double c, double w) {
    std::vector<std::pair<double, double>> pts;
    auto push = [&](double p, double q) {
        for (auto& [pp, qq] : pts)
            if (std::abs(pp - p) + std::abs(qq - q) < 1e-9) return;
        pts.push_back({p, q});
    };
    const double eps = 1e-12;
    if (std::abs(b) > eps) {
        for (double p : {-w, w}) {
            double q = (c - a * p) / b;
            if (q >= -w - 1e-9 && q <= w + 1e-9) push(p, q);
        }
    }
    if (std::abs(a) > eps) {
        for (double q : {-w, w}) {
            double p = (c - b * q) / a;
            if (p >= -w - 1e-9 && p <= w + 1e-9) push(p, q);
        }
    }
    if (pts.size() < 2) return std::nullopt;
    return Seg{pts[0].first, pts[0].second, pts[1].first, pts[1].second};
}

}  // namespace

std::string render_arrangement_svg(const Arrangement& A, const RenderOptions& opts) {
    if (A.n() != 3) throw std::invalid_argument("svg rendering needs dimension 3");
    const double w = A.m() + 2;  // half side of the window
    const double scale = opts.pixels / (2 * w);
    auto px = [&](double p) { return (p + w) * scale; };
    auto py = [&](double q) { return (w - q) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.pixels << "\" height=\""
        << opts.pixels << "\" viewBox=\"0 0 " << opts.pixels << " " << opts.pixels << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const Triple& t : A.triples()) {
        double a = kU[t.i - 1] - kU[t.j - 1];
        double b = kV[t.i - 1] - kV[t.j - 1];
        auto seg = clip_line(a, b, t.s, w);
        if (!seg) continue;
        svg << "  <line x1=\"" << px(seg->x1) << "\" y1=\"" << py(seg->y1) << "\" x2=\""
            << px(seg->x2) << "\" y2=\"" << py(seg->y2)
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }

    if (opts.label_faces) {
        int arity = opts.label_arity < 0 ? A.m() : opts.label_arity;
        for (const MTree& t : enumerate_admissible(A, arity)) {
            SignVector sv = face_sign_vector(A, t);
            auto witness = feasible_witness(sv, A);
            if (!witness) continue;
            double x[3];
            double mean = 0;
            for (int i = 0; i < 3; ++i) {
                x[i] = (*witness)[i].get_d();
                mean += x[i] / 3.0;
            }
            double p = 0, q = 0;
            for (int i = 0; i < 3; ++i) {
                p += (x[i] - mean) * kU[i];
                q += (x[i] - mean) * kV[i];
            }
            if (std::abs(p) > w || std::abs(q) > w) continue;
            svg << "  <text x=\"" << px(p) << "\" y=\"" << py(q)
                << "\" font-size=\"7\" fill=\"crimson\" text-anchor=\"middle\">"
                << mtree_to_text(t) << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace braidfaces
