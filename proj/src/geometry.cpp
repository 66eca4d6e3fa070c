#include "pscirc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "pscirc/io.hpp"

namespace pscirc {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct Crossing {
    double angle = 0.0;  // around the walked circle's center, in [0, tau)
    int other = 0;       // crossing circle's label
    Point at;
};

// Both intersection points of a properly crossing pair, or a degeneracy error.
std::pair<Point, Point> intersect_pair(int la, const Circle& a, int lb, const Circle& b,
                                       double eps) {
    const double d = std::hypot(b.cx - a.cx, b.cy - a.cy);
    const auto pair_name = [&] {
        return "circles " + std::to_string(la) + " and " + std::to_string(lb);
    };
    if (std::abs(d - (a.r + b.r)) <= eps)
        throw GeometryError(GeometryError::Kind::tangent, pair_name() + " are externally tangent");
    if (std::abs(d - std::abs(a.r - b.r)) <= eps)
        throw GeometryError(GeometryError::Kind::tangent, pair_name() + " are internally tangent");
    if (d > a.r + b.r)
        throw GeometryError(GeometryError::Kind::disjoint, pair_name() + " are disjoint");
    if (d < std::abs(a.r - b.r))
        throw GeometryError(GeometryError::Kind::nested,
                            pair_name() + " are nested without crossing");
    const double ux = (b.cx - a.cx) / d;
    const double uy = (b.cy - a.cy) / d;
    const double along = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d);
    const double h = std::sqrt(std::max(0.0, a.r * a.r - along * along));
    const Point mid{a.cx + along * ux, a.cy + along * uy};
    return {Point{mid.x - h * uy, mid.y + h * ux}, Point{mid.x + h * uy, mid.y - h * ux}};
}

double angle_around(const Circle& c, Point p) {
    double t = std::atan2(p.y - c.cy, p.x - c.cx);
    if (t < 0.0) t += kTau;
    return t;
}

// Tangent of a counterclockwise circle at a point on it (not normalized).
Point ccw_tangent(const Circle& c, Point p) { return Point{-(p.y - c.cy), p.x - c.cx}; }

void check_labels(const CircleArrangement& c) {
    std::set<int> labels;
    for (const auto& [label, circle] : c.circles) {
        if (label < 1) throw DomainError("circle labels must be positive");
        if (!labels.insert(label).second)
            throw DomainError("duplicate circle label " + std::to_string(label));
        if (!(circle.r > 0.0)) throw DomainError("circle radius must be positive");
    }
}

}  // namespace

IntersectionMatrix matrix_from_circles_oriented(const CircleArrangement& c,
                                                const std::vector<bool>& reversed) {
    check_labels(c);
    const std::size_t n = c.circles.size();
    if (reversed.size() != n) throw DomainError("one orientation flag per circle required");

    std::map<int, std::vector<Crossing>> walk;
    std::vector<Point> all_points;
    for (std::size_t i = 0; i < n; ++i) walk[c.circles[i].first] = {};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& [la, ca] = c.circles[i];
            const auto& [lb, cb] = c.circles[j];
            const auto [p1, p2] = intersect_pair(la, ca, lb, cb, c.epsilon);
            for (const Point& p : {p1, p2}) {
                all_points.push_back(p);
                walk[la].push_back(Crossing{angle_around(ca, p), lb, p});
                walk[lb].push_back(Crossing{angle_around(cb, p), la, p});
            }
        }
    }
    for (std::size_t i = 0; i < all_points.size(); ++i)
        for (std::size_t j = i + 1; j < all_points.size(); ++j)
            if (dist(all_points[i], all_points[j]) <= c.epsilon)
                throw GeometryError(GeometryError::Kind::near_coincident,
                                    "intersection points closer than the tolerance "
                                    "(triple point or near-degenerate crossing)");

    std::map<int, Row> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [label, circle] = c.circles[i];
        auto& crossings = walk[label];
        std::sort(crossings.begin(), crossings.end(),
                  [](const Crossing& a, const Crossing& b) { return a.angle < b.angle; });
        if (reversed[i]) std::reverse(crossings.begin(), crossings.end());
        Row row;
        for (const Crossing& cr : crossings) {
            Point ti = ccw_tangent(circle, cr.at);
            if (reversed[i]) {
                ti.x = -ti.x;
                ti.y = -ti.y;
            }
            const std::size_t oi = static_cast<std::size_t>(
                std::find_if(c.circles.begin(), c.circles.end(),
                             [&](const auto& lc) { return lc.first == cr.other; }) -
                c.circles.begin());
            Point tk = ccw_tangent(c.circles[oi].second, cr.at);
            if (reversed[oi]) {
                tk.x = -tk.x;
                tk.y = -tk.y;
            }
            const double cross = ti.x * tk.y - ti.y * tk.x;
            row.emplace_back(cr.other, cross < 0.0 ? Sign::plus : Sign::minus);
        }
        rows[label] = std::move(row);
    }
    if (auto v = validate(rows)) throw ValidationError(*v);
    return IntersectionMatrix(std::move(rows));
}

IntersectionMatrix matrix_from_circles(const CircleArrangement& c) {
    return matrix_from_circles_oriented(c, std::vector<bool>(c.circles.size(), false));
}

CircleArrangement random_arrangement(int n, std::uint64_t seed) {
    if (n < 2) throw DomainError("random_arrangement requires n >= 2");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    CircleArrangement arr;
    const double margin = 10.0 * arr.epsilon;
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        arr.circles.clear();
        for (int i = 0; i < n; ++i) {
            const double rho = 0.8 * std::sqrt(uniform());
            const double phi = kTau * uniform();
            const double radius = 0.9 + 0.2 * uniform();
            arr.circles.emplace_back(i + 1,
                                     Circle{rho * std::cos(phi), rho * std::sin(phi), radius});
        }
        bool ok = true;
        std::vector<Point> points;
        for (std::size_t i = 0; i < arr.circles.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < arr.circles.size() && ok; ++j) {
                const Circle& a = arr.circles[i].second;
                const Circle& b = arr.circles[j].second;
                const double d = std::hypot(b.cx - a.cx, b.cy - a.cy);
                if (d >= a.r + b.r - margin || d <= std::abs(a.r - b.r) + margin) {
                    ok = false;
                    break;
                }
                const auto [p1, p2] =
                    intersect_pair(arr.circles[i].first, a, arr.circles[j].first, b, margin);
                points.push_back(p1);
                points.push_back(p2);
            }
        }
        for (std::size_t i = 0; i < points.size() && ok; ++i)
            for (std::size_t j = i + 1; j < points.size() && ok; ++j)
                if (dist(points[i], points[j]) <= margin) ok = false;
        if (ok) return arr;
    }
    throw GeometryError(GeometryError::Kind::sampling_exhausted,
                        "no valid arrangement found within the attempt budget");
}

CircleArrangement parse_circles(std::string_view text) {
    CircleArrangement arr;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string label_tok;
        if (!(ls >> label_tok)) continue;  // blank
        if (label_tok.empty() || label_tok.back() != ':')
            throw ParseError("expected '<label>:'", lineno, 1);
        int label = 0;
        try {
            label = std::stoi(label_tok.substr(0, label_tok.size() - 1));
        } catch (const std::exception&) {
            throw ParseError("bad circle label '" + label_tok + "'", lineno, 1);
        }
        double cx = 0, cy = 0, r = 0;
        if (!(ls >> cx >> cy >> r)) throw ParseError("expected '<cx> <cy> <r>'", lineno, 1);
        std::string trailing;
        if (ls >> trailing) throw ParseError("unexpected trailing content", lineno, 1);
        if (label < 1) throw ParseError("circle labels must be positive", lineno, 1);
        if (!(r > 0.0)) throw ParseError("circle radius must be positive", lineno, 1);
        arr.circles.emplace_back(label, Circle{cx, cy, r});
    }
    std::set<int> seen;
    for (const auto& [label, circle] : arr.circles)
        if (!seen.insert(label).second)
            throw ParseError("duplicate circle label " + std::to_string(label), lineno, 1);
    std::sort(arr.circles.begin(), arr.circles.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return arr;
}

}  // namespace pscirc
