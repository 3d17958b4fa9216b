#pragma once

// Constructors for the standard polytopes: simplices, cubes, cross-polytopes,
// polygons, pyramids, bipyramids, products, Bruhat interval polytopes and the
// three-dimensional Gelfand-Zetlin polytope.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "conic/errors.hpp"
#include "conic/geometry.hpp"

namespace conic {

namespace detail {

inline void check_dim(std::size_t d, std::size_t lo, std::size_t hi, const char* what) {
    if (d < lo || d > hi)
        throw DimensionOutOfRange(std::string(what) + " requires " + std::to_string(lo) + " <= d <= " +
                                  std::to_string(hi) + ", got " + std::to_string(d));
}

inline Point unit(std::size_t d, std::size_t i, int sign = 1) {
    Point p(d, Rational(0));
    p[i] = sign;
    return p;
}

/// Coordinates of the points on their own affine hull, so the result is full-dimensional.
inline std::vector<Point> full_dimensional(const VRep& v, std::size_t& dim) {
    auto hull = affine_hull(v.points);
    dim = hull.dim;
    if (hull.dim == v.ambient_dim) return v.points;
    std::vector<Point> out;
    for (const auto& p : v.points) out.push_back(hull.coordinates(p));
    return out;
}

inline Point barycenter(const std::vector<Point>& pts, std::size_t dim) {
    Point c(dim, Rational(0));
    for (const auto& p : pts)
        for (std::size_t k = 0; k < dim; ++k) c[k] += p[k];
    for (auto& x : c) x /= static_cast<long>(pts.size());
    return c;
}

inline std::string label(const VRep& v, const char* fallback) { return v.name.value_or(fallback); }

}  // namespace detail

/// conv{0, e_1, ..., e_d}
inline VRep simplex(std::size_t d) {
    detail::check_dim(d, 1, 6, "simplex");
    std::vector<Point> pts{Point(d, Rational(0))};
    for (std::size_t i = 0; i < d; ++i) pts.push_back(detail::unit(d, i));
    return VRep(d, std::move(pts), "simplex(" + std::to_string(d) + ")");
}

/// {0,1}^d, vertices in binary counting order (coordinate 0 is the low bit).
inline VRep cube(std::size_t d) {
    detail::check_dim(d, 1, 6, "cube");
    std::vector<Point> pts;
    for (std::size_t x = 0; x < (std::size_t{1} << d); ++x) {
        Point p(d);
        for (std::size_t k = 0; k < d; ++k) p[k] = (x >> k) & 1u;
        pts.push_back(std::move(p));
    }
    return VRep(d, std::move(pts), "cube(" + std::to_string(d) + ")");
}

/// conv{+-e_i}
inline VRep cross_polytope(std::size_t d) {
    detail::check_dim(d, 1, 6, "cross-polytope");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(detail::unit(d, i, 1));
        pts.push_back(detail::unit(d, i, -1));
    }
    return VRep(d, std::move(pts), "cross(" + std::to_string(d) + ")");
}

/// Convex k-gon with vertices (i, i^2), i = 0..k-1.
inline VRep polygon(std::size_t k) {
    detail::check_dim(k, 3, 64, "polygon");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < k; ++i) pts.push_back(Point{Rational(i), Rational(i * i)});
    return VRep(2, std::move(pts), "polygon(" + std::to_string(k) + ")");
}

inline VRep segment() { return VRep(1, {Point{Rational(0)}, Point{Rational(1)}}, "segment"); }

/// Base points with last coordinate 0 plus an apex at height 1 over the barycenter.
inline VRep pyramid(const VRep& base) {
    std::size_t m = 0;
    auto pts = detail::full_dimensional(base, m);
    auto apex = detail::barycenter(pts, m);
    for (auto& p : pts) p.push_back(Rational(0));
    apex.push_back(Rational(1));
    pts.push_back(std::move(apex));
    return VRep(m + 1, std::move(pts), "pyramid(" + detail::label(base, "base") + ")");
}

/// Base points with last coordinate 0 plus apexes at heights +1 and -1 over the barycenter.
inline VRep bipyramid(const VRep& base) {
    std::size_t m = 0;
    auto pts = detail::full_dimensional(base, m);
    if (m == 0) throw DegenerateInput("bipyramid over a point");
    auto center = detail::barycenter(pts, m);
    for (auto& p : pts) p.push_back(Rational(0));
    auto top = center, bottom = center;
    top.push_back(Rational(1));
    bottom.push_back(Rational(-1));
    pts.push_back(std::move(top));
    pts.push_back(std::move(bottom));
    return VRep(m + 1, std::move(pts), "bipyramid(" + detail::label(base, "base") + ")");
}

/// Cartesian product; vertex (i, j) is at index i * |b| + j.
inline VRep product(const VRep& a, const VRep& b) {
    std::vector<Point> pts;
    for (const auto& p : a.points) {
        for (const auto& q : b.points) {
            Point r = p;
            r.insert(r.end(), q.begin(), q.end());
            pts.push_back(std::move(r));
        }
    }
    return VRep(a.ambient_dim + b.ambient_dim, std::move(pts),
                detail::label(a, "a") + "x" + detail::label(b, "b"));
}

/// A permutation of {1..n} in one-line notation.
struct Permutation {
    std::vector<unsigned> one_line;

    Permutation() = default;
    explicit Permutation(std::vector<unsigned> values) : one_line(std::move(values)) {
        std::vector<bool> seen(one_line.size() + 1, false);
        for (unsigned x : one_line) {
            if (x < 1 || x > one_line.size() || seen[x])
                throw DegenerateInput("not a permutation of 1.." + std::to_string(one_line.size()));
            seen[x] = true;
        }
    }

    std::size_t size() const { return one_line.size(); }

    /// Parses "1324" (single digits) or "1,3,2,4".
    static Permutation parse(const std::string& text) {
        std::vector<unsigned> v;
        if (text.find(',') != std::string::npos) {
            std::size_t start = 0;
            while (start <= text.size()) {
                auto end = text.find(',', start);
                if (end == std::string::npos) end = text.size();
                v.push_back(static_cast<unsigned>(parse_integer(text.substr(start, end - start))));
                start = end + 1;
            }
        } else {
            for (char c : text) {
                if (c < '1' || c > '9') throw ParseError("malformed permutation '" + text + "'");
                v.push_back(static_cast<unsigned>(c - '0'));
            }
        }
        return Permutation(std::move(v));
    }

    std::string str() const {
        std::string s;
        const bool digits = one_line.size() <= 9;
        for (std::size_t i = 0; i < one_line.size(); ++i) {
            if (!digits && i > 0) s += ",";
            s += std::to_string(one_line[i]);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Bruhat order by the tableau criterion: every sorted prefix of u is entrywise
/// below the sorted prefix of w of the same length.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size())
        throw SizeMismatch("permutations of sizes " + std::to_string(u.size()) + " and " + std::to_string(w.size()));
    std::vector<unsigned> pu, pw;
    for (std::size_t k = 0; k < u.size(); ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u.one_line[k]), u.one_line[k]);
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w.one_line[k]), w.one_line[k]);
        for (std::size_t i = 0; i <= k; ++i)
            if (pu[i] > pw[i]) return false;
    }
    return true;
}

/// conv{(s(1), ..., s(n)) : u <= s <= w}, points in lexicographic order.
inline VRep bruhat_interval_polytope(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size())
        throw SizeMismatch("permutations of sizes " + std::to_string(u.size()) + " and " + std::to_string(w.size()));
    detail::check_dim(u.size(), 1, 5, "Bruhat interval polytope");
    if (!bruhat_leq(u, w)) throw NotComparable(u.str() + " is not below " + w.str() + " in Bruhat order");
    std::vector<unsigned> s(u.size());
    std::iota(s.begin(), s.end(), 1u);
    std::vector<Point> pts;
    do {
        Permutation sigma(s);
        if (bruhat_leq(u, sigma) && bruhat_leq(sigma, w)) {
            Point p;
            for (unsigned x : s) p.emplace_back(x);
            pts.push_back(std::move(p));
        }
    } while (std::next_permutation(s.begin(), s.end()));
    return VRep(u.size(), std::move(pts), "bruhat(" + u.str() + "," + w.str() + ")");
}

/// 0 <= x1 <= 1 <= x2 <= 2 and x1 <= x3 <= x2.
inline HRep gelfand_zetlin_3() {
    auto c = [](std::vector<int> normal, int bound) {
        LinearConstraint out;
        for (int x : normal) out.normal.emplace_back(x);
        out.bound = bound;
        return out;
    };
    HRep h;
    h.ambient_dim = 3;
    h.inequalities = {
        c({-1, 0, 0}, 0),  // 0 <= x1
        c({1, 0, 0}, 1),   // x1 <= 1
        c({0, -1, 0}, -1), // 1 <= x2
        c({0, 1, 0}, 2),   // x2 <= 2
        c({1, 0, -1}, 0),  // x1 <= x3
        c({0, -1, 1}, 0),  // x3 <= x2
    };
    return h;
}

}  // namespace conic
