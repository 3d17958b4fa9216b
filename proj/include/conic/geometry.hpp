#pragma once

// Exact rational polyhedral geometry for small polytopes: affine hulls,
// facet enumeration from points and vertex enumeration from inequalities.
// Everything is brute force over subsets, which is exact and auditable at
// the sizes this library targets (a few dozen points, dimension <= 4).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conic/errors.hpp"
#include "conic/linalg.hpp"
#include "conic/rational.hpp"
#include "conic/vertex_set.hpp"

namespace conic {

using Point = RationalVector;

/// Points x with normal . x = offset. Normal is primitive with positive leading entry.
struct Hyperplane {
    IntegerVector normal;
    Rational offset;

    /// Sign of normal . x - offset.
    int side(const Point& x) const {
        Rational s = linalg::dot(normal, x) - offset;
        return s > 0 ? 1 : (s < 0 ? -1 : 0);
    }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

    /// Canonical form of {x : a . x = b}; `a` must be nonzero.
    static Hyperplane from(const RationalVector& a, const Rational& b) {
        IntegerVector n = linalg::primitive(a);
        // primitive() rescales by a positive factor; recover it from any nonzero entry
        std::size_t lead = 0;
        while (n[lead] == 0) ++lead;
        Rational scale = Rational(n[lead]) / a[lead];
        Rational offset = b * scale;
        if (n[lead] < 0) {
            for (auto& z : n) z = -z;
            offset = -offset;
        }
        return Hyperplane{std::move(n), std::move(offset)};
    }
};

struct VRep {
    std::size_t ambient_dim = 0;
    std::vector<Point> points;
    std::optional<std::string> name;

    VRep() = default;
    VRep(std::size_t dim, std::vector<Point> pts, std::optional<std::string> label = std::nullopt)
        : ambient_dim(dim), points(std::move(pts)), name(std::move(label)) {
        validate();
    }

    void validate() const {
        if (points.empty()) throw DegenerateInput("vertex representation has no points");
        std::set<Point> seen;
        for (const auto& p : points) {
            if (p.size() != ambient_dim)
                throw DimensionMismatch("point of length " + std::to_string(p.size()) +
                                        " in ambient dimension " + std::to_string(ambient_dim));
            if (!seen.insert(p).second) throw DegenerateInput("duplicate point in vertex representation");
        }
    }
};

/// normal . x <= bound (or == bound when used as an equality).
struct LinearConstraint {
    IntegerVector normal;
    Integer bound;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct HRep {
    std::size_t ambient_dim = 0;
    std::vector<LinearConstraint> inequalities;
    std::vector<LinearConstraint> equalities;

    bool contains(const Point& x) const {
        for (const auto& c : inequalities)
            if (linalg::dot(c.normal, x) > Rational(c.bound)) return false;
        for (const auto& c : equalities)
            if (linalg::dot(c.normal, x) != Rational(c.bound)) return false;
        return true;
    }

    friend bool operator==(const HRep&, const HRep&) = default;
};

/// Facet-vertex incidences of a polytope of dimension `dim`.
struct IncidenceMatrix {
    std::size_t n_vertices = 0;
    std::vector<std::vector<VertexIndex>> facets;
    std::size_t dim = 0;

    void validate() const {
        std::vector<std::size_t> facet_count(n_vertices, 0);
        std::vector<VertexSet> sets;
        for (const auto& f : facets) {
            for (VertexIndex v : f) {
                if (v >= n_vertices)
                    throw InconsistentIncidence("facet references vertex " + std::to_string(v) +
                                                " but there are only " + std::to_string(n_vertices));
                ++facet_count[v];
            }
            sets.push_back(make_vertex_set(n_vertices, f));
        }
        for (std::size_t v = 0; v < n_vertices; ++v) {
            if (facet_count[v] < dim)
                throw InconsistentIncidence("vertex " + std::to_string(v) + " lies on fewer than " +
                                            std::to_string(dim) + " facets");
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (std::size_t j = 0; j < sets.size(); ++j) {
                if (i != j && sets[i].is_subset_of(sets[j]))
                    throw InconsistentIncidence("facet " + std::to_string(i) + " is contained in facet " +
                                                std::to_string(j));
            }
        }
    }

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

struct AffineHull {
    std::size_t dim = 0;
    std::vector<RationalVector> basis;  // rows in reduced echelon form
    Point origin;
    std::vector<std::size_t> pivots;    // pivot column of each basis row

    /// Coordinates of a point of the hull with respect to origin + basis.
    RationalVector coordinates(const Point& p) const {
        RationalVector out(dim);
        for (std::size_t k = 0; k < dim; ++k) out[k] = p[pivots[k]] - origin[pivots[k]];
        return out;
    }
};

inline AffineHull affine_hull(const std::vector<Point>& points) {
    if (points.empty()) throw DegenerateInput("affine hull of an empty point list");
    const std::size_t n = points.front().size();
    linalg::Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = points[i][k] - points[0][k];
        diffs.push_back(std::move(d));
    }
    auto e = linalg::reduce(std::move(diffs), n);
    AffineHull hull;
    hull.dim = e.pivots.size();
    hull.basis = std::move(e.rows);
    hull.pivots = std::move(e.pivots);
    hull.origin = points.front();
    return hull;
}

namespace detail {

/// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Result of facet enumeration: incidences over the extreme points only.
struct HullResult {
    IncidenceMatrix incidence;
    std::vector<std::size_t> vertices;     // input index of each incidence vertex
    std::vector<std::size_t> dropped;      // input indices of non-extremal points
    std::vector<Hyperplane> facet_planes;  // in affine-hull coordinates, parallel to incidence.facets
    AffineHull hull;
};

inline HullResult facet_enumerate(const VRep& v) {
    v.validate();
    HullResult result;
    result.hull = affine_hull(v.points);
    const std::size_t d = result.hull.dim;
    if (d == 0) throw DegenerateInput("all points coincide");

    std::vector<RationalVector> q;
    q.reserve(v.points.size());
    for (const auto& p : v.points) q.push_back(result.hull.coordinates(p));
    const std::size_t n = q.size();

    std::vector<VertexSet> facet_sets;
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> seen;
    detail::for_each_subset(n, d, [&](const std::vector<std::size_t>& subset) {
        // skip subsets already lying on a known facet
        VertexSet s(n);
        for (auto i : subset) s.set(i);
        for (const auto& f : facet_sets)
            if (s.is_subset_of(f)) return;

        linalg::Matrix rows;
        for (auto i : subset) {
            RationalVector r(q[i]);
            r.push_back(Rational(-1));
            rows.push_back(std::move(r));
        }
        auto null = linalg::nullspace(rows, d + 1);
        if (null.size() != 1) return;
        RationalVector a(null[0].begin(), null[0].end() - 1);
        Rational b = null[0].back();

        bool pos = false, neg = false;
        VertexSet on(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational s_i = linalg::dot(a, q[i]) - b;
            if (s_i > 0) pos = true;
            else if (s_i < 0) neg = true;
            else on.set(i);
            if (pos && neg) return;
        }
        if (seen.contains(on)) return;
        seen.emplace(on, facet_sets.size());
        facet_sets.push_back(on);
        result.facet_planes.push_back(Hyperplane::from(a, b));
    });

    // a point is a vertex iff the facets through it meet in that point alone
    std::vector<std::size_t> new_index(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        VertexSet meet(n);
        meet.set();
        for (const auto& f : facet_sets)
            if (f.test(i)) meet &= f;
        if (meet.count() == 1) {
            new_index[i] = result.vertices.size();
            result.vertices.push_back(i);
        } else {
            result.dropped.push_back(i);
        }
    }

    result.incidence.n_vertices = result.vertices.size();
    result.incidence.dim = d;
    for (const auto& f : facet_sets) {
        std::vector<VertexIndex> members;
        for (auto i = f.find_first(); i != VertexSet::npos; i = f.find_next(i))
            if (new_index[i] != n) members.push_back(new_index[i]);
        result.incidence.facets.push_back(std::move(members));
    }
    return result;
}

namespace detail {

struct RowSystem {
    std::vector<IntegerVector> normals;
    std::vector<Integer> rhs;
};

/// Unique solution of the square-or-tall system, if its normals have full column rank.
inline std::optional<Point> solve_unique(const RowSystem& sys, std::size_t n) {
    linalg::Matrix aug;
    for (std::size_t r = 0; r < sys.normals.size(); ++r) {
        RationalVector row;
        for (const auto& z : sys.normals[r]) row.emplace_back(z);
        row.emplace_back(sys.rhs[r]);
        aug.push_back(std::move(row));
    }
    auto e = linalg::reduce(std::move(aug), n + 1);
    if (e.pivots.size() != n || (!e.pivots.empty() && e.pivots.back() == n)) return std::nullopt;
    Point x(n);
    for (std::size_t r = 0; r < n; ++r) x[e.pivots[r]] = e.rows[r][n];
    return x;
}

/// Indices of a maximal linearly independent subset of `rows`.
inline std::vector<std::size_t> independent_rows(const std::vector<IntegerVector>& rows, std::size_t n) {
    std::vector<std::size_t> chosen;
    linalg::Matrix acc;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RationalVector r;
        for (const auto& z : rows[i]) r.emplace_back(z);
        acc.push_back(r);
        if (linalg::rank(acc, n) == chosen.size() + 1) chosen.push_back(i);
        else acc.pop_back();
    }
    return chosen;
}

/// Basic feasible solutions of a system whose constraint normals have full column rank n.
inline std::vector<Point> basic_feasible_points(const HRep& h) {
    const std::size_t n = h.ambient_dim;
    std::vector<IntegerVector> eq_normals;
    for (const auto& c : h.equalities) eq_normals.push_back(c.normal);
    auto eq_basis = independent_rows(eq_normals, n);
    const std::size_t need = n - eq_basis.size();

    std::set<Point> found;
    for_each_subset(h.inequalities.size(), need, [&](const std::vector<std::size_t>& subset) {
        RowSystem sys;
        for (auto i : eq_basis) {
            sys.normals.push_back(h.equalities[i].normal);
            sys.rhs.push_back(h.equalities[i].bound);
        }
        for (auto i : subset) {
            sys.normals.push_back(h.inequalities[i].normal);
            sys.rhs.push_back(h.inequalities[i].bound);
        }
        auto x = solve_unique(sys, n);
        if (x && h.contains(*x)) found.insert(*x);
    });
    return {found.begin(), found.end()};
}

/// True iff {d : A d <= 0, E d = 0} contains a nonzero direction (normals of full rank n).
inline bool has_recession_ray(const HRep& h) {
    const std::size_t n = h.ambient_dim;
    if (n == 0) return false;
    std::vector<IntegerVector> eq_normals;
    for (const auto& c : h.equalities) eq_normals.push_back(c.normal);
    auto eq_basis = independent_rows(eq_normals, n);
    if (eq_basis.size() >= n) return false;
    const std::size_t need = n - 1 - eq_basis.size();

    bool ray = false;
    for_each_subset(h.inequalities.size(), need, [&](const std::vector<std::size_t>& subset) {
        if (ray) return;
        linalg::Matrix rows;
        auto push = [&](const IntegerVector& z) {
            RationalVector r;
            for (const auto& x : z) r.emplace_back(x);
            rows.push_back(std::move(r));
        };
        for (auto i : eq_basis) push(h.equalities[i].normal);
        for (auto i : subset) push(h.inequalities[i].normal);
        auto null = linalg::nullspace(rows, n);
        if (null.size() != 1) return;
        for (int sign : {1, -1}) {
            bool ok = true;
            for (const auto& c : h.equalities)
                if (linalg::dot(c.normal, null[0]) != 0) ok = false;
            for (const auto& c : h.inequalities)
                if (Rational(sign) * linalg::dot(c.normal, null[0]) > 0) ok = false;
            if (ok) ray = true;
        }
    });
    return ray;
}

}  // namespace detail

/// Vertices of the bounded, nonempty region of `h`, sorted lexicographically.
inline VRep vertex_enumerate(const HRep& h) {
    const std::size_t n = h.ambient_dim;
    for (const auto* list : {&h.inequalities, &h.equalities})
        for (const auto& c : *list)
            if (c.normal.size() != n)
                throw DimensionMismatch("constraint normal of length " + std::to_string(c.normal.size()) +
                                        " in ambient dimension " + std::to_string(n));

    std::vector<IntegerVector> all_normals;
    for (const auto& c : h.inequalities) all_normals.push_back(c.normal);
    for (const auto& c : h.equalities) all_normals.push_back(c.normal);
    const std::size_t r = detail::independent_rows(all_normals, n).size();

    if (r < n) {
        // Nonzero lineality space: the region is unbounded unless it is empty.
        // Feasibility is decided on the row space, where the normals have full rank.
        linalg::Matrix rows;
        for (const auto& z : all_normals) {
            RationalVector v;
            for (const auto& x : z) v.emplace_back(x);
            rows.push_back(std::move(v));
        }
        auto basis = linalg::reduce(std::move(rows), n).rows;
        // Substitute x = sum_k y_k basis_k. Scale each reduced normal to integers per row,
        // together with its bound.
        HRep reduced;
        reduced.ambient_dim = r;
        auto reduce_constraint = [&](const LinearConstraint& c) {
            RationalVector coeffs(r + 1);
            for (std::size_t k = 0; k < r; ++k) coeffs[k] = linalg::dot(c.normal, basis[k]);
            coeffs[r] = Rational(c.bound);
            Integer lcm = 1;
            for (const auto& x : coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(x));
            LinearConstraint out;
            for (std::size_t k = 0; k < r; ++k) out.normal.push_back(numerator(coeffs[k] * Rational(lcm)));
            out.bound = numerator(coeffs[r] * Rational(lcm));
            return out;
        };
        for (const auto& c : h.inequalities) reduced.inequalities.push_back(reduce_constraint(c));
        for (const auto& c : h.equalities) reduced.equalities.push_back(reduce_constraint(c));
        if (detail::basic_feasible_points(reduced).empty()) throw Empty("inequality system is infeasible");
        throw Unbounded("feasible region contains a line");
    }

    auto points = detail::basic_feasible_points(h);
    if (points.empty()) throw Empty("inequality system is infeasible");
    if (detail::has_recession_ray(h)) throw Unbounded("feasible region is unbounded");
    return VRep(n, std::move(points));
}

}  // namespace conic
