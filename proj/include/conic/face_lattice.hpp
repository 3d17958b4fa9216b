#pragma once

// Face posets of polytopes and the subcomplexes obtained from them by
// deleting intervals [v, E].

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conic/errors.hpp"
#include "conic/geometry.hpp"
#include "conic/vertex_set.hpp"

namespace conic {

using FaceId = std::size_t;
using FaceMask = boost::dynamic_bitset<std::uint64_t>;

struct Face {
    FaceId id = 0;
    int dim = -1;
    VertexSet vertices;
};

/// Face numbers (f_0, ..., f_n).
struct FVector {
    std::vector<std::size_t> counts;

    int dim() const { return static_cast<int>(counts.size()) - 1; }

    /// Alternating sum f_0 - f_1 + f_2 - ...
    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t k = 0; k < counts.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
        return chi;
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// An atomistic lattice of faces: every face is identified with its vertex set and
/// the order is vertex-set containment. Faces are stored sorted by (dim, sorted
/// vertex list), so the empty face has id 0 and vertex v (when present) comes next.
class FacePoset {
public:
    FacePoset() = default;

    /// Builds a poset from explicit (vertex set, dim) pairs. The empty face is added
    /// if missing. Face invariants are checked; closure properties are not.
    static FacePoset from_faces(std::size_t n_vertices, std::vector<std::pair<VertexSet, int>> faces) {
        FacePoset p;
        p.n_vertices_ = n_vertices;
        bool has_empty = false;
        for (auto& [set, dim] : faces) {
            if (set.size() != n_vertices) throw InconsistentIncidence("vertex set over the wrong universe");
            const auto k = set.count();
            if ((dim == -1) != (k == 0) || (dim == 0) != (k == 1) || (dim >= 0 && k < std::size_t(dim) + 1))
                throw InconsistentIncidence("face of dimension " + std::to_string(dim) + " with " +
                                            std::to_string(k) + " vertices");
            if (k == 0) has_empty = true;
        }
        if (!has_empty) faces.emplace_back(VertexSet(n_vertices), -1);
        std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second < b.second;
            return lex_less(a.first, b.first);
        });
        p.faces_.reserve(faces.size());
        for (auto& [set, dim] : faces) {
            FaceId id = p.faces_.size();
            if (!p.index_.emplace(set, id).second) throw InconsistentIncidence("duplicate face");
            p.faces_.push_back(Face{id, dim, std::move(set)});
        }
        p.finish();
        return p;
    }

    std::size_t size() const { return faces_.size(); }
    std::size_t n_vertices() const { return n_vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId id) const { return faces_.at(id); }
    FaceId empty_face() const { return 0; }

    /// Dimension of the largest face.
    int dim() const { return faces_.empty() ? -1 : faces_.back().dim; }

    /// The unique maximal face, if there is one.
    std::optional<FaceId> top() const { return top_; }

    std::optional<FaceId> find(const VertexSet& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<FaceId> vertex_face(VertexIndex v) const {
        if (v >= n_vertices_) return std::nullopt;
        VertexSet s(n_vertices_);
        s.set(v);
        return find(s);
    }

    /// Ids of the faces whose vertex set contains v, ascending.
    const std::vector<FaceId>& faces_containing(VertexIndex v) const { return containing_.at(v); }

    bool leq(FaceId a, FaceId b) const { return faces_[a].vertices.is_subset_of(faces_[b].vertices); }

    /// Atoms (dimension-0 faces) in id order.
    std::vector<FaceId> atoms() const {
        std::vector<FaceId> out;
        for (const auto& f : faces_)
            if (f.dim == 0) out.push_back(f.id);
        return out;
    }

    /// Faces of dimension dim()-1.
    std::vector<FaceId> coatoms() const {
        std::vector<FaceId> out;
        for (const auto& f : faces_)
            if (f.dim == dim() - 1) out.push_back(f.id);
        return out;
    }

private:
    void finish() {
        containing_.assign(n_vertices_, {});
        for (const auto& f : faces_)
            for (auto v = f.vertices.find_first(); v != VertexSet::npos; v = f.vertices.find_next(v))
                containing_[v].push_back(f.id);
        top_.reset();
        if (!faces_.empty()) {
            const Face& last = faces_.back();
            bool unique = true;
            for (const auto& f : faces_)
                if (!f.vertices.is_subset_of(last.vertices)) unique = false;
            if (unique) top_ = last.id;
        }
    }

    std::size_t n_vertices_ = 0;
    std::vector<Face> faces_;
    std::unordered_map<VertexSet, FaceId, VertexSetHash> index_;
    std::vector<std::vector<FaceId>> containing_;
    std::optional<FaceId> top_;
};

/// Face lattice of a polytope from its facet-vertex incidences, by closing the
/// facet vertex sets under intersection.
inline FacePoset build_face_lattice(const IncidenceMatrix& inc) {
    inc.validate();
    const std::size_t n = inc.n_vertices;
    if (n == 0) throw InconsistentIncidence("polytope without vertices");

    VertexSet full(n);
    full.set();
    std::vector<VertexSet> facet_sets;
    for (const auto& f : inc.facets) facet_sets.push_back(make_vertex_set(n, f));

    std::unordered_map<VertexSet, std::size_t, VertexSetHash> seen;
    std::vector<VertexSet> sets;
    auto add = [&](VertexSet s) {
        if (seen.emplace(s, sets.size()).second) sets.push_back(std::move(s));
    };
    add(full);
    add(VertexSet(n));
    for (const auto& f : facet_sets) add(f);
    for (std::size_t i = 2; i < sets.size(); ++i) {
        for (const auto& f : facet_sets) add(sets[i] & f);
    }

    // Galois closure: every face is the intersection of the facets containing it
    for (const auto& s : sets) {
        if (s == full) continue;
        VertexSet meet = full;
        for (const auto& f : facet_sets)
            if (s.is_subset_of(f)) meet &= f;
        if (meet != s) throw InconsistentIncidence("vertex set is not an intersection of facets");
    }

    // rank by longest chain from the empty face
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sets[a].count() < sets[b].count(); });
    std::vector<int> rank(sets.size(), -1);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const auto i = order[oi];
        int r = -1;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            const auto j = order[oj];
            if (sets[j] != sets[i] && sets[j].is_subset_of(sets[i])) r = std::max(r, rank[j] + 1);
        }
        rank[i] = r;
    }

    if (rank[0] != static_cast<int>(inc.dim))
        throw InconsistentIncidence("lattice has rank " + std::to_string(rank[0]) + " but dimension " +
                                    std::to_string(inc.dim) + " was declared");
    for (const auto& f : facet_sets) {
        if (rank[seen.at(f)] != static_cast<int>(inc.dim) - 1)
            throw InconsistentIncidence("facet does not have codimension one");
    }
    for (std::size_t v = 0; v < n; ++v) {
        VertexSet s(n);
        s.set(v);
        if (!seen.contains(s)) throw InconsistentIncidence("vertex " + std::to_string(v) + " is not a face");
    }

    std::vector<std::pair<VertexSet, int>> faces;
    faces.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) faces.emplace_back(sets[i], rank[i]);
    return FacePoset::from_faces(n, std::move(faces));
}

/// Face lattice of the point polytope {empty, v}.
inline FacePoset point_lattice() {
    VertexSet v(1);
    v.set(0);
    return FacePoset::from_faces(1, {{v, 0}});
}

/// Face lattice of conv(points), handling the single-point polytope.
inline FacePoset face_lattice_of(const VRep& v) {
    if (v.points.size() == 1) return point_lattice();
    return build_face_lattice(facet_enumerate(v).incidence);
}

inline FVector f_vector(const FacePoset& p) {
    FVector f;
    f.counts.assign(std::max(p.dim() + 1, 0), 0);
    for (const auto& face : p.faces())
        if (face.dim >= 0) ++f.counts[face.dim];
    return f;
}

/// A subcollection of a fixed face poset, closed under the deletions performed on it.
class SubComplex {
public:
    explicit SubComplex(std::shared_ptr<const FacePoset> parent)
        : parent_(std::move(parent)), alive_(parent_->size()) {
        alive_.set();
    }

    const FacePoset& parent() const { return *parent_; }
    const std::shared_ptr<const FacePoset>& parent_ptr() const { return parent_; }

    bool alive(FaceId id) const { return id < alive_.size() && alive_.test(id); }

    bool vertex_alive(VertexIndex v) const {
        auto id = parent_->vertex_face(v);
        return id && alive(*id);
    }

    std::vector<FaceId> alive_faces() const {
        std::vector<FaceId> out;
        for (auto i = alive_.find_first(); i != FaceMask::npos; i = alive_.find_next(i))
            out.push_back(i);
        return out;
    }

    VertexSet alive_vertices() const {
        VertexSet s(parent_->n_vertices());
        for (VertexIndex v = 0; v < parent_->n_vertices(); ++v)
            if (vertex_alive(v)) s.set(v);
        return s;
    }

    std::size_t alive_vertex_count() const { return alive_vertices().count(); }

    /// Largest dimension of an alive face (-1 when only the empty face is left).
    int dim() const {
        int d = -1;
        for (auto i = alive_.find_first(); i != FaceMask::npos; i = alive_.find_next(i))
            d = std::max(d, parent_->face(i).dim);
        return d;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (auto i = alive_.find_first(); i != FaceMask::npos; i = alive_.find_next(i)) {
            int d = parent_->face(i).dim;
            if (d >= 0) chi += (d % 2 == 0) ? 1 : -1;
        }
        return chi;
    }

    /// Hash of the sorted list of alive vertex sets.
    std::size_t fingerprint() const {
        std::vector<const VertexSet*> sets;
        for (auto i = alive_.find_first(); i != FaceMask::npos; i = alive_.find_next(i))
            sets.push_back(&parent_->face(i).vertices);
        std::sort(sets.begin(), sets.end(), [](auto a, auto b) { return lex_less(*a, *b); });
        std::size_t seed = sets.size();
        VertexSetHash h;
        for (auto s : sets) boost::hash_combine(seed, h(*s));
        return seed;
    }

    const FaceMask& alive_mask() const { return alive_; }

    friend bool operator==(const SubComplex& a, const SubComplex& b) {
        return a.parent_ == b.parent_ && a.alive_ == b.alive_;
    }

private:
    friend SubComplex delete_interval(const SubComplex&, VertexIndex, FaceId);
    friend SubComplex remove_faces(const SubComplex&, const std::vector<FaceId>&);

    std::shared_ptr<const FacePoset> parent_;
    FaceMask alive_;
};

inline SubComplex full_complex(FacePoset p) { return SubComplex(std::make_shared<const FacePoset>(std::move(p))); }

/// Alive faces containing vertex v.
inline std::vector<FaceId> upper_set(const SubComplex& c, VertexIndex v) {
    if (!c.vertex_alive(v)) throw VertexNotPresent("vertex " + std::to_string(v) + " is not in the complex");
    std::vector<FaceId> out;
    for (FaceId id : c.parent().faces_containing(v))
        if (c.alive(id)) out.push_back(id);
    return out;
}

/// The unique maximal element of upper_set(c, v), if one exists.
inline std::optional<FaceId> unique_maximal(const SubComplex& c, VertexIndex v) {
    auto up = upper_set(c, v);
    const FacePoset& p = c.parent();
    FaceId best = up.front();
    for (FaceId id : up)
        if (p.face(id).vertices.count() > p.face(best).vertices.count()) best = id;
    for (FaceId id : up)
        if (!p.leq(id, best)) return std::nullopt;
    return best;
}

/// Alive faces F with v in F and F contained in E.
inline std::vector<FaceId> interval(const SubComplex& c, VertexIndex v, FaceId e) {
    if (!c.vertex_alive(v)) throw VertexNotPresent("vertex " + std::to_string(v) + " is not in the complex");
    if (!c.alive(e)) throw FaceNotPresent("face " + std::to_string(e) + " is not in the complex");
    const FacePoset& p = c.parent();
    if (!p.face(e).vertices.test(v))
        throw NotComparable("vertex " + std::to_string(v) + " is not contained in face " + std::to_string(e));
    std::vector<FaceId> out;
    for (FaceId id : p.faces_containing(v))
        if (c.alive(id) && p.leq(id, e)) out.push_back(id);
    return out;
}

inline bool is_cone_pair(const SubComplex& c, VertexIndex v, FaceId e) {
    if (!c.vertex_alive(v)) return false;
    auto top = unique_maximal(c, v);
    return top && *top == e;
}

inline SubComplex remove_faces(const SubComplex& c, const std::vector<FaceId>& ids) {
    SubComplex out = c;
    for (FaceId id : ids) out.alive_.reset(id);
    return out;
}

/// c - [v, E]; (v, E) must be a cone-vertex pair of c.
inline SubComplex delete_interval(const SubComplex& c, VertexIndex v, FaceId e) {
    if (!is_cone_pair(c, v, e))
        throw NotAConeVertex("face " + std::to_string(e) + " is not the unique maximal face containing vertex " +
                             std::to_string(v));
    return remove_faces(c, interval(c, v, e));
}

inline FVector f_vector(const SubComplex& c) {
    FVector f;
    f.counts.assign(std::max(c.dim() + 1, 0), 0);
    for (FaceId id : c.alive_faces()) {
        int d = c.parent().face(id).dim;
        if (d >= 0) ++f.counts[d];
    }
    return f;
}

}  // namespace conic
