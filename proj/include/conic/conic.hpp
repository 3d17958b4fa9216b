#pragma once

// Conic sequences: iterated deletion of intervals [v, E] where E is the unique
// maximal face containing the cone vertex v, ending at a single vertex. Each
// deletion carries a cone base, the polytope whose face poset is the part of
// [v, E] strictly above v (dimensions shifted down by one).

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "conic/errors.hpp"
#include "conic/face_lattice.hpp"
#include "conic/isomorphism.hpp"

namespace conic {

enum class BaseKind { Simplex, Cube, SimpleOther, General };

struct BaseClass {
    BaseKind kind = BaseKind::General;
    int dim = 0;

    friend bool operator==(const BaseClass&, const BaseClass&) = default;
    friend auto operator<=>(const BaseClass&, const BaseClass&) = default;
};

inline std::string to_string(BaseKind k) {
    switch (k) {
        case BaseKind::Simplex: return "simplex";
        case BaseKind::Cube: return "cube";
        case BaseKind::SimpleOther: return "simple";
        case BaseKind::General: return "general";
    }
    return "general";
}

inline std::optional<BaseKind> parse_base_kind(const std::string& s) {
    if (s == "simplex") return BaseKind::Simplex;
    if (s == "cube") return BaseKind::Cube;
    if (s == "simple") return BaseKind::SimpleOther;
    if (s == "general") return BaseKind::General;
    return std::nullopt;
}

/// Short names used in reports: pt, I, I^d, D^d, S^d (other simple), G^d.
inline std::string short_name(const BaseClass& b) {
    switch (b.kind) {
        case BaseKind::Simplex:
            if (b.dim == 0) return "pt";
            if (b.dim == 1) return "I";
            return "D^" + std::to_string(b.dim);
        case BaseKind::Cube: return "I^" + std::to_string(b.dim);
        case BaseKind::SimpleOther: return "S^" + std::to_string(b.dim);
        case BaseKind::General: return "G^" + std::to_string(b.dim);
    }
    return "?";
}

struct ConicStep {
    VertexIndex vertex = 0;
    FaceId max_face = 0;
    BaseClass base_class;
    FVector base_f_vector;

    friend bool operator==(const ConicStep&, const ConicStep&) = default;
};

/// Steps in deletion order, then the vertex that remains.
struct ConicCertificate {
    std::string polytope_name;
    std::vector<ConicStep> steps;
    VertexIndex terminal_vertex = 0;

    friend bool operator==(const ConicCertificate&, const ConicCertificate&) = default;
};

enum class SearchConstraint { Any, AllSimplex, AllCube, AllSimple };

inline std::string to_string(SearchConstraint c) {
    switch (c) {
        case SearchConstraint::Any: return "any";
        case SearchConstraint::AllSimplex: return "simplex";
        case SearchConstraint::AllCube: return "cube";
        case SearchConstraint::AllSimple: return "simple";
    }
    return "any";
}

inline std::optional<SearchConstraint> parse_constraint(const std::string& s) {
    if (s == "any") return SearchConstraint::Any;
    if (s == "simplex") return SearchConstraint::AllSimplex;
    if (s == "cube") return SearchConstraint::AllCube;
    if (s == "simple") return SearchConstraint::AllSimple;
    return std::nullopt;
}

inline bool accepts(SearchConstraint c, const BaseClass& b) {
    switch (c) {
        case SearchConstraint::Any: return true;
        case SearchConstraint::AllSimplex: return b.kind == BaseKind::Simplex;
        case SearchConstraint::AllCube:
            return b.kind == BaseKind::Cube || (b.kind == BaseKind::Simplex && b.dim <= 1);
        case SearchConstraint::AllSimple: return b.kind != BaseKind::General;
    }
    return false;
}

/// Pairs (v, E) with E the unique maximal alive face containing v, by ascending v.
inline std::vector<std::pair<VertexIndex, FaceId>> cone_vertices(const SubComplex& c) {
    std::vector<std::pair<VertexIndex, FaceId>> out;
    for (VertexIndex v = 0; v < c.parent().n_vertices(); ++v) {
        if (!c.vertex_alive(v)) continue;
        if (auto e = unique_maximal(c, v)) out.emplace_back(v, *e);
    }
    return out;
}

/// The poset of faces strictly between v and E (inclusive of E) of a face poset,
/// dimensions lowered by one; atoms are the edges of E at v.
inline FacePoset interval_figure(const FacePoset& p, VertexIndex v, FaceId e) {
    std::vector<FaceId> members;
    for (FaceId id : p.faces_containing(v))
        if (p.leq(id, e)) members.push_back(id);
    std::vector<FaceId> edges;
    for (FaceId id : members)
        if (p.face(id).dim == 1) edges.push_back(id);
    std::vector<std::pair<VertexSet, int>> faces;
    for (FaceId id : members) {
        VertexSet s(edges.size());
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (p.leq(edges[k], id)) s.set(k);
        faces.emplace_back(std::move(s), p.face(id).dim - 1);
    }
    return FacePoset::from_faces(edges.size(), std::move(faces));
}

inline FacePoset vertex_figure_poset(const SubComplex& c, VertexIndex v, FaceId e) {
    if (!is_cone_pair(c, v, e))
        throw NotAConeVertex("face " + std::to_string(e) + " is not the unique maximal face containing vertex " +
                             std::to_string(v));
    return interval_figure(c.parent(), v, e);
}

/// Face lattice of the d-cube on vertices {0,1}^d (vertex index = binary code).
inline FacePoset cube_lattice(int d) {
    const std::size_t n = std::size_t{1} << d;
    std::vector<std::pair<VertexSet, int>> faces;
    // a face is a word in {0,1,*}^d; enumerate as base-3 numbers
    std::size_t words = 1;
    for (int i = 0; i < d; ++i) words *= 3;
    for (std::size_t w = 0; w < words; ++w) {
        std::size_t rest = w;
        std::size_t fixed_mask = 0, fixed_bits = 0;
        int stars = 0;
        for (int i = 0; i < d; ++i) {
            auto digit = rest % 3;
            rest /= 3;
            if (digit == 2) ++stars;
            else {
                fixed_mask |= std::size_t{1} << i;
                if (digit == 1) fixed_bits |= std::size_t{1} << i;
            }
        }
        VertexSet s(n);
        for (std::size_t x = 0; x < n; ++x)
            if ((x & fixed_mask) == fixed_bits) s.set(x);
        faces.emplace_back(std::move(s), stars);
    }
    return FacePoset::from_faces(n, std::move(faces));
}

namespace detail {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline bool is_simple(const FacePoset& b) {
    const int d = b.dim();
    const auto coatoms = b.coatoms();
    for (FaceId a : b.atoms()) {
        int below = 0;
        for (FaceId c : coatoms)
            if (b.leq(a, c)) ++below;
        if (below != d) return false;
    }
    return true;
}

}  // namespace detail

inline BaseClass classify_base(const FacePoset& b) {
    const int d = b.dim();
    if (d < 0) return {BaseKind::General, d};
    const auto atoms = b.atoms();
    if (atoms.size() == static_cast<std::size_t>(d) + 1 && d < 63 && b.size() == (std::size_t{1} << (d + 1)))
        return {BaseKind::Simplex, d};
    if (!detail::is_simple(b)) return {BaseKind::General, d};
    if (d < 16) {
        auto f = f_vector(b);
        bool cube_numbers = true;
        for (int k = 0; k <= d; ++k)
            if (f.counts[k] != detail::binomial(d, k) * (std::size_t{1} << (d - k))) cube_numbers = false;
        if (cube_numbers && poset_isomorphic(b, cube_lattice(d), std::max<std::size_t>(b.size(), 1)))
            return {BaseKind::Cube, d};
    }
    return {BaseKind::SimpleOther, d};
}

struct Verification {
    bool ok = true;
    std::optional<std::size_t> failing_step;  // 1-based; steps.size()+1 means the terminal state
    std::string diagnostic;

    explicit operator bool() const { return ok; }
};

/// Replays `cert` on the full complex of `p`.
inline Verification verify_certificate(const FacePoset& p, const ConicCertificate& cert,
                                       SearchConstraint constraint) {
    auto fail = [](std::size_t step, std::string why) { return Verification{false, step, std::move(why)}; };
    SubComplex c = full_complex(p);
    const FacePoset& lattice = c.parent();
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        const std::size_t step = i + 1;
        if (s.vertex >= lattice.n_vertices() || !c.vertex_alive(s.vertex))
            return fail(step, "vertex " + std::to_string(s.vertex) + " is not in the complex");
        if (s.max_face >= lattice.size() || !c.alive(s.max_face))
            return fail(step, "face " + std::to_string(s.max_face) + " is not in the complex");
        auto top = unique_maximal(c, s.vertex);
        if (!top)
            return fail(step, "vertex " + std::to_string(s.vertex) +
                                  " is not a cone vertex: its upper set has several maximal elements");
        if (*top != s.max_face)
            return fail(step, "the unique maximal face containing vertex " + std::to_string(s.vertex) + " is " +
                                  std::to_string(*top) + ", not " + std::to_string(s.max_face));
        if (lattice.face(s.max_face).dim < 1)
            return fail(step, "vertex " + std::to_string(s.vertex) + " is isolated; its cone base is empty");
        auto figure = interval_figure(lattice, s.vertex, s.max_face);
        auto base = classify_base(figure);
        auto base_f = f_vector(figure);
        if (base != s.base_class)
            return fail(step, "recorded base " + short_name(s.base_class) + " but the cone base is " +
                                  short_name(base));
        if (base_f != s.base_f_vector) return fail(step, "recorded base f-vector does not match the cone base");
        if (!accepts(constraint, base))
            return fail(step, "cone base " + short_name(base) + " is not allowed under constraint '" +
                                  to_string(constraint) + "'");
        SubComplex next = delete_interval(c, s.vertex, s.max_face);
        if (base.dim > next.dim())
            return fail(step, "cone base of dimension " + std::to_string(base.dim) +
                                  " exceeds the dimension of the remaining complex");
        c = std::move(next);
    }
    const std::size_t terminal_step = cert.steps.size() + 1;
    if (cert.terminal_vertex >= lattice.n_vertices() || !c.vertex_alive(cert.terminal_vertex))
        return fail(terminal_step, "terminal vertex " + std::to_string(cert.terminal_vertex) + " is not in the complex");
    if (c.alive_faces().size() != 2)
        return fail(terminal_step, "the sequence ends with " + std::to_string(c.alive_vertex_count()) +
                                       " vertices instead of one");
    return {};
}

enum class SearchOutcome { Found, NotConic, Inconclusive };

inline std::string to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::NotConic: return "not_conic";
        case SearchOutcome::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::NotConic;
    std::optional<ConicCertificate> certificate;
    std::size_t nodes = 0;  // states expanded
};

struct SearchOptions {
    std::optional<std::size_t> budget;  // node limit; unlimited when empty
    unsigned threads = 1;               // top-level branches searched concurrently (ignored with a budget)
    std::string name;                   // copied into the certificate
};

namespace detail {

struct BaseInfo {
    BaseClass base;
    FVector f;
};

/// Depth-first search over cone-vertex choices in ascending vertex order, with a
/// table of states proven to have no completion under the active constraint.
class ConicSearcher {
public:
    ConicSearcher(std::shared_ptr<const FacePoset> p, SearchConstraint constraint, std::optional<std::size_t> budget)
        : poset_(std::move(p)), constraint_(constraint), budget_(budget) {}

    /// Legal next moves from c under the constraint, in exploration order.
    std::vector<std::pair<ConicStep, SubComplex>> moves(const SubComplex& c) {
        std::vector<std::pair<ConicStep, SubComplex>> out;
        for (auto [v, e] : cone_vertices(c)) {
            // deleting an isolated vertex lowers the Euler characteristic for good;
            // no such state can end at a single vertex
            if (poset_->face(e).dim < 1) continue;
            const BaseInfo& info = base(v, e);
            if (!accepts(constraint_, info.base)) continue;
            SubComplex next = remove_faces(c, interval(c, v, e));
            if (info.base.dim > next.dim()) continue;
            out.emplace_back(ConicStep{v, e, info.base, info.f}, std::move(next));
        }
        return out;
    }

    /// Extends `path` to a full sequence from c, if possible.
    bool find(const SubComplex& c, std::vector<ConicStep>& path, VertexIndex& terminal) {
        if (c.alive_faces().size() == 2) {
            terminal = c.alive_vertices().find_first();
            return true;
        }
        if (dead_.contains(c.alive_mask())) return false;
        if (budget_ && nodes_ >= *budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        for (auto& [step, next] : moves(c)) {
            path.push_back(step);
            if (find(next, path, terminal)) return true;
            path.pop_back();
            if (exhausted_) return false;
        }
        dead_.insert(c.alive_mask());
        return false;
    }

    /// Appends every completion of `path` from c (lexicographic by vertex), up to `limit` in total.
    bool enumerate(const SubComplex& c, std::vector<ConicStep>& path, std::vector<ConicCertificate>& out,
                   std::size_t limit, const std::string& name) {
        if (out.size() >= limit) return true;
        if (c.alive_faces().size() == 2) {
            out.push_back(ConicCertificate{name, path, c.alive_vertices().find_first()});
            return true;
        }
        if (dead_.contains(c.alive_mask())) return false;
        ++nodes_;
        bool any = false;
        for (auto& [step, next] : moves(c)) {
            path.push_back(step);
            if (enumerate(next, path, out, limit, name)) any = true;
            path.pop_back();
            if (out.size() >= limit) return true;
        }
        if (!any) dead_.insert(c.alive_mask());
        return any;
    }

    bool exhausted() const { return exhausted_; }
    std::size_t nodes() const { return nodes_; }

private:
    const BaseInfo& base(VertexIndex v, FaceId e) {
        auto key = std::make_pair(v, e);
        auto it = bases_.find(key);
        if (it == bases_.end()) {
            auto figure = interval_figure(*poset_, v, e);
            it = bases_.emplace(key, BaseInfo{classify_base(figure), f_vector(figure)}).first;
        }
        return it->second;
    }

    std::shared_ptr<const FacePoset> poset_;
    SearchConstraint constraint_;
    std::optional<std::size_t> budget_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
    std::unordered_set<FaceMask, VertexSetHash> dead_;
    std::map<std::pair<VertexIndex, FaceId>, BaseInfo> bases_;
};

}  // namespace detail

/// Finds the lexicographically first conic sequence satisfying `constraint`.
inline SearchResult search_conic(std::shared_ptr<const FacePoset> p, SearchConstraint constraint,
                                 const SearchOptions& options = {}) {
    SubComplex root(p);
    SearchResult result;

    if (options.threads <= 1 || options.budget) {
        detail::ConicSearcher searcher(p, constraint, options.budget);
        std::vector<ConicStep> path;
        VertexIndex terminal = 0;
        bool found = searcher.find(root, path, terminal);
        result.nodes = searcher.nodes();
        if (found) {
            result.outcome = SearchOutcome::Found;
            result.certificate = ConicCertificate{options.name, std::move(path), terminal};
        } else {
            result.outcome = searcher.exhausted() ? SearchOutcome::Inconclusive : SearchOutcome::NotConic;
        }
        return result;
    }

    // Concurrent mode: each top-level move is searched by its own worker with its own
    // table; the first successful move in exploration order wins, as in the sequential run.
    if (root.alive_faces().size() == 2) {
        result.outcome = SearchOutcome::Found;
        result.certificate = ConicCertificate{options.name, {}, root.alive_vertices().find_first()};
        return result;
    }
    detail::ConicSearcher planner(p, constraint, std::nullopt);
    auto moves = planner.moves(root);
    result.nodes = 1;
    for (std::size_t batch = 0; batch < moves.size(); batch += options.threads) {
        const std::size_t end = std::min(moves.size(), batch + options.threads);
        struct BranchResult {
            bool found = false;
            std::vector<ConicStep> path;
            VertexIndex terminal = 0;
            std::size_t nodes = 0;
        };
        std::vector<std::future<BranchResult>> futures;
        for (std::size_t i = batch; i < end; ++i) {
            futures.push_back(std::async(std::launch::async, [&, i] {
                detail::ConicSearcher worker(p, constraint, std::nullopt);
                BranchResult r;
                r.path.push_back(moves[i].first);
                r.found = worker.find(moves[i].second, r.path, r.terminal);
                r.nodes = worker.nodes();
                return r;
            }));
        }
        std::optional<BranchResult> winner;
        for (auto& f : futures) {
            auto r = f.get();
            result.nodes += r.nodes;
            if (r.found && !winner) winner = std::move(r);
        }
        if (winner) {
            result.outcome = SearchOutcome::Found;
            result.certificate = ConicCertificate{options.name, std::move(winner->path), winner->terminal};
            return result;
        }
    }
    result.outcome = SearchOutcome::NotConic;
    return result;
}

inline SearchResult search_conic(const FacePoset& p, SearchConstraint constraint, const SearchOptions& options = {}) {
    return search_conic(std::make_shared<const FacePoset>(p), constraint, options);
}

inline constexpr std::size_t kDefaultEnumerationFaceLimit = 400;

/// Every conic sequence under `constraint`, in lexicographic order of vertex choices,
/// stopping after `limit` sequences.
inline std::vector<ConicCertificate> enumerate_all_sequences(const FacePoset& p, SearchConstraint constraint,
                                                             std::size_t limit, const std::string& name = {},
                                                             std::size_t face_limit = kDefaultEnumerationFaceLimit) {
    if (p.size() > face_limit)
        throw SizeLimitExceeded("face lattice with " + std::to_string(p.size()) +
                                " elements exceeds the enumeration bound " + std::to_string(face_limit));
    auto shared = std::make_shared<const FacePoset>(p);
    detail::ConicSearcher searcher(shared, constraint, std::nullopt);
    std::vector<ConicCertificate> out;
    std::vector<ConicStep> path;
    if (limit > 0) searcher.enumerate(SubComplex(shared), path, out, limit, name);
    return out;
}

/// Cone bases of a certificate, sorted.
inline std::vector<BaseClass> base_multiset(const ConicCertificate& cert) {
    std::vector<BaseClass> out;
    for (const auto& s : cert.steps) out.push_back(s.base_class);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace conic
