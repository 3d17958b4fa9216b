#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "conic/builders.hpp"
#include "conic/conic.hpp"
#include "conic/invariants.hpp"
#include "corpus.hpp"

using namespace conic;

namespace {

using Faces = std::set<std::vector<std::size_t>>;

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Counts conic sequences straight from the definition, on explicit sets of vertex
// sets and without memoisation. Only the simplex test of a cone base is needed:
// the interval [v, E] is a boolean lattice iff it has 2^(dim E) elements.
struct Oracle {
    std::map<std::vector<std::size_t>, int> dim;
    bool simplex_only = false;

    std::size_t count(const Faces& alive) {
        std::size_t vertices = 0;
        for (const auto& f : alive) vertices += f.size() == 1;
        if (vertices == 1 && alive.size() == 2) return 1;
        std::size_t total = 0;
        for (const auto& f : alive) {
            if (f.size() != 1) continue;
            const auto v = f[0];
            std::vector<std::vector<std::size_t>> up;
            for (const auto& g : alive)
                if (std::binary_search(g.begin(), g.end(), v)) up.push_back(g);
            std::vector<std::size_t> top = up.front();
            for (const auto& g : up)
                if (g.size() > top.size()) top = g;
            bool unique = true;
            for (const auto& g : up) unique = unique && subset(g, top);
            if (!unique) continue;
            if (simplex_only && up.size() != (std::size_t{1} << dim.at(top))) continue;
            Faces next = alive;
            for (const auto& g : up) next.erase(g);
            total += count(next);
        }
        return total;
    }
};

std::size_t oracle_count(const FacePoset& p, bool simplex_only) {
    Oracle o;
    o.simplex_only = simplex_only;
    Faces all;
    for (const auto& f : p.faces()) {
        auto s = indices_of(f.vertices);
        o.dim[s] = f.dim;
        all.insert(s);
    }
    return o.count(all);
}

std::shared_ptr<const FacePoset> lattice_of(const VRep& v) { return corpus::lattice(v); }

}  // namespace

TEST(ClassifyBase, KindsAndPrecedence) {
    EXPECT_EQ(classify_base(face_lattice_of(segment())), (BaseClass{BaseKind::Simplex, 1}));
    EXPECT_EQ(classify_base(face_lattice_of(simplex(3))), (BaseClass{BaseKind::Simplex, 3}));
    EXPECT_EQ(classify_base(face_lattice_of(polygon(4))), (BaseClass{BaseKind::Cube, 2}));
    EXPECT_EQ(classify_base(face_lattice_of(cube(3))), (BaseClass{BaseKind::Cube, 3}));
    EXPECT_EQ(classify_base(face_lattice_of(polygon(5))), (BaseClass{BaseKind::SimpleOther, 2}));
    EXPECT_EQ(classify_base(face_lattice_of(product(segment(), polygon(3)))), (BaseClass{BaseKind::SimpleOther, 3}));
    EXPECT_EQ(classify_base(face_lattice_of(cross_polytope(3))), (BaseClass{BaseKind::General, 3}));
    EXPECT_EQ(classify_base(point_lattice()), (BaseClass{BaseKind::Simplex, 0}));
}

TEST(Constraint, AcceptanceTable) {
    BaseClass pt{BaseKind::Simplex, 0}, seg{BaseKind::Simplex, 1}, tri{BaseKind::Simplex, 2};
    BaseClass sq{BaseKind::Cube, 2}, pent{BaseKind::SimpleOther, 2}, oct{BaseKind::General, 3};
    EXPECT_TRUE(accepts(SearchConstraint::AllCube, pt));
    EXPECT_TRUE(accepts(SearchConstraint::AllCube, seg));
    EXPECT_FALSE(accepts(SearchConstraint::AllCube, tri));
    EXPECT_TRUE(accepts(SearchConstraint::AllCube, sq));
    EXPECT_FALSE(accepts(SearchConstraint::AllSimplex, sq));
    EXPECT_TRUE(accepts(SearchConstraint::AllSimple, pent));
    EXPECT_FALSE(accepts(SearchConstraint::AllSimple, oct));
    EXPECT_TRUE(accepts(SearchConstraint::Any, oct));
}

TEST(Search, SquareFindsLexicographicallyFirstSequence) {
    auto p = lattice_of(polygon(4));
    auto r = search_conic(p, SearchConstraint::AllSimplex);
    ASSERT_EQ(r.outcome, SearchOutcome::Found);
    const auto& cert = *r.certificate;
    ASSERT_EQ(cert.steps.size(), 3u);
    EXPECT_EQ(cert.steps[0].vertex, 0u);
    EXPECT_EQ(cert.steps[0].max_face, *p->top());
    EXPECT_EQ(cert.steps[1].vertex, 1u);
    EXPECT_EQ(cert.steps[2].vertex, 2u);
    EXPECT_EQ(cert.terminal_vertex, 3u);
    EXPECT_TRUE(verify_certificate(*p, cert, SearchConstraint::AllSimplex));
    auto all = enumerate_all_sequences(*p, SearchConstraint::AllSimplex, 100);
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(all.front(), cert);
}

TEST(Enumerate, KnownCounts) {
    // square: 4 first vertices, then 2 ends of the 3-edge path, then 2 ends of the last edge
    EXPECT_EQ(enumerate_all_sequences(face_lattice_of(polygon(4)), SearchConstraint::Any, 1000).size(), 16u);
    EXPECT_EQ(enumerate_all_sequences(face_lattice_of(polygon(3)), SearchConstraint::AllSimplex, 1000).size(), 6u);
    EXPECT_TRUE(enumerate_all_sequences(face_lattice_of(cross_polytope(3)), SearchConstraint::Any, 1000).empty());
    EXPECT_EQ(enumerate_all_sequences(face_lattice_of(polygon(4)), SearchConstraint::Any, 3).size(), 3u);
    EXPECT_TRUE(enumerate_all_sequences(face_lattice_of(polygon(4)), SearchConstraint::Any, 0).empty());
}

TEST(Enumerate, MatchesDefinitionOracle) {
    for (const auto& e : corpus::polytopes()) {
        if (e.points.points.size() > 8) continue;
        auto p = face_lattice_of(e.points);
        for (bool simplex_only : {false, true}) {
            auto c = simplex_only ? SearchConstraint::AllSimplex : SearchConstraint::Any;
            EXPECT_EQ(enumerate_all_sequences(p, c, 1u << 20).size(), oracle_count(p, simplex_only))
                << e.name << " " << to_string(c);
        }
    }
}

TEST(Enumerate, FaceLimit) {
    auto p = face_lattice_of(cube(4));
    EXPECT_THROW(enumerate_all_sequences(p, SearchConstraint::Any, 10, "", 20), SizeLimitExceeded);
}

TEST(Search, VerdictAgreesWithEnumeration) {
    for (const auto& e : corpus::polytopes()) {
        if (e.points.points.size() > 10) continue;
        auto p = lattice_of(e.points);
        for (auto c : {SearchConstraint::Any, SearchConstraint::AllSimplex, SearchConstraint::AllCube,
                       SearchConstraint::AllSimple}) {
            auto r = search_conic(p, c);
            auto all = enumerate_all_sequences(*p, c, 1);
            EXPECT_EQ(r.outcome == SearchOutcome::Found, !all.empty()) << e.name << " " << to_string(c);
            if (r.certificate) {
                EXPECT_TRUE(verify_certificate(*p, *r.certificate, c)) << e.name;
                EXPECT_EQ(*r.certificate, all.front()) << e.name;
            }
        }
    }
}

TEST(Search, SimplePolytopesAreDeltaConic) {
    for (const auto& e : corpus::polytopes()) {
        auto p = lattice_of(e.points);
        bool simple = detail::is_simple(*p);
        if (!simple) continue;
        EXPECT_EQ(search_conic(p, SearchConstraint::AllSimplex).outcome, SearchOutcome::Found) << e.name;
    }
}

TEST(Search, DeltaConicDimensionMultisetIsSequenceIndependent) {
    for (const auto& e : corpus::polytopes()) {
        if (e.points.points.size() > 8) continue;
        auto p = face_lattice_of(e.points);
        auto all = enumerate_all_sequences(p, SearchConstraint::AllSimplex, 5000);
        std::set<std::vector<int>> dims;
        for (const auto& cert : all) {
            std::vector<int> d;
            for (const auto& s : cert.steps) d.push_back(s.base_class.dim);
            std::sort(d.begin(), d.end());
            dims.insert(d);
        }
        EXPECT_LE(dims.size(), 1u) << e.name;
    }
}

TEST(Search, BudgetGivesInconclusive) {
    auto p = lattice_of(bruhat_interval_polytope(Permutation::parse("1324"), Permutation::parse("4231")));
    SearchOptions o;
    o.budget = 2;
    auto r = search_conic(p, SearchConstraint::AllSimplex, o);
    EXPECT_EQ(r.outcome, SearchOutcome::Inconclusive);
    EXPECT_FALSE(r.certificate);
}

TEST(Search, ThreadedMatchesSequential) {
    for (const auto& e : corpus::polytopes()) {
        auto p = lattice_of(e.points);
        for (auto c : {SearchConstraint::Any, SearchConstraint::AllSimplex}) {
            SearchOptions o;
            o.threads = 3;
            auto a = search_conic(p, c);
            auto b = search_conic(p, c, o);
            EXPECT_EQ(a.outcome, b.outcome) << e.name;
            EXPECT_EQ(a.certificate, b.certificate) << e.name;
        }
    }
}

TEST(Search, PointIsTriviallyConic) {
    auto r = search_conic(point_lattice(), SearchConstraint::AllSimplex);
    ASSERT_EQ(r.outcome, SearchOutcome::Found);
    EXPECT_TRUE(r.certificate->steps.empty());
    EXPECT_EQ(r.certificate->terminal_vertex, 0u);
}

TEST(Verify, RejectsTamperedCertificates) {
    auto p = lattice_of(polygon(4));
    auto good = *search_conic(p, SearchConstraint::AllSimplex).certificate;
    ASSERT_TRUE(verify_certificate(*p, good, SearchConstraint::AllSimplex));

    auto wrong_class = good;
    wrong_class.steps[0].base_class = BaseClass{BaseKind::Cube, 1};
    auto v = verify_certificate(*p, wrong_class, SearchConstraint::Any);
    EXPECT_FALSE(v);
    EXPECT_EQ(v.failing_step, 1u);

    auto wrong_f = good;
    wrong_f.steps[1].base_f_vector.counts = {2};
    EXPECT_EQ(verify_certificate(*p, wrong_f, SearchConstraint::Any).failing_step, 2u);

    auto not_cone = good;
    std::swap(not_cone.steps[1], not_cone.steps[2]);  // p3 first: two maximal edges
    EXPECT_EQ(verify_certificate(*p, not_cone, SearchConstraint::Any).failing_step, 2u);

    auto bad_terminal = good;
    bad_terminal.terminal_vertex = 0;
    EXPECT_EQ(verify_certificate(*p, bad_terminal, SearchConstraint::Any).failing_step, 4u);

    auto short_cert = good;
    short_cert.steps.pop_back();
    EXPECT_FALSE(verify_certificate(*p, short_cert, SearchConstraint::Any));

    auto bad_face = good;
    bad_face.steps[0].max_face = p->size() + 3;
    EXPECT_EQ(verify_certificate(*p, bad_face, SearchConstraint::Any).failing_step, 1u);

    auto q = lattice_of(cube(3));
    auto cube_cert = *search_conic(q, SearchConstraint::Any).certificate;
    auto cv = verify_certificate(*q, cube_cert, SearchConstraint::AllCube);
    EXPECT_FALSE(cv);  // the first base is a triangle
    EXPECT_EQ(cv.failing_step, 1u);
}

TEST(Verify, RejectsNonMaximalFace) {
    auto p = lattice_of(polygon(3));
    auto cert = *search_conic(p, SearchConstraint::Any).certificate;
    // last step names the vertex itself instead of the edge above it
    ConicCertificate c = cert;
    c.steps.back().max_face = *p->vertex_face(c.steps.back().vertex);
    c.steps.back().base_class = BaseClass{BaseKind::Simplex, -1};
    c.steps.back().base_f_vector = FVector{};
    EXPECT_FALSE(verify_certificate(*p, c, SearchConstraint::Any));
}

TEST(Search, CubeConstraintOnCube) {
    // a cube vertex figure is a triangle, so no cube-based sequence starts anywhere
    auto p = lattice_of(cube(3));
    EXPECT_EQ(search_conic(p, SearchConstraint::AllCube).outcome, SearchOutcome::NotConic);
    EXPECT_EQ(search_conic(p, SearchConstraint::AllSimplex).outcome, SearchOutcome::Found);
}
