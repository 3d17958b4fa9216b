#include <gtest/gtest.h>

#include "conic/builders.hpp"
#include "conic/invariants.hpp"
#include "corpus.hpp"

using namespace conic;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

Integer choose(unsigned n, unsigned k) {
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

FVector fv(std::initializer_list<std::size_t> xs) { return FVector{std::vector<std::size_t>(xs)}; }

}  // namespace

TEST(Polynomial, ArithmeticAndRendering) {
    auto p = IntPolynomial(ints({1, 2}));  // 1 + 2x
    auto q = IntPolynomial::linear(-1);    // x - 1
    EXPECT_EQ((p * q).coeffs(), ints({-1, -1, 2}));
    EXPECT_EQ(p.compose(q).coeffs(), ints({-1, 2}));
    EXPECT_EQ(q.pow(3).coeffs(), ints({-1, 3, -3, 1}));
    EXPECT_EQ(p.evaluate(5), Integer(11));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(IntPolynomial(ints({16, 28, 14, 1})).to_string(), "16 + 28x + 14x^2 + x^3");
    EXPECT_EQ(IntPolynomial(ints({1, 0, -1})).to_string("t"), "1 - t^2");
}

TEST(HVector, KnownValues) {
    EXPECT_EQ(h_vector(fv({4, 6, 4, 1})).entries, ints({1, 1, 1, 1}));
    EXPECT_EQ(h_vector(fv({8, 12, 6, 1})).entries, ints({1, 3, 3, 1}));
    EXPECT_EQ(h_vector(fv({6, 12, 8, 1})).entries, ints({1, -1, 5, 1}));
    EXPECT_EQ(h_vector(fv({16, 28, 14, 1})).entries, ints({1, 3, 11, 1}));
    EXPECT_EQ(h_vector(fv({7, 11, 6, 1})).entries, ints({1, 2, 3, 1}));
}

TEST(HVector, RoundTripOnCorpus) {
    for (const auto& e : corpus::polytopes()) {
        auto f = f_vector(face_lattice_of(e.points));
        EXPECT_EQ(f_from_h(h_vector(f)), f) << e.name;
    }
}

TEST(HVector, NecessaryConditionIsOnlyNecessary) {
    EXPECT_FALSE(delta_conic_necessary(fv({6, 12, 8, 1})));   // octahedron
    EXPECT_TRUE(delta_conic_necessary(fv({16, 28, 14, 1})));  // holds, yet no simplex-based sequence exists
    EXPECT_TRUE(delta_conic_necessary(fv({8, 12, 6, 1})));
}

TEST(GeneratingIdentities, SimplexAndCubeCones) {
    const auto one = IntPolynomial::constant(1);
    const auto x = IntPolynomial::monomial(1, 1);
    for (unsigned d = 1; d <= 5; ++d) {
        // (x+1)^d and 1 + x(x+2)^(d-1), coefficient by coefficient from binomials
        std::vector<Integer> simplex_side(d + 1), cube_side(d + 1);
        for (unsigned k = 0; k <= d; ++k) simplex_side[k] = choose(d, k);
        cube_side[0] = 1;
        for (unsigned k = 1; k <= d; ++k) cube_side[k] = choose(d - 1, k - 1) * (Integer(1) << (d - k));
        auto phi_simplex = d == 1 ? one : generating_function(f_vector(face_lattice_of(simplex(d - 1))));
        auto phi_cube = d == 1 ? one : generating_function(f_vector(face_lattice_of(cube(d - 1))));
        EXPECT_EQ((one + x * phi_simplex).coeffs(), simplex_side) << d;
        EXPECT_EQ((one + x * phi_cube).coeffs(), cube_side) << d;
    }
}

TEST(FaceCountIdentity, HoldsForEveryEnumeratedSequence) {
    for (const auto& e : corpus::polytopes()) {
        if (e.points.points.size() > 8) continue;
        auto p = face_lattice_of(e.points);
        auto f = f_vector(p);
        for (const auto& cert : enumerate_all_sequences(p, SearchConstraint::Any, 2000))
            EXPECT_TRUE(check_face_count_identity(cert, f)) << e.name;
    }
}

TEST(FaceCountIdentity, DetectsWrongFVector) {
    auto p = face_lattice_of(polygon(4));
    auto cert = *search_conic(p, SearchConstraint::Any).certificate;
    EXPECT_TRUE(check_face_count_identity(cert, fv({4, 4, 1})));
    EXPECT_FALSE(check_face_count_identity(cert, fv({4, 5, 1})));
}

TEST(HFromCertificate, EqualsHVectorForDeltaConic) {
    for (const auto& e : corpus::polytopes()) {
        auto p = corpus::lattice(e.points);
        auto r = search_conic(p, SearchConstraint::AllSimplex);
        if (r.outcome != SearchOutcome::Found) continue;
        EXPECT_EQ(h_from_certificate(*r.certificate), h_vector(f_vector(*p))) << e.name;
    }
}

TEST(HFromCertificate, ErrorsForWrongBases) {
    auto q = corpus::lattice(bruhat_interval_polytope(Permutation::parse("1324"), Permutation::parse("4231")));
    auto cube_cert = *search_conic(q, SearchConstraint::AllCube).certificate;
    EXPECT_THROW(h_from_certificate(cube_cert), NotDeltaConic);
    auto c = corpus::lattice(cube(3));
    auto simplex_cert = *search_conic(c, SearchConstraint::AllSimplex).certificate;
    EXPECT_THROW(h_square_from_certificate(simplex_cert), NotCubeConic);
}

TEST(CubeSum, ReproducesGeneratingFunction) {
    auto q = corpus::lattice(bruhat_interval_polytope(Permutation::parse("1324"), Permutation::parse("4231")));
    auto cert = *search_conic(q, SearchConstraint::AllCube).certificate;
    auto hs = h_square_from_certificate(cert);
    EXPECT_EQ(hs.entries, ints({1, 4, 10, 1}));
    EXPECT_EQ(cube_sum(hs), generating_function(f_vector(*q)));
}

TEST(Poincare, CubeAndMismatchedWitness) {
    auto c = corpus::lattice(cube(3));
    auto f = f_vector(*c);
    auto cert = *search_conic(c, SearchConstraint::AllSimplex).certificate;
    EXPECT_EQ(poincare_polynomial(f, cert).coeffs(), ints({1, 0, 3, 0, 3, 0, 1}));
    auto t = corpus::lattice(simplex(3));
    auto other = *search_conic(t, SearchConstraint::AllSimplex).certificate;
    EXPECT_THROW(poincare_polynomial(f, other), InconsistentWitness);
    auto s = corpus::lattice(polygon(5));
    auto simple_cert = *search_conic(s, SearchConstraint::Any).certificate;
    EXPECT_NO_THROW(poincare_polynomial(f_vector(*s), simple_cert));
}

TEST(Poincare, EvenCoefficientsAreTheHVector) {
    for (const auto& e : corpus::polytopes()) {
        auto p = corpus::lattice(e.points);
        auto r = search_conic(p, SearchConstraint::AllSimplex);
        if (r.outcome != SearchOutcome::Found) continue;
        auto f = f_vector(*p);
        auto poin = poincare_polynomial(f, *r.certificate);
        auto h = h_vector(f);
        for (std::size_t j = 0; j < h.entries.size(); ++j) EXPECT_EQ(poin.coeff(2 * j), h.entries[j]) << e.name;
    }
}

TEST(Cohomology, BipyramidOverTriangle) {
    auto p = corpus::lattice(bipyramid(simplex(2)));
    auto f = f_vector(*p);
    auto cert = *search_conic(p, SearchConstraint::AllSimple).certificate;
    auto rep = cohomology_report(f, cert);
    EXPECT_EQ(rep.complex_dim, 6u);
    EXPECT_EQ(rep.at(5).status, DegreeStatus::Zero);
    EXPECT_EQ(rep.at(5).citation, Citation::SimpleBasesOddVanishing);
    EXPECT_EQ(rep.at(3).status, DegreeStatus::Undetermined);
    EXPECT_FALSE(rep.at(3).citation);
    EXPECT_EQ(rep.at(1).status, DegreeStatus::Zero);
    EXPECT_EQ(rep.at(0).status, DegreeStatus::Betti);
    EXPECT_EQ(rep.at(0).value, Integer(1));
}

TEST(Cohomology, WithoutCertificateOnlyLowDegrees) {
    auto rep = cohomology_report(fv({6, 12, 8, 1}), std::nullopt);
    EXPECT_EQ(rep.at(0).citation, Citation::Connected);
    EXPECT_EQ(rep.at(1).citation, Citation::SimplyConnected);
    for (int d = 2; d <= 6; ++d) EXPECT_EQ(rep.at(d).status, DegreeStatus::Undetermined);
}

TEST(Cohomology, DeltaConicHasNoUndeterminedDegrees) {
    for (const auto& e : corpus::polytopes()) {
        auto p = corpus::lattice(e.points);
        auto r = search_conic(p, SearchConstraint::AllSimplex);
        if (r.outcome != SearchOutcome::Found) continue;
        auto f = f_vector(*p);
        auto rep = cohomology_report(f, r.certificate);
        auto h = h_vector(f);
        for (const auto& d : rep.degrees) {
            EXPECT_NE(d.status, DegreeStatus::Undetermined) << e.name << " H^" << d.degree;
            if (d.degree % 2 == 0) EXPECT_EQ(d.value, h.entries[d.degree / 2]) << e.name;
        }
    }
}
