#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "conic/builders.hpp"
#include "conic/face_lattice.hpp"
#include "corpus.hpp"

using namespace conic;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::size_t> fvec(const VRep& v) { return f_vector(face_lattice_of(v)).counts; }

using Perm = std::vector<unsigned>;

Perm compose_swap(Perm p, std::size_t i) {
    std::swap(p[i], p[i + 1]);  // right multiplication by s_i
    return p;
}

// All permutations below w in Bruhat order, as products of subwords of one reduced
// word of w.
std::set<Perm> subword_lower_set(const Perm& w) {
    // reduced word by bubble sort: each adjacent swap removes one inversion
    std::vector<std::size_t> word;
    Perm cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                word.push_back(i);
                changed = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());  // w = identity * s_{word[0]} * ...
    std::set<Perm> out;
    Perm id(w.size());
    std::iota(id.begin(), id.end(), 1u);
    for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
        Perm p = id;
        for (std::size_t j = 0; j < word.size(); ++j)
            if ((mask >> j) & 1u) p = compose_swap(p, word[j]);
        out.insert(p);
    }
    return out;
}

std::vector<Perm> all_perms(unsigned n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1u);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST(Builders, SimplexFVectors) {
    for (std::size_t d = 1; d <= 5; ++d) {
        auto f = fvec(simplex(d));
        for (std::size_t k = 0; k <= d; ++k) EXPECT_EQ(f[k], choose(d + 1, k + 1)) << d << " " << k;
    }
}

TEST(Builders, CubeFVectors) {
    for (std::size_t d = 1; d <= 4; ++d) {
        auto f = fvec(cube(d));
        for (std::size_t k = 0; k <= d; ++k) EXPECT_EQ(f[k], choose(d, k) << (d - k)) << d << " " << k;
    }
}

TEST(Builders, CrossPolytopeFVectors) {
    for (std::size_t d = 2; d <= 4; ++d) {
        auto f = fvec(cross_polytope(d));
        for (std::size_t k = 0; k < d; ++k) EXPECT_EQ(f[k], choose(d, k + 1) << (k + 1)) << d << " " << k;
        EXPECT_EQ(f[d], 1u);
    }
}

TEST(Builders, PolygonsSegmentAndPyramids) {
    for (std::size_t k = 3; k <= 10; ++k) EXPECT_EQ(fvec(polygon(k)), (std::vector<std::size_t>{k, k, 1}));
    EXPECT_EQ(fvec(segment()), (std::vector<std::size_t>{2, 1}));
    for (std::size_t k = 3; k <= 6; ++k) {
        auto base = fvec(polygon(k));
        auto pyr = fvec(pyramid(polygon(k)));
        // f_j(pyr) = f_j(base) + f_{j-1}(base), with f_{-1} = 1
        EXPECT_EQ(pyr, (std::vector<std::size_t>{base[0] + 1, base[1] + base[0], base[2] + base[1], 1}));
        EXPECT_EQ(fvec(bipyramid(polygon(k))), (std::vector<std::size_t>{k + 2, 3 * k, 2 * k, 1}));
    }
    EXPECT_EQ(fvec(pyramid(segment())), (std::vector<std::size_t>{3, 3, 1}));
    EXPECT_THROW(bipyramid(VRep(2, {Point{1, 1}})), DegenerateInput);
}

TEST(Builders, PyramidOverEmbeddedBase) {
    // a triangle sitting in 3-space gives a tetrahedron
    VRep tri(3, {Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}});
    EXPECT_EQ(fvec(pyramid(tri)), (std::vector<std::size_t>{4, 6, 4, 1}));
}

TEST(Builders, ProductFVectorIsConvolution) {
    std::vector<VRep> factors{segment(), polygon(3), polygon(4), simplex(2), cube(2)};
    for (const auto& a : factors) {
        for (const auto& b : factors) {
            auto fa = fvec(a), fb = fvec(b);
            auto fp = fvec(product(a, b));
            ASSERT_EQ(fp.size(), fa.size() + fb.size() - 1);
            for (std::size_t k = 0; k < fp.size(); ++k) {
                std::size_t sum = 0;
                for (std::size_t i = 0; i <= k; ++i)
                    if (i < fa.size() && k - i < fb.size()) sum += fa[i] * fb[k - i];
                EXPECT_EQ(fp[k], sum);
            }
        }
    }
}

TEST(Builders, ProductVertexOrder) {
    auto p = product(segment(), polygon(3));
    ASSERT_EQ(p.points.size(), 6u);
    EXPECT_EQ(p.points[1], (Point{0, 1, 1}));  // (segment 0, polygon 1)
    EXPECT_EQ(p.points[3], (Point{1, 0, 0}));
}

TEST(Builders, DimensionRangeErrors) {
    EXPECT_THROW(simplex(0), DimensionOutOfRange);
    EXPECT_THROW(simplex(7), DimensionOutOfRange);
    EXPECT_THROW(cube(0), DimensionOutOfRange);
    EXPECT_THROW(cross_polytope(7), DimensionOutOfRange);
    EXPECT_THROW(polygon(2), DimensionOutOfRange);
}

TEST(Bruhat, TableauCriterionMatchesSubwordOracle) {
    for (unsigned n = 2; n <= 4; ++n) {
        auto perms = all_perms(n);
        for (const auto& w : perms) {
            auto lower = subword_lower_set(w);
            for (const auto& u : perms)
                EXPECT_EQ(bruhat_leq(Permutation(u), Permutation(w)), lower.contains(u))
                    << Permutation(u).str() << " vs " << Permutation(w).str();
        }
    }
}

TEST(Bruhat, IntervalPolytopes) {
    auto q = bruhat_interval_polytope(Permutation::parse("1324"), Permutation::parse("4231"));
    EXPECT_EQ(q.points.size(), 16u);
    EXPECT_EQ(fvec(q), (std::vector<std::size_t>{16, 28, 14, 1}));
    auto perm3 = bruhat_interval_polytope(Permutation::parse("123"), Permutation::parse("321"));
    EXPECT_EQ(fvec(perm3), (std::vector<std::size_t>{6, 6, 1}));
    auto perm4 = bruhat_interval_polytope(Permutation::parse("1234"), Permutation::parse("4321"));
    EXPECT_EQ(fvec(perm4), (std::vector<std::size_t>{24, 36, 14, 1}));
    EXPECT_TRUE(std::is_sorted(q.points.begin(), q.points.end()));
}

TEST(Bruhat, Errors) {
    EXPECT_THROW(bruhat_leq(Permutation::parse("12"), Permutation::parse("123")), SizeMismatch);
    EXPECT_THROW(bruhat_interval_polytope(Permutation::parse("213"), Permutation::parse("132")), NotComparable);
    EXPECT_THROW(bruhat_interval_polytope(Permutation::parse("123456"), Permutation::parse("654321")),
                 DimensionOutOfRange);
    EXPECT_THROW(Permutation::parse("1224"), DegenerateInput);
    EXPECT_THROW(Permutation::parse("12a"), ParseError);
    EXPECT_EQ(Permutation::parse("1,3,2").str(), "132");
}

TEST(GelfandZetlin, SevenVerticesAndFaceNumbers) {
    auto v = vertex_enumerate(gelfand_zetlin_3());
    EXPECT_EQ(v.points.size(), 7u);
    EXPECT_EQ(fvec(v), (std::vector<std::size_t>{7, 11, 6, 1}));
}
