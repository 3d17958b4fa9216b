#pragma once

// Shared test corpus: small named polytopes built from the builders module.

#include <memory>
#include <string>
#include <vector>

#include "conic/builders.hpp"
#include "conic/face_lattice.hpp"
#include "conic/geometry.hpp"

namespace corpus {

struct Entry {
    std::string name;
    conic::VRep points;
};

inline std::vector<Entry> polytopes() {
    using namespace conic;
    std::vector<Entry> out;
    auto add = [&](VRep v) {
        std::string name = v.name.value_or("polytope");
        out.push_back({std::move(name), std::move(v)});
    };
    add(segment());
    for (std::size_t d = 2; d <= 4; ++d) add(simplex(d));
    for (std::size_t d = 2; d <= 4; ++d) add(cube(d));
    add(cross_polytope(3));
    for (std::size_t k = 3; k <= 8; ++k) add(polygon(k));
    add(product(segment(), polygon(3)));
    add(product(segment(), polygon(4)));
    add(product(segment(), polygon(5)));
    add(pyramid(polygon(4)));
    add(pyramid(polygon(5)));
    for (std::size_t k = 4; k <= 6; ++k) add(bipyramid(polygon(k)));
    add(bipyramid(simplex(2)));
    add(bruhat_interval_polytope(Permutation::parse("123"), Permutation::parse("321")));
    add(bruhat_interval_polytope(Permutation::parse("1324"), Permutation::parse("4231")));
    add(bruhat_interval_polytope(Permutation::parse("1234"), Permutation::parse("2413")));
    auto gz = vertex_enumerate(gelfand_zetlin_3());
    gz.name = "GZ3";
    add(std::move(gz));
    return out;
}

inline std::shared_ptr<const conic::FacePoset> lattice(const conic::VRep& v) {
    return std::make_shared<const conic::FacePoset>(conic::face_lattice_of(v));
}

/// Every coordinate multiplied by q.
inline conic::VRep scaled(const conic::VRep& v, const conic::Rational& q) {
    std::vector<conic::Point> pts = v.points;
    for (auto& p : pts)
        for (auto& x : p) x *= q;
    return conic::VRep(v.ambient_dim, std::move(pts), v.name);
}

}  // namespace corpus
