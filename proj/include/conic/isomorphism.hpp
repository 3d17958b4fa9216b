#pragma once

// Order isomorphism of face posets. Both posets are atomistic (a face is its set
// of atoms), so an isomorphism is the same thing as a bijection of atoms that
// carries faces onto faces. Atoms are first partitioned by colour refinement on
// the atom/face incidence graph, then matched by backtracking within colours.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "conic/errors.hpp"
#include "conic/face_lattice.hpp"

namespace conic {

inline constexpr std::size_t kDefaultIsomorphismLimit = 256;

namespace detail {

struct AtomView {
    std::vector<FaceId> atoms;                    // atom face ids
    std::vector<std::size_t> atom_of_vertex;      // vertex index -> atom position
    std::vector<std::vector<std::size_t>> faces;  // each face as atom positions
    std::vector<int> face_dim;
    std::vector<std::vector<std::size_t>> faces_of_atom;
};

inline AtomView atom_view(const FacePoset& p) {
    AtomView v;
    v.atoms = p.atoms();
    v.atom_of_vertex.assign(p.n_vertices(), SIZE_MAX);
    for (std::size_t i = 0; i < v.atoms.size(); ++i)
        v.atom_of_vertex[p.face(v.atoms[i]).vertices.find_first()] = i;
    v.faces_of_atom.assign(v.atoms.size(), {});
    for (const auto& f : p.faces()) {
        std::vector<std::size_t> members;
        for (auto x : indices_of(f.vertices)) members.push_back(v.atom_of_vertex[x]);
        for (auto a : members) v.faces_of_atom[a].push_back(v.faces.size());
        v.faces.push_back(std::move(members));
        v.face_dim.push_back(f.dim);
    }
    return v;
}

/// Joint colour refinement of two atom views. Returns stable atom colours per view.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const AtomView& a,
                                                                                  const AtomView& b) {
    const AtomView* views[2] = {&a, &b};
    std::vector<std::size_t> atom_col[2], face_col[2];
    for (int k = 0; k < 2; ++k) {
        atom_col[k].assign(views[k]->atoms.size(), 0);
        face_col[k].resize(views[k]->faces.size());
        for (std::size_t f = 0; f < views[k]->faces.size(); ++f)
            face_col[k][f] = static_cast<std::size_t>(views[k]->face_dim[f] + 1);
    }
    std::size_t classes = 0;
    for (int round = 0; round < 64; ++round) {
        std::map<std::vector<std::size_t>, std::size_t> palette;
        std::vector<std::size_t> next_atom[2], next_face[2];
        for (int k = 0; k < 2; ++k) {
            for (std::size_t x = 0; x < views[k]->atoms.size(); ++x) {
                std::vector<std::size_t> sig{0, atom_col[k][x]};
                std::vector<std::size_t> nb;
                for (auto f : views[k]->faces_of_atom[x]) nb.push_back(face_col[k][f]);
                std::sort(nb.begin(), nb.end());
                sig.insert(sig.end(), nb.begin(), nb.end());
                next_atom[k].push_back(palette.emplace(sig, palette.size()).first->second);
            }
            for (std::size_t f = 0; f < views[k]->faces.size(); ++f) {
                std::vector<std::size_t> sig{1, face_col[k][f]};
                std::vector<std::size_t> nb;
                for (auto x : views[k]->faces[f]) nb.push_back(atom_col[k][x]);
                std::sort(nb.begin(), nb.end());
                sig.insert(sig.end(), nb.begin(), nb.end());
                next_face[k].push_back(palette.emplace(sig, palette.size()).first->second);
            }
        }
        for (int k = 0; k < 2; ++k) {
            atom_col[k] = std::move(next_atom[k]);
            face_col[k] = std::move(next_face[k]);
        }
        if (palette.size() == classes) break;
        classes = palette.size();
    }
    return {atom_col[0], atom_col[1]};
}

struct FaceKeyHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const {
        std::size_t seed = v.size();
        boost::hash_range(seed, v.begin(), v.end());
        return seed;
    }
};

}  // namespace detail

/// An atom bijection realising an isomorphism a -> b, as a map from atom positions of a
/// (ascending vertex order) to atom positions of b; nullopt if none exists.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const FacePoset& a, const FacePoset& b,
                                                               std::size_t limit = kDefaultIsomorphismLimit) {
    if (a.size() > limit || b.size() > limit)
        throw SizeLimitExceeded("poset with " + std::to_string(std::max(a.size(), b.size())) +
                                " elements exceeds the isomorphism bound " + std::to_string(limit));
    if (a.size() != b.size() || f_vector(a) != f_vector(b) || a.dim() != b.dim()) return std::nullopt;

    auto va = detail::atom_view(a);
    auto vb = detail::atom_view(b);
    if (va.atoms.size() != vb.atoms.size()) return std::nullopt;
    const std::size_t n = va.atoms.size();

    auto [ca, cb] = detail::refine_colours(va, vb);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::unordered_set<std::vector<std::size_t>, detail::FaceKeyHash> faces_b;
    for (auto f : vb.faces) {
        std::sort(f.begin(), f.end());
        faces_b.insert(std::move(f));
    }

    // assignment order: breadth-first over shared faces, so small faces complete early
    std::vector<std::size_t> order;
    std::vector<bool> queued(n, false);
    while (order.size() < n) {
        std::size_t start = 0;
        while (queued[start]) ++start;
        queued[start] = true;
        std::size_t head = order.size();
        order.push_back(start);
        while (head < order.size()) {
            auto x = order[head++];
            std::vector<std::pair<std::size_t, std::size_t>> next;  // (face size, atom)
            for (auto f : va.faces_of_atom[x])
                for (auto y : va.faces[f])
                    if (!queued[y]) next.emplace_back(va.faces[f].size(), y);
            std::sort(next.begin(), next.end());
            for (auto [sz, y] : next) {
                if (!queued[y]) {
                    queued[y] = true;
                    order.push_back(y);
                }
            }
        }
    }
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    // faces of a that become fully assigned at each step
    std::vector<std::vector<std::size_t>> completes(n);
    for (std::size_t f = 0; f < va.faces.size(); ++f) {
        if (va.faces[f].empty()) continue;
        std::size_t last = 0;
        for (auto x : va.faces[f]) last = std::max(last, position[x]);
        completes[last].push_back(f);
    }

    std::vector<std::size_t> image(n, SIZE_MAX);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> key;

    auto consistent = [&](std::size_t step) {
        for (auto f : completes[step]) {
            key.clear();
            for (auto x : va.faces[f]) key.push_back(image[x]);
            std::sort(key.begin(), key.end());
            if (!faces_b.contains(key)) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t step) -> bool {
        if (step == n) return true;
        const auto x = order[step];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || cb[y] != ca[x]) continue;
            image[x] = y;
            used[y] = true;
            if (consistent(step) && self(self, step + 1)) return true;
            used[y] = false;
            image[x] = SIZE_MAX;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return image;
}

inline bool poset_isomorphic(const FacePoset& a, const FacePoset& b,
                             std::size_t limit = kDefaultIsomorphismLimit) {
    return find_isomorphism(a, b, limit).has_value();
}

}  // namespace conic
