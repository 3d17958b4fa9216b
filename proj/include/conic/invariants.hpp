#pragma once

// Polynomial invariants attached to face numbers and conic sequences: the face
// generating function, h- and cube h-vectors, Poincare polynomials of the
// associated toric variety and per-degree cohomology reports.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conic/conic.hpp"
#include "conic/errors.hpp"
#include "conic/face_lattice.hpp"
#include "conic/polynomial.hpp"

namespace conic {

struct HVector {
    std::vector<Integer> entries;
    friend bool operator==(const HVector&, const HVector&) = default;
};

struct HSquareVector {
    std::vector<Integer> entries;
    friend bool operator==(const HSquareVector&, const HSquareVector&) = default;
};

/// sum_j f_j x^j
inline IntPolynomial generating_function(const FVector& f) { return IntPolynomial::from(f.counts); }

/// 1 + sum over steps of (1 + x * Phi_{C}(x)), from the recorded base f-vectors.
inline IntPolynomial face_count_sum(const ConicCertificate& cert) {
    IntPolynomial sum = IntPolynomial::constant(1);
    const auto x = IntPolynomial::monomial(1, 1);
    for (const auto& s : cert.steps)
        sum += IntPolynomial::constant(1) + x * generating_function(s.base_f_vector);
    return sum;
}

/// True iff the face numbers of the polytope decompose along the certificate's cone bases.
inline bool check_face_count_identity(const ConicCertificate& cert, const FVector& f) {
    return face_count_sum(cert) == generating_function(f);
}

/// h with sum_k f_k (x-1)^k = sum_k h_k x^k.
inline HVector h_vector(const FVector& f) {
    auto h = generating_function(f).compose(IntPolynomial::linear(-1));
    HVector out;
    out.entries.assign(f.counts.size(), Integer(0));
    for (std::size_t k = 0; k < out.entries.size(); ++k) out.entries[k] = h.coeff(k);
    return out;
}

/// Inverse of h_vector: f with sum_k f_k x^k = sum_k h_k (x+1)^k.
inline FVector f_from_h(const HVector& h) {
    auto f = IntPolynomial(h.entries).compose(IntPolynomial::linear(1));
    FVector out;
    out.counts.assign(h.entries.size(), 0);
    for (std::size_t k = 0; k < out.counts.size(); ++k) {
        Integer c = f.coeff(k);
        if (c < 0) throw InconsistentWitness("h-vector maps to a negative face number");
        out.counts[k] = static_cast<std::size_t>(c);
    }
    return out;
}

/// Necessary condition for a simplex-based conic sequence: h_k >= 1 for k = 1..dim.
/// false certifies that no such sequence exists; true proves nothing.
inline bool delta_conic_necessary(const FVector& f) {
    auto h = h_vector(f);
    for (std::size_t k = 1; k < h.entries.size(); ++k)
        if (h.entries[k] < 1) return false;
    return true;
}

namespace detail {

inline std::size_t vector_length(const ConicCertificate& cert) {
    int max_dim = -1;
    for (const auto& s : cert.steps) max_dim = std::max(max_dim, s.base_class.dim);
    return static_cast<std::size_t>(max_dim + 2);
}

}  // namespace detail

/// h_0 = 1 and h_k = number of steps whose base is the (k-1)-simplex.
inline HVector h_from_certificate(const ConicCertificate& cert) {
    HVector h;
    h.entries.assign(detail::vector_length(cert), Integer(0));
    h.entries[0] = 1;
    for (const auto& s : cert.steps) {
        if (s.base_class.kind != BaseKind::Simplex)
            throw NotDeltaConic("cone base " + short_name(s.base_class) + " is not a simplex");
        h.entries[s.base_class.dim + 1] += 1;
    }
    return h;
}

/// h_0 = 1 and h_k = number of steps whose base is the (k-1)-cube (pt and I count as cubes).
inline HSquareVector h_square_from_certificate(const ConicCertificate& cert) {
    HSquareVector h;
    h.entries.assign(detail::vector_length(cert), Integer(0));
    h.entries[0] = 1;
    for (const auto& s : cert.steps) {
        if (!accepts(SearchConstraint::AllCube, s.base_class))
            throw NotCubeConic("cone base " + short_name(s.base_class) + " is not a cube");
        h.entries[s.base_class.dim + 1] += 1;
    }
    return h;
}

/// 1 + sum_{k>=1} h_k (1 + x (x+2)^{k-1})
inline IntPolynomial cube_sum(const HSquareVector& h) {
    IntPolynomial sum = IntPolynomial::constant(1);
    const auto x = IntPolynomial::monomial(1, 1);
    for (std::size_t k = 1; k < h.entries.size(); ++k) {
        auto term = IntPolynomial::constant(1) + x * IntPolynomial::linear(2).pow(static_cast<unsigned>(k - 1));
        sum += IntPolynomial::constant(h.entries[k]) * term;
    }
    return sum;
}

/// sum_k f_k (t^2 - 1)^k, checked against the Betti counts read off a simplex-based witness.
inline IntPolynomial poincare_polynomial(const FVector& f, const ConicCertificate& witness) {
    HVector betti;
    try {
        betti = h_from_certificate(witness);
    } catch (const NotDeltaConic& e) {
        throw InconsistentWitness(std::string("witness is not simplex-based: ") + e.what());
    }
    const auto t2_minus_1 = IntPolynomial(std::vector<Integer>{-1, 0, 1});
    auto poin = generating_function(f).compose(t2_minus_1);
    for (std::size_t k = 0; k < poin.coeffs().size(); ++k) {
        const Integer& c = poin.coeffs()[k];
        if (k % 2 == 1 && c != 0)
            throw InconsistentWitness("odd coefficient of t^" + std::to_string(k) + " is nonzero");
        if (c < 0) throw InconsistentWitness("coefficient of t^" + std::to_string(k) + " is negative");
    }
    for (std::size_t j = 0; 2 * j < poin.coeffs().size() || j < betti.entries.size(); ++j) {
        Integer from_witness = j < betti.entries.size() ? betti.entries[j] : Integer(0);
        if (poin.coeff(2 * j) != from_witness)
            throw InconsistentWitness("coefficient of t^" + std::to_string(2 * j) + " is " +
                                      poin.coeff(2 * j).str() + " but the witness has " + from_witness.str() +
                                      " bases of dimension " + std::to_string(static_cast<long>(j) - 1));
    }
    return poin;
}

enum class Citation {
    Connected,                 // a toric variety is connected
    SimplyConnected,           // a projective toric variety is simply connected
    SimpleBasesOddVanishing,   // simple cone bases: odd cohomology vanishes above half the real dimension
    SimplexBasesOddVanishing,  // simplex cone bases: all odd cohomology vanishes
    SimplexBasesBetti,         // simplex cone bases: Poincare polynomial from the f-vector
};

inline std::string to_string(Citation c) {
    switch (c) {
        case Citation::Connected: return "connected";
        case Citation::SimplyConnected: return "simply-connected";
        case Citation::SimpleBasesOddVanishing: return "simple-bases-odd-vanishing-above-half";
        case Citation::SimplexBasesOddVanishing: return "simplex-bases-odd-vanishing";
        case Citation::SimplexBasesBetti: return "simplex-bases-betti-from-f-vector";
    }
    return "";
}

enum class DegreeStatus { Zero, Betti, Undetermined };

inline std::string to_string(DegreeStatus s) {
    switch (s) {
        case DegreeStatus::Zero: return "zero";
        case DegreeStatus::Betti: return "betti";
        case DegreeStatus::Undetermined: return "undetermined";
    }
    return "";
}

struct DegreeEntry {
    int degree = 0;
    DegreeStatus status = DegreeStatus::Undetermined;
    Integer value = 0;  // the Betti number when status is Betti (0 when Zero)
    std::optional<Citation> citation;

    friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};

/// Rational cohomology of the toric variety of a polytope, degree by degree.
struct CohomologyReport {
    std::size_t complex_dim = 0;  // real dimension 2n
    std::vector<DegreeEntry> degrees;

    const DegreeEntry& at(int degree) const { return degrees.at(static_cast<std::size_t>(degree)); }

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

/// `cert`, when given, must already be verified against the polytope with face numbers f.
inline CohomologyReport cohomology_report(const FVector& f, const std::optional<ConicCertificate>& cert) {
    const int n = f.dim();
    CohomologyReport report;
    report.complex_dim = static_cast<std::size_t>(2 * std::max(n, 0));
    for (int d = 0; d <= 2 * std::max(n, 0); ++d) report.degrees.push_back(DegreeEntry{d, DegreeStatus::Undetermined, 0, std::nullopt});

    auto set = [&](int d, DegreeStatus s, Integer value, Citation c) {
        auto& e = report.degrees[static_cast<std::size_t>(d)];
        e.status = s;
        e.value = std::move(value);
        e.citation = c;
    };

    if (cert) {
        bool all_simple = true, all_simplex = true;
        for (const auto& s : cert->steps) {
            all_simple = all_simple && accepts(SearchConstraint::AllSimple, s.base_class);
            all_simplex = all_simplex && accepts(SearchConstraint::AllSimplex, s.base_class);
        }
        if (all_simple) {
            for (int d = 1; d <= 2 * n; d += 2)
                if (d > n) set(d, DegreeStatus::Zero, 0, Citation::SimpleBasesOddVanishing);
        }
        if (all_simplex) {
            auto poin = poincare_polynomial(f, *cert);
            for (int d = 0; d <= 2 * n; ++d) {
                if (d % 2 == 1) set(d, DegreeStatus::Zero, 0, Citation::SimplexBasesOddVanishing);
                else set(d, DegreeStatus::Betti, poin.coeff(static_cast<std::size_t>(d)), Citation::SimplexBasesBetti);
            }
        }
    }
    set(0, DegreeStatus::Betti, 1, Citation::Connected);
    if (n >= 1) set(1, DegreeStatus::Zero, 0, Citation::SimplyConnected);
    return report;
}

}  // namespace conic
