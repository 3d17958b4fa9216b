#pragma once

// Full analysis of one polytope: face numbers, polynomial invariants, search
// verdicts under every constraint and the cohomology table. Rendered as JSON
// (keys sorted) or as plain text in the order f, Phi, h, verdicts, cohomology.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conic/conic.hpp"
#include "conic/invariants.hpp"
#include "conic/io.hpp"
#include "conic/polynomial.hpp"

namespace conic {

struct Verdict {
    SearchConstraint constraint = SearchConstraint::Any;
    SearchOutcome outcome = SearchOutcome::NotConic;
    std::vector<std::string> bases;  // short names of the witness's cone bases, in step order

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct AnalysisReport {
    std::string name;
    std::vector<std::size_t> f_vector;
    IntPolynomial generating_function;
    HVector h_vector;
    bool delta_necessary = false;
    std::vector<Verdict> verdicts;  // any, simplex, cube, simple
    std::optional<HSquareVector> h_square;
    std::optional<IntPolynomial> poincare;
    CohomologyReport cohomology;
    std::vector<std::string> warnings;

    const Verdict& verdict(SearchConstraint c) const {
        for (const auto& v : verdicts)
            if (v.constraint == c) return v;
        throw std::out_of_range("no verdict for constraint " + to_string(c));
    }

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline constexpr SearchConstraint kAllConstraints[] = {SearchConstraint::Any, SearchConstraint::AllSimplex,
                                                       SearchConstraint::AllCube, SearchConstraint::AllSimple};

namespace detail {

inline bool is_gz3_face_count(const FVector& f) { return f.counts == std::vector<std::size_t>{7, 11, 6, 1}; }

}  // namespace detail

inline AnalysisReport analyze(std::shared_ptr<const FacePoset> p, const std::string& name,
                              std::vector<std::string> warnings = {}, const SearchOptions& options = {}) {
    AnalysisReport r;
    r.name = name;
    const FVector f = f_vector(*p);
    r.f_vector = f.counts;
    r.generating_function = generating_function(f);
    r.h_vector = h_vector(f);
    r.delta_necessary = delta_conic_necessary(f);

    std::map<SearchConstraint, ConicCertificate> found;
    for (auto c : kAllConstraints) {
        Verdict v{c, SearchOutcome::NotConic, {}};
        if (c == SearchConstraint::AllSimplex && !r.delta_necessary) {
            v.outcome = SearchOutcome::NotConic;  // some h_k < 1 rules out every simplex-based sequence
        } else {
            SearchOptions o = options;
            o.name = name;
            auto result = search_conic(p, c, o);
            v.outcome = result.outcome;
            if (result.certificate) {
                for (const auto& s : result.certificate->steps) v.bases.push_back(short_name(s.base_class));
                found.emplace(c, *result.certificate);
            }
        }
        r.verdicts.push_back(std::move(v));
    }

    if (auto it = found.find(SearchConstraint::AllCube); it != found.end())
        r.h_square = h_square_from_certificate(it->second);

    std::optional<ConicCertificate> witness;
    if (auto it = found.find(SearchConstraint::AllSimplex); it != found.end()) {
        witness = it->second;
        r.poincare = poincare_polynomial(f, it->second);
    } else if (auto it2 = found.find(SearchConstraint::AllSimple); it2 != found.end()) {
        witness = it2->second;
    }
    r.cohomology = cohomology_report(f, witness);

    if (r.poincare && detail::is_gz3_face_count(f))
        warnings.push_back("typo note: for f = (7, 11, 6, 1) the expansion of sum f_k (t^2-1)^k is " +
                           r.poincare->to_string("t") +
                           "; a printed form with a t^3 term cannot be right since odd coefficients vanish");
    r.warnings = std::move(warnings);
    return r;
}

namespace io {

namespace detail {

inline json integer_list(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(integer_json(z));
    return out;
}

inline std::vector<Integer> parse_integer_list(const json& j, const std::string& path) {
    require_array(j, path);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_integer(j[i], child(path, i)));
    return out;
}

inline std::optional<SearchOutcome> parse_outcome(const std::string& s) {
    for (auto o : {SearchOutcome::Found, SearchOutcome::NotConic, SearchOutcome::Inconclusive})
        if (to_string(o) == s) return o;
    return std::nullopt;
}

inline std::optional<Citation> parse_citation(const std::string& s) {
    for (auto c : {Citation::Connected, Citation::SimplyConnected, Citation::SimpleBasesOddVanishing,
                   Citation::SimplexBasesOddVanishing, Citation::SimplexBasesBetti})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

inline std::optional<DegreeStatus> parse_status(const std::string& s) {
    for (auto d : {DegreeStatus::Zero, DegreeStatus::Betti, DegreeStatus::Undetermined})
        if (to_string(d) == s) return d;
    return std::nullopt;
}

}  // namespace detail

inline json to_json(const AnalysisReport& r) {
    using detail::integer_list;
    json verdicts = json::object();
    for (const auto& v : r.verdicts)
        verdicts[to_string(v.constraint)] = json{{"outcome", to_string(v.outcome)}, {"bases", v.bases}};
    json degrees = json::array();
    for (const auto& d : r.cohomology.degrees) {
        json e{{"degree", d.degree}, {"status", to_string(d.status)}};
        if (d.status == DegreeStatus::Betti) e["value"] = detail::integer_json(d.value);
        if (d.citation) e["citation"] = to_string(*d.citation);
        degrees.push_back(std::move(e));
    }
    json j{{"format_version", kFormatVersion},
           {"name", r.name},
           {"f_vector", r.f_vector},
           {"generating_function", integer_list(r.generating_function.coeffs())},
           {"h_vector", integer_list(r.h_vector.entries)},
           {"delta_necessary", r.delta_necessary},
           {"verdicts", verdicts},
           {"cohomology", json{{"complex_dim", r.cohomology.complex_dim}, {"degrees", degrees}}},
           {"warnings", r.warnings}};
    j["h_square"] = r.h_square ? integer_list(r.h_square->entries) : json(nullptr);
    j["poincare"] = r.poincare ? integer_list(r.poincare->coeffs()) : json(nullptr);
    return j;
}

inline AnalysisReport report_from_json(const json& j) {
    using namespace detail;
    if (!j.is_object()) throw SchemaError("/", "expected an object");
    check_version(j, "");
    AnalysisReport r;
    r.name = as_string(require(j, "name", ""), "/name");
    const auto& f = require_array(require(j, "f_vector", ""), "/f_vector");
    for (std::size_t i = 0; i < f.size(); ++i) r.f_vector.push_back(as_natural(f[i], child("/f_vector", i)));
    r.generating_function =
        IntPolynomial(parse_integer_list(require(j, "generating_function", ""), "/generating_function"));
    r.h_vector.entries = parse_integer_list(require(j, "h_vector", ""), "/h_vector");
    const json& dn = require(j, "delta_necessary", "");
    if (!dn.is_boolean()) throw SchemaError("/delta_necessary", "expected a boolean");
    r.delta_necessary = dn.get<bool>();

    const json& verdicts = require(j, "verdicts", "");
    for (auto c : kAllConstraints) {
        const std::string path = "/verdicts/" + to_string(c);
        const json& v = require(verdicts, to_string(c), "/verdicts");
        auto text = as_string(require(v, "outcome", path), path + "/outcome");
        auto outcome = parse_outcome(text);
        if (!outcome) throw SchemaError(path + "/outcome", "unknown outcome '" + text + "'");
        Verdict verdict{c, *outcome, {}};
        const auto& bases = require_array(require(v, "bases", path), path + "/bases");
        for (std::size_t i = 0; i < bases.size(); ++i)
            verdict.bases.push_back(as_string(bases[i], child(path + "/bases", i)));
        r.verdicts.push_back(std::move(verdict));
    }

    const json& hs = require(j, "h_square", "");
    if (!hs.is_null()) r.h_square = HSquareVector{parse_integer_list(hs, "/h_square")};
    const json& poin = require(j, "poincare", "");
    if (!poin.is_null()) r.poincare = IntPolynomial(parse_integer_list(poin, "/poincare"));

    const json& coh = require(j, "cohomology", "");
    r.cohomology.complex_dim = as_natural(require(coh, "complex_dim", "/cohomology"), "/cohomology/complex_dim");
    const auto& degrees = require_array(require(coh, "degrees", "/cohomology"), "/cohomology/degrees");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::string path = child("/cohomology/degrees", i);
        DegreeEntry e;
        e.degree = static_cast<int>(as_natural(require(degrees[i], "degree", path), path + "/degree"));
        auto st = as_string(require(degrees[i], "status", path), path + "/status");
        auto status = parse_status(st);
        if (!status) throw SchemaError(path + "/status", "unknown status '" + st + "'");
        e.status = *status;
        if (degrees[i].contains("value")) e.value = as_integer(degrees[i]["value"], path + "/value");
        if (degrees[i].contains("citation")) {
            auto ct = as_string(degrees[i]["citation"], path + "/citation");
            auto citation = parse_citation(ct);
            if (!citation) throw SchemaError(path + "/citation", "unknown citation '" + ct + "'");
            e.citation = *citation;
        }
        r.cohomology.degrees.push_back(std::move(e));
    }
    const auto& warnings = require_array(require(j, "warnings", ""), "/warnings");
    for (std::size_t i = 0; i < warnings.size(); ++i) r.warnings.push_back(as_string(warnings[i], child("/warnings", i)));
    return r;
}

inline AnalysisReport parse_report(std::string_view text) { return report_from_json(detail::parse_json(text)); }

inline std::string emit_report(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

inline std::string render_text(const AnalysisReport& r) {
    auto tuple = [](const auto& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) s += ", ";
            if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, Integer>) s += v[i].str();
            else s += std::to_string(v[i]);
        }
        return s + ")";
    };
    std::ostringstream out;
    out << "polytope: " << r.name << "\n";
    out << "f-vector: " << tuple(r.f_vector) << "\n";
    out << "Phi(x) = " << r.generating_function.to_string("x") << "\n";
    out << "h-vector: " << tuple(r.h_vector.entries) << "\n";
    out << "delta-conic necessary condition: " << (r.delta_necessary ? "holds" : "fails") << "\n";
    out << "verdicts:\n";
    for (const auto& v : r.verdicts) {
        out << "  " << to_string(v.constraint) << ": " << to_string(v.outcome);
        if (!v.bases.empty()) {
            out << " [";
            for (std::size_t i = 0; i < v.bases.size(); ++i) out << (i ? " " : "") << v.bases[i];
            out << "]";
        }
        out << "\n";
    }
    if (r.h_square) out << "h-square: " << tuple(r.h_square->entries) << "\n";
    if (r.poincare) out << "Poincare(t) = " << r.poincare->to_string("t") << "\n";
    out << "cohomology (real dimension " << r.cohomology.complex_dim << "):\n";
    for (const auto& d : r.cohomology.degrees) {
        out << "  H^" << d.degree << ": " << to_string(d.status);
        if (d.status == DegreeStatus::Betti) out << " " << d.value.str();
        if (d.citation) out << "  (" << to_string(*d.citation) << ")";
        out << "\n";
    }
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    return out.str();
}

}  // namespace io

}  // namespace conic
