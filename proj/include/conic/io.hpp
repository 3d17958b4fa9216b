#pragma once

// JSON documents: polytopes (vertex, inequality or incidence form) and conic
// certificates. Rationals and big integers travel as strings; faces travel as
// sorted vertex-index lists so documents stay valid across lattice rebuilds.

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conic/conic.hpp"
#include "conic/errors.hpp"
#include "conic/face_lattice.hpp"
#include "conic/geometry.hpp"
#include "conic/rational.hpp"

namespace conic::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

struct PolytopeDocument {
    std::string name;
    std::variant<VRep, HRep, IncidenceMatrix> body;

    friend bool operator==(const PolytopeDocument& a, const PolytopeDocument& b) {
        if (a.name != b.name || a.body.index() != b.body.index()) return false;
        if (auto* v = std::get_if<VRep>(&a.body)) {
            const auto& w = std::get<VRep>(b.body);
            return v->ambient_dim == w.ambient_dim && v->points == w.points;
        }
        if (auto* h = std::get_if<HRep>(&a.body)) return *h == std::get<HRep>(b.body);
        return std::get<IncidenceMatrix>(a.body) == std::get<IncidenceMatrix>(b.body);
    }
};

struct CertificateStepDocument {
    VertexIndex vertex = 0;
    std::vector<VertexIndex> max_face_vertices;
    BaseClass base_class;
    std::vector<std::size_t> base_f_vector;

    friend bool operator==(const CertificateStepDocument&, const CertificateStepDocument&) = default;
};

struct CertificateDocument {
    std::string polytope_name;
    SearchConstraint constraint = SearchConstraint::Any;
    std::vector<CertificateStepDocument> steps;
    VertexIndex terminal_vertex = 0;

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

namespace detail {

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

inline const json& require(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(child(path, key), "missing required field");
    return *it;
}

inline const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    return j;
}

inline std::size_t as_natural(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw SchemaError(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
}

/// Integers may be JSON integers or decimal strings.
inline Integer as_integer(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    throw SchemaError(path, "expected an integer or an integer string");
}

/// Rationals may be JSON integers or "p" / "p/q" strings; floating point is rejected.
inline Rational as_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    throw SchemaError(path, "expected a rational string \"p/q\" or an integer");
}

/// Small values as JSON integers, anything outside int64 as a string.
inline json integer_json(const Integer& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(z));
    return json(z.str());
}

inline void check_version(const json& j, const std::string& path) {
    auto it = j.find("format_version");
    if (it == j.end()) return;
    if (!it->is_number_integer() || it->get<int>() != kFormatVersion)
        throw SchemaError(child(path, "format_version"), "unsupported format version");
}

inline json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline LinearConstraint parse_constraint_row(const json& j, std::size_t dim, const std::string& path) {
    LinearConstraint c;
    const auto& normal = require_array(require(j, "normal", path), child(path, "normal"));
    if (normal.size() != dim)
        throw SchemaError(child(path, "normal"), "expected " + std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < normal.size(); ++k)
        c.normal.push_back(as_integer(normal[k], child(child(path, "normal"), k)));
    c.bound = as_integer(require(j, "bound", path), child(path, "bound"));
    return c;
}

inline json constraint_row_json(const LinearConstraint& c) {
    json normal = json::array();
    for (const auto& z : c.normal) normal.push_back(z.str());
    return json{{"normal", normal}, {"bound", c.bound.str()}};
}

}  // namespace detail

inline PolytopeDocument polytope_from_json(const json& j) {
    using namespace detail;
    if (!j.is_object()) throw SchemaError("/", "expected an object");
    check_version(j, "");
    PolytopeDocument doc;
    doc.name = as_string(require(j, "name", ""), "/name");

    int present = 0;
    for (const char* key : {"vrep", "hrep", "incidence"}) present += j.contains(key) ? 1 : 0;
    if (present != 1)
        throw SchemaError("/", "exactly one of 'vrep', 'hrep', 'incidence' must be present, found " +
                                   std::to_string(present));

    if (j.contains("vrep")) {
        const json& v = j["vrep"];
        const std::string path = "/vrep";
        std::size_t dim = as_natural(require(v, "ambient_dim", path), path + "/ambient_dim");
        const auto& verts = require_array(require(v, "vertices", path), path + "/vertices");
        std::vector<Point> pts;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const std::string pp = child(path + "/vertices", i);
            require_array(verts[i], pp);
            if (verts[i].size() != dim) throw SchemaError(pp, "expected " + std::to_string(dim) + " coordinates");
            Point p;
            for (std::size_t k = 0; k < dim; ++k) p.push_back(as_rational(verts[i][k], child(pp, k)));
            pts.push_back(std::move(p));
        }
        if (pts.empty()) throw SchemaError(path + "/vertices", "at least one vertex is required");
        try {
            doc.body = VRep(dim, std::move(pts), doc.name);
        } catch (const DegenerateInput& e) {
            throw SchemaError(path + "/vertices", e.what());
        }
    } else if (j.contains("hrep")) {
        const json& h = j["hrep"];
        const std::string path = "/hrep";
        HRep rep;
        rep.ambient_dim = as_natural(require(h, "ambient_dim", path), path + "/ambient_dim");
        const auto& ineq = require_array(require(h, "inequalities", path), path + "/inequalities");
        for (std::size_t i = 0; i < ineq.size(); ++i)
            rep.inequalities.push_back(parse_constraint_row(ineq[i], rep.ambient_dim, child(path + "/inequalities", i)));
        if (h.contains("equalities")) {
            const auto& eq = require_array(h["equalities"], path + "/equalities");
            for (std::size_t i = 0; i < eq.size(); ++i)
                rep.equalities.push_back(parse_constraint_row(eq[i], rep.ambient_dim, child(path + "/equalities", i)));
        }
        doc.body = std::move(rep);
    } else {
        const json& inc = j["incidence"];
        const std::string path = "/incidence";
        IncidenceMatrix m;
        m.n_vertices = as_natural(require(inc, "n_vertices", path), path + "/n_vertices");
        m.dim = as_natural(require(inc, "dim", path), path + "/dim");
        const auto& facets = require_array(require(inc, "facets", path), path + "/facets");
        for (std::size_t i = 0; i < facets.size(); ++i) {
            const std::string fp = child(path + "/facets", i);
            require_array(facets[i], fp);
            std::vector<VertexIndex> f;
            for (std::size_t k = 0; k < facets[i].size(); ++k) {
                auto v = as_natural(facets[i][k], child(fp, k));
                if (v >= m.n_vertices) throw SchemaError(child(fp, k), "vertex index out of range");
                f.push_back(v);
            }
            m.facets.push_back(std::move(f));
        }
        doc.body = std::move(m);
    }
    return doc;
}

inline PolytopeDocument parse_polytope(std::string_view text) { return polytope_from_json(detail::parse_json(text)); }

inline json to_json(const PolytopeDocument& doc) {
    json j;
    j["format_version"] = kFormatVersion;
    j["name"] = doc.name;
    if (auto* v = std::get_if<VRep>(&doc.body)) {
        json verts = json::array();
        for (const auto& p : v->points) {
            json row = json::array();
            for (const auto& x : p) row.push_back(to_string(x));
            verts.push_back(std::move(row));
        }
        j["vrep"] = json{{"ambient_dim", v->ambient_dim}, {"vertices", verts}};
    } else if (auto* h = std::get_if<HRep>(&doc.body)) {
        json ineq = json::array(), eq = json::array();
        for (const auto& c : h->inequalities) ineq.push_back(detail::constraint_row_json(c));
        for (const auto& c : h->equalities) eq.push_back(detail::constraint_row_json(c));
        j["hrep"] = json{{"ambient_dim", h->ambient_dim}, {"inequalities", ineq}, {"equalities", eq}};
    } else {
        const auto& m = std::get<IncidenceMatrix>(doc.body);
        j["incidence"] = json{{"n_vertices", m.n_vertices}, {"dim", m.dim}, {"facets", m.facets}};
    }
    return j;
}

inline std::string emit_polytope(const PolytopeDocument& doc) { return to_json(doc).dump(2) + "\n"; }

/// A polytope document turned into its face lattice.
struct LoadedPolytope {
    std::string name;
    std::shared_ptr<const FacePoset> lattice;
    std::optional<VRep> vertices;  // extreme points in lattice vertex order, when known
    std::vector<std::string> warnings;
};

inline LoadedPolytope load(const PolytopeDocument& doc) {
    LoadedPolytope out;
    out.name = doc.name;
    auto from_points = [&](const VRep& v) {
        if (v.points.size() == 1) {
            out.lattice = std::make_shared<const FacePoset>(point_lattice());
            out.vertices = v;
            return;
        }
        auto hull = facet_enumerate(v);
        for (auto i : hull.dropped)
            out.warnings.push_back("input point " + std::to_string(i) + " is not a vertex of the hull and was dropped");
        std::vector<Point> kept;
        for (auto i : hull.vertices) kept.push_back(v.points[i]);
        out.vertices = VRep(v.ambient_dim, std::move(kept), doc.name);
        out.lattice = std::make_shared<const FacePoset>(build_face_lattice(hull.incidence));
    };
    if (auto* v = std::get_if<VRep>(&doc.body)) from_points(*v);
    else if (auto* h = std::get_if<HRep>(&doc.body)) from_points(vertex_enumerate(*h));
    else out.lattice = std::make_shared<const FacePoset>(build_face_lattice(std::get<IncidenceMatrix>(doc.body)));
    return out;
}

// ---- certificates ----

inline CertificateDocument to_document(const FacePoset& p, const ConicCertificate& cert, SearchConstraint constraint) {
    CertificateDocument doc;
    doc.polytope_name = cert.polytope_name;
    doc.constraint = constraint;
    doc.terminal_vertex = cert.terminal_vertex;
    for (const auto& s : cert.steps) {
        CertificateStepDocument d;
        d.vertex = s.vertex;
        d.max_face_vertices = indices_of(p.face(s.max_face).vertices);
        d.base_class = s.base_class;
        d.base_f_vector = s.base_f_vector.counts;
        doc.steps.push_back(std::move(d));
    }
    return doc;
}

/// Resolves vertex sets against `p`. A vertex set that is not a face maps to an
/// out-of-range face id, which verification then rejects.
inline ConicCertificate from_document(const FacePoset& p, const CertificateDocument& doc) {
    ConicCertificate cert;
    cert.polytope_name = doc.polytope_name;
    cert.terminal_vertex = doc.terminal_vertex;
    for (const auto& d : doc.steps) {
        ConicStep s;
        s.vertex = d.vertex;
        bool in_range = true;
        for (auto v : d.max_face_vertices) in_range = in_range && v < p.n_vertices();
        std::optional<FaceId> id;
        if (in_range) id = p.find(make_vertex_set(p.n_vertices(), d.max_face_vertices));
        s.max_face = id.value_or(p.size());
        s.base_class = d.base_class;
        s.base_f_vector.counts = d.base_f_vector;
        cert.steps.push_back(std::move(s));
    }
    return cert;
}

inline json to_json(const CertificateDocument& doc) {
    json steps = json::array();
    for (const auto& s : doc.steps) {
        steps.push_back(json{{"vertex", s.vertex},
                             {"max_face_vertices", s.max_face_vertices},
                             {"base_class", json{{"tag", to_string(s.base_class.kind)}, {"dim", s.base_class.dim}}},
                             {"base_f_vector", s.base_f_vector}});
    }
    return json{{"format_version", kFormatVersion},
                {"polytope_name", doc.polytope_name},
                {"constraint", to_string(doc.constraint)},
                {"steps", steps},
                {"terminal_vertex", doc.terminal_vertex}};
}

inline CertificateDocument certificate_from_json(const json& j) {
    using namespace detail;
    if (!j.is_object()) throw SchemaError("/", "expected an object");
    check_version(j, "");
    CertificateDocument doc;
    doc.polytope_name = as_string(require(j, "polytope_name", ""), "/polytope_name");
    auto con = as_string(require(j, "constraint", ""), "/constraint");
    auto parsed = parse_constraint(con);
    if (!parsed) throw SchemaError("/constraint", "unknown constraint '" + con + "'");
    doc.constraint = *parsed;
    doc.terminal_vertex = as_natural(require(j, "terminal_vertex", ""), "/terminal_vertex");
    const auto& steps = require_array(require(j, "steps", ""), "/steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string path = child("/steps", i);
        CertificateStepDocument s;
        s.vertex = as_natural(require(steps[i], "vertex", path), path + "/vertex");
        const auto& face = require_array(require(steps[i], "max_face_vertices", path), path + "/max_face_vertices");
        for (std::size_t k = 0; k < face.size(); ++k)
            s.max_face_vertices.push_back(as_natural(face[k], child(path + "/max_face_vertices", k)));
        if (!std::is_sorted(s.max_face_vertices.begin(), s.max_face_vertices.end()) ||
            std::adjacent_find(s.max_face_vertices.begin(), s.max_face_vertices.end()) != s.max_face_vertices.end())
            throw SchemaError(path + "/max_face_vertices", "vertex list must be strictly increasing");
        const auto& base = require(steps[i], "base_class", path);
        auto tag = as_string(require(base, "tag", path + "/base_class"), path + "/base_class/tag");
        auto kind = parse_base_kind(tag);
        if (!kind) throw SchemaError(path + "/base_class/tag", "unknown base class '" + tag + "'");
        const json& dim = require(base, "dim", path + "/base_class");
        if (!dim.is_number_integer()) throw SchemaError(path + "/base_class/dim", "expected an integer");
        s.base_class = BaseClass{*kind, dim.get<int>()};
        const auto& fv = require_array(require(steps[i], "base_f_vector", path), path + "/base_f_vector");
        for (std::size_t k = 0; k < fv.size(); ++k)
            s.base_f_vector.push_back(as_natural(fv[k], child(path + "/base_f_vector", k)));
        doc.steps.push_back(std::move(s));
    }
    return doc;
}

inline CertificateDocument parse_certificate(std::string_view text) {
    return certificate_from_json(detail::parse_json(text));
}

inline std::string emit_certificate(const CertificateDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace conic::io
