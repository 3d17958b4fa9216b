// conictool: build polytopes, compute face lattices, search and verify conic
// sequences, and print analysis reports.
//
// Exit codes: 0 ok / found / valid, 1 not conic / invalid certificate,
// 2 input or schema error, 3 inconclusive (budget exhausted).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "conic/builders.hpp"
#include "conic/conic.hpp"
#include "conic/io.hpp"
#include "conic/report.hpp"

namespace {

using namespace conic;
using conic::io::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_all(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

io::LoadedPolytope load_file(const std::string& path) {
    auto loaded = io::load(io::parse_polytope(read_all(path)));
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    return loaded;
}

SearchConstraint constraint_from(const std::string& text) {
    auto c = parse_constraint(text);
    if (!c) throw UsageError("unknown constraint '" + text + "' (expected any, simplex, cube or simple)");
    return *c;
}

std::string bases_line(const ConicCertificate& cert) {
    std::string s;
    for (const auto& step : cert.steps) s += (s.empty() ? "" : " ") + short_name(step.base_class);
    return s.empty() ? "(none)" : s;
}

// ---- gen ----

struct GenArgs {
    std::string family;
    std::optional<std::size_t> dim, gon, n;
    std::string u, w, output;
};

std::size_t dim_or(const GenArgs& a, std::size_t fallback) { return a.dim.value_or(fallback); }

io::PolytopeDocument build(const GenArgs& a) {
    auto vrep_doc = [](VRep v) {
        io::PolytopeDocument doc;
        doc.name = v.name.value_or("polytope");
        doc.body = std::move(v);
        return doc;
    };
    // Pyramids, bipyramids and prisms take a polygon base with --gon, else a simplex of one less dimension.
    auto base = [&](const char* what) {
        if (a.gon) {
            if (a.dim && *a.dim != 3) throw UsageError(std::string(what) + " over a polygon has dimension 3");
            return polygon(*a.gon);
        }
        std::size_t d = dim_or(a, 3);
        if (d < 2) throw DimensionOutOfRange(std::string(what) + " requires dimension at least 2");
        return simplex(d - 1);
    };
    const std::string& f = a.family;
    if (f == "simplex") return vrep_doc(simplex(dim_or(a, 3)));
    if (f == "cube") return vrep_doc(cube(dim_or(a, 3)));
    if (f == "cross") return vrep_doc(cross_polytope(dim_or(a, 3)));
    if (f == "polygon") return vrep_doc(polygon(a.gon.value_or(4)));
    if (f == "segment") return vrep_doc(segment());
    if (f == "pyramid") return vrep_doc(pyramid(base("pyramid")));
    if (f == "bipyramid") return vrep_doc(bipyramid(base("bipyramid")));
    if (f == "prism") return vrep_doc(product(segment(), base("prism")));
    if (f == "bruhat") {
        if (a.u.empty() || a.w.empty()) throw UsageError("bruhat requires --u and --w");
        auto u = Permutation::parse(a.u), w = Permutation::parse(a.w);
        if (a.n && (*a.n != u.size() || *a.n != w.size()))
            throw SizeMismatch("--n " + std::to_string(*a.n) + " does not match the permutation sizes");
        return vrep_doc(bruhat_interval_polytope(u, w));
    }
    if (f == "permutohedron") {
        std::size_t n = a.n.value_or(3);
        detail::check_dim(n, 1, 5, "permutohedron");
        std::vector<unsigned> id(n), rev(n);
        for (std::size_t i = 0; i < n; ++i) {
            id[i] = static_cast<unsigned>(i + 1);
            rev[i] = static_cast<unsigned>(n - i);
        }
        auto doc = vrep_doc(bruhat_interval_polytope(Permutation(id), Permutation(rev)));
        doc.name = "permutohedron(" + std::to_string(n) + ")";
        return doc;
    }
    if (f == "gz3") return io::PolytopeDocument{"GZ3", gelfand_zetlin_3()};
    throw UsageError("unknown family '" + f +
                     "' (simplex, cube, cross, polygon, segment, pyramid, bipyramid, prism, bruhat, permutohedron, gz3)");
}

int run_gen(const GenArgs& a) {
    write_all(a.output, io::emit_polytope(build(a)));
    return kOk;
}

// ---- faces ----

int run_faces(const std::string& file, bool as_json, bool fvector_only) {
    auto loaded = load_file(file);
    const auto& p = *loaded.lattice;
    auto f = f_vector(p);
    if (fvector_only) {
        for (std::size_t k = 0; k < f.counts.size(); ++k) std::cout << (k ? " " : "") << f.counts[k];
        std::cout << "\n";
        return kOk;
    }
    if (as_json) {
        json faces = json::array();
        for (const auto& face : p.faces())
            faces.push_back(json{{"dim", face.dim}, {"vertices", indices_of(face.vertices)}});
        json out{{"format_version", io::kFormatVersion},
                 {"name", loaded.name},
                 {"n_vertices", p.n_vertices()},
                 {"f_vector", f.counts},
                 {"faces", faces}};
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "polytope: " << loaded.name << "\n";
    std::cout << "f-vector:";
    for (auto c : f.counts) std::cout << " " << c;
    std::cout << "\n";
    for (const auto& face : p.faces()) {
        if (face.dim < 0) continue;
        std::cout << "dim " << face.dim << ": {";
        auto idx = indices_of(face.vertices);
        for (std::size_t i = 0; i < idx.size(); ++i) std::cout << (i ? "," : "") << idx[i];
        std::cout << "}\n";
    }
    return kOk;
}

// ---- search / verify / enumerate / analyze ----

int run_search(const std::string& file, const std::string& require, std::optional<std::size_t> budget,
               const std::string& emit, unsigned threads) {
    auto constraint = constraint_from(require);
    auto loaded = load_file(file);
    SearchOptions options;
    options.budget = budget;
    options.threads = threads;
    options.name = loaded.name;
    auto result = search_conic(loaded.lattice, constraint, options);
    // With the certificate going to stdout, the summary moves to stderr.
    std::ostream& summary = (emit == "-") ? std::cerr : std::cout;
    summary << to_string(result.outcome);
    if (result.certificate) summary << ": " << bases_line(*result.certificate);
    summary << "\n";
    if (result.certificate && !emit.empty())
        write_all(emit, io::emit_certificate(io::to_document(*loaded.lattice, *result.certificate, constraint)));
    switch (result.outcome) {
        case SearchOutcome::Found: return kOk;
        case SearchOutcome::NotConic: return kNegative;
        case SearchOutcome::Inconclusive: return kInconclusive;
    }
    return kNegative;
}

int run_verify(const std::string& file, const std::string& cert_file, const std::string& require) {
    if ((file.empty() || file == "-") && (cert_file.empty() || cert_file == "-"))
        throw UsageError("only one of the polytope and the certificate can come from stdin");
    auto loaded = load_file(file);
    auto doc = io::parse_certificate(read_all(cert_file));
    auto constraint = require.empty() ? doc.constraint : constraint_from(require);
    auto cert = io::from_document(*loaded.lattice, doc);
    auto v = verify_certificate(*loaded.lattice, cert, constraint);
    if (v.ok) {
        std::cout << "valid\n";
        return kOk;
    }
    std::cout << "invalid\n";
    std::cerr << "step " << v.failing_step.value_or(0) << ": " << v.diagnostic << "\n";
    return kNegative;
}

int run_enumerate(const std::string& file, const std::string& require, std::size_t limit) {
    auto constraint = constraint_from(require);
    auto loaded = load_file(file);
    auto all = enumerate_all_sequences(*loaded.lattice, constraint, limit, loaded.name);
    json sequences = json::array();
    for (const auto& cert : all) sequences.push_back(io::to_json(io::to_document(*loaded.lattice, cert, constraint)));
    json out{{"format_version", io::kFormatVersion},
             {"name", loaded.name},
             {"constraint", to_string(constraint)},
             {"count", all.size()},
             {"truncated", all.size() >= limit},
             {"sequences", sequences}};
    std::cout << out.dump(2) << "\n";
    return all.empty() ? kNegative : kOk;
}

int run_analyze(const std::string& file, const std::string& format, std::optional<std::size_t> budget,
                unsigned threads) {
    if (format != "json" && format != "text") throw UsageError("unknown format '" + format + "'");
    auto loaded = io::load(io::parse_polytope(read_all(file)));
    SearchOptions options;
    options.budget = budget;
    options.threads = threads;
    auto report = analyze(loaded.lattice, loaded.name, loaded.warnings, options);
    std::cout << (format == "json" ? io::emit_report(report) : io::render_text(report));
    for (const auto& v : report.verdicts)
        if (v.outcome == SearchOutcome::Inconclusive) return kInconclusive;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Face lattices, conic sequences and toric invariants of convex polytopes"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Build a polytope document");
    gen_cmd->add_option("family", gen.family, "simplex|cube|cross|polygon|segment|pyramid|bipyramid|prism|bruhat|permutohedron|gz3")
        ->required();
    gen_cmd->add_option("--dim", gen.dim, "Dimension");
    gen_cmd->add_option("--gon", gen.gon, "Number of polygon vertices");
    gen_cmd->add_option("--u", gen.u, "Lower permutation, e.g. 1324");
    gen_cmd->add_option("--w", gen.w, "Upper permutation, e.g. 4231");
    gen_cmd->add_option("--n", gen.n, "Permutation size");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    std::string file, cert_file, require, emit, format = "json";
    std::optional<std::size_t> budget;
    std::size_t limit = 1000;
    unsigned threads = 1;
    bool as_json = false, fvector_only = false;

    auto* faces_cmd = app.add_subcommand("faces", "Print the face lattice");
    faces_cmd->add_option("file", file, "Polytope document (default stdin)");
    faces_cmd->add_flag("--json", as_json, "JSON output");
    faces_cmd->add_flag("--fvector", fvector_only, "Print only the f-vector");

    auto* search_cmd = app.add_subcommand("search", "Search for a conic sequence");
    search_cmd->add_option("file", file, "Polytope document (default stdin)");
    search_cmd->add_option("--require", require, "any|simplex|cube|simple")->required();
    search_cmd->add_option("--budget", budget, "Node limit");
    search_cmd->add_option("--emit-certificate", emit, "Write the certificate here ('-' for stdout)");
    search_cmd->add_option("--threads", threads, "Search top-level branches concurrently");

    auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate");
    verify_cmd->add_option("file", file, "Polytope document")->required();
    verify_cmd->add_option("certificate", cert_file, "Certificate document")->required();
    verify_cmd->add_option("--require", require, "Constraint (default: the certificate's own)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every conic sequence");
    enumerate_cmd->add_option("file", file, "Polytope document (default stdin)");
    enumerate_cmd->add_option("--require", require, "any|simplex|cube|simple")->required();
    enumerate_cmd->add_option("--limit", limit, "Stop after this many sequences");

    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
    analyze_cmd->add_option("file", file, "Polytope document (default stdin)");
    analyze_cmd->add_option("--format", format, "json|text");
    analyze_cmd->add_option("--budget", budget, "Node limit per search");
    analyze_cmd->add_option("--threads", threads, "Search top-level branches concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*faces_cmd) return run_faces(file, as_json, fvector_only);
        if (*search_cmd) return run_search(file, require, budget, emit, threads);
        if (*verify_cmd) return run_verify(file, cert_file, require);
        if (*enumerate_cmd) return run_enumerate(file, require, limit);
        if (*analyze_cmd) return run_analyze(file, format, budget, threads);
    } catch (const conic::SchemaError& e) {
        std::cerr << "schema error at " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
