// Command-line driver: validate, dim, basis, check, sample, fixture.
// Exit codes: 0 success, 1 validation failure, 2 certification failure, 3 input error.

#include "g1/basis.hpp"
#include "g1/dimension.hpp"
#include "g1/fixtures.hpp"
#include "g1/io.hpp"
#include "g1/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

enum Exit { kOk = 0, kValidation = 1, kCertification = 2, kInput = 3 };

int exit_code(g1::ErrorKind kind)
{
    using K = g1::ErrorKind;
    switch (kind) {
    case K::MissingGluing:
    case K::ZeroDenominator:
    case K::Condition1Violated:
    case K::Condition2Violated:
    case K::CrossingVertexDegree:
    case K::TopologyViolated:
    case K::InfeasibleCorrection:
    case K::NonCoprimeInput:
        return kValidation;
    case K::PropagationInconsistent:
    case K::SingularInconsistent:
    case K::IntegralInfeasible:
    case K::CertificationFailed:
    case K::DegreeBoundViolated:
    case K::Internal:
        return kCertification;
    default:
        return kInput;
    }
}

g1::SurfaceFile load_surface(const std::string& path) { return g1::read_surface(g1::read_file(path)); }

/// Loads a surface and stops with exit 1 when validation fails.
g1::SurfaceFile load_valid(const std::string& path, bool strict, int& code)
{
    g1::SurfaceFile sf = load_surface(path);
    const g1::Report r = g1::validate(sf.surface, sf.gluings, strict);
    if (!r.ok()) {
        std::cout << r.text();
        code = kValidation;
    }
    return sf;
}

int cmd_validate(const std::string& path, bool strict)
{
    const g1::SurfaceFile sf = load_surface(path);
    const g1::Report r = g1::validate(sf.surface, sf.gluings, strict);
    std::cout << r.text() << (r.ok() ? "valid\n" : "invalid\n");
    return r.ok() ? kOk : kValidation;
}

int cmd_dim(const std::string& path, int k, bool exact, bool explain, bool oracle)
{
    int code = kOk;
    const g1::SurfaceFile sf = load_valid(path, false, code);
    if (code != kOk)
        return code;
    const g1::DimensionReport rep = g1::dim_spline_space(sf.surface, sf.gluings, k, {exact, oracle});
    std::cout << rep.text(sf.surface, explain);
    if (rep.oracle && *rep.oracle != rep.total)
        return kCertification;
    return kOk;
}

int cmd_basis(const std::string& path, int k, const std::string& out)
{
    int code = kOk;
    const g1::SurfaceFile sf = load_valid(path, false, code);
    if (code != kOk)
        return code;
    const g1::SplineBasis b = g1::full_basis(sf.surface, sf.gluings, k);
    g1::certify_basis(sf.surface, sf.gluings, b);
    g1::write_file(out, g1::write_basis(sf.surface, sf.gluings, b));
    std::cout << "degree " << k << "\ncount " << b.functions.size() << "\ncertified\n";
    return kOk;
}

int cmd_check(const std::string& surface_path, const std::string& basis_path)
{
    int code = kOk;
    const g1::SurfaceFile sf = load_valid(surface_path, false, code);
    if (code != kOk)
        return code;
    const g1::SplineBasis b = g1::read_basis(g1::read_file(basis_path), sf.surface, sf.gluings);
    bool ok = true;

    std::size_t bad = 0;
    for (const auto& bf : b.functions) {
        const g1::ResidualReport rr = g1::g1_residual(bf.spline, sf.surface, sf.gluings);
        for (const auto& er : rr.edges) {
            if (er.zero())
                continue;
            ++bad;
            std::cout << "FAIL residual " << bf.tag.str() << " edge " << sf.surface.edge(er.edge).id
                      << ": r0 = " << er.r0.str() << ", r1 = " << er.r1.str() << "\n";
        }
    }
    std::cout << (bad == 0 ? "PASS" : "FAIL") << " residuals: " << b.functions.size() << " functions, " << bad
              << " nonzero\n";
    ok = ok && bad == 0;

    const g1::RankReport rank = g1::check_independence(b);
    std::cout << (rank.ok() ? "PASS" : "FAIL") << " rank " << rank.rank << " of " << rank.count << "\n";
    ok = ok && rank.ok();

    const g1::DimensionReport dim = g1::dim_spline_space(sf.surface, sf.gluings, b.k, {true, false});
    const bool count_ok = static_cast<int>(b.functions.size()) == dim.total;
    std::cout << (count_ok ? "PASS" : "FAIL") << " count " << b.functions.size() << " dimension " << dim.total
              << "\n";
    ok = ok && count_ok;

    if (!dim.below_s_star) {
        const g1::DualityReport du = g1::jet_duality_check(sf.surface, sf.gluings, b);
        for (const auto& e : du.entries)
            std::cout << (e.ok() ? "PASS" : "FAIL") << " duality " << e.where << ": expected " << e.expected
                      << ", got " << e.actual << "\n";
        ok = ok && du.ok();
    }

    const g1::AmplenessReport am = g1::ampleness_check(sf.surface, b, g1::default_sample_points(sf.surface));
    std::size_t thin = 0;
    for (const auto& e : am.entries) {
        if (e.rank == 3)
            continue;
        ++thin;
        std::cout << "FAIL ample " << e.point.label << ": rank " << e.rank << "\n";
    }
    std::cout << (am.ok() ? "PASS" : "FAIL") << " ampleness at " << am.entries.size() << " points\n";
    ok = ok && am.ok();

    std::cout << (ok ? "certified\n" : "not certified\n");
    return ok ? kOk : kCertification;
}

std::vector<g1::Rational> read_coeffs(const std::string& path)
{
    std::istringstream in(g1::read_file(path));
    std::vector<g1::Rational> out;
    std::string tok;
    while (in >> tok)
        out.push_back(g1::parse_rational(tok));
    return out;
}

int cmd_sample(const std::string& surface_path, const std::string& basis_path, const std::string& coeff_path,
               int grid, const std::string& out)
{
    if (grid < 1)
        throw g1::Error(g1::ErrorKind::InputError, "grid must be positive");
    const g1::SurfaceFile sf = load_surface(surface_path);
    const g1::SplineBasis b = g1::read_basis(g1::read_file(basis_path), sf.surface, sf.gluings);
    const std::vector<g1::Rational> x = read_coeffs(coeff_path);
    if (x.size() != b.functions.size())
        throw g1::Error(g1::ErrorKind::InputError, "expected " + std::to_string(b.functions.size()) +
                                                       " coefficients, got " + std::to_string(x.size()));
    g1::Spline sp = g1::Spline::zero(sf.surface, b.k);
    for (std::size_t n = 0; n < x.size(); ++n) {
        g1::Spline t = b.functions[n].spline;
        t *= x[n];
        sp += t;
    }
    std::ostringstream csv;
    csv << "face,u,v,value\n";
    csv.precision(17);
    for (std::size_t f = 0; f < sp.faces.size(); ++f) {
        const bool tri = sf.surface.face(static_cast<int>(f)).kind == g1::FaceKind::Triangle;
        for (int j = 0; j <= grid; ++j)
            for (int i = 0; i <= (tri ? grid - j : grid); ++i) {
                const g1::Rational u = g1::ratio(i, grid), v = g1::ratio(j, grid);
                csv << sf.surface.face(static_cast<int>(f)).id << ',' << u.get_d() << ',' << v.get_d() << ','
                    << sp.faces[f].eval(u, v).get_d() << '\n';
            }
    }
    g1::write_file(out, csv.str());
    return kOk;
}

int cmd_fixture(const std::string& name, const std::string& out)
{
    const g1::Fixture fx = g1::fixture_by_name(name);
    const std::string text = g1::write_surface(fx.surface, fx.gluings);
    if (out.empty())
        std::cout << text;
    else
        g1::write_file(out, text);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact G1 splines on surfaces of triangles and quads"};
    app.require_subcommand(1);

    std::string surface, basis_file, out, coeffs, name;
    int degree = 0, grid = 10;
    bool strict = false, exact = false, explain = false, oracle = false;

    auto* validate = app.add_subcommand("validate", "Check gluing compatibility and topology");
    validate->add_option("surface", surface, "Surface file")->required();
    validate->add_flag("--strict", strict, "Treat topology warnings as failures");

    auto* dim = app.add_subcommand("dim", "Dimension of the degree-k G1 spline space");
    dim->add_option("surface", surface, "Surface file")->required();
    dim->add_option("--degree,-k", degree, "Polynomial degree")->required()->check(CLI::NonNegativeNumber);
    dim->add_flag("--exact-separability", exact, "Compute separability exactly instead of bounding it");
    dim->add_flag("--explain", explain, "Print per-edge mu-basis data");
    dim->add_flag("--oracle", oracle, "Cross-check against the brute-force constraint system");

    auto* basis = app.add_subcommand("basis", "Build and certify a basis");
    basis->add_option("surface", surface, "Surface file")->required();
    basis->add_option("--degree,-k", degree, "Polynomial degree")->required()->check(CLI::NonNegativeNumber);
    basis->add_option("--out,-o", out, "Basis file to write")->required();

    auto* check = app.add_subcommand("check", "Certify a basis file against a surface");
    check->add_option("surface", surface, "Surface file")->required();
    check->add_option("basis", basis_file, "Basis file")->required();

    auto* sample = app.add_subcommand("sample", "Evaluate a combination of basis functions on a grid");
    sample->add_option("surface", surface, "Surface file")->required();
    sample->add_option("basis", basis_file, "Basis file")->required();
    sample->add_option("--coeffs", coeffs, "Whitespace-separated rational coefficients")->required();
    sample->add_option("--grid", grid, "Grid subdivisions per face");
    sample->add_option("--out,-o", out, "CSV file to write")->required();

    auto* fixture = app.add_subcommand("fixture", "Write a built-in fixture surface");
    fixture->add_option("name", name, "Fixture name")->required();
    fixture->add_option("--out,-o", out, "Surface file to write (default stdout)");
    fixture->footer([] {
        std::string s = "Fixtures:";
        for (const auto& n : g1::fixture_names())
            s += " " + n;
        return s;
    }());

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*validate)
            return cmd_validate(surface, strict);
        if (*dim)
            return cmd_dim(surface, degree, exact, explain, oracle);
        if (*basis)
            return cmd_basis(surface, degree, out);
        if (*check)
            return cmd_check(surface, basis_file);
        if (*sample)
            return cmd_sample(surface, basis_file, coeffs, grid, out);
        if (*fixture)
            return cmd_fixture(name, out);
    } catch (const g1::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return kOk;
}
