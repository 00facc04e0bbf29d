#include "g1/basis.hpp"
#include "g1/fixtures.hpp"
#include "g1/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sys/wait.h>

using namespace g1;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

std::string message_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

/// Runs the CLI and returns its exit status.
int run(const std::string& args)
{
    const std::string cmd = std::string(G1SPLINE_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch()
{
    const fs::path dir = fs::temp_directory_path() / "g1spline_io_test";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("property: surfaces round-trip")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const Fixture fx = fixture_by_name(name);
        const std::string text = write_surface(fx.surface, fx.gluings);
        const SurfaceFile back = read_surface(text);
        CHECK(write_surface(back.surface, back.gluings) == text);
        CHECK(surface_hash(back.surface, back.gluings) == surface_hash(fx.surface, fx.gluings));
        REQUIRE(back.surface.edges().size() == fx.surface.edges().size());
        for (int e = 0; e < static_cast<int>(fx.surface.edges().size()); ++e) {
            const int e2 = back.surface.edge_index(fx.surface.edge(e).id);
            CHECK(back.surface.edge(e2).sides == fx.surface.edge(e).sides);
            CHECK(back.gluings[e2] == fx.gluings[e]);
        }
        CHECK(validate(back.surface, back.gluings, true).ok());
    }
}

TEST_CASE("property: bases round-trip")
{
    for (const char* name : {"round-corner", "two-patch-qt"}) {
        CAPTURE(name);
        const Fixture fx = fixture_by_name(name);
        const SplineBasis b = full_basis(fx.surface, fx.gluings, 5);
        const SplineBasis back = read_basis(write_basis(fx.surface, fx.gluings, b), fx.surface, fx.gluings);
        CHECK(back.k == b.k);
        REQUIRE(back.functions.size() == b.functions.size());
        for (std::size_t n = 0; n < b.functions.size(); ++n) {
            CHECK(back.functions[n].tag == b.functions[n].tag);
            CHECK(back.functions[n].spline == b.functions[n].spline);
        }
    }
}

TEST_CASE("input errors")
{
    const std::string bad = "{\n  \"faces\": [\n    {\"id\": \"q\", \"kind\": \"quad\"},\n  ]\n}";
    CHECK(kind_of([&] { read_surface(bad); }) == ErrorKind::InputError);
    CHECK(message_of([&] { read_surface(bad); }).find("line 4") != std::string::npos);

    CHECK(kind_of([] { read_surface(R"({"faces":[{"id":"q","kind":"hexagon"}]})"); }) != ErrorKind::Internal);
    CHECK(kind_of([] { read_surface(R"({"faces":[{"id":"q"}]})"); }) == ErrorKind::InputError);
    CHECK(kind_of([] {
              read_surface(R"({"faces":[{"id":"q","kind":"quad"}],
                  "edges":[{"id":"e","sides":[{"face":"q","slot":0}],"gluing":{"a":[],"b":["-1"],"c":["1"]}}]})");
          }) == ErrorKind::InputError);
    CHECK(kind_of([] {
              read_surface(R"({"faces":[{"id":"q","kind":"quad"}],"edges":[{"id":"e","sides":[{"face":"z","slot":0}]}]})");
          }) == ErrorKind::DanglingReference);

    const Fixture rc = round_corner();
    const Fixture two = two_patch(FaceKind::Quad, FaceKind::Quad);
    const std::string basis = write_basis(two.surface, two.gluings, full_basis(two.surface, two.gluings, 4));
    CHECK(kind_of([&] { read_basis(basis, rc.surface, rc.gluings); }) == ErrorKind::InputError);
}

TEST_CASE("gluing coefficients accept integers and fractions")
{
    const SurfaceFile sf = read_surface(R"({"faces":[{"id":"p","kind":"quad"},{"id":"q","kind":"quad"}],
        "edges":[{"id":"e","sides":[{"face":"p","slot":0},{"face":"q","slot":3,"reversed":true}],
                  "gluing":{"a":[0, "1/2"],"b":[-1],"c":["1"]}}]})");
    const auto& g = sf.gluings[sf.surface.edge_index("e")];
    REQUIRE(g);
    // Stored in normal form: integer coefficients without common content.
    CHECK(g->a == UniPoly{0, 1});
    CHECK(g->b == UniPoly{-2});
    CHECK(g->c == UniPoly{2});
}

TEST_CASE("command line exit codes")
{
    const fs::path dir = scratch();
    const std::string rc = (dir / "rc.json").string();
    const std::string basis = (dir / "rc.basis").string();
    CHECK(run("fixture round-corner --out " + rc) == 0);
    CHECK(run("validate " + rc) == 0);
    CHECK(run("dim " + rc + " --degree 4 --oracle") == 0);
    CHECK(run("basis " + rc + " --degree 4 --out " + basis) == 0);
    CHECK(run("check " + rc + " " + basis) == 0);

    // Sampling a face function: zero on the edge rows, positive inside.
    const SplineBasis b = read_basis(read_file(basis), read_surface(read_file(rc)).surface,
                                     read_surface(read_file(rc)).gluings);
    std::string coeffs;
    for (const auto& bf : b.functions)
        coeffs += bf.tag.kind == TagKind::FaceFn && bf.tag.target == "s0" ? "1 " : "0 ";
    write_file((dir / "c.txt").string(), coeffs);
    const std::string csv = (dir / "s.csv").string();
    CHECK(run("sample " + rc + " " + basis + " --coeffs " + (dir / "c.txt").string() + " --grid 4 --out " + csv) == 0);
    const std::string text = read_file(csv);
    CHECK(text.find("s0,0.5,0.5,0.140625") != std::string::npos);
    CHECK(text.find("s0,0,0.5,0\n") != std::string::npos);
    CHECK(text.find("s1,0.5,0.5,0\n") != std::string::npos);

    // Validation failure: sign change of b.
    Fixture sharp = two_patch(FaceKind::Quad, FaceKind::Quad, {UniPoly{}, UniPoly{-1, 2}, UniPoly{1}});
    const std::string sharp_path = (dir / "sharp.json").string();
    write_file(sharp_path, write_surface(sharp.surface, sharp.gluings));
    CHECK(run("validate " + sharp_path) == 0);
    CHECK(run("validate --strict " + sharp_path) == 1);

    // Certification failure: a tampered basis file.
    std::string tampered = read_file(basis);
    const auto pos = tampered.find("\"1\"");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 3, "\"2\"");
    write_file((dir / "bad.basis").string(), tampered);
    CHECK(run("check " + rc + " " + (dir / "bad.basis").string()) == 2);

    // Input errors.
    write_file((dir / "broken.json").string(), "{ \"faces\": [");
    CHECK(run("validate " + (dir / "broken.json").string()) == 3);
    CHECK(run("validate " + (dir / "missing.json").string()) == 3);
    CHECK(run("fixture no-such-fixture") == 3);
    CHECK(run("dim " + rc) == 3);
}
