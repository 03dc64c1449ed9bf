#include "nnls/io.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <filesystem>
#include <fstream>

using namespace nnls;
using namespace nnls::testing;

namespace {

std::filesystem::path tmp(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("potential JSON roundtrip with provenance") {
    auto p = gaussian_potential(0.08, 0.5, {-16.0, 16.0, 64});
    Provenance prov{{"command", "generate"}, {"kind", "shifted_gaussian"}};
    auto path = tmp("nnls_test_pot.json");
    save_potential_json(path, p, prov);
    auto q = load_potential_json(path);
    CHECK(q.field.grid == p.field.grid);
    CHECK((q.field.values - p.field.values).cwiseAbs().maxCoeff() == 0.0);
    CHECK(q.sigma == p.sigma);
    CHECK(q.l1_norm == doctest::Approx(p.l1_norm).epsilon(1e-15));
    CHECK(slurp(path).find("provenance") != std::string::npos);
    CHECK(slurp(path).find("shifted_gaussian") != std::string::npos);
}

TEST_CASE("outputs are bit-identical across repeated saves") {
    auto p = gaussian_potential(0.08, 0.0, {-16.0, 16.0, 64});
    auto pa = tmp("nnls_test_det_a.json"), pb = tmp("nnls_test_det_b.json");
    save_potential_json(pa, p, {{"command", "generate"}});
    save_potential_json(pb, p, {{"command", "generate"}});
    CHECK(slurp(pa) == slurp(pb));
}

TEST_CASE("scattering and reflection JSON roundtrips") {
    auto p = gaussian_potential(0.08, 0.0, {-16.0, 16.0, 128});
    UniformGrid kg(-24.0, 24.0, 64);
    auto data = scattering_coefficients(p, kg);
    auto path = tmp("nnls_test_scat.json");
    save_scattering_json(path, data);
    auto loaded = load_scattering_json(path);
    CHECK((loaded.a - data.a).cwiseAbs().maxCoeff() == 0.0);
    CHECK((loaded.c - data.c).cwiseAbs().maxCoeff() == 0.0);
    CHECK(loaded.residuals.determinant == data.residuals.determinant);

    auto refl = reflection_coefficients(data);
    auto rpath = tmp("nnls_test_refl.json");
    save_reflection_json(rpath, refl);
    auto rl = load_reflection_json(rpath);
    CHECK((rl.r1 - refl.r1).cwiseAbs().maxCoeff() == 0.0);
    CHECK(rl.t == refl.t);
    CHECK(rl.sup_r == refl.sup_r);
}

TEST_CASE("CSV exports carry the documented headers") {
    auto p = gaussian_potential(0.08, 0.0, {-16.0, 16.0, 64});
    auto fpath = tmp("nnls_test_field.csv");
    save_field_csv(fpath, p.field);
    CHECK(slurp(fpath).rfind("x,re,im\n", 0) == 0);

    UniformGrid kg(-24.0, 24.0, 64);
    auto refl = reflection_coefficients(scattering_coefficients(p, kg));
    auto rpath = tmp("nnls_test_refl.csv");
    save_reflection_csv(rpath, refl);
    CHECK(slurp(rpath).rfind("k,re_r1,im_r1,re_r2,im_r2\n", 0) == 0);
}

TEST_CASE("field CSV roundtrip") {
    auto p = gaussian_potential(0.08, 0.2, {-16.0, 16.0, 64});
    auto path = tmp("nnls_test_field_rt.csv");
    save_field_csv(path, p.field);
    auto f = load_field_csv(path);
    CHECK(f.grid.n == 64);
    CHECK((f.values - p.field.values).cwiseAbs().maxCoeff() < 1e-15);

    std::ofstream bad(tmp("nnls_test_bad.csv"));
    bad << "a,b\n1,2\n";
    bad.close();
    CHECK_THROWS_AS(load_field_csv(tmp("nnls_test_bad.csv")), std::invalid_argument);
}

TEST_CASE("field JSON schema fields") {
    auto p = gaussian_potential(0.08, 0.0, {-16.0, 16.0, 64});
    auto path = tmp("nnls_test_field.json");
    save_field_json(path, p.field);
    const std::string s = slurp(path);
    for (const char* key : {"\"lo\"", "\"hi\"", "\"n\"", "\"values\""})
        CHECK(s.find(key) != std::string::npos);
    auto f = load_field_json(path);
    CHECK((f.values - p.field.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rh debug dump") {
    auto p = gaussian_potential(0.08, 0.0, {-16.0, 16.0, 128});
    UniformGrid kg(-24.0, 24.0, 64);
    auto refl = reflection_coefficients(scattering_coefficients(p, kg));
    auto sol = solve_rh(refl, 0.5, 1);
    auto path = tmp("nnls_test_psi.csv");
    append_rh_debug_csv(path, sol, true);
    const std::string s = slurp(path);
    CHECK(s.rfind("x,k_index,", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 65);  // header + one row per k
}
