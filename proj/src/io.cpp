#include "nnls/io.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>

namespace nnls {

namespace {

using nlohmann::json;

json grid_to_json(const UniformGrid& g) { return {{"lo", g.lo}, {"hi", g.hi}, {"n", g.n}}; }

UniformGrid grid_from_json(const json& j) {
    return {j.at("lo").get<double>(), j.at("hi").get<double>(), j.at("n").get<Index>()};
}

json values_to_json(const ComplexVector& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back({v[i].real(), v[i].imag()});
    return arr;
}

ComplexVector values_from_json(const json& arr, Index expected) {
    if (!arr.is_array() || static_cast<Index>(arr.size()) != expected)
        throw std::invalid_argument("values array size does not match grid");
    ComplexVector v(expected);
    for (Index i = 0; i < expected; ++i)
        v[i] = Complex(arr[i].at(0).get<double>(), arr[i].at(1).get<double>());
    return v;
}

json field_to_json(const SampledField& f) {
    json j = grid_to_json(f.grid);
    j["values"] = values_to_json(f.values);
    return j;
}

SampledField field_from_json(const json& j) {
    UniformGrid g = grid_from_json(j);
    return {g, values_from_json(j.at("values"), g.n)};
}

void attach_provenance(json& j, const Provenance& p) {
    if (p.empty()) return;
    json block;
    for (const auto& [k, v] : p) block[k] = v;
    j["provenance"] = block;
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << std::setw(1) << j << "\n";
}

json read_json(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
    json j;
    is >> j;
    return j;
}

}  // namespace

void save_field_json(const std::filesystem::path& path, const SampledField& field, const Provenance& prov) {
    json j = field_to_json(field);
    attach_provenance(j, prov);
    write_json(path, j);
}

SampledField load_field_json(const std::filesystem::path& path) { return field_from_json(read_json(path)); }

void save_potential_json(const std::filesystem::path& path, const Potential& p, const Provenance& prov) {
    json j;
    j["field"] = field_to_json(p.field);
    j["sigma"] = p.sigma;
    j["l1_norm"] = p.l1_norm;
    j["small_norm"] = p.small_norm();
    j["decayed"] = p.decayed;
    attach_provenance(j, prov);
    write_json(path, j);
}

Potential load_potential_json(const std::filesystem::path& path) {
    json j = read_json(path);
    return make_potential(field_from_json(j.at("field")), j.at("sigma").get<int>());
}

void save_scattering_json(const std::filesystem::path& path, const ScatteringData& d, const Provenance& prov) {
    json j;
    j["kgrid"] = grid_to_json(d.kgrid);
    j["a"] = values_to_json(d.a);
    j["b"] = values_to_json(d.b);
    j["d"] = values_to_json(d.d);
    j["c"] = values_to_json(d.c);
    j["sigma"] = d.sigma;
    j["residuals"] = {{"determinant", d.residuals.determinant}, {"symmetry_a", d.residuals.symmetry_a},
                      {"symmetry_d", d.residuals.symmetry_d},   {"tail", d.residuals.tail},
                      {"wronskian", d.residuals.wronskian}};
    j["determinant_flagged"] = d.determinant_flagged;
    attach_provenance(j, prov);
    write_json(path, j);
}

ScatteringData load_scattering_json(const std::filesystem::path& path) {
    json j = read_json(path);
    ScatteringData d;
    d.kgrid = grid_from_json(j.at("kgrid"));
    d.a = values_from_json(j.at("a"), d.kgrid.n);
    d.b = values_from_json(j.at("b"), d.kgrid.n);
    d.d = values_from_json(j.at("d"), d.kgrid.n);
    d.c = values_from_json(j.at("c"), d.kgrid.n);
    d.sigma = j.at("sigma").get<int>();
    if (j.contains("residuals")) {
        const json& r = j["residuals"];
        d.residuals.determinant = r.value("determinant", 0.0);
        d.residuals.symmetry_a = r.value("symmetry_a", 0.0);
        d.residuals.symmetry_d = r.value("symmetry_d", 0.0);
        d.residuals.tail = r.value("tail", 0.0);
        d.residuals.wronskian = r.value("wronskian", 0.0);
    }
    d.determinant_flagged = j.value("determinant_flagged", false);
    return d;
}

void save_reflection_json(const std::filesystem::path& path, const ReflectionPair& r, const Provenance& prov) {
    json j;
    j["kgrid"] = grid_to_json(r.kgrid);
    j["r1"] = values_to_json(r.r1);
    j["r2"] = values_to_json(r.r2);
    j["t"] = r.t;
    j["sup_r"] = r.sup_r;
    attach_provenance(j, prov);
    write_json(path, j);
}

ReflectionPair load_reflection_json(const std::filesystem::path& path) {
    json j = read_json(path);
    ReflectionPair r;
    r.kgrid = grid_from_json(j.at("kgrid"));
    r.r1 = values_from_json(j.at("r1"), r.kgrid.n);
    r.r2 = values_from_json(j.at("r2"), r.kgrid.n);
    r.t = j.value("t", 0.0);
    r.sup_r = j.value("sup_r", 0.0);
    return r;
}

void save_report_json(const std::filesystem::path& path, const DiagnosticsReport& rep, const Provenance& prov) {
    json items = json::array();
    for (const auto& it : rep.items)
        items.push_back({{"name", it.name},
                         {"value", it.value},
                         {"tolerance", it.tolerance},
                         {"pass", it.pass},
                         {"anchor", it.anchor}});
    json j;
    j["items"] = items;
    j["overall"] = rep.overall();
    attach_provenance(j, prov);
    write_json(path, j);
}

void save_field_csv(const std::filesystem::path& path, const SampledField& field) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << "x,re,im\n" << std::setprecision(17);
    for (Index i = 0; i < field.grid.n; ++i)
        os << field.grid.node(i) << "," << field.values[i].real() << "," << field.values[i].imag() << "\n";
}

SampledField load_field_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(is, line) || line.rfind("x,re,im", 0) != 0)
        throw std::invalid_argument("field CSV must start with the header x,re,im");
    std::vector<double> xs;
    std::vector<Complex> vs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        double x = 0, re = 0, im = 0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im) != 3)
            throw std::invalid_argument("malformed field CSV row: " + line);
        xs.push_back(x);
        vs.push_back(Complex(re, im));
    }
    if (xs.size() < 2) throw std::invalid_argument("field CSV needs at least two rows");
    UniformGrid g(xs.front(), xs.back(), static_cast<Index>(xs.size()));
    const double h = g.spacing();
    for (size_t i = 0; i < xs.size(); ++i)
        if (std::abs(xs[i] - g.node(static_cast<Index>(i))) > 1e-9 * std::max(1.0, std::abs(xs[i])) + 1e-12 * h)
            throw std::invalid_argument("field CSV abscissae are not a uniform grid");
    ComplexVector values(g.n);
    for (Index i = 0; i < g.n; ++i) values[i] = vs[static_cast<size_t>(i)];
    return {g, std::move(values)};
}

void save_reflection_csv(const std::filesystem::path& path, const ReflectionPair& r) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << "k,re_r1,im_r1,re_r2,im_r2\n" << std::setprecision(17);
    for (Index i = 0; i < r.kgrid.n; ++i)
        os << r.kgrid.node(i) << "," << r.r1[i].real() << "," << r.r1[i].imag() << "," << r.r2[i].real()
           << "," << r.r2[i].imag() << "\n";
}

void append_rh_debug_csv(const std::filesystem::path& path, const RHSolution& sol, bool header) {
    std::ofstream os(path, header ? std::ios::trunc : std::ios::app);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    if (header)
        os << "x,k_index,re_psi11,im_psi11,re_psi12,im_psi12,re_psi21,im_psi21,re_psi22,im_psi22\n";
    os << std::setprecision(17);
    for (Index i = 0; i < sol.kgrid.n; ++i) {
        os << sol.x << "," << i;
        for (const auto& entry : sol.psi_minus) os << "," << entry[i].real() << "," << entry[i].imag();
        os << "\n";
    }
}

}  // namespace nnls
