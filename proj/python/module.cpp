#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liewb/catalog.hpp"

namespace py = pybind11;
using namespace liewb;

namespace {

Catalog& cat(const std::string& dir) {
    static std::map<std::string, std::unique_ptr<Catalog>> cache;
    auto it = cache.find(dir);
    if (it == cache.end())
        it = cache.emplace(dir, std::make_unique<Catalog>(dir)).first;
    return *it->second;
}

std::string dump(const Json& j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_liewb, m) {
    m.doc() = "exact workbench for Lie algebras of polynomial vector fields";

    m.def("fixture_names", [](const std::string& dir) {
        std::vector<std::string> out;
        for (const auto& f : cat(dir).manifest().at("fixtures"))
            out.push_back(f.at("name").get<std::string>());
        return out;
    }, py::arg("fixtures_dir") = "");

    m.def("validate_fixtures", [](const std::string& dir) {
        std::map<std::string, std::string> out;
        for (const auto& [name, status] : cat(dir).validate_all()) out[name] = status;
        return out;
    }, py::arg("fixtures_dir") = "");

    m.def("algebra_info", [](const std::string& name, const std::string& dir) {
        const LieAlgebra& L = cat(dir).algebra(name);
        Json j;
        j["dim"] = L.dim();
        j["names"] = L.names();
        j["jacobi_violations"] = L.verify_jacobi().size();
        j["nonzero_brackets"] = L.brackets().size();
        return dump(j);
    }, py::arg("name"), py::arg("fixtures_dir") = "");

    m.def("bracket", [](const std::string& algebra, const std::string& a,
                        const std::string& b, const std::string& dir) {
        const LieAlgebra& L = cat(dir).algebra(algebra);
        return L.element_str(L.bracket(parse_element(L, a), parse_element(L, b)));
    }, py::arg("algebra"), py::arg("a"), py::arg("b"), py::arg("fixtures_dir") = "");

    m.def("grading_report", [](const std::string& algebra, const std::string& grading,
                               const std::string& dir) {
        Catalog& c = cat(dir);
        const LieAlgebra& L = c.algebra(algebra);
        GradingReport rep = L.verify_grading(c.grading(grading, L));
        Json j;
        j["violations"] = rep.violations.size();
        for (const auto& [deg, dim] : rep.subspace_dims)
            j["dims"][std::to_string(deg)] = dim;
        return dump(j);
    }, py::arg("algebra") = "w", py::arg("grading") = "w-grading",
       py::arg("fixtures_dir") = "");

    m.def("table_diff", [](const std::string& algebra, const std::string& expected,
                           const std::string& dir) {
        Catalog& c = cat(dir);
        return dump(liewb::table_diff(c.algebra(algebra), c.expected_table(expected))
                        .to_json());
    }, py::arg("algebra"), py::arg("expected"), py::arg("fixtures_dir") = "");

    m.def("casimir_search", [](const std::string& algebra, int max_degree, int jobs,
                               size_t cap, const std::string& dir) {
        auto ctx = PbwContext::make(cat(dir).algebra(algebra));
        CasimirSearch res = casimir_search(ctx, max_degree, {}, jobs, cap);
        Json j;
        j["candidates"] = res.candidate_count;
        j["equations"] = res.equation_rows;
        Json basis = Json::array(), reduced = Json::array();
        for (const auto& p : res.nullspace) basis.push_back(p.str());
        for (const auto& p : res.reduced) reduced.push_back(p.str());
        j["nullspace"] = basis;
        j["reduced_generating_set"] = reduced;
        return dump(j);
    }, py::arg("algebra"), py::arg("max_degree"), py::arg("jobs") = 1,
       py::arg("max_monomials") = size_t(2000000), py::arg("fixtures_dir") = "");

    m.def("poisson_casimir_search", [](const std::string& algebra, int max_degree,
                                       const std::vector<std::string>& restrict_vars,
                                       const std::string& dir) {
        const LieAlgebra& L = cat(dir).algebra(algebra);
        PoissonStructure S(L);
        std::vector<int> restrict;
        for (const auto& n : restrict_vars) {
            int idx = L.index_of(n);
            if (idx < 0) throw FixtureError("unknown generator " + n);
            restrict.push_back(idx);
        }
        PoissonSearch res = poisson_casimir_search(S, max_degree, restrict);
        Json j;
        j["candidates"] = res.candidate_count;
        j["equations"] = res.equation_rows;
        Json basis = Json::array();
        for (const auto& p : res.nullspace) basis.push_back(p.str());
        j["nullspace"] = basis;
        return dump(j);
    }, py::arg("algebra"), py::arg("max_degree"),
       py::arg("restrict_vars") = std::vector<std::string>{},
       py::arg("fixtures_dir") = "");

    m.def("verify_central", [](const std::string& algebra, const std::string& expr,
                               const std::string& dir) {
        auto ctx = PbwContext::make(cat(dir).algebra(algebra));
        auto failures = verify_central(NCPoly::parse(ctx, expr));
        Json j = Json::array();
        for (const auto& [i, c] : failures)
            j.push_back({{"generator", ctx->names()[i]}, {"commutator", c.str()}});
        return dump(j);
    }, py::arg("algebra"), py::arg("expr"), py::arg("fixtures_dir") = "");

    m.def("realize", [](const std::string& algebra, const std::string& expr,
                        const std::string& dir) {
        const LieAlgebra& L = cat(dir).algebra(algebra);
        if (!L.realization()) throw FixtureError(algebra + " carries no realization");
        auto ctx = PbwContext::make(L);
        return realize(NCPoly::parse(ctx, expr), *L.realization()).str();
    }, py::arg("algebra"), py::arg("expr"), py::arg("fixtures_dir") = "");

    m.def("central_extension", [](const std::string& fixture, const std::string& dir) {
        auto ext = cat(dir).extended_algebra(fixture);
        Json j;
        j["constraints"] = ext.solution.triples_total;
        j["family_dim"] = ext.solution.family_dim();
        j["dim"] = ext.algebra.dim();
        j["jacobi_violations"] = ext.algebra.verify_jacobi().size();
        return dump(j);
    }, py::arg("fixture"), py::arg("fixtures_dir") = "");

    m.def("virtual_copy_report", [](const std::string& fixture, const std::string& dir) {
        Catalog& c = cat(dir);
        auto ext = c.extended_algebra(fixture);
        auto ctx = PbwContext::make_evaluated(ext.algebra, ext.central);
        auto vc = c.virtual_copy(fixture);
        auto rep = verify_virtual_copy(NCPoly::parse(ctx, vc.j0p),
                                       NCPoly::parse(ctx, vc.j2p),
                                       NCPoly::parse(ctx, vc.jm2p), [&] {
                                           std::vector<int> radical;
                                           for (const auto& r : vc.radical)
                                               radical.push_back(ctx->index_of(r));
                                           return radical;
                                       }());
        NCPoly K = casimir_from_virtual_copy(rep.kprime, "m1", "m2");
        Json j;
        j["checks_pass"] = rep.ok();
        j["casimir"] = K.str();
        j["casimir_central"] = verify_central(K).empty();
        return dump(j);
    }, py::arg("fixture"), py::arg("fixtures_dir") = "");
}
