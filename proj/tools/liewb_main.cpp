// Command-line workbench: reproduces the catalog computations and verifies
// user-supplied data against the built-in fixtures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "liewb/catalog.hpp"

using namespace liewb;

namespace {

struct GlobalOpts {
    std::string fixtures_dir;
    bool json = false;
    bool strict = false;
    int jobs = 1;
    size_t max_monomials = 2000000;
};

Catalog make_catalog(const GlobalOpts& g) { return Catalog(g.fixtures_dir); }

// algebra source: fixture name first, file path fallback
const LieAlgebra& resolve_algebra(Catalog& cat, const std::string& source,
                                  std::map<std::string, LieAlgebra>& file_cache) {
    try {
        return cat.algebra(source);
    } catch (const FixtureError&) {
    }
    auto it = file_cache.find(source);
    if (it != file_cache.end()) return it->second;
    std::ifstream in(source);
    if (!in) throw FixtureError("no fixture or file named " + source);
    Json j;
    in >> j;
    auto [pos, fresh] = file_cache.emplace(source, algebra_from_json(j));
    return pos->second;
}

void emit(const GlobalOpts& g, const Json& payload, const std::string& text) {
    if (g.json)
        std::cout << payload.dump(1) << std::endl;
    else
        std::cout << text;
}

std::vector<int> parse_name_list(const LieAlgebra& L, const std::string& csv) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        int idx = L.index_of(token);
        if (idx < 0) throw FixtureError("unknown generator " + token);
        out.push_back(idx);
    }
    return out;
}

Json search_to_json(const CasimirSearch& res) {
    Json j;
    j["candidates"] = res.candidate_count;
    j["equations"] = res.equation_rows;
    j["rank"] = res.equation_rank;
    Json raw = Json::array();
    for (const auto& p : res.nullspace) raw.push_back(p.str());
    j["nullspace"] = raw;
    Json red = Json::array();
    for (const auto& p : res.reduced) red.push_back(p.str());
    j["reduced_generating_set"] = red;
    return j;
}

int cmd_verify_tables(const GlobalOpts& g, const std::string& algebra,
                      const std::string& expected) {
    Catalog cat = make_catalog(g);
    std::map<std::string, LieAlgebra> files;
    const LieAlgebra& L = resolve_algebra(cat, algebra, files);
    ExpectedTable table = cat.expected_table(expected);
    Json fixture = cat.raw(expected);
    DiffReport rep = fixture.contains("coordinates") ? [&] {
        PoissonStructure S(L);
        return table_diff(S, table);
    }()
                                                     : table_diff(L, table);
    std::ostringstream text;
    text << "table " << expected << " vs computed " << algebra << ": matched "
         << rep.matched << " ordered cells (" << rep.matched_unordered << "/"
         << rep.fixture_entries << " rows), " << rep.value_mismatch.size()
         << " mismatched, " << rep.missing_from_computation.size()
         << " missing from computation, " << rep.missing_from_table.size()
         << " missing from the table\n";
    for (const auto& e : rep.value_mismatch)
        text << "  mismatch " << e.lhs << ": computed " << e.computed
             << ", listed " << e.expected << "\n";
    for (const auto& e : rep.missing_from_computation)
        text << "  listed but vanishing: " << e.lhs << " = " << e.expected << "\n";
    for (const auto& e : rep.missing_from_table)
        text << "  unlisted: " << e.lhs << " = " << e.computed << "\n";
    emit(g, rep.to_json(), text.str());
    bool clean = rep.value_mismatch.empty() && rep.missing_from_computation.empty() &&
                 rep.missing_from_table.empty();
    return g.strict && !clean ? 1 : 0;
}

int cmd_grading(const GlobalOpts& g, const std::string& algebra,
                const std::string& grading_name) {
    Catalog cat = make_catalog(g);
    std::map<std::string, LieAlgebra> files;
    const LieAlgebra& L = resolve_algebra(cat, algebra, files);
    Json payload;
    std::ostringstream text;
    bool ok = true;

    Grading grading = cat.grading(grading_name, L);
    GradingReport rep = L.verify_grading(grading);
    ok = ok && rep.ok();
    payload["violations"] = Json::array();
    for (const auto& v : rep.violations) payload["violations"].push_back(v.detail);
    payload["subspace_dims"] = Json::object();
    text << "grading of " << algebra << ": " << rep.violations.size()
         << " violations; dims";
    for (const auto& [deg, dim] : rep.subspace_dims) {
        payload["subspace_dims"][std::to_string(deg)] = dim;
        text << " U_{" << deg << "}=" << dim;
    }
    text << "\n";
    for (const auto& v : rep.violations) text << "  violation: " << v.detail << "\n";

    // sl(2) triple: named generators or the canonical combinations
    Element j2, j0, jm2;
    if (L.index_of("J2") >= 0 && L.index_of("J0") >= 0 && L.index_of("Jm2") >= 0) {
        j2 = L.element_of("J2");
        j0 = L.element_of("J0");
        jm2 = L.element_of("Jm2");
    } else {
        j2 = parse_element(L, "L14");
        j0 = parse_element(L, "L16 - L13");
        jm2 = parse_element(L, "L15");
    }
    bool sl2_ok = L.bracket(j0, j2) == j2 * Rational(2) &&
                  L.bracket(j0, jm2) == jm2 * Rational(-2) &&
                  L.bracket(j2, jm2) == j0;
    ok = ok && sl2_ok;
    payload["sl2"] = sl2_ok;
    text << "sl(2) relations [J0,J2]=2J2, [J0,J-2]=-2J-2, [J2,J-2]=J0: "
         << (sl2_ok ? "hold" : "VIOLATED") << "\n";

    auto series = L.lower_central_series();
    Json dims = Json::array();
    text << "lower central series dims:";
    for (const auto& s : series) {
        dims.push_back(s.dim);
        text << " " << s.dim;
    }
    text << "\n";
    payload["lower_central_series"] = dims;
    emit(g, payload, text.str());
    return ok ? 0 : 1;
}

int cmd_casimir_nc(const GlobalOpts& g, const std::string& algebra, int max_degree,
                   const std::string& weight_filter, const std::string& restrict_vars) {
    Catalog cat = make_catalog(g);
    std::map<std::string, LieAlgebra> files;
    const LieAlgebra& L = resolve_algebra(cat, algebra, files);
    auto ctx = PbwContext::make(L);
    SearchFilters filters;
    if (!restrict_vars.empty()) filters.restrict_to = parse_name_list(L, restrict_vars);
    if (!weight_filter.empty()) {
        Element w = parse_element(L, weight_filter);
        std::vector<Rational> weights;
        for (size_t i = 0; i < L.dim(); ++i)
            weights.push_back(L.ad_eigenvalue(w, L.basis_element(int(i))));
        filters.weights = weights;
    }
    auto t0 = std::chrono::steady_clock::now();
    CasimirSearch res = casimir_search(ctx, max_degree, filters, g.jobs, g.max_monomials);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json payload = search_to_json(res);
    std::ostringstream text;
    text << "casimir-nc " << algebra << " N=" << max_degree << ": "
         << res.candidate_count << " candidate monomials, " << res.equation_rows
         << " equations, nullspace dimension " << res.nullspace.size() << " ("
         << dt << "s)\n";
    for (const auto& p : res.nullspace) text << "  basis: " << p.str() << "\n";
    text << "reduced generating set (" << res.reduced.size() << "):\n";
    for (const auto& p : res.reduced) text << "  " << p.str() << "\n";
    emit(g, payload, text.str());
    return 0;
}

int cmd_casimir_poisson(const GlobalOpts& g, const std::string& algebra, int max_degree,
                        const std::string& restrict_vars) {
    Catalog cat = make_catalog(g);
    std::map<std::string, LieAlgebra> files;
    const LieAlgebra& L = resolve_algebra(cat, algebra, files);
    PoissonStructure S(L);
    std::vector<int> restrict;
    if (!restrict_vars.empty()) restrict = parse_name_list(L, restrict_vars);
    PoissonSearch res = poisson_casimir_search(S, max_degree, restrict, g.jobs,
                                               g.max_monomials);
    Json payload;
    payload["candidates"] = res.candidate_count;
    payload["equations"] = res.equation_rows;
    payload["rank"] = res.equation_rank;
    payload["nullspace"] = Json::array();
    for (const auto& p : res.nullspace) payload["nullspace"].push_back(p.str());
    std::ostringstream text;
    text << "casimir-poisson " << algebra << " N=" << max_degree << ": "
         << res.candidate_count << " candidate monomials, " << res.equation_rows
         << " equations, nullspace dimension " << res.nullspace.size() << "\n";
    for (const auto& p : res.nullspace) text << "  basis: " << p.str() << "\n";
    emit(g, payload, text.str());
    return 0;
}

int cmd_verify_invariants(const GlobalOpts& g, const std::string& fixture) {
    Catalog cat = make_catalog(g);
    Json meta = cat.raw(fixture);
    std::string algebra = meta.at("algebra").get<std::string>();
    Json payload;
    std::ostringstream text;
    bool all_ok = true;

    if (meta.contains("relations")) {
        const LieAlgebra& L = cat.algebra(algebra);
        PoissonStructure S(L);
        auto cands = cat.rational_power_candidates(
            meta.at("candidates_fixture").get<std::string>(), S);
        auto rels = cat.functional_relations(fixture, S, cands);
        auto reports = verify_functional_relations(S, cands, rels);
        payload["relations"] = Json::array();
        for (const auto& r : reports) {
            Json o;
            o["name"] = r.name;
            o["ok"] = r.ok;
            if (!r.ok) o["residual"] = r.residual;
            payload["relations"].push_back(o);
            all_ok = all_ok && r.ok;
            text << r.name << ": " << (r.ok ? "holds" : "FAILS " + r.residual) << "\n";
        }
    } else if (meta.value("type", "") == "opaque") {
        payload["items"] = Json::array();
        for (const auto& inv : cat.invariants(fixture)) {
            payload["items"].push_back({{"name", inv.name}, {"as_printed", inv.as_printed}});
            text << inv.name << ": stored opaque display\n";
        }
    } else if (!meta.at("invariants").empty() &&
               meta.at("invariants").at(0).contains("numerator")) {
        const LieAlgebra& L = cat.algebra(algebra);
        PoissonStructure S(L);
        payload["invariants"] = Json::array();
        for (const auto& c : cat.rational_power_candidates(fixture, S)) {
            auto rep = verify_rational_invariant(c, S);
            Json o;
            o["name"] = c.name;
            o["ok"] = rep.ok();
            Json fails = Json::array();
            for (const auto& f : rep.failures)
                fails.push_back({{"coordinate", S.coords().name(size_t(f.coordinate))},
                                 {"residual", f.residual.str()}});
            o["failures"] = fails;
            payload["invariants"].push_back(o);
            all_ok = all_ok && rep.ok();
            text << c.name << ": " << (rep.ok() ? "annihilated by all fields" : "fails") << "\n";
            for (const auto& f : rep.failures)
                text << "    at " << S.coords().name(size_t(f.coordinate)) << ": "
                     << f.residual.str() << "\n";
        }
    } else if (meta.contains("coordinates")) {
        const LieAlgebra& L = cat.algebra(algebra);
        PoissonStructure S(L);
        payload["invariants"] = Json::array();
        for (const auto& inv : cat.invariants(fixture)) {
            Polynomial p = cat.parse_in_coords(fixture, S, inv.expr);
            bool ok = true;
            std::string witness;
            for (int i = 0; i < int(S.dim()) && ok; ++i) {
                Polynomial b =
                    S.poisson_bracket(Polynomial::variable(S.coords(), size_t(i)), p);
                if (!b.is_zero()) {
                    ok = false;
                    witness = "{" + S.coords().name(size_t(i)) + ",.} = " + b.str();
                }
            }
            payload["invariants"].push_back(
                {{"name", inv.name}, {"ok", ok}, {"witness", witness}});
            all_ok = all_ok && ok;
            text << inv.name << ": " << (ok ? "Poisson-central" : "FAILS " + witness) << "\n";
        }
    } else {
        const LieAlgebra& L = cat.algebra(algebra);
        auto ctx = PbwContext::make(L);
        payload["invariants"] = Json::array();
        for (const auto& inv : cat.invariants(fixture)) {
            NCPoly p = NCPoly::parse(ctx, inv.expr);
            auto failures = verify_central(p);
            Json o;
            o["name"] = inv.name;
            o["ok"] = failures.empty();
            if (!failures.empty()) {
                o["witness_generator"] = ctx->names()[failures[0].first];
                o["witness"] = failures[0].second.str();
            }
            payload["invariants"].push_back(o);
            all_ok = all_ok && failures.empty();
            text << inv.name << ": " << (failures.empty() ? "central" : "FAILS") << "\n";
            for (const auto& [i, c] : failures)
                text << "    [" << ctx->names()[i] << ", .] = " << c.str() << "\n";
        }
    }
    emit(g, payload, text.str());
    return g.strict && !all_ok ? 1 : 0;
}

int cmd_central_ext(const GlobalOpts& g, const std::string& algebra,
                    const std::string& pairs_arg) {
    Catalog cat = make_catalog(g);
    std::map<std::string, LieAlgebra> files;
    const LieAlgebra& L = resolve_algebra(cat, algebra, files);
    std::vector<ExtensionPair> pairs;
    std::istringstream in(pairs_arg);
    std::string token;
    while (std::getline(in, token, ';')) {
        auto comma = token.find(',');
        if (comma == std::string::npos) throw FixtureError("pair syntax: A,B;C,D");
        int a = L.index_of(token.substr(0, comma));
        int b = L.index_of(token.substr(comma + 1));
        if (a < 0 || b < 0) throw FixtureError("unknown generator in pair " + token);
        pairs.push_back({std::min(a, b), std::max(a, b)});
    }
    ExtensionSolution sol = solve_central_extension(L, pairs);
    Json payload;
    payload["constraints"] = sol.triples_total;
    payload["nonzero_rows"] = sol.rows_nonzero;
    payload["nonzero_entries"] = sol.entries_nonzero;
    payload["family_dim"] = sol.family_dim();
    Json family = Json::object();
    for (size_t r = 0; r < pairs.size(); ++r) {
        std::string key = "a" + std::to_string(r + 1);
        std::ostringstream expr;
        bool first = true;
        for (const auto& [f, c] : sol.dependence[r]) {
            if (!first) expr << " + ";
            first = false;
            if (!is_one(c)) expr << rat_str(c) << "*";
            expr << "a" << (f + 1);
        }
        family[key] = first ? "0" : expr.str();
    }
    payload["solution"] = family;
    std::ostringstream text;
    text << "central-ext " << algebra << ": " << sol.triples_total
         << " Jacobi constraints (" << sol.rows_nonzero << " nonzero rows, "
         << sol.entries_nonzero << " nonzero entries), family dimension "
         << sol.family_dim() << "\n";
    for (const auto& [k, v] : family.items())
        text << "  " << k << " = " << v.get<std::string>() << "\n";
    emit(g, payload, text.str());
    return 0;
}

int cmd_virtual_copy(const GlobalOpts& g, const std::string& fixture) {
    Catalog cat = make_catalog(g);
    auto ext = cat.extended_algebra(fixture);
    auto ctx = PbwContext::make_evaluated(ext.algebra, ext.central);
    Json meta = cat.raw(fixture);
    // the primed map lives in its own fixture; realization fixtures reuse it
    std::string map_fixture = meta.contains("j0p") ? fixture : "v2-virtual-copy";
    auto vc = cat.virtual_copy(map_fixture);
    NCPoly j0p = NCPoly::parse(ctx, vc.j0p);
    NCPoly j2p = NCPoly::parse(ctx, vc.j2p);
    NCPoly jm2p = NCPoly::parse(ctx, vc.jm2p);
    std::vector<int> radical;
    for (const auto& r : vc.radical) radical.push_back(ctx->index_of(r));
    auto rep = verify_virtual_copy(j0p, j2p, jm2p, radical);
    NCPoly K = casimir_from_virtual_copy(rep.kprime, "m1", "m2");
    bool commutes = verify_central(K).empty();

    Json payload;
    auto items = [&](const std::vector<VirtualCopyReport::Item>& v) {
        Json arr = Json::array();
        for (const auto& i : v) {
            Json o;
            o["check"] = i.name;
            o["ok"] = i.ok;
            if (!i.ok) o["residual"] = i.residual;
            arr.push_back(o);
        }
        return arr;
    };
    payload["radical_checks"] = items(rep.radical_checks);
    payload["sl2_checks"] = items(rep.sl2_checks);
    payload["casimir_checks"] = items(rep.casimir_checks);
    payload["fourth_degree_casimir"] = K.str();
    payload["casimir_commutes"] = commutes;
    std::ostringstream text;
    text << "virtual-copy " << fixture << ": radical checks "
         << rep.radical_checks.size() << ", sl2 checks " << rep.sl2_checks.size()
         << ", all " << (rep.ok() ? "pass" : "FAIL") << "\n";
    text << "fourth-degree Casimir commutes with all generators and the center: "
         << (commutes ? "yes" : "NO") << "\n";
    text << "K = " << K.str() << "\n";
    if (!vc.expected_fourth_degree.empty()) {
        auto diff = nc_diff(K, NCPoly::parse(ctx, vc.expected_fourth_degree));
        Json dj;
        dj["matched_terms"] = diff.matched;
        dj["mismatched_terms"] = Json::array();
        text << "display diff: " << diff.matched << " coefficients agree";
        for (const auto& mm : diff.mismatches) {
            dj["mismatched_terms"].push_back(
                {{"monomial", mm.monomial}, {"computed", mm.computed},
                 {"display", mm.expected}});
            text << "; " << mm.monomial << ": computed " << mm.computed
                 << " vs display " << mm.expected;
        }
        text << "\n";
        payload["display_diff"] = dj;
    }
    if (meta.contains("operators")) {
        auto fix = cat.extension_realization(fixture);
        std::vector<DiffOp> ops;
        for (const auto& n : ctx->names())
            for (const auto& [name, op] : fix.operators)
                if (name == n) ops.push_back(op);
        auto rc = verify_extended_realization(ctx, ops, K, fix.expected_casimir);
        Json rj;
        rj["commutators_matched"] = rc.matched;
        rj["commutators_total"] = rc.commutators.size();
        Json bad = Json::array();
        for (const auto& item : rc.commutators)
            if (!item.ok)
                bad.push_back({{"pair", item.pair}, {"computed", item.computed},
                               {"expected", item.expected}});
        rj["commutator_mismatches"] = bad;
        Json cj = Json::array();
        for (const auto& item : rc.casimir)
            cj.push_back({{"check", item.pair}, {"ok", item.ok},
                          {"computed", item.computed}, {"expected", item.expected}});
        rj["casimir_checks"] = cj;
        payload["realization"] = rj;
        text << "realization: " << rc.matched << "/" << rc.commutators.size()
             << " commutators match the extended table\n";
        for (const auto& item : rc.commutators)
            if (!item.ok)
                text << "  mismatch " << item.pair << ": computed " << item.computed
                     << ", table " << item.expected << "\n";
        for (const auto& item : rc.casimir)
            text << "  " << item.pair << ": " << (item.ok ? "ok" : "differs") << "\n";
    }
    emit(g, payload, text.str());
    return rep.ok() && commutes ? 0 : 1;
}

int cmd_realize(const GlobalOpts& g, const std::string& fixture,
                const std::string& expression) {
    Catalog cat = make_catalog(g);
    const LieAlgebra& L = cat.algebra(fixture);
    if (!L.realization()) throw FixtureError(fixture + " carries no realization");
    auto ctx = PbwContext::make(L);
    NCPoly p = NCPoly::parse(ctx, expression);
    DiffOp op = realize(p, *L.realization());
    Json payload;
    payload["expression"] = expression;
    payload["operator"] = op.str();
    emit(g, payload, op.str() + "\n");
    return 0;
}

int cmd_labels(const GlobalOpts& g, const std::string& algebra) {
    Catalog cat = make_catalog(g);
    const LieAlgebra& L = cat.algebra(algebra);
    Grading grading = cat.grading("w-grading", L);
    Element j0 = parse_element(L, "L16 - L13");
    Element sm1 = parse_element(L, "A6");
    Element s01 = parse_element(L, "L13 + L16");
    Element s02 = parse_element(L, "L17");
    auto elems = cat.elements("multiplet-basis");
    Json payload;
    payload["labels"] = Json::array();
    std::ostringstream text;
    std::vector<LabelVector> labels;
    for (const auto& [name, e] : elems) {
        LabelVector lv = L.label_vector(grading, j0, sm1, s01, s02, e);
        labels.push_back(lv);
        payload["labels"].push_back({{"name", name},
                                     {"i", rat_str(lv.i)},
                                     {"m", rat_str(lv.m)},
                                     {"a", rat_str(lv.a)},
                                     {"b", rat_str(lv.b)},
                                     {"c", rat_str(lv.c)}});
        text << name << ": (" << rat_str(lv.i) << "," << rat_str(lv.m) << ","
             << rat_str(lv.a) << "," << rat_str(lv.b) << "," << rat_str(lv.c) << ")\n";
    }
    bool additive = true;
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i + 1; j < elems.size(); ++j) {
            Element br = L.bracket(elems[i].second, elems[j].second);
            if (br.is_zero()) continue;
            LabelVector sum{labels[i].i + labels[j].i, labels[i].m + labels[j].m,
                            labels[i].a + labels[j].a, labels[i].b + labels[j].b,
                            labels[i].c + labels[j].c};
            if (!(L.label_vector(grading, j0, sm1, s01, s02, br) == sum))
                additive = false;
        }
    }
    payload["additive"] = additive;
    text << "label additivity on nonzero brackets: " << (additive ? "holds" : "FAILS")
         << "\n";
    // ladder coefficients per multiplet
    Element j2 = parse_element(L, "L14");
    Element jm2 = parse_element(L, "L15");
    payload["ladders"] = Json::array();
    for (const auto& mult : cat.multiplets("w-multiplets")) {
        auto table = L.ladder_coefficients(mult, j2, jm2);
        Json lj;
        lj["kind"] = mult.kind;
        lj["subspace"] = mult.subspace;
        lj["index"] = mult.index;
        Json up = Json::object(), down = Json::object();
        for (const auto& [m, lam] : table.raising) up[std::to_string(m)] = rat_str(lam);
        for (const auto& [m, lam] : table.lowering) down[std::to_string(m)] = rat_str(lam);
        lj["raising"] = up;
        lj["lowering"] = down;
        payload["ladders"].push_back(lj);
        text << mult.kind << "^{" << mult.subspace << "}_" << mult.index << " raising:";
        for (const auto& [m, lam] : table.raising)
            text << " " << m << "->" << rat_str(lam);
        text << "\n";
    }
    emit(g, payload, text.str());
    return additive ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"liewb: exact workbench for Lie algebras of polynomial vector fields"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--fixtures", g.fixtures_dir,
                   "fixture directory (default: LIEWB_FIXTURES or built-in)");
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_flag("--strict", g.strict, "nonzero exit on nonempty diffs");
    app.add_option("--jobs", g.jobs, "worker threads for row assembly");
    app.add_option("--max-monomials", g.max_monomials, "candidate monomial cap");

    std::string algebra = "w", expected, fixture, expression, pairs;
    std::string grading_name = "w-grading", weight_filter, restrict_vars;
    int max_degree = 2;

    auto* vt = app.add_subcommand("verify-tables", "diff a computed table against a fixture");
    vt->add_option("--algebra", algebra)->required();
    vt->add_option("--expected", expected)->required();

    auto* gr = app.add_subcommand("grading", "grading, sl(2) and central series report");
    gr->add_option("--algebra", algebra)->required();
    gr->add_option("--grading", grading_name);

    auto* nc = app.add_subcommand("casimir-nc", "enveloping-algebra Casimir search");
    nc->add_option("--algebra", algebra)->required();
    nc->add_option("--max-degree", max_degree)->required();
    nc->add_option("--weight-filter", weight_filter,
                   "element whose ad-eigenvalues filter candidates to weight zero");
    nc->add_option("--restrict-vars", restrict_vars, "comma-separated generators");

    auto* cp = app.add_subcommand("casimir-poisson", "Lie-Poisson Casimir search");
    cp->add_option("--algebra", algebra)->required();
    cp->add_option("--max-degree", max_degree)->required();
    cp->add_option("--restrict-vars", restrict_vars);

    auto* vi = app.add_subcommand("verify-invariants", "check an expected-invariants fixture");
    vi->add_option("--fixture", fixture)->required();

    auto* ce = app.add_subcommand("central-ext", "solve a central-extension ansatz");
    ce->add_option("--algebra", algebra)->required();
    ce->add_option("--pairs", pairs, "deformed pairs, e.g. C1,C2;C1,C3")->required();

    auto* vc = app.add_subcommand("virtual-copy", "verify a virtual-copy fixture");
    vc->add_option("--fixture", fixture)->required();

    auto* re = app.add_subcommand("realize", "realize an enveloping-algebra expression");
    re->add_option("--fixture", fixture)->required();
    re->add_option("--expression", expression)->required();

    auto* lb = app.add_subcommand("labels", "label vectors, additivity and ladders");
    lb->add_option("--algebra", algebra)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (vt->parsed()) return cmd_verify_tables(g, algebra, expected);
        if (gr->parsed()) return cmd_grading(g, algebra, grading_name);
        if (nc->parsed())
            return cmd_casimir_nc(g, algebra, max_degree, weight_filter, restrict_vars);
        if (cp->parsed()) return cmd_casimir_poisson(g, algebra, max_degree, restrict_vars);
        if (vi->parsed()) return cmd_verify_invariants(g, fixture);
        if (ce->parsed()) return cmd_central_ext(g, algebra, pairs);
        if (vc->parsed()) return cmd_virtual_copy(g, fixture);
        if (re->parsed()) return cmd_realize(g, fixture, expression);
        if (lb->parsed()) return cmd_labels(g, algebra);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}
