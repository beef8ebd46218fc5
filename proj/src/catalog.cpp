#include "liewb/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace liewb {

std::string default_fixture_dir() {
    if (const char* env = std::getenv("LIEWB_FIXTURES"); env && *env) return env;
#ifdef LIEWB_SOURCE_FIXTURES
    return LIEWB_SOURCE_FIXTURES;
#else
    return "fixtures";
#endif
}

Json DiffReport::to_json() const {
    Json j;
    j["matched"] = matched;
    j["matched_unordered"] = matched_unordered;
    j["fixture_entries"] = fixture_entries;
    auto dump = [](const std::vector<Entry>& v) {
        Json arr = Json::array();
        for (const auto& e : v) {
            Json o;
            o["pair"] = e.lhs;
            o["computed"] = e.computed;
            o["expected"] = e.expected;
            if (!e.note.empty()) o["note"] = e.note;
            arr.push_back(o);
        }
        return arr;
    };
    j["value_mismatch"] = dump(value_mismatch);
    j["missing_from_table"] = dump(missing_from_table);
    j["missing_from_computation"] = dump(missing_from_computation);
    return j;
}

namespace {

std::string combo_str(const std::vector<std::pair<int, Rational>>& v,
                      const std::vector<std::string>& names) {
    if (v.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : v) {
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        if (!is_one(a)) out << rat_str(a) << "*";
        out << names[k];
    }
    return out.str();
}

} // namespace

DiffReport table_diff(const std::vector<std::string>& names, const BracketFn& bracket,
                      const ExpectedTable& expected) {
    DiffReport rep;
    rep.fixture_entries = expected.entries.size();
    auto index_of = [&](const std::string& n) -> int {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return int(i);
        return -1;
    };
    std::set<std::pair<int, int>> listed; // unordered pairs covered by fixture
    for (const auto& e : expected.entries) {
        int a = index_of(e.lhs_a), b = index_of(e.lhs_b);
        std::string pair_label = "[" + e.lhs_a + "," + e.lhs_b + "]";
        bool resolvable = a >= 0 && b >= 0 && a != b;
        std::vector<std::pair<int, Rational>> want;
        for (const auto& [n, c] : e.rhs) {
            int k = index_of(n);
            if (k < 0) resolvable = false;
            want.emplace_back(k, c);
        }
        if (!resolvable) {
            DiffReport::Entry entry;
            entry.lhs = pair_label;
            entry.computed = "(unresolvable generator name)";
            std::ostringstream exp;
            exp << pair_label << " = ";
            bool first = true;
            for (const auto& [n, c] : e.rhs) {
                if (!first) exp << " + ";
                first = false;
                exp << rat_str(c) << "*" << n;
            }
            entry.expected = e.rhs.empty() ? "0" : exp.str();
            entry.note = e.note.empty() ? "entry names no known generator" : e.note;
            rep.value_mismatch.push_back(std::move(entry));
            continue;
        }
        listed.insert({std::min(a, b), std::max(a, b)});
        std::vector<std::pair<int, Rational>> got = bracket(a, b);
        std::sort(want.begin(), want.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        // merge duplicate names in the expected side
        std::vector<std::pair<int, Rational>> wantm;
        for (auto& [k, c] : want) {
            if (!wantm.empty() && wantm.back().first == k)
                wantm.back().second += c;
            else
                wantm.emplace_back(k, c);
        }
        std::erase_if(wantm, [](const auto& p) { return is_zero(p.second); });
        if (got == wantm) {
            rep.matched_unordered += 1;
            rep.matched += 2; // the listed cell and its antisymmetric partner
            continue;
        }
        DiffReport::Entry entry;
        entry.lhs = pair_label;
        entry.computed = combo_str(got, names);
        entry.expected = combo_str(wantm, names);
        entry.note = e.note;
        if (!wantm.empty() && got.empty())
            rep.missing_from_computation.push_back(std::move(entry));
        else
            rep.value_mismatch.push_back(std::move(entry));
    }
    // computed nonzero brackets the fixture does not list
    for (size_t i = 0; i < names.size(); ++i) {
        for (size_t j = i + 1; j < names.size(); ++j) {
            if (listed.count({int(i), int(j)})) continue;
            auto got = bracket(int(i), int(j));
            if (got.empty()) continue;
            DiffReport::Entry entry;
            entry.lhs = "[" + names[i] + "," + names[j] + "]";
            entry.computed = combo_str(got, names);
            entry.expected = "(not listed)";
            rep.missing_from_table.push_back(std::move(entry));
        }
    }
    return rep;
}

DiffReport table_diff(const LieAlgebra& computed, const ExpectedTable& expected) {
    BracketFn f = [&](int i, int j) {
        std::vector<std::pair<int, Rational>> out;
        for (const auto& [k, c] : computed.bracket_basis(i, j))
            out.emplace_back(k, c.constant_value());
        return out;
    };
    return table_diff(computed.names(), f, expected);
}

DiffReport table_diff(const PoissonStructure& computed, const ExpectedTable& expected) {
    BracketFn f = [&](int i, int j) {
        std::vector<std::pair<int, Rational>> out;
        Polynomial p = computed.coordinate_bracket(i, j);
        for (const auto& [m, c] : p.terms()) {
            for (size_t v = 0; v < m.e.size(); ++v)
                if (m.e[v] == 1) out.emplace_back(int(v), c);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    };
    return table_diff(computed.algebra().names(), f, expected);
}

Element parse_element(const LieAlgebra& L, const std::string& text) {
    VarSet vs = VarSet::make(L.names(), {});
    Polynomial p = Polynomial::parse(vs, text);
    Element e = L.zero_element();
    for (const auto& [m, c] : p.terms()) {
        if (m.total_degree() != 1)
            throw FixtureError("not a linear combination of generators: " + text);
        for (size_t v = 0; v < m.e.size(); ++v)
            if (m.e[v] == 1) e.coords[v] += c;
    }
    return e;
}

RealizationInvariantReport verify_realization_invariant(const NCPoly& p,
                                                        const std::vector<DiffOp>& ops,
                                                        const std::vector<std::string>& names) {
    RealizationInvariantReport rep;
    rep.realized = realize(p, ops);
    for (size_t i = 0; i < ops.size(); ++i) {
        DiffOp c = ops[i].commutator(rep.realized);
        if (!c.is_zero()) rep.failures.emplace_back(names[i], std::move(c));
    }
    return rep;
}

// ---- algebra (de)serialization ---------------------------------------------

Json algebra_to_json(const LieAlgebra& L) {
    Json j;
    if (L.realization()) {
        j["variables"] = Json::array();
        const VarSet& vars = L.realization()->front().vars();
        std::vector<std::string> params;
        for (size_t i = 0; i < vars.size(); ++i) {
            j["variables"].push_back(vars.name(i));
            if (vars.is_param(i)) params.push_back(vars.name(i));
        }
        j["parameters"] = params;
        Json gens = Json::array();
        for (size_t i = 0; i < L.dim(); ++i) {
            Json g;
            g["name"] = L.names()[i];
            g["op"] = (*L.realization())[i].str();
            gens.push_back(g);
        }
        j["generators"] = gens;
        return j;
    }
    j["dim"] = L.dim();
    j["names"] = L.names();
    std::vector<std::string> params;
    for (size_t i = 0; i < L.params().size(); ++i) params.push_back(L.params().name(i));
    if (!params.empty()) j["parameters"] = params;
    Json brackets = Json::object();
    for (const auto& [ij, entries] : L.brackets()) {
        std::string key = std::to_string(ij.first) + "," + std::to_string(ij.second);
        Json arr = Json::array();
        for (const auto& [k, c] : entries)
            arr.push_back(Json::array({L.names()[k], c.str()}));
        brackets[key] = arr;
    }
    j["brackets"] = brackets;
    return j;
}

LieAlgebra algebra_from_json(const Json& j) {
    if (j.contains("generators")) {
        std::vector<std::string> vnames, pnames;
        for (const auto& v : j.at("variables")) vnames.push_back(v.get<std::string>());
        if (j.contains("parameters"))
            for (const auto& p : j.at("parameters")) pnames.push_back(p.get<std::string>());
        VarSet vars = VarSet::make(vnames, pnames);
        std::vector<std::string> names;
        std::vector<DiffOp> ops;
        for (const auto& g : j.at("generators")) {
            names.push_back(g.at("name").get<std::string>());
            ops.push_back(DiffOp::parse(vars, g.at("op").get<std::string>()));
        }
        return LieAlgebra::from_realization(std::move(names), ops);
    }
    std::vector<std::string> names;
    for (const auto& n : j.at("names")) names.push_back(n.get<std::string>());
    std::vector<std::string> pnames;
    if (j.contains("parameters"))
        for (const auto& p : j.at("parameters")) pnames.push_back(p.get<std::string>());
    VarSet params = VarSet::make(pnames, pnames);
    LieAlgebra L(names, params);
    if (j.contains("brackets")) {
        for (const auto& [key, arr] : j.at("brackets").items()) {
            auto comma = key.find(',');
            int a = std::stoi(key.substr(0, comma));
            int b = std::stoi(key.substr(comma + 1));
            std::vector<std::pair<int, Polynomial>> entries;
            for (const auto& e : arr) {
                int k = L.index_of(e.at(0).get<std::string>());
                if (k < 0) throw FixtureError("bracket names unknown generator");
                entries.emplace_back(k, Polynomial::parse(params, e.at(1).get<std::string>()));
            }
            L.set_bracket(a, b, std::move(entries));
        }
    }
    return L;
}

// ---- catalog ----------------------------------------------------------------

Catalog::Catalog(std::string dir) : dir_(dir.empty() ? default_fixture_dir() : std::move(dir)) {
    manifest_ = load_file("manifest.json");
    if (!manifest_.contains("fixtures"))
        throw FixtureError("manifest.json lacks a fixtures list");
}

Json Catalog::load_file(const std::string& file) const {
    std::ifstream in(dir_ + "/" + file);
    if (!in) throw FixtureError("cannot open fixture file " + dir_ + "/" + file);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw FixtureError("parse error in " + file + ": " + e.what());
    }
    return j;
}

std::string Catalog::kind_of(const std::string& name) const {
    for (const auto& f : manifest_.at("fixtures"))
        if (f.at("name") == name) return f.at("kind").get<std::string>();
    throw FixtureError("unknown fixture: " + name);
}

Json Catalog::raw(const std::string& name) const {
    for (const auto& f : manifest_.at("fixtures"))
        if (f.at("name") == name) return load_file(f.at("file").get<std::string>());
    throw FixtureError("unknown fixture: " + name);
}

const LieAlgebra& Catalog::algebra(const std::string& name) {
    auto it = algebra_cache_.find(name);
    if (it != algebra_cache_.end()) return it->second;
    std::string kind = kind_of(name);
    Json j = raw(name);
    if (kind == "realized-algebra" || kind == "abstract-algebra") {
        auto [pos, ok] = algebra_cache_.emplace(name, algebra_from_json(j));
        return pos->second;
    }
    if (kind == "basis-change") {
        const LieAlgebra& base = algebra(j.at("base").get<std::string>());
        std::vector<std::string> names;
        std::vector<Element> span;
        for (const auto& e : j.at("elements")) {
            names.push_back(e.at("name").get<std::string>());
            span.push_back(parse_element(base, e.at("expr").get<std::string>()));
        }
        LieAlgebra derived = span.size() == base.dim()
                                 ? base.change_of_basis(names, span)
                                 : base.subalgebra(names, span);
        auto [pos, ok] = algebra_cache_.emplace(name, std::move(derived));
        return pos->second;
    }
    throw FixtureError(name + " is not an algebra fixture (kind " + kind + ")");
}

std::vector<std::pair<std::string, Element>> Catalog::elements(const std::string& name) {
    auto it = element_cache_.find(name);
    if (it != element_cache_.end()) return it->second;
    Json j = raw(name);
    if (kind_of(name) != "basis-change")
        throw FixtureError(name + " is not a basis-change fixture");
    const LieAlgebra& base = algebra(j.at("base").get<std::string>());
    std::vector<std::pair<std::string, Element>> out;
    for (const auto& e : j.at("elements"))
        out.emplace_back(e.at("name").get<std::string>(),
                         parse_element(base, e.at("expr").get<std::string>()));
    element_cache_[name] = out;
    return out;
}

Grading Catalog::grading(const std::string& name, const LieAlgebra& target) {
    Json j = raw(name);
    Grading g;
    for (const auto& d : j.at("degree_set")) g.degree_set.push_back(d.get<int>());
    g.degree.assign(target.dim(), 0);
    std::vector<bool> seen(target.dim(), false);
    for (const auto& [gen, deg] : j.at("degrees").items()) {
        int idx = target.index_of(gen);
        if (idx < 0) throw FixtureError("grading names unknown generator " + gen);
        g.degree[idx] = deg.get<int>();
        seen[idx] = true;
    }
    for (size_t i = 0; i < target.dim(); ++i)
        if (!seen[i]) throw FixtureError("grading misses generator " + target.names()[i]);
    return g;
}

std::vector<Multiplet> Catalog::multiplets(const std::string& name) {
    Json j = raw(name);
    std::string basis_fixture = j.at("basis").get<std::string>();
    auto elems = elements(basis_fixture);
    auto find = [&](const std::string& n) -> const Element& {
        for (const auto& [en, e] : elems)
            if (en == n) return e;
        throw FixtureError("multiplet member " + n + " not in " + basis_fixture);
    };
    std::vector<Multiplet> out;
    for (const auto& m : j.at("multiplets")) {
        Multiplet mult;
        mult.kind = m.at("kind").get<std::string>();
        mult.subspace = m.at("subspace").get<int>();
        mult.index = m.value("index", 0);
        for (const auto& mem : m.at("members"))
            mult.members.emplace_back(find(mem.at("name").get<std::string>()),
                                      mem.at("m").get<int>());
        out.push_back(std::move(mult));
    }
    return out;
}

ExpectedTable Catalog::expected_table(const std::string& name) {
    Json j = raw(name);
    ExpectedTable t;
    t.name = name;
    std::map<std::string, std::string> coords;
    if (j.contains("coordinates"))
        for (const auto& [x, g] : j.at("coordinates").items())
            coords[x] = g.get<std::string>();
    auto resolve = [&](const std::string& n) {
        auto it = coords.find(n);
        return it == coords.end() ? n : it->second;
    };
    for (const auto& e : j.at("entries")) {
        ExpectedEntry entry;
        entry.lhs_a = resolve(e.at("lhs").at(0).get<std::string>());
        entry.lhs_b = resolve(e.at("lhs").at(1).get<std::string>());
        for (const auto& r : e.at("rhs"))
            entry.rhs.emplace_back(resolve(r.at(0).get<std::string>()),
                                   rat_parse(r.at(1).get<std::string>()));
        entry.note = e.value("note", "");
        t.entries.push_back(std::move(entry));
    }
    return t;
}

std::vector<Catalog::Invariant> Catalog::invariants(const std::string& name) {
    Json j = raw(name);
    std::vector<Invariant> out;
    for (const auto& e : j.at("invariants")) {
        Invariant inv;
        inv.name = e.at("name").get<std::string>();
        inv.expr = e.at("expr").get<std::string>();
        inv.as_printed = e.value("as_printed", "");
        inv.note = e.value("note", "");
        out.push_back(std::move(inv));
    }
    return out;
}

std::map<std::string, std::string> Catalog::coordinate_map(const std::string& name) const {
    Json j = raw(name);
    std::map<std::string, std::string> out;
    if (j.contains("coordinates"))
        for (const auto& [x, g] : j.at("coordinates").items()) out[x] = g.get<std::string>();
    return out;
}

Polynomial Catalog::parse_in_coords(const std::string& fixture, const PoissonStructure& S,
                                    const std::string& expr) const {
    auto coords = coordinate_map(fixture);
    std::vector<std::string> xnames;
    for (const auto& [x, g] : coords) xnames.push_back(x);
    if (coords.empty()) return Polynomial::parse(S.coords(), expr);
    VarSet xs = VarSet::make(xnames, {});
    Polynomial in_x = Polynomial::parse(xs, expr);
    Polynomial out(S.coords());
    for (const auto& [m, c] : in_x.terms()) {
        Monomial t;
        t.e.assign(S.coords().size(), 0);
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            auto idx = S.coords().index_of(coords.at(xs.name(v)));
            if (!idx) throw FixtureError("coordinate maps to unknown generator");
            t.e[*idx] += m.e[v];
        }
        out.add_term(t, c);
    }
    return out;
}

std::vector<RationalPowerCandidate>
Catalog::rational_power_candidates(const std::string& name, const PoissonStructure& S) {
    Json j = raw(name);
    auto coords = coordinate_map(name);
    std::vector<RationalPowerCandidate> out;
    for (const auto& e : j.at("invariants")) {
        RationalPowerCandidate c;
        c.name = e.at("name").get<std::string>();
        c.numerator = parse_in_coords(name, S, e.at("numerator").get<std::string>());
        std::string base = e.at("base").get<std::string>();
        if (coords.count(base)) base = coords.at(base);
        auto idx = S.coords().index_of(base);
        if (!idx) throw FixtureError("unknown base variable " + base);
        c.base_var = int(*idx);
        c.exponent = rat_parse(e.at("exponent").get<std::string>());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<FunctionalRelation>
Catalog::functional_relations(const std::string& name, const PoissonStructure& S,
                              const std::vector<RationalPowerCandidate>& candidates) {
    Json j = raw(name);
    std::string lhs_fixture = j.at("lhs_fixture").get<std::string>();
    auto lhs_invs = invariants(lhs_fixture);
    auto lhs_of = [&](const std::string& n) {
        for (const auto& inv : lhs_invs)
            if (inv.name == n) return parse_in_coords(lhs_fixture, S, inv.expr);
        throw FixtureError("relation lhs references unknown invariant " + n);
    };
    auto cand_index = [&](const std::string& n) {
        for (size_t i = 0; i < candidates.size(); ++i)
            if (candidates[i].name == n) return int(i);
        throw FixtureError("relation references unknown candidate " + n);
    };
    std::vector<FunctionalRelation> out;
    for (const auto& r : j.at("relations")) {
        FunctionalRelation rel;
        rel.name = r.at("name").get<std::string>();
        rel.lhs = lhs_of(r.at("lhs").get<std::string>());
        for (const auto& t : r.at("rhs")) {
            FunctionalRelation::Term term;
            term.coeff = rat_parse(t.at("coeff").get<std::string>());
            for (const auto& p : t.at("powers"))
                term.powers.emplace_back(cand_index(p.at(0).get<std::string>()),
                                         p.at(1).get<int>());
            rel.rhs.push_back(std::move(term));
        }
        out.push_back(std::move(rel));
    }
    return out;
}

Catalog::ExtendedAlgebra Catalog::extended_algebra(const std::string& fixture) {
    Json j = raw(fixture);
    const LieAlgebra& base = algebra(j.at("algebra").get<std::string>());
    ExtendedAlgebra out;
    for (const auto& p : j.at("ansatz_pairs")) {
        int a = base.index_of(p.at(0).get<std::string>());
        int b = base.index_of(p.at(1).get<std::string>());
        if (a < 0 || b < 0) throw FixtureError("ansatz pair names unknown generator");
        out.pairs.push_back({std::min(a, b), std::max(a, b)});
    }
    out.solution = solve_central_extension(base, out.pairs);
    std::vector<std::string> params;
    for (const auto& p : j.at("parameters")) params.push_back(p.get<std::string>());
    out.central = j.value("center", "Z");
    out.algebra = build_central_extension(base, out.pairs, out.solution, params, out.central);
    return out;
}

Catalog::VirtualCopyFixture Catalog::virtual_copy(const std::string& name) const {
    Json j = raw(name);
    VirtualCopyFixture f;
    f.j0p = j.at("j0p").get<std::string>();
    f.j2p = j.at("j2p").get<std::string>();
    f.jm2p = j.at("jm2p").get<std::string>();
    for (const auto& r : j.at("radical")) f.radical.push_back(r.get<std::string>());
    f.expected_fourth_degree = j.value("expected_fourth_degree", "");
    return f;
}

Catalog::ExtensionRealizationFixture
Catalog::extension_realization(const std::string& name) const {
    Json j = raw(name);
    ExtensionRealizationFixture f;
    std::vector<std::string> vnames, pnames;
    for (const auto& v : j.at("variables")) vnames.push_back(v.get<std::string>());
    for (const auto& p : j.at("parameters")) {
        vnames.push_back(p.get<std::string>());
        pnames.push_back(p.get<std::string>());
    }
    f.vars = VarSet::make(vnames, pnames);
    for (const auto& o : j.at("operators"))
        f.operators.emplace_back(o.at("name").get<std::string>(),
                                 DiffOp::parse(f.vars, o.at("op").get<std::string>()));
    if (j.contains("expected_casimir_op"))
        f.expected_casimir = DiffOp::parse(f.vars, j.at("expected_casimir_op").get<std::string>());
    return f;
}

std::vector<std::pair<std::string, std::string>> Catalog::validate_all() {
    std::vector<std::pair<std::string, std::string>> results;
    for (const auto& f : manifest_.at("fixtures")) {
        std::string name = f.at("name").get<std::string>();
        std::string kind = f.at("kind").get<std::string>();
        std::string status = "ok";
        try {
            if (kind == "realized-algebra" || kind == "abstract-algebra" ||
                kind == "basis-change") {
                const LieAlgebra& L = algebra(name);
                if (!L.verify_jacobi().empty()) status = "jacobi violation";
            } else if (kind == "grading") {
                Json j = raw(name);
                grading(name, algebra(j.at("algebra").get<std::string>()));
            } else if (kind == "multiplet-set") {
                for (const auto& m : multiplets(name))
                    if (!multiplet_pattern_ok(m)) status = "eigenvalue pattern violation";
            } else if (kind == "expected-table") {
                expected_table(name);
            } else if (kind == "expected-invariants") {
                Json j = raw(name);
                if (j.contains("invariants") && j.at("invariants").empty())
                    status = "empty";
            } else if (kind == "virtual-copy-map") {
                virtual_copy(name);
            } else if (kind == "extension-realization") {
                extension_realization(name);
            } else {
                status = "unknown kind";
            }
        } catch (const std::exception& e) {
            status = std::string("error: ") + e.what();
        }
        results.emplace_back(name, status);
    }
    return results;
}

} // namespace liewb
