// Acceptance suite: one numbered criterion per invocation (1..15), or all
// when no argument is given. Prints one PASS/FAIL line per criterion and
// exits nonzero if any requested criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "liewb/catalog.hpp"

using namespace liewb;

namespace {

Catalog& cat() {
    static Catalog c;
    return c;
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SparseRow element_row(const Element& e) {
    SparseRow r;
    for (size_t i = 0; i < e.coords.size(); ++i)
        if (!is_zero(e.coords[i])) r.emplace_back(int(i), e.coords[i]);
    return r;
}

Outcome criterion_1() {
    Outcome out;
    auto t0 = Clock::now();
    const LieAlgebra& W = cat().algebra("w"); // from_realization: throws if not closed
    DiffReport rep = table_diff(W, cat().expected_table("appendix-a"));
    DiffReport again = table_diff(W, cat().expected_table("appendix-a"));
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << "dim=" << W.dim() << " matched=" << rep.matched << " (unordered "
      << rep.matched_unordered << "/" << rep.fixture_entries << ") mismatch="
      << rep.value_mismatch.size() << " missing-from-table="
      << rep.missing_from_table.size() << " stable="
      << (rep.to_json().dump() == again.to_json().dump()) << " time=" << dt << "s";
    out.detail = d.str();
    out.ok = W.dim() == 39 && rep.matched >= 300 &&
             rep.to_json().dump() == again.to_json().dump() && dt < 30.0;
    return out;
}

Outcome criterion_2() {
    Outcome out;
    const LieAlgebra& W = cat().algebra("w");
    Grading g = cat().grading("w-grading", W);
    GradingReport rep = W.verify_grading(g);
    // explicit zero check for every pair with out-of-range degree sum
    size_t out_of_range_pairs = 0, out_of_range_nonzero = 0;
    for (size_t i = 0; i < W.dim(); ++i) {
        for (size_t j = i + 1; j < W.dim(); ++j) {
            int s = g.degree[i] + g.degree[j];
            if (s >= -1 && s <= 2) continue;
            ++out_of_range_pairs;
            if (!W.bracket_basis(int(i), int(j)).empty()) ++out_of_range_nonzero;
        }
    }
    std::ostringstream d;
    d << "violations=" << rep.violations.size() << " dims=("
      << rep.subspace_dims[-1] << "," << rep.subspace_dims[0] << ","
      << rep.subspace_dims[1] << "," << rep.subspace_dims[2] << ")"
      << " out-of-range pairs=" << out_of_range_pairs
      << " nonzero=" << out_of_range_nonzero;
    out.detail = d.str();
    out.ok = rep.ok() && rep.subspace_dims[-1] == 6 && rep.subspace_dims[0] == 17 &&
             rep.subspace_dims[1] == 9 && rep.subspace_dims[2] == 7 &&
             out_of_range_nonzero == 0;
    return out;
}

Outcome criterion_3() {
    Outcome out;
    const LieAlgebra& W = cat().algebra("w");
    Element j2 = parse_element(W, "L14");
    Element j0 = parse_element(W, "L16 - L13");
    Element jm2 = parse_element(W, "L15");
    bool r1 = W.bracket(j0, j2) == j2 * Rational(2);
    bool r2 = W.bracket(j0, jm2) == jm2 * Rational(-2);
    bool r3 = W.bracket(j2, jm2) == j0;
    // the radical spans the 36 non-sl2 multiplet elements; ideal check
    auto elems = cat().elements("multiplet-basis");
    RrefBasis radical(int(W.dim()));
    std::vector<Element> rad;
    for (const auto& [name, e] : elems) {
        if (name == "J2" || name == "J0" || name == "Jm2") continue;
        rad.push_back(e);
        radical.insert(element_row(e));
    }
    bool ideal = radical.rank() == 36;
    for (size_t i = 0; i < W.dim() && ideal; ++i) {
        Element ei = W.basis_element(int(i));
        for (const auto& r : rad) {
            Element b = W.bracket(ei, r);
            if (!b.is_zero() && !radical.reduce(element_row(b)).empty()) {
                ideal = false;
                break;
            }
        }
    }
    std::ostringstream d;
    d << "[J0,J2]=2J2:" << r1 << " [J0,J-2]=-2J-2:" << r2 << " [J2,J-2]=J0:" << r3
      << " radical dim=" << radical.rank() << " ideal=" << ideal;
    out.detail = d.str();
    out.ok = r1 && r2 && r3 && ideal;
    return out;
}

Outcome criterion_4() {
    Outcome out;
    const LieAlgebra& W = cat().algebra("w");
    auto series = W.lower_central_series();
    bool dims = series.size() >= 3 && series[0].dim == 39 && series[1].dim == 36 &&
                series[2].dim == 36;
    RrefBasis span(int(W.dim()));
    for (const auto& e : series[1].basis) span.insert(element_row(e));
    bool excluded = true;
    for (const char* s : {"L13 + L16", "L17", "L6"})
        if (span.reduce(element_row(parse_element(W, s))).empty()) excluded = false;
    std::ostringstream d;
    d << "series dims=";
    for (const auto& st : series) d << st.dim << " ";
    d << "singlets outside=" << excluded;
    out.detail = d.str();
    out.ok = dims && excluded;
    return out;
}

Outcome criterion_5() {
    Outcome out;
    auto t0 = Clock::now();
    auto ctx = PbwContext::make(cat().algebra("v2"));
    CasimirSearch res = casimir_search(ctx, 4);
    std::vector<Polynomial> images;
    for (const auto& p : res.nullspace) images.push_back(p.commutative_image());
    bool member_c7 = in_span(NCPoly::parse(ctx, "C7").commutative_image(), images);
    bool members = member_c7, central = true;
    std::vector<NCPoly> four;
    for (const auto& inv : cat().invariants("v2-invariants")) {
        NCPoly p = NCPoly::parse(ctx, inv.expr);
        four.push_back(p);
        if (!in_span(p.commutative_image(), images)) members = false;
        if (!verify_central(p).empty()) central = false;
    }
    auto verdict = algebraic_independence(four);
    double dt = seconds_since(t0);
    // informational: the as-printed k3 display fails the central check
    auto printed = NCPoly::parse(ctx, "C5^2*C3^2 - C5^2*C4*C2 - C6^2*C2^2 + C6^2*C3*C1");
    auto printed_failures = verify_central(printed);
    std::ostringstream d;
    d << "candidates=" << res.candidate_count << " nullspace=" << res.nullspace.size()
      << " members=" << members << " central=" << central
      << " rank=" << verdict.rank << " time=" << dt << "s"
      << " [as-printed k3 central check: " << printed_failures.size()
      << " nonzero commutators, first witness [J2,.]]";
    out.detail = d.str();
    out.ok = members && central && verdict.rank == 4 && dt < 60.0;
    return out;
}

Outcome criterion_6() {
    Outcome out;
    PoissonStructure S(cat().algebra("v2"));
    PoissonSearch all = poisson_casimir_search(S, 4);
    PoissonSearch radical = poisson_casimir_search(S, 4, {3, 4, 5, 6, 7, 8, 9});
    bool counts = all.candidate_count == 1001 && radical.candidate_count == 330;
    bool members = true, central = true;
    auto ctx = PbwContext::make(cat().algebra("v2"));
    for (const auto& inv : cat().invariants("v2-poisson-invariants")) {
        Polynomial p = cat().parse_in_coords("v2-poisson-invariants", S, inv.expr);
        if (!in_span(p, all.nullspace)) members = false;
        if (!verify_central(symmetrize(ctx, p)).empty()) central = false;
    }
    std::ostringstream d;
    d << "candidates=" << all.candidate_count << "/" << radical.candidate_count
      << " equations=" << all.equation_rows << " nullspace=" << all.nullspace.size()
      << " members=" << members << " symmetrized central=" << central;
    out.detail = d.str();
    out.ok = counts && members && central;
    return out;
}

Outcome criterion_7() {
    Outcome out;
    PoissonStructure S(cat().algebra("v2"));
    auto cands = cat().rational_power_candidates("v2-generalized-invariants", S);
    std::ostringstream d;
    bool all_pass = true;
    for (const auto& c : cands) {
        auto rep = verify_rational_invariant(c, S);
        if (!rep.ok()) {
            all_pass = false;
            d << c.name << " fails at";
            for (const auto& f : rep.failures)
                d << " {" << S.coords().name(size_t(f.coordinate)) << "}";
            d << "; ";
        }
    }
    auto rels = cat().functional_relations("v2-functional-relations", S, cands);
    auto reports = verify_functional_relations(S, cands, rels);
    bool rel_ok = true;
    for (const auto& r : reports)
        if (!r.ok) rel_ok = false;
    d << "cleared functional relations " << (rel_ok ? "hold" : "FAIL");
    out.detail = d.str();
    out.ok = all_pass && rel_ok;
    return out;
}

Outcome criterion_8() {
    Outcome out;
    const LieAlgebra& v2 = cat().algebra("v2");
    auto ctx = PbwContext::make(v2);
    const auto& ops = *v2.realization();
    bool invariants_ok = true;
    for (const auto& inv : cat().invariants("v2-realization-invariants")) {
        NCPoly p = NCPoly::parse(ctx, inv.expr);
        if (!verify_realization_invariant(p, ops, v2.names()).ok())
            invariants_ok = false;
    }
    bool zero_ok = true;
    for (const auto& inv : cat().invariants("v2-invariants")) {
        if (inv.name == "K1") continue;
        if (!realize(NCPoly::parse(ctx, inv.expr), ops).is_zero()) zero_ok = false;
    }
    std::ostringstream d;
    d << "Kh1..Kh6 realization-invariant=" << invariants_ok
      << " realize(K2)=realize(K3)=realize(K4)=0: " << zero_ok;
    out.detail = d.str();
    out.ok = invariants_ok && zero_ok;
    return out;
}

Outcome criterion_9() {
    Outcome out;
    auto ext = cat().extended_algebra("v2-virtual-copy");
    const auto& sol = ext.solution;
    bool family = sol.family_dim() == 2 && sol.free_unknowns == std::vector<int>{3, 6} &&
                  sol.dependence[0].empty() && sol.dependence[1].empty() &&
                  sol.dependence[4].empty() && sol.dependence[5].empty() &&
                  sol.dependence[2].size() == 1 &&
                  sol.dependence[2].count(3) == 1 &&
                  sol.dependence[2].at(3) == Rational(-1, 3);
    std::ostringstream d;
    d << "family: a1=a2=a5=a6=0, a3=-a4/3, free={a4,a7}: " << family
      << "; constraints assembled=" << sol.triples_total << " (reported figure 120)"
      << " nonzero rows=" << sol.rows_nonzero
      << " nonzero entries=" << sol.entries_nonzero;
    out.detail = d.str();
    out.ok = family && sol.triples_total == 120;
    return out;
}

Outcome criterion_10() {
    Outcome out;
    auto ext = cat().extended_algebra("v2-virtual-copy");
    auto ctx = PbwContext::make_evaluated(ext.algebra, "Z");
    auto vc = cat().virtual_copy("v2-virtual-copy");
    NCPoly j0p = NCPoly::parse(ctx, vc.j0p);
    NCPoly j2p = NCPoly::parse(ctx, vc.j2p);
    NCPoly jm2p = NCPoly::parse(ctx, vc.jm2p);
    std::vector<int> radical;
    for (const auto& r : vc.radical) radical.push_back(ctx->index_of(r));
    auto rep = verify_virtual_copy(j0p, j2p, jm2p, radical);
    NCPoly K = casimir_from_virtual_copy(rep.kprime, "m1", "m2");
    // ten generators in the evaluated algebra plus the center acting as 1
    bool commutes = verify_central(K).empty();
    auto diff = nc_diff(K, NCPoly::parse(ctx, vc.expected_fourth_degree));
    std::ostringstream d;
    d << "checks(a,b,c)=" << rep.ok() << " K commutes with 10+center=" << commutes
      << " display diff: matched=" << diff.matched << " mismatched=" << diff.mismatches.size();
    for (const auto& mm : diff.mismatches)
        d << " [" << mm.monomial << ": computed " << mm.computed << ", display "
          << mm.expected << "]";
    out.detail = d.str();
    out.ok = rep.ok() && commutes;
    return out;
}

Outcome criterion_11() {
    Outcome out;
    std::ostringstream vec1, vec2;
    int pass = 0, total = 0;
    std::ostringstream d;
    for (int round = 0; round < 2; ++round) {
        std::ostringstream& vec = round == 0 ? vec1 : vec2;
        pass = 0;
        total = 0;
        for (const char* fix :
             {"v0-invariants", "vm1-invariants", "v12-invariants",
              "subalgebra-1-invariants", "subalgebra-2-invariants"}) {
            Json j = cat().raw(fix);
            auto ctx = PbwContext::make(cat().algebra(j.at("algebra").get<std::string>()));
            for (const auto& inv : cat().invariants(fix)) {
                NCPoly p = NCPoly::parse(ctx, inv.expr);
                auto failures = verify_central(p);
                ++total;
                if (failures.empty()) {
                    ++pass;
                    vec << "1";
                } else {
                    vec << "0";
                    if (round == 0)
                        d << " [" << fix << "/" << inv.name << " witness ["
                          << ctx->names()[failures[0].first]
                          << ",.]=" << failures[0].second.str() << "]";
                }
            }
        }
    }
    bool stable = vec1.str() == vec2.str();
    std::ostringstream head;
    head << "pass " << pass << "/" << total << " vector=" << vec1.str()
         << " stable=" << stable << d.str();
    out.detail = head.str();
    out.ok = stable && 5 * pass >= 4 * total; // >= 80%
    return out;
}

Outcome criterion_12() {
    Outcome out;
    auto t0 = Clock::now();
    auto ctx = PbwContext::make(cat().algebra("w"));
    CasimirSearch res = casimir_search(ctx, 2);
    double dt = seconds_since(t0);
    // span of products of lower-degree central elements: degree-1 solutions
    // and their pairwise products, plus constants
    CasimirSearch deg1 = casimir_search(ctx, 1);
    std::vector<Polynomial> lower;
    lower.push_back(Polynomial::constant(ctx->image_vars(), Rational(1)));
    std::vector<Polynomial> gens;
    for (const auto& p : deg1.nullspace) {
        Polynomial img = p.commutative_image();
        if (img.is_constant()) continue;
        gens.push_back(img);
        lower.push_back(img);
    }
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a; b < gens.size(); ++b) lower.push_back(gens[a] * gens[b]);
    bool trivial = true;
    for (const auto& p : res.nullspace)
        if (!in_span(p.commutative_image(), lower)) trivial = false;
    std::ostringstream d;
    d << "candidates=" << res.candidate_count << " nullspace=" << res.nullspace.size()
      << " degree-1 central elements=" << gens.size()
      << " solutions within lower-degree products=" << trivial << " time=" << dt
      << "s (degree-3 stretch available behind --max-monomials)";
    out.detail = d.str();
    out.ok = trivial && dt < 300.0;
    return out;
}

Outcome criterion_13() {
    Outcome out;
    const LieAlgebra& W = cat().algebra("w");
    Grading g = cat().grading("w-grading", W);
    Element j0 = parse_element(W, "L16 - L13");
    Element sm1 = parse_element(W, "A6");
    Element s01 = parse_element(W, "L13 + L16");
    Element s02 = parse_element(W, "L17");
    auto elems = cat().elements("multiplet-basis");
    bool all_labeled = true, additive = true;
    std::vector<LabelVector> labels;
    for (const auto& [name, e] : elems) {
        try {
            labels.push_back(W.label_vector(g, j0, sm1, s01, s02, e));
        } catch (const std::exception&) {
            all_labeled = false;
            labels.push_back({});
        }
    }
    size_t nonzero_brackets = 0;
    for (size_t i = 0; i < elems.size() && all_labeled; ++i) {
        for (size_t j = i + 1; j < elems.size(); ++j) {
            Element br = W.bracket(elems[i].second, elems[j].second);
            if (br.is_zero()) continue;
            ++nonzero_brackets;
            LabelVector sum{labels[i].i + labels[j].i, labels[i].m + labels[j].m,
                            labels[i].a + labels[j].a, labels[i].b + labels[j].b,
                            labels[i].c + labels[j].c};
            if (!(W.label_vector(g, j0, sm1, s01, s02, br) == sum)) additive = false;
        }
    }
    std::ostringstream d;
    d << "labeled=" << labels.size() << "/39 additive on " << nonzero_brackets
      << " nonzero brackets=" << additive;
    out.detail = d.str();
    out.ok = all_labeled && additive && labels.size() == 39;
    return out;
}

Outcome criterion_14() {
    Outcome out;
    const LieAlgebra& M = cat().algebra("multiplet-basis");
    DiffReport rep = table_diff(M, cat().expected_table("appendix-b"));
    DiffReport again = table_diff(M, cat().expected_table("appendix-b"));
    bool stable = rep.to_json().dump() == again.to_json().dump();
    std::ostringstream d;
    d << "matched=" << rep.matched << " (unordered " << rep.matched_unordered << "/"
      << rep.fixture_entries << ") mismatch=" << rep.value_mismatch.size()
      << " missing-from-computation=" << rep.missing_from_computation.size()
      << " missing-from-table=" << rep.missing_from_table.size()
      << " stable=" << stable;
    out.detail = d.str();
    out.ok = rep.matched >= 200 && stable;
    return out;
}

// criterion 15: 1000 seeded random cases per law
Outcome criterion_15() {
    Outcome out;
    int failures = 0;
    constexpr int kCases = 1000;
    VarSet vars = VarSet::make({"x1", "x2", "x3"});
    auto rand_poly = [](SplitMix64& rng, const VarSet& vs, int terms, int deg) {
        Polynomial p(vs);
        int n = int(rng.range(0, terms));
        for (int t = 0; t < n; ++t) {
            Monomial m;
            m.e.assign(vs.size(), 0);
            int dd = int(rng.range(0, deg));
            for (int k = 0; k < dd; ++k) m.e[size_t(rng.range(0, long(vs.size()) - 1))] += 1;
            p.add_term(m, random_rational(rng, 9, 4));
        }
        return p;
    };
    {
        SplitMix64 rng(201);
        for (int i = 0; i < kCases; ++i) {
            Polynomial a = rand_poly(rng, vars, 3, 3), b = rand_poly(rng, vars, 3, 3),
                       c = rand_poly(rng, vars, 3, 3);
            if (!((a * b) * c == a * (b * c)) || !(a * b == b * a) ||
                !(a * (b + c) == a * b + a * c))
                ++failures;
            size_t v = size_t(rng.range(0, 2));
            if (!((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v)))
                ++failures;
            if (!(Polynomial::parse(vars, (a + c).str()) == a + c)) ++failures;
        }
    }
    {
        SplitMix64 rng(202);
        auto rand_op = [&](int max_order) {
            DiffOp d(vars);
            int terms = int(rng.range(1, 2));
            for (int t = 0; t < terms; ++t) {
                Monomial idx;
                idx.e.assign(vars.size(), 0);
                int ord = int(rng.range(0, max_order));
                for (int k = 0; k < ord; ++k)
                    idx.e[size_t(rng.range(0, long(vars.size()) - 1))] += 1;
                d.add_term(idx, rand_poly(rng, vars, 2, 2));
            }
            return d;
        };
        for (int i = 0; i < kCases; ++i) {
            DiffOp d = rand_op(2), e = rand_op(2);
            Polynomial f = rand_poly(rng, vars, 3, 4);
            if (!(d.compose(e).apply(f) == d.apply(e.apply(f)))) ++failures;
            DiffOp a = rand_op(1), b = rand_op(1), c = rand_op(1);
            DiffOp jac = a.commutator(b.commutator(c)) + b.commutator(c.commutator(a)) +
                         c.commutator(a.commutator(b));
            if (!jac.is_zero()) ++failures;
        }
    }
    {
        auto ctx = PbwContext::make(cat().algebra("v2"));
        SplitMix64 rng(203);
        auto rand_nc = [&](int deg) {
            NCPoly p(ctx);
            int terms = int(rng.range(1, 2));
            for (int t = 0; t < terms; ++t) {
                Monomial m;
                m.e.assign(ctx->dim(), 0);
                int dd = int(rng.range(0, deg));
                for (int k = 0; k < dd; ++k)
                    m.e[size_t(rng.range(0, long(ctx->dim()) - 1))] += 1;
                p.add_term(m, Polynomial::constant(ctx->params(), random_rational(rng, 9, 4)));
            }
            return p;
        };
        VarSet radical = VarSet::make({"C1", "C2", "C3", "C4", "C5", "C6", "C7"});
        VarSet dual = VarSet::make(ctx->names(), {});
        for (int i = 0; i < kCases; ++i) {
            NCPoly a = rand_nc(2), b = rand_nc(2), c = rand_nc(2);
            if (!((a * b) * c == a * (b * c))) ++failures;
            Polynomial p = rand_poly(rng, radical, 3, 4).map_onto(dual);
            if (!(symmetrize(ctx, p).commutative_image() ==
                  p.map_onto(ctx->image_vars())))
                ++failures;
        }
    }
    {
        PoissonStructure S(cat().algebra("v2"));
        SplitMix64 rng(204);
        for (int i = 0; i < kCases; ++i) {
            Polynomial f = rand_poly(rng, S.coords(), 2, 2);
            Polynomial g = rand_poly(rng, S.coords(), 2, 2);
            Polynomial h = rand_poly(rng, S.coords(), 2, 2);
            if (!(S.poisson_bracket(f, g * h) ==
                  S.poisson_bracket(f, g) * h + g * S.poisson_bracket(f, h)))
                ++failures;
            Polynomial jac = S.poisson_bracket(f, S.poisson_bracket(g, h)) +
                             S.poisson_bracket(g, S.poisson_bracket(h, f)) +
                             S.poisson_bracket(h, S.poisson_bracket(f, g));
            if (!jac.is_zero()) ++failures;
        }
    }
    std::ostringstream d;
    d << "1000 seeded cases per law (ring axioms, Leibniz, round trip, "
         "apply/compose, operator Jacobi, PBW associativity, symmetrization, "
         "Poisson Leibniz/Jacobi); failures=" << failures;
    out.detail = d.str();
    out.ok = failures == 0;
    return out;
}

using CriterionFn = std::function<Outcome()>;

const std::vector<std::pair<std::string, CriterionFn>>& criteria() {
    static std::vector<std::pair<std::string, CriterionFn>> list = {
        {"appendix-a reproduction", criterion_1},
        {"grading", criterion_2},
        {"sl(2) and Levi", criterion_3},
        {"central series", criterion_4},
        {"V2 noncommutative search", criterion_5},
        {"V2 Poisson search", criterion_6},
        {"generalized invariants", criterion_7},
        {"realization invariants", criterion_8},
        {"central extension", criterion_9},
        {"virtual copy", criterion_10},
        {"catalog invariants", criterion_11},
        {"full-W triviality probe", criterion_12},
        {"labels", criterion_13},
        {"appendix-b diff", criterion_14},
        {"property suites", criterion_15},
    };
    return list;
}

} // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_ok = true;
    for (size_t i = 0; i < criteria().size(); ++i) {
        int num = int(i) + 1;
        if (only != 0 && num != only) continue;
        Outcome out;
        try {
            out = criteria()[i].second();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << num << " (" << criteria()[i].first
                  << "): " << (out.ok ? "PASS" : "FAIL") << " -- " << out.detail
                  << std::endl;
        if (!out.ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
