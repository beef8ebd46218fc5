#include <doctest.h>

#include "liewb/catalog.hpp"

using namespace liewb;

namespace {

Catalog& cat() {
    static Catalog c;
    return c;
}

const PoissonStructure& v2poisson() {
    static PoissonStructure S(cat().algebra("v2"));
    return S;
}

} // namespace

TEST_CASE("coordinate brackets follow the structure constants") {
    const PoissonStructure& S = v2poisson();
    int j0 = 1, j2 = 0, c1 = 3;
    CHECK(S.coordinate_bracket(j0, j2).str() == "2*J2");
    CHECK(S.coordinate_bracket(j2, c1).str() == "3*C2");
    Polynomial f = Polynomial::parse(S.coords(), "J0*C1 + C2^2");
    CHECK(S.poisson_bracket(f, f).is_zero());
}

TEST_CASE("the coordinate bracket table diff") {
    const PoissonStructure& S = v2poisson();
    DiffReport rep = table_diff(S, cat().expected_table("poisson-v2-table"));
    CHECK(rep.matched_unordered == 22); // every row agrees, duplicates included
    CHECK(rep.value_mismatch.empty());
    CHECK(rep.missing_from_computation.empty());
    // the display turns out to cover every nonzero bracket
    CHECK(rep.missing_from_table.empty());
}

TEST_CASE("characteristic fields realize the coordinate brackets") {
    const PoissonStructure& S = v2poisson();
    auto fields = S.characteristic_fields();
    REQUIRE(fields.size() == 10);
    // the central coordinate has the zero field
    CHECK(fields[9].is_zero());
    // X^ for the lowest quadruplet member contains 3*C1*d(J0)
    int c1 = 3;
    Polynomial g = Polynomial::parse(S.coords(), "J0^2*C2 - C3*C4");
    for (int i = 0; i < 10; ++i) {
        Polynomial via_field = fields[i].apply(g);
        Polynomial via_bracket =
            S.poisson_bracket(Polynomial::variable(S.coords(), size_t(i)), g);
        CHECK(via_field == via_bracket);
    }
    CHECK(fields[c1].str() == "3*C1*dJ0 - 3*C2*dJ2");
}

TEST_CASE("poisson search counts match the reported figures") {
    const PoissonStructure& S = v2poisson();
    PoissonSearch res = poisson_casimir_search(S, 4);
    CHECK(res.candidate_count == 1001);
    CHECK(res.nullspace.size() == 8);
    // restricted to the seven radical coordinates
    std::vector<int> radical = {3, 4, 5, 6, 7, 8, 9};
    PoissonSearch res7 = poisson_casimir_search(S, 4, radical);
    CHECK(res7.candidate_count == 330);
    // invariants from the display lie in the span
    std::vector<Polynomial> images = res.nullspace;
    for (const auto& inv : cat().invariants("v2-poisson-invariants")) {
        Polynomial p = cat().parse_in_coords("v2-poisson-invariants", S, inv.expr);
        CHECK(in_span(p, images));
        CHECK(S.poisson_bracket(Polynomial::variable(S.coords(), 0), p).is_zero());
    }
    // the as-printed fourth invariant is weight-inhomogeneous and drops out
    Polynomial bad = cat().parse_in_coords(
        "v2-poisson-invariants", S, "-x7*x8^2 + 3*x6*x8^2*x9 - 3*x5*x8*x9^2 + x4*x9^3");
    CHECK(!in_span(bad, images));
}

TEST_CASE("abelian poisson search returns the coordinates") {
    const LieAlgebra& W = cat().algebra("w");
    LieAlgebra ab = W.subalgebra({"A1", "A2"}, {W.element_of("A1"), W.element_of("A2")});
    PoissonStructure S(ab);
    PoissonSearch res = poisson_casimir_search(S, 1);
    CHECK(res.nullspace.size() == 3); // 1, x1, x2
}

TEST_CASE("symmetrized poisson invariants are central in the enveloping algebra") {
    const PoissonStructure& S = v2poisson();
    auto ctx = PbwContext::make(cat().algebra("v2"));
    for (const auto& inv : cat().invariants("v2-poisson-invariants")) {
        Polynomial p = cat().parse_in_coords("v2-poisson-invariants", S, inv.expr);
        NCPoly phi = symmetrize(ctx, p);
        CHECK(verify_central(phi).empty());
        CHECK(phi.commutative_image() == p.map_onto(ctx->image_vars()));
    }
    // the commutative and enveloping displays differ by a scalar only
    Polynomial kt2 = cat().parse_in_coords(
        "v2-poisson-invariants", S,
        "-3*x5^2*x6^2 + 4*x4*x6^3 + 4*x5^3*x7 - 6*x4*x5*x6*x7 + x4^2*x7^2");
    NCPoly k2 = NCPoly::parse(
        ctx, "C3^2*C2^2 - 4/3*C3^3*C1 - 4/3*C4*C2^3 + 2*C4*C3*C2*C1 - 1/3*C4^2*C1^2");
    CHECK(symmetrize(ctx, kt2) == k2.scale(Rational(-3)));
}

TEST_CASE("rational power candidates and their failure pattern") {
    const PoissonStructure& S = v2poisson();
    auto cands = cat().rational_power_candidates("v2-generalized-invariants", S);
    REQUIRE(cands.size() == 5);
    // the central coordinate passes everywhere
    CHECK(verify_rational_invariant(cands[4], S).ok());
    // the four others are annihilated by everything except the raising
    // direction J2 (coordinate index 0)
    for (size_t i = 0; i < 4; ++i) {
        auto rep = verify_rational_invariant(cands[i], S);
        CHECK(!rep.ok());
        REQUIRE(rep.failures.size() == 1);
        CHECK(rep.failures[0].coordinate == 0);
    }
    // spec example: K̄1 check at J2 leaves exactly the K̄2 numerator
    auto rep1 = verify_rational_invariant(cands[0], S);
    Polynomial expected = cat().parse_in_coords("v2-generalized-invariants", S,
                                                "x4^2*x7 - 3*x4*x5*x6 + 2*x5^3");
    CHECK(rep1.failures[0].residual == expected);
    // a wrong candidate fails more broadly
    RationalPowerCandidate broken;
    broken.name = "bad";
    broken.numerator = Polynomial::parse(S.coords(), "C2");
    broken.base_var = 3;
    broken.exponent = rat_parse("-2/3");
    CHECK(!verify_rational_invariant(broken, S).ok());
}

TEST_CASE("functional relations verify after clearing the base power") {
    const PoissonStructure& S = v2poisson();
    auto cands = cat().rational_power_candidates("v2-generalized-invariants", S);
    auto rels = cat().functional_relations("v2-functional-relations", S, cands);
    auto reports = verify_functional_relations(S, cands, rels);
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        INFO(r.name << " residual " << r.residual);
        CHECK(r.ok);
    }
}
