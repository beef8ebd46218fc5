#include <doctest.h>

#include "liewb/catalog.hpp"

using namespace liewb;

namespace {

Catalog& cat() {
    static Catalog c;
    return c;
}

constexpr int kCases = 1000;

Polynomial random_poly(SplitMix64& rng, const VarSet& vars, int max_terms,
                       int max_degree) {
    Polynomial p(vars);
    int terms = int(rng.range(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        m.e.assign(vars.size(), 0);
        int deg = int(rng.range(0, max_degree));
        for (int d = 0; d < deg; ++d) m.e[size_t(rng.range(0, long(vars.size()) - 1))] += 1;
        p.add_term(m, random_rational(rng, 9, 4));
    }
    return p;
}

DiffOp random_op(SplitMix64& rng, const VarSet& vars, int max_order, int coeff_degree) {
    DiffOp d(vars);
    int terms = int(rng.range(1, 3));
    for (int t = 0; t < terms; ++t) {
        Monomial idx;
        idx.e.assign(vars.size(), 0);
        int ord = int(rng.range(0, max_order));
        for (int k = 0; k < ord; ++k) idx.e[size_t(rng.range(0, long(vars.size()) - 1))] += 1;
        Polynomial c = random_poly(rng, vars, 2, coeff_degree);
        d.add_term(idx, c);
    }
    return d;
}

DiffOp random_field(SplitMix64& rng, const VarSet& vars, int coeff_degree) {
    DiffOp d(vars);
    int terms = int(rng.range(1, 3));
    for (int t = 0; t < terms; ++t) {
        Monomial idx;
        idx.e.assign(vars.size(), 0);
        idx.e[size_t(rng.range(0, long(vars.size()) - 1))] = 1;
        d.add_term(idx, random_poly(rng, vars, 2, coeff_degree));
    }
    return d;
}

NCPoly random_nc(SplitMix64& rng, const PbwContextPtr& ctx, int max_degree) {
    NCPoly p(ctx);
    int terms = int(rng.range(1, 3));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        m.e.assign(ctx->dim(), 0);
        int deg = int(rng.range(0, max_degree));
        for (int d = 0; d < deg; ++d) m.e[size_t(rng.range(0, long(ctx->dim()) - 1))] += 1;
        p.add_term(m, Polynomial::constant(ctx->params(), random_rational(rng, 9, 4)));
    }
    return p;
}

} // namespace

TEST_CASE("ring axioms hold on random polynomials") {
    VarSet vars = VarSet::make({"x1", "x2", "x3", "m1"}, {"m1"});
    SplitMix64 rng(101);
    for (int i = 0; i < kCases; ++i) {
        Polynomial a = random_poly(rng, vars, 3, 3);
        Polynomial b = random_poly(rng, vars, 3, 3);
        Polynomial c = random_poly(rng, vars, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("derivatives are linear and satisfy the Leibniz rule") {
    VarSet vars = VarSet::make({"x1", "x2", "x3"});
    SplitMix64 rng(102);
    for (int i = 0; i < kCases; ++i) {
        Polynomial p = random_poly(rng, vars, 3, 3);
        Polynomial q = random_poly(rng, vars, 3, 3);
        size_t v = size_t(rng.range(0, 2));
        Rational c = random_rational(rng, 9, 4);
        CHECK((p * c + q).derivative(v) == p.derivative(v) * c + q.derivative(v));
        CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
    }
}

TEST_CASE("canonical serialization round trips on random polynomials") {
    VarSet vars = VarSet::make({"x1", "x2", "m1"}, {"m1"});
    SplitMix64 rng(103);
    for (int i = 0; i < kCases; ++i) {
        Polynomial p = random_poly(rng, vars, 4, 4);
        CHECK(Polynomial::parse(vars, p.str()) == p);
        CHECK(Polynomial::parse(vars, p.str()).str() == p.str());
    }
}

TEST_CASE("apply and compose agree on random operators") {
    VarSet vars = VarSet::make({"x1", "x2", "x3"});
    SplitMix64 rng(104);
    for (int i = 0; i < kCases; ++i) {
        DiffOp d = random_op(rng, vars, 2, 2);
        DiffOp e = random_op(rng, vars, 2, 2);
        Polynomial f = random_poly(rng, vars, 3, 4);
        CHECK(d.compose(e).apply(f) == d.apply(e.apply(f)));
    }
}

TEST_CASE("operator commutators are antisymmetric and satisfy Jacobi") {
    VarSet vars = VarSet::make({"x1", "x2", "x3"});
    SplitMix64 rng(105);
    for (int i = 0; i < kCases; ++i) {
        DiffOp a = random_op(rng, vars, 1, 2);
        DiffOp b = random_op(rng, vars, 1, 2);
        DiffOp c = random_op(rng, vars, 1, 2);
        CHECK(a.commutator(b) == -(b.commutator(a)));
        DiffOp jacobi = a.commutator(b.commutator(c)) + b.commutator(c.commutator(a)) +
                        c.commutator(a.commutator(b));
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("vector fields close under the commutator") {
    VarSet vars = VarSet::make({"x1", "x2", "x3"});
    SplitMix64 rng(106);
    for (int i = 0; i < kCases; ++i) {
        DiffOp a = random_field(rng, vars, 2);
        DiffOp b = random_field(rng, vars, 2);
        DiffOp c = a.commutator(b);
        CHECK((c.is_zero() || c.is_vector_field()));
    }
}

TEST_CASE("pbw products are associative") {
    auto ctx = PbwContext::make(cat().algebra("v2"));
    SplitMix64 rng(107);
    for (int i = 0; i < kCases; ++i) {
        NCPoly a = random_nc(rng, ctx, 2);
        NCPoly b = random_nc(rng, ctx, 2);
        NCPoly c = random_nc(rng, ctx, 2);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("ad acts as a derivation of the pbw product") {
    auto ctx = PbwContext::make(cat().algebra("v2"));
    SplitMix64 rng(108);
    for (int i = 0; i < kCases; ++i) {
        NCPoly p = random_nc(rng, ctx, 2);
        NCPoly q = random_nc(rng, ctx, 2);
        int g = int(rng.range(0, long(ctx->dim()) - 1));
        CHECK((p * q).ad(g) == p.ad(g) * q + p * q.ad(g));
    }
}

TEST_CASE("symmetrization inverts the commutative image") {
    auto ctx = PbwContext::make(cat().algebra("v2"));
    VarSet dual = VarSet::make(ctx->names(), {});
    SplitMix64 rng(109);
    // exact round trip on the abelian radical letters (the invariants' home)
    VarSet radical = VarSet::make({"C1", "C2", "C3", "C4", "C5", "C6", "C7"});
    for (int i = 0; i < kCases; ++i) {
        Polynomial p = random_poly(rng, radical, 3, 4).map_onto(dual);
        NCPoly phi = symmetrize(ctx, p);
        CHECK(phi.commutative_image() == p.map_onto(ctx->image_vars()));
    }
    // on general letters reordering corrections stay strictly below the
    // leading degree
    for (int i = 0; i < kCases; ++i) {
        Polynomial p = random_poly(rng, dual, 3, 4);
        if (p.is_zero()) continue;
        NCPoly phi = symmetrize(ctx, p);
        Polynomial residual =
            phi.commutative_image() - p.map_onto(ctx->image_vars());
        CHECK((residual.is_zero() || residual.degree() < p.degree()));
    }
}

TEST_CASE("poisson bracket satisfies Leibniz and Jacobi") {
    PoissonStructure S(cat().algebra("v2"));
    SplitMix64 rng(110);
    for (int i = 0; i < kCases; ++i) {
        Polynomial f = random_poly(rng, S.coords(), 2, 2);
        Polynomial g = random_poly(rng, S.coords(), 2, 2);
        Polynomial h = random_poly(rng, S.coords(), 2, 2);
        CHECK(S.poisson_bracket(f, g * h) ==
              S.poisson_bracket(f, g) * h + g * S.poisson_bracket(f, h));
        Polynomial jac = S.poisson_bracket(f, S.poisson_bracket(g, h)) +
                         S.poisson_bracket(g, S.poisson_bracket(h, f)) +
                         S.poisson_bracket(h, S.poisson_bracket(f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("characteristic fields implement the coordinate brackets") {
    PoissonStructure S(cat().algebra("v2"));
    auto fields = S.characteristic_fields();
    SplitMix64 rng(111);
    for (int i = 0; i < kCases; ++i) {
        Polynomial g = random_poly(rng, S.coords(), 3, 3);
        int idx = int(rng.range(0, long(S.dim()) - 1));
        CHECK(fields[idx].apply(g) ==
              S.poisson_bracket(Polynomial::variable(S.coords(), size_t(idx)), g));
    }
}

TEST_CASE("realization is an algebra homomorphism on random products") {
    // realize extends the field realization to the enveloping algebra, so
    // the PBW product must agree with operator composition on all inputs
    const LieAlgebra& v2 = cat().algebra("v2");
    auto ctx = PbwContext::make(v2);
    const auto& ops = *v2.realization();
    SplitMix64 rng(112);
    for (int i = 0; i < 300; ++i) {
        NCPoly p = random_nc(rng, ctx, 2);
        NCPoly q = random_nc(rng, ctx, 2);
        CHECK(realize(p * q, ops) == realize(p, ops).compose(realize(q, ops)));
        int g = int(rng.range(0, long(ctx->dim()) - 1));
        CHECK(realize(p.ad(g), ops) == ops[g].commutator(realize(p, ops)));
    }
}

TEST_CASE("search outputs re-verify as central") {
    auto ctx = PbwContext::make(cat().algebra("v2"));
    CasimirSearch res = casimir_search(ctx, 3);
    for (const auto& p : res.nullspace) CHECK(verify_central(p).empty());
    PoissonStructure S(cat().algebra("v2"));
    PoissonSearch ps = poisson_casimir_search(S, 3);
    for (const auto& p : ps.nullspace) {
        for (int i = 0; i < int(S.dim()); ++i) {
            CHECK(S.poisson_bracket(Polynomial::variable(S.coords(), size_t(i)), p)
                      .is_zero());
        }
    }
}
