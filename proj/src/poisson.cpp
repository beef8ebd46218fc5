#include "liewb/poisson.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace liewb {

PoissonStructure::PoissonStructure(const LieAlgebra& L) : algebra_(L) {
    if (L.has_params())
        throw LieError("Poisson structure requires parameter-free structure constants");
    coords_ = VarSet::make(L.names(), {});
}

Polynomial PoissonStructure::coordinate_bracket(int i, int j) const {
    Polynomial out(coords_);
    for (const auto& [k, c] : algebra_.bracket_basis(i, j))
        out += Polynomial::variable(coords_, size_t(k)) * c.constant_value();
    return out;
}

Polynomial PoissonStructure::poisson_bracket(const Polynomial& f,
                                             const Polynomial& g) const {
    if (f.vars() != coords_ || g.vars() != coords_)
        throw VarSetMismatch("poisson bracket over the wrong coordinates");
    Polynomial out(coords_);
    int n = int(dim());
    std::vector<Polynomial> df, dg;
    df.reserve(n);
    dg.reserve(n);
    for (int v = 0; v < n; ++v) {
        df.push_back(f.derivative(size_t(v)));
        dg.push_back(g.derivative(size_t(v)));
    }
    for (const auto& [ij, entries] : algebra_.brackets()) {
        auto [i, j] = ij;
        Polynomial lhs = df[i] * dg[j] - df[j] * dg[i];
        if (lhs.is_zero()) continue;
        out += lhs * coordinate_bracket(i, j);
    }
    return out;
}

DiffOp PoissonStructure::characteristic_field(int i) const {
    DiffOp field(coords_);
    for (int j = 0; j < int(dim()); ++j) {
        if (j == i) continue;
        Polynomial c = coordinate_bracket(i, j);
        if (c.is_zero()) continue;
        Monomial d;
        d.e.assign(coords_.size(), 0);
        d.e[j] = 1;
        field.add_term(d, c);
    }
    return field;
}

std::vector<DiffOp> PoissonStructure::characteristic_fields() const {
    std::vector<DiffOp> out;
    out.reserve(dim());
    for (int i = 0; i < int(dim()); ++i) out.push_back(characteristic_field(i));
    return out;
}

RationalInvariantReport verify_rational_invariant(const RationalPowerCandidate& c,
                                                  const PoissonStructure& S) {
    if (c.numerator.vars() != S.coords())
        throw VarSetMismatch("candidate over the wrong coordinates");
    if (c.base_var < 0 || size_t(c.base_var) >= S.dim())
        throw LieError("malformed candidate: base variable out of range");
    if (c.numerator.is_zero())
        throw LieError("malformed candidate: zero numerator");
    RationalInvariantReport rep;
    Polynomial xd = Polynomial::variable(S.coords(), size_t(c.base_var));
    for (int i = 0; i < int(S.dim()); ++i) {
        Polynomial xp = S.poisson_bracket(Polynomial::variable(S.coords(), size_t(i)),
                                          c.numerator);
        Polynomial xd_i = S.coordinate_bracket(i, c.base_var);
        // x_d X^_i(P) + q P X^_i(x_d)  ==  x_d^{1-q} X^_i(P x_d^q) cleared
        Polynomial lhs = xd * xp;
        Polynomial correction = c.numerator * xd_i;
        // multiply by the rational q
        Polynomial qc = correction * c.exponent;
        Polynomial total = lhs + qc;
        if (!total.is_zero()) rep.failures.push_back({i, total});
    }
    return rep;
}

PoissonSearch poisson_casimir_search(const PoissonStructure& S, int max_degree,
                                     const std::vector<int>& restrict_to, int jobs,
                                     size_t max_monomials) {
    PoissonSearch result;
    result.candidates =
        enumerate_monomials(S.dim(), max_degree, restrict_to, max_monomials);
    result.candidate_count = result.candidates.size();

    struct RowKey {
        int coord;
        Monomial mono;
        bool operator<(const RowKey& o) const {
            if (coord != o.coord) return coord < o.coord;
            return GrlexLess{}(mono, o.mono);
        }
    };
    // precompute coordinate brackets
    int n = int(S.dim());
    std::vector<std::vector<Polynomial>> table(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i].push_back(S.coordinate_bracket(i, j));

    auto process = [&](size_t begin, size_t end, std::map<RowKey, SparseRow>& sink) {
        for (size_t col = begin; col < end; ++col) {
            const Monomial& alpha = result.candidates[col];
            for (int i = 0; i < n; ++i) {
                // {x_i, x^alpha} = sum_v alpha_v x^{alpha - e_v} {x_i, x_v}
                Polynomial res(S.coords());
                for (int v = 0; v < n; ++v) {
                    if (alpha.e[v] == 0) continue;
                    const Polynomial& br = table[i][v];
                    if (br.is_zero()) continue;
                    Monomial rest = alpha;
                    rest.e[v] -= 1;
                    Polynomial mono(S.coords());
                    mono.add_term(rest, Rational(alpha.e[v]));
                    res += mono * br;
                }
                for (const auto& [m, c] : res.terms())
                    sink[{i, m}].emplace_back(int(col), c);
            }
        }
    };

    std::map<RowKey, SparseRow> rows;
    if (jobs <= 1 || result.candidates.size() < 64) {
        process(0, result.candidates.size(), rows);
    } else {
        size_t nw = size_t(jobs);
        std::vector<std::map<RowKey, SparseRow>> sinks(nw);
        std::vector<std::thread> pool;
        size_t chunk = (result.candidates.size() + nw - 1) / nw;
        for (size_t t = 0; t < nw; ++t) {
            size_t b = t * chunk, e = std::min(result.candidates.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back([&, b, e, t] { process(b, e, sinks[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& s : sinks)
            for (auto& [k, r] : s) {
                auto& dst = rows[k];
                dst.insert(dst.end(), r.begin(), r.end());
            }
    }

    RrefBasis rref(int(result.candidates.size()));
    for (auto& [k, r] : rows) {
        result.equation_rows += 1;
        rref.insert(std::move(r));
    }
    result.equation_rank = size_t(rref.rank());

    for (const auto& v : rref.nullspace()) {
        Polynomial p(S.coords());
        for (const auto& [col, c] : v) p.add_term(result.candidates[col], c);
        result.nullspace.push_back(std::move(p));
    }
    return result;
}

std::vector<RelationReport>
verify_functional_relations(const PoissonStructure& S,
                            const std::vector<RationalPowerCandidate>& candidates,
                            const std::vector<FunctionalRelation>& relations) {
    std::vector<RelationReport> out;
    for (const auto& rel : relations) {
        RelationReport rep;
        rep.name = rel.name;
        // the shared base variable of the power factors
        int base = -1;
        for (const auto& c : candidates) {
            if (is_zero(c.exponent)) continue;
            if (base < 0)
                base = c.base_var;
            else if (base != c.base_var) {
                rep.ok = false;
                rep.residual = "mixed base variables are not supported";
                out.push_back(rep);
                base = -2;
                break;
            }
        }
        if (base == -2) continue;
        // exponent per term; all must share an integral offset pattern
        struct Piece {
            Polynomial poly;
            Rational q;
        };
        std::vector<Piece> pieces;
        bool bad = false;
        for (const auto& term : rel.rhs) {
            Polynomial prod = Polynomial::constant(S.coords(), term.coeff);
            Rational q(0);
            for (const auto& [idx, e] : term.powers) {
                if (idx < 0 || size_t(idx) >= candidates.size())
                    throw LieError("relation references unknown candidate");
                for (int k = 0; k < e; ++k) prod = prod * candidates[idx].numerator;
                q += candidates[idx].exponent * e;
            }
            if (q.get_den() != 1) {
                rep.ok = false;
                rep.residual = "term with non-integral cleared exponent " + rat_str(q);
                bad = true;
                break;
            }
            pieces.push_back({std::move(prod), q});
        }
        if (bad) {
            out.push_back(rep);
            continue;
        }
        long shift = 0;
        for (const auto& p : pieces)
            shift = std::max(shift, -p.q.get_num().get_si());
        Polynomial rhs(S.coords());
        for (const auto& p : pieces) {
            long e = p.q.get_num().get_si() + shift;
            Polynomial xpow = base >= 0
                                  ? Polynomial::variable(S.coords(), size_t(base), int(e))
                                  : Polynomial::constant(S.coords(), Rational(1));
            if (e == 0) xpow = Polynomial::constant(S.coords(), Rational(1));
            rhs += p.poly * xpow;
        }
        Polynomial lhs = rel.lhs;
        if (shift > 0 && base >= 0)
            lhs = lhs * Polynomial::variable(S.coords(), size_t(base), int(shift));
        Polynomial residual = rhs - lhs;
        rep.ok = residual.is_zero();
        rep.residual = residual.is_zero() ? "" : residual.str();
        out.push_back(rep);
    }
    return out;
}

bool in_span(const Polynomial& f, const std::vector<Polynomial>& basis) {
    std::map<Monomial, int, GrlexLess> keys;
    auto row_of = [&](const Polynomial& p) {
        SparseRow r;
        for (const auto& [m, c] : p.terms()) {
            auto [it, fresh] = keys.emplace(m, int(keys.size()));
            r.emplace_back(it->second, c);
        }
        return sparse_normalize(std::move(r));
    };
    std::vector<SparseRow> rows;
    for (const auto& b : basis) rows.push_back(row_of(b));
    SparseRow target = row_of(f);
    RrefBasis rb(int(keys.size()) + 1);
    for (auto& r : rows) rb.insert(std::move(r));
    return rb.reduce(target).empty();
}

} // namespace liewb
