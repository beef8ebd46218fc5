#include "liewb/extensions.hpp"

#include <algorithm>
#include <sstream>

namespace liewb {

ExtensionSolution solve_central_extension(const LieAlgebra& base,
                                          const std::vector<ExtensionPair>& pairs) {
    if (base.has_params())
        throw LieError("extension ansatz requires parameter-free base constants");
    if (!base.verify_jacobi().empty())
        throw LieError("base algebra violates the Jacobi identity");
    std::map<std::pair<int, int>, int> unknown_of;
    for (size_t r = 0; r < pairs.size(); ++r) {
        auto [p, q] = pairs[r];
        if (p >= q) throw LieError("extension pair must have p < q");
        if (!unknown_of.emplace(std::make_pair(p, q), int(r)).second)
            throw LieError("duplicate extension pair");
    }
    // a(p,q): antisymmetric lookup
    auto a_of = [&](int p, int q) -> std::pair<int, int> { // (unknown, sign)
        if (p == q) return {-1, 0};
        bool flip = p > q;
        if (flip) std::swap(p, q);
        auto it = unknown_of.find({p, q});
        if (it == unknown_of.end()) return {-1, 0};
        return {it->second, flip ? -1 : 1};
    };

    ExtensionSolution sol;
    int n = int(base.dim());
    RrefBasis rref(int(pairs.size()));
    std::vector<SparseRow> all_rows;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                // Z-component of [[i,j],k] + [[j,k],i] + [[k,i],j]
                SparseRow row;
                auto add = [&](int a, int b, int c) {
                    for (const auto& [m, coeff] : base.bracket_basis(a, b)) {
                        auto [r, sign] = a_of(m, c);
                        if (r < 0) continue;
                        row.emplace_back(r, coeff.constant_value() * sign);
                    }
                };
                add(i, j, k);
                add(j, k, i);
                add(k, i, j);
                row = sparse_normalize(std::move(row));
                sol.triples_total += 1;
                if (!row.empty()) {
                    sol.rows_nonzero += 1;
                    sol.entries_nonzero += row.size();
                    all_rows.push_back(std::move(row));
                }
            }
        }
    }
    for (auto& r : all_rows) rref.insert(std::move(r));
    sol.rank = size_t(rref.rank());

    std::vector<bool> pivot(pairs.size(), false);
    for (int c : rref.pivot_columns()) pivot[c] = true;
    sol.dependence.assign(pairs.size(), {});
    for (size_t r = 0; r < pairs.size(); ++r) {
        if (!pivot[r]) {
            sol.free_unknowns.push_back(int(r));
            sol.dependence[r][int(r)] = 1;
        }
    }
    // pivot unknown r with row (r + sum c_f a_f = 0) -> a_r = -sum c_f a_f
    for (const auto& [pc, row] : rref.rows()) {
        for (const auto& [c, v] : row) {
            if (c == pc) continue;
            sol.dependence[pc][c] = -v;
        }
    }
    return sol;
}

LieAlgebra build_central_extension(const LieAlgebra& base,
                                   const std::vector<ExtensionPair>& pairs,
                                   const ExtensionSolution& sol,
                                   const std::vector<std::string>& param_names,
                                   const std::string& central_name) {
    if (param_names.size() != sol.free_unknowns.size())
        throw LieError("one parameter name per free unknown required");
    VarSet params = VarSet::make(param_names, param_names);
    std::vector<std::string> names = base.names();
    names.push_back(central_name);
    LieAlgebra L(names, params);
    int n = int(base.dim());
    int z = n;
    // unknown index -> its value as a polynomial in the parameters
    std::map<int, size_t> param_slot;
    for (size_t f = 0; f < sol.free_unknowns.size(); ++f)
        param_slot[sol.free_unknowns[f]] = f;
    auto unknown_value = [&](int r) {
        Polynomial v(params);
        for (const auto& [f, c] : sol.dependence[r]) {
            Monomial m;
            m.e.assign(params.size(), 0);
            m.e[param_slot.at(f)] = 1;
            v.add_term(m, c);
        }
        return v;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<std::pair<int, Polynomial>> entries;
            for (const auto& [k, c] : base.bracket_basis(i, j))
                entries.emplace_back(k, Polynomial::constant(params, c.constant_value()));
            for (size_t r = 0; r < pairs.size(); ++r) {
                if (pairs[r].p == i && pairs[r].q == j) {
                    Polynomial v = unknown_value(int(r));
                    if (!v.is_zero()) entries.emplace_back(z, v);
                }
            }
            L.set_bracket(i, j, std::move(entries));
        }
    }
    return L;
}

namespace {

VirtualCopyReport::Item check_zero(const std::string& name, const NCPoly& v) {
    VirtualCopyReport::Item item;
    item.name = name;
    item.ok = v.is_zero();
    if (!item.ok) item.residual = v.str();
    return item;
}

} // namespace

VirtualCopyReport verify_virtual_copy(const NCPoly& j0p, const NCPoly& j2p,
                                      const NCPoly& jm2p,
                                      const std::vector<int>& radical) {
    const auto& ctx = j0p.ctx();
    VirtualCopyReport rep;
    const struct {
        const char* name;
        const NCPoly* p;
    } primed[3] = {{"J0'", &j0p}, {"J2'", &j2p}, {"J-2'", &jm2p}};
    for (const auto& pr : primed) {
        for (int c : radical) {
            NCPoly g = NCPoly::generator(ctx, c);
            NCPoly comm = g.commutator(*pr.p);
            rep.radical_checks.push_back(check_zero(
                "[" + ctx->names()[c] + "," + pr.name + "]", comm));
        }
    }
    for (const auto& pr : primed) {
        if (pr.p->is_zero())
            rep.sl2_checks.push_back({std::string(pr.name) + " nonzero", false,
                                      "primed generator vanishes"});
    }
    rep.sl2_checks.push_back(
        check_zero("[J0',J2'] - 2J2'", j0p.commutator(j2p) - j2p.scale(Rational(2))));
    rep.sl2_checks.push_back(check_zero("[J0',J-2'] + 2J-2'",
                                        j0p.commutator(jm2p) + jm2p.scale(Rational(2))));
    rep.sl2_checks.push_back(
        check_zero("[J2',J-2'] - J0'", j2p.commutator(jm2p) - j0p));

    NCPoly anti = j2p * jm2p + jm2p * j2p;
    rep.kprime = j0p * j0p + anti.scale(Rational(2));
    for (int i = 0; i < int(ctx->dim()); ++i) {
        NCPoly comm = NCPoly::generator(ctx, i).commutator(rep.kprime);
        if (!comm.is_zero())
            rep.casimir_checks.push_back(
                check_zero("[" + ctx->names()[i] + ",K']", comm));
    }
    if (rep.casimir_checks.empty())
        rep.casimir_checks.push_back({"K' central", true, ""});
    return rep;
}

NCPoly casimir_from_virtual_copy(const NCPoly& kprime, const std::string& m1,
                                 const std::string& m2) {
    const auto& params = kprime.ctx()->params();
    auto i1 = params.index_of(m1), i2 = params.index_of(m2);
    if (!i1 || !i2) throw LieError("unknown central parameters " + m1 + ", " + m2);
    Polynomial factor(params);
    Monomial m;
    m.e.assign(params.size(), 0);
    m.e[*i1] += 1;
    m.e[*i2] += 1;
    factor.add_term(m, Rational(-1, 6));
    return kprime.scale(factor);
}

NCTermDiff nc_diff(const NCPoly& computed, const NCPoly& expected) {
    NCTermDiff out;
    auto mono_str = [&](const Monomial& m, const PbwContextPtr& ctx) {
        std::string s;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ctx->names()[i];
            if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
        }
        return s.empty() ? std::string("1") : s;
    };
    std::map<Monomial, std::pair<Polynomial, Polynomial>, GrlexLess> merged;
    for (const auto& [m, c] : computed.terms()) merged[m].first = c;
    for (const auto& [m, c] : expected.terms()) merged[m].second = c;
    for (const auto& [m, pair] : merged) {
        const auto& [lhs, rhs] = pair;
        if (lhs == rhs) {
            out.matched += 1;
        } else {
            out.mismatches.push_back({mono_str(m, computed.ctx()),
                                      lhs.is_zero() ? "0" : lhs.str(),
                                      rhs.is_zero() ? "0" : rhs.str()});
        }
    }
    return out;
}

RealizationCheck verify_extended_realization(const PbwContextPtr& ctx,
                                             const std::vector<DiffOp>& ops,
                                             const NCPoly& computed_casimir,
                                             const std::optional<DiffOp>& expected_casimir) {
    if (ops.size() != ctx->dim())
        throw LieError("one operator per generator required");
    RealizationCheck out;
    const VarSet& vars = ops.front().vars();
    DiffOp unit = DiffOp::multiplication(Polynomial::constant(vars, Rational(1)));
    int n = int(ctx->dim());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            DiffOp got = ops[i].commutator(ops[j]);
            LinPoly br = ctx->bracket(i, j) /* i<j: bracket flips stored (j,i) */;
            DiffOp want(vars);
            for (const auto& [k, c] : br.linear) want = want + ops[k].scale(c.map_onto(vars));
            if (!br.constant.is_zero())
                want = want + unit.scale(br.constant.map_onto(vars));
            RealizationCheck::Item item;
            item.pair = "[" + ctx->names()[i] + "," + ctx->names()[j] + "]";
            item.ok = got == want;
            if (item.ok) {
                out.matched += 1;
            } else {
                item.computed = got.str();
                item.expected = want.str();
            }
            out.commutators.push_back(std::move(item));
        }
    }

    DiffOp realized = realize(computed_casimir, ops);
    if (expected_casimir) {
        RealizationCheck::Item item;
        item.pair = "realized Casimir vs display";
        item.ok = realized == *expected_casimir;
        item.computed = realized.str();
        item.expected = expected_casimir->str();
        out.casimir.push_back(std::move(item));
    }
    // realized Casimir must commute with every realized generator
    for (int i = 0; i < n; ++i) {
        DiffOp c = ops[i].commutator(realized);
        if (!c.is_zero()) {
            RealizationCheck::Item item;
            item.pair = "[" + ctx->names()[i] + ", realized K]";
            item.ok = false;
            item.computed = c.str();
            item.expected = "0";
            out.casimir.push_back(std::move(item));
        }
    }
    // guarded limits
    auto limit = [&](std::initializer_list<std::string> params_to_zero,
                     const std::string& label) {
        RealizationCheck::Item item;
        item.pair = label;
        try {
            DiffOp cur = realized;
            for (const auto& pname : params_to_zero) {
                auto idx = vars.index_of(pname);
                if (!idx) throw LieError("parameter " + pname + " absent");
                DiffOp next(vars);
                for (const auto& [dm, coeff] : cur.terms())
                    next.add_term(dm, coeff.substitute_zero(*idx));
                cur = next;
            }
            item.computed = cur.str();
            if (params_to_zero.size() == 2) {
                item.ok = cur.is_zero();
                item.expected = "0";
            } else {
                item.ok = true;
                item.expected = "(substitution valid)";
            }
        } catch (const std::exception& e) {
            item.ok = false;
            item.expected = std::string("guarded substitution failed: ") + e.what();
        }
        return item;
    };
    out.casimir.push_back(limit({"m1"}, "realized K at m1=0"));
    out.casimir.push_back(limit({"m2"}, "realized K at m2=0"));
    out.casimir.push_back(limit({"m1", "m2"}, "realized K at m1=m2=0"));
    return out;
}

} // namespace liewb
