#include "liewb/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace liewb {

Element Element::operator+(const Element& o) const {
    Element r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Element Element::operator*(const Rational& c) const {
    Element r = *this;
    for (auto& x : r.coords) x *= c;
    return r;
}

LieAlgebra::LieAlgebra(std::vector<std::string> names, VarSet params)
    : names_(std::move(names)), params_(std::move(params)) {}

int LieAlgebra::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    return -1;
}

Polynomial LieAlgebra::coeff_const(const Rational& c) const {
    return Polynomial::constant(params_, c);
}

void LieAlgebra::set_bracket(int i, int j,
                             std::vector<std::pair<int, Polynomial>> entries) {
    if (i >= j) throw LieError("set_bracket expects i < j");
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Polynomial>> clean;
    for (auto& [k, c] : entries)
        if (!c.is_zero()) clean.emplace_back(k, std::move(c));
    if (clean.empty())
        sc_.erase({i, j});
    else
        sc_[{i, j}] = std::move(clean);
}

std::vector<std::pair<int, Polynomial>> LieAlgebra::bracket_basis(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = sc_.find({i, j});
    if (it == sc_.end()) return {};
    if (!flip) return it->second;
    std::vector<std::pair<int, Polynomial>> out;
    out.reserve(it->second.size());
    for (const auto& [k, c] : it->second) out.emplace_back(k, -c);
    return out;
}

void LieAlgebra::attach_realization(std::vector<DiffOp> ops) {
    if (ops.size() != dim())
        throw LieError("realization arity does not match dimension");
    realization_ = std::move(ops);
}

Element LieAlgebra::zero_element() const {
    Element e;
    e.coords.assign(dim(), Rational(0));
    return e;
}

Element LieAlgebra::basis_element(int i) const {
    Element e = zero_element();
    e.coords.at(i) = 1;
    return e;
}

Element LieAlgebra::element_of(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw LieError("unknown generator: " + name);
    return basis_element(i);
}

std::string LieAlgebra::element_str(const Element& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < e.coords.size(); ++i) {
        const Rational& c = e.coords[i];
        if (liewb::is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        if (!is_one(a)) out << rat_str(a) << "*";
        out << names_[i];
    }
    return out.str();
}

Element LieAlgebra::bracket(const Element& a, const Element& b) const {
    if (a.coords.size() != dim() || b.coords.size() != dim())
        throw LieError("element arity mismatch");
    Element r = zero_element();
    for (const auto& [ij, entries] : sc_) {
        auto [i, j] = ij;
        Rational w = a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i];
        if (liewb::is_zero(w)) continue;
        for (const auto& [k, c] : entries) r.coords[k] += w * c.constant_value();
    }
    return r;
}

// ---- extraction from a realization --------------------------------------

namespace {

struct PairGrlexLess {
    bool operator()(const std::pair<Monomial, Monomial>& a,
                    const std::pair<Monomial, Monomial>& b) const {
        GrlexLess lt;
        if (lt(a.first, b.first)) return true;
        if (lt(b.first, a.first)) return false;
        return lt(a.second, b.second);
    }
};

using CoordKeys = std::map<std::pair<Monomial, Monomial>, int, PairGrlexLess>;

// Flattens an operator into a sparse coordinate vector over row ids keyed by
// (derivative index, coefficient monomial); new keys get fresh ids.
SparseRow field_coords(const DiffOp& f, CoordKeys& keys) {
    SparseRow row;
    for (const auto& [dm, coeff] : f.terms()) {
        for (const auto& [cm, c] : coeff.terms()) {
            auto key = std::make_pair(dm, cm);
            auto [it, fresh] = keys.emplace(key, int(keys.size()));
            row.emplace_back(it->second, c);
        }
    }
    return sparse_normalize(std::move(row));
}

} // namespace

LieAlgebra LieAlgebra::from_realization(std::vector<std::string> names,
                                        const std::vector<DiffOp>& fields) {
    if (names.size() != fields.size())
        throw LieError("name/field arity mismatch");
    if (fields.empty()) throw LieError("empty realization");
    const VarSet& vars = fields.front().vars();
    for (const auto& f : fields) {
        if (f.vars() != vars) throw VarSetMismatch("fields over different variable sets");
        if (!f.is_vector_field())
            throw LieError("input is not a vector field: " + f.str());
    }

    CoordKeys keys;
    // register coordinate keys from the fields and every commutator first so
    // the solver's row space is complete
    size_t n = fields.size();
    for (const auto& f : fields) field_coords(f, keys);
    std::vector<std::vector<DiffOp>> comms(n);
    for (size_t i = 0; i < n; ++i) {
        comms[i].reserve(n - i);
        for (size_t j = i + 1; j < n; ++j) {
            DiffOp c = fields[i].commutator(fields[j]);
            field_coords(c, keys);
            comms[i].push_back(std::move(c));
        }
    }
    int nrows = int(keys.size());
    std::vector<SparseRow> columns;
    columns.reserve(n);
    for (const auto& f : fields) columns.push_back(field_coords(f, keys));

    SpanSolver solver(nrows, columns);
    if (solver.rank() < int(n))
        throw LinearlyDependentError("realization fields are linearly dependent");

    VarSet params = VarSet::make({}, {});
    LieAlgebra L(std::move(names), params);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const DiffOp& c = comms[i][j - i - 1];
            if (c.is_zero()) continue;
            SparseRow b = field_coords(c, keys);
            SparseRow residual;
            auto x = solver.solve(b, &residual);
            if (!x) {
                // rebuild the residual as an operator for the error message
                DiffOp res(vars);
                std::vector<std::pair<Monomial, Monomial>> rev(keys.size());
                for (const auto& [key, id] : keys) rev[id] = key;
                for (const auto& [id, v] : residual) {
                    Polynomial p(vars);
                    p.add_term(rev[id].second, v);
                    res.add_term(rev[id].first, p);
                }
                throw NotClosedError(int(i), int(j), res.str());
            }
            std::vector<std::pair<int, Polynomial>> entries;
            for (size_t k = 0; k < x->size(); ++k)
                if (!liewb::is_zero((*x)[k]))
                    entries.emplace_back(int(k), Polynomial::constant(params, (*x)[k]));
            L.set_bracket(int(i), int(j), std::move(entries));
        }
    }
    L.attach_realization(fields);
    return L;
}

// ---- verification and structure ------------------------------------------

std::vector<JacobiViolation> LieAlgebra::verify_jacobi() const {
    std::vector<JacobiViolation> out;
    int n = int(dim());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                std::vector<Polynomial> acc(n, Polynomial(params_));
                auto add_term = [&](int a, int b, int c) {
                    // [[a,b], c]
                    for (const auto& [m, coeff] : bracket_basis(a, b))
                        for (const auto& [t, c2] : bracket_basis(m, c))
                            acc[t] += coeff * c2;
                };
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                bool bad = false;
                for (const auto& p : acc)
                    if (!p.is_zero()) bad = true;
                if (bad) {
                    std::ostringstream res;
                    bool first = true;
                    for (int t = 0; t < n; ++t) {
                        if (acc[t].is_zero()) continue;
                        if (!first) res << " + ";
                        first = false;
                        res << "(" << acc[t].str() << ")*" << names_[t];
                    }
                    out.push_back({i, j, k, res.str()});
                }
            }
        }
    }
    return out;
}

namespace {

SparseRow element_row(const Element& e) {
    SparseRow r;
    for (size_t i = 0; i < e.coords.size(); ++i)
        if (!is_zero(e.coords[i])) r.emplace_back(int(i), e.coords[i]);
    return r;
}

} // namespace

LieAlgebra LieAlgebra::subalgebra(std::vector<std::string> new_names,
                                  const std::vector<Element>& span) const {
    if (has_params())
        throw LieError("subalgebra extraction requires parameter-free constants");
    if (new_names.size() != span.size()) throw LieError("name/span arity mismatch");
    std::vector<SparseRow> columns;
    columns.reserve(span.size());
    for (const auto& e : span) columns.push_back(element_row(e));
    SpanSolver solver(int(dim()), columns);
    if (solver.rank() < int(span.size()))
        throw LinearlyDependentError("spanning set is linearly dependent");

    LieAlgebra L(std::move(new_names), params_);
    int m = int(span.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            Element v = bracket(span[i], span[j]);
            if (v.is_zero()) continue;
            SparseRow residual;
            auto x = solver.solve(element_row(v), &residual);
            if (!x) {
                Element res = zero_element();
                for (const auto& [id, val] : residual) res.coords[id] = val;
                throw NotClosedError(i, j, element_str(res));
            }
            std::vector<std::pair<int, Polynomial>> entries;
            for (int k = 0; k < m; ++k)
                if (!liewb::is_zero((*x)[k]))
                    entries.emplace_back(k, coeff_const((*x)[k]));
            L.set_bracket(i, j, std::move(entries));
        }
    }
    if (realization_) {
        std::vector<DiffOp> ops;
        ops.reserve(span.size());
        const VarSet& vars = realization_->front().vars();
        for (const auto& e : span) {
            DiffOp acc(vars);
            for (size_t k = 0; k < e.coords.size(); ++k)
                if (!liewb::is_zero(e.coords[k]))
                    acc = acc + (*realization_)[k] * e.coords[k];
            ops.push_back(std::move(acc));
        }
        L.attach_realization(std::move(ops));
    }
    return L;
}

LieAlgebra LieAlgebra::change_of_basis(std::vector<std::string> new_names,
                                       const std::vector<Element>& new_basis) const {
    if (new_basis.size() != dim())
        throw SingularBasisChangeError("basis change needs full dimension");
    std::vector<SparseRow> columns;
    for (const auto& e : new_basis) columns.push_back(element_row(e));
    SpanSolver solver(int(dim()), columns);
    if (solver.rank() < int(dim()))
        throw SingularBasisChangeError("new basis is singular");
    return subalgebra(std::move(new_names), new_basis);
}

GradingReport LieAlgebra::verify_grading(const Grading& g) const {
    GradingReport rep;
    if (g.degree.size() != dim())
        throw LieError("grading does not cover the basis");
    for (size_t i = 0; i < dim(); ++i) rep.subspace_dims[g.degree[i]] += 1;
    auto in_set = [&](int d) {
        return std::find(g.degree_set.begin(), g.degree_set.end(), d) !=
               g.degree_set.end();
    };
    for (const auto& [ij, entries] : sc_) {
        auto [i, j] = ij;
        int d = g.degree[i] + g.degree[j];
        if (!in_set(d)) {
            std::ostringstream msg;
            msg << "[" << names_[i] << "," << names_[j] << "] nonzero but degree "
                << d << " outside the declared set";
            rep.violations.push_back({i, j, msg.str()});
            continue;
        }
        for (const auto& [k, c] : entries) {
            if (g.degree[k] != d) {
                std::ostringstream msg;
                msg << "[" << names_[i] << "," << names_[j] << "] has component "
                    << names_[k] << " of degree " << g.degree[k] << ", expected " << d;
                rep.violations.push_back({i, j, msg.str()});
            }
        }
    }
    return rep;
}

std::vector<SeriesStep> LieAlgebra::lower_central_series(int max_steps) const {
    std::vector<SeriesStep> out;
    int n = int(dim());
    // step 0: the whole algebra
    {
        SeriesStep s0;
        s0.dim = n;
        for (int i = 0; i < n; ++i) s0.basis.push_back(basis_element(i));
        out.push_back(std::move(s0));
    }
    std::vector<Element> current = out.back().basis;
    for (int step = 0; step < max_steps; ++step) {
        RrefBasis next(n);
        for (int i = 0; i < n; ++i) {
            Element ei = basis_element(i);
            for (const auto& s : current) {
                Element b = bracket(ei, s);
                if (!b.is_zero()) next.insert(element_row(b));
            }
        }
        SeriesStep st;
        st.dim = next.rank();
        for (const auto& [pc, row] : next.rows()) {
            Element e = zero_element();
            for (const auto& [c, v] : row) e.coords[c] = v;
            st.basis.push_back(std::move(e));
        }
        bool stable = (st.dim == out.back().dim && out.size() > 1);
        out.push_back(st);
        if (st.dim == 0 || stable) break;
        current = out.back().basis;
    }
    return out;
}

Rational LieAlgebra::ad_eigenvalue(const Element& g, const Element& x) const {
    if (x.is_zero()) throw NotEigenvectorError("zero vector");
    Element y = bracket(g, x);
    size_t lead = 0;
    while (lead < x.coords.size() && liewb::is_zero(x.coords[lead])) ++lead;
    Rational lambda = y.coords[lead] / x.coords[lead];
    Element res = y - x * lambda;
    if (!res.is_zero()) throw NotEigenvectorError(element_str(res));
    return lambda;
}

Rational LieAlgebra::ad_generalized_eigenvalue(const Element& g, const Element& x) const {
    try {
        return ad_eigenvalue(g, x);
    } catch (const NotEigenvectorError&) {
    }
    Element y = bracket(g, x);
    for (size_t k = 0; k + 1 < dim(); ++k) {
        if (y.is_zero()) return Rational(0);
        y = bracket(g, y);
    }
    if (y.is_zero()) return Rational(0);
    throw NotEigenvectorError(element_str(bracket(g, x)));
}

LabelVector LieAlgebra::label_vector(const Grading& grading, const Element& J0,
                                     const Element& Sm1, const Element& S01,
                                     const Element& S02, const Element& x) const {
    // grading degree: x must be homogeneous
    std::optional<int> deg;
    for (size_t i = 0; i < x.coords.size(); ++i) {
        if (liewb::is_zero(x.coords[i])) continue;
        if (!deg)
            deg = grading.degree[i];
        else if (*deg != grading.degree[i])
            throw LieError("element is not grading-homogeneous");
    }
    if (!deg) throw LieError("zero element has no label");
    LabelVector lv;
    lv.i = Rational(*deg);
    lv.m = ad_generalized_eigenvalue(J0, x);
    lv.a = ad_generalized_eigenvalue(Sm1, x);
    lv.b = ad_generalized_eigenvalue(S01, x);
    lv.c = ad_generalized_eigenvalue(S02, x);
    return lv;
}

std::pair<bool, std::optional<std::pair<int, int>>>
LieAlgebra::commuting_set_verify(const std::vector<Element>& xs) const {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (!bracket(xs[i], xs[j]).is_zero())
                return {false, std::make_pair(int(i), int(j))};
    return {true, std::nullopt};
}

LieAlgebra::LadderTable LieAlgebra::ladder_coefficients(const Multiplet& mult,
                                                        const Element& J2,
                                                        const Element& Jm2) const {
    LadderTable table;
    std::map<int, const Element*> by_m;
    for (const auto& [e, m] : mult.members) by_m[m] = &e;
    auto proportional = [&](const Element& y, const Element* target) -> Rational {
        if (!target) {
            if (!y.is_zero()) throw NotProportionalError(element_str(y));
            return Rational(0);
        }
        if (y.is_zero()) return Rational(0);
        size_t lead = 0;
        while (lead < target->coords.size() && liewb::is_zero(target->coords[lead]))
            ++lead;
        Rational lambda = y.coords[lead] / target->coords[lead];
        Element res = y - *target * lambda;
        if (!res.is_zero()) throw NotProportionalError(element_str(res));
        return lambda;
    };
    for (const auto& [e, m] : mult.members) {
        auto up = by_m.find(m + 2);
        table.raising[m] =
            proportional(bracket(J2, e), up == by_m.end() ? nullptr : up->second);
        auto down = by_m.find(m - 2);
        table.lowering[m] =
            proportional(bracket(Jm2, e), down == by_m.end() ? nullptr : down->second);
    }
    return table;
}

bool multiplet_pattern_ok(const Multiplet& m) {
    static const std::map<std::string, std::vector<int>> expect = {
        {"S", {0}}, {"D", {-1, 1}}, {"T", {-2, 0, 2}}, {"Q", {-3, -1, 1, 3}}};
    auto it = expect.find(m.kind);
    if (it == expect.end()) return false;
    std::vector<int> got;
    for (const auto& [e, mm] : m.members) got.push_back(mm);
    std::sort(got.begin(), got.end());
    return got == it->second;
}

} // namespace liewb
