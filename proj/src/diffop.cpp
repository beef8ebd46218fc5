#include "liewb/diffop.hpp"

#include <cctype>
#include <sstream>

namespace liewb {

DiffOp DiffOp::multiplication(const Polynomial& f) {
    DiffOp d(f.vars());
    Monomial zero;
    zero.e.assign(f.vars().size(), 0);
    d.add_term(zero, f);
    return d;
}

DiffOp DiffOp::derivative_op(const VarSet& vars, size_t var) {
    DiffOp d(vars);
    Monomial m;
    m.e.assign(vars.size(), 0);
    m.e.at(var) = 1;
    d.add_term(m, Polynomial::constant(vars, Rational(1)));
    return d;
}

int DiffOp::order() const {
    if (terms_.empty()) return kZeroOrder;
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max<long>(best, m.total_degree());
    return best;
}

bool DiffOp::is_vector_field() const {
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != 1) return false;
    return true;
}

void DiffOp::add_term(const Monomial& dindex, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    if (dindex.e.size() != vars_.size())
        throw VarSetMismatch("derivative index does not match variable set");
    for (int e : dindex.e)
        if (e < 0) throw std::invalid_argument("negative derivative order");
    if (coeff.vars() != vars_)
        throw VarSetMismatch("coefficient over a different variable set");
    auto it = terms_.find(dindex);
    if (it == terms_.end()) {
        terms_.emplace(dindex, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    if (vars_ != o.vars_) throw VarSetMismatch("operator addition across variable sets");
    DiffOp r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator-() const {
    DiffOp r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DiffOp DiffOp::operator*(const Rational& c) const {
    DiffOp r(vars_);
    if (liewb::is_zero(c)) return r;
    for (const auto& [m, p] : terms_) r.terms_.emplace(m, p * c);
    return r;
}

DiffOp DiffOp::scale(const Polynomial& c) const {
    DiffOp r(vars_);
    for (const auto& [m, p] : terms_) r.add_term(m, p * c);
    return r;
}

Polynomial DiffOp::apply(const Polynomial& f) const {
    if (vars_ != f.vars()) throw VarSetMismatch("operator applied across variable sets");
    Polynomial out(vars_);
    for (const auto& [m, coeff] : terms_) {
        Polynomial g = f;
        for (size_t v = 0; v < m.e.size() && !g.is_zero(); ++v)
            for (int k = 0; k < m.e[v]; ++k) g = g.derivative(v);
        out += coeff * g;
    }
    return out;
}

namespace {

// Enumerates gamma <= alpha componentwise, calling f(gamma, multinomial of
// binomials prod C(alpha_i, gamma_i)).
template <typename F>
void for_each_sub_index(const Monomial& alpha, F&& f) {
    Monomial gamma;
    gamma.e.assign(alpha.e.size(), 0);
    // iterative odometer
    while (true) {
        Rational w(1);
        for (size_t i = 0; i < alpha.e.size(); ++i)
            w *= rat_binomial(static_cast<unsigned long>(alpha.e[i]),
                              static_cast<unsigned long>(gamma.e[i]));
        f(gamma, w);
        size_t i = 0;
        while (i < gamma.e.size()) {
            if (gamma.e[i] < alpha.e[i]) {
                gamma.e[i] += 1;
                break;
            }
            gamma.e[i] = 0;
            ++i;
        }
        if (i == gamma.e.size()) break;
    }
}

} // namespace

DiffOp DiffOp::compose(const DiffOp& other) const {
    if (vars_ != other.vars_)
        throw VarSetMismatch("operator composition across variable sets");
    DiffOp out(vars_);
    for (const auto& [alpha, p] : terms_) {
        for (const auto& [beta, q] : other.terms_) {
            // p d^alpha (q d^beta .) = p sum_{gamma<=alpha} C(alpha,gamma)
            //                          (d^{alpha-gamma} q) d^{gamma+beta}
            for_each_sub_index(alpha, [&](const Monomial& gamma, const Rational& w) {
                Polynomial dq = q;
                for (size_t v = 0; v < alpha.e.size() && !dq.is_zero(); ++v)
                    for (int k = 0; k < alpha.e[v] - gamma.e[v]; ++k)
                        dq = dq.derivative(v);
                if (dq.is_zero()) return;
                Monomial idx;
                idx.e.resize(alpha.e.size());
                for (size_t v = 0; v < idx.e.size(); ++v)
                    idx.e[v] = gamma.e[v] + beta.e[v];
                out.add_term(idx, p * dq * w);
            });
        }
    }
    return out;
}

DiffOp DiffOp::commutator(const DiffOp& other) const {
    return compose(other) - other.compose(*this);
}

// ---- text form ----------------------------------------------------------
// Sum of terms: rational and variable factors form the coefficient, factors
// "d<var>[^k]" form the derivative index, e.g. "1/2*x1*x2*dx4 + x2^2*dx5".

DiffOp DiffOp::parse(const VarSet& vars, const std::string& text) {
    DiffOp out(vars);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) throw ParseError("empty operator text");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + text + "'");
        }
        first = false;
        Rational coeff(sign);
        Monomial cm, dm;
        cm.e.assign(vars.size(), 0);
        dm.e.assign(vars.size(), 0);
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos >= text.size()) throw ParseError("dangling term in '" + text + "'");
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                coeff *= rat_parse(text.substr(start, pos - start));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                int power = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    size_t nstart = pos;
                    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    if (nstart == pos) throw ParseError("missing exponent in '" + text + "'");
                    power = std::stoi(text.substr(nstart, pos - nstart));
                }
                bool is_derivative = false;
                size_t var_index = 0;
                if (name.size() > 1 && name[0] == 'd') {
                    auto idx = vars.index_of(name.substr(1));
                    if (idx) {
                        is_derivative = true;
                        var_index = *idx;
                    }
                }
                if (is_derivative) {
                    if (power < 0) throw ParseError("negative derivative power in '" + text + "'");
                    dm.e[var_index] += power;
                } else {
                    auto idx = vars.index_of(name);
                    if (!idx)
                        throw ParseError("unknown symbol '" + name + "' in '" + text + "'");
                    cm.e[*idx] += power;
                }
            } else {
                throw ParseError("unexpected character '" + std::string(1, c) + "' in '" +
                                 text + "'");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
            } else {
                expect_factor = false;
            }
        }
        Polynomial p(vars);
        p.add_term(cm, coeff);
        out.add_term(dm, p);
    }
    return out;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [dm, coeff] : terms_) {
        std::string dsuffix;
        for (size_t v = 0; v < dm.e.size(); ++v) {
            if (dm.e[v] == 0) continue;
            dsuffix += "*d" + vars_.name(v);
            if (dm.e[v] != 1) dsuffix += "^" + std::to_string(dm.e[v]);
        }
        // one printed term per coefficient monomial, highest first
        for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
            const Monomial& m = it->first;
            Rational c = it->second;
            bool neg = sgn(c) < 0;
            if (first) {
                if (neg) out << "-";
            } else {
                out << (neg ? " - " : " + ");
            }
            first = false;
            Rational a = neg ? Rational(-c) : c;
            std::vector<std::string> factors;
            if (!is_one(a) || (m.is_constant() && dsuffix.empty())) factors.push_back(rat_str(a));
            for (size_t i = 0; i < m.e.size(); ++i) {
                if (m.e[i] == 0) continue;
                std::string f = vars_.name(i);
                if (m.e[i] != 1) f += "^" + std::to_string(m.e[i]);
                factors.push_back(f);
            }
            std::string head;
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) head += "*";
                head += factors[i];
            }
            if (head.empty())
                out << dsuffix.substr(1); // strip leading '*'
            else
                out << head << dsuffix;
        }
    }
    return out.str();
}

} // namespace liewb
