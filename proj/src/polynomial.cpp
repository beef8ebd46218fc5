#include "liewb/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace liewb {

Polynomial::Polynomial(VarSet vars, const Rational& c) : vars_(std::move(vars)) {
    if (!liewb::is_zero(c)) {
        Monomial m;
        m.e.assign(vars_.size(), 0);
        terms_.emplace(std::move(m), c);
    }
}

Polynomial Polynomial::variable(const VarSet& vars, size_t index, int power) {
    if (index >= vars.size())
        throw std::out_of_range("variable index out of range");
    Polynomial p(vars);
    Monomial m;
    m.e.assign(vars.size(), 0);
    m.e[index] = power;
    p.check_monomial(m);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

void Polynomial::check_monomial(const Monomial& m) const {
    if (m.e.size() != vars_.size())
        throw VarSetMismatch("monomial length does not match variable set");
    for (size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i] < 0 && !vars_.is_param(i))
            throw std::invalid_argument("negative exponent on non-parameter variable " +
                                        vars_.name(i));
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_constant();
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant())
        throw std::runtime_error("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

long Polynomial::degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.total_degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (liewb::is_zero(c)) return;
    check_monomial(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (liewb::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (vars_.size() == 0 && terms_.empty()) vars_ = o.vars_;
    if (vars_ != o.vars_)
        throw VarSetMismatch("polynomial addition across variable sets");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (vars_.size() == 0 && terms_.empty()) vars_ = o.vars_;
    if (vars_ != o.vars_)
        throw VarSetMismatch("polynomial subtraction across variable sets");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (vars_ != o.vars_)
        throw VarSetMismatch("polynomial product across variable sets");
    Polynomial r(vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.e.resize(ma.e.size());
            for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = ma.e[i] + mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(vars_);
    if (liewb::is_zero(c)) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r(vars_, Rational(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(size_t var) const {
    if (var >= vars_.size())
        throw std::out_of_range("unknown variable in derivative");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        if (m.e[var] < 0)
            throw std::domain_error("derivative of negative power of parameter " +
                                    vars_.name(var));
        Monomial d = m;
        d.e[var] -= 1;
        r.add_term(d, c * Rational(m.e[var]));
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluation point has wrong arity");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (size_t i = 0; i < m.e.size(); ++i) {
            int e = m.e[i];
            if (e == 0) continue;
            if (liewb::is_zero(point[i])) {
                if (e < 0)
                    throw std::domain_error("zero raised to negative power for " +
                                            vars_.name(i));
                v = 0;
                break;
            }
            Rational base = point[i];
            if (e < 0) {
                base = Rational(1) / base;
                e = -e;
            }
            for (int k = 0; k < e; ++k) v *= base;
        }
        total += v;
    }
    return total;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> dense(vars_.size(), Rational(0));
    std::vector<bool> assigned(vars_.size(), false);
    for (const auto& [name, value] : point) {
        auto idx = vars_.index_of(name);
        if (!idx) throw std::invalid_argument("assignment for unknown variable " + name);
        dense[*idx] = value;
        assigned[*idx] = true;
    }
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] != 0 && !assigned[i])
                throw std::invalid_argument("missing assignment for " + vars_.name(i));
    return evaluate(dense);
}

bool Polynomial::has_negative_power(size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m.e[var] < 0) return true;
    return false;
}

Polynomial Polynomial::substitute_zero(size_t var) const {
    if (has_negative_power(var))
        throw std::domain_error("cannot set " + vars_.name(var) +
                                " to zero: negative powers present");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] > 0) continue;
        r.add_term(m, c);
    }
    return r;
}

Polynomial Polynomial::map_onto(const VarSet& target) const {
    std::vector<size_t> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto idx = target.index_of(vars_.name(i));
        if (!idx)
            throw VarSetMismatch("variable " + vars_.name(i) + " missing from target set");
        where[i] = *idx;
    }
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Monomial t;
        t.e.assign(target.size(), 0);
        for (size_t i = 0; i < m.e.size(); ++i) t.e[where[i]] += m.e[i];
        r.add_term(t, c);
    }
    return r;
}

// ---- text form ----------------------------------------------------------
// Terms joined by +/-, explicit '*', powers with '^', coefficients "a/b".

namespace {

struct Tokenizer {
    const std::string& s;
    size_t pos = 0;

    explicit Tokenizer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return s.substr(start, pos - start);
    }
    int integer() {
        std::string n = number();
        if (n.empty() || n.find('/') != std::string::npos)
            throw ParseError("expected integer exponent near position " +
                             std::to_string(pos) + " in '" + s + "'");
        return std::stoi(n);
    }
};

} // namespace

Polynomial Polynomial::parse(const VarSet& vars, const std::string& text) {
    Tokenizer tk(text);
    Polynomial result(vars);
    if (tk.done())
        throw ParseError("empty polynomial text");
    bool first = true;
    while (!tk.done()) {
        int sign = 1;
        char c = tk.peek();
        if (c == '+' || c == '-') {
            tk.get();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + text + "'");
        }
        first = false;
        Rational coeff(sign);
        Monomial m;
        m.e.assign(vars.size(), 0);
        bool expect_factor = true;
        while (expect_factor) {
            char p = tk.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                coeff *= rat_parse(tk.number());
            } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
                std::string name = tk.ident();
                auto idx = vars.index_of(name);
                if (!idx)
                    throw ParseError("unknown variable '" + name + "' in '" + text + "'");
                int power = 1;
                if (tk.peek() == '^') {
                    tk.get();
                    power = tk.integer();
                }
                m.e[*idx] += power;
            } else {
                throw ParseError("unexpected character '" + std::string(1, p) +
                                 "' in '" + text + "'");
            }
            if (tk.peek() == '*') {
                tk.get();
            } else {
                expect_factor = false;
            }
        }
        result.add_term(m, coeff);
    }
    return result;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // leading (highest) term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        Rational a = negative ? Rational(-c) : c;
        std::vector<std::string> factors;
        if (!is_one(a) || m.is_constant()) factors.push_back(rat_str(a));
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            std::string f = vars_.name(i);
            if (m.e[i] != 1) f += "^" + std::to_string(m.e[i]);
            factors.push_back(f);
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

} // namespace liewb
