#ifndef LIEWB_POLYNOMIAL_HPP
#define LIEWB_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liewb/rational.hpp"
#include "liewb/varset.hpp"

namespace liewb {

struct VarSetMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector aligned with a VarSet. Parameter slots may go negative.
struct Monomial {
    std::vector<int> e;

    long total_degree() const {
        long d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_constant() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic strict order (degree first, then lex on exponents).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

// Sparse exact multivariate polynomial, optionally Laurent in parameter
// variables. Canonical form: no zero coefficients; terms ordered by grlex.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}
    Polynomial(VarSet vars, const Rational& c);

    static Polynomial variable(const VarSet& vars, size_t index, int power = 1);
    static Polynomial constant(const VarSet& vars, const Rational& c) {
        return Polynomial(vars, c);
    }

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Throws unless the polynomial is constant.
    Rational constant_value() const;
    long degree() const; // max total degree; 0 for the zero polynomial
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned n) const;

    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(size_t var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    // Named-point form; every variable occurring in the polynomial must be
    // assigned, other variables may be left out.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    // True when the named variable occurs with a negative exponent.
    bool has_negative_power(size_t var) const;
    // Substitutes 0 for the given variable. Throws if a negative power of it
    // remains anywhere in the polynomial.
    Polynomial substitute_zero(size_t var) const;
    // Rebuilds the polynomial over another VarSet, matching variables by name.
    Polynomial map_onto(const VarSet& target) const;

    std::string str() const;
    static Polynomial parse(const VarSet& vars, const std::string& text);

  private:
    void check_monomial(const Monomial& m) const;
    VarSet vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace liewb

#endif
