#ifndef LIEWB_DIFFOP_HPP
#define LIEWB_DIFFOP_HPP

#include <limits>
#include <map>
#include <string>

#include "liewb/polynomial.hpp"

namespace liewb {

// Differential operator with polynomial coefficients, kept in normal order:
// every term is (coefficient polynomial) * d^alpha with all derivatives to
// the right. The zero operator has no terms.
class DiffOp {
  public:
    // order() of the zero operator
    static constexpr int kZeroOrder = std::numeric_limits<int>::min();

    using TermMap = std::map<Monomial, Polynomial, GrlexLess>;

    DiffOp() = default;
    explicit DiffOp(VarSet vars) : vars_(std::move(vars)) {}

    static DiffOp multiplication(const Polynomial& f);
    static DiffOp derivative_op(const VarSet& vars, size_t var);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;

    // order <= 1, no zero-order part, all derivative indices degree exactly 1
    bool is_vector_field() const;

    void add_term(const Monomial& dindex, const Polynomial& coeff);

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator-() const;
    DiffOp operator*(const Rational& c) const;
    DiffOp scale(const Polynomial& c) const; // left-multiply by a function

    bool operator==(const DiffOp& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    Polynomial apply(const Polynomial& f) const;
    DiffOp compose(const DiffOp& other) const;   // this ∘ other, normal ordered
    DiffOp commutator(const DiffOp& other) const;

    std::string str() const;
    static DiffOp parse(const VarSet& vars, const std::string& text);

  private:
    VarSet vars_;
    TermMap terms_;
};

} // namespace liewb

#endif
