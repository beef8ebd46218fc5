#ifndef LIEWB_LIE_ALGEBRA_HPP
#define LIEWB_LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "liewb/diffop.hpp"
#include "liewb/linalg.hpp"
#include "liewb/polynomial.hpp"

namespace liewb {

struct LieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotClosedError : LieError {
    NotClosedError(int i_, int j_, std::string residual_)
        : LieError("bracket (" + std::to_string(i_) + "," + std::to_string(j_) +
                   ") leaves the span; residual: " + residual_),
          i(i_), j(j_), residual(std::move(residual_)) {}
    int i, j;
    std::string residual;
};
struct LinearlyDependentError : LieError {
    using LieError::LieError;
};
struct SingularBasisChangeError : LieError {
    using LieError::LieError;
};
struct NotEigenvectorError : LieError {
    NotEigenvectorError(std::string residual_)
        : LieError("not an eigenvector; residual: " + residual_),
          residual(std::move(residual_)) {}
    std::string residual;
};
struct NotProportionalError : LieError {
    NotProportionalError(std::string residual_)
        : LieError("bracket not proportional to expected member; residual: " + residual_),
          residual(std::move(residual_)) {}
    std::string residual;
};

// Coordinate vector over an algebra's ordered basis.
struct Element {
    std::vector<Rational> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!liewb::is_zero(c)) return false;
        return true;
    }
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Rational& c) const;
    bool operator==(const Element& o) const { return coords == o.coords; }
};

struct Grading {
    std::vector<int> degree;     // per basis index
    std::vector<int> degree_set; // admissible degrees
};

struct GradingViolation {
    int i, j;
    std::string detail;
};

struct GradingReport {
    std::vector<GradingViolation> violations;
    std::map<int, int> subspace_dims;
    bool ok() const { return violations.empty(); }
};

struct JacobiViolation {
    int i, j, k;
    std::string residual;
};

struct SeriesStep {
    int dim;
    std::vector<Element> basis;
};

struct LabelVector {
    Rational i, m, a, b, c;
    bool operator==(const LabelVector& o) const {
        return i == o.i && m == o.m && a == o.a && b == o.b && c == o.c;
    }
};

struct Multiplet {
    std::string kind; // "S","D","T","Q"
    int subspace;
    int index; // 0 when the multiplet is unique of its kind in the subspace
    std::vector<std::pair<Element, int>> members; // (element, J0 eigenvalue)
};

// Finite-dimensional Lie algebra given by an ordered basis and sparse
// structure constants. Coefficients are polynomials in the algebra's central
// parameter symbols (constants when the parameter set is empty).
class LieAlgebra {
  public:
    LieAlgebra() = default;
    LieAlgebra(std::vector<std::string> names, VarSet params);

    // Extracts structure constants from pairwise commutators of vector
    // fields, expanding each commutator in the span of the inputs.
    static LieAlgebra from_realization(std::vector<std::string> names,
                                       const std::vector<DiffOp>& fields);

    size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;
    const VarSet& params() const { return params_; }
    bool has_params() const { return params_.size() > 0; }

    void set_bracket(int i, int j, std::vector<std::pair<int, Polynomial>> entries);
    // [e_i, e_j] for any i, j (antisymmetry applied); sorted by k.
    std::vector<std::pair<int, Polynomial>> bracket_basis(int i, int j) const;
    const std::map<std::pair<int, int>, std::vector<std::pair<int, Polynomial>>>&
    brackets() const { return sc_; }

    void attach_realization(std::vector<DiffOp> ops);
    const std::optional<std::vector<DiffOp>>& realization() const { return realization_; }

    Element zero_element() const;
    Element basis_element(int i) const;
    Element element_of(const std::string& name) const;
    std::string element_str(const Element& e) const;

    // Requires parameter-free structure constants.
    Element bracket(const Element& a, const Element& b) const;

    std::vector<JacobiViolation> verify_jacobi() const;

    LieAlgebra subalgebra(std::vector<std::string> new_names,
                          const std::vector<Element>& span) const;
    LieAlgebra change_of_basis(std::vector<std::string> new_names,
                               const std::vector<Element>& new_basis) const;

    GradingReport verify_grading(const Grading& g) const;
    std::vector<SeriesStep> lower_central_series(int max_steps = 16) const;

    Rational ad_eigenvalue(const Element& g, const Element& x) const;
    // Generalized rule: strict eigenvalue when proportional, 0 when iterated
    // ad reaches zero, error otherwise.
    Rational ad_generalized_eigenvalue(const Element& g, const Element& x) const;

    LabelVector label_vector(const Grading& grading, const Element& J0,
                             const Element& Sm1, const Element& S01,
                             const Element& S02, const Element& x) const;

    std::pair<bool, std::optional<std::pair<int, int>>>
    commuting_set_verify(const std::vector<Element>& xs) const;

    struct LadderTable {
        std::map<int, Rational> raising;  // m -> lambda, [J2, M(m)] = lambda M(m+2)
        std::map<int, Rational> lowering; // m -> lambda, [J-2, M(m)] = lambda M(m-2)
    };
    LadderTable ladder_coefficients(const Multiplet& mult, const Element& J2,
                                    const Element& Jm2) const;

  private:
    Polynomial coeff_const(const Rational& c) const;
    std::vector<std::string> names_;
    VarSet params_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Polynomial>>> sc_;
    std::optional<std::vector<DiffOp>> realization_;
};

// Checks the eigenvalue pattern for a multiplet kind
// (S -> {0}, D -> {-1,1}, T -> {-2,0,2}, Q -> {-3,-1,1,3}).
bool multiplet_pattern_ok(const Multiplet& m);

} // namespace liewb

#endif
