#ifndef LIEWB_POISSON_HPP
#define LIEWB_POISSON_HPP

#include "liewb/enveloping.hpp"
#include "liewb/lie_algebra.hpp"

namespace liewb {

// Lie-Poisson (Berezin) structure on the dual coordinates of a Lie algebra
// with rational structure constants. Coordinates carry the generator names.
class PoissonStructure {
  public:
    explicit PoissonStructure(const LieAlgebra& L);

    size_t dim() const { return algebra_.dim(); }
    const VarSet& coords() const { return coords_; }
    const LieAlgebra& algebra() const { return algebra_; }

    // {x_i, x_j} as a linear polynomial
    Polynomial coordinate_bracket(int i, int j) const;
    Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g) const;

    // X^_i with X^_i(g) = {x_i, g}
    DiffOp characteristic_field(int i) const;
    std::vector<DiffOp> characteristic_fields() const;

  private:
    LieAlgebra algebra_;
    VarSet coords_;
};

// P * x_d^q with P polynomial in the dual coordinates.
struct RationalPowerCandidate {
    std::string name;
    Polynomial numerator;
    int base_var = 0;
    Rational exponent; // may be negative or non-integral; 0 = no power factor
};

struct RationalInvariantReport {
    struct Failure {
        int coordinate;
        Polynomial residual; // x_d X^_i(P) + q P X^_i(x_d)
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

RationalInvariantReport verify_rational_invariant(const RationalPowerCandidate& c,
                                                  const PoissonStructure& S);

struct PoissonSearch {
    std::vector<Monomial> candidates;
    size_t candidate_count = 0;
    size_t equation_rows = 0;
    size_t equation_rank = 0;
    std::vector<Polynomial> nullspace;
};

PoissonSearch poisson_casimir_search(const PoissonStructure& S, int max_degree,
                                     const std::vector<int>& restrict_to = {},
                                     int jobs = 1, size_t max_monomials = 2000000);

// lhs = sum of coeff * prod candidates[idx]^e, verified after clearing powers
// of the shared base variable.
struct FunctionalRelation {
    std::string name;
    Polynomial lhs;
    struct Term {
        Rational coeff;
        std::vector<std::pair<int, int>> powers; // (candidate index, exponent)
    };
    std::vector<Term> rhs;
};

struct RelationReport {
    std::string name;
    bool ok;
    std::string residual;
};

std::vector<RelationReport>
verify_functional_relations(const PoissonStructure& S,
                            const std::vector<RationalPowerCandidate>& candidates,
                            const std::vector<FunctionalRelation>& relations);

// true iff f lies in the rational span of basis (all over the same VarSet)
bool in_span(const Polynomial& f, const std::vector<Polynomial>& basis);

} // namespace liewb

#endif
