#ifndef LIEWB_ENVELOPING_HPP
#define LIEWB_ENVELOPING_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "liewb/lie_algebra.hpp"

namespace liewb {

// Bracket value of two generators inside the enveloping algebra: a linear
// combination of generators plus a scalar (unit) part. The scalar part is
// zero for honest Lie algebras and carries central charges when a central
// generator has been evaluated to the unit.
struct LinPoly {
    std::vector<std::pair<int, Polynomial>> linear;
    Polynomial constant;
};

// Ordered PBW setting for U(g): generator names, coefficient parameters and
// the generator-pair brackets driving normal ordering.
class PbwContext {
  public:
    static std::shared_ptr<const PbwContext> make(const LieAlgebra& L);
    // Same, but the named central generator is dropped and acts as the unit.
    static std::shared_ptr<const PbwContext>
    make_evaluated(const LieAlgebra& L, const std::string& central_name);

    size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;
    const VarSet& params() const { return params_; }
    // [Y_a, Y_b] for any a != b
    LinPoly bracket(int a, int b) const;
    // dual commutative variables: generator names, then parameter symbols
    const VarSet& image_vars() const { return image_vars_; }

  private:
    std::vector<std::string> names_;
    VarSet params_;
    VarSet image_vars_;
    // stored for a > b
    std::map<std::pair<int, int>, LinPoly> table_;
};

using PbwContextPtr = std::shared_ptr<const PbwContext>;

// Element of the enveloping algebra in PBW normal form.
class NCPoly {
  public:
    using TermMap = std::map<Monomial, Polynomial, GrlexLess>;

    NCPoly() = default;
    explicit NCPoly(PbwContextPtr ctx) : ctx_(std::move(ctx)) {}

    static NCPoly constant(PbwContextPtr ctx, const Rational& c);
    static NCPoly constant(PbwContextPtr ctx, const Polynomial& c);
    static NCPoly generator(PbwContextPtr ctx, int i);
    static NCPoly monomial(PbwContextPtr ctx, const Monomial& m, const Polynomial& c);

    const PbwContextPtr& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const;

    void add_term(const Monomial& m, const Polynomial& c);

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const NCPoly& o) const; // PBW normal-ordered product
    NCPoly scale(const Polynomial& c) const;
    NCPoly scale(const Rational& c) const;
    NCPoly pow(unsigned n) const;

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    // [Y_i, this] in normal form
    NCPoly ad(int i) const;
    NCPoly commutator(const NCPoly& o) const;

    Polynomial commutative_image() const;

    std::string str() const;
    static NCPoly parse(PbwContextPtr ctx, const std::string& text);

  private:
    PbwContextPtr ctx_;
    TermMap terms_;
};

NCPoly normal_order_word(const PbwContextPtr& ctx, const std::vector<int>& word,
                         const Polynomial& coeff);

// Symmetrization map: commutative polynomial whose variables are the
// context's generators (by name) -> averaged PBW element. Aborts when a
// monomial would need more distinct arrangements than the cap.
NCPoly symmetrize(const PbwContextPtr& ctx, const Polynomial& p,
                  size_t max_arrangements = 1000000);

// (generator index, nonzero commutator) pairs; empty iff central.
std::vector<std::pair<int, NCPoly>> verify_central(const NCPoly& p);

struct SearchFilters {
    // restrict candidate monomials to these generator indices (empty = all)
    std::vector<int> restrict_to;
    // keep only monomials of weight zero for these per-generator weights
    std::optional<std::vector<Rational>> weights;
};

struct CasimirSearch {
    std::vector<Monomial> candidates;     // enumeration order = column order
    size_t candidate_count = 0;
    size_t equation_rows = 0;             // nonzero assembled rows
    size_t equation_rank = 0;
    std::vector<NCPoly> nullspace;        // deterministic RREF-derived basis
    std::vector<NCPoly> reduced;          // greedy algebraically independent set
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CasimirSearch casimir_search(const PbwContextPtr& ctx, int max_degree,
                             const SearchFilters& filters = {}, int jobs = 1,
                             size_t max_monomials = 2000000);

struct IndependenceVerdict {
    int rank = 0;
    bool independent = false;
    std::string verdict;
};

IndependenceVerdict algebraic_independence(const std::vector<NCPoly>& ps,
                                           uint64_t seed = 0x5EEDULL);

// Monomials of total degree <= max_degree over the allowed index set, graded
// lex enumeration; shared by the enveloping and Poisson searches.
std::vector<Monomial> enumerate_monomials(size_t nvars, int max_degree,
                                          const std::vector<int>& restrict_to,
                                          size_t cap);

// Substitutes differential operators for the generators (aligned with the
// context ordering), composing left to right in PBW order. Coefficient
// parameters must exist in the operators' variable set.
DiffOp realize(const NCPoly& p, const std::vector<DiffOp>& ops);

} // namespace liewb

#endif
