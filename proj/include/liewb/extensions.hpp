#ifndef LIEWB_EXTENSIONS_HPP
#define LIEWB_EXTENSIONS_HPP

#include "liewb/enveloping.hpp"

namespace liewb {

// Deformation ansatz: [Y_p, Y_q] += a_r * Z for each listed pair, Z central.
struct ExtensionPair {
    int p, q; // p < q, indices in the base algebra
};

struct ExtensionSolution {
    size_t triples_total = 0;      // assembled Jacobi constraints
    size_t rows_nonzero = 0;       // constraints with at least one entry
    size_t entries_nonzero = 0;    // nonzero matrix entries
    size_t rank = 0;
    std::vector<int> free_unknowns; // indices into the pair list
    // unknown r = sum over free unknowns f of dependence[r][f]
    std::vector<std::map<int, Rational>> dependence;
    int family_dim() const { return int(free_unknowns.size()); }
};

ExtensionSolution solve_central_extension(const LieAlgebra& base,
                                          const std::vector<ExtensionPair>& pairs);

// Builds the extended algebra with the free unknowns renamed to the given
// parameter symbols and a central generator appended.
LieAlgebra build_central_extension(const LieAlgebra& base,
                                   const std::vector<ExtensionPair>& pairs,
                                   const ExtensionSolution& sol,
                                   const std::vector<std::string>& param_names,
                                   const std::string& central_name = "Z");

struct VirtualCopyReport {
    struct Item {
        std::string name;
        bool ok;
        std::string residual;
    };
    std::vector<Item> radical_checks; // (a)
    std::vector<Item> sl2_checks;     // (b)
    std::vector<Item> casimir_checks; // (c)
    NCPoly kprime;
    bool ok() const {
        for (const auto* v : {&radical_checks, &sl2_checks, &casimir_checks})
            for (const auto& i : *v)
                if (!i.ok) return false;
        return true;
    }
};

// Checks, inside the given enveloping context (central charge evaluated):
// (a) the primed triple commutes with every listed radical generator,
// (b) the primed triple satisfies [J0',J2']=2J2', [J0',J-2']=-2J-2',
//     [J2',J-2']=J0',
// (c) K' = J0'^2 + 2(J2'J-2' + J-2'J2') is central.
VirtualCopyReport verify_virtual_copy(const NCPoly& j0p, const NCPoly& j2p,
                                      const NCPoly& jm2p,
                                      const std::vector<int>& radical);

// K = -(m1 m2 / 6) K', expanded in PBW normal form.
NCPoly casimir_from_virtual_copy(const NCPoly& kprime, const std::string& m1,
                                 const std::string& m2);

struct NCTermDiff {
    size_t matched = 0;
    struct Entry {
        std::string monomial;
        std::string computed;
        std::string expected;
    };
    std::vector<Entry> mismatches;
};

NCTermDiff nc_diff(const NCPoly& computed, const NCPoly& expected);

struct RealizationCheck {
    struct Item {
        std::string pair;
        bool ok;
        std::string computed;
        std::string expected;
    };
    std::vector<Item> commutators;
    size_t matched = 0;
    std::vector<Item> casimir; // realized-Casimir diff and limit checks
    bool commutators_ok() const {
        for (const auto& i : commutators)
            if (!i.ok) return false;
        return true;
    }
};

// Diffs the pairwise commutators of realized operators against the evaluated
// extension table ([Y_i,Y_j] = linear part realized + constant part * 1) and
// checks the realized Casimir, including guarded m1->0, m2->0 limits.
RealizationCheck verify_extended_realization(const PbwContextPtr& evaluated_ctx,
                                             const std::vector<DiffOp>& ops,
                                             const NCPoly& computed_casimir,
                                             const std::optional<DiffOp>& expected_casimir);

} // namespace liewb

#endif
