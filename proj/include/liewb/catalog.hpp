#ifndef LIEWB_CATALOG_HPP
#define LIEWB_CATALOG_HPP

#include <json.hpp>

#include "liewb/extensions.hpp"
#include "liewb/poisson.hpp"

namespace liewb {

using Json = nlohmann::ordered_json;

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Entry-by-entry comparison of a computed antisymmetric bracket table with an
// expected-table fixture. A fixture row [X,Y]=V fills both ordered cells
// (X,Y) and (Y,X)=-V; `matched` counts agreeing nonzero ordered cells.
struct DiffReport {
    size_t matched = 0;           // ordered cells
    size_t matched_unordered = 0; // fixture rows that agree
    size_t fixture_entries = 0;
    struct Entry {
        std::string lhs;
        std::string computed;
        std::string expected;
        std::string note;
    };
    std::vector<Entry> value_mismatch;
    std::vector<Entry> missing_from_table;       // computed nonzero, not listed
    std::vector<Entry> missing_from_computation; // listed nonzero, computed zero
    Json to_json() const;
};

struct ExpectedEntry {
    std::string lhs_a, lhs_b;
    std::vector<std::pair<std::string, Rational>> rhs;
    std::string note;
};

struct ExpectedTable {
    std::string name;
    std::vector<ExpectedEntry> entries;
};

using BracketFn = std::function<std::vector<std::pair<int, Rational>>(int, int)>;

DiffReport table_diff(const std::vector<std::string>& names, const BracketFn& bracket,
                      const ExpectedTable& expected);
DiffReport table_diff(const LieAlgebra& computed, const ExpectedTable& expected);
DiffReport table_diff(const PoissonStructure& computed, const ExpectedTable& expected);

// Parses "2*L12 + L9"-style linear combinations over the algebra's basis.
Element parse_element(const LieAlgebra& L, const std::string& text);

// [realize(Y_i), realize(p)] for every generator; empty list iff the realized
// expression commutes with the whole realized algebra.
struct RealizationInvariantReport {
    DiffOp realized;
    std::vector<std::pair<std::string, DiffOp>> failures;
    bool ok() const { return failures.empty(); }
};
RealizationInvariantReport verify_realization_invariant(const NCPoly& p,
                                                        const std::vector<DiffOp>& ops,
                                                        const std::vector<std::string>& names);

// Canonical algebra serialization (bit-exact round trip).
Json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const Json& j);

// Fixture directory: manifest.json plus one file per fixture. Lookup order
// for the directory: explicit argument, LIEWB_FIXTURES, compiled-in default.
class Catalog {
  public:
    explicit Catalog(std::string dir = "");

    const std::string& dir() const { return dir_; }
    const Json& manifest() const { return manifest_; }
    std::string kind_of(const std::string& name) const;
    Json raw(const std::string& name) const;

    // Realized / abstract / basis-change fixtures, memoized. Basis-change
    // fixtures are validated for closure while loading.
    const LieAlgebra& algebra(const std::string& name);

    // Named elements of a basis-change fixture, as coordinates in its base.
    std::vector<std::pair<std::string, Element>> elements(const std::string& name);

    Grading grading(const std::string& name, const LieAlgebra& target);
    std::vector<Multiplet> multiplets(const std::string& name);
    ExpectedTable expected_table(const std::string& name);

    struct Invariant {
        std::string name;
        std::string expr;
        std::string as_printed; // empty when the display parses as-is
        std::string note;
    };
    std::vector<Invariant> invariants(const std::string& name);

    std::vector<RationalPowerCandidate>
    rational_power_candidates(const std::string& name, const PoissonStructure& S);

    std::vector<FunctionalRelation>
    functional_relations(const std::string& name, const PoissonStructure& S,
                         const std::vector<RationalPowerCandidate>& candidates);

    // Poisson fixtures alias dual coordinates (x1..xn) to generator names.
    std::map<std::string, std::string> coordinate_map(const std::string& name) const;
    Polynomial parse_in_coords(const std::string& fixture, const PoissonStructure& S,
                               const std::string& expr) const;

    struct ExtendedAlgebra {
        std::vector<ExtensionPair> pairs;
        ExtensionSolution solution;
        LieAlgebra algebra; // with central generator
        std::string central;
    };
    // Builds the centrally extended algebra described by a virtual-copy-map
    // or extension-realization fixture.
    ExtendedAlgebra extended_algebra(const std::string& fixture);

    struct VirtualCopyFixture {
        std::string j0p, j2p, jm2p;
        std::vector<std::string> radical;
        std::string expected_fourth_degree;
    };
    VirtualCopyFixture virtual_copy(const std::string& name) const;

    struct ExtensionRealizationFixture {
        VarSet vars;
        std::vector<std::pair<std::string, DiffOp>> operators;
        std::optional<DiffOp> expected_casimir;
    };
    ExtensionRealizationFixture extension_realization(const std::string& name) const;

    // every fixture in the manifest parses and passes its structural checks
    std::vector<std::pair<std::string, std::string>> validate_all();

  private:
    Json load_file(const std::string& file) const;
    std::string dir_;
    Json manifest_;
    std::map<std::string, LieAlgebra> algebra_cache_;
    std::map<std::string, std::vector<std::pair<std::string, Element>>> element_cache_;
};

std::string default_fixture_dir();

} // namespace liewb

#endif
