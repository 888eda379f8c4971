#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umc/module_element.hpp"

namespace umc {

struct GeneratorSet {
    std::vector<ModuleElement> generators;
    int n = 0;  // ambient index bound: positions r_{ijk} with k < j < i <= n

    /// Drops zero elements and duplicates.
    GeneratorSet normalized() const;
};

struct GroebnerBasis {
    std::vector<ModuleElement> elements;  // monic, sorted descending by leading term
    bool reduced = false;
    int n = 0;
};

struct PosGreater {
    bool operator()(const PositionIndex& a, const PositionIndex& b) const {
        return pos_greater(a, b);
    }
};

struct MonomialModule {
    /// Per-position minimal monomial generators (antichains under divisibility).
    std::map<PositionIndex, std::vector<Monomial>, PosGreater> gens;

    friend bool operator==(const MonomialModule&, const MonomialModule&) = default;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;  // parallel to the divisor list
    ModuleElement remainder;
};

/// Pair certificate for is_groebner / Buchberger runs.
struct SPairRecord {
    int a = 0, b = 0;  // indices into the generator list
    bool reduced_to_zero = false;
};

struct GroebnerCertificate {
    bool pass = false;
    std::size_t pairs_checked = 0;
    std::size_t reductions = 0;
    std::optional<SPairRecord> counterexample;
    ModuleElement witness;  // nonzero normal form of the failing pair
    std::string render() const;
};

struct BuchbergerOptions {
    std::uint64_t pair_budget = 1'000'000;
    /// Product criterion, applied only to pairs whose elements are each
    /// supported on a single position (where the classical proof is valid).
    bool use_product_criterion = true;
    bool use_chain_criterion = false;
};

struct BudgetExceeded {
    std::uint64_t budget;
};

/// Division with remainder. At each step the divisor chosen is the first in
/// list order whose leading term divides the current leading term.
/// Postcondition: f == sum quotients[i]*divisors[i] + remainder, no term of
/// the remainder divisible by any leading term of the divisors.
DivisionResult normal_form(const ModuleElement& f, const std::vector<ModuleElement>& divisors);

/// S-vector of g and h; nullopt when leading terms sit on different positions.
std::optional<ModuleElement> s_pair(const ModuleElement& g, const ModuleElement& h);

/// Reduced Groebner basis of the submodule generated by G; the output is the
/// unique monic reduced basis, independent of input order.
/// Throws BudgetExceeded when the pair budget runs out.
GroebnerBasis buchberger(const GeneratorSet& G, const BuchbergerOptions& opts = {});

/// Buchberger criterion on G as given: every same-position S-pair must reduce
/// to zero against G. No pairs are skipped.
GroebnerCertificate is_groebner(const GeneratorSet& G);

/// Per-position minimal generators of the initial submodule. Requires a
/// certified Groebner basis.
MonomialModule initial_module(const GroebnerBasis& G);
MonomialModule initial_module_of(const std::vector<ModuleElement>& certified_basis);

bool contains(const ModuleElement& f, const GroebnerBasis& G);

bool submodule_equal(const GeneratorSet& A, const GeneratorSet& B,
                     const BuchbergerOptions& opts = {});

}  // namespace umc
