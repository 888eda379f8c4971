#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "umc/cohomology.hpp"
#include "umc/groebner.hpp"

namespace umc {

/// Family tags for the relation generators of the Alexander-invariant
/// presentation and its Groebner / quotient variants.
enum class Family { g1, g2, g3, g4, h1, h2, h3, h4, h5, h6, h7, h8, h9, h0, f };

std::string family_name(Family f);

struct GeneratorLabel {
    Family family = Family::h2;
    PositionIndex pos;  // the block triple (i,j,k)
    // Auxiliary indices, meaning depends on the family:
    //   h1: a=l1;  g1,g2,h3: a=l2;  g3,h4,h5: a=l3;  g4,h6,h7: a=l4;
    //   h8: a=s, b=t;  h9: a=l, b=p;  h0: a=q, b=p;  f: a=p.  h2: none.
    int a = 0, b = 0;

    std::string render() const;  // e.g. "g1(4,3,1;2)"
};

struct LabeledGenerator {
    GeneratorLabel label;
    ModuleElement elem;
};

struct LabeledSet {
    std::vector<LabeledGenerator> items;
    int n = 0;

    GeneratorSet plain() const;
};

/// Relation generators supported on a single block, in presentation row
/// order: ascending by the leading monomial of the coefficient on r_{ijk}.
std::vector<LabeledGenerator> block_relations(int n, const PositionIndex& pos);

/// The full generating set of im(Psi): all blocks in triples_desc order.
LabeledSet gens_B(int n);

/// The Groebner generating set: gens_B plus the quadratic block elements
/// x_{kl}x_{kp} r_{ijk} and x_{jq}x_{kp} r_{ijk} (1 <= p <= l < k, 1 <= q <= k).
LabeledSet gens_G(int n);

/// Quotient-module generators: gens_B plus x_{kp} r_{ijk} for 1 <= p <= k-1.
LabeledSet gens_Bprime(int n);

/// Closed-form generator counts.
long m_block(int n, int k);  // C(n,2) - 2k
long m_total(int n);         // n(n^4 - 5n^3 + 7n^2 - n - 2)/12

/// A degree-3 exterior column with polynomial coefficients: the image of one
/// relation under the Aomoto differential.
using E3Column = std::map<ExtMonomial, Polynomial, ExtMonoGreater>;

/// d^2(e (x) 1) = sum over variables x_{st} of (u_{st} ^ e) (x) x_{st}.
E3Column aomoto_d2(const ExtElement& e, int n);

/// The closed-formula matrix of Phi, one column per triple in triples_desc
/// order. Must agree with aomoto_d2 applied to each relation r*_{ijk}.
std::vector<E3Column> phi(int n);

/// Generators of im(Phi*): one module element per degree-3 exterior monomial,
/// collecting the coefficients of that monomial across the columns of phi.
GeneratorSet phi_star(int n);

/// submodule_equal(phi_star(n), gens_B(n)).
bool phi_star_equivalence(int n, const BuchbergerOptions& opts = {});

/// Per-element certificates that the quadratic set D lies in <B>, via the
/// explicit combinations of Appendix-A step 1, checked structurally. Throws
/// std::logic_error with the offending label on mismatch.
void certify_D_in_B(int n);

/// Presentation rows as coefficient vectors over the triples_desc columns.
std::vector<std::vector<Polynomial>> presentation_rows(const std::vector<LabeledGenerator>& rows,
                                                       int n);

/// Each row of block (i,j,k) touches only positions p with r_{ijk} >= p.
bool block_triangular(const std::vector<LabeledGenerator>& rows);

/// Diagonal coefficients (on r_{ijk}) of one block, in row order.
std::vector<Polynomial> diagonal_vector(const std::vector<LabeledGenerator>& rows,
                                        const PositionIndex& pos);

struct KnCheckFailure {
    std::string check;   // "membership", "nonzero", "free-action"
    std::string witness;
};

struct KnReport {
    bool pass = true;
    std::uint64_t checks_run = 0;
    std::vector<KnCheckFailure> failures;
};

/// For every quadruple l < k < j < i <= n, against the (certified) Groebner
/// basis G of im(Psi):
///   (a) x_{st} x_{kl} r_{ijk} reduces to zero for all (s,t) != (i,j);
///   (b) x_{kl} r_{ijk} does not reduce to zero;
///   (c) x_{ij}^p x_{kl} r_{ijk} does not reduce to zero for 1 <= p <= maxPower.
KnReport kn_checks(int n, const std::vector<ModuleElement>& G, int maxPower = 4);

}  // namespace umc
