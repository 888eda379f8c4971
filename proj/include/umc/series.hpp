#pragma once

#include <string>
#include <vector>

#include "umc/groebner.hpp"
#include "umc/rational.hpp"

namespace umc {

Int binomial(long n, long k);

/// Rational function num(t) / (1-t)^denomPower with integer numerator,
/// kept canonical: numerator has no trailing zeros and, while denomPower > 0,
/// no factor of (1-t).
class RationalSeries {
  public:
    RationalSeries() = default;
    RationalSeries(std::vector<Int> numerator, int denomPower);

    static RationalSeries zero() { return {}; }
    static RationalSeries one_over(int d);          // 1/(1-t)^d
    static RationalSeries monomial(const Int& c, int power);  // c*t^power

    bool is_zero() const { return num_.empty(); }
    const std::vector<Int>& numerator() const { return num_; }
    int denom_power() const { return d_; }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;
    friend RationalSeries operator*(const Int& c, const RationalSeries& s);

    /// Coefficients of t^0 .. t^count-1 of the power-series expansion.
    std::vector<Int> expansion(int count) const;

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

  private:
    void canonicalize();

    std::vector<Int> num_;  // num_[i] = coefficient of t^i
    int d_ = 0;
};

std::string to_string(const RationalSeries& s);

/// Exact Hilbert series of S/I for a monomial ideal I in nvars variables,
/// by the pivot-variable recursion (memoized on the minimalized generators).
RationalSeries hilb_monomial(std::vector<Monomial> gens, int nvars);

/// Hilbert series of F/M for a monomial submodule M of a free module of the
/// given rank, all module generators in degree 0: the per-position sum.
RationalSeries hilb_module(const MonomialModule& M, long rank, int nvars);

/// Hilbert series of the cokernel of a presentation: Groebner basis, initial
/// module, then hilb_module. Rank and variable count derive from G.n.
RationalSeries hilb_fp(const GeneratorSet& G, const BuchbergerOptions& opts = {});

/// sum_{s=2}^{n-1} C(s,2)/(1-t)^{n-s+1} + C(n,4) t/(1-t).
RationalSeries closed_hilb_Bn(int n);
/// sum_{s=2}^{n-1} C(s,2)/(1-t)^{n-s+1}.
RationalSeries closed_hilb_Bnprime(int n);

struct ChenTable {
    int n = 0;
    std::vector<Int> theta;  // theta[k-1] = theta_k, k = 1..K
};

/// theta_1 = C(n,2), theta_2 = C(n,3), theta_3 = 2 C(n+1,4),
/// theta_k = C(n+k-2, k+1) + theta_{k-1} for k >= 4.
ChenTable chen_closed(int n, int K);

/// theta_{k+2} read as the coefficient of t^k in closed_hilb_Bn(n), k >= 0;
/// theta_1 = C(n,2).
ChenTable chen_from_series(int n, int K);

struct ComparisonRanks {
    Int theta4_pure_braid;   // theta_4(P_n)  = 3 C(n+1,4)
    Int theta4_pure_sym;     // theta_4(Pi_n) = 3 C(n+2,5)
    Int theta4_upper;        // theta_4(PSigma_n^+) = 2 C(n+1,4) + C(n+2,5)
    Int thetak_mccool;       // theta_k(PSigma_n) = (k-1)C(n,2) + (k^2-1)C(n,3)
    bool theta4_pairwise_distinct = false;
};

ComparisonRanks comparison_ranks(int n, int k);

/// hilb_fp(B_n) == hilb_fp(B'_n) + C(n,4) * t/(1-t): the Hilbert-series
/// consequence of the short exact sequence 0 -> K_n -> B_n -> B'_n -> 0,
/// with the embedding raising degree by one.
bool ses_identity(int n, const BuchbergerOptions& opts = {});

}  // namespace umc
