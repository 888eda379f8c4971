#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umc/variable.hpp"

namespace umc {

/// Sparse monomial: exponent pairs stored descending by variable order,
/// no zero exponents, cached total degree.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(const Variable& v, int exp = 1);
    /// Pairs need not be sorted; zero exponents are dropped.
    static Monomial from_pairs(std::vector<std::pair<Variable, int>> pairs);

    int degree() const { return degree_; }
    bool is_one() const { return exps_.empty(); }
    int exponent(const Variable& v) const;
    const std::vector<std::pair<Variable, int>>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// o / *this, or nullopt if not divisible.
    std::optional<Monomial> divide_into(const Monomial& o) const;

    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<std::pair<Variable, int>> exps_;  // descending by variable
    int degree_ = 0;
};

/// Graded reverse lexicographic order. Higher degree wins; at equal degree,
/// with exponent vectors listed from the largest variable down to the
/// smallest, a > b iff the last nonzero entry of a - b is negative.
std::strong_ordering cmp_monomial(const Monomial& a, const Monomial& b);

inline bool mono_greater(const Monomial& a, const Monomial& b) {
    return cmp_monomial(a, b) > 0;
}

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_greater(a, b); }
};

std::string to_string(const Monomial& m);  // "x[4,1]x[2,1]^2", "1" for unit

}  // namespace umc
