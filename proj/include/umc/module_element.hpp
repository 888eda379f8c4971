#pragma once

#include <cassert>
#include <compare>
#include <map>
#include <string>
#include <utility>

#include "umc/polynomial.hpp"

namespace umc {

/// Free-module basis index r_{ijk} with 1 <= k < j < i <= n.
struct PositionIndex {
    int i = 0, j = 0, k = 0;

    PositionIndex() = default;
    PositionIndex(int i_, int j_, int k_) : i(i_), j(j_), k(k_) {
        assert(1 <= k && k < j && j < i);
    }

    friend bool operator==(const PositionIndex&, const PositionIndex&) = default;
};

/// r_{lst} > r_{ijk} iff i > l, or i = l and j > s, or i = l, j = s and k > t:
/// lexicographically smaller triples are larger.
inline std::strong_ordering cmp_position(const PositionIndex& a, const PositionIndex& b) {
    if (a.i != b.i) return b.i <=> a.i;
    if (a.j != b.j) return b.j <=> a.j;
    return b.k <=> a.k;
}

inline bool pos_greater(const PositionIndex& a, const PositionIndex& b) {
    return cmp_position(a, b) > 0;
}

/// A module monomial x^alpha * r_{ijk}.
struct ModTerm {
    PositionIndex pos;
    Monomial mono;

    friend bool operator==(const ModTerm&, const ModTerm&) = default;
};

/// Position-over-term order: position first, then the monomial order.
inline std::strong_ordering cmp_module_term(const ModTerm& a, const ModTerm& b) {
    if (auto c = cmp_position(a.pos, b.pos); c != 0) return c;
    return cmp_monomial(a.mono, b.mono);
}

struct ModTermGreater {
    bool operator()(const ModTerm& a, const ModTerm& b) const { return cmp_module_term(a, b) > 0; }
};

/// Element of the free module S^{C(n,3)}: finite sum of terms c * x^alpha * r_{ijk},
/// stored descending by the module order.
class ModuleElement {
  public:
    using TermMap = std::map<ModTerm, Rat, ModTermGreater>;

    ModuleElement() = default;
    ModuleElement(const Rat& c, const Monomial& m, const PositionIndex& p);
    /// p * r_pos for a polynomial coefficient.
    ModuleElement(const Polynomial& p, const PositionIndex& pos);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    const ModTerm& leading_term() const;
    const Rat& leading_coefficient() const;

    void add_term(const PositionIndex& p, const Monomial& m, const Rat& c);

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator-() const;
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    friend ModuleElement operator*(const Rat& c, const ModuleElement& e);
    /// Multiply by the scalar term c * m.
    ModuleElement scaled(const Rat& c, const Monomial& m) const;
    friend ModuleElement operator*(const Polynomial& p, const ModuleElement& e);

    /// Polynomial coefficient sitting on position p.
    Polynomial coefficient_at(const PositionIndex& p) const;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

  private:
    TermMap terms_;
};

std::string to_string(const PositionIndex& p);  // "r[i,j,k]"
std::string to_string(const ModuleElement& e);  // terms descending

}  // namespace umc
