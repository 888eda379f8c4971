#pragma once

#include <cassert>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umc/rational.hpp"
#include "umc/variable.hpp"

namespace umc {

/// Degree-1 exterior generator u_{ij} with 1 <= j < i <= n.
struct ExtGen {
    int upper = 0;
    int lower = 0;

    ExtGen() = default;
    ExtGen(int i, int j) : upper(i), lower(j) { assert(1 <= j && j < i); }

    friend bool operator==(const ExtGen&, const ExtGen&) = default;
};

/// u_{ij} > u_{kl} iff i > k, or i = k and j > l.
inline std::strong_ordering cmp_ext_gen(const ExtGen& a, const ExtGen& b) {
    if (a.upper != b.upper) return a.upper <=> b.upper;
    return a.lower <=> b.lower;
}

inline bool ext_gen_greater(const ExtGen& a, const ExtGen& b) { return cmp_ext_gen(a, b) > 0; }

/// Square-free exterior monomial in canonical form: generators strictly
/// descending; the sign of the sorting permutation is returned by normalize
/// and absorbed into coefficients.
class ExtMonomial {
  public:
    ExtMonomial() = default;

    /// Canonicalize a product written in any order. Returns the monomial and
    /// the permutation sign, or nullopt when a generator repeats (zero).
    static std::optional<std::pair<ExtMonomial, int>> normalize(std::vector<ExtGen> gens);

    int degree() const { return static_cast<int>(gens_.size()); }
    const std::vector<ExtGen>& generators() const { return gens_; }

    friend bool operator==(const ExtMonomial&, const ExtMonomial&) = default;

  private:
    std::vector<ExtGen> gens_;  // strictly descending
};

/// Degree first, then lexicographic on the descending generator tuple.
std::strong_ordering cmp_ext_monomial(const ExtMonomial& a, const ExtMonomial& b);

struct ExtMonoGreater {
    bool operator()(const ExtMonomial& a, const ExtMonomial& b) const {
        return cmp_ext_monomial(a, b) > 0;
    }
};

/// Homogeneous element of the exterior algebra E = /\ V on {u_{ij}}.
class ExtElement {
  public:
    using TermMap = std::map<ExtMonomial, Rat, ExtMonoGreater>;

    ExtElement() = default;
    explicit ExtElement(int degree) : degree_(degree) {}

    static ExtElement generator(const ExtGen& g);
    static ExtElement unit();  // 1 in degree 0

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coefficient(const ExtMonomial& m) const;

    void add_term(const ExtMonomial& m, const Rat& c);

    ExtElement operator+(const ExtElement& o) const;
    ExtElement operator-(const ExtElement& o) const;
    ExtElement operator-() const;
    friend ExtElement operator*(const Rat& c, const ExtElement& e);

    friend bool operator==(const ExtElement&, const ExtElement&) = default;

  private:
    TermMap terms_;
    int degree_ = 0;
};

/// Exterior product; bilinear, graded-commutative, square-zero.
ExtElement wedge(const ExtElement& a, const ExtElement& b);
ExtElement wedge(const ExtElement& a, const ExtElement& b, const ExtElement& c);

/// u_{ij} as a degree-1 element.
inline ExtElement ext_u(int i, int j) { return ExtElement::generator(ExtGen(i, j)); }

std::string to_string(const ExtGen& g);       // "u[i,j]"
std::string to_string(const ExtMonomial& m);  // "u[i,j]^u[k,l]" descending
std::string to_string(const ExtElement& e);

}  // namespace umc
