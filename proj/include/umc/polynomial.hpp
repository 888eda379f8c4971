#pragma once

#include <map>
#include <string>

#include "umc/monomial.hpp"
#include "umc/rational.hpp"

namespace umc {

/// Exact sparse polynomial over the rationals. Terms are stored descending by
/// the monomial order, so iteration starts at the leading term and equality
/// is structural.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rat, MonoGreater>;

    Polynomial() = default;
    explicit Polynomial(const Rat& c);
    Polynomial(const Rat& c, const Monomial& m);
    static Polynomial variable(const Variable& v);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int degree() const;  // -1 for zero

    const Monomial& leading_monomial() const;
    const Rat& leading_coefficient() const;

    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator*(const Rat& c, const Polynomial& p);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    TermMap terms_;
};

std::string to_string(const Polynomial& p);  // terms descending, e.g. "x[4,1]+x[3,1]+x[2,1]"

}  // namespace umc
