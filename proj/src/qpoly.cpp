#include <algorithm>
#include <sstream>

#include "umc/module_element.hpp"

namespace umc {

std::vector<Variable> variables_desc(int n) {
    std::vector<Variable> out;
    for (int i = n; i >= 2; --i)
        for (int j = i - 1; j >= 1; --j) out.emplace_back(i, j);
    return out;
}

int var_index_desc(const Variable& v, int n) {
    // Number of variables strictly larger than v.
    int count = 0;
    for (int i = n; i > v.upper; --i) count += i - 1;
    count += v.upper - 1 - v.lower;
    return count;
}

std::string to_string(const Variable& v) {
    std::ostringstream os;
    os << "x[" << v.upper << "," << v.lower << "]";
    return os.str();
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Variable& v, int exp) {
    if (exp != 0) {
        exps_.emplace_back(v, exp);
        degree_ = exp;
    }
}

Monomial Monomial::from_pairs(std::vector<std::pair<Variable, int>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return var_greater(a.first, b.first); });
    Monomial m;
    for (const auto& [v, e] : pairs) {
        if (e == 0) continue;
        if (!m.exps_.empty() && m.exps_.back().first == v) {
            m.exps_.back().second += e;
            if (m.exps_.back().second == 0) m.exps_.pop_back();
        } else {
            m.exps_.emplace_back(v, e);
        }
        m.degree_ += e;
    }
    return m;
}

int Monomial::exponent(const Variable& v) const {
    for (const auto& [w, e] : exps_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && var_greater(a->first, b->first))) {
            out.exps_.push_back(*a++);
        } else if (a == exps_.end() || var_greater(b->first, a->first)) {
            out.exps_.push_back(*b++);
        } else {
            out.exps_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    out.degree_ = degree_ + o.degree_;
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : exps_)
        if (o.exponent(v) < e) return false;
    return true;
}

std::optional<Monomial> Monomial::divide_into(const Monomial& o) const {
    if (!divides(o)) return std::nullopt;
    std::vector<std::pair<Variable, int>> pairs;
    for (const auto& [v, e] : o.exps_) {
        int q = e - exponent(v);
        if (q > 0) pairs.emplace_back(v, q);
    }
    return Monomial::from_pairs(std::move(pairs));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<Variable, int>> pairs;
    for (const auto& [v, e] : a.exps_) {
        int f = std::min(e, b.exponent(v));
        if (f > 0) pairs.emplace_back(v, f);
    }
    return Monomial::from_pairs(std::move(pairs));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<Variable, int>> pairs;
    for (const auto& [v, e] : a.exps_) pairs.emplace_back(v, std::max(e, b.exponent(v)));
    for (const auto& [v, e] : b.exps_)
        if (a.exponent(v) == 0) pairs.emplace_back(v, e);
    return Monomial::from_pairs(std::move(pairs));
}

std::strong_ordering cmp_monomial(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    // Walk both exponent lists from the smallest-variable end; the first
    // variable (from below) where the exponents differ decides: the monomial
    // with the SMALLER exponent there is the larger one.
    auto ra = a.exponents().rbegin(), ea = a.exponents().rend();
    auto rb = b.exponents().rbegin(), eb = b.exponents().rend();
    while (ra != ea || rb != eb) {
        if (rb == eb || (ra != ea && var_greater(rb->first, ra->first))) {
            // a has a variable smaller than anything left in b: entry of a-b
            // at that variable is positive, so a < b.
            return std::strong_ordering::less;
        }
        if (ra == ea || var_greater(ra->first, rb->first)) {
            return std::strong_ordering::greater;
        }
        if (ra->second != rb->second)
            return ra->second < rb->second ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
        ++ra, ++rb;
    }
    return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    for (const auto& [v, e] : m.exponents()) {
        os << to_string(v);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Rat& c, const Monomial& m) {
    if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(const Variable& v) { return Polynomial(1, Monomial(v)); }

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    assert(!is_zero());
    return terms_.begin()->first;
}

const Rat& Polynomial::leading_coefficient() const {
    assert(!is_zero());
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p = *this;
    return p += o;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial p = *this;
    return p -= o;
}

Polynomial Polynomial::operator-() const {
    Polynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial p;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) p.add_term(m1 * m2, c1 * c2);
    return p;
}

Polynomial operator*(const Rat& c, const Polynomial& p) {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, q] : p.terms_) out.terms_.emplace(m, c * q);
    return out;
}

static void append_coeff(std::ostringstream& os, const Rat& c, const std::string& body,
                         bool first) {
    Rat a = abs(c);
    if (sgn(c) < 0)
        os << "-";
    else if (!first)
        os << "+";
    if (body.empty()) {
        os << to_string(a);
    } else {
        if (a != 1) os << to_string(a) << "*";
        os << body;
    }
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        append_coeff(os, c, m.is_one() ? "" : to_string(m), first);
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------- ModuleElement

ModuleElement::ModuleElement(const Rat& c, const Monomial& m, const PositionIndex& p) {
    if (c != 0) terms_.emplace(ModTerm{p, m}, c);
}

ModuleElement::ModuleElement(const Polynomial& p, const PositionIndex& pos) {
    for (const auto& [m, c] : p.terms()) terms_.emplace(ModTerm{pos, m}, c);
}

const ModTerm& ModuleElement::leading_term() const {
    assert(!is_zero());
    return terms_.begin()->first;
}

const Rat& ModuleElement::leading_coefficient() const {
    assert(!is_zero());
    return terms_.begin()->second;
}

void ModuleElement::add_term(const PositionIndex& p, const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(ModTerm{p, m}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    for (const auto& [t, c] : o.terms_) add_term(t.pos, t.mono, c);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
    for (const auto& [t, c] : o.terms_) add_term(t.pos, t.mono, -c);
    return *this;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    ModuleElement e = *this;
    return e += o;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    ModuleElement e = *this;
    return e -= o;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement e;
    for (const auto& [t, c] : terms_) e.terms_.emplace(t, -c);
    return e;
}

ModuleElement operator*(const Rat& c, const ModuleElement& e) {
    ModuleElement out;
    if (c == 0) return out;
    for (const auto& [t, q] : e.terms()) out.terms_.emplace(t, c * q);
    return out;
}

ModuleElement ModuleElement::scaled(const Rat& c, const Monomial& m) const {
    ModuleElement out;
    if (c == 0) return out;
    for (const auto& [t, q] : terms_) out.terms_.emplace(ModTerm{t.pos, t.mono * m}, c * q);
    return out;
}

ModuleElement operator*(const Polynomial& p, const ModuleElement& e) {
    ModuleElement out;
    for (const auto& [m, c] : p.terms()) out += e.scaled(c, m);
    return out;
}

Polynomial ModuleElement::coefficient_at(const PositionIndex& p) const {
    Polynomial out;
    for (const auto& [t, c] : terms_)
        if (t.pos == p) out.add_term(t.mono, c);
    return out;
}

std::string to_string(const PositionIndex& p) {
    std::ostringstream os;
    os << "r[" << p.i << "," << p.j << "," << p.k << "]";
    return os.str();
}

std::string to_string(const ModuleElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : e.terms()) {
        std::string body = t.mono.is_one() ? to_string(t.pos)
                                           : to_string(t.mono) + "*" + to_string(t.pos);
        append_coeff(os, c, body, first);
        first = false;
    }
    return os.str();
}

}  // namespace umc
