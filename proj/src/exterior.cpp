#include <algorithm>
#include <sstream>

#include "umc/exterior.hpp"

namespace umc {

std::optional<std::pair<ExtMonomial, int>> ExtMonomial::normalize(std::vector<ExtGen> gens) {
    // Insertion sort into descending order, tracking the permutation sign.
    int sign = 1;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && ext_gen_greater(gens[j], gens[j - 1])) {
            std::swap(gens[j], gens[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < gens.size(); ++i)
        if (gens[i] == gens[i - 1]) return std::nullopt;
    ExtMonomial m;
    m.gens_ = std::move(gens);
    return std::make_pair(std::move(m), sign);
}

std::strong_ordering cmp_ext_monomial(const ExtMonomial& a, const ExtMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (auto c = cmp_ext_gen(ga[i], gb[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

ExtElement ExtElement::generator(const ExtGen& g) {
    ExtElement e(1);
    auto [m, sign] = *ExtMonomial::normalize({g});
    e.terms_.emplace(m, sign);
    return e;
}

ExtElement ExtElement::unit() {
    ExtElement e(0);
    e.terms_.emplace(ExtMonomial{}, 1);
    return e;
}

Rat ExtElement::coefficient(const ExtMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void ExtElement::add_term(const ExtMonomial& m, const Rat& c) {
    assert(m.degree() == degree_ || is_zero());
    if (c == 0) return;
    degree_ = m.degree();
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
    assert(is_zero() || o.is_zero() || degree_ == o.degree_);
    ExtElement e = *this;
    if (e.is_zero()) e.degree_ = o.degree_;
    for (const auto& [m, c] : o.terms_) e.add_term(m, c);
    return e;
}

ExtElement ExtElement::operator-(const ExtElement& o) const { return *this + (-o); }

ExtElement ExtElement::operator-() const {
    ExtElement e(degree_);
    for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
    return e;
}

ExtElement operator*(const Rat& c, const ExtElement& e) {
    ExtElement out(e.degree());
    if (c == 0) return out;
    for (const auto& [m, q] : e.terms_) out.terms_.emplace(m, c * q);
    return out;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
    ExtElement out(a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<ExtGen> gens = ma.generators();
            gens.insert(gens.end(), mb.generators().begin(), mb.generators().end());
            auto norm = ExtMonomial::normalize(std::move(gens));
            if (!norm) continue;
            out.add_term(norm->first, ca * cb * norm->second);
        }
    }
    return out;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b, const ExtElement& c) {
    return wedge(wedge(a, b), c);
}

std::string to_string(const ExtGen& g) {
    std::ostringstream os;
    os << "u[" << g.upper << "," << g.lower << "]";
    return os.str();
}

std::string to_string(const ExtMonomial& m) {
    if (m.degree() == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& g : m.generators()) {
        if (!first) os << "^";
        os << to_string(g);
        first = false;
    }
    return os.str();
}

std::string to_string(const ExtElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rat a = abs(c);
        if (sgn(c) < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (a != 1 || m.degree() == 0) {
            os << to_string(a);
            if (m.degree() > 0) os << "*";
        }
        if (m.degree() > 0) os << to_string(m);
        first = false;
    }
    return os.str();
}

}  // namespace umc
