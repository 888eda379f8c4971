#include <algorithm>
#include <map>
#include <sstream>

#include "umc/presentations.hpp"
#include "umc/series.hpp"

namespace umc {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

RationalSeries::RationalSeries(std::vector<Int> numerator, int denomPower)
    : num_(std::move(numerator)), d_(denomPower) {
    canonicalize();
}

void RationalSeries::canonicalize() {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
    if (num_.empty()) {
        d_ = 0;
        return;
    }
    while (d_ > 0) {
        Int sum = 0;
        for (const auto& c : num_) sum += c;
        if (sum != 0) break;
        // num = (1-t) q  =>  q_i = num_i + q_{i-1}.
        std::vector<Int> q(num_.size() - 1);
        Int carry = 0;
        for (std::size_t i = 0; i + 1 < num_.size(); ++i) {
            carry += num_[i];
            q[i] = carry;
        }
        num_ = std::move(q);
        --d_;
        while (!num_.empty() && num_.back() == 0) num_.pop_back();
        if (num_.empty()) {
            d_ = 0;
            return;
        }
    }
}

RationalSeries RationalSeries::one_over(int d) { return RationalSeries({Int(1)}, d); }

RationalSeries RationalSeries::monomial(const Int& c, int power) {
    std::vector<Int> num(static_cast<std::size_t>(power) + 1, Int(0));
    num.back() = c;
    return RationalSeries(std::move(num), 0);
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    int d = std::max(d_, o.d_);
    auto lift = [d](const RationalSeries& s) {
        // Multiply the numerator by (1-t)^(d - s.d_).
        std::vector<Int> num = s.num_;
        for (int rep = s.d_; rep < d; ++rep) {
            std::vector<Int> next(num.size() + 1, Int(0));
            for (std::size_t i = 0; i < num.size(); ++i) {
                next[i] += num[i];
                next[i + 1] -= num[i];
            }
            num = std::move(next);
        }
        return num;
    };
    std::vector<Int> a = lift(*this), b = lift(o);
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return RationalSeries(std::move(a), d);
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    return *this + Int(-1) * o;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> num(num_.size() + o.num_.size() - 1, Int(0));
    for (std::size_t i = 0; i < num_.size(); ++i)
        for (std::size_t j = 0; j < o.num_.size(); ++j) num[i + j] += num_[i] * o.num_[j];
    return RationalSeries(std::move(num), d_ + o.d_);
}

RationalSeries operator*(const Int& c, const RationalSeries& s) {
    if (c == 0) return {};
    std::vector<Int> num = s.num_;
    for (auto& x : num) x *= c;
    return RationalSeries(std::move(num), s.d_);
}

std::vector<Int> RationalSeries::expansion(int count) const {
    std::vector<Int> out(static_cast<std::size_t>(count), Int(0));
    // 1/(1-t)^d = sum C(d-1+m, d-1) t^m.
    for (int m = 0; m < count; ++m) {
        Int coeff = d_ > 0 ? binomial(d_ - 1 + m, d_ - 1) : Int(m == 0 ? 1 : 0);
        for (std::size_t i = 0; i < num_.size(); ++i) {
            std::size_t pos = i + static_cast<std::size_t>(m);
            if (pos >= out.size()) break;
            out[pos] += num_[i] * coeff;
        }
    }
    return out;
}

std::string to_string(const RationalSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    os << "(";
    bool first = true;
    const auto& num = s.numerator();
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        Int a = abs(num[i]);
        if (sgn(num[i]) < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    os << ")";
    if (s.denom_power() > 0) {
        os << "/(1-t)";
        if (s.denom_power() > 1) os << "^" << s.denom_power();
    }
    return os.str();
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), mono_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

std::string memo_key(const std::vector<Monomial>& gens, int nvars) {
    std::ostringstream os;
    os << nvars;
    for (const auto& g : gens) os << ";" << to_string(g);
    return os.str();
}

RationalSeries hilb_minimal(const std::vector<Monomial>& gens, int nvars);

RationalSeries hilb_recurse(const std::vector<Monomial>& gens, int nvars) {
    // Pivot: the variable dividing the most generators; ties to the larger
    // variable in the variable order.
    std::map<Variable, int, decltype([](const Variable& a, const Variable& b) {
                 return var_greater(a, b);
             })>
        count;
    for (const auto& g : gens)
        for (const auto& [v, e] : g.exponents()) count[v] += 1;
    Variable pivot = count.begin()->first;
    int best = count.begin()->second;
    for (const auto& [v, c] : count)
        if (c > best) pivot = v, best = c;

    std::vector<Monomial> J{Monomial(pivot)};
    std::vector<Monomial> Iprime;
    for (const auto& g : gens) {
        if (g.exponent(pivot) == 0) J.push_back(g);
        std::vector<std::pair<Variable, int>> pairs;
        for (const auto& [v, e] : g.exponents())
            pairs.emplace_back(v, v == pivot ? e - 1 : e);
        Iprime.push_back(Monomial::from_pairs(std::move(pairs)));
    }
    return hilb_minimal(minimalize(std::move(J)), nvars) +
           RationalSeries::monomial(1, 1) * hilb_minimal(minimalize(std::move(Iprime)), nvars);
}

/// gens must be a minimal (antichain) system, sorted descending.
RationalSeries hilb_minimal(const std::vector<Monomial>& gens, int nvars) {
    for (const auto& g : gens)
        if (g.is_one()) return RationalSeries::zero();
    if (gens.empty()) return RationalSeries::one_over(nvars);

    // A bare variable among the generators just removes that variable from
    // the ring; stripping these keeps the pivot recursion strictly shrinking.
    std::vector<Monomial> rest;
    int removed = 0;
    for (const auto& g : gens) {
        if (g.degree() == 1)
            ++removed;
        else
            rest.push_back(g);
    }
    if (removed > 0) return hilb_minimal(rest, nvars - removed);

    bool pure_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pure_coprime; ++i) {
        if (gens[i].exponents().size() != 1) pure_coprime = false;
        for (std::size_t j = i + 1; j < gens.size() && pure_coprime; ++j)
            if (!gcd(gens[i], gens[j]).is_one()) pure_coprime = false;
    }
    if (pure_coprime) {
        RationalSeries s = RationalSeries::one_over(nvars);
        for (const auto& g : gens) {
            std::vector<Int> factor(static_cast<std::size_t>(g.degree()) + 1, Int(0));
            factor.front() = 1;
            factor.back() = -1;
            s = s * RationalSeries(std::move(factor), 0);
        }
        return s;
    }

    static std::map<std::string, RationalSeries> memo;
    std::string key = memo_key(gens, nvars);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    RationalSeries result = hilb_recurse(gens, nvars);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

RationalSeries hilb_monomial(std::vector<Monomial> gens, int nvars) {
    return hilb_minimal(minimalize(std::move(gens)), nvars);
}

RationalSeries hilb_module(const MonomialModule& M, long rank, int nvars) {
    RationalSeries total;
    long nonzero_positions = 0;
    for (const auto& [pos, gens] : M.gens) {
        ++nonzero_positions;
        total = total + hilb_monomial(gens, nvars);
    }
    return total + Int(rank - nonzero_positions) * RationalSeries::one_over(nvars);
}

RationalSeries hilb_fp(const GeneratorSet& G, const BuchbergerOptions& opts) {
    GroebnerBasis basis = buchberger(G, opts);
    MonomialModule ini = initial_module_of(basis.elements);
    long rank = binomial(G.n, 3).get_si();
    int nvars = G.n * (G.n - 1) / 2;
    return hilb_module(ini, rank, nvars);
}

RationalSeries closed_hilb_Bn(int n) {
    return closed_hilb_Bnprime(n) +
           binomial(n, 4) * RationalSeries::monomial(1, 1) * RationalSeries::one_over(1);
}

RationalSeries closed_hilb_Bnprime(int n) {
    RationalSeries total;
    for (int s = 2; s <= n - 1; ++s)
        total = total + binomial(s, 2) * RationalSeries::one_over(n - s + 1);
    return total;
}

ChenTable chen_closed(int n, int K) {
    ChenTable tab;
    tab.n = n;
    tab.theta.resize(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        Int v;
        if (k == 1)
            v = binomial(n, 2);
        else if (k == 2)
            v = binomial(n, 3);
        else if (k == 3)
            v = 2 * binomial(n + 1, 4);
        else
            v = binomial(n + k - 2, k + 1) + tab.theta[static_cast<std::size_t>(k) - 2];
        tab.theta[static_cast<std::size_t>(k) - 1] = v;
    }
    return tab;
}

ChenTable chen_from_series(int n, int K) {
    ChenTable tab;
    tab.n = n;
    tab.theta.resize(static_cast<std::size_t>(K));
    if (K >= 1) tab.theta[0] = binomial(n, 2);
    if (K >= 2) {
        auto coeffs = closed_hilb_Bn(n).expansion(K - 1);
        for (int k = 2; k <= K; ++k) tab.theta[static_cast<std::size_t>(k) - 1] = coeffs[k - 2];
    }
    return tab;
}

ComparisonRanks comparison_ranks(int n, int k) {
    ComparisonRanks out;
    out.theta4_pure_braid = 3 * binomial(n + 1, 4);
    out.theta4_pure_sym = 3 * binomial(n + 2, 5);
    out.theta4_upper = 2 * binomial(n + 1, 4) + binomial(n + 2, 5);
    out.thetak_mccool =
        Int(k - 1) * binomial(n, 2) + Int(static_cast<long>(k) * k - 1) * binomial(n, 3);
    out.theta4_pairwise_distinct = out.theta4_pure_braid != out.theta4_pure_sym &&
                                   out.theta4_pure_braid != out.theta4_upper &&
                                   out.theta4_pure_sym != out.theta4_upper;
    return out;
}

bool ses_identity(int n, const BuchbergerOptions& opts) {
    RationalSeries lhs = hilb_fp(gens_B(n).plain(), opts);
    RationalSeries rhs = hilb_fp(gens_Bprime(n).plain(), opts) +
                         binomial(n, 4) * RationalSeries::monomial(1, 1) *
                             RationalSeries::one_over(1);
    return lhs == rhs;
}

}  // namespace umc
