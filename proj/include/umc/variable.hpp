#pragma once

#include <cassert>
#include <compare>
#include <string>
#include <vector>

namespace umc {

/// The polynomial variable x_{ij} with 1 <= j < i <= n.
struct Variable {
    int upper = 0;  // i
    int lower = 0;  // j, with j < i

    Variable() = default;
    Variable(int i, int j) : upper(i), lower(j) { assert(1 <= j && j < i); }

    friend bool operator==(const Variable&, const Variable&) = default;
};

/// x_{st} > x_{kl} iff s > k, or s = k and t > l.
inline std::strong_ordering cmp_variable(const Variable& a, const Variable& b) {
    if (a.upper != b.upper) return a.upper <=> b.upper;
    return a.lower <=> b.lower;
}

inline bool var_greater(const Variable& a, const Variable& b) {
    return cmp_variable(a, b) > 0;
}

/// All variables for a given n, listed descending: x_{n,n-1} first, x_{2,1} last.
std::vector<Variable> variables_desc(int n);

/// Column index of v in the descending listing for n (0-based).
int var_index_desc(const Variable& v, int n);

std::string to_string(const Variable& v);  // "x[i,j]"

}  // namespace umc
