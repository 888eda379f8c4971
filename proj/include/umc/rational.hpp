#pragma once

#include <gmpxx.h>
#include <string>

namespace umc {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace umc
