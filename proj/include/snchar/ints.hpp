#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace snchar {

/// Exact arbitrary-precision signed integer.
using Int = mpz_class;
/// Exact rational number.
using Rat = mpq_class;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Binomial coefficient n over k; zero outside 0 <= k <= n.
inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// x(x-1)/2 for any integer x (the "choose 2" polynomial).
inline Int choose2(const Int& x) {
    Int r = x * (x - 1);
    return r / 2;
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

inline Int parse_decimal(const std::string& text) {
    Int v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return v;
}

}  // namespace snchar
