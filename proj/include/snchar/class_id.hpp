#pragma once

#include <vector>

#include "snchar/ints.hpp"
#include "snchar/partition.hpp"

namespace snchar {

/// Leading hook-character values of a class: (xi_{n,n-1}, xi_{n,n-2}, ...),
/// i.e. the sign character first. The prefix holds floor(n/2) values for
/// n >= 4 and one value for n <= 2. n = 3 carries two values: the single
/// value floor(3/2) = 1 is the sign character alone, which takes the same
/// value +1 on (3) and (1,1,1), so no one-value prefix can separate them
/// (see the regression test pinning that collision).
struct XiPrefix {
    int n = 0;
    std::vector<Int> values;
};

int xi_prefix_length(int n);

/// Slices xi_values(n, nu) down from position n-1. Test-side generator.
XiPrefix xi_prefix(const Partition& nu);

/// Exact coefficients of prod_k (X^{nu_k} - 1), leading coefficient first.
std::vector<Int> product_polynomial(const Partition& nu);

/// Recovers the cycle type from its prefix:
///   1. low coefficients of q(X) = p(X)/(X-1) from the xi values,
///   2. p(X) mod X^m via p = (X-1) q,
///   3. length parity of nu from the constant term p_0 = (-1)^l,
///   4. normalize r = (-1)^l p so r = prod (1 - X^{nu_k}) mod X^m,
///   5. peel small parts: the smallest s in [1, m-1] with r_s != 0 is the
///      smallest remaining part; divide by (1 - X^s) in place and repeat,
///   6. endgame: the remaining mass sits in one part or two near-equal
///      parts, decided by the parity from step 3.
/// Throws NotAClassError when the prefix is inconsistent with every cycle type.
Partition class_from_xi_prefix(const XiPrefix& prefix);

}  // namespace snchar
