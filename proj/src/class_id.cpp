#include "snchar/class_id.hpp"

#include <algorithm>
#include <stdexcept>

#include "snchar/charvalues.hpp"
#include "snchar/errors.hpp"

namespace snchar {

int xi_prefix_length(int n) {
    if (n < 1) throw std::invalid_argument("xi_prefix_length: n must be positive");
    if (n <= 2) return 1;
    if (n == 3) return 2;
    return n / 2;
}

XiPrefix xi_prefix(const Partition& nu) {
    const int n = nu.weight();
    std::vector<Int> xi = xi_values(n, nu);
    XiPrefix p;
    p.n = n;
    const int len = xi_prefix_length(n);
    for (int i = 0; i < len; ++i) p.values.push_back(xi[n - 1 - i]);
    return p;
}

std::vector<Int> product_polynomial(const Partition& nu) {
    if (nu.empty()) throw std::invalid_argument("product_polynomial: empty partition");
    std::vector<Int> p{Int(1)};  // low to high while building
    for (int part : nu.parts()) {
        std::vector<Int> next(p.size() + part, Int(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] -= p[i];
            next[i + part] += p[i];
        }
        p = std::move(next);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

Partition class_from_xi_prefix(const XiPrefix& prefix) {
    const int n = prefix.n;
    if (n < 1) throw std::invalid_argument("class_from_xi_prefix: n must be positive");
    if (static_cast<int>(prefix.values.size()) != xi_prefix_length(n))
        throw std::invalid_argument("class_from_xi_prefix: expected " +
                                    std::to_string(xi_prefix_length(n)) + " values for n = " +
                                    std::to_string(n));
    if (n == 1) return Partition({1});

    const int m = static_cast<int>(prefix.values.size());
    // q_j = (-1)^{n-1-j} xi_{n,n-1-j}; then p = (X-1) q, truncated mod X^m
    std::vector<Int> q(m), p(m);
    for (int j = 0; j < m; ++j) {
        q[j] = prefix.values[j];
        if ((n - 1 - j) % 2 == 1) q[j] = -q[j];
    }
    p[0] = -q[0];
    for (int j = 1; j < m; ++j) p[j] = q[j - 1] - q[j];

    if (p[0] != 1 && p[0] != -1)
        throw NotAClassError("constant term " + to_decimal(p[0]) + " is not a unit");
    const bool length_odd = (p[0] == -1);

    // r = (-1)^l p = prod (1 - X^{nu_k}) mod X^m, so r_0 = 1
    std::vector<Int> r = p;
    if (length_odd)
        for (Int& v : r) v = -v;

    std::vector<int> parts;
    int remaining = n;
    for (;;) {
        int s = 0;
        for (int j = 1; j < m; ++j) {
            if (r[j] != 0) {
                s = j;
                break;
            }
        }
        if (s == 0) break;
        parts.push_back(s);
        remaining -= s;
        if (remaining < 0) throw NotAClassError("peeled parts exceed n");
        // divide the truncated series by (1 - X^s)
        for (int j = s; j < m; ++j) r[j] += r[j - s];
    }

    if (remaining == 0) {
        if ((parts.size() % 2 == 1) != length_odd)
            throw NotAClassError("part count disagrees with the length parity");
    } else {
        const bool one_more_odd = ((parts.size() + 1) % 2 == 1) == length_odd;
        if (one_more_odd) {
            // a single remaining part; it must be too large for the window
            if (remaining < m) throw NotAClassError("leftover mass too small for one hidden part");
            parts.push_back(remaining);
        } else {
            if (remaining < 2 * m) throw NotAClassError("leftover mass too small for two hidden parts");
            parts.push_back((remaining + 1) / 2);
            parts.push_back(remaining / 2);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

}  // namespace snchar
