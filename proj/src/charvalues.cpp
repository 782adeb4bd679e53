#include "snchar/charvalues.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace snchar {

namespace {

thread_local std::unordered_map<std::string, Int> mn_cache;
thread_local std::size_t mn_budget = 4u << 20;

// Packs lambda and the remaining cycle-type suffix into a byte key.
// Parts are < 2^16 in any reachable configuration.
std::string make_key(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_from) {
    std::string key;
    key.reserve(2 * (lambda.size() + (mu.size() - mu_from)) + 2);
    auto put = [&key](int v) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    for (int p : lambda) put(p);
    put(0);
    for (std::size_t i = mu_from; i < mu.size(); ++i) put(mu[i]);
    return key;
}

Int mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_from) {
    if (mu_from == mu.size()) return 1;  // empty diagram, empty cycle type
    std::string key = make_key(lambda, mu, mu_from);
    if (auto it = mn_cache.find(key); it != mn_cache.end()) return it->second;

    int strip = mu[mu_from];  // parts sorted descending: largest first
    Int total = 0;
    for (const RimHookRemoval& removal : rim_hooks(Partition(lambda), strip)) {
        Int sub = mn_recurse(removal.rest.parts(), mu, mu_from + 1);
        if (removal.height % 2 == 1) sub = -sub;
        total += sub;
    }
    if (mn_cache.size() >= mn_budget) mn_cache.clear();
    mn_cache.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character_value: lambda and mu have different weights");
    if (lambda.weight() == 0) return 1;
    return mn_recurse(lambda.parts(), mu.parts(), 0);
}

Int degree(const Partition& lambda) {
    if (lambda.empty()) return 1;
    Int num = factorial(lambda.weight());
    Partition conj = conjugate(lambda);
    Int den = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            den *= lambda.part(i) - j + conj.part(j) - i + 1;
    return num / den;
}

std::vector<Int> xi_values(int n, const Partition& nu) {
    if (nu.weight() != n)
        throw std::invalid_argument("xi_values: nu is not a partition of n");
    if (n <= 0) throw std::invalid_argument("xi_values: n must be positive");

    // p(X) = prod_k (X^{nu_k} - 1), coefficients indexed low to high
    std::vector<Int> p{Int(1)};
    for (int part : nu.parts()) {
        std::vector<Int> next(p.size() + part, Int(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] -= p[i];
            next[i + part] += p[i];
        }
        p = std::move(next);
    }
    // exact division by (X - 1): q_{n-1} = p_n, q_{j-1} = p_j + q_j
    std::vector<Int> q(n);
    Int carry = p[n];
    for (int j = n - 1; j >= 0; --j) {
        q[j] = carry;
        carry = p[j] + carry;
    }
    // remainder p(1) is zero for every genuine product
    if (carry != 0) throw std::logic_error("xi_values: division by X-1 left a remainder");

    std::vector<Int> xi(n);
    for (int k = 0; k < n; ++k) {
        xi[k] = q[n - 1 - k];
        if (k % 2 == 1) xi[k] = -xi[k];
    }
    return xi;
}

Int centralizer_order(const Partition& mu) {
    Int z = 1;
    int run = 0;
    int prev = 0;
    for (int part : mu.parts()) {
        if (part == prev) {
            ++run;
        } else {
            prev = part;
            run = 1;
        }
        z *= part;
        z *= run;  // accumulates j^{m_j} m_j! one part at a time
    }
    return z;
}

// Plain scans: tables stay small and loaded files may be in any label order.
int CharTable::index_of_row(const Partition& p) const {
    auto it = std::find(rows.begin(), rows.end(), p);
    return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int CharTable::index_of_col(const Partition& p) const {
    auto it = std::find(cols.begin(), cols.end(), p);
    return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

CharTable character_table(int n, int limit) {
    if (n < 1) throw std::invalid_argument("character_table: n must be positive");
    if (n > limit)
        throw std::domain_error("character_table: n = " + std::to_string(n) +
                                " exceeds the configured limit " + std::to_string(limit));
    CharTable t;
    t.n = n;
    t.rows = all_partitions(n);
    t.cols = t.rows;
    t.values.resize(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        t.values[i].reserve(t.cols.size());
        for (std::size_t j = 0; j < t.cols.size(); ++j)
            t.values[i].push_back(character_value(t.rows[i], t.cols[j]));
    }
    return t;
}

void set_memo_budget(std::size_t max_entries) {
    mn_budget = std::max<std::size_t>(max_entries, 1);
    if (mn_cache.size() >= mn_budget) mn_cache.clear();
}

std::size_t memo_size() { return mn_cache.size(); }

}  // namespace snchar
