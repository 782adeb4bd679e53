#pragma once

#include <cstddef>
#include <vector>

#include "snchar/ints.hpp"
#include "snchar/partition.hpp"

namespace snchar {

/// Exact value chi_lambda(mu) by the Murnaghan-Nakayama rule, recursing on
/// the largest remaining part of mu over all rim-hook removals with sign
/// (-1)^height. Memoized on (lambda, remaining cycle type); the cache is
/// thread-local, so concurrent calls from different threads are safe and
/// return identical results. Throws std::invalid_argument on weight mismatch.
Int character_value(const Partition& lambda, const Partition& mu);

/// chi_lambda(1) by the hook-length formula: n! over the product of all hook lengths.
Int degree(const Partition& lambda);

/// Values of the hook characters chi_(n-k,1,...,1) on class nu, k = 0..n-1,
/// read off the exact expansion of prod_k (X^{nu_k} - 1) divided by (X - 1):
/// the coefficient of X^(n-1-k) carries xi_{n,k} with sign (-1)^k.
std::vector<Int> xi_values(int n, const Partition& nu);

/// prod_j j^{m_j} m_j! over part multiplicities; equals n! / class size.
Int centralizer_order(const Partition& mu);

inline constexpr int kDefaultTableLimit = 16;

/// Full character table in canonical (reverse-lexicographic) row and column order.
struct CharTable {
    int n = 0;
    std::vector<Partition> rows;  // character labels
    std::vector<Partition> cols;  // class labels
    std::vector<std::vector<Int>> values;

    int index_of_row(const Partition& p) const;
    int index_of_col(const Partition& p) const;
};

/// Computes the p_n x p_n table by character_value. The limit is a cost
/// guard; n above it throws std::domain_error.
CharTable character_table(int n, int limit = kDefaultTableLimit);

/// Bounds the thread-local memo cache; on overflow the whole cache resets.
void set_memo_budget(std::size_t max_entries);
std::size_t memo_size();

}  // namespace snchar
