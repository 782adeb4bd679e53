#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snchar/charvalues.hpp"
#include "snchar/ints.hpp"
#include "snchar/partition.hpp"

namespace snchar {

/// splitmix64: 64-bit state advanced by a Weyl increment, output mixed.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

/// In-place Fisher-Yates driven by splitmix64.
void shuffle_indices(std::vector<int>& v, SplitMix64& rng);

/// A character table of S_n under hidden row/column permutations, revealed
/// one entry at a time. Entries come from a materialized canonical table
/// when n <= materialize_limit and are computed on demand otherwise.
/// Re-querying an uncovered entry is free: query_count() is the number of
/// distinct uncovered positions.
class CoveredTable {
public:
    CoveredTable(int n, std::uint64_t seed, int materialize_limit = kDefaultTableLimit);

    int n() const { return n_; }
    int size() const { return size_; }  // p_n
    const Int& query(int row, int col);
    bool is_uncovered(int row, int col) const;
    std::size_t query_count() const { return uncovered_.size(); }

    // Ground truth under the hidden permutations; for verification only,
    // never consulted by the solver.
    const Partition& true_row_label(int row) const { return parts_[row_perm_[row]]; }
    const Partition& true_col_label(int col) const { return parts_[col_perm_[col]]; }

private:
    Int value_at(int row, int col) const;

    int n_;
    int size_;
    std::vector<Partition> parts_;  // canonical order
    std::optional<CharTable> table_;
    std::vector<int> row_perm_, col_perm_;  // visible index -> canonical index
    std::unordered_map<std::uint64_t, Int> uncovered_;
};

struct StepCounts {
    std::size_t identity_column = 0;  // step 1
    std::size_t degree_rows = 0;      // step 2
    std::size_t basic_columns = 0;    // step 3
    std::size_t hook_rows = 0;        // step 4
    std::size_t order_rows = 0;       // step 5
    std::size_t classes = 0;
    std::size_t characters = 0;
};

struct GameResult {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<Partition> row_labels, col_labels;
    std::size_t uncovered_count = 0;
    std::size_t table_size = 0;  // p_n squared
    Rat fraction;                // uncovered_count / table_size
    StepCounts steps;
    bool brute_force = false;  // total uncovering used (n <= 5)
    bool ok = false;           // labels match the hidden permutations

    /// floor(n/2) p_n + 7 p_n + n + n p_n; the uncovering guarantee for n >= 7.
    static Int bound(int n);
};

/// Runs the five discovery steps on a covered table with n >= 7.
/// Step 1 uncovers whole rows top-down until one is non-linear; its unique
/// maximum marks the identity column. Step 2 uncovers that column and finds
/// the two rows of degree n-1. Step 3 scans one of them for the entries of
/// absolute value n-3, n-4 and (twice) n-5, fixing the columns of
/// (2,1,...), (3,1,...) and (2,2,1,...) and which degree-(n-1) row is which.
/// Step 4 collects the n rows satisfying chi(1) = 4 chi((123)) - 3 chi((12)(34)).
/// Step 5 orders them by the exact rational binom(n,2) chi(b)/chi(1).
/// Classes are then read off floor(n/2)-value prefixes and characters
/// identified row by row through a table-backed oracle.
class TableGameSolver {
public:
    explicit TableGameSolver(CoveredTable& table);

    int locate_identity_column();
    std::pair<int, int> locate_degree_rows();
    void locate_basic_columns();
    void locate_hook_rows();
    void order_hook_rows();
    std::vector<Partition> identify_classes();
    std::vector<Partition> identify_characters();

    const StepCounts& steps() const { return steps_; }
    const std::vector<Partition>& col_labels() const { return col_labels_; }
    const std::vector<Partition>& row_labels() const { return row_labels_; }

private:
    CoveredTable& t_;
    int n_, size_;
    StepCounts steps_;
    std::vector<Int> degrees_;       // column a, by row
    int a_ = -1, b_ = -1, c_ = -1, d_ = -1;
    int r_ = -1, s_ = -1;            // the two degree-(n-1) rows, r < s
    int xi1_row_ = -1, xin2_row_ = -1;
    std::vector<int> hook_rows_;     // unordered, then ordered i_0..i_{n-1}
    std::vector<Partition> col_labels_, row_labels_;
};

/// Full game: builds the covered table from the seed, identifies everything,
/// verifies against the hidden permutations and reports query accounting.
/// n = 4 and n = 6 are rejected (UnidentifiableError); n <= 5 falls back to
/// uncovering the whole table and matching it against the canonical one.
GameResult play_game(int n, std::uint64_t seed, int materialize_limit = kDefaultTableLimit);

}  // namespace snchar
