#include "snchar/table_game.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "snchar/char_id.hpp"
#include "snchar/class_id.hpp"
#include "snchar/errors.hpp"

namespace snchar {

void shuffle_indices(std::vector<int>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.next() % i]);
}

CoveredTable::CoveredTable(int n, std::uint64_t seed, int materialize_limit) : n_(n) {
    if (n < 1) throw std::invalid_argument("covered table: n must be positive");
    parts_ = all_partitions(n);
    size_ = static_cast<int>(parts_.size());
    if (n <= materialize_limit) table_ = character_table(n, materialize_limit);
    row_perm_.resize(size_);
    col_perm_.resize(size_);
    std::iota(row_perm_.begin(), row_perm_.end(), 0);
    std::iota(col_perm_.begin(), col_perm_.end(), 0);
    SplitMix64 rng(seed);
    shuffle_indices(row_perm_, rng);
    shuffle_indices(col_perm_, rng);
}

Int CoveredTable::value_at(int row, int col) const {
    if (table_) return table_->values[row_perm_[row]][col_perm_[col]];
    return character_value(parts_[row_perm_[row]], parts_[col_perm_[col]]);
}

const Int& CoveredTable::query(int row, int col) {
    if (row < 0 || col < 0 || row >= size_ || col >= size_)
        throw std::out_of_range("covered table: position outside the table");
    std::uint64_t key = static_cast<std::uint64_t>(row) * size_ + col;
    auto it = uncovered_.find(key);
    if (it == uncovered_.end()) it = uncovered_.emplace(key, value_at(row, col)).first;
    return it->second;
}

bool CoveredTable::is_uncovered(int row, int col) const {
    return uncovered_.count(static_cast<std::uint64_t>(row) * size_ + col) != 0;
}

Int GameResult::bound(int n) {
    Int p = partition_count(n);
    return (n / 2) * p + 7 * p + n + n * p;
}

TableGameSolver::TableGameSolver(CoveredTable& table)
    : t_(table), n_(table.n()), size_(table.size()) {
    if (n_ < 7) throw std::invalid_argument("table game solver requires n >= 7");
}

int TableGameSolver::locate_identity_column() {
    std::size_t before = t_.query_count();
    for (int i = 0; i < size_; ++i) {
        bool nonlinear = false;
        for (int j = 0; j < size_; ++j) {
            const Int& v = t_.query(i, j);
            if (v != 1 && v != -1) nonlinear = true;
        }
        if (!nonlinear) continue;
        int best = 0;
        for (int j = 1; j < size_; ++j)
            if (t_.query(i, j) > t_.query(i, best)) best = j;
        for (int j = 0; j < size_; ++j)
            if (j != best && t_.query(i, j) == t_.query(i, best))
                throw CorruptTableError("maximum of a non-linear row is not unique");
        a_ = best;
        steps_.identity_column = t_.query_count() - before;
        return a_;
    }
    throw CorruptTableError("every row looks linear");
}

std::pair<int, int> TableGameSolver::locate_degree_rows() {
    std::size_t before = t_.query_count();
    degrees_.clear();
    degrees_.reserve(size_);
    std::vector<int> found;
    for (int i = 0; i < size_; ++i) {
        degrees_.push_back(t_.query(i, a_));
        if (degrees_.back() == n_ - 1) found.push_back(i);
    }
    if (found.size() != 2)
        throw CorruptTableError("expected exactly two rows of degree n-1, saw " +
                                std::to_string(found.size()));
    r_ = found[0];
    s_ = found[1];
    steps_.degree_rows = t_.query_count() - before;
    return {r_, s_};
}

void TableGameSolver::locate_basic_columns() {
    std::size_t before = t_.query_count();
    int j1 = -1, j2 = -1, j3 = -1, j4 = -1;
    for (int j = 0; j < size_ && (j1 < 0 || j2 < 0 || j4 < 0); ++j) {
        const Int& v = t_.query(r_, j);
        Int av = abs(v);
        if (av == n_ - 3 && j1 < 0)
            j1 = j;
        else if (av == n_ - 4 && j2 < 0)
            j2 = j;
        else if (av == n_ - 5) {
            if (j3 < 0)
                j3 = j;
            else if (j4 < 0)
                j4 = j;
        }
    }
    if (j1 < 0 || j2 < 0 || j4 < 0)
        throw CorruptTableError("row of degree n-1 lacks the expected absolute values");
    b_ = j1;
    c_ = j2;
    xi1_row_ = t_.query(r_, j1) > 0 ? r_ : s_;
    xin2_row_ = xi1_row_ == r_ ? s_ : r_;
    // the two |n-5| columns are told apart by the sign in the xi_{n-2} row;
    // when that row is s this costs one extra uncover
    d_ = t_.query(xin2_row_, j3) > 0 ? j3 : j4;
    steps_.basic_columns = t_.query_count() - before;
}

void TableGameSolver::locate_hook_rows() {
    std::size_t before = t_.query_count();
    hook_rows_.clear();
    for (int i = 0; i < size_ && static_cast<int>(hook_rows_.size()) < n_; ++i) {
        if (i == r_ || i == s_) {
            hook_rows_.push_back(i);  // already known to be xi_1 and xi_{n-2}
            continue;
        }
        const Int& va = t_.query(i, a_);
        const Int& vc = t_.query(i, c_);
        const Int& vd = t_.query(i, d_);
        if (va == 4 * vc - 3 * vd) hook_rows_.push_back(i);
    }
    if (static_cast<int>(hook_rows_.size()) != n_)
        throw CorruptTableError("found " + std::to_string(hook_rows_.size()) +
                                " hook rows instead of n");
    steps_.hook_rows = t_.query_count() - before;
}

void TableGameSolver::order_hook_rows() {
    std::size_t before = t_.query_count();
    std::vector<std::pair<Rat, int>> keyed;
    keyed.reserve(hook_rows_.size());
    for (int i : hook_rows_) {
        Int vb;
        if (i == xi1_row_ && !t_.is_uncovered(i, b_))
            vb = n_ - 3;  // value at (2,1,...,1) follows from the fixed-point formula
        else if (i == xin2_row_ && !t_.is_uncovered(i, b_))
            vb = -(n_ - 3);
        else
            vb = t_.query(i, b_);
        Rat f(binomial(n_, 2) * vb);
        f /= Rat(degrees_[i]);
        keyed.emplace_back(f, i);
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (std::size_t j = 1; j < keyed.size(); ++j)
        if (keyed[j].first == keyed[j - 1].first)
            throw CorruptTableError("tie in the content-sum ordering of hook rows");
    std::vector<int> ordered;
    ordered.reserve(keyed.size());
    for (const auto& [f, i] : keyed) ordered.push_back(i);
    hook_rows_ = std::move(ordered);  // now i_0, i_1, ..., i_{n-1}
    steps_.order_rows = t_.query_count() - before;
}

std::vector<Partition> TableGameSolver::identify_classes() {
    std::size_t before = t_.query_count();
    const int m = n_ / 2;
    col_labels_.assign(size_, Partition{});
    std::set<Partition> seen;
    for (int j = 0; j < size_; ++j) {
        XiPrefix prefix;
        prefix.n = n_;
        for (int u = 1; u <= m; ++u) prefix.values.push_back(t_.query(hook_rows_[n_ - u], j));
        try {
            col_labels_[j] = class_from_xi_prefix(prefix);
        } catch (const NotAClassError& e) {
            throw CorruptTableError(std::string("column ") + std::to_string(j) +
                                    " does not describe a class: " + e.what());
        }
        if (!seen.insert(col_labels_[j]).second)
            throw CorruptTableError("two columns received the same class label");
    }
    steps_.classes = t_.query_count() - before;
    return col_labels_;
}

std::vector<Partition> TableGameSolver::identify_characters() {
    std::size_t before = t_.query_count();
    std::unordered_map<Partition, int, PartitionHash> col_of;
    for (int j = 0; j < size_; ++j) col_of.emplace(col_labels_[j], j);
    row_labels_.assign(size_, Partition{});
    std::set<Partition> seen;
    for (int i = 0; i < size_; ++i) {
        FunctionOracle oracle(n_, [this, i, &col_of](const Partition& mu) {
            return t_.query(i, col_of.at(mu));
        });
        IdentifyOutcome out = identify_character(oracle);
        if (!out.irreducible)
            throw CorruptTableError("row " + std::to_string(i) + " is not irreducible");
        row_labels_[i] = out.partition;
        if (!seen.insert(out.partition).second)
            throw CorruptTableError("two rows received the same character label");
    }
    steps_.characters = t_.query_count() - before;
    return row_labels_;
}

namespace {

// Small-n fallback: uncover everything and match against the canonical table.
void solve_by_total_uncovering(CoveredTable& t, std::vector<Partition>& row_labels,
                               std::vector<Partition>& col_labels) {
    const int size = t.size();
    CharTable canon = character_table(t.n());
    std::map<std::vector<Int>, int> canon_row_of;
    for (int i = 0; i < size; ++i) canon_row_of.emplace(canon.values[i], i);

    std::vector<std::vector<Int>> grid(size, std::vector<Int>(size));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) grid[i][j] = t.query(i, j);

    std::vector<int> sigma(size);  // visible column -> canonical column
    std::iota(sigma.begin(), sigma.end(), 0);
    int matches = 0;
    std::vector<int> best_sigma, best_rows;
    do {
        std::vector<int> rows(size, -1);
        std::vector<bool> used(size, false);
        bool ok = true;
        for (int i = 0; i < size && ok; ++i) {
            std::vector<Int> in_canon_order(size);
            for (int j = 0; j < size; ++j) in_canon_order[sigma[j]] = grid[i][j];
            auto it = canon_row_of.find(in_canon_order);
            if (it == canon_row_of.end() || used[it->second])
                ok = false;
            else {
                rows[i] = it->second;
                used[it->second] = true;
            }
        }
        if (ok) {
            ++matches;
            best_sigma = sigma;
            best_rows = rows;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    if (matches != 1)
        throw CorruptTableError("total uncovering matched " + std::to_string(matches) +
                                " label assignments");
    row_labels.resize(size);
    col_labels.resize(size);
    for (int i = 0; i < size; ++i) row_labels[i] = canon.rows[best_rows[i]];
    for (int j = 0; j < size; ++j) col_labels[j] = canon.cols[best_sigma[j]];
}

}  // namespace

GameResult play_game(int n, std::uint64_t seed, int materialize_limit) {
    if (n == 4 || n == 6)
        throw UnidentifiableError("the S_" + std::to_string(n) +
                                  " table admits label-preserving symmetries; "
                                  "identification is impossible");
    if (n < 1) throw std::invalid_argument("play_game: n must be positive");

    CoveredTable table(n, seed, materialize_limit);
    GameResult result;
    result.n = n;
    result.seed = seed;
    result.table_size = static_cast<std::size_t>(table.size()) * table.size();

    if (n <= 5) {
        result.brute_force = true;
        solve_by_total_uncovering(table, result.row_labels, result.col_labels);
    } else {
        TableGameSolver solver(table);
        solver.locate_identity_column();
        solver.locate_degree_rows();
        solver.locate_basic_columns();
        solver.locate_hook_rows();
        solver.order_hook_rows();
        solver.identify_classes();
        result.row_labels = solver.identify_characters();
        result.col_labels = solver.col_labels();
        result.steps = solver.steps();
    }

    result.uncovered_count = table.query_count();
    result.fraction = Rat(static_cast<unsigned long>(result.uncovered_count),
                          static_cast<unsigned long>(result.table_size));
    result.fraction.canonicalize();

    result.ok = true;
    for (int i = 0; i < table.size(); ++i) {
        if (result.row_labels[i] != table.true_row_label(i)) result.ok = false;
        if (result.col_labels[i] != table.true_col_label(i)) result.ok = false;
    }
    return result;
}

}  // namespace snchar
