#pragma once

#include <cstddef>
#include <functional>
#include <unordered_map>
#include <vector>

#include "snchar/charvalues.hpp"
#include "snchar/ints.hpp"
#include "snchar/partition.hpp"

namespace snchar {

struct QueryRecord {
    Partition mu;
    Int value;
};

/// Adaptive query interface for an unknown character of S_n. Repeated
/// queries for the same cycle type are served from the log and do not
/// grow the counter: queries_made() is the number of distinct cycle
/// types seen. A single identification run drives one oracle from one
/// thread; oracles need not be shareable.
class CharacterOracle {
public:
    explicit CharacterOracle(int n);
    virtual ~CharacterOracle() = default;

    const Int& query(const Partition& mu);
    int n() const { return n_; }
    std::size_t queries_made() const { return log_.size(); }
    const std::vector<QueryRecord>& log() const { return log_; }

private:
    virtual Int evaluate(const Partition& mu) = 0;

    int n_;
    std::vector<QueryRecord> log_;
    std::unordered_map<Partition, std::size_t, PartitionHash> seen_;
};

/// Murnaghan-Nakayama-backed oracle for a single irreducible chi_lambda.
class MnOracle : public CharacterOracle {
public:
    explicit MnOracle(Partition lambda);

private:
    Int evaluate(const Partition& mu) override;
    Partition lambda_;
};

/// Pointwise sum of irreducibles: a reducible character for Corollary-path tests.
class SumOracle : public CharacterOracle {
public:
    SumOracle(int n, std::vector<Partition> lambdas);

private:
    Int evaluate(const Partition& mu) override;
    std::vector<Partition> lambdas_;
};

/// Wraps an arbitrary evaluator (covered-table adapter, wire protocol, callbacks).
class FunctionOracle : public CharacterOracle {
public:
    FunctionOracle(int n, std::function<Int(const Partition&)> fn);

private:
    Int evaluate(const Partition& mu) override;
    std::function<Int(const Partition&)> fn_;
};

/// Cycle type (nu_1, ..., nu_l, 1, 1, ..., 1) padded with 1's up to weight n.
Partition pad_with_ones(int n, const std::vector<int>& head);

/// Hook lengths h_1..h_k and leading values d_1..d_{k+1} recovered from the
/// oracle: d_1 = chi(1); h_u is found by scanning
/// chi([h_1,...,h_{u-1}, m]) for m = n_u, n_u - 1, ..., 1 until a nonzero
/// value appears, where n_1 = n and n_u = min(h_{u-1} - 2, n - h_1 - ... - h_{u-1});
/// the run stops once the h's sum to n or the last hook is <= 2. Every scan
/// terminates: its m = 1 probe repeats the previous padded cycle type, so
/// the logged nonzero value answers it. Throws NotACharacterError when
/// chi(1) <= 0.
struct HdResult {
    std::vector<int> hooks;  // h_1..h_k
    std::vector<Int> d;      // d_1..d_{k+1}
};
HdResult run_hd(CharacterOracle& oracle);

/// Diagonal content sums: c_i = binom(n - h_1 - ... - h_{i-1}, 2) *
/// chi([h_1,...,h_{i-1},2]) / d_i, with c_k = 0 when h_k = 1. Division must
/// be exact; a remainder proves the character reducible (exact = false, and
/// the c entries stop at the failure).
struct CResult {
    bool exact = true;
    std::vector<Int> c;
};
CResult run_c(CharacterOracle& oracle, const HdResult& hd);

/// Which binomial of the hook gap enters the arm recursion. `wide` is
/// binom(gap + 1, 2) and is the correct term; `narrow` is binom(gap, 2),
/// kept only so tests can pin down that it breaks the round trip.
enum class GapBinomial { wide, narrow };

struct CharSymbol {
    int k = 0;
    std::vector<int> hooks;
    std::vector<Int> d;
    std::vector<Int> c;
    std::vector<Int> arms, legs;
    bool valid = false;    // arms/legs strictly decreasing, nonnegative, weight == n
    long weight = 0;       // sum of arms_i + legs_i + 1

    FrobeniusSymbol frobenius() const;
};

/// Builds the symbol (a | b): a_k = (c_k + binom(h_k, 2)) / h_k, then the
/// descending recursion for a_i; b_i = h_i - a_i - 1. Any inexact division
/// marks the symbol invalid.
CharSymbol symbol_from_hc(int n, const std::vector<int>& hooks, const std::vector<Int>& c,
                          const std::vector<Int>& d, GapBinomial variant = GapBinomial::wide);

struct IdentifyOutcome {
    bool irreducible = false;  // symbol valid with weight n
    Partition partition;       // meaningful only when irreducible
    CharSymbol symbol;
    std::size_t queries = 0;
    std::vector<QueryRecord> log;
};

/// Full identification pipeline. The returned partition is guaranteed
/// correct when the oracle's character is irreducible; a reducible
/// character either trips the invalid-symbol path or may yield a
/// valid-looking wrong partition (the rejection test is one-directional).
IdentifyOutcome identify_character(CharacterOracle& oracle);

/// Closed-form bound on distinct queries: n - h_k + 3 when h_k >= 3, else n.
/// An upper bound, not an exact count: the min branch in the hook search can
/// shorten runs.
int query_upper_bound(int n, int last_hook);

}  // namespace snchar
