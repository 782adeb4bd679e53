#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "snchar/ints.hpp"

namespace snchar {

/// Integer partition: weakly decreasing positive parts. Doubles as a cycle
/// type. Immutable value type; row/column indices are 1-based throughout.
class Partition {
public:
    /// The empty partition (weight 0).
    Partition() = default;

    /// Throws std::invalid_argument unless parts are weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    /// Parses "4,3,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    /// "4,3,1"; empty string for the empty partition.
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition& other) const = default;
    /// Lexicographic on parts; canonical enumeration order is descending in this.
    auto operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int x : p.parts()) h = h * 0x100000001b3ull ^ static_cast<std::size_t>(x);
        return h;
    }
};

Partition conjugate(const Partition& lambda);

/// Arms, legs, hook lengths and content sums along the main diagonal.
/// hooks[i] = arms[i] + legs[i] + 1; hooks decrease with gaps >= 2 and sum to n.
struct PrincipalHookData {
    int k = 0;  // diagonal length
    std::vector<long> arms, legs, hooks, content_sums;
};

PrincipalHookData principal_hook_data(const Partition& lambda);

/// Hook length at box (i, j), 1-based. Throws if the box is outside the diagram.
long hook_length(const Partition& lambda, int i, int j);

/// Paired sequences (a | b); valid iff both strictly decrease and stay >= 0.
/// Deliberately constructible in an invalid state: reducible characters
/// produce such symbols and the caller inspects the flag.
struct FrobeniusSymbol {
    std::vector<long> arms, legs;

    bool valid() const;
    /// Names the violated condition, or "" when valid.
    std::string violation() const;
    long weight() const;  // sum of a_i + b_i + 1
    std::string to_string() const;  // "(3,1|2,0)"
    bool operator==(const FrobeniusSymbol&) const = default;
};

FrobeniusSymbol to_frobenius(const Partition& lambda);           // lambda nonempty
Partition from_frobenius(const FrobeniusSymbol& s);              // throws InvalidSymbolError

/// Visits all partitions of n in canonical order: reverse lexicographic,
/// largest part first ((4), (3,1), (2,2), (2,1,1), (1,1,1,1)).
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> all_partitions(int n);

/// p_n via Euler's pentagonal-number recurrence.
Int partition_count(int n);

/// Hardy-Ramanujan leading term exp(pi sqrt(2n/3)) / (4 n sqrt(3)).
double asymptotic_count(int n);

struct RimHookRemoval {
    Partition rest;
    int height = 0;  // rows spanned minus 1
};

/// All removals of a border strip of the given length, via the beta-set
/// encoding: subtract `length` from one first-column hook length when the
/// result is a fresh nonnegative value; height = beta numbers jumped over.
/// Ordered by starting row. Empty when no strip of that length exists.
std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int length);

}  // namespace snchar
