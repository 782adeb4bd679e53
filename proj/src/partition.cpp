#include "snchar/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "snchar/errors.hpp"

namespace snchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        int p = parts_[i];
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && p > prev) throw std::invalid_argument("partition parts must be weakly decreasing");
        prev = p;
        weight_ += p;
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty part in partition text");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad character in partition text");
            value = value * 10 + (c - '0');
            if (value > 1'000'000) throw std::invalid_argument("partition part out of range");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition{};
    std::vector<int> cols(lambda.parts()[0]);
    for (int j = 0; j < lambda.parts()[0]; ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j + 1) ++count;
        cols[j] = count;
    }
    return Partition(std::move(cols));
}

PrincipalHookData principal_hook_data(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("principal_hook_data: empty partition");
    Partition conj = conjugate(lambda);
    int k = 0;
    while (lambda.part(k + 1) >= k + 1) ++k;
    PrincipalHookData d;
    d.k = k;
    d.arms.resize(k);
    d.legs.resize(k);
    d.hooks.resize(k);
    d.content_sums.assign(k, 0);
    for (int i = 1; i <= k; ++i) {
        d.arms[i - 1] = lambda.part(i) - i;
        d.legs[i - 1] = conj.part(i) - i;
        d.hooks[i - 1] = d.arms[i - 1] + d.legs[i - 1] + 1;
    }
    // content of box (u, v) is v - u; it contributes to every diagonal i <= min(u, v)
    for (int u = 1; u <= lambda.length(); ++u) {
        for (int v = 1; v <= lambda.part(u); ++v) {
            int top = std::min({u, v, k});
            for (int i = 1; i <= top; ++i) d.content_sums[i - 1] += v - u;
        }
    }
    return d;
}

long hook_length(const Partition& lambda, int i, int j) {
    if (i < 1 || j < 1 || i > lambda.length() || j > lambda.part(i))
        throw std::invalid_argument("hook_length: box outside the diagram");
    Partition conj = conjugate(lambda);
    return lambda.part(i) - j + conj.part(j) - i + 1;
}

bool FrobeniusSymbol::valid() const { return violation().empty(); }

std::string FrobeniusSymbol::violation() const {
    if (arms.size() != legs.size()) return "arm and leg sequences differ in length";
    for (std::size_t i = 0; i < arms.size(); ++i) {
        if (arms[i] < 0) return "arms contain a negative entry";
        if (legs[i] < 0) return "legs contain a negative entry";
        if (i > 0 && arms[i] >= arms[i - 1]) return "arms not strictly decreasing";
        if (i > 0 && legs[i] >= legs[i - 1]) return "legs not strictly decreasing";
    }
    return "";
}

long FrobeniusSymbol::weight() const {
    long w = 0;
    for (std::size_t i = 0; i < arms.size(); ++i) w += arms[i] + legs[i] + 1;
    return w;
}

std::string FrobeniusSymbol::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < arms.size(); ++i) out << (i ? "," : "") << arms[i];
    out << '|';
    for (std::size_t i = 0; i < legs.size(); ++i) out << (i ? "," : "") << legs[i];
    out << ')';
    return out.str();
}

FrobeniusSymbol to_frobenius(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("to_frobenius: empty partition");
    PrincipalHookData d = principal_hook_data(lambda);
    return FrobeniusSymbol{d.arms, d.legs};
}

Partition from_frobenius(const FrobeniusSymbol& s) {
    std::string why = s.violation();
    if (!why.empty()) throw InvalidSymbolError("not a Frobenius symbol: " + why);
    int k = static_cast<int>(s.arms.size());
    std::vector<int> parts;
    for (int i = 1; i <= k; ++i) parts.push_back(static_cast<int>(s.arms[i - 1]) + i);
    // rows below the diagonal come from the leg lengths: row u > k has
    // lambda_u = #{ i : legs_i + i >= u }
    int max_row = k > 0 ? static_cast<int>(s.legs[0]) + 1 : 0;
    for (int u = k + 1; u <= max_row; ++u) {
        int count = 0;
        for (int i = 1; i <= k; ++i)
            if (s.legs[i - 1] + i >= u) ++count;
        if (count == 0) break;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: negative n");
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> parts{n};
    for (;;) {
        visit(Partition(parts));
        int ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty()) break;
        parts.back() -= 1;
        int x = parts.back();
        int rem = ones + 1;
        while (rem > x) {
            parts.push_back(x);
            rem -= x;
        }
        parts.push_back(rem);
    }
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Int partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: negative n");
    thread_local std::vector<Int> cache{Int(1)};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Int total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m) break;
            Int term = cache[m - g1];
            if (g2 <= m) term += cache[m - g2];
            if (k % 2 == 1)
                total += term;
            else
                total -= term;
        }
        cache.push_back(total);
    }
    return cache[n];
}

double asymptotic_count(int n) {
    // IEEE semantics at n = 0 (the leading term has n in the denominator).
    return std::exp(M_PI * std::sqrt(2.0 * n / 3.0)) / (4.0 * n * std::sqrt(3.0));
}

std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int length) {
    if (lambda.empty()) throw std::invalid_argument("rim_hooks: empty partition");
    if (length <= 0) throw std::invalid_argument("rim_hooks: length must be positive");
    const std::vector<int>& p = lambda.parts();
    int rows = static_cast<int>(p.size());
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = p[i] + (rows - 1 - i);

    std::vector<RimHookRemoval> out;
    for (int i = 0; i < rows; ++i) {
        int target = beta[i] - length;
        if (target < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                clash = true;
                break;
            }
            if (beta[j] < beta[i] && beta[j] > target) ++jumped;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> np;
        np.reserve(rows);
        for (int j = 0; j < rows; ++j) {
            int part = nb[j] - (rows - 1 - j);
            if (part > 0) np.push_back(part);
        }
        out.push_back(RimHookRemoval{Partition(std::move(np)), jumped});
    }
    return out;
}

}  // namespace snchar
