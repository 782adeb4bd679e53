#include "snchar/char_id.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "snchar/errors.hpp"

namespace snchar {

CharacterOracle::CharacterOracle(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("oracle: n must be positive");
}

const Int& CharacterOracle::query(const Partition& mu) {
    if (mu.weight() != n_) throw std::invalid_argument("oracle query: cycle type has wrong weight");
    if (auto it = seen_.find(mu); it != seen_.end()) return log_[it->second].value;
    log_.push_back(QueryRecord{mu, evaluate(mu)});
    seen_.emplace(mu, log_.size() - 1);
    return log_.back().value;
}

MnOracle::MnOracle(Partition lambda) : CharacterOracle(lambda.weight()), lambda_(std::move(lambda)) {}

Int MnOracle::evaluate(const Partition& mu) { return character_value(lambda_, mu); }

SumOracle::SumOracle(int n, std::vector<Partition> lambdas)
    : CharacterOracle(n), lambdas_(std::move(lambdas)) {
    for (const Partition& l : lambdas_)
        if (l.weight() != n) throw std::invalid_argument("sum oracle: summand of wrong weight");
}

Int SumOracle::evaluate(const Partition& mu) {
    Int total = 0;
    for (const Partition& l : lambdas_) total += character_value(l, mu);
    return total;
}

FunctionOracle::FunctionOracle(int n, std::function<Int(const Partition&)> fn)
    : CharacterOracle(n), fn_(std::move(fn)) {}

Int FunctionOracle::evaluate(const Partition& mu) { return fn_(mu); }

Partition pad_with_ones(int n, const std::vector<int>& head) {
    std::vector<int> parts = head;
    int sum = std::accumulate(head.begin(), head.end(), 0);
    if (sum > n) throw std::invalid_argument("pad_with_ones: head heavier than n");
    parts.insert(parts.end(), static_cast<std::size_t>(n - sum), 1);
    return Partition(std::move(parts));
}

HdResult run_hd(CharacterOracle& oracle) {
    const int n = oracle.n();
    HdResult r;
    const Int& deg = oracle.query(pad_with_ones(n, {}));
    if (deg <= 0) throw NotACharacterError("value at the identity is " + to_decimal(deg));
    r.d.push_back(deg);

    int used = 0;
    for (;;) {
        if (!r.hooks.empty() && (used == n || r.hooks.back() <= 2)) break;
        // search cap: the next hook is at least 2 shorter than the previous
        // one and cannot exceed the weight not yet accounted for
        int start = r.hooks.empty() ? n : std::min(r.hooks.back() - 2, n - used);
        bool found = false;
        for (int m = start; m >= 1; --m) {
            std::vector<int> head = r.hooks;
            head.push_back(m);
            const Int& v = oracle.query(pad_with_ones(n, head));
            if (v != 0) {
                r.hooks.push_back(m);
                r.d.push_back(v);
                used += m;
                found = true;
                break;
            }
        }
        // the m = 1 probe repeats the previous padded cycle type, whose
        // logged value is nonzero, so every scan terminates with a hit
        if (!found) throw std::logic_error("hook scan ended without a nonzero value");
    }
    return r;
}

CResult run_c(CharacterOracle& oracle, const HdResult& hd) {
    const int n = oracle.n();
    CResult r;
    int used = 0;
    for (std::size_t i = 0; i < hd.hooks.size(); ++i) {
        if (i + 1 == hd.hooks.size() && hd.hooks[i] == 1) {
            r.c.push_back(0);
            break;
        }
        std::vector<int> head(hd.hooks.begin(), hd.hooks.begin() + static_cast<long>(i));
        head.push_back(2);
        const Int& value = oracle.query(pad_with_ones(n, head));
        Int numerator = binomial(n - used, 2) * value;
        Int quotient, remainder;
        mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                    hd.d[i].get_mpz_t());
        if (remainder != 0) {
            r.exact = false;
            break;
        }
        r.c.push_back(quotient);
        used += hd.hooks[i];
    }
    return r;
}

namespace {

// Exact quotient; sets ok = false on a remainder.
Int exact_div(const Int& num, const Int& den, bool& ok) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) ok = false;
    return q;
}

}  // namespace

CharSymbol symbol_from_hc(int n, const std::vector<int>& hooks, const std::vector<Int>& c,
                          const std::vector<Int>& d, GapBinomial variant) {
    CharSymbol s;
    s.k = static_cast<int>(hooks.size());
    s.hooks = hooks;
    s.d = d;
    s.c = c;
    if (s.k == 0 || c.size() != hooks.size()) {
        s.valid = false;
        return s;
    }

    bool ok = true;
    std::vector<Int> a(hooks.size());
    int k = s.k;
    a[k - 1] = exact_div(c[k - 1] + choose2(hooks[k - 1]), hooks[k - 1], ok);
    for (int i = k - 2; i >= 0 && ok; --i) {
        Int gap = hooks[i] - hooks[i + 1];
        Int gap_term = (variant == GapBinomial::wide) ? choose2(gap + 1) : choose2(gap);
        Int bracket = c[i] - c[i + 1] - choose2(a[i + 1] + 1) + choose2(hooks[i + 1] - a[i + 1]) +
                      gap_term + (hooks[i + 1] - a[i + 1] - 1) * gap;
        a[i] = a[i + 1] + exact_div(bracket, hooks[i], ok);
    }
    if (!ok) {
        s.valid = false;
        return s;
    }

    s.arms = a;
    s.legs.resize(a.size());
    for (int i = 0; i < k; ++i) s.legs[i] = hooks[i] - a[i] - 1;
    for (int i = 0; i < k; ++i) s.weight += hooks[i];

    s.valid = s.weight == n;
    for (int i = 0; i < k && s.valid; ++i) {
        if (s.arms[i] < 0 || s.legs[i] < 0) s.valid = false;
        if (i > 0 && (s.arms[i] >= s.arms[i - 1] || s.legs[i] >= s.legs[i - 1])) s.valid = false;
    }
    return s;
}

FrobeniusSymbol CharSymbol::frobenius() const {
    FrobeniusSymbol f;
    for (const Int& v : arms) f.arms.push_back(v.get_si());
    for (const Int& v : legs) f.legs.push_back(v.get_si());
    return f;
}

IdentifyOutcome identify_character(CharacterOracle& oracle) {
    IdentifyOutcome out;
    HdResult hd = run_hd(oracle);
    CResult cr = run_c(oracle, hd);
    if (cr.exact && cr.c.size() == hd.hooks.size()) {
        out.symbol = symbol_from_hc(oracle.n(), hd.hooks, cr.c, hd.d);
    } else {
        out.symbol.k = static_cast<int>(hd.hooks.size());
        out.symbol.hooks = hd.hooks;
        out.symbol.d = hd.d;
        out.symbol.c = cr.c;
        out.symbol.valid = false;
    }
    if (out.symbol.valid) {
        out.irreducible = true;
        out.partition = from_frobenius(out.symbol.frobenius());
    }
    out.queries = oracle.queries_made();
    out.log = oracle.log();
    return out;
}

int query_upper_bound(int n, int last_hook) {
    if (last_hook < 1) throw std::invalid_argument("query_upper_bound: hook length must be positive");
    return last_hook >= 3 ? n - last_hook + 3 : n;
}

}  // namespace snchar
