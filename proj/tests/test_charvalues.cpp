#include <doctest.h>

#include <thread>

#include "snchar/charvalues.hpp"
#include "snchar/partition.hpp"

using namespace snchar;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}  // namespace

TEST_CASE("murnaghan-nakayama base values") {
    CHECK(character_value(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(character_value(P({2, 1}), P({3})) == -1);
    CHECK(character_value(P({2, 1}), P({2, 1})) == 0);
    CHECK(character_value(P({4, 3, 1}), P({8})) == 0);
    CHECK(character_value(P({1}), P({1})) == 1);
    CHECK_THROWS_AS(character_value(P({2, 1}), P({2})), std::invalid_argument);
}

TEST_CASE("degrees by the hook-length formula") {
    CHECK(degree(P({4, 3, 1})) == 70);
    CHECK(degree(P({9})) == 1);
    CHECK(degree(P({2, 2})) == 2);
    CHECK(degree(P({2, 1})) == 2);
}

TEST_CASE("degree equals the value at the identity") {
    for (int n = 1; n <= 12; ++n) {
        Partition identity(std::vector<int>(n, 1));
        for (const Partition& lam : all_partitions(n))
            CHECK(degree(lam) == character_value(lam, identity));
    }
}

TEST_CASE("conjugating twists by the sign of the class") {
    for (int n = 1; n <= 12; ++n) {
        for (const Partition& lam : all_partitions(n)) {
            Partition lamc = conjugate(lam);
            for (const Partition& mu : all_partitions(n)) {
                int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
                CHECK(character_value(lam, mu) * sign == character_value(lamc, mu));
            }
        }
    }
}

TEST_CASE("first content sum from the transposition value") {
    // binom(n,2) chi((1 2)) = c_1(lambda) chi(1), with chi((1 2)) read as 0 at n = 1
    for (int n = 1; n <= 12; ++n) {
        for (const Partition& lam : all_partitions(n)) {
            Int lhs = 0;
            if (n >= 2) {
                std::vector<int> parts{2};
                parts.insert(parts.end(), n - 2, 1);
                lhs = binomial(n, 2) * character_value(lam, Partition(parts));
            }
            CHECK(lhs == principal_hook_data(lam).content_sums[0] * degree(lam));
        }
    }
}

TEST_CASE("xi values") {
    std::vector<Int> v = xi_values(4, P({2, 2}));
    CHECK(v == std::vector<Int>{1, -1, -1, 1});

    for (int n = 1; n <= 10; ++n) {
        std::vector<Int> cycle = xi_values(n, P({n}));
        std::vector<Int> identity = xi_values(n, Partition(std::vector<int>(n, 1)));
        for (int k = 0; k < n; ++k) {
            CHECK(cycle[k] == (k % 2 == 0 ? 1 : -1));
            CHECK(identity[k] == binomial(n - 1, k));
        }
    }
    CHECK_THROWS_AS(xi_values(5, P({2, 2})), std::invalid_argument);
}

TEST_CASE("xi values agree with the murnaghan-nakayama route") {
    for (int n = 1; n <= 12; ++n) {
        for (const Partition& nu : all_partitions(n)) {
            std::vector<Int> xi = xi_values(n, nu);
            for (int k = 0; k < n; ++k) {
                std::vector<int> hook{n - k};
                hook.insert(hook.end(), k, 1);
                CHECK(xi[k] == character_value(Partition(hook), nu));
            }
        }
    }
}

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order(P({1, 1, 1})) == 6);
    CHECK(centralizer_order(P({3})) == 3);
    CHECK(centralizer_order(P({2, 2})) == 8);
    CHECK(centralizer_order(Partition{}) == 1);
    // sum over classes of n!/z_mu is n!
    for (int n = 1; n <= 12; ++n) {
        Int total = 0;
        Int nf = factorial(n);
        for (const Partition& mu : all_partitions(n)) total += nf / centralizer_order(mu);
        CHECK(total == nf);
    }
}

TEST_CASE("character table basics") {
    CharTable t1 = character_table(1);
    CHECK(t1.values == std::vector<std::vector<Int>>{{1}});

    CharTable t3 = character_table(3);
    REQUIRE(t3.rows.size() == 3);
    int identity = t3.index_of_col(P({1, 1, 1}));
    REQUIRE(identity >= 0);
    CHECK(t3.values[0][identity] == 1);
    CHECK(t3.values[1][identity] == 2);
    CHECK(t3.values[2][identity] == 1);

    CharTable t4 = character_table(4);
    int row = t4.index_of_row(P({3, 1}));
    int col = t4.index_of_col(P({2, 2}));
    CHECK(t4.values[row][col] == -1);
    CHECK(t4.values[row][col] == xi_values(4, P({2, 2}))[1]);

    CHECK_THROWS_AS(character_table(17), std::domain_error);
    CHECK_THROWS_AS(character_table(17, 16), std::domain_error);
    CHECK(character_table(5, 5).n == 5);
}

TEST_CASE("the S_5 table matches the reference values") {
    // rows and columns in canonical order:
    // (5), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1), (1,1,1,1,1)
    const int expected[7][7] = {
        {1, 1, 1, 1, 1, 1, 1},       //
        {-1, 0, -1, 1, 0, 2, 4},     //
        {0, -1, 1, -1, 1, 1, 5},     //
        {1, 0, 0, 0, -2, 0, 6},      //
        {0, 1, -1, -1, 1, -1, 5},    //
        {-1, 0, 1, 1, 0, -2, 4},     //
        {1, -1, -1, 1, 1, -1, 1},    //
    };
    CharTable t = character_table(5);
    REQUIRE(t.rows.size() == 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(t.values[i][j] == expected[i][j]);
}

TEST_CASE("column orthogonality") {
    for (int n = 1; n <= 10; ++n) {
        CharTable t = character_table(n);
        for (std::size_t j = 0; j < t.cols.size(); ++j) {
            for (std::size_t j2 = j; j2 < t.cols.size(); ++j2) {
                Int sum = 0;
                for (std::size_t i = 0; i < t.rows.size(); ++i)
                    sum += t.values[i][j] * t.values[i][j2];
                CHECK(sum == (j == j2 ? centralizer_order(t.cols[j]) : Int(0)));
            }
        }
    }
}

TEST_CASE("memo cache reset keeps answers identical") {
    Int before = character_value(P({5, 4, 2, 1}), P({3, 3, 2, 2, 1, 1}));
    set_memo_budget(16);  // force constant resets
    Int after = character_value(P({5, 4, 2, 1}), P({3, 3, 2, 2, 1, 1}));
    set_memo_budget(4u << 20);
    CHECK(before == after);
}

TEST_CASE("concurrent evaluation returns identical values") {
    Partition lam = P({6, 4, 2});
    Partition mu = P({4, 3, 2, 2, 1});
    Int expected = character_value(lam, mu);
    std::vector<Int> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] { results[t] = character_value(lam, mu); });
    for (std::thread& t : pool) t.join();
    for (const Int& r : results) CHECK(r == expected);
}
