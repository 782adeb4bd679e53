// snchar: exact S_n character tables, identification from queried values,
// and the covered-table game. See README.md for the full command reference.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snchar/char_id.hpp"
#include "snchar/charvalues.hpp"
#include "snchar/class_id.hpp"
#include "snchar/errors.hpp"
#include "snchar/partition.hpp"
#include "snchar/table_game.hpp"
#include "snchar/table_io.hpp"

using nlohmann::json;
using namespace snchar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitProtocol = 3;

json symbol_to_json(const CharSymbol& s) {
    json j;
    j["k"] = s.k;
    j["hooks"] = s.hooks;
    auto dump = [](const std::vector<Int>& v) {
        std::vector<std::string> out;
        for (const Int& x : v) out.push_back(to_decimal(x));
        return out;
    };
    j["d"] = dump(s.d);
    j["c"] = dump(s.c);
    j["arms"] = dump(s.arms);
    j["legs"] = dump(s.legs);
    j["valid"] = s.valid;
    j["weight"] = s.weight;
    return j;
}

json outcome_to_json(int n, const IdentifyOutcome& out) {
    json j;
    j["n"] = n;
    j["irreducible"] = out.irreducible;
    j["result"] = out.irreducible ? out.partition.to_string() : "NOT_IRREDUCIBLE";
    j["queries"] = out.queries;
    json log = json::array();
    for (const QueryRecord& rec : out.log)
        log.push_back({{"mu", rec.mu.to_string()}, {"value", to_decimal(rec.value)}});
    j["log"] = log;
    j["symbol"] = symbol_to_json(out.symbol);
    return j;
}

json game_to_json(const GameResult& g) {
    json steps;
    steps["identity_column"] = g.steps.identity_column;
    steps["degree_rows"] = g.steps.degree_rows;
    steps["basic_columns"] = g.steps.basic_columns;
    steps["hook_rows"] = g.steps.hook_rows;
    steps["order_rows"] = g.steps.order_rows;
    steps["classes"] = g.steps.classes;
    steps["characters"] = g.steps.characters;
    steps["brute_force"] = g.brute_force;
    json j;
    j["n"] = g.n;
    j["p_n"] = to_decimal(partition_count(g.n));
    j["seed"] = g.seed;
    j["uncovered"] = g.uncovered_count;
    j["bound"] = to_decimal(GameResult::bound(g.n));
    j["fraction"] = g.fraction.get_d();
    j["steps"] = steps;
    j["ok"] = g.ok;
    return j;
}

void report_identification(int n, const IdentifyOutcome& out, std::ostream& os) {
    os << "RESULT " << (out.irreducible ? out.partition.to_string() : "NOT_IRREDUCIBLE") << '\n';
    os << outcome_to_json(n, out).dump() << '\n';
    os.flush();
}

// Wire protocol: we print "Q <full cycle type>" and expect "A <integer>".
Int protocol_query(const Partition& mu) {
    std::cout << "Q " << mu.to_string() << '\n' << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) throw ProtocolError("peer closed the stream");
    if (line.size() < 3 || line[0] != 'A' || line[1] != ' ')
        throw ProtocolError("expected 'A <integer>', got '" + line + "'");
    try {
        return parse_decimal(line.substr(2));
    } catch (const std::invalid_argument&) {
        throw ProtocolError("reply is not an integer: '" + line + "'");
    }
}

std::vector<Partition> parse_sum(int n, const std::string& text) {
    std::vector<Partition> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        Partition p = Partition::parse(tok);
        if (p.weight() != n) throw std::invalid_argument("summand '" + tok + "' has weight != n");
        out.push_back(std::move(p));
    }
    if (out.empty()) throw std::invalid_argument("empty character sum");
    return out;
}

int cmd_identify_char(int n, const std::string& simulate, const std::string& simulate_sum,
                      const std::string& table_file, int row_index, bool external) {
    std::unique_ptr<CharacterOracle> oracle;
    CharTable loaded;
    if (!simulate.empty()) {
        Partition lambda = Partition::parse(simulate);
        if (lambda.weight() != n) throw std::invalid_argument("--simulate partition has weight != n");
        oracle = std::make_unique<MnOracle>(lambda);
    } else if (!simulate_sum.empty()) {
        oracle = std::make_unique<SumOracle>(n, parse_sum(n, simulate_sum));
    } else if (!table_file.empty()) {
        std::ifstream in(table_file);
        if (!in) throw std::invalid_argument("cannot open table file " + table_file);
        loaded = read_table_csv(in);
        if (loaded.n != n) throw std::invalid_argument("table file is for a different n");
        if (row_index < 1 || row_index > static_cast<int>(loaded.rows.size()))
            throw std::invalid_argument("--row-index out of range");
        oracle = std::make_unique<FunctionOracle>(n, [&loaded, row_index](const Partition& mu) {
            int j = loaded.index_of_col(mu);
            if (j < 0) throw std::runtime_error("table file lacks class " + mu.to_string());
            return loaded.values[row_index - 1][j];
        });
    } else if (external) {
        oracle = std::make_unique<FunctionOracle>(n, protocol_query);
    } else {
        throw std::invalid_argument(
            "choose an oracle: --simulate, --simulate-sum, --table-file or --oracle external");
    }

    IdentifyOutcome out = identify_character(*oracle);
    report_identification(n, out, std::cout);
    std::cerr << "queries: " << out.queries << '\n';
    return kExitOk;
}

int cmd_verify_sign_partitions(int max_n, int limit) {
    bool all_ok = true;
    for (int n = 1; n <= max_n; ++n) {
        CharTable t = character_table(n, limit);
        std::set<Partition> qualifying;
        for (std::size_t j = 0; j < t.cols.size(); ++j) {
            bool small = true;
            Int norm = 0;
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                const Int& v = t.values[i][j];
                if (v > 1 || v < -1) small = false;
                norm += v * v;
            }
            if (small && norm == n) qualifying.insert(t.cols[j]);
        }
        std::set<Partition> expected{Partition({n})};
        if (n == 2) expected.insert(Partition({1, 1}));
        if (n == 4) expected.insert(Partition({2, 1, 1}));
        if (n == 6) expected.insert(Partition({3, 2, 1}));
        if (qualifying == expected) {
            std::cout << "n=" << n << ": pass (" << qualifying.size() << " qualifying)\n";
        } else {
            all_ok = false;
            std::cout << "n=" << n << ": MISMATCH; qualifying = {";
            for (const Partition& p : qualifying) std::cout << " (" << p.to_string() << ")";
            std::cout << " }\n";
        }
    }
    return all_ok ? kExitOk : kExitVerifyFail;
}

// Non-hook irreducibles whose degree equals some binomial(n-1, k).
std::vector<Partition> hook_degree_collisions(int n) {
    std::set<Int> hook_degrees;
    for (int k = 0; k < n; ++k) hook_degrees.insert(binomial(n - 1, k));
    std::vector<Partition> collisions;
    for (const Partition& lam : all_partitions(n)) {
        bool is_hook = lam.length() <= 1 || lam.part(2) <= 1;
        if (!is_hook && hook_degrees.count(degree(lam))) collisions.push_back(lam);
    }
    return collisions;
}

int cmd_verify_hook_degrees(int max_n) {
    const std::set<int> known_exceptions{6, 12, 15, 24, 35};
    for (int n = 7; n <= max_n; ++n) {
        std::vector<Partition> collisions = hook_degree_collisions(n);
        if (known_exceptions.count(n)) {
            std::cout << "n=" << n << ": known exception, skipped ("
                      << collisions.size() << " colliding non-hooks";
            if (!collisions.empty()) std::cout << ", e.g. (" << collisions[0].to_string() << ")";
            std::cout << ")\n";
        } else if (collisions.empty()) {
            std::cout << "n=" << n << ": pass (hooks alone carry binomial degrees)\n";
        } else {
            std::cout << "n=" << n << ": NOTE new exception; colliding non-hooks:";
            for (const Partition& p : collisions) std::cout << " (" << p.to_string() << ")";
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify_orthogonality(int max_n, int limit) {
    bool all_ok = true;
    for (int n = 1; n <= max_n; ++n) {
        CharTable t = character_table(n, limit);
        bool ok = true;
        for (std::size_t j = 0; j < t.cols.size() && ok; ++j) {
            for (std::size_t j2 = j; j2 < t.cols.size() && ok; ++j2) {
                Int sum = 0;
                for (std::size_t i = 0; i < t.rows.size(); ++i) sum += t.values[i][j] * t.values[i][j2];
                Int want = j == j2 ? centralizer_order(t.cols[j]) : Int(0);
                if (sum != want) {
                    all_ok = ok = false;
                    std::cout << "n=" << n << ": MISMATCH at columns (" << t.cols[j].to_string()
                              << "), (" << t.cols[j2].to_string() << "): " << to_decimal(sum)
                              << " != " << to_decimal(want) << '\n';
                }
            }
        }
        if (ok) std::cout << "n=" << n << ": pass\n";
    }
    return all_ok ? kExitOk : kExitVerifyFail;
}

void print_game_report(const GameResult& g, std::ostream& os) {
    Int pn = partition_count(g.n);
    os << "n=" << g.n << " p_n=" << to_decimal(pn) << " seed=" << g.seed << '\n';
    if (g.brute_force) {
        os << "small table: uncovered everything and matched directly\n";
    } else {
        os << "steps: identity_column=" << g.steps.identity_column
           << " degree_rows=" << g.steps.degree_rows << " basic_columns=" << g.steps.basic_columns
           << " hook_rows=" << g.steps.hook_rows << " order_rows=" << g.steps.order_rows
           << " classes=" << g.steps.classes << " characters=" << g.steps.characters << '\n';
    }
    os << "uncovered " << g.uncovered_count << " of " << g.table_size
       << " entries (fraction " << g.fraction.get_d() << "), bound "
       << to_decimal(GameResult::bound(g.n)) << '\n';
    os << "ok: " << (g.ok ? "yes" : "NO") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact S_n character computations and identification games"};
    app.require_subcommand(1);

    std::string lambda_text, mu_text, nu_text, xi_text;
    std::string csv_path, json_path, table_file, simulate, simulate_sum, oracle_mode;
    int n = 0, max_n = 0, limit = kDefaultTableLimit, row_index = 0;
    int n_from = 7, n_to = 10, seeds = 1;
    std::uint64_t seed = 1;

    auto* eval = app.add_subcommand("eval", "Exact character value chi_lambda(mu)");
    eval->add_option("--lambda", lambda_text, "character label")->required();
    eval->add_option("--mu", mu_text, "cycle type")->required();

    auto* deg = app.add_subcommand("degree", "Degree chi_lambda(1) by the hook-length formula");
    deg->add_option("--lambda", lambda_text)->required();

    auto* xi = app.add_subcommand("xi", "Hook-character values xi_{n,0..n-1} on a class");
    xi->add_option("--n", n)->required();
    xi->add_option("--nu", nu_text, "cycle type")->required();

    auto* table = app.add_subcommand("table", "Full character table (CSV to stdout by default)");
    table->add_option("--n", n)->required();
    table->add_option("--csv", csv_path, "write CSV here");
    table->add_option("--json", json_path, "write JSON here");
    table->add_option("--limit", limit, "table size guard");

    auto* idc = app.add_subcommand("identify-char", "Identify a character from queried values");
    idc->add_option("--n", n)->required();
    auto* opt_sim = idc->add_option("--simulate", simulate, "exact oracle for chi_lambda");
    auto* opt_sum = idc->add_option("--simulate-sum", simulate_sum, "reducible oracle, e.g. 2,1+3");
    auto* opt_tab = idc->add_option("--table-file", table_file, "CSV table as the oracle");
    idc->add_option("--row-index", row_index, "1-based data row in --table-file");
    auto* opt_ext = idc->add_option("--oracle", oracle_mode,
                                    "'external' for the line protocol on stdin/stdout");
    opt_sim->excludes(opt_sum)->excludes(opt_tab)->excludes(opt_ext);
    opt_sum->excludes(opt_tab)->excludes(opt_ext);
    opt_tab->excludes(opt_ext);

    auto* idk = app.add_subcommand("identify-class", "Recover a cycle type from xi values");
    idk->add_option("--n", n)->required();
    idk->add_option("--xi", xi_text, "comma-separated, sign character first")->required();

    auto* game = app.add_subcommand("table-game", "Play the covered character table game");
    game->add_option("--n", n)->required();
    game->add_option("--seed", seed);
    game->add_option("--json", json_path, "write a JSON report here");
    game->add_option("--limit", limit, "materialize tables up to this n");

    auto* stats = app.add_subcommand("stats", "Game statistics over a range of n and seeds");
    stats->add_option("--n-from", n_from)->required();
    stats->add_option("--n-to", n_to)->required();
    stats->add_option("--seeds", seeds, "seeds 1..K per n");
    stats->add_option("--csv", csv_path, "write CSV here (stdout by default)");
    stats->add_option("--limit", limit, "materialize tables up to this n");

    auto* verify = app.add_subcommand("verify", "Check auxiliary identities on small tables");
    verify->require_subcommand(1);
    auto* vsign = verify->add_subcommand("sign-partitions", "classes with all values in {0,1,-1} and norm n");
    vsign->add_option("--max-n", max_n)->required();
    auto* vhook = verify->add_subcommand("hook-degrees", "hooks as the only binomial-degree irreducibles");
    vhook->add_option("--max-n", max_n)->required();
    auto* vorth = verify->add_subcommand("orthogonality", "column orthogonality against centralizer orders");
    vorth->add_option("--max-n", max_n)->required();
    verify->add_option("--limit", limit, "table size guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) {
            Partition lambda = Partition::parse(lambda_text);
            Partition mu = Partition::parse(mu_text);
            std::cout << to_decimal(character_value(lambda, mu)) << '\n';
        } else if (*deg) {
            std::cout << to_decimal(degree(Partition::parse(lambda_text))) << '\n';
        } else if (*xi) {
            std::vector<Int> values = xi_values(n, Partition::parse(nu_text));
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << (i ? "," : "") << to_decimal(values[i]);
            std::cout << '\n';
        } else if (*table) {
            CharTable t = character_table(n, limit);
            if (!json_path.empty()) {
                json j;
                j["n"] = t.n;
                j["rows"] = json::array();
                j["cols"] = json::array();
                for (const Partition& p : t.rows) j["rows"].push_back(p.to_string());
                for (const Partition& p : t.cols) j["cols"].push_back(p.to_string());
                j["values"] = json::array();
                for (const auto& row : t.values) {
                    json r = json::array();
                    for (const Int& v : row) r.push_back(to_decimal(v));
                    j["values"].push_back(r);
                }
                std::ofstream out(json_path);
                out << j.dump(2) << '\n';
            }
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                write_table_csv(out, t);
            }
            if (csv_path.empty() && json_path.empty()) write_table_csv(std::cout, t);
        } else if (*idc) {
            if (!oracle_mode.empty() && oracle_mode != "external")
                throw std::invalid_argument("unknown oracle mode '" + oracle_mode + "'");
            return cmd_identify_char(n, simulate, simulate_sum, table_file, row_index,
                                     oracle_mode == "external");
        } else if (*idk) {
            XiPrefix prefix;
            prefix.n = n;
            std::stringstream ss(xi_text);
            std::string tok;
            while (std::getline(ss, tok, ',')) prefix.values.push_back(parse_decimal(tok));
            Partition nu;
            try {
                nu = class_from_xi_prefix(prefix);
            } catch (const NotAClassError& e) {
                std::cerr << "not a class: " << e.what() << '\n';
                return kExitVerifyFail;
            }
            std::cout << nu.to_string() << '\n';
            json j;
            j["n"] = n;
            j["xi"] = json::array();
            for (const Int& v : prefix.values) j["xi"].push_back(to_decimal(v));
            j["class"] = nu.to_string();
            std::cout << j.dump() << '\n';
        } else if (*game) {
            GameResult g = play_game(n, seed, limit);
            print_game_report(g, std::cout);
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                out << game_to_json(g).dump(2) << '\n';
            }
            if (!g.ok) return kExitVerifyFail;
        } else if (*stats) {
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!csv_path.empty()) {
                file.open(csv_path);
                out = &file;
            }
            *out << "n,p_n,uncovered,bound,fraction,seed\n";
            for (int m = n_from; m <= n_to; ++m) {
                if (m == 4 || m == 6) {
                    std::cerr << "skipping n=" << m << " (identification impossible)\n";
                    continue;
                }
                for (int s = 1; s <= seeds; ++s) {
                    GameResult g = play_game(m, static_cast<std::uint64_t>(s), limit);
                    if (!g.ok) throw CorruptTableError("game self-check failed");
                    *out << m << ',' << to_decimal(partition_count(m)) << ',' << g.uncovered_count
                         << ',' << to_decimal(GameResult::bound(m)) << ',' << g.fraction.get_d()
                         << ',' << s << '\n';
                }
            }
        } else if (*vsign) {
            return cmd_verify_sign_partitions(max_n, limit);
        } else if (*vhook) {
            return cmd_verify_hook_degrees(max_n);
        } else if (*vorth) {
            return cmd_verify_orthogonality(max_n, limit);
        }
    } catch (const ProtocolError& e) {
        std::cerr << "protocol error: " << e.what() << '\n';
        return kExitProtocol;
    } catch (const UnidentifiableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CorruptTableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
