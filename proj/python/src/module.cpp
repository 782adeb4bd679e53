#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "snchar/char_id.hpp"
#include "snchar/charvalues.hpp"
#include "snchar/class_id.hpp"
#include "snchar/errors.hpp"
#include "snchar/partition.hpp"
#include "snchar/table_game.hpp"

namespace py = pybind11;
using namespace snchar;

namespace {

// Exact values cross the boundary as Python ints, via decimal strings.
py::object int_to_py(const Int& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int py_to_int(py::handle h) { return Int(py::str(h).cast<std::string>()); }

py::list ints_to_py(const std::vector<Int>& v) {
    py::list out;
    for (const Int& x : v) out.append(int_to_py(x));
    return out;
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::tuple from_partition(const Partition& p) {
    py::tuple t(p.length());
    for (int i = 0; i < p.length(); ++i) t[i] = p.parts()[i];
    return t;
}

py::dict outcome_to_dict(int n, const IdentifyOutcome& out) {
    py::dict d;
    d["n"] = n;
    d["irreducible"] = out.irreducible;
    d["partition"] = out.irreducible ? py::object(from_partition(out.partition)) : py::none();
    d["queries"] = out.queries;
    py::list log;
    for (const QueryRecord& rec : out.log)
        log.append(py::make_tuple(from_partition(rec.mu), int_to_py(rec.value)));
    d["log"] = log;
    py::dict sym;
    sym["k"] = out.symbol.k;
    sym["hooks"] = out.symbol.hooks;
    sym["d"] = ints_to_py(out.symbol.d);
    sym["c"] = ints_to_py(out.symbol.c);
    sym["arms"] = ints_to_py(out.symbol.arms);
    sym["legs"] = ints_to_py(out.symbol.legs);
    sym["valid"] = out.symbol.valid;
    sym["weight"] = out.symbol.weight;
    d["symbol"] = sym;
    return d;
}

py::dict game_to_dict(const GameResult& g) {
    py::dict d;
    d["n"] = g.n;
    d["seed"] = g.seed;
    d["uncovered"] = g.uncovered_count;
    d["table_size"] = g.table_size;
    d["bound"] = int_to_py(GameResult::bound(g.n));
    d["fraction"] = g.fraction.get_d();
    d["ok"] = g.ok;
    d["brute_force"] = g.brute_force;
    py::list rows, cols;
    for (const Partition& p : g.row_labels) rows.append(from_partition(p));
    for (const Partition& p : g.col_labels) cols.append(from_partition(p));
    d["row_labels"] = rows;
    d["col_labels"] = cols;
    py::dict steps;
    steps["identity_column"] = g.steps.identity_column;
    steps["degree_rows"] = g.steps.degree_rows;
    steps["basic_columns"] = g.steps.basic_columns;
    steps["hook_rows"] = g.steps.hook_rows;
    steps["order_rows"] = g.steps.order_rows;
    steps["classes"] = g.steps.classes;
    steps["characters"] = g.steps.characters;
    d["steps"] = steps;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact S_n character values, tables and identification algorithms";

    py::register_exception<InvalidSymbolError>(m, "InvalidSymbolError", PyExc_ValueError);
    py::register_exception<NotACharacterError>(m, "NotACharacterError", PyExc_ValueError);
    py::register_exception<NotAClassError>(m, "NotAClassError", PyExc_ValueError);
    py::register_exception<CorruptTableError>(m, "CorruptTableError", PyExc_ValueError);
    py::register_exception<UnidentifiableError>(m, "UnidentifiableError", PyExc_ValueError);

    m.def("conjugate", [](const std::vector<int>& p) { return from_partition(conjugate(to_partition(p))); });

    m.def("principal_hook_data", [](const std::vector<int>& p) {
        PrincipalHookData d = principal_hook_data(to_partition(p));
        py::dict out;
        out["k"] = d.k;
        out["arms"] = d.arms;
        out["legs"] = d.legs;
        out["hooks"] = d.hooks;
        out["content_sums"] = d.content_sums;
        return out;
    });

    m.def("hook_length", [](const std::vector<int>& p, int i, int j) {
        return hook_length(to_partition(p), i, j);
    }, py::arg("partition"), py::arg("i"), py::arg("j"));

    m.def("to_frobenius", [](const std::vector<int>& p) {
        FrobeniusSymbol s = to_frobenius(to_partition(p));
        return py::make_tuple(s.arms, s.legs);
    });

    m.def("from_frobenius", [](const std::vector<long>& arms, const std::vector<long>& legs) {
        return from_partition(from_frobenius(FrobeniusSymbol{arms, legs}));
    });

    m.def("partitions", [](int n) {
        py::list out;
        for_each_partition(n, [&](const Partition& p) { out.append(from_partition(p)); });
        return out;
    }, "All partitions of n in canonical (reverse lexicographic) order");

    m.def("partition_count", [](int n) { return int_to_py(partition_count(n)); });
    m.def("asymptotic_count", &asymptotic_count);

    m.def("rim_hooks", [](const std::vector<int>& p, int length) {
        py::list out;
        for (const RimHookRemoval& r : rim_hooks(to_partition(p), length))
            out.append(py::make_tuple(from_partition(r.rest), r.height));
        return out;
    });

    m.def("character_value", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return int_to_py(character_value(to_partition(lam), to_partition(mu)));
    });

    m.def("degree", [](const std::vector<int>& lam) { return int_to_py(degree(to_partition(lam))); });

    m.def("xi_values", [](int n, const std::vector<int>& nu) {
        return ints_to_py(xi_values(n, to_partition(nu)));
    });

    m.def("centralizer_order", [](const std::vector<int>& mu) {
        return int_to_py(centralizer_order(to_partition(mu)));
    });

    m.def("character_table", [](int n, int limit) {
        CharTable t = character_table(n, limit);
        py::dict out;
        py::list rows, cols, values;
        for (const Partition& p : t.rows) rows.append(from_partition(p));
        for (const Partition& p : t.cols) cols.append(from_partition(p));
        for (const auto& row : t.values) values.append(ints_to_py(row));
        out["n"] = t.n;
        out["rows"] = rows;
        out["cols"] = cols;
        out["values"] = values;
        return out;
    }, py::arg("n"), py::arg("limit") = kDefaultTableLimit);

    m.def("identify_character", [](int n, const py::function& fn) {
        FunctionOracle oracle(n, [&fn](const Partition& mu) {
            return py_to_int(fn(from_partition(mu)));
        });
        return outcome_to_dict(n, identify_character(oracle));
    }, py::arg("n"), py::arg("query"),
       "Identify a character through an adaptive query callback");

    m.def("identify_character_of", [](const std::vector<int>& lam) {
        MnOracle oracle{to_partition(lam)};
        return outcome_to_dict(oracle.n(), identify_character(oracle));
    }, "Identify from an exact oracle for chi_lambda (round-trip helper)");

    m.def("identify_character_sum", [](int n, const std::vector<std::vector<int>>& lams) {
        std::vector<Partition> parts;
        for (const auto& l : lams) parts.push_back(to_partition(l));
        SumOracle oracle(n, std::move(parts));
        return outcome_to_dict(n, identify_character(oracle));
    });

    m.def("query_upper_bound", &query_upper_bound, py::arg("n"), py::arg("last_hook"));

    m.def("xi_prefix_length", &xi_prefix_length);

    m.def("xi_prefix", [](const std::vector<int>& nu) {
        return ints_to_py(xi_prefix(to_partition(nu)).values);
    });

    m.def("class_from_xi_prefix", [](int n, const py::sequence& values) {
        XiPrefix prefix;
        prefix.n = n;
        for (py::handle h : values) prefix.values.push_back(py_to_int(h));
        return from_partition(class_from_xi_prefix(prefix));
    }, py::arg("n"), py::arg("values"));

    m.def("product_polynomial", [](const std::vector<int>& nu) {
        return ints_to_py(product_polynomial(to_partition(nu)));
    }, "Coefficients of prod (X^nu_k - 1), leading first");

    m.def("play_game", [](int n, std::uint64_t seed, int limit) {
        return game_to_dict(play_game(n, seed, limit));
    }, py::arg("n"), py::arg("seed") = 1, py::arg("limit") = kDefaultTableLimit);

    m.def("set_memo_budget", &set_memo_budget);
}
