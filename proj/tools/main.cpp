#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dagsets/dagsets.hpp"

namespace {

using namespace dagsets;
using clock_type = std::chrono::steady_clock;

// Exit codes: 0 ok, 1 verification mismatch, 2 parse/usage, 3 cyclic input,
// 4 oracle cap exceeded.

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void print_set(std::ostream& os, const VertexSet& s) {
    bool first = true;
    for (int v : s) {
        if (!first) os << ' ';
        os << v;
        first = false;
    }
    os << '\n';
}

struct RunReport {
    int n = 0;
    int m = 0;
    std::string source;
    std::string algorithm;
    std::uint64_t count = 0;
    double ms = 0.0;
    std::optional<std::uint64_t> limit;
};

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json j{{"n", r.n},         {"m", r.m},   {"source", r.source},
                     {"algorithm", r.algorithm}, {"count", r.count}, {"ms", r.ms}};
    if (r.limit)
        j["limit"] = *r.limit;
    else
        j["limit"] = nullptr;
    return j;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

struct EnumOptions {
    std::string kind;
    std::string input;
    std::optional<std::uint64_t> limit;
    bool count_only = false;
    bool include_empty = false;
    bool report = false;
    unsigned workers = 1;
};

int run_enum(const EnumOptions& o) {
    const std::string text = slurp(o.input);
    RunReport rep;
    rep.source = o.input;
    rep.algorithm = o.kind;
    rep.limit = o.limit;

    std::uint64_t count = 0;
    auto t0 = clock_type::now();
    auto emit = [&](const VertexSet& s) {
        if (!o.count_only) print_set(std::cout, s);
        return true;
    };
    if (o.kind == "connected") {
        UndirectedGraph g = parse_undirected(text);
        rep.n = g.order();
        rep.m = g.edge_count();
        count = o.workers > 1 ? enumerate_connected_parallel(g, o.workers, emit, o.limit)
                              : enumerate_connected(g, emit, o.limit);
    } else {
        Digraph d = parse_digraph(text);
        rep.n = d.order();
        rep.m = d.arc_count();
        if (o.kind == "cc")
            count = o.workers > 1 ? enumerate_cc_parallel(d, o.workers, emit, o.limit)
                                  : enumerate_cc(d, emit, o.limit);
        else
            count = enumerate_convex(d, emit, o.include_empty, o.limit);
    }
    rep.ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    rep.count = count;

    if (o.count_only) std::cout << count << '\n';
    if (o.report) std::cout << to_json(rep).dump() << '\n';
    return 0;
}

int run_gen(const std::string& family, const std::vector<std::string>& params,
            std::optional<std::uint64_t> seed_flag) {
    auto as_int = [](const std::string& s, const char* what) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size()) throw std::invalid_argument(std::string("expected integer ") + what);
        return v;
    };
    auto as_double = [](const std::string& s, const char* what) {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size()) throw std::invalid_argument(std::string("expected number ") + what);
        return v;
    };
    auto as_seed = [&]() -> std::uint64_t {
        if (params.size() >= 3) {
            std::size_t pos = 0;
            std::uint64_t v = 0;
            try {
                v = std::stoull(params[2], &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != params[2].size()) throw std::invalid_argument("expected integer seed");
            return v;
        }
        return seed_flag.value_or(0);
    };
    auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
        if (params.size() < lo || params.size() > hi)
            throw std::invalid_argument(std::string("usage: gen ") + usage);
    };

    if (family == "kpq") {
        need(2, 2, "kpq P Q");
        write_edge_list(std::cout, gen_kpq(as_int(params[0], "P"), as_int(params[1], "Q")));
    } else if (family == "path") {
        need(1, 1, "path N");
        write_edge_list(std::cout, gen_path(as_int(params[0], "N")));
    } else if (family == "random-dag") {
        need(2, 3, "random-dag N DENSITY [SEED]");
        write_edge_list(std::cout, gen_random_dag(as_int(params[0], "N"),
                                                  as_double(params[1], "DENSITY"), as_seed()));
    } else {
        need(2, 3, "random-graph N DENSITY [SEED]");
        write_edge_list(std::cout,
                        gen_random_connected_graph(as_int(params[0], "N"),
                                                   as_double(params[1], "DENSITY"), as_seed()));
    }
    return 0;
}

int run_verify(const std::string& kind, const std::string& input, int cap, bool drop_first) {
    const std::string text = slurp(input);
    CollectingSink fast;
    SetFamily oracle;
    if (kind == "connected") {
        UndirectedGraph g = parse_undirected(text);
        oracle = brute_connected(g, cap);  // throws capacity_error past the cap
        enumerate_connected(g, fast);
    } else {
        Digraph d = parse_digraph(text);
        oracle = kind == "cc" ? brute_cc(d, cap) : brute_convex(d, cap);
        if (kind == "cc")
            enumerate_cc(d, fast);
        else
            enumerate_convex(d, fast);
    }
    if (drop_first && !fast.sets.empty()) fast.sets.erase(fast.sets.begin());

    SetFamily got = SetFamily::from_sets(fast.sets);
    if (got == oracle) {
        std::cout << "ok: " << oracle.size() << " sets\n";
        return 0;
    }
    std::cerr << "mismatch: enumerator " << got.size() << " sets, oracle " << oracle.size()
              << " sets\n";
    FamilyDiff diff = family_diff(got, oracle);
    auto show = [](const char* label, const std::vector<std::vector<int>>& sample) {
        for (const auto& s : sample) {
            std::cerr << label << ':';
            for (int v : s) std::cerr << ' ' << v;
            std::cerr << '\n';
        }
    };
    show("enumerator only", diff.only_left);
    show("oracle only", diff.only_right);
    return 1;
}

int run_bench(const std::string& kind, const std::string& family, const std::string& range,
              int reps) {
    int lo = 0, hi = 0;
    {
        auto dots = range.find("..");
        std::size_t pos = 0;
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(range, &pos);
                if (pos != range.size()) throw std::invalid_argument(range);
            } else {
                std::string a = range.substr(0, dots), b = range.substr(dots + 2);
                lo = std::stoi(a, &pos);
                if (pos != a.size()) throw std::invalid_argument(a);
                hi = std::stoi(b, &pos);
                if (pos != b.size()) throw std::invalid_argument(b);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad size range: " + range);
        }
    }
    // kpq counts grow as 2^n, so the closed form (and the run time) caps n at 62;
    // path families count n(n+1)/2 sets and only need a sanity bound.
    const int min_n = family == "kpq" ? 2 : 1;
    const int max_n = family == "kpq" ? 62 : 1000;
    if (lo < min_n || lo > hi || hi > max_n)
        throw std::invalid_argument("size range outside " + std::to_string(min_n) + ".." +
                                    std::to_string(max_n));
    if (reps < 1) throw std::invalid_argument("repetitions must be positive");

    std::cout << std::left << std::setw(8) << "kind" << std::setw(8) << "family" << std::right
              << std::setw(5) << "n" << std::setw(8) << "m" << std::setw(12) << "sets"
              << std::setw(12) << "predicted" << std::setw(5) << "ok" << std::setw(12) << "ms"
              << '\n';
    bool all_ok = true;
    for (int n = lo; n <= hi; ++n) {
        Digraph d = family == "kpq" ? gen_kpq((n + 1) / 2, n / 2) : gen_path(n);
        std::uint64_t predicted;
        if (family == "kpq")
            predicted = kind == "cc" ? predict(n).upper : (std::uint64_t{1} << n) - 1;
        else
            predicted = std::uint64_t(n) * (n + 1) / 2;  // path: contiguous segments, both kinds

        std::uint64_t count = 0;
        std::vector<double> times;
        times.reserve(static_cast<std::size_t>(reps));
        for (int r = 0; r < reps; ++r) {
            auto t0 = clock_type::now();
            count = kind == "cc" ? count_cc(d) : count_convex(d);
            times.push_back(
                std::chrono::duration<double, std::milli>(clock_type::now() - t0).count());
        }
        bool ok = count == predicted;
        all_ok = all_ok && ok;
        std::cout << std::left << std::setw(8) << kind << std::setw(8) << family << std::right
                  << std::setw(5) << n << std::setw(8) << d.arc_count() << std::setw(12) << count
                  << std::setw(12) << predicted << std::setw(5) << (ok ? "yes" : "NO")
                  << std::setw(12) << std::fixed << std::setprecision(2) << median(times) << '\n';
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumerate connected, convex, and connected convex vertex sets"};
    app.require_subcommand(1);

    EnumOptions eo;
    std::uint64_t limit_val = 0;
    auto* cmd_enum = app.add_subcommand("enum", "stream every set of the requested kind");
    cmd_enum->add_option("kind", eo.kind, "cc | convex | connected")
        ->required()
        ->check(CLI::IsMember({"cc", "convex", "connected"}));
    cmd_enum->add_option("input", eo.input, "edge-list file, or - for stdin")->required();
    auto* limit_opt = cmd_enum->add_option("--limit", limit_val, "stop after this many sets");
    cmd_enum->add_flag("--count-only", eo.count_only, "print only the number of sets");
    cmd_enum->add_flag("--include-empty", eo.include_empty,
                       "also emit the empty set (convex only)");
    cmd_enum->add_flag("--report", eo.report, "append a JSON run report line to stdout");
    cmd_enum->add_option("--parallel", eo.workers, "worker threads (buffered ordered merge)");

    std::string gen_family;
    std::vector<std::string> gen_params;
    std::uint64_t seed_val = 0;
    auto* cmd_gen = app.add_subcommand("gen", "write a generated instance as an edge list");
    cmd_gen->add_option("family", gen_family, "kpq | path | random-dag | random-graph")
        ->required()
        ->check(CLI::IsMember({"kpq", "path", "random-dag", "random-graph"}));
    cmd_gen->add_option("params", gen_params, "family parameters");
    auto* seed_opt = cmd_gen->add_option("--seed", seed_val, "seed for random families");

    std::string verify_kind, verify_input;
    int verify_cap = 20;
    bool drop_first = false;
    auto* cmd_verify =
        app.add_subcommand("verify", "cross-check the enumerator against the exhaustive oracle");
    cmd_verify->add_option("kind", verify_kind, "cc | convex | connected")
        ->required()
        ->check(CLI::IsMember({"cc", "convex", "connected"}));
    cmd_verify->add_option("input", verify_input, "edge-list file, or - for stdin")->required();
    cmd_verify->add_option("--cap", verify_cap, "largest order the oracle will sweep");
    cmd_verify->add_flag("--drop-first", drop_first)->group("");  // negative control for tests

    std::string bench_kind, bench_family, bench_range;
    int bench_reps = 3;
    auto* cmd_bench = app.add_subcommand("bench", "time counting runs over an instance family");
    cmd_bench->add_option("kind", bench_kind, "cc | convex")
        ->required()
        ->check(CLI::IsMember({"cc", "convex"}));
    cmd_bench->add_option("family", bench_family, "kpq | path")
        ->required()
        ->check(CLI::IsMember({"kpq", "path"}));
    cmd_bench->add_option("range", bench_range, "order or range, e.g. 15..22")->required();
    cmd_bench->add_option("--reps", bench_reps, "repetitions per instance (median reported)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_enum) {
            if (limit_opt->count()) eo.limit = limit_val;
            if (eo.include_empty && eo.kind != "convex")
                throw std::invalid_argument("--include-empty applies to convex only");
            if (eo.workers > 1 && eo.kind == "convex")
                throw std::invalid_argument("--parallel applies to cc and connected only");
            return run_enum(eo);
        }
        if (*cmd_gen) {
            std::optional<std::uint64_t> seed;
            if (seed_opt->count()) seed = seed_val;
            return run_gen(gen_family, gen_params, seed);
        }
        if (*cmd_verify) return run_verify(verify_kind, verify_input, verify_cap, drop_first);
        if (*cmd_bench) return run_bench(bench_kind, bench_family, bench_range, bench_reps);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const cycle_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
