#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

// Runs the tool through the shell, capturing stdout; stderr is dropped
// unless the command redirects it. DAGSETS_CLI_PATH is injected by CMake.
CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(DAGSETS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() /
                ("dagsets_cli_" + std::to_string(getpid()) + "_" + name);
    std::ofstream f(path);
    f << content;
    return path.string();
}

const std::string example_text = "5 5\n0 1\n1 2\n0 3\n2 4\n3 4\n";
const std::string example_golden =
    "0 1 2 3 4\n0 1 2 3\n0 1 3\n0 3\n0 1 2\n0 1\n0\n1 2 3 4\n1 2 4\n1 2\n1\n"
    "2 3 4\n2 4\n2\n3 4\n3\n4\n";

}  // namespace

TEST_CASE("enum cc golden stream") {
    std::string file = write_temp("example.txt", example_text);
    CliResult r = run_cli("enum cc " + file);
    CHECK(r.code == 0);
    CHECK(r.out == example_golden);

    SECTION("count only") {
        CHECK(run_cli("enum cc --count-only " + file).out == "17\n");
    }
    SECTION("limit one prints the full vertex set") {
        CliResult lim = run_cli("enum cc --limit 1 " + file);
        CHECK(lim.code == 0);
        CHECK(lim.out == "0 1 2 3 4\n");
    }
    SECTION("limit output is a prefix") {
        CliResult lim = run_cli("enum cc --limit 5 " + file);
        CHECK(example_golden.substr(0, lim.out.size()) == lim.out);
        CHECK(run_cli("enum cc --limit 0 --count-only " + file).out == "0\n");
    }
    SECTION("stdin dash") {
        CHECK(run_cli("enum cc --count-only - < " + file).out == "17\n");
    }
    SECTION("runs are byte identical") {
        CHECK(run_cli("enum cc " + file).out == run_cli("enum cc " + file).out);
    }
    SECTION("parallel merge matches single-threaded bytes") {
        CHECK(run_cli("enum cc --parallel 4 " + file).out == example_golden);
    }
    SECTION("json report trails the stream") {
        CliResult rep = run_cli("enum cc --report --limit 3 " + file);
        auto nl = rep.out.rfind('\n', rep.out.size() - 2);
        nlohmann::json j = nlohmann::json::parse(rep.out.substr(nl + 1));
        CHECK(j["n"] == 5);
        CHECK(j["m"] == 5);
        CHECK(j["algorithm"] == "cc");
        CHECK(j["count"] == 3);
        CHECK(j["limit"] == 3);
        CHECK(j["ms"].is_number());
        nlohmann::json full = nlohmann::json::parse(
            run_cli("enum cc --report --count-only " + file).out.substr(3));
        CHECK(full["limit"].is_null());
        CHECK(full["count"] == 17);
    }
}

TEST_CASE("enum other kinds") {
    std::string tri = write_temp("tri.txt", "3 3\n0 1\n1 2\n0 2\n");
    CHECK(run_cli("enum connected --count-only " + tri).out == "7\n");
    CHECK(run_cli("enum connected --parallel 2 " + tri).out ==
          run_cli("enum connected " + tri).out);

    std::string file = write_temp("example.txt", example_text);
    CHECK(run_cli("enum convex --count-only " + file).out == "20\n");

    std::string single = write_temp("single.txt", "1 0\n");
    CliResult conv = run_cli("enum convex --include-empty " + single);
    CHECK(conv.out == "0\n\n");  // the empty set prints as an empty line
    CHECK(run_cli("enum convex --include-empty --count-only " + single).out == "2\n");
}

TEST_CASE("enum error paths") {
    std::string bad = write_temp("bad.txt", "zz\n");
    CHECK(run_cli("enum cc " + bad).code == 2);

    std::string cyc = write_temp("cyc.txt", "2 2\n0 1\n1 0\n");
    CHECK(run_cli("enum cc " + cyc).code == 3);
    CHECK(run_cli("enum convex " + cyc).code == 3);
    CHECK(run_cli("enum connected " + cyc).code == 0);  // direction-free reading

    CHECK(run_cli("enum cc /nonexistent/file").code == 2);
    CHECK(run_cli("enum bogus " + bad).code == 2);
    CHECK(run_cli("enum").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("--help").code == 0);

    std::string file = write_temp("example.txt", example_text);
    CHECK(run_cli("enum cc --include-empty " + file).code == 2);
    CHECK(run_cli("enum convex --parallel 2 " + file).code == 2);
}

TEST_CASE("gen families") {
    CliResult kpq = run_cli("gen kpq 7 8");
    CHECK(kpq.code == 0);
    CHECK(kpq.out.substr(0, 6) == "15 56\n");

    CHECK(run_cli("gen path 5").out == "5 4\n0 1\n1 2\n2 3\n3 4\n");

    CliResult a = run_cli("gen random-dag 10 0.3 42");
    CHECK(a.code == 0);
    CHECK(a.out == run_cli("gen random-dag 10 0.3 42").out);
    CHECK(a.out == run_cli("gen random-dag 10 0.3 --seed 42").out);
    CHECK(a.out != run_cli("gen random-dag 10 0.3 7").out);

    CliResult g = run_cli("gen random-graph 8 0.5 1");
    CHECK(g.code == 0);
    CHECK(g.out == run_cli("gen random-graph 8 0.5 1").out);

    CHECK(run_cli("gen kpq 0 2").code == 2);
    CHECK(run_cli("gen kpq 2").code == 2);
    CHECK(run_cli("gen path x").code == 2);
    CHECK(run_cli("gen random-dag 5 2.0 1").code == 2);
    CHECK(run_cli("gen nosuch 1 2").code == 2);
}

TEST_CASE("generated instances feed back through enum") {
    std::string kpq = write_temp("k44.txt", run_cli("gen kpq 4 4").out);
    CHECK(run_cli("enum cc --count-only " + kpq).out == "233\n");  // f(8) = 256+9-32
    std::string path = write_temp("p10.txt", run_cli("gen path 10").out);
    CHECK(run_cli("enum cc --count-only " + path).out == "55\n");
}

TEST_CASE("verify cross-checks the oracle") {
    std::string file = write_temp("example.txt", example_text);
    CliResult ok = run_cli("verify cc " + file);
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok: 17 sets\n");
    CHECK(run_cli("verify convex " + file).out == "ok: 20 sets\n");

    std::string tri = write_temp("tri.txt", "3 3\n0 1\n1 2\n0 2\n");
    CHECK(run_cli("verify connected " + tri).code == 0);

    std::string k22 = write_temp("k22.txt", run_cli("gen kpq 2 2").out);
    CliResult v = run_cli("verify convex " + k22);
    CHECK(v.code == 0);
    CHECK(v.out == "ok: 15 sets\n");

    SECTION("negative control") {
        CHECK(run_cli("verify cc --drop-first " + file).code == 1);
        CHECK(run_cli("verify connected --drop-first " + tri).code == 1);
    }
    SECTION("cap") {
        std::string big = write_temp("k11.txt", run_cli("gen kpq 11 11").out);
        CHECK(run_cli("verify cc " + big).code == 4);
        CHECK(run_cli("verify cc --cap 4 " + file).code == 4);
    }
    SECTION("errors") {
        std::string cyc = write_temp("cyc.txt", "2 2\n0 1\n1 0\n");
        CHECK(run_cli("verify cc " + cyc).code == 3);
        CHECK(run_cli("verify cc /nonexistent").code == 2);
    }
}

TEST_CASE("bench prints matching predictions") {
    CliResult r = run_cli("bench cc kpq 4..6 --reps 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("yes") != std::string::npos);
    CHECK(r.out.find("NO") == std::string::npos);
    CHECK(r.out.find("13") != std::string::npos);  // f(4)

    CliResult path = run_cli("bench cc path 100 --reps 1");
    CHECK(path.code == 0);
    CHECK(path.out.find("5050") != std::string::npos);

    CliResult convex = run_cli("bench convex kpq 5..8 --reps 1");
    CHECK(convex.code == 0);
    CHECK(convex.out.find("255") != std::string::npos);  // 2^8 - 1
    CHECK(convex.out.find("NO") == std::string::npos);

    CHECK(run_cli("bench cc kpq abc").code == 2);
    CHECK(run_cli("bench cc kpq 5..3").code == 2);
    CHECK(run_cli("bench cc kpq 60..70").code == 2);
    CHECK(run_cli("bench connected kpq 4..5").code == 2);
    CHECK(run_cli("bench cc kpq 4..5 --reps 0").code == 2);
}
