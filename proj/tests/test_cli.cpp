#include "nsize/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace nsize;

namespace {
struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}
}

TEST_CASE("density subcommand") {
    const Run r = invoke({"density", "superexp"});
    CHECK(r.code == 0);
    CHECK(r.out == "bounds 0 1\n");

    const Run exact = invoke({"density", "mod 5 2"});
    CHECK(exact.out == "exact 1/5\n");

    const Run csv = invoke({"density", "mod 5 0", "--format", "csv"});
    CHECK(csv.out == "exact,1,5\n");

    const Run bounds_csv = invoke({"density", "leading1", "--format", "csv"});
    CHECK(bounds_csv.out == "bounds,1,9,5,9\n");

    const Run unknown = invoke({"density", "superexp & bitodd"});
    CHECK(unknown.out == "unknown\n");
}

TEST_CASE("density profile table") {
    const Run r = invoke({"density", "superexp", "--profile-checkpoints", "4,16",
                          "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,f_n,density_num,density_den,density_decimal\n"
          "4,2,1,2,0.5\n"
          "16,2,1,8,0.125\n");
}

TEST_CASE("numerosity subcommand modes") {
    CHECK(invoke({"numerosity", "finite{1,2,3}", "--mode", "super"}).out ==
          "super 3\n");
    CHECK(invoke({"numerosity", "cofinite{7}", "--mode", "super"}).out ==
          "super a - 1\n");
    CHECK(invoke({"numerosity", "mod 2 0", "--mode", "canonical"}).out ==
          "exact 1/2 a\n");
    CHECK(invoke({"numerosity", "powers 2", "--mode", "canonical"}).out ==
          "exact sqrt(a)\n");
    CHECK(invoke({"numerosity", "mod 2 0", "--mode", "free"}).out ==
          "range [1/2 a - 1, 1/2 a - 1] .. [1/2 a, 1/2 a]\n");
    CHECK(invoke({"numerosity", "superexp", "--mode", "free"}).out ==
          "range [sqrt(a) - a^(1/4), sqrt(a)] .. [a - sqrt(a), a - sqrt(a) + "
          "a^(1/4)]\n");
    const Run cn = invoke({"numerosity", "mod 2 0", "--mode", "cnum"});
    CHECK(cn.out.find("cnum f[1..12] = 0 1 1 2 2 3 3 4 4 5 5 6") != std::string::npos);
    CHECK(cn.out.find("period 2 gain 1") != std::string::npos);
    const Run cn_csv = invoke({"numerosity", "mod 2 0", "--mode", "cnum", "--format",
                               "csv"});
    CHECK(cn_csv.out.find("n,f\n1,0\n2,1\n") == 0);
    CHECK(invoke({"numerosity", "primes", "--mode", "super"}).out ==
          "nosuper unknown\n");
    CHECK(invoke({"numerosity", "mod 2 0 | mod 2 1", "--mode", "free"}).out ==
          "exact a\n");
}

TEST_CASE("compare subcommand") {
    const Run eo = invoke({"compare", "mod 2 0", "mod 2 1", "--measure", "cnum"});
    CHECK(eo.code == 0);
    CHECK(eo.out.find("verdict WeakLess") != std::string::npos);
    CHECK(eo.out.find("cnum(left) <= cnum(right) <= cnum(left) + 1") !=
          std::string::npos);
    CHECK(eo.out.find("cnum(left) + cnum(right) = a") != std::string::npos);

    const Run se = invoke({"compare", "superexp", "mod 2 0", "--measure", "cnum"});
    CHECK(se.out.find("verdict Incomparable") != std::string::npos);
    CHECK(se.out.find("witness_left_ahead") != std::string::npos);
    CHECK(se.out.find("witness_right_ahead") != std::string::npos);

    const Run dens = invoke({"compare", "mod 4 0", "mod 2 0", "--measure", "density"});
    CHECK(dens.out.find("verdict Less") != std::string::npos);

    const Run alpha = invoke({"compare", "powers 2", "mod 2 0", "--measure", "alpha"});
    CHECK(alpha.out.find("verdict Less") != std::string::npos);

    const Run lot = invoke({"compare", "finite{1,2}", "cofinite{9}", "--measure",
                            "lottery"});
    CHECK(lot.out.find("verdict Less") != std::string::npos);

    const Run horizon = invoke({"compare", "primes", "powers 2", "--measure", "cnum",
                                "--horizon", "512"});
    CHECK(horizon.out.find("verdict Unknown") != std::string::npos);
    CHECK(horizon.out.find("512") != std::string::npos);
}

TEST_CASE("table subcommand") {
    const Run r = invoke({"table", "mod 2 0", "--at", "7", "--format", "csv"});
    CHECK(r.out ==
          "n,chi,f,ratio_num,ratio_den,ratio_decimal\n"
          "7,0,3,3,7,0.428571428571\n");
}

TEST_CASE("hist and s-table subcommands") {
    const Run hist = invoke({"hist", "--n", "10", "--format", "csv"});
    CHECK(hist.code == 0);
    CHECK(hist.out.find("k,count,fraction_num,fraction_den,relative_decimal\n") == 0);
    CHECK(hist.out.find("5,252,1,2,0.24609375") != std::string::npos);

    const Run st = invoke({"s-table", "--kmax", "3", "--format", "csv"});
    CHECK(st.out ==
          "k,n,f,ratio_num,ratio_den,ratio_decimal\n"
          "1,4,2,1,2,0.5\n"
          "2,16,2,1,8,0.125\n"
          "3,256,242,121,128,0.9453125\n");
}

TEST_CASE("sample-random subcommand is deterministic") {
    const std::vector<std::string> args = {"sample-random", "--n", "1000",
                                           "--trials",      "3",  "--seed", "5"};
    const Run a = invoke(args);
    const Run b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("generator splitmix64 seed 5") != std::string::npos);
    CHECK(a.out.find("max_deviation") != std::string::npos);
}

TEST_CASE("classify report") {
    const Run r = invoke({"classify", "mod 2 0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("expr: mod 2 0\n") != std::string::npos);
    CHECK(r.out.find("cardinality: aleph0\n") != std::string::npos);
    CHECK(r.out.find("lottery: Vinf\n") != std::string::npos);
    CHECK(r.out.find("density: exact 1/2\n") != std::string::npos);
    CHECK(r.out.find("alpha_canonical: 1/2 a\n") != std::string::npos);
    CHECK(r.out.find("cnum: ") != std::string::npos);

    const Run csv = invoke({"classify", "empty", "--format", "csv"});
    CHECK(csv.out.find("expr,cardinality,lottery,") == 0);
    CHECK(csv.out.find("empty,finite 0,V0,exact 0,exact 0,0,0,") != std::string::npos);
}

TEST_CASE("exit codes") {
    // 0: success (above); 2: expression parse error
    const Run bad_expr = invoke({"density", "mod 2"});
    CHECK(bad_expr.code == 2);
    CHECK(bad_expr.out.empty());
    CHECK(bad_expr.err.find("parse error") != std::string::npos);

    // 3: precondition violations
    CHECK(invoke({"hist", "--n", "11"}).code == 3);
    CHECK(invoke({"s-table", "--kmax", "9"}).code == 3);
    CHECK(invoke({"sample-random", "--n", "5", "--trials", "0", "--seed", "1"}).code ==
          3);
    CHECK(invoke({"table", "mod 2 0", "--at", "xyz"}).code == 3);
    CHECK(invoke({"nonsense-subcommand"}).code == 3);
    CHECK(invoke({}).code == 3);

    // 4: resource caps
    CHECK(invoke({"hist", "--n", "200000"}).code == 4);
    CHECK(invoke({"sample-random", "--n", "2000000000", "--trials", "1", "--seed",
                  "1"}).code == 4);
}

TEST_CASE("resource cap honors NSIZE_MAX_ENUM") {
    const auto original = enumeration_cap();
    setenv("NSIZE_MAX_ENUM", "100", 1);
    // superexp & primes has no closed form; 5000 > 100 forces enumeration
    // beyond the cap
    const Run r = invoke({"table", "superexp & primes", "--at", "5000"});
    CHECK(r.code == 4);
    CHECK(r.err.find("resource error") != std::string::npos);
    unsetenv("NSIZE_MAX_ENUM");
    set_enumeration_cap(original);

    const Run bad = [&] {
        setenv("NSIZE_MAX_ENUM", "bogus", 1);
        const Run rr = invoke({"density", "all"});
        unsetenv("NSIZE_MAX_ENUM");
        return rr;
    }();
    CHECK(bad.code == 3);
    set_enumeration_cap(original);
}

TEST_CASE("output determinism, byte for byte") {
    const std::vector<std::vector<std::string>> invocations = {
        {"classify", "superexp"},
        {"density", "bitodd", "--format", "csv"},
        {"compare", "superexp", "mod 2 0", "--measure", "cnum"},
        {"s-table", "--kmax", "7", "--format", "csv"},
    };
    for (const auto& args : invocations) {
        const Run a = invoke(args);
        const Run b = invoke(args);
        REQUIRE(a.code == b.code);
        REQUIRE(a.out == b.out);
    }
}

TEST_CASE("hist writes a self-contained svg file") {
    const std::string path = "hist_test_tmp.svg";
    const Run r = invoke({"hist", "--n", "10", "--svg", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str().find("</svg>") != std::string::npos);
    in.close();
    std::remove(path.c_str());
}
