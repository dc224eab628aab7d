#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "charpoly/cli.hpp"

using namespace charpoly;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "charpoly");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct CsvRow {
    int k;
    double coeff;
    double bound;
    double exact;
    double abs_err;
    double rel_err;
    bool has_bound = false, has_exact = false, has_abs = false, has_rel = false;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        while (cells.size() < 6) cells.push_back("");
        CsvRow r{};
        r.k = std::stoi(cells[0]);
        r.coeff = std::stod(cells[1]);
        if (!cells[2].empty()) { r.bound = std::stod(cells[2]); r.has_bound = true; }
        if (!cells[3].empty()) { r.exact = std::stod(cells[3]); r.has_exact = true; }
        if (!cells[4].empty()) { r.abs_err = std::stod(cells[4]); r.has_abs = true; }
        if (!cells[5].empty()) { r.rel_err = std::stod(cells[5]); r.has_rel = true; }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

TEST_CASE("hansen with oracle: tight errors, valid bounds") {
    CliRun r = run({"compute", "--gallery", "hansen", "--n", "8", "--oracle"});
    REQUIRE(r.code == 0);
    std::vector<CsvRow> rows = parse_csv(r.out);
    REQUIRE(rows.size() == 8);
    for (const CsvRow& row : rows) {
        REQUIRE(row.has_bound);
        REQUIRE(row.has_exact);
        REQUIRE(row.has_abs);
        CHECK(row.abs_err <= row.bound);
        if (row.has_rel) CHECK(row.rel_err <= 1e-14);
    }
}

TEST_CASE("csv output is deterministic") {
    std::vector<std::string> args{"compute", "--gallery", "forsythe-rotated",
                                  "--n", "12", "--seed", "4242"};
    CliRun a = run(args);
    CliRun b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    CliRun c = run({"compute", "--gallery", "forsythe-rotated", "--n", "12", "--seed", "4243"});
    CHECK(a.out != c.out);
}

TEST_CASE("json mirrors the csv values") {
    CliRun csv = run({"compute", "--gallery", "frank", "--n", "6", "--oracle"});
    CliRun js = run({"compute", "--gallery", "frank", "--n", "6", "--oracle",
                     "--format", "json"});
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    std::vector<CsvRow> rows = parse_csv(csv.out);
    REQUIRE(rows.size() == 6);
    CHECK(js.out.find("\"method\"") != std::string::npos);
    CHECK(js.out.find("\"rows\"") != std::string::npos);
    // every csv coefficient appears verbatim in the json
    for (const CsvRow& row : rows) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", row.coeff);
        CHECK(js.out.find(buf) != std::string::npos);
    }
}

TEST_CASE("companion input echoes its coefficients") {
    CliRun r = run({"compute", "--gallery", "companion", "--coeffs", "1.5,-2,0.25",
                    "--oracle"});
    REQUIRE(r.code == 0);
    std::vector<CsvRow> rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].coeff == 1.5);
    CHECK(rows[1].coeff == -2.0);
    CHECK(rows[2].coeff == 0.25);
    for (const CsvRow& row : rows) CHECK(row.abs_err == 0.0);
}

TEST_CASE("leverrier on all-ones blows up where the two-stage method stays tiny") {
    CliRun lev = run({"compute", "--gallery", "all-ones", "--n", "40",
                      "--method", "leverrier"});
    REQUIRE(lev.code == 0);
    std::vector<CsvRow> rows = parse_csv(lev.out);
    REQUIRE(rows.size() == 40);
    double worst = 0.0;
    for (const CsvRow& row : rows)
        if (row.k >= 22) worst = std::max(worst, std::fabs(row.coeff));
    CHECK(worst > 1e15);

    CliRun lab = run({"compute", "--gallery", "all-ones", "--n", "40"});
    REQUIRE(lab.code == 0);
    std::vector<CsvRow> lrows = parse_csv(lab.out);
    for (const CsvRow& row : lrows)
        if (row.k >= 2) CHECK(std::fabs(row.coeff) <= 1e-6);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"compute"}).code == 2);  // no input source
    CHECK(run({"compute", "--gallery", "hansen", "--n", "5", "--input", "x.mtx"}).code == 2);
    CHECK(run({"compute", "--gallery", "hansen", "--n", "5", "--method", "cayley"}).code == 2);
    CHECK(run({"compute", "--gallery", "hansen", "--n", "5", "--k", "9"}).code == 2);
    CHECK(run({"bench", "--sizes", "64"}).code == 2);
    CHECK(run({"reproduce", "unknown-experiment"}).code == 2);
    CHECK(run({"compute", "--gallery", "nonsense", "--n", "5"}).code == 2);

    CliRun big = run({"compute", "--gallery", "hansen", "--n", "80", "--oracle"});
    CHECK(big.code == 2);
    CHECK(big.err.find("oracle-limit") != std::string::npos);
    CHECK(run({"compute", "--gallery", "hansen", "--n", "80", "--oracle",
               "--oracle-limit", "100"})
              .code == 0);
}

TEST_CASE("structure errors exit with 3") {
    std::string path = "/tmp/charpoly_cli_rect.mtx";
    {
        std::ofstream out(path);
        out << "%%MatrixMarket matrix array real general\n2 3\n1 2 3 4 5 6\n";
    }
    CHECK(run({"compute", "--input", path}).code == 3);
    std::remove(path.c_str());
}

TEST_CASE("numeric failures exit with 4") {
    std::string path = "/tmp/charpoly_cli_huge.mtx";
    {
        std::ofstream out(path);
        out << "%%MatrixMarket matrix array real general\n2 2\n1e300 0 0 1e300\n";
    }
    CHECK(run({"compute", "--input", path}).code == 4);
    std::remove(path.c_str());
}

TEST_CASE("seed env fallback loses to the flag") {
    setenv("CHARPOLY_SEED", "1111", 1);
    CliRun env_run = run({"compute", "--gallery", "forsythe-rotated", "--n", "10"});
    CliRun flag_run = run({"compute", "--gallery", "forsythe-rotated", "--n", "10",
                           "--seed", "2222"});
    CliRun env_again = run({"compute", "--gallery", "forsythe-rotated", "--n", "10"});
    unsetenv("CHARPOLY_SEED");
    CliRun default_run = run({"compute", "--gallery", "forsythe-rotated", "--n", "10"});
    CliRun seed_1111 = run({"compute", "--gallery", "forsythe-rotated", "--n", "10",
                            "--seed", "1111"});
    REQUIRE(env_run.code == 0);
    CHECK(env_run.out == env_again.out);
    CHECK(env_run.out == seed_1111.out);   // env var behaves like --seed 1111
    CHECK(env_run.out != flag_run.out);    // explicit flag wins
    CHECK(env_run.out != default_run.out); // default seed is 42, not 1111

    setenv("CHARPOLY_SEED", "not-a-number", 1);
    CHECK(run({"compute", "--gallery", "forsythe-rotated", "--n", "10"}).code == 2);
    unsetenv("CHARPOLY_SEED");
}

TEST_CASE("matrix market file through the cli") {
    std::string path = "/tmp/charpoly_cli_sym.mtx";
    {
        std::ofstream out(path);
        out << "%%MatrixMarket matrix coordinate real symmetric\n"
            << "3 3 5\n"
            << "1 1 2\n2 2 2\n3 3 2\n2 1 -1\n3 2 -1\n";
    }
    CliRun r = run({"compute", "--input", path, "--oracle"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    std::vector<CsvRow> rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3);
    // charpoly of tridiag(2,-1): c = (-6, 10, -4)
    CHECK(rows[0].exact == -6.0);
    CHECK(rows[1].exact == 10.0);
    CHECK(rows[2].exact == -4.0);
    for (const CsvRow& row : rows) CHECK(row.abs_err <= row.bound);
    CHECK(r.err.find("labudde-sym") != std::string::npos);
}

TEST_CASE("truncation via k") {
    CliRun r = run({"compute", "--gallery", "hansen", "--n", "9", "--k", "3"});
    REQUIRE(r.code == 0);
    CHECK(parse_csv(r.out).size() == 3);
}

TEST_CASE("help exits cleanly") {
    CliRun top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("compute") != std::string::npos);
    CHECK(run({"compute", "--help"}).code == 0);
}
