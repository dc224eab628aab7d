#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "charpoly/io.hpp"
#include "charpoly/types.hpp"

using namespace charpoly;

namespace {

DenseMatrix parse(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_market(in);
}

}  // namespace

TEST_CASE("array general, column major") {
    DenseMatrix a = parse(
        "%%MatrixMarket matrix array real general\n"
        "% a comment\n"
        "2 2\n"
        "1.5\n"
        "3\n"
        "-2\n"
        "4\n");
    REQUIRE(a.order() == 2);
    CHECK(a(0, 0) == 1.5);
    CHECK(a(1, 0) == 3.0);
    CHECK(a(0, 1) == -2.0);
    CHECK(a(1, 1) == 4.0);
}

TEST_CASE("array symmetric stores the lower triangle") {
    DenseMatrix a = parse(
        "%%MatrixMarket matrix array real symmetric\n"
        "3 3\n"
        "1\n2\n3\n"   // column 1: a11 a21 a31
        "4\n5\n"      // column 2: a22 a32
        "6\n");       // column 3: a33
    CHECK(a(0, 0) == 1.0);
    CHECK(a(1, 0) == 2.0);
    CHECK(a(0, 1) == 2.0);
    CHECK(a(2, 0) == 3.0);
    CHECK(a(0, 2) == 3.0);
    CHECK(a(1, 1) == 4.0);
    CHECK(a(2, 1) == 5.0);
    CHECK(a(1, 2) == 5.0);
    CHECK(a(2, 2) == 6.0);
    CHECK(a.is_symmetric());
}

TEST_CASE("array accepts several values per line") {
    DenseMatrix a = parse(
        "%%MatrixMarket matrix array real general\n"
        "2 2\n"
        "1 2 3 4\n");
    CHECK(a(0, 0) == 1.0);
    CHECK(a(1, 0) == 2.0);
    CHECK(a(0, 1) == 3.0);
    CHECK(a(1, 1) == 4.0);
}

TEST_CASE("coordinate general with unset entries zero") {
    DenseMatrix a = parse(
        "%%MatrixMarket matrix coordinate real general\n"
        "3 3 3\n"
        "1 1 2.5\n"
        "3 1 -1\n"
        "2 3 7\n");
    CHECK(a(0, 0) == 2.5);
    CHECK(a(2, 0) == -1.0);
    CHECK(a(1, 2) == 7.0);
    CHECK(a(1, 1) == 0.0);
    CHECK(a(0, 2) == 0.0);
}

TEST_CASE("coordinate symmetric mirrors below-diagonal entries") {
    DenseMatrix a = parse(
        "%%MatrixMarket matrix coordinate real symmetric\n"
        "3 3 3\n"
        "1 1 1\n"
        "2 1 5\n"
        "3 3 -2\n");
    CHECK(a(1, 0) == 5.0);
    CHECK(a(0, 1) == 5.0);
    CHECK(a(0, 0) == 1.0);
    CHECK(a(2, 2) == -2.0);
    CHECK(a.is_symmetric());
}

TEST_CASE("integer field parses as real") {
    DenseMatrix a = parse(
        "%%MatrixMarket matrix coordinate integer general\n"
        "2 2 2\n"
        "1 1 3\n"
        "2 2 -4\n");
    CHECK(a(0, 0) == 3.0);
    CHECK(a(1, 1) == -4.0);
}

TEST_CASE("banner case and blank lines are tolerated") {
    DenseMatrix a = parse(
        "%%MatrixMarket MATRIX Array Real General\n"
        "%\n"
        "\n"
        "2 2\n"
        "\n"
        "1\n2\n3\n4\n");
    CHECK(a(1, 1) == 4.0);
}

TEST_CASE("unsupported headers are rejected") {
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix array complex general\n2 2\n"), SpecError);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 1\n"),
                    SpecError);
    CHECK_THROWS_AS(
        parse("%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 1\n"), SpecError);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix array complex hermitian\n2 2\n"), SpecError);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix mystery real general\n2 2\n"), SpecError);
    CHECK_THROWS_AS(parse("%%MatrixMarket tensor array real general\n2 2\n"), SpecError);
    CHECK_THROWS_AS(parse("not a banner\n2 2\n1 2 3 4\n"), SpecError);
    CHECK_THROWS_AS(parse(""), SpecError);
}

TEST_CASE("shape and data errors") {
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n2 3\n1 2 3 4 5 6\n"),
                    StructureError);
    // truncated value list
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n2 2\n1 2 3\n"), SpecError);
    // garbage token
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n2 2\n1 2 x 4\n"), SpecError);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n2 2\n1 2 3.5q 4\n"),
                    SpecError);
    // coordinate indices out of range
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 5\n"),
                    SpecError);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n2 2 1\n0 1 5\n"),
                    SpecError);
    // missing entries
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 5\n"),
                    SpecError);
    // non-finite value
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real general\n1 1\ninf\n"), OverflowError);
}

TEST_CASE("file round trip and missing file") {
    std::string path = "/tmp/charpoly_io_test.mtx";
    {
        std::ofstream out(path);
        out << "%%MatrixMarket matrix coordinate real symmetric\n"
            << "2 2 2\n"
            << "1 1 4\n"
            << "2 1 -1\n";
    }
    DenseMatrix a = read_matrix_market_file(path);
    CHECK(a(0, 0) == 4.0);
    CHECK(a(0, 1) == -1.0);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_matrix_market_file("/tmp/definitely_not_here.mtx"), SpecError);
}
