#include "doctest.h"

#include <sstream>

#include "covercraft/code_io.hpp"

using namespace covercraft;

TEST_CASE("reads words, skipping blanks and comments") {
    std::istringstream in(
        "# covering code over Q_3\n"
        "\n"
        "000\n"
        "  111  \n"
        "# trailing comment\n"
        "010\n");
    const Code c = read_code(in);
    CHECK(c.length() == 3);
    CHECK(c.size() == 3);
    CHECK(c.contains(Word::from_string("111")));
}

TEST_CASE("rejects duplicates with line numbers") {
    std::istringstream in("01\n10\n01\n");
    try {
        read_code(in);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("rejects ragged lengths and bad characters") {
    std::istringstream ragged("01\n010\n");
    CHECK_THROWS_AS(read_code(ragged), parse_error);
    std::istringstream bad("01\n0x\n");
    CHECK_THROWS_AS(read_code(bad), parse_error);
}

TEST_CASE("empty codes round-trip through the length directive") {
    std::ostringstream out;
    write_code(out, Code(6));
    std::istringstream in(out.str());
    const Code c = read_code(in);
    CHECK(c.empty());
    CHECK(c.length() == 6);

    std::istringstream nothing("\n# just a remark\n");
    CHECK_THROWS_AS(read_code(nothing), parse_error);
}

TEST_CASE("write-then-read is the identity") {
    const Code c(4, {0b0000, 0b1010, 0b1111});
    std::ostringstream out;
    write_code(out, c);
    std::istringstream in(out.str());
    CHECK(read_code(in) == c);
}

TEST_CASE("a length directive that disagrees with the data is rejected") {
    std::istringstream in("# n=5\n0101\n");
    CHECK_THROWS_AS(read_code(in), parse_error);
}
