#include <set>

#include "chevalley.hpp"
#include "ctab.hpp"
#include "doctest.h"

using namespace cusp;

namespace {

const char* kSmall =
    "# cyclic group of order 2\n"
    "name: C2\n"
    "order: 2\n"
    "begin classes\n"
    "1a 1 1 p2->1\n"
    "2a 1 2 p2->1\n"
    "end classes\n"
    "begin matrix\n"
    "1 1\n"
    "1 -1\n"
    "end matrix\n";

bool mentions(const std::vector<std::string>& v, const std::string& s) {
    for (const auto& x : v)
        if (x.find(s) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("round trip") {
    for (const auto& t : {symmetric_table(6), character_table(Group(10, subgroup_generators("C2")), "Sp4(2)"),
                          symmetric_table(1)}) {
        std::string s = serialize_ctab(t);
        auto back = parse_ctab(s);
        CHECK(serialize_ctab(back) == s);
        CHECK(validate_ctab(back).empty());
        CHECK(back.irr == t.irr);
        CHECK(back.order == t.order);
    }
    auto c2 = parse_ctab(kSmall);
    CHECK(c2.name == "C2");
    CHECK(c2.classes[1].power.at(2) == 0);
    CHECK(validate_ctab(c2).empty());
}

TEST_CASE("cyclotomic entries") {
    std::string doc =
        "name: x\norder: 1\nbegin classes\n1a 1 1\nend classes\nbegin matrix\n3/2*E(8)^3-1\nend matrix\n";
    auto t = parse_ctab(doc);
    CHECK(t.irr[0][0] == Cyclotomic::parse("-1+3/2*E(8)^3"));
    CHECK(!validate_ctab(t).empty());  // degree is not a positive integer
}

TEST_CASE("validation reports") {
    auto t = symmetric_table(4);
    CHECK(validate_ctab(t).empty());

    auto sizes = t;
    sizes.classes[1].size -= 1;
    CHECK(mentions(validate_ctab(sizes), "class sizes sum"));

    auto corrupt = t;
    corrupt.irr[3][2] = corrupt.irr[3][2] + Cyclotomic(1);
    auto v = validate_ctab(corrupt);
    CHECK(mentions(v, "columns"));
    CHECK(mentions(v, "rows"));

    CharacterTable empty;
    CHECK(mentions(validate_ctab(empty), "no classes"));

    auto pw = t;
    pw.classes[2].power[2] = 2;  // a class is never its own square unless it has odd order
    CHECK(mentions(validate_ctab(pw), "power"));
}

TEST_CASE("parse errors") {
    try {
        parse_ctab("name: x\norder: 2\nbegin classes\n1a 1 1\n2a 1 2 q2->1\nend classes\n");
        FAIL("expected error");
    } catch (const CtabParseError& e) {
        CHECK(e.line == 5);
        CHECK(e.col == 8);
    }
    try {
        parse_ctab("name: x\norder: 1\nbegin classes\n1a 1 1\nend classes\nbegin matrix\n1+E(\nend matrix\n");
        FAIL("expected error");
    } catch (const CtabParseError& e) {
        CHECK(e.line == 7);
    }
    CHECK_THROWS_AS(parse_ctab("name: x\norder: 2\nbegin classes\n1a 1 1\n1a 1 2\nend classes\nbegin matrix\n"
                               "1 1\n1 -1\nend matrix\n"),
                    CtabParseError);
    CHECK_THROWS_AS(parse_ctab("name: x\norder: 2\nbegin classes\n1a 1 1\n2a 1 2\nend classes\nbegin matrix\n"
                               "1 1\nend matrix\n"),
                    InputError);
    CHECK_THROWS_AS(parse_ctab("name: x\norder: 2\nbegin classes\n1a 1 1\n"), CtabParseError);
    CHECK_THROWS_AS(parse_ctab("hello\n"), CtabParseError);
    CHECK_THROWS_AS(read_ctab_file("/nonexistent/file.ctab"), InputError);
}
