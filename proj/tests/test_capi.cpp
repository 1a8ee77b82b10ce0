// Exercises the shared library through its C header only.
#include <cusp/cusp.h>

#include <string>

#include "doctest.h"

namespace {

struct Out {
    char* p = nullptr;
    ~Out() { cusp_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("fourier matrix and pairs") {
    Out m;
    REQUIRE(cusp_fourier_matrix("Z2", &m.p) == CUSP_OK);
    CHECK(m.str() == "1/2 1/2 1/2 1/2\n1/2 1/2 -1/2 -1/2\n1/2 -1/2 1/2 -1/2\n1/2 -1/2 -1/2 1/2\n");
    Out pairs;
    REQUIRE(cusp_gamma_pairs("S3", &pairs.p) == CUSP_OK);
    CHECK(contains(pairs.str(), "\"(g3,theta^2)\""));
    Out bad;
    CHECK(cusp_fourier_matrix("Q8", &bad.p) == CUSP_INPUT);
    CHECK(bad.p == nullptr);
    CHECK(contains(cusp_last_error(), "Q8"));
    CHECK(cusp_fourier_matrix(nullptr, &bad.p) == CUSP_INPUT);
}

TEST_CASE("family rows") {
    Out r;
    REQUIRE(cusp_family_row("B2", "(g,eps)", &r.p) == CUSP_OK);
    CHECK(contains(r.str(), "{\"name\":\"x0\",\"coeff\":\"1/2\"}"));
    Out chk;
    CHECK(cusp_printed_rows_check(&chk.p) == CUSP_OK);
    CHECK(contains(chk.str(), "\"all_match\":true"));
    Out u;
    CHECK(cusp_unipotent_row("E6", "E6[theta]", &u.p) == CUSP_OK);
    Out none;
    CHECK(cusp_family_row("G2", "(1,1)", &none.p) == CUSP_INPUT);
}

TEST_CASE("sp4 replay") {
    Out r;
    REQUIRE(cusp_sp4_verify(&r.p) == CUSP_OK);
    CHECK(contains(r.str(), "\"R\":\"2\""));
    CHECK(contains(r.str(), "\"zeta\":\"1\""));
}

TEST_CASE("tables, validation and zeta") {
    cusp_table* t = nullptr;
    REQUIRE(cusp_table_compute("sp4f2", &t) == CUSP_OK);
    CHECK(cusp_table_class_count(t) == 11);
    Out text;
    REQUIRE(cusp_table_serialize(t, &text.p) == CUSP_OK);
    cusp_table* back = nullptr;
    REQUIRE(cusp_table_parse(text.p, &back) == CUSP_OK);
    Out again;
    REQUIRE(cusp_table_serialize(back, &again.p) == CUSP_OK);
    CHECK(text.str() == again.str());
    Out v;
    CHECK(cusp_table_validate(back, &v.p) == CUSP_OK);

    Out z;
    CHECK(cusp_zeta_verify("B2", t, "(g,eps)", "4a", nullptr, &z.p) == CUSP_OK);
    CHECK(contains(z.str(), "\"zeta\":\"1\""));
    Out zbad;
    CHECK(cusp_zeta_verify("B2", t, "(g,eps)", "99z", nullptr, &zbad.p) == CUSP_INPUT);

    cusp_table_free(back);
    cusp_table_free(t);

    cusp_table* big = nullptr;
    CHECK(cusp_table_compute("D4", &big) == CUSP_BUDGET);
    CHECK(big == nullptr);
    CHECK(cusp_table_compute("nonsense", &big) == CUSP_INPUT);
    CHECK(cusp_table_parse("name: x\norder: 2\n", &big) == CUSP_INPUT);
    CHECK(cusp_table_load("/nonexistent/file.ctab", &big) == CUSP_INPUT);
    cusp_table_free(nullptr);
}

TEST_CASE("invalid table is a mismatch") {
    cusp_table* t = nullptr;
    const char* text =
        "name: x\norder: 2\nbegin classes\n1a 1 1\n2a 1 2 p2->1\nend classes\n"
        "begin matrix\n1 1\n1 2\nend matrix\n";
    REQUIRE(cusp_table_parse(text, &t) == CUSP_OK);
    Out v;
    CHECK(cusp_table_validate(t, &v.p) == CUSP_MISMATCH);
    CHECK(contains(v.str(), "\"valid\":false"));
    cusp_table_free(t);
}

TEST_CASE("fusion") {
    cusp_table *s3 = nullptr, *s6 = nullptr, *z2 = nullptr;
    REQUIRE(cusp_table_compute("s3", &s3) == CUSP_OK);
    REQUIRE(cusp_table_compute("s6", &s6) == CUSP_OK);
    REQUIRE(cusp_table_compute("gamma:Z2", &z2) == CUSP_OK);
    Out all;
    CHECK(cusp_fusion(s3, s6, nullptr, 0, &all.p) == CUSP_OK);
    CHECK(contains(all.str(), "\"count\":4"));
    Out pinned;
    CHECK(cusp_fusion(s3, s6, "2a=2a", 0, &pinned.p) == CUSP_OK);
    CHECK(contains(pinned.str(), "\"count\":1"));
    Out badpin;
    CHECK(cusp_fusion(s3, s6, "1a=2a", 0, &badpin.p) == CUSP_INPUT);
    Out budget;
    CHECK(cusp_fusion(s3, s6, nullptr, 2, &budget.p) == CUSP_BUDGET);
    CHECK(contains(budget.str(), "\"complete\":false"));
    Out im;
    CHECK(cusp_fusion_images(z2, s3, "2a", 0, &im.p) == CUSP_OK);
    CHECK(contains(im.str(), "\"images\":[\"2a\"]"));
    // S6 does not embed in S3
    Out none;
    CHECK(cusp_fusion(s6, s3, nullptr, 0, &none.p) == CUSP_INPUT);
    cusp_table_free(s3);
    cusp_table_free(s6);
    cusp_table_free(z2);
}

TEST_CASE("extrapolation") {
    Out a, b, c;
    REQUIRE(cusp_zeta_extrapolate("E(3)", 3, &a.p) == CUSP_OK);
    CHECK(a.str() == "1");
    REQUIRE(cusp_zeta_extrapolate("E(4)", 2, &b.p) == CUSP_OK);
    CHECK(b.str() == "-1");
    CHECK(cusp_zeta_extrapolate("2", 2, &c.p) == CUSP_INPUT);
    CHECK(cusp_zeta_extrapolate("E(", 2, &c.p) == CUSP_INPUT);
}

TEST_CASE("chevalley data") {
    Out f4, rep, list;
    REQUIRE(cusp_chev("F4", 0, &f4.p) == CUSP_OK);
    CHECK(contains(f4.str(), "\"commutator_failures\":0"));
    REQUIRE(cusp_chev("u31", 1, &rep.p) == CUSP_OK);
    CHECK(contains(rep.str(), "\"order\":16"));
    CHECK(contains(rep.str(), "\"matrix\""));
    REQUIRE(cusp_chev("list", 0, &list.p) == CUSP_OK);
    CHECK(contains(list.str(), "u15"));
    CHECK(cusp_chev("u99", 0, &rep.p) == CUSP_INPUT);
}
