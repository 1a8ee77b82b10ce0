#include <set>

#include "chevalley.hpp"
#include "doctest.h"
#include "group.hpp"

using namespace cusp;

TEST_CASE("root counts and labels") {
    CHECK(root_system("C2").roots.size() == 8);
    CHECK(root_system("D4").roots.size() == 24);
    auto f4 = root_system("F4");
    CHECK(f4.roots.size() == 48);
    CHECK(f4.npos == 24);
    auto e6 = root_system("E6");
    CHECK(e6.roots.size() == 72);
    CHECK(e6.adjoint_dim() == 78);
    CHECK(f4.adjoint_dim() == 52);
    auto c2 = root_system("C2");
    std::set<RootVec> pos(c2.roots.begin(), c2.roots.begin() + c2.npos);
    CHECK(pos == std::set<RootVec>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
    // F4: a1, a2 long; a3, a4 short; a2 and a3 joined
    CHECK(f4.gram[0][0] == 4);
    CHECK(f4.gram[1][1] == 4);
    CHECK(f4.gram[2][2] == 2);
    CHECK(f4.gram[1][2] != 0);
    // Roots quoted in the representatives exist.
    for (const char* r : {"0122", "1220", "1110", "0120", "1100", "0011"})
        CHECK(f4.find(parse_root(r)) >= 0);
    CHECK(e6.find(parse_root("010110")) >= 0);
    CHECK_THROWS_AS(root_system("G2"), InputError);
}

TEST_CASE("closed under negation") {
    for (const char* t : {"C2", "D4", "F4", "E6"}) {
        auto rs = root_system(t);
        for (size_t r = 0; r < rs.roots.size(); ++r) {
            RootVec n = rs.roots[r];
            for (int& c : n) c = -c;
            CHECK(rs.find(n) == rs.neg(int(r)));
        }
    }
}

TEST_CASE("structure constants: magnitudes and Jacobi identity over Z") {
    for (const char* t : {"C2", "D4", "F4", "E6"}) {
        const auto& cb = chevalley_basis(t);
        const auto& rs = cb.roots();
        const int R = int(rs.roots.size());
        for (int r = 0; r < R; ++r)
            for (int s = 0; s < R; ++s) {
                RootVec sum = rs.roots[r];
                for (int i = 0; i < rs.rank; ++i) sum[i] += rs.roots[s][i];
                if (rs.find(sum) < 0) {
                    CHECK(cb.N(r, s) == 0);
                    continue;
                }
                CHECK(std::abs(cb.N(r, s)) == cb.p_string(r, s) + 1);
                CHECK(cb.N(r, s) == -cb.N(s, r));
                CHECK(std::abs(cb.N(r, s)) <= 3);
            }
        // Jacobi on all basis triples (E6 on a stride to keep runtime small).
        const int n = cb.dim();
        const int stride = std::string(t) == "E6" ? 3 : 1;
        auto br = [&](const std::vector<long>& x, int y) {
            std::vector<long> out(n, 0);
            for (int i = 0; i < n; ++i) {
                if (!x[i]) continue;
                auto b = cb.bracket(i, y);
                for (int j = 0; j < n; ++j) out[j] += x[i] * b[j];
            }
            return out;
        };
        int bad = 0;
        for (int a = 0; a < n; a += stride)
            for (int b = 0; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
                    auto t1 = br(cb.bracket(a, b), c);
                    auto t2 = br(cb.bracket(b, c), a);
                    auto t3 = br(cb.bracket(c, a), b);
                    for (int i = 0; i < n; ++i)
                        if (t1[i] + t2[i] + t3[i]) { ++bad; break; }
                }
        CHECK_MESSAGE(bad == 0, t);
    }
}

TEST_CASE("generators are involutions and match a sign-free construction") {
    // Over F2 only |N| matters; rebuild x_r(1) from root strings alone.
    for (const char* t : {"C2", "D4", "F4"}) {
        const auto& cb = chevalley_basis(t);
        const auto& rs = cb.roots();
        const int R = int(rs.roots.size()), n = cb.dim();
        for (int r = 0; r < R; ++r) {
            MatrixGF2 x = cb.generator(r);
            CHECK((x * x).is_identity());
            MatrixGF2 y = MatrixGF2::identity(n);
            auto plus = [&](int s, int k) {
                RootVec v = rs.roots[s];
                for (int i = 0; i < rs.rank; ++i) v[i] += k * rs.roots[r][i];
                return rs.find(v);
            };
            for (int s = 0; s < R; ++s) {
                if (s == rs.neg(r)) {
                    // e_{-r} -> e_{-r} + h_r - e_r  (coefficient of e_r is -1)
                    y.set(r, s, !y.get(r, s));
                    int rr = rs.inner(r, r);
                    for (int i = 0; i < rs.rank; ++i)
                        if ((rs.roots[r][i] * rs.gram[i][i] / rr) % 2) y.set(R + i, s, true);
                    continue;
                }
                int s1 = plus(s, 1);
                if (s1 < 0) continue;
                int p = cb.p_string(r, s);
                if ((p + 1) % 2) y.set(s1, s, true);
                int s2 = plus(s, 2);
                if (s2 >= 0 && ((p + 1) * (p + 2) / 2) % 2) y.set(s2, s, true);
            }
            for (int i = 0; i < rs.rank; ++i) {
                int pairing = 2 * rs.inner(rs.roots[r], [&] {
                    RootVec a(rs.rank, 0);
                    a[i] = 1;
                    return a;
                }()) / rs.gram[i][i];
                if (pairing % 2) y.set(r, R + i, true);
            }
            CHECK_MESSAGE(x == y, t << " root " << root_label(rs.roots[r]));
        }
    }
}

TEST_CASE("Steinberg commutator relations") {
    for (const char* t : {"C2", "D4", "F4", "E6"}) {
        auto c = check_commutators(t);
        CHECK(c.pairs > 0);
        CHECK_MESSAGE(c.failures == 0, t << ": " << (c.failed.empty() ? "" : c.failed[0]));
    }
    auto c2 = check_commutators("C2");
    CHECK(c2.pairs == 12);
}

TEST_CASE("named representatives have the expected orders") {
    std::map<std::string, int> expect{{"c2_g1", 4}, {"d4_g1", 8}, {"u31", 16}, {"u29", 8},
                                      {"u24", 8},   {"u17", 4},   {"u15", 4}};
    for (const auto& [name, o] : expect) {
        auto rep = named_representative(name);
        CHECK(element_order(rep.matrix) == uint64_t(o));
        CHECK(rep.expected_order == o);
    }
    CHECK(named_representative("u17").expected_class == "4l");
    CHECK(named_representative("u15").expected_class == "4k");
    CHECK(named_representative("u31").matrix.dim() == 52);
    CHECK_THROWS_AS(named_representative("u99"), InputError);
}

TEST_CASE("Sp4(2) from Chevalley generators has order 720") {
    Group g(10, subgroup_generators("C2"));
    CHECK(g.order() == 720);
}

TEST_CASE("SO8+(2) from Chevalley generators") {
    Group g(28, subgroup_generators("D4"));
    CHECK(g.order() == BigInt("174182400"));
    CHECK(g.contains(named_representative("d4_g1").matrix));
}

TEST_CASE("E6 Levi-type subgroup L") {
    Group g(78, subgroup_generators("e6_L"));
    CHECK(g.order() == BigInt("174182400"));
    CHECK(g.contains(named_representative("u15").matrix));
}
