#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "chevalley.hpp"
#include "doctest.h"
#include "group.hpp"

using namespace cusp;

namespace {

MatrixGF2 perm_matrix(const std::vector<int>& p) {
    MatrixGF2 m(int(p.size()));
    for (size_t i = 0; i < p.size(); ++i) m.set(int(i), p[i], true);
    return m;
}

// Closure by brute force, independent of the stabilizer chain.
size_t closure_size(const std::vector<MatrixGF2>& gens, int d) {
    std::unordered_set<MatrixGF2, MatrixHash> seen{MatrixGF2::identity(d)};
    std::vector<MatrixGF2> q{MatrixGF2::identity(d)};
    for (size_t i = 0; i < q.size(); ++i)
        for (const auto& g : gens) {
            MatrixGF2 y = g * q[i];
            if (seen.insert(y).second) q.push_back(y);
        }
    return q.size();
}

MatrixGF2 random_invertible(int d, std::mt19937& rng) {
    for (;;) {
        MatrixGF2 m(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m.set(i, j, rng() & 1);
        if (m.rank() == d) return m;
    }
}

Group sp4() { return Group(10, subgroup_generators("C2")); }

}  // namespace

TEST_CASE("matrix basics") {
    MatrixGF2 I = MatrixGF2::identity(5);
    CHECK(I.is_identity());
    CHECK(element_order(I) == 1);
    MatrixGF2 s(2);
    CHECK_THROWS_AS(element_order(s), InputError);
    MatrixGF2 c = perm_matrix({1, 2, 0});
    CHECK(element_order(c) == 3);
    CHECK(*c.inverse() * c == MatrixGF2::identity(3));
    CHECK(MatrixGF2::from_rows({"01", "10"}) == perm_matrix({1, 0}));
}

TEST_CASE("orders of the regular unipotent representatives") {
    CHECK(element_order(named_representative("c2_g1").matrix) == 4);
    CHECK(element_order(named_representative("d4_g1").matrix) == 8);
}

TEST_CASE("group order edge cases") {
    CHECK(Group(4, {}).order() == 1);
    CHECK(Group(4, {MatrixGF2::identity(4)}).order() == 1);
    CHECK_THROWS_AS(Group(4, {MatrixGF2::identity(3)}), InputError);
    CHECK_THROWS_AS(Group(2, {MatrixGF2(2)}), InputError);
}

TEST_CASE("stabilizer chain order agrees with brute force") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        int d = 2 + int(rng() % 3);  // GL(4,2) has order 20160
        std::vector<MatrixGF2> gens;
        int k = 1 + int(rng() % 2);
        for (int i = 0; i < k; ++i) gens.push_back(random_invertible(d, rng));
        size_t n = closure_size(gens, d);
        if (n > 10000) continue;
        CHECK(Group(d, gens).order() == (unsigned long)n);
    }
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> p(n), q(n);
        std::iota(p.begin(), p.end(), 0);
        std::rotate(p.begin(), p.begin() + 1, p.end());
        std::iota(q.begin(), q.end(), 0);
        std::swap(q[0], q[1]);
        std::vector<MatrixGF2> gens{perm_matrix(p), perm_matrix(q)};
        CHECK(Group(n, gens).order() == (unsigned long)closure_size(gens, n));
    }
}

TEST_CASE("membership is exact") {
    Group g = sp4();
    CHECK(g.contains(named_representative("c2_g1").matrix));
    std::mt19937 rng(3);
    // A random 10x10 invertible matrix is almost never in Sp4(2); compare
    // with enumeration.
    auto all = g.elements();
    std::unordered_set<MatrixGF2, MatrixHash> els(all.begin(), all.end());
    for (int t = 0; t < 50; ++t) {
        MatrixGF2 m = random_invertible(10, rng);
        CHECK(g.contains(m) == (els.count(m) == 1));
    }
    std::mt19937_64 r64(5);
    for (int t = 0; t < 50; ++t) CHECK(els.count(g.random_element(r64)) == 1);
}

TEST_CASE("conjugacy classes of Sp4(2)") {
    Group g = sp4();
    auto E = enumerate_classes(g);
    const auto& C = E.classes;
    CHECK(C.reps.size() == 11);
    BigInt sum = 0;
    for (const auto& s : C.sizes) sum += s;
    CHECK(sum == 720);
    for (size_t j = 0; j < C.reps.size(); ++j) {
        CHECK(BigInt(720) % C.sizes[j] == 0);
        uint64_t cent = centralizer_order_bruteforce(g, C.reps[j]);
        CHECK(C.sizes[j] * (unsigned long)cent == 720);
        CHECK(element_order(C.reps[j]) == uint64_t(C.orders[j]));
        for (const auto& [p, pm] : C.power) {
            int o = C.orders[j];
            CHECK(C.orders[pm[j]] == o / std::gcd(o, p));
        }
    }
    CHECK(C.primes == std::vector<int>{2, 3, 5});
    // deterministic ordering
    for (size_t j = 1; j < C.reps.size(); ++j)
        CHECK((C.orders[j - 1] < C.orders[j] ||
               (C.orders[j - 1] == C.orders[j] && C.sizes[j - 1] <= C.sizes[j])));
    auto again = conjugacy_classes(g);
    CHECK(again.reps == C.reps);
}

TEST_CASE("cyclic group of order 3") {
    Group g(3, {perm_matrix({1, 2, 0})});
    auto C = conjugacy_classes(g);
    CHECK(C.reps.size() == 3);
    for (const auto& s : C.sizes) CHECK(s == 1);
}

TEST_CASE("enumeration bound") {
    GroupOptions opt;
    opt.enumeration_bound = 100;
    Group g(10, subgroup_generators("C2"), opt);
    CHECK_THROWS_AS(conjugacy_classes(g), BudgetError);
}

TEST_CASE("conjugacy tests") {
    Group g = sp4();
    MatrixGF2 g1 = named_representative("c2_g1").matrix;
    CHECK(are_conjugate(g, g1, *g1.inverse()) == Conjugacy::Conjugate);
    // paper: g1^-1 = x_b(1) x_a(1)
    MatrixGF2 xa = adjoint_generator("C2", {1, 0}), xb = adjoint_generator("C2", {0, 1});
    CHECK(*g1.inverse() == xb * xa);
    CHECK(are_conjugate(g, MatrixGF2::identity(10), g1) == Conjugacy::NotConjugate);
    // exact answers agree with the class map
    auto E = enumerate_classes(g);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        MatrixGF2 a = g.random_element(rng), b = g.random_element(rng);
        bool same = E.class_of_matrix(a) == E.class_of_matrix(b);
        CHECK(are_conjugate(g, a, b) == (same ? Conjugacy::Conjugate : Conjugacy::NotConjugate));
    }
}

TEST_CASE("d4_g1 is conjugate to every reordering of its factors") {
    Group g(28, subgroup_generators("D4"));
    std::vector<RootVec> simple{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    MatrixGF2 g1 = named_representative("d4_g1").matrix;
    std::vector<int> p{0, 1, 2, 3};
    int n = 0;
    do {
        MatrixGF2 m = MatrixGF2::identity(28);
        for (int i : p) m = m * adjoint_generator("D4", simple[i]);
        CHECK(are_conjugate(g, g1, m) == Conjugacy::Conjugate);
        ++n;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(n == 24);
    // An element of a different order is rejected by invariants.
    CHECK(are_conjugate(g, g1, adjoint_generator("D4", simple[0])) == Conjugacy::NotConjugate);
}

TEST_CASE("coset actions") {
    Group g = sp4();
    std::vector<MatrixGF2> ugens;
    for (const char* r : {"10", "01", "11", "21"}) ugens.push_back(adjoint_generator("C2", parse_root(r)));
    Group u(10, ugens);
    CHECK(u.order() == 16);
    auto A = coset_action(g, u);
    CHECK(A.degree == 45);
    CHECK(A.fixed_points(MatrixGF2::identity(10)) == 45);
    for (const auto& im : A.images) {
        std::vector<int> s = im;
        std::sort(s.begin(), s.end());
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    }
    auto T = coset_action(g, g);
    CHECK(T.degree == 1);
    std::mt19937 rng(1);
    Group other(10, {random_invertible(10, rng)});
    CHECK_THROWS_AS(coset_action(g, other), InputError);
}
