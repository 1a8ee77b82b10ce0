// Acceptance runner: one PASS/FAIL/SKIP line per criterion.
// Table data for criteria 6-7 is read from $CUSP_DATA_DIR (or argv[1]):
//   f4.ctab, e6.ctab                       ambient tables
//   f4_P.ctab + f4_P.track, e6_L.ctab + e6_L.track
// A .track file holds lines "<representative> <subgroup class name>", e.g. "u17 4c".
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "chartab.hpp"
#include "chevalley.hpp"
#include "ctab.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "fusion.hpp"
#include "oracles.hpp"
#include "verify.hpp"

using namespace cusp;
namespace fs = std::filesystem;

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Result {
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

struct Checker {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    Result result(const std::string& ok_detail) const {
        if (failures.empty()) return {Outcome::Pass, ok_detail};
        std::string d;
        for (const auto& f : failures) d += (d.empty() ? "" : "; ") + f;
        return {Outcome::Fail, d};
    }
};

// every report the runner produces, for the unit-modulus property
std::vector<ZetaReport> g_reports;

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

bool hermitian_involutive(const FourierMatrix& m) {
    const size_t n = m.entries.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!(m.entries[i][j] == m.entries[j][i].conj())) return false;
            Cyclotomic s;
            for (size_t k = 0; k < n; ++k) s = s + m.entries[i][k] * m.entries[k][j];
            if (!(s == Cyclotomic(i == j ? 1 : 0))) return false;
        }
    return true;
}

Result fourier() {
    Checker c;
    std::vector<std::string> sizes;
    for (const char* g : {"Z2", "Z3", "Z4", "S3", "S4"}) {
        try {
            FourierMatrix m = fourier_matrix(GammaGroup::get(g));
            c.expect(hermitian_involutive(m), std::string(g) + " not hermitian/involutive");
            sizes.push_back(std::string(g) + ":" + std::to_string(m.entries.size()));
        } catch (const std::exception& e) {
            c.expect(false, std::string(g) + ": " + e.what());
        }
    }
    return c.result("hermitian and Y^2 = I for " + join(sizes));
}

Result printed() {
    Checker c;
    int n = 0;
    for (const auto& pr : printed_rows()) {
        ++n;
        Combination got = almost_character_row(pr.type, pr.pair);
        for (const auto& e : family_data(pr.type).entries) {
            Cyclotomic want, have;
            for (const auto& [name, v] : pr.terms)
                if (name == e.name) want = Cyclotomic::parse(v);
            for (const auto& [name, v] : got)
                if (name == e.name) have = v;
            c.expect(have == want, pr.type + " R" + pr.pair + " at " + e.name + ": " + have.str() + " != " + want.str());
        }
    }
    c.expect(n == 6, "expected 6 printed rows, have " + std::to_string(n));
    return c.result(std::to_string(n) + " rows, every family member compared (absent = 0)");
}

Result sp4() {
    Checker c;
    ZetaReport r = verify_sp4();
    g_reports.push_back(r);
    c.expect(r.r_value == Cyclotomic(2), "R(g1) = " + r.r_value.str());
    c.expect(r.zeta == Cyclotomic(1), "zeta = " + r.zeta.str());
    c.expect(r.r_norm == Cyclotomic(1), "<R,R> = " + r.r_norm.str());
    c.expect(r.full_match, "R != zeta chi somewhere");
    auto has = [&](const std::string& prefix) {
        for (const auto& a : r.audit)
            if (a.rfind("ok   " + prefix, 0) == 0) return true;
        return false;
    };
    c.expect(has("g1: x_a(1)x_b(1) has order 4"), "g1 order stage missing");
    c.expect(has("g1~g1^-1: conjugate"), "g1 ~ g1^-1 stage missing");
    return c.result("R(g1) = 2, zeta = 1, <R,R> = 1, g1 order 4, g1 ~ g1^-1, " + std::to_string(r.audit.size()) +
                    " stages");
}

Result oracle_equivalence() {
    Checker c;
    CharacterTable ds = character_table(Group(10, subgroup_generators("C2")), "Sp4(2)");
    CharacterTable mn = symmetric_table(6);
    c.expect(oracle::fingerprints(ds) == oracle::fingerprints(mn), "fingerprints differ");
    c.expect(oracle::tables_equivalent(ds, mn), "no class/character bijection");
    return c.result("11x11, degree/class-size fingerprints and a full row/column bijection agree");
}

Result chevalley() {
    Checker c;
    const std::vector<std::pair<std::string, int>> want = {{"c2_g1", 4}, {"d4_g1", 8}, {"u31", 16}, {"u29", 8},
                                                           {"u24", 8},   {"u17", 4},   {"u15", 4}};
    for (const auto& [name, order] : want) {
        try {
            auto rep = named_representative(name);
            c.expect(element_order(rep.matrix) == uint64_t(order), name + " order");
        } catch (const std::exception& e) {
            c.expect(false, name + ": " + e.what());
        }
    }
    int pairs = 0;
    for (const char* t : {"C2", "D4", "F4", "E6"}) {
        auto cc = check_commutators(t);
        pairs += cc.pairs;
        c.expect(cc.failures == 0, std::string(t) + ": " + std::to_string(cc.failures) + " commutator failures");
    }
    BigInt so8 = Group(28, subgroup_generators("D4")).order();
    BigInt l = Group(78, subgroup_generators("e6_L")).order();
    c.expect(so8 == BigInt("174182400"), "|SO8+(2)| = " + so8.get_str());
    c.expect(l == BigInt("174182400"), "|L| = " + l.get_str());
    return c.result("orders 4,8,16,8,8,4,4; " + std::to_string(pairs) +
                    " commutator relations; |SO8+(2)| = |L| = 174182400");
}

fs::path g_data;

std::optional<CharacterTable> load_if(const std::string& file, Checker& c) {
    if (g_data.empty() || !fs::exists(g_data / file)) return std::nullopt;
    CharacterTable t = read_ctab_file((g_data / file).string());
    auto v = validate_ctab(t);
    c.expect(v.empty(), file + " invalid: " + (v.empty() ? "" : v.front()));
    return t;
}

Result replay() {
    Checker c;
    std::vector<std::string> done;
    if (auto f4 = load_if("f4.ctab", c)) {
        for (const char* pair : {"(g3,theta)", "(g3,theta^2)"}) {
            try {
                ZetaReport r = verify_from_table("F4", *f4, pair, "12o");
                g_reports.push_back(r);
                c.expect(r.r_value == Cyclotomic(16), std::string("F4 R") + pair + "(12o) = " + r.r_value.str());
                c.expect(r.zeta == Cyclotomic(1), std::string("F4 zeta") + pair + " = " + r.zeta.str());
            } catch (const std::exception& e) {
                c.expect(false, std::string("F4 ") + pair + ": " + e.what());
            }
        }
        done.push_back("F4");
    }
    if (auto e6 = load_if("e6.ctab", c)) {
        const Cyclotomic th = Cyclotomic::root(3, 1);
        for (const char* pair : {"(g3,theta)", "(g3,theta^2)"}) {
            try {
                ZetaReport r = verify_from_table("E6", *e6, pair, "12n");
                g_reports.push_back(r);
                c.expect(r.r_value == Cyclotomic(8), std::string("E6 R") + pair + "(12n) = " + r.r_value.str());
                c.expect(r.zeta == Cyclotomic(1), std::string("E6 zeta") + pair + " = " + r.zeta.str());
                c.expect(r.full_match, std::string("E6 R") + pair + " != chi away from 12n");
                // full match against chi gives 8 theta^(+-1) on 12o, 12p
                auto spec = default_spec("E6", pair);
                auto chi = characteristic_function(spec, *e6);
                Cyclotomic o = chi[e6->find_class("12o")], p = chi[e6->find_class("12p")];
                bool ok = (o == Cyclotomic(8) * th && p == Cyclotomic(8) * th * th) ||
                          (o == Cyclotomic(8) * th * th && p == Cyclotomic(8) * th);
                c.expect(ok, std::string("E6 values on 12o, 12p: ") + o.str() + ", " + p.str());
            } catch (const std::exception& e) {
                c.expect(false, std::string("E6 ") + pair + ": " + e.what());
            }
        }
        done.push_back("E6");
    }
    if (done.empty()) return {Outcome::Skip, "no f4.ctab / e6.ctab under $CUSP_DATA_DIR"};
    return c.result(join(done) + ": values and zeta = 1 as required");
}

Result fusion_uniqueness() {
    Checker c;
    std::vector<std::string> done;
    for (auto [sub_file, big_file, track] :
         {std::tuple{"f4_P.ctab", "f4.ctab", "f4_P.track"}, std::tuple{"e6_L.ctab", "e6.ctab", "e6_L.track"}}) {
        if (g_data.empty() || !fs::exists(g_data / sub_file) || !fs::exists(g_data / big_file) ||
            !fs::exists(g_data / track))
            continue;
        auto sub = load_if(sub_file, c);
        auto big = load_if(big_file, c);
        std::ifstream in(g_data / track);
        std::vector<std::pair<std::string, std::string>> tracked;
        for (std::string line; std::getline(in, line);) {
            std::istringstream ls(line);
            std::string rep, cls;
            if (line.empty() || line[0] == '#' || !(ls >> rep >> cls)) continue;
            tracked.push_back({rep, cls});
        }
        FusionResult r = possible_fusions(*sub, *big);
        c.expect(r.complete, std::string(sub_file) + ": node limit reached, uniqueness not established");
        c.expect(!r.maps.empty(), std::string(sub_file) + ": no admissible fusion");
        std::vector<std::string> seen;
        for (const auto& [rep, cls] : tracked) {
            int k = sub->find_class(cls);
            if (k < 0) {
                c.expect(false, std::string(track) + ": unknown class " + cls);
                continue;
            }
            auto im = fusion_images(r, *big, k);
            c.expect(im.size() == 1, rep + " (" + cls + ") has images {" + join(im) + "}");
            std::string expected = named_representative(rep).expected_class;
            if (im.size() == 1 && !expected.empty() && im[0] != expected)
                c.notes.push_back(rep + " -> " + im[0] + " (published label " + expected + ")");
            seen.push_back(rep + "->" + join(im, "|"));
        }
        done.push_back(std::string(sub_file) + " " + std::to_string(r.maps.size()) + " maps: " + join(seen));
    }
    if (done.empty()) return {Outcome::Skip, "no subgroup table + track file under $CUSP_DATA_DIR"};
    Result res = c.result(join(done, "; "));
    if (!c.notes.empty()) res.detail += " [" + join(c.notes, "; ") + "]";
    return res;
}

Cyclotomic random_cyc(std::mt19937& rng) {
    static const int conductors[] = {1, 3, 4, 5, 8, 9, 12, 15};
    Cyclotomic x;
    int n = conductors[rng() % 8];
    for (int t = 0; t < 3; ++t)
        x = x + Cyclotomic(Rational(int(rng() % 11) - 5, 1 + int(rng() % 4))) * Cyclotomic::root(n, int(rng() % n));
    return x;
}

Result properties() {
    Checker c;
    std::mt19937 rng(20261019);
    int laws = 0;
    for (int t = 0; t < 500; ++t, ++laws) {
        Cyclotomic a = random_cyc(rng), b = random_cyc(rng);
        c.expect(a.conj().conj() == a, "conj involution " + a.str());
        c.expect((a * b).conj() == a.conj() * b.conj(), "conj multiplicative");
        c.expect((a + b).conj() == a.conj() + b.conj(), "conj additive");
        c.expect(Cyclotomic::parse(a.str()) == a, "string round trip " + a.str());
        if (c.failures.size() > 5) break;
    }

    int trips = 0;
    std::vector<CharacterTable> tables;
    for (int n = 1; n <= 7; ++n) tables.push_back(symmetric_table(n));
    tables.push_back(character_table(Group(10, subgroup_generators("C2")), "Sp4(2)"));
    for (const char* g : {"Z4", "S3", "S4"}) tables.push_back(GammaGroup::get(g).table());
    for (const auto& t : tables) {
        if (!validate_ctab(t).empty()) continue;
        std::string s = serialize_ctab(t);
        c.expect(serialize_ctab(parse_ctab(s)) == s, "CTAB round trip of " + t.name);
        ++trips;
    }

    // fusion search against brute force, subgroups of S6 (order <= 720)
    auto s6 = symmetric_table(6);
    int fusions = 0;
    for (int trial = 0; trial < 60 && fusions < 10; ++trial) {
        std::vector<MatrixGF2> gens;
        for (int g = 0; g < 1 + int(rng() % 2); ++g) {
            std::vector<int> p{0, 1, 2, 3, 4, 5};
            std::shuffle(p.begin(), p.end(), rng);
            gens.push_back(oracle::perm_matrix(p));
        }
        auto sub = character_table(Group(6, gens));
        auto bf = oracle::brute_force_fusions(sub, s6, 200'000);
        if (bf == std::vector<FusionMap>{{-1}}) continue;
        auto r = possible_fusions(sub, s6);
        c.expect(r.complete && r.maps == bf, "fusion of a subgroup of order " + sub.order.get_str());
        ++fusions;
    }
    {
        auto s3 = symmetric_table(3);
        auto r = possible_fusions(s3, s6);
        c.expect(r.maps == oracle::brute_force_fusions(s3, s6, 1'000'000), "S3 -> S6 fusions");
        ++fusions;
    }

    // reports: the ones collected above plus the Sp4 table route
    {
        auto sp4 = character_table(Group(10, subgroup_generators("C2")), "Sp4(2)");
        g_reports.push_back(verify_from_table("B2", sp4, "(g,eps)", "4a"));
    }
    for (const auto& r : g_reports) c.expect(r.zeta * r.zeta.conj() == Cyclotomic(1), "zeta not unit: " + r.zeta.str());

    const Cyclotomic th = Cyclotomic::root(3, 1), i = Cyclotomic::root(4, 1);
    c.expect(zeta_extrapolate(th, 3) == Cyclotomic(1), "theta^3 != 1");
    c.expect(zeta_extrapolate(i, 2) == Cyclotomic(-1), "i^2 != -1");
    c.expect(zeta_extrapolate(i, 4) == Cyclotomic(1), "i^4 != 1");
    c.expect(zeta_extrapolate(Cyclotomic(1), 7) == Cyclotomic(1), "1^7 != 1");
    c.expect(zeta_extrapolate(th, 2) == th.conj(), "theta^2 != conj theta");

    return c.result(std::to_string(laws) + " cyclotomic law samples, " + std::to_string(trips) + " CTAB round trips, " +
                    std::to_string(fusions) + " fusion cross-checks, " + std::to_string(g_reports.size()) +
                    " unit-modulus reports, extrapolation laws");
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* d = std::getenv("CUSP_DATA_DIR"); d && *d) g_data = d;
    else if (argc > 1) g_data = argv[1];

    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Result()> run;
    };
    const std::vector<Criterion> all = {
        {1, "fourier matrices", 5, fourier},
        {2, "printed almost-character rows", 0, printed},
        {3, "Sp4(2) end to end", 60, sp4},
        {4, "Dixon-Schneider vs Murnaghan-Nakayama", 60, oracle_equivalence},
        {5, "Chevalley representatives and orders", 120, chevalley},
        {6, "F4/E6 replay on supplied tables", 0, replay},
        {7, "fusion image uniqueness on supplied tables", 0, fusion_uniqueness},
        {8, "property suites", 30, properties},
    };
    int failed = 0;
    for (const auto& cr : all) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = cr.run();
        } catch (const std::exception& e) {
            r = {Outcome::Fail, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.outcome == Outcome::Pass && cr.limit_s > 0 && secs > cr.limit_s)
            r = {Outcome::Fail, "took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_s) + " s"};
        const char* tag = r.outcome == Outcome::Pass ? "PASS" : r.outcome == Outcome::Fail ? "FAIL" : "SKIP";
        if (r.outcome == Outcome::Fail) ++failed;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        std::cout << "criterion " << cr.id << ": " << tag << "  " << cr.name << " (" << buf << ") - " << r.detail
                  << std::endl;
    }
    return failed ? 1 : 0;
}
