#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "chevalley.hpp"
#include "ctab.hpp"
#include "errors.hpp"

namespace cusp {

CharFnSpec default_spec(const std::string& type, const std::string& pair) {
    const Cyclotomic th = Cyclotomic::root(3, 1), th2 = Cyclotomic::root(3, 2);
    const bool sq = pair == "(g3,theta^2)";
    CharFnSpec s;
    if (type == "B2" || type == "C2") {
        s.dim_G = 10, s.dim_C = 8, s.component = "Z2", s.lambda = {Cyclotomic(1), Cyclotomic(-1)};
    } else if (type == "D4") {
        s.dim_G = 28, s.dim_C = 24, s.component = "Z2", s.lambda = {Cyclotomic(1), Cyclotomic(-1)};
    } else if (type == "F4") {
        s.dim_G = 52, s.dim_C = 44, s.component = "Z3";
        s.support = {"12o", "12p", "12q"};
        s.lambda = {Cyclotomic(1), sq ? th2 : th, sq ? th : th2};
    } else if (type == "E6") {
        s.dim_G = 78, s.dim_C = 72, s.component = "Z3";
        s.support = {"12n", "12o", "12p"};
        s.lambda = {Cyclotomic(1), sq ? th2 : th, sq ? th : th2};
    } else {
        throw InputError("no characteristic-function data for type '" + type + "'");
    }
    return s;
}

ClassFunction characteristic_function(const CharFnSpec& spec, const CharacterTable& t) {
    if ((spec.dim_G - spec.dim_C) % 2 != 0 || spec.dim_G < spec.dim_C)
        throw InputError("dim G - dim C must be even and non-negative");
    if (spec.support.size() != spec.lambda.size())
        throw InputError("support and lambda lists differ in length");
    BigInt qp = 1;
    for (int i = 0; i < (spec.dim_G - spec.dim_C) / 2; ++i) qp *= spec.q;
    ClassFunction f(t.size(), Cyclotomic());
    for (size_t a = 0; a < spec.support.size(); ++a) {
        int c = t.find_class(spec.support[a]);
        if (c < 0) throw InputError("class " + spec.support[a] + " is not in table " + t.name);
        f[c] = Cyclotomic(Rational(qp)) * spec.lambda[a];
    }
    return f;
}

namespace {

const Cyclotomic& coefficient_of(const Combination& row, const std::string& name) {
    static const Cyclotomic zero;
    for (const auto& [n, c] : row)
        if (n == name) return c;
    return zero;
}

void check_rows(const CharacterTable& t, const std::vector<int>& rows, const std::string& name) {
    if (rows.empty()) throw InputError("no candidate rows for " + name);
    for (int r : rows)
        if (r < 0 || size_t(r) >= t.irr.size())
            throw InputError("row " + std::to_string(r + 1) + " for " + name + " is out of range");
}

}  // namespace

ClassFunction almost_character_values(const CharacterTable& t, const Matching& m, const Combination& row) {
    ClassFunction f(t.size(), Cyclotomic());
    std::set<std::vector<int>> done;
    for (const auto& [name, coeff] : row) {
        auto it = m.find(name);
        if (it == m.end()) throw InputError("character " + name + " is not matched to the table");
        const auto& rows = it->second;
        check_rows(t, rows, name);
        if (rows.size() > 1) {
            if (done.count(rows)) continue;
            std::vector<std::string> group;
            for (const auto& [n2, r2] : m)
                if (r2 == rows) group.push_back(n2);
            if (group.size() != rows.size())
                throw MismatchError("ambiguity group of " + name + " has " + std::to_string(group.size()) +
                                    " names for " + std::to_string(rows.size()) + " rows");
            for (const auto& n2 : group)
                if (coefficient_of(row, n2) != coeff)
                    throw MismatchError("ambiguity group {" + name + ", " + n2 +
                                        "} enters with unequal coefficients; use all matchings");
            done.insert(rows);
        }
        for (int r : rows)
            for (size_t j = 0; j < t.size(); ++j) f[j] += coeff * t.irr[r][j];
    }
    return f;
}

std::vector<ClassFunction> almost_character_values_all(const CharacterTable& t, const Matching& m,
                                                       const Combination& row) {
    std::vector<std::string> names;
    for (const auto& [name, c] : row) {
        auto it = m.find(name);
        if (it == m.end()) throw InputError("character " + name + " is not matched to the table");
        check_rows(t, it->second, name);
        names.push_back(name);
    }
    std::vector<ClassFunction> out;
    std::vector<int> chosen;
    std::set<int> used;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == names.size()) {
            ClassFunction f(t.size(), Cyclotomic());
            for (size_t k = 0; k < names.size(); ++k) {
                const Cyclotomic& c = row[k].second;
                for (size_t j = 0; j < t.size(); ++j) f[j] += c * t.irr[chosen[k]][j];
            }
            out.push_back(std::move(f));
            return;
        }
        for (int r : m.at(names[i])) {
            if (used.count(r)) continue;
            used.insert(r);
            chosen.push_back(r);
            rec(i + 1);
            chosen.pop_back();
            used.erase(r);
        }
    };
    rec(0);
    if (out.empty()) throw MismatchError("no injective matching of the family characters to table rows");
    return out;
}

ZetaReport solve_zeta(const ClassFunction& R, const CharFnSpec& spec, const CharacterTable& t,
                      const std::string& class_name) {
    if (R.size() != t.size()) throw InputError("class function does not match the table");
    int c = t.find_class(class_name);
    if (c < 0) throw InputError("class " + class_name + " is not in table " + t.name);
    ClassFunction chi = characteristic_function(spec, t);
    ZetaReport rep;
    rep.class_name = class_name;
    rep.r_value = R[c];
    rep.chi_value = chi[c];
    rep.sign = spec.sign();
    if (chi[c].is_zero()) throw InputError("characteristic function vanishes on " + class_name);
    if (R[c].is_zero()) throw MismatchError("almost character vanishes on " + class_name + " where chi does not");
    rep.zeta = R[c] / (Cyclotomic(rep.sign) * chi[c]);
    rep.unit = rep.zeta * rep.zeta.conj() == Cyclotomic(1);
    rep.full_match = true;
    for (size_t j = 0; j < t.size(); ++j)
        if (R[j] != Cyclotomic(rep.sign) * rep.zeta * chi[j]) rep.full_match = false;
    rep.r_norm = inner_product(t, R, R);
    rep.chi_norm = inner_product(t, chi, chi);
    std::ostringstream law;
    law << "zeta for G(q^m) is zeta^m; base case q=" << spec.q.get_str() << " gives zeta=" << rep.zeta.str();
    rep.law = law.str();
    return rep;
}

Cyclotomic zeta_extrapolate(const Cyclotomic& zeta, unsigned long m) { return zeta.pow(m); }

namespace {

void stage(bool ok, const std::string& name, const std::string& detail, std::vector<std::string>& audit) {
    audit.push_back(std::string(ok ? "ok   " : "FAIL ") + name + ": " + detail);
    if (!ok) throw MismatchError("stage '" + name + "' failed: " + detail);
}

std::string deg_str(const CharacterTable& t, int i) { return t.degree(i).str(); }

}  // namespace

ZetaReport verify_sp4() {
    std::vector<std::string> audit;
    Group G(10, subgroup_generators("C2"));
    stage(G.order() == 720, "group", "|Sp4(2)| = " + G.order().get_str(), audit);

    EnumeratedGroup E = enumerate_classes(G);
    CharacterTable T = character_table(E, "Sp4(2)");
    stage(T.size() == 11 && orthogonality_violations(T).empty(), "table",
          std::to_string(T.size()) + " irreducibles, orthogonality exact", audit);

    ClassRepresentative rep = named_representative("c2_g1");
    const MatrixGF2& g1 = rep.matrix;
    int order = element_order(g1);
    stage(order == 4, "g1", "x_a(1)x_b(1) has order " + std::to_string(order), audit);
    const int c1 = E.class_of_matrix(g1);
    const std::string g1_class = T.classes[c1].name;
    MatrixGF2 ginv = *g1.inverse();
    MatrixGF2 ba = adjoint_generator("C2", parse_root("01")) * adjoint_generator("C2", parse_root("10"));
    stage(ginv == ba, "inverse", "g1^-1 = x_b(1)x_a(1)", audit);
    Conjugacy cj = are_conjugate(G, g1, ginv);
    stage(cj == Conjugacy::Conjugate, "g1~g1^-1", to_string(cj), audit);

    std::vector<MatrixGF2> bgens;
    for (const char* r : {"10", "01", "11", "21"}) bgens.push_back(adjoint_generator("C2", parse_root(r)));
    Group B(10, bgens);
    stage(B.order() == 16, "borel", "|B(F2)| = " + B.order().get_str(), audit);
    CosetAction act = coset_action(G, B);
    ClassFunction pi = permutation_character(T, act);
    stage(act.degree == 45, "permutation character", "degree " + std::to_string(act.degree), audit);
    auto dec = decompose(T, pi);
    std::ostringstream ds;
    int r9 = -1, sign = -1;
    std::vector<int> five;
    for (auto [i, mult] : dec) {
        ds << deg_str(T, i) << "^" << mult.get_str() << " ";
        long d = T.degree(i).as_integer()->get_si();
        if (d == 9) r9 = i;
        if (d == 5) five.push_back(i);
    }
    for (size_t i = 1; i < T.size(); ++i)
        if (T.degree(int(i)) == Cyclotomic(1)) sign = int(i);
    stage(dec.size() == 5 && r9 >= 0 && five.size() == 2 && sign >= 0, "constituents",
          ds.str() + "-> rho_r = X." + std::to_string(r9 + 1) + ", {rho_sgn_a, rho_sgn_b} = {X." +
              std::to_string(five[0] + 1) + ", X." + std::to_string(five[1] + 1) + "}, rho_x0 = X." +
              std::to_string(sign + 1),
          audit);

    Matching m{{"r", {r9}}, {"sgn_a", five}, {"sgn_b", five}, {"x0", {sign}}};
    Combination row = almost_character_row("B2", "(g,eps)");
    ClassFunction R = almost_character_values(T, m, row);
    auto alts = almost_character_values_all(T, m, row);
    bool same = std::all_of(alts.begin(), alts.end(), [&](const ClassFunction& f) { return f == R; });
    stage(same, "ambiguity", "both degree-5 matchings give the same R", audit);
    Cyclotomic norm = inner_product(T, R, R);
    stage(norm == Cyclotomic(1), "norm", "<R,R> = " + norm.str(), audit);

    // g1' : the other class of regular unipotent elements (order 4, centralizer 2q^2 = 8)
    int c1p = -1, count = 0;
    for (size_t j = 0; j < T.size(); ++j)
        if (T.classes[j].order == 4 && T.centralizer(int(j)) == 8) {
            ++count;
            if (int(j) != c1) c1p = int(j);
        }
    stage(count == 2 && T.centralizer(c1) == 8 && c1p >= 0, "support",
          "g1 in " + g1_class + ", g1' in " + (c1p >= 0 ? T.classes[c1p].name : std::string("?")), audit);

    CharFnSpec spec = default_spec("B2");
    spec.support = {g1_class, T.classes[c1p].name};
    ZetaReport z = solve_zeta(R, spec, T, g1_class);
    z.type = "B2";
    z.pair = "(g,eps)";
    stage(z.r_value == Cyclotomic(2), "R(g1)", z.r_value.str(), audit);
    stage(z.zeta == Cyclotomic(1) && z.unit, "zeta", z.zeta.str(), audit);
    stage(z.full_match, "R = zeta chi", "on all " + std::to_string(T.size()) + " classes", audit);
    z.audit = std::move(audit);
    return z;
}

Matching match_family(const FamilyTable& fam, const CharacterTable& t) {
    std::map<BigInt, std::vector<int>> rows_by_degree;
    for (size_t i = 0; i < t.irr.size(); ++i) {
        auto d = t.degree(int(i)).as_integer();
        if (d) rows_by_degree[*d].push_back(int(i));
    }
    std::map<BigInt, int> names_by_degree;
    for (const auto& e : fam.entries) names_by_degree[e.degree]++;
    Matching m;
    for (const auto& e : fam.entries) {
        auto it = rows_by_degree.find(e.degree);
        if (it == rows_by_degree.end() || int(it->second.size()) < names_by_degree[e.degree])
            throw MismatchError("table " + t.name + " has too few characters of degree " + e.degree.get_str() +
                                " for " + e.name);
        std::vector<int> cand = it->second;
        if (!e.hint.empty()) {
            std::vector<int> hinted;
            std::stringstream ss(e.hint);
            std::string h;
            while (std::getline(ss, h, '|')) {
                if (h.rfind("X.", 0) != 0) continue;
                int r = std::stoi(h.substr(2)) - 1;
                if (std::find(cand.begin(), cand.end(), r) != cand.end()) hinted.push_back(r);
            }
            if (!hinted.empty() && hinted.size() == size_t(std::count(e.hint.begin(), e.hint.end(), '|') + 1))
                cand = hinted;
        }
        m[e.name] = cand;
    }
    return m;
}

ZetaReport verify_from_table(const std::string& type, const CharacterTable& t, const std::string& pair,
                             const std::string& class_name, const TableVerifyOptions& opt) {
    std::vector<std::string> audit;
    auto bad = validate_ctab(t);
    if (!bad.empty())
        throw InputError("table " + t.name + " fails validation (" + std::to_string(bad.size()) +
                         " issue(s)); first: " + bad[0]);
    audit.push_back("table " + t.name + " validates: " + std::to_string(t.size()) + " classes");
    const FamilyTable& fam = family_data(type);
    Combination row = almost_character_row(type, pair);
    Matching m = match_family(fam, t);
    for (const auto& [name, rows] : opt.matching) {
        if (fam.find_name(name) < 0) throw InputError("no character " + name + " in the family of " + type);
        m[name] = rows;
    }
    for (const auto& [name, rows] : m) {
        std::string s;
        for (int r : rows) s += (s.empty() ? "X." : "|X.") + std::to_string(r + 1);
        audit.push_back("match " + name + " -> " + s);
    }
    auto all = almost_character_values_all(t, m, row);
    int c = t.find_class(class_name);
    if (c < 0) throw InputError("class " + class_name + " is not in table " + t.name);
    std::set<std::string> values;
    for (const auto& f : all) values.insert(f[c].str());
    if (values.size() != 1) {
        std::string v;
        for (const auto& s : values) v += " " + s;
        throw MismatchError("R" + pair + " on " + class_name + " depends on the matching:" + v);
    }
    audit.push_back(std::to_string(all.size()) + " matching(s); R" + pair + "(" + class_name + ") = " +
                    *values.begin() + " for all");

    CharFnSpec spec = opt.spec ? *opt.spec : default_spec(type, pair);
    if (!opt.support.empty()) spec.support = opt.support;
    if (spec.support.empty()) {
        // Z2 component: the partner is the unique other class with the same
        // element order and centralizer order, if there is one
        int partner = -1, count = 0;
        if (spec.component == "Z2")
            for (size_t j = 0; j < t.size(); ++j)
                if (int(j) != c && t.classes[j].order == t.classes[c].order && t.centralizer(int(j)) == t.centralizer(c))
                    partner = int(j), ++count;
        if (count == 1) {
            spec.support = {class_name, t.classes[partner].name};
            audit.push_back("support " + class_name + ", " + t.classes[partner].name + " (same order and centralizer)");
        } else {
            spec.support = {class_name};
            spec.lambda = {Cyclotomic(1)};
            audit.push_back("support " + class_name + " only");
        }
    } else if (spec.support.size() != spec.lambda.size()) {
        spec.lambda.resize(spec.support.size(), Cyclotomic(1));
    }
    ZetaReport best;
    int matched = 0;
    for (size_t k = 0; k < all.size(); ++k) {
        ZetaReport z = solve_zeta(all[k], spec, t, class_name);
        if (k == 0 || (z.full_match && !best.full_match)) best = z;
        matched += z.full_match;
    }
    audit.push_back(std::to_string(matched) + " matching(s) give R = sign*zeta*chi on every class");
    best.type = type;
    best.pair = pair;
    best.audit = std::move(audit);
    return best;
}

}  // namespace cusp
