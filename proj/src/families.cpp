#include "families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "errors.hpp"

namespace cusp {

namespace {

Perm compose(const Perm& p, const Perm& q) {  // (p q)(i) = p(q(i))
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

MatrixGF2 perm_matrix(const Perm& p) {
    MatrixGF2 m(int(p.size()));
    for (size_t i = 0; i < p.size(); ++i) m.set(int(i), p[i], true);
    return m;
}

Perm cycles(int n, std::initializer_list<std::initializer_list<int>> cs) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (auto c : cs) {
        std::vector<int> v(c);
        for (size_t k = 0; k < v.size(); ++k) p[v[k]] = v[(k + 1) % v.size()];
    }
    return p;
}

int perm_order(const Perm& p) {
    Perm x = p;
    int o = 1;
    for (;;) {
        bool id = true;
        for (size_t i = 0; i < x.size(); ++i) id &= x[i] == int(i);
        if (id) return o;
        x = compose(x, p);
        ++o;
    }
}

struct GammaSpec {
    int degree;
    std::vector<Perm> gens;
    std::vector<std::pair<std::string, Perm>> reps;
};

GammaSpec spec_for(const std::string& id) {
    if (id == "Z2") return {2, {cycles(2, {{0, 1}})}, {{"1", cycles(2, {})}, {"g", cycles(2, {{0, 1}})}}};
    if (id == "Z3") {
        Perm g = cycles(3, {{0, 1, 2}});
        return {3, {g}, {{"1", cycles(3, {})}, {"g", g}, {"g^2", compose(g, g)}}};
    }
    if (id == "Z4") {
        Perm g = cycles(4, {{0, 1, 2, 3}});
        return {4, {g}, {{"1", cycles(4, {})}, {"g", g}, {"g^2", compose(g, g)}, {"g^3", compose(g, compose(g, g))}}};
    }
    if (id == "S3")
        return {3, {cycles(3, {{0, 1}}), cycles(3, {{0, 1, 2}})},
                {{"1", cycles(3, {})}, {"g2", cycles(3, {{0, 1}})}, {"g3", cycles(3, {{0, 1, 2}})}}};
    if (id == "S4")
        return {4, {cycles(4, {{0, 1}}), cycles(4, {{0, 1, 2, 3}})},
                {{"1", cycles(4, {})},
                 {"g2", cycles(4, {{0, 1}})},
                 {"g2'", cycles(4, {{0, 1}, {2, 3}})},
                 {"g3", cycles(4, {{0, 1, 2}})},
                 {"g4", cycles(4, {{0, 1, 2, 3}})}}};
    if (id == "S5")
        return {5, {cycles(5, {{0, 1}}), cycles(5, {{0, 1, 2, 3, 4}})},
                {{"1", cycles(5, {})},
                 {"g2", cycles(5, {{0, 1}})},
                 {"g2'", cycles(5, {{0, 1}, {2, 3}})},
                 {"g3", cycles(5, {{0, 1, 2}})},
                 {"g4", cycles(5, {{0, 1, 2, 3}})},
                 {"g5", cycles(5, {{0, 1, 2, 3, 4}})},
                 {"g6", cycles(5, {{0, 1, 2}, {3, 4}})}}};
    throw InputError("unsupported Gamma group '" + id + "' (expected Z2, Z3, Z4, S3, S4 or S5)");
}

const Cyclotomic kOne{1}, kMinus{-1};

std::string cyclic_label(const Cyclotomic& v, int order) {
    if (v == kOne) return "1";
    if (order == 2 && v == kMinus) return "eps";
    if (order == 3) return v == Cyclotomic::root(3, 1) ? "theta" : "theta^2";
    if (order == 4) {
        if (v == kMinus) return "-1";
        return v == Cyclotomic::root(4, 1) ? "i" : "-i";
    }
    return v.str();
}

std::string sign_pair_label(const Cyclotomic& a, const Cyclotomic& b) {
    if (a == kOne && b == kOne) return "1";
    if (a == kMinus && b == kMinus) return "eps";
    if (a == kOne) return "eps'";
    return "eps''";
}

bool is_cyclic_generated_by(const GammaClass& c, const std::vector<Perm>& elems, const Perm& g) {
    return size_t(perm_order(g)) == c.centralizer.size() && std::find(elems.begin(), elems.end(), g) != elems.end();
}

// Character labels for C_Gamma(rep), following the conventions of the pairs
// used by the family data.
std::vector<std::string> label_characters(const std::string& id, const GammaClass& c,
                                          const std::vector<Perm>& cent) {
    const auto& T = c.table;
    const int n = int(c.rep.size());
    std::vector<std::string> names;
    auto deg = [&](size_t i) { return T.degree(int(i)).as_integer()->get_si(); };
    for (size_t i = 0; i < T.irr.size(); ++i) {
        std::string s;
        if (id[0] == 'Z') {
            // centralizer is the whole cyclic group: label by the value on its generator
            Perm g = spec_for(id).gens[0];
            s = cyclic_label(c.value(int(i), g), perm_order(g));
        } else if (c.name != "1" && is_cyclic_generated_by(c, cent, c.rep)) {
            s = cyclic_label(c.value(int(i), c.rep), c.order);
        } else if (id == "S3" && c.name == "1") {
            s = deg(i) == 2 ? "r" : (c.value(int(i), cycles(3, {{0, 1}})) == kOne ? "1" : "eps");
        } else if (id == "S4" && c.name == "1") {
            Cyclotomic t = c.value(int(i), cycles(4, {{0, 1}}));
            switch (deg(i)) {
                case 1: s = t == kOne ? "1" : "lambda3"; break;
                case 2: s = "sigma"; break;
                default: s = t == kOne ? "lambda1" : "lambda2";
            }
        } else if (id == "S4" && c.name == "g2") {
            s = sign_pair_label(c.value(int(i), cycles(n, {{0, 1}})), c.value(int(i), cycles(n, {{2, 3}})));
        } else if (id == "S4" && c.name == "g2'") {
            s = deg(i) == 2 ? "r"
                            : sign_pair_label(c.value(int(i), cycles(n, {{0, 1}})),
                                              c.value(int(i), cycles(n, {{0, 2}, {1, 3}})));
        } else {
            s = "chi" + std::to_string(i + 1);
        }
        names.push_back(s);
    }
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size())
        throw MismatchError("ambiguous character labels for C(" + c.name + ") in " + id);
    return names;
}

}  // namespace

Cyclotomic GammaClass::value(int chr, const Perm& x) const {
    int k = enumerated->class_of_matrix(perm_matrix(x));
    if (k < 0) throw InputError("element is not in the centralizer");
    return table.irr[chr][k];
}

GammaGroup::GammaGroup(const std::string& id) : id_(id) {
    GammaSpec sp = spec_for(id);
    const int n = sp.degree;
    elements_.push_back(cycles(n, {}));
    std::map<Perm, int> where{{elements_[0], 0}};
    for (size_t i = 0; i < elements_.size(); ++i)
        for (const auto& g : sp.gens) {
            Perm y = compose(elements_[i], g);
            if (where.emplace(y, int(elements_.size())).second) elements_.push_back(y);
        }
    const size_t N = elements_.size();
    mult_.assign(N, std::vector<int>(N));
    inv_.assign(N, 0);
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) {
            mult_[a][b] = where.at(compose(elements_[a], elements_[b]));
            if (mult_[a][b] == 0) inv_[a] = int(b);
        }

    std::vector<MatrixGF2> mats;
    for (const auto& g : sp.gens) mats.push_back(perm_matrix(g));
    table_ = character_table(Group(n, mats), id);

    for (auto& [name, rep] : sp.reps) {
        GammaClass c;
        c.name = name;
        c.rep = rep;
        c.order = perm_order(rep);
        int r = where.at(rep);
        std::set<int> mem;
        for (size_t g = 0; g < N; ++g) {
            mem.insert(mult_[mult_[g][r]][inv_[g]]);
            if (mult_[g][r] == mult_[r][g]) c.centralizer.push_back(int(g));
        }
        c.members.assign(mem.begin(), mem.end());
        std::vector<MatrixGF2> cg;
        std::vector<Perm> cent;
        for (int g : c.centralizer) {
            cg.push_back(perm_matrix(elements_[g]));
            cent.push_back(elements_[g]);
        }
        c.enumerated = std::make_unique<EnumeratedGroup>(enumerate_classes(Group(n, cg)));
        c.table = character_table(*c.enumerated, "C(" + name + ")");
        c.char_names = label_characters(id, c, cent);
        classes_.push_back(std::move(c));
    }
    std::stable_sort(classes_.begin(), classes_.end(), [](const GammaClass& a, const GammaClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members.size() < b.members.size();
    });
    size_t total = 0;
    for (const auto& c : classes_) total += c.members.size();
    if (total != N) throw MismatchError("class representatives of " + id + " do not cover the group");

    for (size_t k = 0; k < classes_.size(); ++k)
        for (size_t i = 0; i < classes_[k].char_names.size(); ++i)
            pairs_.push_back({int(k), int(i), "(" + classes_[k].name + "," + classes_[k].char_names[i] + ")"});
}

const GammaGroup& GammaGroup::get(const std::string& id) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<GammaGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[id];
    if (!slot) {
        try {
            slot.reset(new GammaGroup(id));
        } catch (...) {
            cache.erase(id);
            throw;
        }
    }
    return *slot;
}

int GammaGroup::index_of(const Perm& p) const {
    auto it = std::find(elements_.begin(), elements_.end(), p);
    return it == elements_.end() ? -1 : int(it - elements_.begin());
}

int GammaGroup::find_pair(const std::string& name) const {
    for (size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i].name == name) return int(i);
    return -1;
}

Cyclotomic GammaGroup::pairing(const GammaPair& x, const GammaPair& y) const {
    const GammaClass& A = classes_.at(x.cls);
    const GammaClass& B = classes_.at(y.cls);
    const int a = index_of(A.rep), b = index_of(B.rep);
    Cyclotomic s;
    for (size_t g = 0; g < elements_.size(); ++g) {
        int gbg = mult_[mult_[g][b]][inv_[g]];
        if (mult_[a][gbg] != mult_[gbg][a]) continue;
        int gag = mult_[mult_[inv_[g]][a]][g];
        s += A.value(x.chr, elements_[gbg]) * B.value(y.chr, elements_[gag]).conj();
    }
    return s * Cyclotomic(Rational(1) / Rational(long(A.centralizer.size() * B.centralizer.size())));
}

std::vector<GammaPair> gamma_pairs(const GammaGroup& g) { return g.pairs(); }

Cyclotomic fourier_pairing(const GammaGroup& g, const GammaPair& x, const GammaPair& y) {
    auto ok = [&](const GammaPair& p) {
        return p.cls >= 0 && size_t(p.cls) < g.classes().size() && p.chr >= 0 &&
               size_t(p.chr) < g.classes()[p.cls].char_names.size();
    };
    if (!ok(x) || !ok(y)) throw InputError("pair does not belong to " + g.id());
    return g.pairing(x, y);
}

FourierMatrix fourier_matrix(const GammaGroup& g) {
    FourierMatrix F;
    F.gamma = g.id();
    F.pairs = g.pairs();
    const size_t n = F.pairs.size();
    F.entries.assign(n, std::vector<Cyclotomic>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) F.entries[i][j] = g.pairing(F.pairs[i], F.pairs[j]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (F.entries[j][i] != F.entries[i][j].conj())
                throw MismatchError("Fourier matrix of " + g.id() + " is not hermitian at " + F.pairs[i].name +
                                    "," + F.pairs[j].name);
            Cyclotomic s;
            for (size_t k = 0; k < n; ++k) s += F.entries[i][k] * F.entries[k][j];
            if (s != Cyclotomic(i == j ? 1 : 0))
                throw MismatchError("Fourier matrix of " + g.id() + " does not square to the identity");
        }
    return F;
}

// ---- family data -----------------------------------------------------------

namespace {

struct RawEntry {
    const char* pair;
    const char* name;
    const char* degree;
    const char* hint;
};

struct RawFamily {
    const char* type;
    const char* gamma;
    std::vector<RawEntry> entries;
    std::vector<std::string> cuspidal;
};

// Degrees at q=2. F4 and E6 degrees and column hints are the published ones;
// B2 and D4 come from the generic degree polynomials.
const std::vector<RawFamily>& raw_families() {
    static const std::vector<RawFamily> f = {
        {"B2", "Z2",
         {{"(1,1)", "r", "9", ""},
          {"(1,eps)", "sgn_a", "5", ""},
          {"(g,1)", "sgn_b", "5", ""},
          {"(g,eps)", "x0", "1", ""}},
         {"(g,eps)"}},
        {"D4", "Z2",
         {{"(1,1)", "(21,1)", "972", ""},
          {"(1,eps)", "(22,)", "300", ""},
          {"(g,1)", "(2,11)", "700", ""},
          {"(g,eps)", "x0", "28", ""}},
         {"(g,eps)"}},
        {"F4", "S4",
         {{"(1,1)", "phi12,4", "584766", "X.37"},
          {"(1,lambda1)", "phi9,6'", "541450", "X.34"},
          {"(1,lambda2)", "phi1,12'", "99450", "X.15"},
          {"(1,lambda3)", "F4^II[1]", "1326", "X.5"},
          {"(1,sigma)", "phi6,6''", "249900", "X.24"},
          {"(g2,1)", "phi16,5", "947700", "X.44"},
          {"(g2,eps)", "F4[-1]", "63700", "X.13"},
          {"(g2,eps')", "phi4,7'", "358020", "X.31"},
          {"(g2,eps'')", "B2:(.2)", "216580", "X.22"},
          {"(g2',1)", "phi9,6''", "541450", "X.33"},
          {"(g2',eps'')", "phi1,12''", "99450", "X.14"},
          {"(g2',eps')", "phi4,8", "322218", "X.27"},
          {"(g2',eps)", "F4^I[1]", "21658", "X.7"},
          {"(g2',r)", "B2:(1.1)", "269892", "X.25"},
          {"(g3,1)", "phi6,6'", "519792", "X.32"},
          {"(g3,theta)", "F4[theta]", "183600", "X.20|X.21"},
          {"(g3,theta^2)", "F4[theta^2]", "183600", "X.20|X.21"},
          {"(g4,1)", "phi4,7''", "358020", "X.30"},
          {"(g4,-1)", "B2:(11.)", "216580", "X.23"},
          {"(g4,i)", "F4[i]", "142884", "X.16|X.17"},
          {"(g4,-i)", "F4[-i]", "142884", "X.16|X.17"}},
         {"(g3,theta)", "(g3,theta^2)"}},
        {"E6", "S3",
         {{"(1,1)", "phi80,7", "864212544", "X.30"},
          {"(1,eps)", "phi20,10", "184660800", "X.20"},
          {"(1,r)", "phi90,8", "902358912", "X.31"},
          {"(g2,1)", "phi60,8", "800196800", "X.29"},
          {"(g2,eps)", "D4,r", "120645056", "X.18"},
          {"(g3,1)", "phi10,9", "192047232", "X.22"},
          {"(g3,theta)", "E6[theta]", "45532800", "X.14|X.15"},
          {"(g3,theta^2)", "E6[theta^2]", "45532800", "X.14|X.15"}},
         {"(g3,theta)", "(g3,theta^2)"}},
    };
    return f;
}

Combination almost_row_unchecked(const FamilyTable& t, const std::string& pair);

void check_printed(const FamilyTable& t) {
    for (const auto& pr : printed_rows()) {
        if (pr.type != t.type) continue;
        Combination got = almost_row_unchecked(t, pr.pair);
        std::map<std::string, Cyclotomic> want;
        for (const auto& [name, coeff] : pr.terms) want[name] = Cyclotomic::parse(coeff);
        std::map<std::string, Cyclotomic> have(got.begin(), got.end());
        if (want != have)
            throw MismatchError("family data for " + t.type + " does not reproduce the published R" + pr.pair);
    }
}

}  // namespace

const std::vector<PrintedRow>& printed_rows() {
    static const std::vector<PrintedRow> rows = {
        {"B2", "(g,eps)", {{"r", "1/2"}, {"sgn_a", "-1/2"}, {"sgn_b", "-1/2"}, {"x0", "1/2"}}},
        {"D4", "(g,eps)", {{"(21,1)", "1/2"}, {"(22,)", "-1/2"}, {"(2,11)", "-1/2"}, {"x0", "1/2"}}},
        {"F4", "(g3,theta)",
         {{"phi12,4", "1/3"}, {"F4^II[1]", "1/3"}, {"phi6,6'", "-1/3"}, {"phi6,6''", "-1/3"},
          {"F4[theta]", "2/3"}, {"F4[theta^2]", "-1/3"}}},
        {"F4", "(g3,theta^2)",
         {{"phi12,4", "1/3"}, {"F4^II[1]", "1/3"}, {"phi6,6'", "-1/3"}, {"phi6,6''", "-1/3"},
          {"F4[theta]", "-1/3"}, {"F4[theta^2]", "2/3"}}},
        {"E6", "(g3,theta)",
         {{"phi80,7", "1/3"}, {"phi20,10", "1/3"}, {"phi10,9", "-1/3"}, {"phi90,8", "-1/3"},
          {"E6[theta]", "2/3"}, {"E6[theta^2]", "-1/3"}}},
        {"E6", "(g3,theta^2)",
         {{"phi80,7", "1/3"}, {"phi20,10", "1/3"}, {"phi10,9", "-1/3"}, {"phi90,8", "-1/3"},
          {"E6[theta]", "-1/3"}, {"E6[theta^2]", "2/3"}}},
    };
    return rows;
}

int FamilyTable::find_pair(const std::string& pair) const {
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i].pair == pair) return int(i);
    return -1;
}

int FamilyTable::find_name(const std::string& name) const {
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i].name == name) return int(i);
    return -1;
}

const FamilyTable& family_data(const std::string& type) {
    static std::mutex mu;
    static std::map<std::string, FamilyTable> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(type); it != cache.end()) return it->second;
    }
    const RawFamily* raw = nullptr;
    for (const auto& f : raw_families())
        if (type == f.type) raw = &f;
    if (!raw) throw InputError("unknown family type '" + type + "' (expected B2, D4, F4 or E6)");
    const GammaGroup& g = GammaGroup::get(raw->gamma);
    FamilyTable t;
    t.type = raw->type;
    t.gamma = raw->gamma;
    t.cuspidal = raw->cuspidal;
    for (const auto& p : g.pairs()) {
        auto it = std::find_if(raw->entries.begin(), raw->entries.end(),
                               [&](const RawEntry& e) { return p.name == e.pair; });
        if (it == raw->entries.end()) throw MismatchError("family " + type + " has no entry for pair " + p.name);
        t.entries.push_back({it->pair, it->name, BigInt(it->degree), 1, it->hint});
    }
    if (t.entries.size() != raw->entries.size()) throw MismatchError("family " + type + " has stray entries");
    check_printed(t);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(type, std::move(t)).first->second;
}

namespace {

Combination almost_row_unchecked(const FamilyTable& t, const std::string& pair) {
    const GammaGroup& g = GammaGroup::get(t.gamma);
    int x = g.find_pair(pair);
    if (x < 0) throw InputError("pair " + pair + " is not in the family of " + t.type);
    Combination out;
    for (const auto& e : t.entries) {
        Cyclotomic c = g.pairing(g.pairs()[g.find_pair(e.pair)], g.pairs()[x]) * Cyclotomic(e.delta);
        if (!c.is_zero()) out.push_back({e.name, c});
    }
    return out;
}

}  // namespace

Combination almost_character_row(const std::string& type, const std::string& pair) {
    return almost_row_unchecked(family_data(type), pair);
}

Combination unipotent_character_row(const std::string& type, const std::string& name) {
    const FamilyTable& t = family_data(type);
    const GammaGroup& g = GammaGroup::get(t.gamma);
    int r = t.find_name(name);
    if (r < 0) r = t.find_pair(name);
    if (r < 0) throw InputError("no unipotent character '" + name + "' in the family of " + type);
    const GammaPair& xr = g.pairs()[g.find_pair(t.entries[r].pair)];
    Combination out;
    for (const auto& p : g.pairs()) {
        Cyclotomic c = g.pairing(p, xr) * Cyclotomic(t.entries[r].delta);
        if (!c.is_zero()) out.push_back({p.name, c});
    }
    return out;
}

Cyclotomic almost_character_degree(const std::string& type, const std::string& pair) {
    const FamilyTable& t = family_data(type);
    Cyclotomic s;
    for (const auto& [name, c] : almost_character_row(type, pair))
        s += c * Cyclotomic(Rational(t.entries[t.find_name(name)].degree));
    return s;
}

}  // namespace cusp
