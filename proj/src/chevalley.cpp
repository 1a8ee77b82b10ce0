#include "chevalley.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "cyclotomic.hpp"
#include "errors.hpp"

namespace cusp {

int RootSystem::find(const RootVec& r) const {
    auto it = index.find(r);
    return it == index.end() ? -1 : it->second;
}

int RootSystem::height(int r) const {
    int h = 0;
    for (int c : roots[r]) h += c;
    return h;
}

int RootSystem::inner(const RootVec& a, const RootVec& b) const {
    int s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) s += a[i] * gram[i][j] * b[j];
    return s;
}

namespace {

std::vector<std::vector<int>> gram_for(const std::string& t) {
    auto simply_laced = [](int n, std::vector<std::pair<int, int>> edges) {
        std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (auto [a, b] : edges) g[a][b] = g[b][a] = -1;
        return g;
    };
    if (t == "C2") return {{2, -2}, {-2, 4}};
    if (t == "F4") return {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    if (t == "D4") return simply_laced(4, {{0, 1}, {1, 2}, {1, 3}});
    if (t == "E6") return simply_laced(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
    throw InputError("unknown root system type '" + t + "' (expected C2, D4, F4, E6)");
}

RootVec add(RootVec a, const RootVec& b, int k = 1) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
}

}  // namespace

RootSystem root_system(const std::string& type) {
    RootSystem rs;
    rs.type = type;
    rs.gram = gram_for(type);
    rs.rank = int(rs.gram.size());
    const int n = rs.rank;
    rs.cartan.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.cartan[i][j] = 2 * rs.gram[i][j] / rs.gram[j][j];

    std::vector<RootVec> pos;
    std::map<RootVec, int> seen;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        seen[e] = int(pos.size());
        pos.push_back(e);
    }
    // Grow by simple roots using root strings: b + a_i is a root iff q > 0
    // where q = p - <b, a_i^v> and p is the length of the downward string.
    for (size_t k = 0; k < pos.size(); ++k) {
        RootVec b = pos[k];
        for (int i = 0; i < n; ++i) {
            RootVec ai(n, 0);
            ai[i] = 1;
            if (b == ai) continue;
            RootVec up = add(b, ai);
            if (seen.count(up)) continue;
            int p = 0;
            while (seen.count(add(b, ai, -(p + 1)))) ++p;
            int pairing = 2 * rs.inner(b, ai) / rs.gram[i][i];
            if (p - pairing > 0) {
                seen[up] = int(pos.size());
                pos.push_back(up);
            }
        }
    }
    std::stable_sort(pos.begin(), pos.end(), [](const RootVec& a, const RootVec& b) {
        int ha = 0, hb = 0;
        for (int c : a) ha += c;
        for (int c : b) hb += c;
        return ha < hb;
    });
    rs.npos = int(pos.size());
    rs.roots = pos;
    for (const auto& r : pos) rs.roots.push_back(add(RootVec(n, 0), r, -1));
    for (size_t i = 0; i < rs.roots.size(); ++i) rs.index[rs.roots[i]] = int(i);
    return rs;
}

int ChevalleyBasis::p_string(int r, int s) const {
    int p = 0;
    while (rs_.find(add(rs_.roots[s], rs_.roots[r], -(p + 1))) >= 0) ++p;
    return p;
}

int ChevalleyBasis::Npos(int a, int b) {
    if (a > b) return -Npos(b, a);
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const RootVec xi = add(rs_.roots[a], rs_.roots[b]);
    // Extraspecial pair (g, d) of xi: g is the earliest root with xi - g positive.
    int g = -1, d = -1;
    for (int c = 0; c < rs_.npos; ++c) {
        int e = rs_.find(add(xi, rs_.roots[c], -1));
        if (e >= 0 && rs_.positive(e)) {
            g = c, d = e;
            break;
        }
    }
    int val;
    if (g == a) {
        val = p_string(a, b) + 1;
    } else {
        // Four-root identity applied to (g, d, -a, -b).
        Rational sum = 0;
        int na = rs_.neg(a), nb = rs_.neg(b);
        int t1 = rs_.find(add(rs_.roots[d], rs_.roots[a], -1));
        if (t1 >= 0)
            sum += Rational(Nany(d, na) * Nany(g, nb)) / rs_.inner(t1, t1);
        int t2 = rs_.find(add(rs_.roots[g], rs_.roots[a], -1));
        if (t2 >= 0)
            sum += Rational(Nany(na, g) * Nany(d, nb)) / rs_.inner(t2, t2);
        Rational v = sum * rs_.inner(xi, xi) / Npos(g, d);
        if (v.get_den() != 1)
            throw MismatchError("non-integral structure constant N(" + root_label(rs_.roots[a]) +
                                "," + root_label(rs_.roots[b]) + ") = " + v.get_str());
        val = int(v.get_num().get_si());
    }
    memo_[key] = val;
    return val;
}

int ChevalleyBasis::Nany(int r, int s) {
    int t = rs_.find(add(rs_.roots[r], rs_.roots[s]));
    if (t < 0) return 0;
    bool pr = rs_.positive(r), ps = rs_.positive(s);
    if (pr && ps) return Npos(r, s);
    if (!pr && !ps) return -Npos(rs_.neg(r), rs_.neg(s));
    int u = rs_.neg(t);  // r + s + u = 0
    if (rs_.positive(s) == rs_.positive(u))
        return Nany(s, u) * rs_.inner(u, u) / rs_.inner(r, r);
    return Nany(u, r) * rs_.inner(u, u) / rs_.inner(s, s);
}

ChevalleyBasis::ChevalleyBasis(RootSystem rs) : rs_(std::move(rs)) {
    const int R = int(rs_.roots.size());
    table_.assign(R, std::vector<int>(R, 0));
    for (int r = 0; r < R; ++r)
        for (int s = 0; s < R; ++s) table_[r][s] = Nany(r, s);
}

int ChevalleyBasis::N(int r, int s) const { return table_[r][s]; }

std::vector<long> ChevalleyBasis::bracket(int x, int y) const {
    const int R = int(rs_.roots.size());
    std::vector<long> out(dim(), 0);
    auto pairing = [&](int r, int i) {  // <r, a_i^v>
        RootVec ai(rs_.rank, 0);
        ai[i] = 1;
        return 2 * rs_.inner(rs_.roots[r], ai) / rs_.gram[i][i];
    };
    if (x < R && y < R) {
        if (y == rs_.neg(x)) {
            // h_r = sum_i n_i (a_i,a_i)/(r,r) h_i
            int rr = rs_.inner(x, x);
            for (int i = 0; i < rs_.rank; ++i)
                out[R + i] = long(rs_.roots[x][i]) * rs_.gram[i][i] / rr;
        } else if (int t = rs_.find(add(rs_.roots[x], rs_.roots[y])); t >= 0) {
            out[t] = table_[x][y];
        }
    } else if (x < R) {
        out[x] = -pairing(x, y - R);
    } else if (y < R) {
        out[y] = pairing(y, x - R);
    }
    return out;
}

std::vector<std::vector<long>> ChevalleyBasis::ad(int r) const {
    const int n = dim();
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) {
        auto col = bracket(r, j);
        for (int i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

std::vector<std::vector<long>> ChevalleyBasis::exp_ad(int r) const {
    const int n = dim();
    auto X = ad(r);
    std::vector<std::vector<long>> sum(n, std::vector<long>(n, 0)), P(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) sum[i][i] = P[i][i] = 1;
    long fact = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<long>> Q(n, std::vector<long>(n, 0));
        bool nonzero = false;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (!P[i][l]) continue;
                for (int j = 0; j < n; ++j) Q[i][j] += P[i][l] * X[l][j];
            }
        P.swap(Q);
        fact *= k;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!P[i][j]) continue;
                nonzero = true;
                if (P[i][j] % fact) throw MismatchError("divided power not integral");
                sum[i][j] += P[i][j] / fact;
            }
        if (!nonzero) break;
    }
    return sum;
}

MatrixGF2 ChevalleyBasis::generator(int r) const {
    auto E = exp_ad(r);
    MatrixGF2 m(dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) m.set(i, j, (E[i][j] % 2) != 0);
    return m;
}

const ChevalleyBasis& chevalley_basis(const std::string& type) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<ChevalleyBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[type];
    if (!slot) slot = std::make_unique<ChevalleyBasis>(root_system(type));
    return *slot;
}

RootVec parse_root(const std::string& digits) {
    RootVec r;
    for (char c : digits) {
        if (c == '-' && r.empty() && digits.size() > 1) continue;
        if (c < '0' || c > '9') throw InputError("bad root label '" + digits + "'");
        r.push_back(c - '0');
    }
    if (!digits.empty() && digits[0] == '-')
        for (int& c : r) c = -c;
    return r;
}

std::string root_label(const RootVec& r) {
    std::string s;
    bool neg = false;
    for (int c : r) neg |= c < 0;
    if (neg) s += '-';
    for (int c : r) s += char('0' + (c < 0 ? -c : c));
    return s;
}

MatrixGF2 adjoint_generator(const std::string& type, const RootVec& root) {
    const auto& cb = chevalley_basis(type);
    int r = cb.roots().find(root);
    if (r < 0) throw InputError("'" + root_label(root) + "' is not a root of " + type);
    return cb.generator(r);
}

namespace {

struct RepSpec {
    const char* name;
    const char* type;
    std::vector<const char*> word;
    int order;
    const char* cls;
    const char* note;
};

const std::vector<RepSpec>& rep_specs() {
    static const std::vector<RepSpec> specs = {
        {"c2_g1", "C2", {"10", "01"}, 4, "", "regular unipotent x_a(1)x_b(1) in Sp4(2)"},
        {"d4_g1", "D4", {"1000", "0100", "0010", "0001"}, 8, "", "regular unipotent in SO8+(2)"},
        {"u31", "F4", {"1000", "0100", "0010", "0001"}, 16, "16a", "regular unipotent, A = Z/4"},
        {"u29", "F4", {"0122", "1000", "0100", "0010"}, 8, "8j", "dim C_G(u) = 6, A = Z/2"},
        {"u24", "F4", {"1100", "0120", "0001", "0011"}, 8, "8a", "dim C_G(u) = 8, A = D8"},
        {"u17", "F4", {"1110", "1220", "0011", "0122"}, 4, "4l", "dim C_G(u) = 12, A = S3"},
        {"u15", "E6", {"010000", "001000", "000100", "010110"}, 4, "4k",
         "unipotent part of the E6 cuspidal support"},
    };
    return specs;
}

}  // namespace

std::vector<std::string> representative_names() {
    std::vector<std::string> v;
    for (const auto& s : rep_specs()) v.push_back(s.name);
    return v;
}

ClassRepresentative named_representative(const std::string& name) {
    for (const auto& s : rep_specs()) {
        if (name != s.name) continue;
        ClassRepresentative rep{s.name, s.type, {}, {}, s.order, s.cls, s.note};
        const auto& cb = chevalley_basis(s.type);
        rep.matrix = MatrixGF2::identity(cb.dim());
        for (const char* w : s.word) {
            rep.word.push_back(parse_root(w));
            rep.matrix = rep.matrix * adjoint_generator(s.type, rep.word.back());
        }
        uint64_t o = element_order(rep.matrix);
        if (o != uint64_t(s.order))
            throw MismatchError(name + " has order " + std::to_string(o) + ", expected " +
                                std::to_string(s.order));
        return rep;
    }
    throw InputError("unknown representative '" + name + "'");
}

std::vector<MatrixGF2> subgroup_generators(const std::string& name) {
    std::string type;
    std::vector<std::pair<int, bool>> simple;  // (index, include negative)
    if (name == "f4_P") {
        type = "F4";
        simple = {{0, true}, {1, true}, {2, true}, {3, false}};
    } else if (name == "e6_L") {
        type = "E6";
        simple = {{1, true}, {2, true}, {3, true}, {4, true}};
    } else {
        type = name;
        const auto& rs = chevalley_basis(type).roots();
        for (int i = 0; i < rs.rank; ++i) simple.push_back({i, true});
    }
    const auto& cb = chevalley_basis(type);
    std::vector<MatrixGF2> gens;
    for (auto [i, both] : simple) {
        gens.push_back(cb.generator(i));
        if (both) gens.push_back(cb.generator(cb.roots().neg(i)));
    }
    return gens;
}

CommutatorCheck check_commutators(const std::string& type) {
    const auto& cb = chevalley_basis(type);
    const auto& rs = cb.roots();
    std::vector<MatrixGF2> X;
    for (int r = 0; r < rs.npos; ++r) X.push_back(cb.generator(r));
    CommutatorCheck out;
    for (int r = 0; r < rs.npos; ++r)
        for (int s = 0; s < rs.npos; ++s) {
            if (r == s) continue;
            ++out.pairs;
            MatrixGF2 lhs = X[s] * X[r] * X[s] * X[r];  // [x_s(1), x_r(1)]
            MatrixGF2 rhs = MatrixGF2::identity(cb.dim());
            int rs_sum = rs.find(add(rs.roots[r], rs.roots[s]));
            if (rs_sum >= 0) {
                if (cb.N(r, s) % 2) rhs = rhs * X[rs_sum];
                int t21 = rs.find(add(rs.roots[rs_sum], rs.roots[r]));
                if (t21 >= 0 && (cb.N(r, s) * cb.N(r, rs_sum) / 2) % 2) rhs = rhs * X[t21];
                int t12 = rs.find(add(rs.roots[rs_sum], rs.roots[s]));
                if (t12 >= 0 && (cb.N(s, r) * cb.N(s, rs_sum) / 2) % 2) rhs = rhs * X[t12];
            }
            bool ok = lhs == rhs && (X[r] * X[r]).is_identity();
            if (!ok) {
                ++out.failures;
                out.failed.push_back(root_label(rs.roots[r]) + "," + root_label(rs.roots[s]));
            }
        }
    return out;
}

}  // namespace cusp
