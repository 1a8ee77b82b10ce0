#include "chartab.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace cusp {

int CharacterTable::find_class(const std::string& n) const {
    for (size_t j = 0; j < classes.size(); ++j)
        if (classes[j].name == n) return int(j);
    return -1;
}

namespace {

using u64 = uint64_t;
using ModVec = std::vector<u64>;
using ModMat = std::vector<ModVec>;

u64 mulmod(u64 a, u64 b, u64 m) { return (unsigned __int128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) { return powmod(a, m - 2, m); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(ModMat& a, u64 p) {
    std::vector<int> piv;
    size_t r = 0;
    const size_t cols = a.empty() ? 0 : a[0].size();
    for (size_t c = 0; c < cols && r < a.size(); ++c) {
        size_t k = r;
        while (k < a.size() && a[k][c] == 0) ++k;
        if (k == a.size()) continue;
        std::swap(a[r], a[k]);
        u64 inv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = mulmod(x, inv, p);
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            u64 f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
        }
        piv.push_back(int(c));
        ++r;
    }
    a.resize(r);
    return piv;
}

ModMat nullspace(ModMat a, u64 p) {
    const size_t n = a.empty() ? 0 : a[0].size();
    auto piv = rref(a, p);
    std::vector<int> is_piv(n, -1);
    for (size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = int(i);
    ModMat basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_piv[f] >= 0) continue;
        ModVec v(n, 0);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - a[i][f]) % p;
        basis.push_back(v);
    }
    return basis;
}

u64 primitive_root(u64 p) {
    std::vector<u64> fs;
    u64 m = p - 1;
    for (u64 q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            fs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) fs.push_back(m);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : fs) ok &= powmod(g, (p - 1) / q, p) != 1;
        if (ok) return g;
    }
}

std::string letters(int k) {
    std::string s;
    do {
        s.insert(s.begin(), char('a' + k % 26));
        k = k / 26 - 1;
    } while (k >= 0);
    return s;
}

}  // namespace

void assign_class_names(CharacterTable& t) {
    std::map<int, int> seen;
    for (auto& c : t.classes) c.name = std::to_string(c.order) + letters(seen[c.order]++);
}

void sort_characters(CharacterTable& t) {
    std::vector<int> idx(t.irr.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        int c = cmp(t.degree(a).rational_value(), t.degree(b).rational_value());
        if (c) return c < 0;
        for (size_t j = 0; j < t.classes.size(); ++j) {
            const Cyclotomic &x = t.irr[a][j], &y = t.irr[b][j];
            if (x.conductor() != y.conductor()) return x.conductor() < y.conductor();
            int d = Cyclotomic::compare(x, y);
            if (d) return d > 0;
        }
        return false;
    });
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<std::string> names;
    for (int i : idx) {
        rows.push_back(t.irr[i]);
        if (!t.char_names.empty()) names.push_back(t.char_names[i]);
    }
    t.irr = std::move(rows);
    t.char_names = std::move(names);
}

CharacterTable character_table(const Group& g, const std::string& name) {
    return character_table(enumerate_classes(g), name);
}

CharacterTable character_table(const EnumeratedGroup& E, const std::string& name) {
    const auto& C = E.classes;
    const size_t r = C.reps.size();
    const u64 N = E.elements.size();

    u64 e = 1;
    for (int o : C.orders) e = std::lcm(e, u64(o));
    u64 ell = e + 1;
    while (!is_prime(ell) || (unsigned __int128)ell * ell <= (unsigned __int128)4 * N) ell += e;

    std::vector<u64> h(r);
    for (size_t j = 0; j < r; ++j) h[j] = C.sizes[j].get_ui() % ell;

    // Class structure constants c[j][k][l] = #{x in C_j : x^-1 z_l in C_k}.
    std::vector<std::vector<int>> members(r);
    for (size_t i = 0; i < N; ++i) members[E.class_of[i]].push_back(int(i));
    std::vector<ModMat> M(r, ModMat(r, ModVec(r, 0)));
    for (size_t j = 0; j < r; ++j)
        for (int x : members[j]) {
            MatrixGF2 xi = *E.elements[x].inverse();
            for (size_t l = 0; l < r; ++l) {
                int k = E.class_of_matrix(xi * C.reps[l]);
                M[j][k][l] += 1;
            }
        }
    for (auto& Mj : M)
        for (auto& row : Mj)
            for (auto& v : row) v %= ell;

    // Split F_l^r into common eigenspaces of all M_j.
    std::vector<ModMat> spaces;
    {
        ModMat id(r, ModVec(r, 0));
        for (size_t i = 0; i < r; ++i) id[i][i] = 1;
        spaces.push_back(id);
    }
    for (size_t j = 1; j < r; ++j) {
        bool all_one = true;
        for (const auto& V : spaces) all_one &= V.size() == 1;
        if (all_one) break;
        std::vector<ModMat> next;
        for (auto& V : spaces) {
            if (V.size() == 1) {
                next.push_back(V);
                continue;
            }
            const size_t k = V.size();
            ModMat Vr = V;
            auto piv = rref(Vr, ell);
            // B[a][b]: coordinate a of M_j v_b in the RREF basis Vr.
            ModMat B(k, ModVec(k, 0));
            for (size_t b = 0; b < k; ++b) {
                ModVec w(r, 0);
                for (size_t s = 0; s < r; ++s) {
                    u64 acc = 0;
                    for (size_t t = 0; t < r; ++t) acc = (acc + mulmod(M[j][s][t], Vr[b][t], ell)) % ell;
                    w[s] = acc;
                }
                for (size_t a = 0; a < k; ++a) B[a][b] = w[piv[a]];
            }
            size_t found = 0;
            for (u64 lam = 0; lam < ell && found < k; ++lam) {
                ModMat A = B;
                for (size_t a = 0; a < k; ++a) A[a][a] = (A[a][a] + ell - lam) % ell;
                ModMat ns = nullspace(A, ell);
                if (ns.empty()) continue;
                ModMat W;
                for (const auto& y : ns) {
                    ModVec v(r, 0);
                    for (size_t a = 0; a < k; ++a)
                        for (size_t s = 0; s < r; ++s) v[s] = (v[s] + mulmod(y[a], Vr[a][s], ell)) % ell;
                    W.push_back(v);
                }
                rref(W, ell);
                found += W.size();
                next.push_back(W);
            }
            if (found != k) throw MismatchError("class matrix is not diagonalisable mod l");
        }
        spaces.swap(next);
    }
    if (spaces.size() != r) throw MismatchError("class algebra did not split into characters");

    const u64 z = powmod(primitive_root(ell), (ell - 1) / e, ell);
    CharacterTable T;
    T.name = name;
    T.order = BigInt((unsigned long)N);
    for (size_t j = 0; j < r; ++j) {
        ClassRecord cr;
        cr.size = C.sizes[j];
        cr.order = C.orders[j];
        for (const auto& [p, pm] : C.power) cr.power[p] = pm[j];
        T.classes.push_back(cr);
    }
    T.reps = C.reps;
    for (const auto& V : spaces) {
        ModVec w = V[0];
        if (w[0] == 0) throw MismatchError("eigenvector vanishes on the identity class");
        u64 inv0 = invmod(w[0], ell);
        for (auto& x : w) x = mulmod(x, inv0, ell);
        u64 S = 0;
        for (size_t l = 0; l < r; ++l)
            S = (S + mulmod(mulmod(w[l], w[C.inverse[l]], ell), invmod(h[l], ell), ell)) % ell;
        u64 d2 = mulmod(N % ell, invmod(S, ell), ell);
        u64 d = 0;
        for (u64 c = 1; c * c <= N; ++c)
            if (mulmod(c, c, ell) == d2) { d = c; break; }
        if (!d) throw MismatchError("no integral degree for a character");
        ModVec chi(r);
        for (size_t l = 0; l < r; ++l) chi[l] = mulmod(mulmod(w[l], d, ell), invmod(h[l], ell), ell);
        std::vector<Cyclotomic> row;
        for (size_t l = 0; l < r; ++l) {
            const int o = C.orders[l];
            const u64 zo = powmod(z, e / o, ell);
            const u64 oinv = invmod(o % ell, ell);
            std::vector<Rational> coeff(o);
            for (int t = 0; t < o; ++t) {
                u64 m = 0;
                for (int k = 0; k < o; ++k) {
                    u64 root = powmod(zo, (u64(o) - (u64(t) * k) % o) % o, ell);
                    m = (m + mulmod(chi[C.power_class[l][k]], root, ell)) % ell;
                }
                m = mulmod(m, oinv, ell);
                if (m > d) throw MismatchError("eigenvalue multiplicity out of range");
                coeff[t] = Rational((unsigned long)m);
            }
            row.push_back(Cyclotomic::from_dense(o, std::move(coeff)));
        }
        T.irr.push_back(std::move(row));
    }
    assign_class_names(T);
    sort_characters(T);
    BigInt sum = 0;
    for (size_t i = 0; i < r; ++i) {
        BigInt d = *T.degree(int(i)).as_integer();
        sum += d * d;
    }
    if (sum != T.order) throw MismatchError("degree squares do not sum to the group order");
    auto bad = orthogonality_violations(T);
    if (!bad.empty()) throw MismatchError("computed table fails orthogonality: " + bad[0]);
    return T;
}

namespace {

using Partition = std::vector<int>;

void partitions_rec(int n, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

long mn_value(std::vector<int> beta, const Partition& mu, size_t i,
              std::map<std::pair<std::vector<int>, size_t>, long>& memo) {
    if (i == mu.size()) return 1;
    auto key = std::make_pair(beta, i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int h = mu[i];
    long total = 0;
    for (size_t a = 0; a < beta.size(); ++a) {
        int b = beta[a], nb = b - h;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int x : beta) between += x > nb && x < b;
        std::vector<int> next = beta;
        next[a] = nb;
        std::sort(next.begin(), next.end());
        long v = mn_value(next, mu, i + 1, memo);
        total += (between % 2) ? -v : v;
    }
    memo[key] = total;
    return total;
}

std::string part_str(const Partition& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

Partition power_type(const Partition& mu, int p) {
    Partition out;
    for (int c : mu) {
        int g = std::gcd(c, p);
        for (int k = 0; k < g; ++k) out.push_back(c / g);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

CharacterTable symmetric_table(int n) {
    if (n < 1 || n > 10) throw InputError("symmetric_table needs 1 <= n <= 10");
    auto parts = partitions(n);
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;

    struct Cls {
        Partition mu;
        BigInt size;
        int order;
    };
    std::vector<Cls> cls;
    for (const auto& mu : parts) {
        BigInt z = 1;
        std::map<int, int> mult;
        for (int c : mu) mult[c]++;
        for (auto [c, m] : mult)
            for (int k = 1; k <= m; ++k) z *= c * k;
        int o = 1;
        for (int c : mu) o = std::lcm(o, c);
        cls.push_back({mu, fact / z, o});
    }
    std::stable_sort(cls.begin(), cls.end(), [](const Cls& a, const Cls& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.size != b.size) return a.size < b.size;
        return a.mu > b.mu;
    });

    CharacterTable T;
    T.name = "S" + std::to_string(n);
    T.order = fact;
    std::vector<int> primes;
    for (int p = 2; p <= n; ++p)
        if (is_prime(p)) primes.push_back(p);
    for (const auto& c : cls) {
        ClassRecord cr;
        cr.size = c.size;
        cr.order = c.order;
        for (int p : primes) {
            Partition img = power_type(c.mu, p);
            for (size_t k = 0; k < cls.size(); ++k)
                if (cls[k].mu == img) cr.power[p] = int(k);
        }
        T.classes.push_back(cr);
        // permutation matrix with cycles laid out consecutively
        std::vector<int> perm(n);
        int start = 0;
        for (int len : c.mu) {
            for (int k = 0; k < len; ++k) perm[start + k] = start + (k + 1) % len;
            start += len;
        }
        MatrixGF2 m(n);
        for (int i = 0; i < n; ++i) m.set(i, perm[i], true);
        T.reps.push_back(m);
    }
    // one memo per cycle type: keys are (beta set, position in mu)
    std::vector<std::map<std::pair<std::vector<int>, size_t>, long>> memo(cls.size());
    for (const auto& lam : parts) {
        std::vector<int> beta;
        const int k = int(lam.size());
        for (int i = 0; i < k; ++i) beta.push_back(lam[i] + (k - 1 - i));
        std::sort(beta.begin(), beta.end());
        std::vector<Cyclotomic> row;
        for (size_t c = 0; c < cls.size(); ++c) row.push_back(Cyclotomic(mn_value(beta, cls[c].mu, 0, memo[c])));
        T.irr.push_back(row);
        T.char_names.push_back(part_str(lam));
    }
    assign_class_names(T);
    sort_characters(T);
    return T;
}

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h) {
    if (f.size() != t.size() || h.size() != t.size())
        throw InputError("class function length does not match the table");
    Cyclotomic s;
    for (size_t j = 0; j < t.size(); ++j) {
        if (f[j].is_zero() || h[j].is_zero()) continue;
        s += Cyclotomic(Rational(t.classes[j].size)) * f[j] * h[j].conj();
    }
    return s * Cyclotomic(Rational(BigInt(1), t.order));
}

ClassFunction permutation_character(const CharacterTable& t, const CosetAction& a) {
    if (t.reps.size() != t.size()) throw InputError("table has no class representatives");
    ClassFunction f;
    for (const auto& r : t.reps) f.push_back(Cyclotomic(long(a.fixed_points(r))));
    return f;
}

std::vector<std::pair<int, BigInt>> decompose(const CharacterTable& t, const ClassFunction& f) {
    std::vector<std::pair<int, BigInt>> out;
    for (size_t i = 0; i < t.irr.size(); ++i) {
        Cyclotomic m = inner_product(t, f, t.irr[i]);
        auto z = m.as_integer();
        if (!z) throw MismatchError("multiplicity " + m.str() + " is not an integer");
        if (*z != 0) out.push_back({int(i), *z});
    }
    return out;
}

std::vector<std::string> orthogonality_violations(const CharacterTable& t) {
    std::vector<std::string> bad;
    const size_t r = t.size();
    if (t.irr.size() != r) {
        bad.push_back("character matrix is not square");
        return bad;
    }
    std::vector<Cyclotomic> sizes;
    for (const auto& c : t.classes) sizes.push_back(Cyclotomic(Rational(c.size)));
    std::vector<std::vector<Cyclotomic>> conj(r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) conj[i].push_back(t.irr[i][j].conj());
    const Cyclotomic ord{Rational(t.order)};
    for (size_t a = 0; a < r; ++a)
        for (size_t b = a; b < r; ++b) {
            Cyclotomic s;
            for (size_t j = 0; j < r; ++j)
                if (!t.irr[a][j].is_zero() && !t.irr[b][j].is_zero())
                    s += sizes[j] * t.irr[a][j] * conj[b][j];
            Cyclotomic want = a == b ? ord : Cyclotomic();
            if (s != want)
                bad.push_back("rows " + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                              ": sum " + s.str() + ", expected " + want.str());
        }
    for (size_t c = 0; c < r; ++c)
        for (size_t d = c; d < r; ++d) {
            Cyclotomic s;
            for (size_t i = 0; i < r; ++i)
                if (!t.irr[i][c].is_zero() && !t.irr[i][d].is_zero()) s += t.irr[i][c] * conj[i][d];
            Cyclotomic want = c == d ? Cyclotomic(Rational(t.centralizer(int(c)))) : Cyclotomic();
            if (s != want)
                bad.push_back("columns " + t.classes[c].name + "," + t.classes[d].name + ": sum " +
                              s.str() + ", expected " + want.str());
        }
    return bad;
}

}  // namespace cusp
