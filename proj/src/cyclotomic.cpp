#include "cyclotomic.hpp"

#include <cctype>
#include <numeric>
#include <ostream>

namespace cusp {

namespace {

struct PrimePower {
    int p, e, pe;
};

std::vector<PrimePower> factor(int n) {
    std::vector<PrimePower> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        PrimePower f{p, 0, 1};
        while (n % p == 0) n /= p, ++f.e, f.pe *= p;
        out.push_back(f);
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

long modinv(long a, long m) {
    long r0 = m, r1 = ((a % m) + m) % m, x0 = 0, x1 = 1;
    while (r1) {
        long q = r0 / r1, t = r0 - q * r1;
        r0 = r1, r1 = t;
        t = x0 - q * x1;
        x0 = x1, x1 = t;
    }
    return ((x0 % m) + m) % m;
}

void check_conductor(long n) {
    if (n < 1 || n > kMaxConductor)
        throw InputError("conductor " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxConductor));
}

// Rewrite the coefficient vector in the Zumbroich basis of Q(zeta_n).
void reduce_basis(int n, std::vector<Rational>& c) {
    for (const auto& f : factor(n)) {
        int m = n / f.pe;
        long minv = f.pe == 1 ? 0 : modinv(m, f.pe);
        int top = f.pe / f.p;
        int step = n / f.p;
        for (int k = 0; k < n; ++k) {
            if (c[k] == 0) continue;
            int digit = int((long(k) * minv) % f.pe) / top;
            if (f.p == 2) {
                if (digit == 1) {
                    c[(k + step) % n] -= c[k];
                    c[k] = 0;
                }
            } else if (digit == 0) {
                for (int i = 1; i < f.p; ++i) c[(k + long(i) * step) % n] -= c[k];
                c[k] = 0;
            }
        }
    }
}

// One attempt to pass to a proper subfield Q(zeta_{n/p}); false if none applies.
bool shrink(int& n, std::vector<Rational>& c) {
    if (n % 4 == 2) {
        int m = n / 2;
        std::vector<Rational> d(m);
        for (int k = 0; k < n; ++k) {
            if (c[k] == 0) continue;
            int j = int((long(k) * ((m + 1) / 2)) % m);
            if (k % 2) d[j] -= c[k];
            else d[j] += c[k];
        }
        n = m;
        c.swap(d);
        reduce_basis(n, c);
        return true;
    }
    for (const auto& f : factor(n)) {
        int p = f.p;
        if (f.e >= 2) {
            bool ok = true;
            for (int k = 0; k < n && ok; ++k)
                if (c[k] != 0 && k % p) ok = false;
            if (!ok) continue;
            std::vector<Rational> d(n / p);
            for (int k = 0; k < n; k += p) d[k / p] = c[k];
            n /= p;
            c.swap(d);
            reduce_basis(n, c);
            return true;
        }
        if (p == 2) continue;
        int m = n / p;
        bool ok = true;
        std::vector<Rational> d(m);
        for (int r = 0; r < m && ok; ++r) {
            int k0 = -1;
            Rational val;
            bool seen = false;
            for (int i = 0; i < p && ok; ++i) {
                int k = r + i * m;
                if (k % p == 0) {
                    k0 = k;
                    if (c[k] != 0) ok = false;
                    continue;
                }
                if (!seen) val = c[k], seen = true;
                else if (c[k] != val) ok = false;
            }
            if (ok && val != 0) d[k0 / p] = -val;
        }
        if (!ok) continue;
        n = m;
        c.swap(d);
        reduce_basis(n, c);
        return true;
    }
    return false;
}

}  // namespace

Cyclotomic::Cyclotomic(long v) {
    if (v) terms_.push_back({0, Rational(v)});
}

Cyclotomic::Cyclotomic(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c != 0) terms_.push_back({0, c});
}

Cyclotomic Cyclotomic::root(int n, long k) {
    check_conductor(n);
    std::vector<Rational> c(n);
    long e = k % n;
    if (e < 0) e += n;
    c[e] = 1;
    return from_dense(n, std::move(c));
}

Cyclotomic Cyclotomic::from_dense(int n, std::vector<Rational> c) {
    check_conductor(n);
    reduce_basis(n, c);
    while (shrink(n, c)) {}
    Cyclotomic out;
    out.n_ = n;
    for (int k = 0; k < n; ++k)
        if (c[k] != 0) out.terms_.push_back({k, c[k]});
    if (out.terms_.empty()) out.n_ = 1;
    return out;
}

std::vector<Rational> Cyclotomic::dense(int m) const {
    std::vector<Rational> c(m);
    int s = m / n_;
    for (const auto& [k, v] : terms_) c[k * s] += v;
    return c;
}

Rational Cyclotomic::rational_value() const {
    if (n_ != 1) throw InputError("value " + str() + " is not rational");
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

std::optional<BigInt> Cyclotomic::as_integer() const {
    if (n_ != 1) return std::nullopt;
    if (terms_.empty()) return BigInt(0);
    if (terms_[0].second.get_den() != 1) return std::nullopt;
    return BigInt(terms_[0].second.get_num());
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (n_ == 1) return *this;
    long kk = k % n_;
    if (kk < 0) kk += n_;
    if (std::gcd(kk, long(n_)) != 1) throw InputError("galois exponent not a unit");
    std::vector<Rational> c(n_);
    for (const auto& [e, v] : terms_) c[(long(e) * kk) % n_] += v;
    return from_dense(n_, std::move(c));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.is_zero()) return *this;
    if (n_ == 1 && o.n_ == 1) {
        Rational v = rational_value() + o.rational_value();
        return *this = Cyclotomic(v);
    }
    long l = std::lcm(long(n_), long(o.n_));
    check_conductor(l);
    auto c = dense(int(l));
    int s = int(l / o.n_);
    for (const auto& [k, v] : o.terms_) c[k * s] += v;
    return *this = from_dense(int(l), std::move(c));
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (is_zero() || o.is_zero()) return *this = Cyclotomic();
    if (o.n_ == 1) {
        for (auto& t : terms_) t.second *= o.terms_[0].second;
        return *this;
    }
    if (n_ == 1) {
        Rational r = terms_[0].second;
        *this = o;
        for (auto& t : terms_) t.second *= r;
        return *this;
    }
    long l = std::lcm(long(n_), long(o.n_));
    check_conductor(l);
    int sa = int(l / n_), sb = int(l / o.n_);
    std::vector<Rational> c(l);
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_) c[(long(ka) * sa + long(kb) * sb) % l] += va * vb;
    return *this = from_dense(int(l), std::move(c));
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
    Cyclotomic r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    if (n_ == 1) return Cyclotomic(Rational(1) / rational_value());
    // Product of the non-trivial Galois conjugates; a * that = norm in Q.
    Cyclotomic others(1);
    for (long k = 2; k < n_; ++k)
        if (std::gcd(k, long(n_)) == 1) others *= galois(k);
    Cyclotomic norm = *this * others;
    return others * Cyclotomic(Rational(1) / norm.rational_value());
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
    size_t m = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < m; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.first != y.first) return x.first < y.first ? -1 : 1;
        int c = cmp(x.second, y.second);
        if (c) return c < 0 ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string Cyclotomic::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms_) {
        std::string t;
        if (k == 0) {
            t = v.get_str();
        } else {
            std::string r = "E(" + std::to_string(n_) + ")";
            if (k != 1) r += "^" + std::to_string(k);
            if (v == 1) t = r;
            else if (v == -1) t = "-" + r;
            else t = v.get_str() + "*" + r;
        }
        if (!out.empty() && t[0] != '-') out += '+';
        out += t;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eat(char ch) {
        ws();
        if (i < s.size() && s[i] == ch) return ++i, true;
        return false;
    }
    BigInt integer() {
        ws();
        size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) throw ParseError("expected integer", b);
        if (i - b > 4000) throw ParseError("integer too long", b);
        return BigInt(s.substr(b, i - b));
    }
    Cyclotomic root_tail() {  // after "E"
        size_t at = i;
        if (!eat('(')) throw ParseError("expected '(' after E", i);
        BigInt n = integer();
        if (!eat(')')) throw ParseError("expected ')'", i);
        if (n < 1 || n > kMaxConductor) throw ParseError("conductor out of range", at);
        long k = 1;
        if (eat('^')) {
            BigInt e = integer();
            BigInt r = e % n;
            k = r.get_si();
        }
        return Cyclotomic::root(int(n.get_si()), k);
    }
    Cyclotomic term() {
        ws();
        if (i < s.size() && s[i] == 'E') {
            ++i;
            return root_tail();
        }
        BigInt num = integer();
        BigInt den = 1;
        if (eat('/')) {
            size_t dp = i;
            den = integer();
            if (den == 0) throw ParseError("zero denominator", dp);
        }
        Rational r(num, den);
        r.canonicalize();
        if (eat('*')) {
            ws();
            if (i >= s.size() || s[i] != 'E') throw ParseError("expected E(n) after '*'", i);
            ++i;
            return Cyclotomic(r) * root_tail();
        }
        return Cyclotomic(r);
    }
    Cyclotomic parse() {
        ws();
        if (i == s.size()) throw ParseError("empty value", i);
        Cyclotomic acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            ws();
            if (i == s.size()) break;
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", i);
        }
        return acc;
    }
};

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& text) {
    Parser p{text};
    return p.parse();
}

}  // namespace cusp
