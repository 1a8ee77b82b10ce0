#pragma once
#include <gmpxx.h>

#include "errors.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cusp {

using Rational = mpq_class;
using BigInt = mpz_class;

// Largest conductor we are willing to work in.
constexpr int kMaxConductor = 1 << 16;

// Element of Q(zeta_n), kept in Zumbroich basis with minimal conductor.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long v);
    Cyclotomic(const Rational& r);

    static Cyclotomic root(int n, long k = 1);  // E(n)^k
    static Cyclotomic from_dense(int n, std::vector<Rational> coeffs);

    int conductor() const { return n_; }
    const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return n_ == 1; }
    Rational rational_value() const;  // throws unless rational
    std::optional<BigInt> as_integer() const;

    Cyclotomic conj() const;
    Cyclotomic galois(long k) const;  // zeta -> zeta^k, gcd(k,n)=1
    Cyclotomic pow(unsigned long e) const;
    Cyclotomic inverse() const;  // via the norm over Q

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Total order on canonical forms; only used for deterministic sorting.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;
    static Cyclotomic parse(const std::string& text);

private:
    std::vector<Rational> dense(int m) const;  // coefficients lifted to conductor m
    int n_ = 1;
    std::vector<std::pair<int, Rational>> terms_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

// Raised for unparsable text; pos is a 0-based offset.
struct ParseError : InputError {
    ParseError(const std::string& msg, size_t pos)
        : InputError(msg + " at position " + std::to_string(pos)), pos(pos) {}
    size_t pos;
};

}  // namespace cusp
