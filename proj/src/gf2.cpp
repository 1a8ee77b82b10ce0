#include "gf2.hpp"

#include <bit>

#include "errors.hpp"

namespace cusp {

MatrixGF2::MatrixGF2(int d) : d_(d), rows_(d, BitVec{0, 0}) {
    if (d < 0 || d > kMaxDim) throw InputError("matrix dimension out of range");
}

MatrixGF2 MatrixGF2::identity(int d) {
    MatrixGF2 m(d);
    for (int i = 0; i < d; ++i) flip(m.rows_[i], i);
    return m;
}

MatrixGF2 MatrixGF2::from_rows(const std::vector<std::string>& rows) {
    MatrixGF2 m(int(rows.size()));
    for (int i = 0; i < m.d_; ++i) {
        if (int(rows[i].size()) != m.d_) throw InputError("matrix is not square");
        for (int j = 0; j < m.d_; ++j) {
            char c = rows[i][j];
            if (c != '0' && c != '1') throw InputError("matrix entries must be 0 or 1");
            if (c == '1') flip(m.rows_[i], j);
        }
    }
    return m;
}

void MatrixGF2::set(int i, int j, bool v) {
    if (get(i, j) != v) flip(rows_[i], j);
}

BitVec MatrixGF2::apply(const BitVec& v) const {
    BitVec r{0, 0};
    for (int w = 0; w < 2; ++w) {
        uint64_t x = v[w];
        while (x) {
            int j = w * 64 + std::countr_zero(x);
            x &= x - 1;
            r[0] ^= rows_[j][0];
            r[1] ^= rows_[j][1];
        }
    }
    return r;
}

MatrixGF2 MatrixGF2::operator*(const MatrixGF2& o) const {
    if (d_ != o.d_) throw InputError("dimension mismatch in product");
    MatrixGF2 r(d_);
    for (int i = 0; i < d_; ++i) r.rows_[i] = o.apply(rows_[i]);
    return r;
}

MatrixGF2 MatrixGF2::operator+(const MatrixGF2& o) const {
    if (d_ != o.d_) throw InputError("dimension mismatch in sum");
    MatrixGF2 r(d_);
    for (int i = 0; i < d_; ++i) r.rows_[i] = rows_[i] ^ o.rows_[i];
    return r;
}

bool MatrixGF2::is_identity() const {
    for (int i = 0; i < d_; ++i) {
        BitVec e = unit_vector(i);
        if (rows_[i] != e) return false;
    }
    return true;
}

int MatrixGF2::rank() const {
    std::vector<BitVec> r = rows_;
    int rk = 0;
    for (int c = 0; c < d_ && rk < d_; ++c) {
        int piv = -1;
        for (int i = rk; i < d_; ++i)
            if (bit(r[i], c)) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(r[rk], r[piv]);
        for (int i = 0; i < d_; ++i)
            if (i != rk && bit(r[i], c)) r[i] = r[i] ^ r[rk];
        ++rk;
    }
    return rk;
}

std::optional<MatrixGF2> MatrixGF2::inverse() const {
    std::vector<BitVec> a = rows_;
    MatrixGF2 inv = identity(d_);
    for (int c = 0; c < d_; ++c) {
        int piv = -1;
        for (int i = c; i < d_; ++i)
            if (bit(a[i], c)) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[c], a[piv]);
        std::swap(inv.rows_[c], inv.rows_[piv]);
        for (int i = 0; i < d_; ++i)
            if (i != c && bit(a[i], c)) {
                a[i] = a[i] ^ a[c];
                inv.rows_[i] = inv.rows_[i] ^ inv.rows_[c];
            }
    }
    return inv;
}

MatrixGF2 MatrixGF2::pow(uint64_t e) const {
    MatrixGF2 r = identity(d_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool operator<(const MatrixGF2& a, const MatrixGF2& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    for (int i = 0; i < a.d_; ++i) {
        if (a.rows_[i] == b.rows_[i]) continue;
        // first differing column decides; a 0 there sorts first
        BitVec x = a.rows_[i] ^ b.rows_[i];
        int j = x[0] ? std::countr_zero(x[0]) : 64 + std::countr_zero(x[1]);
        return !bit(a.rows_[i], j);
    }
    return false;
}

size_t MatrixGF2::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL ^ uint64_t(d_);
    for (const auto& r : rows_) {
        h = (h ^ r[0]) * 0x100000001B3ULL;
        h = (h ^ r[1]) * 0x100000001B3ULL;
        h ^= h >> 31;
    }
    return size_t(h);
}

std::string MatrixGF2::grid() const {
    std::string s;
    s.reserve(size_t(d_) * (d_ + 1));
    for (int i = 0; i < d_; ++i) {
        for (int j = 0; j < d_; ++j) s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BitVec unit_vector(int i) {
    BitVec v{0, 0};
    flip(v, i);
    return v;
}

uint64_t element_order(const MatrixGF2& m, uint64_t cap) {
    if (m.rank() != m.dim()) throw InputError("singular matrix has no order");
    MatrixGF2 x = m;
    for (uint64_t n = 1; n <= cap; ++n) {
        if (x.is_identity()) return n;
        x = x * m;
    }
    throw BudgetError("element order exceeds " + std::to_string(cap));
}

}  // namespace cusp
