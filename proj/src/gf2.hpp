#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cusp {

// Rows are packed into two 64-bit words, so dimensions up to 128 fit.
constexpr int kMaxDim = 128;
using BitVec = std::array<uint64_t, 2>;

inline bool bit(const BitVec& v, int i) { return (v[i >> 6] >> (i & 63)) & 1; }
inline void flip(BitVec& v, int i) { v[i >> 6] ^= uint64_t(1) << (i & 63); }
inline BitVec operator^(const BitVec& a, const BitVec& b) { return {a[0] ^ b[0], a[1] ^ b[1]}; }
inline bool is_zero(const BitVec& v) { return !(v[0] | v[1]); }

struct BitVecHash {
    size_t operator()(const BitVec& v) const {
        uint64_t h = v[0] * 0x9E3779B97F4A7C15ULL ^ (v[1] + 0x632BE59BD9B4E019ULL);
        return size_t(h ^ (h >> 29));
    }
};

// Square matrix over F2 acting on row vectors from the right: v -> v*M.
class MatrixGF2 {
public:
    MatrixGF2() = default;
    explicit MatrixGF2(int d);
    static MatrixGF2 identity(int d);
    static MatrixGF2 from_rows(const std::vector<std::string>& rows);  // "0101..."

    int dim() const { return d_; }
    bool get(int i, int j) const { return bit(rows_[i], j); }
    void set(int i, int j, bool v);
    const BitVec& row(int i) const { return rows_[i]; }

    BitVec apply(const BitVec& v) const;
    MatrixGF2 operator*(const MatrixGF2& o) const;
    MatrixGF2 operator+(const MatrixGF2& o) const;
    bool is_identity() const;
    int rank() const;
    std::optional<MatrixGF2> inverse() const;
    MatrixGF2 pow(uint64_t e) const;

    friend bool operator==(const MatrixGF2& a, const MatrixGF2& b) {
        return a.d_ == b.d_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const MatrixGF2& a, const MatrixGF2& b) { return !(a == b); }
    // Row-by-row lexicographic order, row i read as the bit string M[i][0..d).
    friend bool operator<(const MatrixGF2& a, const MatrixGF2& b);

    size_t hash() const;
    std::string grid() const;  // one line of 0/1 per row

private:
    int d_ = 0;
    std::vector<BitVec> rows_;
};

struct MatrixHash {
    size_t operator()(const MatrixGF2& m) const { return m.hash(); }
};

// Least n >= 1 with m^n = 1. Throws InputError if m is singular,
// BudgetError if the order exceeds `cap`.
uint64_t element_order(const MatrixGF2& m, uint64_t cap = 1u << 24);

BitVec unit_vector(int i);

}  // namespace cusp
