#pragma once
#include <map>
#include <string>
#include <vector>

#include "gf2.hpp"

namespace cusp {

using RootVec = std::vector<int>;  // coordinates in the simple-root basis

struct RootSystem {
    std::string type;
    int rank = 0;
    std::vector<std::vector<int>> gram;    // (a_i, a_j), shortest roots have length^2 2
    std::vector<std::vector<int>> cartan;  // <a_i, a_j^v> = 2(a_i,a_j)/(a_j,a_j)
    std::vector<RootVec> roots;            // positives by height, then their negatives
    int npos = 0;
    std::map<RootVec, int> index;

    int find(const RootVec& r) const;  // -1 if not a root
    int neg(int r) const { return r < npos ? r + npos : r - npos; }
    int height(int r) const;
    int inner(const RootVec& a, const RootVec& b) const;
    int inner(int a, int b) const { return inner(roots[a], roots[b]); }
    bool positive(int r) const { return r < npos; }
    int adjoint_dim() const { return int(roots.size()) + rank; }
};

// Types C2, D4, F4, E6 with the Bourbaki labelling (E6: a2 is the branch
// node, attached to a4; F4: a1,a2 long; C2: a short, b long).
RootSystem root_system(const std::string& type);

// Integral structure constants [e_r, e_s] = N(r,s) e_{r+s}; extraspecial
// pairs carry positive signs.
class ChevalleyBasis {
public:
    explicit ChevalleyBasis(RootSystem rs);
    const RootSystem& roots() const { return rs_; }
    int N(int r, int s) const;  // 0 when r+s is not a root
    int dim() const { return rs_.adjoint_dim(); }
    // Coefficients of [x, y] for basis elements x, y (roots first, then h_i).
    std::vector<long> bracket(int x, int y) const;
    // ad(e_r) in column convention: column j holds [e_r, basis_j].
    std::vector<std::vector<long>> ad(int r) const;
    // exp(ad e_r) over Z with divided powers.
    std::vector<std::vector<long>> exp_ad(int r) const;
    // x_r(1) reduced mod 2.
    MatrixGF2 generator(int r) const;
    int p_string(int r, int s) const;  // max k with s - k r a root

private:
    int Npos(int a, int b);
    int Nany(int r, int s);
    RootSystem rs_;
    std::map<std::pair<int, int>, int> memo_;
    std::vector<std::vector<int>> table_;
};

const ChevalleyBasis& chevalley_basis(const std::string& type);  // cached per type
MatrixGF2 adjoint_generator(const std::string& type, const RootVec& root);

struct ClassRepresentative {
    std::string name, type;
    std::vector<RootVec> word;
    MatrixGF2 matrix;
    int expected_order;
    std::string expected_class;  // ATLAS-style name in the ambient table, if known
    std::string note;
};

std::vector<std::string> representative_names();
ClassRepresentative named_representative(const std::string& name);

// "f4_P", "e6_L", or "<type>" for the whole adjoint group over F2.
std::vector<MatrixGF2> subgroup_generators(const std::string& name);

struct CommutatorCheck {
    int pairs = 0, failures = 0;
    std::vector<std::string> failed;
};
// [x_r(1), x_s(1)] against the Chevalley commutator formula for all
// ordered pairs of distinct positive roots.
CommutatorCheck check_commutators(const std::string& type);

RootVec parse_root(const std::string& digits);  // "0122" -> {0,1,2,2}
std::string root_label(const RootVec& r);

}  // namespace cusp
