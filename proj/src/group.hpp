#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include "cyclotomic.hpp"
#include "gf2.hpp"

namespace cusp {

struct GroupOptions {
    uint64_t enumeration_bound = 1'000'000;  // full element/class enumeration
    uint64_t orbit_cap = 20'000'000;         // per stabilizer-chain level
    uint64_t seed = 0x5eed;
};

// Matrix group over F2 with a stabilizer chain for its action on vectors.
// Immutable once constructed.
class Group {
public:
    Group(int dim, std::vector<MatrixGF2> gens, GroupOptions opt = {});

    int dim() const { return d_; }
    const std::vector<MatrixGF2>& generators() const { return gens_; }
    const BigInt& order() const { return order_; }
    const GroupOptions& options() const { return opt_; }
    bool contains(const MatrixGF2& m) const;
    std::vector<BitVec> base() const;
    std::vector<size_t> orbit_sizes() const;

    // Uniformly distributed element, drawn through the stabilizer chain.
    MatrixGF2 random_element(std::mt19937_64& rng) const;

    // All elements; throws BudgetError if |G| exceeds the enumeration bound.
    std::vector<MatrixGF2> elements() const;

private:
    struct Level {
        BitVec point;
        std::vector<int> gens;  // indices into strong_
        std::vector<BitVec> pts;
        std::unordered_map<BitVec, int, BitVecHash> index;
        std::vector<int> parent, via;
    };
    void add_gen(Level& L, int g);
    int push_strong(const MatrixGF2& m);
    MatrixGF2 transversal(const Level& L, int idx) const;
    std::pair<MatrixGF2, size_t> sift(MatrixGF2 h, size_t from) const;
    void new_level(const MatrixGF2& h);
    void start_level(const BitVec& pt);
    BitVec smallest_orbit_point(const MatrixGF2& h, const std::vector<const MatrixGF2*>& gs,
                                bool any_moved) const;
    void build();

    int d_;
    std::vector<MatrixGF2> gens_;
    GroupOptions opt_;
    std::vector<MatrixGF2> strong_, strong_inv_;
    std::vector<Level> levels_;
    BigInt order_;
};

struct ConjClassList {
    std::vector<MatrixGF2> reps;
    std::vector<BigInt> sizes;
    std::vector<int> orders;
    std::vector<int> primes;                 // primes dividing |G|
    std::map<int, std::vector<int>> power;   // p -> class of rep^p
    std::vector<int> inverse;                // class of rep^-1
    std::vector<std::vector<int>> power_class;  // [j][k] = class of rep_j^k, k < order
};

// Element-level data for groups small enough to enumerate.
struct EnumeratedGroup {
    std::vector<MatrixGF2> elements;
    std::unordered_map<MatrixGF2, int, MatrixHash> index;
    std::vector<int> class_of;
    ConjClassList classes;
    int class_of_matrix(const MatrixGF2& m) const;
};

EnumeratedGroup enumerate_classes(const Group& g);
ConjClassList conjugacy_classes(const Group& g);

// Order of the centralizer, counted directly over the elements.
uint64_t centralizer_order_bruteforce(const Group& g, const MatrixGF2& x);

enum class Conjugacy { Conjugate, NotConjugate, Inconclusive };
const char* to_string(Conjugacy c);

// Exact for groups within the enumeration bound. Above it, a random
// collision search is tried for `samples` draws per side; failure to find
// a witness yields Inconclusive unless an invariant separates a and b.
Conjugacy are_conjugate(const Group& g, const MatrixGF2& a, const MatrixGF2& b,
                        uint64_t samples = 40000);

struct CosetAction {
    size_t degree = 0;
    std::vector<std::vector<int>> images;  // per generator of G
    std::vector<MatrixGF2> reps;           // coset i = H * reps[i]
    std::vector<MatrixGF2> subgroup;       // elements of H
    MatrixGF2 key(const MatrixGF2& x) const;  // canonical element of H*x
    std::unordered_map<MatrixGF2, int, MatrixHash> lookup;
    size_t fixed_points(const MatrixGF2& g) const;
};

// Right action of G on the right cosets of H.
CosetAction coset_action(const Group& g, const Group& h, uint64_t max_degree = 1'000'000);

}  // namespace cusp
