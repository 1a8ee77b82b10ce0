#pragma once
#include <memory>
#include <string>
#include <vector>

#include "chartab.hpp"

namespace cusp {

using Perm = std::vector<int>;

struct GammaClass {
    std::string name;  // "1", "g2", "g2'", ...
    Perm rep;
    int order = 1;
    std::vector<int> members;      // indices into GammaGroup::elements
    std::vector<int> centralizer;  // indices into GammaGroup::elements
    CharacterTable table;          // of the centralizer
    std::vector<std::string> char_names;  // parallel to table.irr

    // Value of character `chr` of the centralizer on element `x` of it.
    Cyclotomic value(int chr, const Perm& x) const;

    std::unique_ptr<EnumeratedGroup> enumerated;
};

struct GammaPair {
    int cls = 0, chr = 0;
    std::string name;  // "(g3,theta)"
};

class GammaGroup {
public:
    // Z2, Z3, Z4, S3, S4, S5; instances are cached and immutable.
    static const GammaGroup& get(const std::string& id);

    const std::string& id() const { return id_; }
    const std::vector<Perm>& elements() const { return elements_; }
    int mul(int a, int b) const { return mult_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    const std::vector<GammaClass>& classes() const { return classes_; }
    const CharacterTable& table() const { return table_; }
    const std::vector<GammaPair>& pairs() const { return pairs_; }
    int find_pair(const std::string& name) const;

    Cyclotomic pairing(const GammaPair& x, const GammaPair& y) const;

private:
    explicit GammaGroup(const std::string& id);
    int index_of(const Perm& p) const;

    std::string id_;
    std::vector<Perm> elements_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    std::vector<GammaClass> classes_;
    CharacterTable table_;
    std::vector<GammaPair> pairs_;
};

std::vector<GammaPair> gamma_pairs(const GammaGroup& g);
Cyclotomic fourier_pairing(const GammaGroup& g, const GammaPair& x, const GammaPair& y);

struct FourierMatrix {
    std::string gamma;
    std::vector<GammaPair> pairs;
    std::vector<std::vector<Cyclotomic>> entries;
};

// Throws MismatchError unless the result is hermitian and squares to 1.
FourierMatrix fourier_matrix(const GammaGroup& g);

struct FamilyEntry {
    std::string pair;  // "(g3,theta)"
    std::string name;  // unipotent character, e.g. "F4[theta]"
    BigInt degree;     // at q = 2
    int delta = 1;
    std::string hint;  // column label(s) in an external table, "X.20" or "X.20|X.21"
};

struct FamilyTable {
    std::string type;   // B2, D4, F4, E6
    std::string gamma;  // Z2, S3, S4
    std::vector<FamilyEntry> entries;  // in gamma pair order
    std::vector<std::string> cuspidal;  // pairs whose almost characters the verifier checks
    int find_pair(const std::string& pair) const;
    int find_name(const std::string& name) const;
};

// Validated against the stored printed combinations on first use.
const FamilyTable& family_data(const std::string& type);

using Combination = std::vector<std::pair<std::string, Cyclotomic>>;

// R_x = sum_y delta_y {y, x} rho_y, keyed by unipotent character name.
Combination almost_character_row(const std::string& type, const std::string& pair);
// rho_x = delta_x sum_y {y, x} R_y, keyed by pair name.
Combination unipotent_character_row(const std::string& type, const std::string& name);

// Degree of R_x at q=2 from the stored unipotent degrees.
Cyclotomic almost_character_degree(const std::string& type, const std::string& pair);

// The published combinations, with coefficients as cyclotomic strings.
struct PrintedRow {
    std::string type, pair;
    std::vector<std::pair<std::string, std::string>> terms;
};
const std::vector<PrintedRow>& printed_rows();

}  // namespace cusp
