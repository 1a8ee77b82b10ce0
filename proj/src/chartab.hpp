#pragma once
#include <map>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace cusp {

struct ClassRecord {
    std::string name;
    BigInt size;
    int order = 1;
    std::map<int, int> power;  // prime -> class index (0-based)
};

struct CharacterTable {
    std::string name;
    BigInt order;
    std::vector<ClassRecord> classes;
    std::vector<std::vector<Cyclotomic>> irr;  // rows = characters
    int identity_class = 0;
    std::vector<std::string> char_names;  // optional labels
    std::vector<MatrixGF2> reps;          // optional class representatives

    size_t size() const { return classes.size(); }
    BigInt centralizer(int j) const { return order / classes[j].size; }
    int find_class(const std::string& name) const;  // -1 if absent
    Cyclotomic degree(int i) const { return irr[i][identity_class]; }
};

using ClassFunction = std::vector<Cyclotomic>;

// Dixon-Schneider over F_l followed by an exact lift to cyclotomics.
CharacterTable character_table(const EnumeratedGroup& g, const std::string& name = "");
CharacterTable character_table(const Group& g, const std::string& name = "");

// Murnaghan-Nakayama table of S_n, 1 <= n <= 10.
CharacterTable symmetric_table(int n);

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h);
ClassFunction permutation_character(const CharacterTable& t, const CosetAction& a);
// (row index, multiplicity) for non-zero multiplicities; throws
// MismatchError if some multiplicity is not a rational integer.
std::vector<std::pair<int, BigInt>> decompose(const CharacterTable& t, const ClassFunction& f);

// Row and column orthogonality; one message per violation.
std::vector<std::string> orthogonality_violations(const CharacterTable& t);

// ATLAS-style names: element order followed by a, b, ... in class order.
void assign_class_names(CharacterTable& t);
// Rows sorted by degree, then by values class by class: smaller conductor
// first, then larger value first (so the trivial character leads).
void sort_characters(CharacterTable& t);

}  // namespace cusp
