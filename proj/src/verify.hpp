#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chartab.hpp"
#include "families.hpp"

namespace cusp {

// Class function q^((dim G - dim C)/2) * lambda(a) on the class of g_a, zero elsewhere.
struct CharFnSpec {
    BigInt q = 2;
    int dim_G = 0, dim_C = 0;
    std::string component;             // A(g1): "Z2", "Z3", "1"
    std::vector<std::string> support;  // class of g_a, one per a in A(g1)
    std::vector<Cyclotomic> lambda;    // lambda(a), same order
    int sign() const { return dim_C % 2 ? -1 : 1; }
};

// Defaults: C2/B2 10/8, D4 28/24, F4 52/44, E6 78/72; supports and lambda
// follow the cuspidal pair (theta or theta^2 on the second class).
CharFnSpec default_spec(const std::string& type, const std::string& pair = "");

ClassFunction characteristic_function(const CharFnSpec& spec, const CharacterTable& t);

// Unipotent character name -> candidate rows. One row: fixed. Several names
// sharing the same candidate set of equal size form an ambiguity group.
using Matching = std::map<std::string, std::vector<int>>;

// Sum coeff * chi. Ambiguity groups are only accepted when their members carry
// equal coefficients (then the sum of the group's rows is used).
ClassFunction almost_character_values(const CharacterTable& t, const Matching& m, const Combination& row);

// One class function per injective assignment of names to candidate rows.
std::vector<ClassFunction> almost_character_values_all(const CharacterTable& t, const Matching& m,
                                                       const Combination& row);

struct ZetaReport {
    std::string type, pair, class_name;
    Cyclotomic r_value, chi_value, zeta;
    int sign = 1;
    bool unit = false;        // zeta * conj(zeta) == 1
    bool full_match = false;  // R == sign * zeta * chi on every class
    Cyclotomic r_norm, chi_norm;  // <R,R>, <chi,chi>
    std::string law;
    std::vector<std::string> audit;
};

ZetaReport solve_zeta(const ClassFunction& R, const CharFnSpec& spec, const CharacterTable& t,
                      const std::string& class_name);

// Scalar for G(q^m) from the scalar for G(q): zeta^m.
Cyclotomic zeta_extrapolate(const Cyclotomic& zeta, unsigned long m);

// End-to-end replay for Sp4(F2): builds the group from Chevalley generators,
// computes its table, identifies the family by the Borel permutation
// character and solves for zeta. Throws MismatchError naming the failed stage.
ZetaReport verify_sp4();

struct TableVerifyOptions {
    std::optional<CharFnSpec> spec;  // overrides the per-type default
    std::vector<std::string> support;
    Matching matching;  // entries replace the degree-based candidates
};

// Matches the family's unipotent characters to rows of `t` by degree at q=2
// (hints refine ties), evaluates R_pair over every admissible matching and
// solves for zeta on `class_name`. The value there must not depend on the matching.
ZetaReport verify_from_table(const std::string& type, const CharacterTable& t, const std::string& pair,
                             const std::string& class_name, const TableVerifyOptions& opt = {});

Matching match_family(const FamilyTable& fam, const CharacterTable& t);

}  // namespace cusp
