#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chartab.hpp"

namespace cusp {

using FusionMap = std::vector<int>;  // subgroup class -> ambient class

struct FusionOptions {
    uint64_t node_limit = 50'000'000;
};

struct FusionResult {
    std::vector<FusionMap> maps;  // lexicographic order
    bool complete = true;         // false: node limit hit, list may be partial
    uint64_t nodes = 0;
};

// Admissible class fusions of `sub` into `big`. Constraints: element orders,
// power maps commute, centralizer orders divide, identity to identity, and every
// restricted irreducible of `big` decomposes with non-negative integral
// multiplicities. Pins fix images of subgroup classes in advance.
FusionResult possible_fusions(const CharacterTable& sub, const CharacterTable& big,
                              const std::map<int, int>& pins = {}, FusionOptions opt = {});

// True when `f` satisfies every constraint above.
bool is_admissible_fusion(const CharacterTable& sub, const CharacterTable& big, const FusionMap& f);

// Distinct ambient class names hit by `sub_class` across all maps.
std::vector<std::string> fusion_images(const FusionResult& r, const CharacterTable& big, int sub_class);

}  // namespace cusp
