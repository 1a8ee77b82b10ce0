#pragma once
#include <string>
#include <vector>

#include "chartab.hpp"
#include "errors.hpp"

namespace cusp {

struct CtabParseError : InputError {
    CtabParseError(const std::string& msg, int line, int col)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line, col;
};

// Text format:
//   name: <string>
//   order: <decimal>
//   begin classes
//   <name> <size> <element order> p<prime>-><1-based class index> ...
//   end classes
//   begin matrix
//   <cyclotomic> ... (one row per irreducible)
//   end matrix
// Blank lines and lines starting with '#' are ignored.
CharacterTable parse_ctab(const std::string& text);
CharacterTable read_ctab_file(const std::string& path);
std::string serialize_ctab(const CharacterTable& t);

// Every structural, arithmetic and orthogonality violation; empty when valid.
std::vector<std::string> validate_ctab(const CharacterTable& t);

}  // namespace cusp
