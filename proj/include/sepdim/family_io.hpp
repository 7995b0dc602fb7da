#pragma once

#include <iosfwd>
#include <string>

#include "sepdim/permutation.hpp"

namespace sepdim {

// Family file format: a JSON object with fields `n` and `permutations`
// (list of lists of vertex ids). Written files are canonical: two-space
// indentation, keys in alphabetical order.

PermutationFamily read_family(std::istream& in);
PermutationFamily read_family_file(const std::string& path);

void write_family(const PermutationFamily& fam, std::ostream& out);
void write_family_file(const PermutationFamily& fam, const std::string& path);

}  // namespace sepdim
