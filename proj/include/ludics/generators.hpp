#pragma once

#include "ludics/design.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ludics {

struct GeneratorOptions {
    std::size_t depth = 4;   // maximal chronicle length
    std::size_t branch = 2;  // maximal negative answers per positive action, and ramification size
    std::vector<std::uint32_t> alphabet{0, 1, 2};
};

/// A random design on `base`, valid by construction.
Design random_design(std::mt19937_64& rng, const Sequent& base, const GeneratorOptions& opts = {});

/// The chronicle of D^m at `root`: D^0 = (-,r,{0})(+,r.0,{0}), D^1 = (-,r,{1})(+,r.1,{0}),
/// D^{m+2} = (-,r,{1})(+,r.1,{1}) followed by D^m at r.1.1.
Sequence ehrhard_chronicle(std::size_t m, const Locus& root);

/// The design on root |- whose maximal chronicles are those of D^m for m in `members`.
Design ehrhard_design(const std::vector<std::size_t>& members, const Locus& root);

/// {X_0, ..., X_n} with X_k generated by the chronicles 0, 2, ..., 2k and 2k+1.
std::vector<Design> ehrhard_family(std::size_t n, const Locus& root);

} // namespace ludics
