#pragma once

#include <wordrep/word.hpp>
#include <wordrep/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace wordrep
{
    // Ordered pairs (a_i, b_i) partitioning a ground set of 2k letters.
    using PairPartition = std::vector<std::pair<Letter, Letter>>;

    // perms[i] is a permutation of the ground set starting at a_i and ending
    // at b_i, and every two letters appear in both relative orders somewhere
    // in the family.
    struct PermutationFamily
    {
        std::vector<std::vector<Letter>> perms;
    };

    // Builds the family for k >= 3 pairs. The free middle segments are taken
    // in ascending letter order. Throws for k < 3 (no such family exists for
    // ground sets of size 2 or 4) or when the pairs repeat a letter.
    [[nodiscard]] auto endpoint_permutations(const PairPartition & pairs) -> PermutationFamily;

    // The even-n construction of a ceil(n/2)-uniform crown word, kept stage
    // by stage so the intermediate words can be inspected.
    struct CrownConstructionStages
    {
        // Blocks P(1,2) P(2',3') P(3,4) ... P(n-1,n) P(n',1'); represents K_{n,n}.
        Word concatenated;
        // The concatenation rotated one position to the left.
        Word rotated;
        // Left positions p in the rotated word where letters p and p+1 are
        // exchanged. Each such pair is {i, i'} for a distinct i.
        std::vector<std::size_t> swap_positions;
        // The rotated word after the exchanges; represents crown(n).
        Word word;
    };

    // n even and >= 6.
    [[nodiscard]] auto crown_construction_stages(std::uint32_t n) -> CrownConstructionStages;

    // ceil(n/2)-uniform word representing crown(n) for n >= 5. Odd n is
    // obtained from n + 1 by deleting n + 1 and (n + 1)'.
    [[nodiscard]] auto halving_crown_word(std::uint32_t n) -> Word;

    // The 3-dimensional cube labeled as a prism: cycles 1 2 3 4 and
    // 1' 2' 3' 4' joined by the rungs i i'.
    [[nodiscard]] auto cube_graph() -> Graph;

    // A known 3-uniform word representing cube_graph().
    [[nodiscard]] auto cube_word() -> Word;

    // Isomorphism from cube_graph() onto crown(4): each vertex and its
    // antipode become i and i'.
    [[nodiscard]] auto cube_to_crown(Letter v) -> Letter;

    // The known small representations for n in 1..4: 2-uniform for n <= 3,
    // and for n = 4 the cube word carried over by cube_to_crown.
    [[nodiscard]] auto fixed_crown_word(std::uint32_t n) -> Word;

    // crown(n) as a concatenation of n permutations, n in 1..4.
    [[nodiscard]] auto permutation_concatenation_word(std::uint32_t n) -> Word;

    // Shortest known uniform word for crown(n): the fixed words up to n = 4,
    // the halving construction from n = 5. Verified before it is returned.
    [[nodiscard]] auto represent_crown(std::uint32_t n) -> Word;
}
