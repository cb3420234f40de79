#pragma once

#include <wordrep/graph.hpp>
#include <wordrep/word.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace wordrep
{
    // Span of one permutation block in the shifted word, followed by the
    // (possibly empty) gap before the next block or the end of the word.
    struct BlockFactor
    {
        std::size_t block_first;  // position of the block's first letter
        std::size_t block_last;   // position of the block's last letter
        std::size_t gap_first;    // block_last + 1
        std::size_t gap_end;      // one past the gap
    };

    // A cyclic shift of a k-uniform word under which the subword induced by
    // a letter set A is k consecutive permutations of A.
    struct SplitDecomposition
    {
        std::size_t shift = 0;
        Word shifted;
        // blocks[i] holds the positions (in shifted) of the i-th permutation.
        std::vector<std::vector<std::size_t>> blocks;
        std::vector<BlockFactor> factors;

        [[nodiscard]] auto k() const noexcept -> std::size_t { return blocks.size(); }
        [[nodiscard]] auto block_letters(std::size_t i) const -> std::vector<Letter>;
    };

    // Tries shifts that start at an occurrence of a letter of A, smallest
    // first, so any result is canonical: its first block starts at position 0.
    // Throws if w is not uniform, A is empty, or A has letters absent from w.
    [[nodiscard]] auto find_split(const Word & w, const LetterSet & letters) -> std::optional<SplitDecomposition>;

    // Throws unless sd really splits A in w: the shift reproduces shifted,
    // every block is a permutation of A, the blocks concatenate to the
    // induced subword, the factors tile the word, and a_i < b_j whenever i < j.
    auto validate_split(const Word & w, const LetterSet & letters, const SplitDecomposition & sd) -> void;

    // Splits the neighbourhood of v. A word representing g always admits
    // one, so failure is reported as an error naming the inconsistency.
    [[nodiscard]] auto neighborhood_split(const Word & w, const Graph & g, Letter v) -> SplitDecomposition;

    // A triple with a, b in A, x outside A, ax and bx edges, a_1 < x_1 < b_1
    // in the shifted word, yet ab not an edge.
    struct EdgeForcingViolation
    {
        Letter a;
        Letter x;
        Letter b;
    };

    // All triples that contradict edge forcing along the split. Empty for
    // every word that represents g.
    [[nodiscard]] auto edge_forcing_violations(const Word & w, const Graph & g, const LetterSet & letters,
            const SplitDecomposition & sd) -> std::vector<EdgeForcingViolation>;

    // Occurrences of x in the factor running from the start of block i to the
    // end of block i + t - 1 (blocks counted from 1), gaps in between included.
    [[nodiscard]] auto count_in_block_span(const SplitDecomposition & sd, Letter x, std::size_t i, std::size_t t)
        -> std::size_t;

    struct EndpointCoverage
    {
        LetterSet covered;
        LetterSet uncovered;
    };

    // Partitions A into letters that open or close some block and the rest.
    [[nodiscard]] auto endpoint_coverage(const SplitDecomposition & sd, const LetterSet & letters) -> EndpointCoverage;
}
