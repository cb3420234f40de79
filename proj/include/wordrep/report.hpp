#pragma once

#include <wordrep/analyze.hpp>
#include <wordrep/search.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace wordrep
{
    // JSON documents for search certificates and split analyses. Keys are
    // emitted in a fixed order so output is byte-stable for equal inputs.

    // {graph, k, witness, exhaustive, nodes_explored, elapsed_ms, budget_hit, levels}
    [[nodiscard]] auto certificate_json(const SearchOutcome & outcome) -> std::string;

    // {set, shift, k, shifted, blocks, block_letters, factors}
    [[nodiscard]] auto split_json(const SplitDecomposition & sd, const LetterSet & letters) -> std::string;

    // split_json plus "violations": [{a, x, b}, ...]
    [[nodiscard]] auto edge_forcing_json(const SplitDecomposition & sd, const LetterSet & letters,
            const std::vector<EdgeForcingViolation> & violations) -> std::string;

    // split_json plus covered, uncovered and whether 2k >= |A|.
    [[nodiscard]] auto endpoint_json(const SplitDecomposition & sd, const LetterSet & letters,
            const EndpointCoverage & coverage) -> std::string;

    // split_json plus the counted letter, the block span and the count.
    [[nodiscard]] auto block_span_json(const SplitDecomposition & sd, const LetterSet & letters, Letter x,
            std::size_t i, std::size_t t, std::size_t count) -> std::string;
}
