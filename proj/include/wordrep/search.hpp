#pragma once

#include <wordrep/graph.hpp>
#include <wordrep/word.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wordrep
{
    struct SearchOptions
    {
        // Wall-clock limit for each level k; unlimited when empty.
        std::optional<std::chrono::milliseconds> budget{};
        unsigned threads = 1;
        // Single-threaded, so the witness and node counts are reproducible.
        bool deterministic = false;
    };

    enum class LevelStatus
    {
        witness,
        refuted,
        budget_exhausted
    };

    struct LevelRecord
    {
        std::size_t k = 0;
        LevelStatus status = LevelStatus::refuted;
        std::uint64_t nodes = 0;
        std::chrono::milliseconds elapsed{0};
    };

    struct SearchOutcome
    {
        // Canonical edge list of the searched graph.
        std::string graph;
        std::size_t k = 0;
        // Re-verified with check_representation before it is returned.
        std::optional<Word> witness;
        // exists_k_word: level k was searched to completion without a witness.
        // repnum: every level below the reported k was refuted (and, when no
        // witness was found, every level up to k_max).
        bool exhaustive = false;
        std::uint64_t nodes_explored = 0;
        std::chrono::milliseconds elapsed{0};
        bool budget_hit = false;
        std::vector<LevelRecord> levels;
    };

    // Built-in families whose automorphisms are known without computing them.
    enum class SymmetryFamily
    {
        none,
        complete,
        crown,
        complete_bipartite
    };

    // Recognises a graph that is, as a labeled graph, exactly complete(m),
    // crown(n) or complete_bipartite(p, q).
    [[nodiscard]] auto detect_family(const Graph & g) -> SymmetryFamily;

    // Complete depth-first search for a k-uniform word representing g.
    // Supports up to 64 vertices.
    [[nodiscard]] auto exists_k_word(const Graph & g, std::size_t k, const SearchOptions & options = {})
        -> SearchOutcome;

    // Smallest k <= k_max admitting a witness, searching k = 1, 2, ... in turn.
    [[nodiscard]] auto repnum(const Graph & g, std::size_t k_max, const SearchOptions & options = {})
        -> SearchOutcome;

    [[nodiscard]] auto to_string(LevelStatus status) -> std::string;
}
