#pragma once

#include <wordrep/letter.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordrep
{
    using Edge = std::pair<Letter, Letter>;

    // A simple undirected graph on named vertices. Vertices are kept in
    // ascending Letter order and that order fixes the dense index used by
    // the adjacency bitsets. Graphs compare as labeled objects.
    class Graph
    {
        public:
            // Throws on self-loops and on edge endpoints missing from vertices.
            // Repeated vertices and repeated edges are merged.
            Graph(std::vector<Letter> vertices, std::span<const Edge> edges);

            [[nodiscard]] auto vertex_count() const noexcept -> std::size_t { return _vertices.size(); }
            [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return _edge_count; }
            [[nodiscard]] auto vertices() const noexcept -> const std::vector<Letter> & { return _vertices; }

            [[nodiscard]] auto index_of(Letter v) const -> std::optional<std::size_t>;
            [[nodiscard]] auto contains(Letter v) const -> bool { return index_of(v).has_value(); }

            // Throws if either vertex is unknown.
            [[nodiscard]] auto adjacent(Letter u, Letter v) const -> bool;
            [[nodiscard]] auto adjacent_by_index(std::size_t u, std::size_t v) const -> bool
            {
                return _adjacency[u].test(v);
            }

            [[nodiscard]] auto row(std::size_t u) const -> const boost::dynamic_bitset<> & { return _adjacency[u]; }
            [[nodiscard]] auto degree(Letter v) const -> std::size_t;

            // Canonical edge list: each edge once with first < second, sorted.
            [[nodiscard]] auto edges() const -> std::vector<Edge>;

            auto operator== (const Graph & other) const -> bool;

        private:
            std::vector<Letter> _vertices;
            std::vector<boost::dynamic_bitset<>> _adjacency;
            std::size_t _edge_count = 0;
    };

    [[nodiscard]] auto neighborhood(const Graph & g, Letter v) -> LetterSet;

    // Vertices 1..n and 1'..n', edge ij' exactly when i != j.
    [[nodiscard]] auto crown(std::uint32_t n) -> Graph;

    // Vertices 1..m, all pairs adjacent.
    [[nodiscard]] auto complete(std::uint32_t m) -> Graph;

    // Vertices 1..p and 1'..q', every ij' adjacent (including i = j).
    [[nodiscard]] auto complete_bipartite(std::uint32_t p, std::uint32_t q) -> Graph;

    struct EdgeListParse
    {
        Graph graph;
        std::vector<std::string> warnings;
    };

    // Edge-list text format:
    //   # comment
    //   p <numVertices>      optional, first non-comment line only
    //   u v                  an edge
    //   u                    an isolated (or merely declared) vertex
    [[nodiscard]] auto parse_edge_list(std::string_view text) -> EdgeListParse;
    [[nodiscard]] auto emit_edge_list(const Graph & g) -> std::string;
    [[nodiscard]] auto emit_dot(const Graph & g) -> std::string;
}
