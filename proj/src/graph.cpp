#include <wordrep/graph.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace wordrep
{
    Graph::Graph(vector<Letter> vertices, std::span<const Edge> edges) :
        _vertices(std::move(vertices))
    {
        std::sort(_vertices.begin(), _vertices.end());
        _vertices.erase(std::unique(_vertices.begin(), _vertices.end()), _vertices.end());

        _adjacency.assign(_vertices.size(), boost::dynamic_bitset<>(_vertices.size()));
        for (auto & [u, v] : edges) {
            if (u == v)
                fail(ErrorCode::invalid_argument, "self-loop on vertex " + to_string(u));
            auto iu = index_of(u), iv = index_of(v);
            if (! iu || ! iv)
                fail(ErrorCode::invalid_argument, "edge " + to_string(u) + "-" + to_string(v)
                        + " has an endpoint outside the vertex set");
            if (! _adjacency[*iu].test(*iv)) {
                _adjacency[*iu].set(*iv);
                _adjacency[*iv].set(*iu);
                ++_edge_count;
            }
        }
    }

    auto Graph::index_of(Letter v) const -> optional<size_t>
    {
        auto it = std::lower_bound(_vertices.begin(), _vertices.end(), v);
        if (it == _vertices.end() || *it != v)
            return std::nullopt;
        return it - _vertices.begin();
    }

    auto Graph::adjacent(Letter u, Letter v) const -> bool
    {
        auto iu = index_of(u), iv = index_of(v);
        if (! iu)
            fail(ErrorCode::invalid_argument, "unknown vertex " + to_string(u));
        if (! iv)
            fail(ErrorCode::invalid_argument, "unknown vertex " + to_string(v));
        return _adjacency[*iu].test(*iv);
    }

    auto Graph::degree(Letter v) const -> size_t
    {
        auto iv = index_of(v);
        if (! iv)
            fail(ErrorCode::invalid_argument, "unknown vertex " + to_string(v));
        return _adjacency[*iv].count();
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (size_t u = 0 ; u < _vertices.size() ; ++u)
            for (size_t v = u + 1 ; v < _vertices.size() ; ++v)
                if (_adjacency[u].test(v))
                    result.emplace_back(_vertices[u], _vertices[v]);
        return result;
    }

    auto Graph::operator== (const Graph & other) const -> bool
    {
        return _vertices == other._vertices && _adjacency == other._adjacency;
    }

    auto neighborhood(const Graph & g, Letter v) -> LetterSet
    {
        auto iv = g.index_of(v);
        if (! iv)
            fail(ErrorCode::invalid_argument, "neighborhood: unknown vertex " + to_string(v));
        LetterSet result;
        const auto & row = g.row(*iv);
        for (auto u = row.find_first() ; u != boost::dynamic_bitset<>::npos ; u = row.find_next(u))
            result.insert(g.vertices()[u]);
        return result;
    }

    namespace
    {
        auto bipartite_vertices(std::uint32_t p, std::uint32_t q) -> vector<Letter>
        {
            vector<Letter> vertices;
            for (std::uint32_t i = 1 ; i <= p ; ++i)
                vertices.emplace_back(i, false);
            for (std::uint32_t j = 1 ; j <= q ; ++j)
                vertices.emplace_back(j, true);
            return vertices;
        }
    }

    auto crown(std::uint32_t n) -> Graph
    {
        if (n < 1)
            fail(ErrorCode::invalid_argument, "crown graph needs n >= 1");
        vector<Edge> edges;
        for (std::uint32_t i = 1 ; i <= n ; ++i)
            for (std::uint32_t j = 1 ; j <= n ; ++j)
                if (i != j)
                    edges.emplace_back(Letter(i), Letter(j, true));
        return Graph(bipartite_vertices(n, n), edges);
    }

    auto complete(std::uint32_t m) -> Graph
    {
        if (m < 1)
            fail(ErrorCode::invalid_argument, "complete graph needs m >= 1");
        vector<Letter> vertices;
        vector<Edge> edges;
        for (std::uint32_t i = 1 ; i <= m ; ++i) {
            vertices.emplace_back(i);
            for (std::uint32_t j = i + 1 ; j <= m ; ++j)
                edges.emplace_back(Letter(i), Letter(j));
        }
        return Graph(std::move(vertices), edges);
    }

    auto complete_bipartite(std::uint32_t p, std::uint32_t q) -> Graph
    {
        if (p < 1 || q < 1)
            fail(ErrorCode::invalid_argument, "complete bipartite graph needs both sides >= 1");
        vector<Edge> edges;
        for (std::uint32_t i = 1 ; i <= p ; ++i)
            for (std::uint32_t j = 1 ; j <= q ; ++j)
                edges.emplace_back(Letter(i), Letter(j, true));
        return Graph(bipartite_vertices(p, q), edges);
    }

    auto parse_edge_list(string_view text) -> EdgeListParse
    {
        vector<Letter> vertices;
        vector<Edge> edges;
        std::set<Edge> seen;
        vector<string> warnings;
        optional<size_t> declared;
        bool first_content_line = true;

        size_t line_number = 0;
        size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_number;

            if (auto hash = line.find('#') ; hash != string_view::npos)
                line = line.substr(0, hash);

            vector<string> tokens;
            std::istringstream in{string(line)};
            for (string t ; in >> t ; )
                tokens.push_back(t);
            if (tokens.empty())
                continue;

            auto where = "line " + std::to_string(line_number) + ": ";
            if (tokens.front() == "p") {
                if (! first_content_line)
                    fail(ErrorCode::parse, where + "header 'p' must be the first non-comment line");
                size_t count = 0;
                if (tokens.size() != 2)
                    fail(ErrorCode::parse, where + "header must be 'p <numVertices>'");
                auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), count);
                if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size())
                    fail(ErrorCode::parse, where + "malformed vertex count '" + tokens[1] + "'");
                declared = count;
                first_content_line = false;
                continue;
            }
            first_content_line = false;

            vector<Letter> letters;
            for (auto & t : tokens) {
                try {
                    letters.push_back(parse_letter(t));
                }
                catch (const Error & e) {
                    fail(ErrorCode::parse, where + e.what());
                }
            }

            if (letters.size() == 1)
                vertices.push_back(letters[0]);
            else if (letters.size() == 2) {
                auto [u, v] = std::minmax(letters[0], letters[1]);
                if (u == v)
                    fail(ErrorCode::parse, where + "self-loop on vertex " + to_string(u));
                vertices.push_back(u);
                vertices.push_back(v);
                if (! seen.emplace(u, v).second)
                    warnings.push_back(where + "duplicate edge " + to_string(u) + " " + to_string(v) + " ignored");
                else
                    edges.emplace_back(u, v);
            }
            else
                fail(ErrorCode::parse, where + "expected 'u v' or a single vertex, got "
                        + std::to_string(tokens.size()) + " tokens");
        }

        Graph graph(std::move(vertices), edges);
        if (declared && *declared != graph.vertex_count())
            fail(ErrorCode::parse, "header declares " + std::to_string(*declared) + " vertices but the edge list names "
                    + std::to_string(graph.vertex_count()));
        return {std::move(graph), std::move(warnings)};
    }

    auto emit_edge_list(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "p " << g.vertex_count() << '\n';
        for (auto v : g.vertices())
            if (g.degree(v) == 0)
                out << to_string(v) << '\n';
        for (auto & [u, v] : g.edges())
            out << to_string(u) << ' ' << to_string(v) << '\n';
        return out.str();
    }

    auto emit_dot(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "graph G {\n";
        for (auto v : g.vertices())
            out << "  \"" << to_string(v) << "\";\n";
        for (auto & [u, v] : g.edges())
            out << "  \"" << to_string(u) << "\" -- \"" << to_string(v) << "\";\n";
        out << "}\n";
        return out.str();
    }
}
