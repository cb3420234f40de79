#include <wordrep/search.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

using std::size_t;
using std::uint64_t;
using std::vector;

using std::chrono::duration_cast;
using std::chrono::milliseconds;
using std::chrono::steady_clock;

namespace wordrep
{
    namespace
    {
        using Mask = uint64_t;

        constexpr auto bit(size_t v) -> Mask { return Mask{1} << v; }

        // Immutable description of one level: graph masks plus the
        // symmetry-breaking gates.
        struct Problem
        {
            size_t n = 0;
            size_t k = 0;
            size_t length = 0;
            Mask all = 0;
            vector<Mask> adjacent;
            vector<Mask> non_adjacent;
            // A vertex may first appear only once some vertex of gate[v] has
            // appeared. Zero means ungated.
            vector<Mask> gate;
            size_t root = 0;
        };

        struct Shared
        {
            std::atomic<bool> stop{false};
            std::atomic<bool> timed_out{false};
            std::optional<steady_clock::time_point> deadline;
            std::mutex witness_mutex;
            std::optional<vector<std::uint8_t>> witness;
        };

        enum class Result
        {
            found,
            exhausted,
            aborted
        };

        class Worker
        {
            public:
                Worker(const Problem & p, Shared & s) :
                    _p(p),
                    _shared(s),
                    _counts((p.length + 1) * p.n, 0),
                    _seen((p.length + 1) * p.n, 0),
                    _broken((p.length + 1) * p.n, 0),
                    _appeared(p.length + 1, 0),
                    _word(p.length, 0)
                {
                }

                auto nodes() const -> uint64_t { return _nodes; }

                // Replays a prefix from the root; false if it is pruned.
                auto replay(const vector<std::uint8_t> & prefix) -> bool
                {
                    for (size_t d = 0 ; d < prefix.size() ; ++d)
                        if (! can_place(d, prefix[d]) || ! place(d, prefix[d]))
                            return false;
                    return true;
                }

                auto search_from(size_t depth) -> Result
                {
                    return dfs(depth);
                }

                // Collects every surviving prefix of the given length, or
                // publishes a witness if one completes first.
                auto collect(size_t depth, size_t limit, vector<vector<std::uint8_t>> & out) -> Result
                {
                    if (depth == _p.length) {
                        if (! complete_ok(depth))
                            return Result::exhausted;
                        publish();
                        return Result::found;
                    }
                    if (depth == limit) {
                        out.emplace_back(_word.begin(), _word.begin() + depth);
                        return Result::exhausted;
                    }
                    for (size_t x = 0 ; x < _p.n ; ++x) {
                        if (! can_place(depth, x))
                            continue;
                        ++_nodes;
                        if (place(depth, x) && collect(depth + 1, limit, out) == Result::found)
                            return Result::found;
                    }
                    return Result::exhausted;
                }

            private:
                const Problem & _p;
                Shared & _shared;
                vector<std::uint16_t> _counts;
                vector<Mask> _seen;
                vector<Mask> _broken;
                vector<Mask> _appeared;
                vector<std::uint8_t> _word;
                uint64_t _nodes = 0;

                auto can_place(size_t d, size_t x) const -> bool
                {
                    const size_t base = d * _p.n;
                    auto c = _counts[base + x];
                    if (c == _p.k)
                        return false;
                    if (d == 0)
                        return x == _p.root;
                    if (c == 0)
                        return _p.gate[x] == 0 || (_appeared[d] & _p.gate[x]) != 0;
                    // Repeating x needs every neighbour to have appeared since
                    // the previous x, or the pair stops alternating.
                    return (_p.adjacent[x] & ~_seen[base + x]) == 0;
                }

                // Writes frame d + 1; false when the new frame cannot complete.
                auto place(size_t d, size_t x) -> bool
                {
                    const size_t n = _p.n;
                    const size_t from = d * n, to = from + n;
                    std::copy_n(_counts.begin() + from, n, _counts.begin() + to);
                    std::copy_n(_seen.begin() + from, n, _seen.begin() + to);
                    std::copy_n(_broken.begin() + from, n, _broken.begin() + to);
                    _appeared[d + 1] = _appeared[d] | bit(x);
                    _word[d] = static_cast<std::uint8_t>(x);

                    const Mask xb = bit(x);
                    auto c = _counts[to + x];
                    if (c > 0) {
                        Mask newly = _p.all & ~_seen[to + x] & ~xb & ~_broken[to + x];
                        _broken[to + x] |= newly;
                        for (Mask m = newly ; m ; m &= m - 1)
                            _broken[to + std::countr_zero(m)] |= xb;
                    }
                    for (size_t z = 0 ; z < n ; ++z)
                        _seen[to + z] |= xb;
                    _seen[to + x] = 0;
                    _counts[to + x] = c + 1;

                    if (size_t{c} + 1 == _p.k) {
                        // x is exhausted: each non-neighbour still alternating
                        // with x must repeat twice more to break the pattern.
                        Mask pending = _p.non_adjacent[x] & ~_broken[to + x];
                        for (Mask m = pending ; m ; m &= m - 1) {
                            auto y = static_cast<size_t>(std::countr_zero(m));
                            if (_p.k < 2u + _counts[to + y])
                                return false;
                        }
                    }
                    return true;
                }

                auto complete_ok(size_t d) const -> bool
                {
                    const size_t base = d * _p.n;
                    for (size_t x = 0 ; x < _p.n ; ++x)
                        if ((_p.non_adjacent[x] & ~_broken[base + x]) != 0)
                            return false;
                    return true;
                }

                auto publish() -> void
                {
                    std::lock_guard lock(_shared.witness_mutex);
                    if (! _shared.witness)
                        _shared.witness = _word;
                    _shared.stop = true;
                }

                auto should_stop() -> bool
                {
                    if ((_nodes & 0xfff) == 0) {
                        if (_shared.deadline && steady_clock::now() >= *_shared.deadline) {
                            _shared.timed_out = true;
                            _shared.stop = true;
                        }
                    }
                    return _shared.stop.load(std::memory_order_relaxed);
                }

                auto dfs(size_t depth) -> Result
                {
                    if (depth == _p.length) {
                        if (complete_ok(depth)) {
                            publish();
                            return Result::found;
                        }
                        return Result::exhausted;
                    }

                    for (size_t x = 0 ; x < _p.n ; ++x) {
                        if (! can_place(depth, x))
                            continue;
                        ++_nodes;
                        if (should_stop())
                            return Result::aborted;
                        if (! place(depth, x))
                            continue;
                        auto r = dfs(depth + 1);
                        if (r != Result::exhausted)
                            return r;
                    }
                    return Result::exhausted;
                }
        };

        auto make_problem(const Graph & g, size_t k) -> Problem
        {
            Problem p;
            p.n = g.vertex_count();
            p.k = k;
            p.length = p.n * k;
            p.all = p.n == 64 ? ~Mask{0} : bit(p.n) - 1;
            p.adjacent.assign(p.n, 0);
            p.non_adjacent.assign(p.n, 0);
            p.gate.assign(p.n, 0);
            for (size_t u = 0 ; u < p.n ; ++u)
                for (size_t v = 0 ; v < p.n ; ++v)
                    if (u != v)
                        (g.adjacent_by_index(u, v) ? p.adjacent[u] : p.non_adjacent[u]) |= bit(v);

            // The cyclic shift can start at any letter; relabelling by an
            // automorphism then moves the first letter to vertex 1 and sorts
            // first appearances within each family of interchangeable letters.
            auto idx = [&] (std::uint32_t i, bool primed) { return *g.index_of(Letter(i, primed)); };
            p.root = 0;
            switch (detect_family(g)) {
                case SymmetryFamily::none:
                    break;
                case SymmetryFamily::complete:
                    for (std::uint32_t i = 2 ; i <= p.n ; ++i)
                        p.gate[idx(i, false)] = bit(idx(i - 1, false));
                    break;
                case SymmetryFamily::crown: {
                    // Index permutations act on i and i' together, and the
                    // side swap i <-> i' puts an unprimed letter first.
                    auto half = static_cast<std::uint32_t>(p.n / 2);
                    for (std::uint32_t i = 2 ; i <= half ; ++i) {
                        Mask previous = bit(idx(i - 1, false)) | bit(idx(i - 1, true));
                        p.gate[idx(i, false)] = previous;
                        p.gate[idx(i, true)] = previous;
                    }
                    break;
                }
                case SymmetryFamily::complete_bipartite: {
                    std::uint32_t left = 0, right = 0;
                    for (auto v : g.vertices())
                        (v.primed() ? right : left) = std::max(v.primed() ? right : left, v.index());
                    for (std::uint32_t i = 2 ; i <= left ; ++i)
                        p.gate[idx(i, false)] = bit(idx(i - 1, false));
                    for (std::uint32_t j = 2 ; j <= right ; ++j)
                        p.gate[idx(j, true)] = bit(idx(j - 1, true));
                    break;
                }
            }
            return p;
        }

        auto run_level(const Graph & g, size_t k, const SearchOptions & options) -> std::pair<LevelRecord, std::optional<Word>>
        {
            auto start = steady_clock::now();
            auto problem = make_problem(g, k);

            Shared shared;
            if (options.budget)
                shared.deadline = start + *options.budget;

            unsigned threads = options.deterministic ? 1 : std::max(1u, options.threads);
            uint64_t nodes = 0;

            if (threads == 1) {
                Worker w(problem, shared);
                w.search_from(0);
                nodes = w.nodes();
            }
            else {
                // Split the top of the tree into independent subtrees.
                vector<vector<std::uint8_t>> prefixes;
                size_t depth = 1;
                uint64_t prefix_nodes = 0;
                bool found_early = false;
                for ( ; depth < problem.length ; ++depth) {
                    prefixes.clear();
                    Worker w(problem, shared);
                    auto r = w.collect(0, depth, prefixes);
                    prefix_nodes = w.nodes();
                    if (r == Result::found) {
                        found_early = true;
                        break;
                    }
                    if (prefixes.size() >= 16 * size_t{threads} || prefixes.empty())
                        break;
                }
                nodes = prefix_nodes;

                if (! found_early && ! prefixes.empty()) {
                    std::atomic<size_t> next{0};
                    std::atomic<uint64_t> total{0};
                    vector<std::jthread> pool;
                    for (unsigned t = 0 ; t < threads ; ++t)
                        pool.emplace_back([&] {
                            Worker w(problem, shared);
                            for (size_t i ; (i = next++) < prefixes.size() && ! shared.stop ; ) {
                                if (w.replay(prefixes[i]))
                                    w.search_from(prefixes[i].size());
                            }
                            total += w.nodes();
                        });
                    pool.clear();
                    nodes += total;
                }
            }

            LevelRecord record;
            record.k = k;
            record.nodes = nodes;
            record.elapsed = duration_cast<milliseconds>(steady_clock::now() - start);

            std::optional<Word> witness;
            if (shared.witness) {
                vector<Letter> letters;
                for (auto v : *shared.witness)
                    letters.push_back(g.vertices()[v]);
                witness = Word(std::move(letters));
                auto check = check_representation(*witness, g);
                if (uniformity(*witness) != k || ! check)
                    fail(ErrorCode::internal, "search produced an invalid witness: " + check.diagnostic);
                record.status = LevelStatus::witness;
            }
            else if (shared.timed_out)
                record.status = LevelStatus::budget_exhausted;
            else
                record.status = LevelStatus::refuted;

            return {record, witness};
        }

        auto check_searchable(const Graph & g) -> void
        {
            if (g.vertex_count() == 0)
                fail(ErrorCode::invalid_argument, "search needs a graph with at least one vertex");
            if (g.vertex_count() > 64)
                fail(ErrorCode::invalid_argument, "search supports at most 64 vertices, got "
                        + std::to_string(g.vertex_count()));
        }
    }

    auto detect_family(const Graph & g) -> SymmetryFamily
    {
        const auto & vs = g.vertices();
        if (vs.empty())
            return SymmetryFamily::none;

        std::uint32_t left = 0, right = 0;
        size_t unprimed = 0, primed = 0;
        for (auto v : vs) {
            if (v.primed()) {
                ++primed;
                right = std::max(right, v.index());
            }
            else {
                ++unprimed;
                left = std::max(left, v.index());
            }
        }
        // Labels must be exactly 1..left and 1'..right.
        if (unprimed != left || primed != right)
            return SymmetryFamily::none;

        if (primed == 0)
            return g == complete(left) ? SymmetryFamily::complete : SymmetryFamily::none;
        if (unprimed == 0)
            return SymmetryFamily::none;
        if (left == right && g == crown(left))
            return SymmetryFamily::crown;
        if (g == complete_bipartite(left, right))
            return SymmetryFamily::complete_bipartite;
        return SymmetryFamily::none;
    }

    auto exists_k_word(const Graph & g, size_t k, const SearchOptions & options) -> SearchOutcome
    {
        check_searchable(g);
        if (k < 1)
            fail(ErrorCode::invalid_argument, "k must be at least 1");
        if (k > 1000)
            fail(ErrorCode::invalid_argument, "k is far beyond any searchable size");

        auto [record, witness] = run_level(g, k, options);

        SearchOutcome outcome;
        outcome.graph = emit_edge_list(g);
        outcome.k = k;
        outcome.witness = std::move(witness);
        outcome.exhaustive = record.status == LevelStatus::refuted;
        outcome.budget_hit = record.status == LevelStatus::budget_exhausted;
        outcome.nodes_explored = record.nodes;
        outcome.elapsed = record.elapsed;
        outcome.levels.push_back(record);
        return outcome;
    }

    auto repnum(const Graph & g, size_t k_max, const SearchOptions & options) -> SearchOutcome
    {
        check_searchable(g);
        if (k_max < 1)
            fail(ErrorCode::invalid_argument, "k_max must be at least 1");

        SearchOutcome outcome;
        outcome.graph = emit_edge_list(g);
        bool all_refuted = true;
        for (size_t k = 1 ; k <= k_max ; ++k) {
            auto [record, witness] = run_level(g, k, options);
            outcome.levels.push_back(record);
            outcome.nodes_explored += record.nodes;
            outcome.elapsed += record.elapsed;
            outcome.k = k;
            if (record.status == LevelStatus::budget_exhausted)
                outcome.budget_hit = true;
            if (witness) {
                outcome.witness = std::move(witness);
                break;
            }
            all_refuted = all_refuted && record.status == LevelStatus::refuted;
        }
        outcome.exhaustive = all_refuted;
        return outcome;
    }

    auto to_string(LevelStatus status) -> std::string
    {
        switch (status) {
            case LevelStatus::witness: return "witness";
            case LevelStatus::refuted: return "refuted";
            case LevelStatus::budget_exhausted: return "budget_exhausted";
        }
        return "unknown";
    }
}
