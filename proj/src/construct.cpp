#include <wordrep/construct.hpp>

#include <algorithm>
#include <array>
#include <string_view>

using std::size_t;
using std::string;
using std::vector;

namespace wordrep
{
    namespace
    {
        auto ascending_except(const vector<Letter> & ground, const LetterSet & excluded) -> vector<Letter>
        {
            vector<Letter> result;
            for (auto l : ground)
                if (! excluded.contains(l))
                    result.push_back(l);
            return result;
        }

        auto verify_or_throw(const Word & w, const Graph & g, const string & what) -> void
        {
            auto r = check_representation(w, g);
            if (! r)
                fail(ErrorCode::internal, what + " does not represent the target graph: " + r.diagnostic);
        }

        auto pair_partition(std::uint32_t n, bool primed) -> PairPartition
        {
            PairPartition pairs;
            if (! primed)
                for (std::uint32_t i = 1 ; i < n ; i += 2)
                    pairs.emplace_back(Letter(i), Letter(i + 1));
            else
                for (std::uint32_t i = 2 ; i <= n ; i += 2)
                    pairs.emplace_back(Letter(i, true), Letter(i == n ? 1 : i + 1, true));
            return pairs;
        }
    }

    auto endpoint_permutations(const PairPartition & pairs) -> PermutationFamily
    {
        const size_t k = pairs.size();
        if (k < 3)
            fail(ErrorCode::precondition, "endpoint permutations need at least 3 pairs (a ground set of 6 or more), got "
                    + std::to_string(k));

        vector<Letter> ground;
        for (auto & [a, b] : pairs) {
            ground.push_back(a);
            ground.push_back(b);
        }
        std::sort(ground.begin(), ground.end());
        if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
            fail(ErrorCode::invalid_argument, "pairs do not partition a set: some letter is repeated");

        auto [a1, b1] = pairs[0];
        auto [a2, b2] = pairs[1];
        auto [a3, b3] = pairs[2];

        auto middle = ascending_except(ground, {a1, a2, b1, b2});
        auto inner = ascending_except(ground, {a1, a2, a3, b1, b2, b3});

        PermutationFamily family;

        vector<Letter> first{a1, b2};
        first.insert(first.end(), middle.begin(), middle.end());
        first.insert(first.end(), {a2, b1});
        family.perms.push_back(std::move(first));

        vector<Letter> second{a2, b1};
        second.insert(second.end(), middle.rbegin(), middle.rend());
        second.insert(second.end(), {a1, b2});
        family.perms.push_back(std::move(second));

        vector<Letter> third{a3, b2, a1};
        third.insert(third.end(), inner.begin(), inner.end());
        third.insert(third.end(), {b1, a2, b3});
        family.perms.push_back(std::move(third));

        for (size_t i = 3 ; i < k ; ++i) {
            auto [a, b] = pairs[i];
            vector<Letter> perm{a};
            auto rest = ascending_except(ground, {a, b});
            perm.insert(perm.end(), rest.begin(), rest.end());
            perm.push_back(b);
            family.perms.push_back(std::move(perm));
        }

        return family;
    }

    auto crown_construction_stages(std::uint32_t n) -> CrownConstructionStages
    {
        if (n < 6 || n % 2 != 0)
            fail(ErrorCode::precondition, "crown construction stages need an even n >= 6, got " + std::to_string(n));

        auto unprimed = endpoint_permutations(pair_partition(n, false));
        auto primed = endpoint_permutations(pair_partition(n, true));

        vector<Letter> letters;
        letters.reserve(size_t{n} * n);
        for (size_t i = 0 ; i < unprimed.perms.size() ; ++i) {
            letters.insert(letters.end(), unprimed.perms[i].begin(), unprimed.perms[i].end());
            letters.insert(letters.end(), primed.perms[i].begin(), primed.perms[i].end());
        }

        CrownConstructionStages stages;
        stages.concatenated = Word(letters);
        stages.rotated = cyclic_shift(stages.concatenated, 1);

        // Block t (1-based) ends at t*n - 1 in the concatenation, so the
        // junction after it starts at t*n - 2 once rotated. The last block
        // wraps around to the front and lands at the end of the rotated word.
        vector<Letter> swapped(stages.rotated.letters().begin(), stages.rotated.letters().end());
        const size_t blocks = n;
        for (size_t t = 1 ; t <= blocks ; ++t) {
            size_t p = t * n - 2;
            if (swapped[p].index() != swapped[p + 1].index() || swapped[p].primed() == swapped[p + 1].primed())
                fail(ErrorCode::internal, "junction at position " + std::to_string(p) + " is not a factor i i'");
            std::swap(swapped[p], swapped[p + 1]);
            stages.swap_positions.push_back(p);
        }
        stages.word = Word(std::move(swapped));

        verify_or_throw(stages.concatenated, complete_bipartite(n, n), "concatenated permutation blocks");
        verify_or_throw(stages.word, crown(n), "crown construction for n = " + std::to_string(n));
        return stages;
    }

    auto halving_crown_word(std::uint32_t n) -> Word
    {
        if (n < 5)
            fail(ErrorCode::precondition, "the halving construction needs n >= 5, got " + std::to_string(n)
                    + "; use the fixed words for n <= 4");

        if (n % 2 == 0)
            return crown_construction_stages(n).word;

        auto even = crown_construction_stages(n + 1).word;
        LetterSet keep;
        for (auto l : even.alphabet())
            if (l.index() != n + 1)
                keep.insert(l);
        auto w = subword_induced(even, keep);
        verify_or_throw(w, crown(n), "crown construction for n = " + std::to_string(n));
        return w;
    }

    auto cube_graph() -> Graph
    {
        std::vector<Letter> vs;
        std::vector<Edge> edges;
        for (std::uint32_t i = 1 ; i <= 4 ; ++i) {
            vs.emplace_back(i, false);
            vs.emplace_back(i, true);
            auto next = i % 4 + 1;
            edges.emplace_back(Letter(i, false), Letter(next, false));
            edges.emplace_back(Letter(i, true), Letter(next, true));
            edges.emplace_back(Letter(i, false), Letter(i, true));
        }
        return Graph(std::move(vs), edges);
    }

    auto cube_word() -> Word
    {
        auto w = parse_word_compact("414'343'231'12'24'1'3'44'2'33'11'22'");
        verify_or_throw(w, cube_graph(), "cube word");
        return w;
    }

    auto cube_to_crown(Letter v) -> Letter
    {
        // Sends each vertex and its antipode to i and i'.
        static constexpr std::array<std::pair<std::uint32_t, bool>, 8> image{{
            {1, false}, {2, true},    // 1, 1'
            {4, true}, {3, false},    // 2, 2'
            {2, false}, {1, true},    // 3, 3'
            {3, true}, {4, false},    // 4, 4'
        }};
        if (v.index() < 1 || v.index() > 4)
            fail(ErrorCode::invalid_argument, "cube vertices are 1..4 and 1'..4', got " + to_string(v));
        auto [index, primed] = image[2 * (v.index() - 1) + (v.primed() ? 1 : 0)];
        return Letter(index, primed);
    }

    auto fixed_crown_word(std::uint32_t n) -> Word
    {
        static constexpr std::array<std::string_view, 3> words{
            "11'1'1",
            "12'21'21'12'",
            "12'3'123'1'231'2'3",
        };
        if (n < 1 || n > 4)
            fail(ErrorCode::invalid_argument, "fixed crown words exist for n in 1..4, got " + std::to_string(n));
        Word w;
        if (n == 4) {
            auto cube = cube_word();
            std::vector<Letter> letters;
            for (auto l : cube.letters())
                letters.push_back(cube_to_crown(l));
            w = Word(std::move(letters));
        }
        else
            w = parse_word_compact(words[n - 1]);
        verify_or_throw(w, crown(n), "fixed crown word for n = " + std::to_string(n));
        return w;
    }

    auto permutation_concatenation_word(std::uint32_t n) -> Word
    {
        static constexpr std::array<std::string_view, 4> words{
            "11'1'1",
            "12'21'21'12'",
            "123'32'1'132'23'1'231'13'2'",
            "1234'43'2'1'1243'34'2'1'1342'24'3'1'2341'14'3'2'",
        };
        if (n < 1 || n > 4)
            fail(ErrorCode::invalid_argument, "permutation concatenation words are tabulated for n in 1..4, got "
                    + std::to_string(n));
        auto w = parse_word_compact(words[n - 1]);
        verify_or_throw(w, crown(n), "permutation concatenation word for n = " + std::to_string(n));
        return w;
    }

    auto represent_crown(std::uint32_t n) -> Word
    {
        if (n < 1)
            fail(ErrorCode::invalid_argument, "crown graphs need n >= 1");
        auto w = n <= 4 ? fixed_crown_word(n) : halving_crown_word(n);
        verify_or_throw(w, crown(n), "crown word for n = " + std::to_string(n));
        return w;
    }
}
