#include <wordrep/analyze.hpp>

#include <algorithm>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace wordrep
{
    namespace
    {
        auto require_split_inputs(const Word & w, const LetterSet & letters) -> size_t
        {
            if (w.empty())
                fail(ErrorCode::invalid_argument, "split analysis: empty word");
            auto k = uniformity(w);
            if (! k)
                fail(ErrorCode::precondition, "split analysis needs a uniform word");
            if (letters.empty())
                fail(ErrorCode::invalid_argument, "split analysis needs a nonempty letter set");
            for (auto l : letters)
                if (! w.contains(l))
                    fail(ErrorCode::invalid_argument, "letter " + to_string(l) + " does not occur in the word");
            return *k;
        }

        // Splits the shifted word's A-positions into blocks of |A|, or gives
        // up as soon as a block repeats a letter.
        auto try_shift(const Word & w, const LetterSet & letters, size_t k, size_t shift)
            -> optional<SplitDecomposition>
        {
            SplitDecomposition sd;
            sd.shift = shift;
            sd.shifted = cyclic_shift(w, shift);

            const size_t m = letters.size();
            LetterSet in_block;
            vector<size_t> block;
            for (size_t pos = 0 ; pos < sd.shifted.size() ; ++pos) {
                auto l = sd.shifted[pos];
                if (! letters.contains(l))
                    continue;
                if (! in_block.insert(l).second)
                    return std::nullopt;
                block.push_back(pos);
                if (block.size() == m) {
                    sd.blocks.push_back(std::move(block));
                    block.clear();
                    in_block.clear();
                }
            }
            if (sd.blocks.size() != k)
                return std::nullopt;

            for (size_t i = 0 ; i < k ; ++i) {
                size_t gap_end = i + 1 < k ? sd.blocks[i + 1].front() : sd.shifted.size();
                sd.factors.push_back({sd.blocks[i].front(), sd.blocks[i].back(), sd.blocks[i].back() + 1, gap_end});
            }
            return sd;
        }

        auto inconsistent(const string & why) -> void
        {
            fail(ErrorCode::invalid_argument, "split decomposition is inconsistent with the word: " + why);
        }
    }

    auto SplitDecomposition::block_letters(size_t i) const -> vector<Letter>
    {
        vector<Letter> result;
        for (auto pos : blocks.at(i))
            result.push_back(shifted[pos]);
        return result;
    }

    auto find_split(const Word & w, const LetterSet & letters) -> optional<SplitDecomposition>
    {
        auto k = require_split_inputs(w, letters);
        for (size_t shift = 0 ; shift < w.size() ; ++shift)
            if (letters.contains(w[shift]))
                if (auto sd = try_shift(w, letters, k, shift))
                    return sd;
        return std::nullopt;
    }

    auto validate_split(const Word & w, const LetterSet & letters, const SplitDecomposition & sd) -> void
    {
        auto k = require_split_inputs(w, letters);
        if (sd.shifted != cyclic_shift(w, sd.shift))
            inconsistent("shifted word is not the stated rotation");
        if (sd.blocks.size() != k || sd.factors.size() != k)
            inconsistent("expected " + std::to_string(k) + " blocks");

        vector<size_t> concatenated;
        for (size_t i = 0 ; i < k ; ++i) {
            auto block = sd.block_letters(i);
            LetterSet distinct(block.begin(), block.end());
            if (block.size() != letters.size() || distinct != letters)
                inconsistent("block " + std::to_string(i + 1) + " is not a permutation of the set");
            if (! std::is_sorted(sd.blocks[i].begin(), sd.blocks[i].end()))
                inconsistent("block positions are not increasing");
            concatenated.insert(concatenated.end(), sd.blocks[i].begin(), sd.blocks[i].end());
        }

        vector<size_t> induced;
        for (size_t pos = 0 ; pos < sd.shifted.size() ; ++pos)
            if (letters.contains(sd.shifted[pos]))
                induced.push_back(pos);
        if (concatenated != induced)
            inconsistent("blocks do not concatenate to the induced subword");

        size_t expected_start = 0;
        for (size_t i = 0 ; i < k ; ++i) {
            const auto & f = sd.factors[i];
            if (f.block_first != expected_start || f.block_first != sd.blocks[i].front()
                    || f.block_last != sd.blocks[i].back() || f.gap_first != f.block_last + 1 || f.gap_end < f.gap_first)
                inconsistent("factor " + std::to_string(i + 1) + " has wrong boundaries");
            expected_start = f.gap_end;
        }
        if (expected_start != sd.shifted.size())
            inconsistent("factors do not cover the word");

        // Every i-th occurrence of a letter of A precedes every j-th one for i < j.
        for (auto a : letters)
            for (auto b : letters) {
                auto oa = sd.shifted.occurrences(a), ob = sd.shifted.occurrences(b);
                for (size_t i = 0 ; i + 1 < k ; ++i)
                    if (oa[i] > ob[i + 1])
                        inconsistent("occurrence " + std::to_string(i + 1) + " of " + to_string(a)
                                + " follows occurrence " + std::to_string(i + 2) + " of " + to_string(b));
            }
    }

    auto neighborhood_split(const Word & w, const Graph & g, Letter v) -> SplitDecomposition
    {
        auto nbrs = neighborhood(g, v);
        if (nbrs.empty())
            fail(ErrorCode::precondition, "vertex " + to_string(v) + " has no neighbours");
        auto sd = find_split(w, nbrs);
        if (! sd)
            fail(ErrorCode::precondition, "neighbourhood of " + to_string(v)
                    + " is not splittable, so the word does not represent the graph");
        return *sd;
    }

    auto edge_forcing_violations(const Word & w, const Graph & g, const LetterSet & letters,
            const SplitDecomposition & sd) -> vector<EdgeForcingViolation>
    {
        validate_split(w, letters, sd);
        for (auto l : letters)
            if (! g.contains(l))
                fail(ErrorCode::invalid_argument, "letter " + to_string(l) + " is not a vertex of the graph");

        vector<EdgeForcingViolation> violations;
        for (auto x : g.vertices()) {
            if (letters.contains(x) || ! sd.shifted.contains(x))
                continue;
            auto x1 = sd.shifted.occurrences(x).front();
            for (auto a : letters) {
                if (! g.adjacent(a, x) || sd.shifted.occurrences(a).front() >= x1)
                    continue;
                for (auto b : letters)
                    if (b != a && g.adjacent(b, x) && x1 < sd.shifted.occurrences(b).front() && ! g.adjacent(a, b))
                        violations.push_back({a, x, b});
            }
        }
        return violations;
    }

    auto count_in_block_span(const SplitDecomposition & sd, Letter x, size_t i, size_t t) -> size_t
    {
        if (i < 1 || t < 1 || i + t - 1 > sd.k())
            fail(ErrorCode::invalid_argument, "block span " + std::to_string(i) + ".." + std::to_string(i + t - 1)
                    + " is outside 1.." + std::to_string(sd.k()));
        auto first = sd.factors[i - 1].block_first;
        auto last = sd.factors[i + t - 2].block_last;
        auto occ = sd.shifted.occurrences(x);
        return std::count_if(occ.begin(), occ.end(), [&] (size_t p) { return p >= first && p <= last; });
    }

    auto endpoint_coverage(const SplitDecomposition & sd, const LetterSet & letters) -> EndpointCoverage
    {
        EndpointCoverage result;
        for (size_t i = 0 ; i < sd.k() ; ++i) {
            auto l = sd.shifted[sd.blocks[i].front()], r = sd.shifted[sd.blocks[i].back()];
            if (letters.contains(l))
                result.covered.insert(l);
            if (letters.contains(r))
                result.covered.insert(r);
        }
        for (auto a : letters)
            if (! result.covered.contains(a))
                result.uncovered.insert(a);
        return result;
    }
}
