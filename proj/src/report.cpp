#include <wordrep/report.hpp>

#include <json.hpp>

using json = nlohmann::ordered_json;

using std::size_t;
using std::string;
using std::vector;

namespace wordrep
{
    namespace
    {
        auto letters_json(const LetterSet & letters) -> json
        {
            auto result = json::array();
            for (auto l : letters)
                result.push_back(to_string(l));
            return result;
        }

        auto split_object(const SplitDecomposition & sd, const LetterSet & letters) -> json
        {
            json j;
            j["set"] = letters_json(letters);
            j["shift"] = sd.shift;
            j["k"] = sd.k();
            j["shifted"] = to_token_string(sd.shifted);
            j["blocks"] = sd.blocks;
            auto block_letters = json::array();
            for (size_t i = 0 ; i < sd.k() ; ++i) {
                auto block = json::array();
                for (auto l : sd.block_letters(i))
                    block.push_back(to_string(l));
                block_letters.push_back(std::move(block));
            }
            j["block_letters"] = std::move(block_letters);
            auto factors = json::array();
            for (auto & f : sd.factors)
                factors.push_back({{"block", {f.block_first, f.block_last}}, {"gap", {f.gap_first, f.gap_end}}});
            j["factors"] = std::move(factors);
            return j;
        }
    }

    auto certificate_json(const SearchOutcome & outcome) -> string
    {
        json j;
        j["graph"] = outcome.graph;
        j["k"] = outcome.k;
        j["witness"] = outcome.witness ? json(to_token_string(*outcome.witness)) : json(nullptr);
        j["exhaustive"] = outcome.exhaustive;
        j["nodes_explored"] = outcome.nodes_explored;
        j["elapsed_ms"] = outcome.elapsed.count();
        j["budget_hit"] = outcome.budget_hit;
        auto levels = json::array();
        for (auto & level : outcome.levels)
            levels.push_back({
                    {"k", level.k},
                    {"result", to_string(level.status)},
                    {"nodes", level.nodes},
                    {"elapsed_ms", level.elapsed.count()}});
        j["levels"] = std::move(levels);
        return j.dump(2);
    }

    auto split_json(const SplitDecomposition & sd, const LetterSet & letters) -> string
    {
        return split_object(sd, letters).dump(2);
    }

    auto edge_forcing_json(const SplitDecomposition & sd, const LetterSet & letters,
            const vector<EdgeForcingViolation> & violations) -> string
    {
        auto j = split_object(sd, letters);
        auto list = json::array();
        for (auto & v : violations)
            list.push_back({{"a", to_string(v.a)}, {"x", to_string(v.x)}, {"b", to_string(v.b)}});
        j["violations"] = std::move(list);
        return j.dump(2);
    }

    auto endpoint_json(const SplitDecomposition & sd, const LetterSet & letters, const EndpointCoverage & coverage)
        -> string
    {
        auto j = split_object(sd, letters);
        j["covered"] = letters_json(coverage.covered);
        j["uncovered"] = letters_json(coverage.uncovered);
        j["two_k_at_least_set_size"] = 2 * sd.k() >= letters.size();
        return j.dump(2);
    }

    auto block_span_json(const SplitDecomposition & sd, const LetterSet & letters, Letter x, size_t i, size_t t,
            size_t count) -> string
    {
        auto j = split_object(sd, letters);
        j["letter"] = to_string(x);
        j["first_block"] = i;
        j["blocks_spanned"] = t;
        j["count"] = count;
        return j.dump(2);
    }
}
