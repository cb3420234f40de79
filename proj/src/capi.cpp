#include <wordrep/wordrep.h>

#include <wordrep/analyze.hpp>
#include <wordrep/construct.hpp>
#include <wordrep/report.hpp>
#include <wordrep/search.hpp>

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>

using namespace wordrep;

struct wr_word
{
    Word value;
};

struct wr_graph
{
    Graph value;
};

struct wr_outcome
{
    SearchOutcome value;
};

namespace
{
    thread_local std::string last_error;

    auto status_for(ErrorCode code) -> wr_status
    {
        switch (code) {
            case ErrorCode::invalid_argument: return WR_ERR_INVALID_ARGUMENT;
            case ErrorCode::parse: return WR_ERR_PARSE;
            case ErrorCode::precondition: return WR_ERR_PRECONDITION;
            case ErrorCode::internal: return WR_ERR_INTERNAL;
        }
        return WR_ERR_INTERNAL;
    }

    template <typename F>
    auto guarded(F && f) noexcept -> wr_status
    {
        last_error.clear();
        try {
            return f();
        }
        catch (const Error & e) {
            last_error = e.what();
            return status_for(e.code());
        }
        catch (const std::bad_alloc &) {
            last_error = "out of memory";
            return WR_ERR_INTERNAL;
        }
        catch (const std::exception & e) {
            last_error = e.what();
            return WR_ERR_INTERNAL;
        }
    }

    auto require(const void * p, const char * what) -> void
    {
        if (! p)
            fail(ErrorCode::invalid_argument, std::string(what) + " must not be null");
    }

    auto duplicate(const std::string & s) -> char *
    {
        auto * result = static_cast<char *>(std::malloc(s.size() + 1));
        if (! result)
            throw std::bad_alloc();
        std::memcpy(result, s.c_str(), s.size() + 1);
        return result;
    }

    auto letter_set(const char * text) -> LetterSet
    {
        require(text, "letter set");
        auto w = parse_word(text);
        return LetterSet(w.alphabet().begin(), w.alphabet().end());
    }

    auto single_letter(const char * text) -> Letter
    {
        require(text, "letter");
        std::string_view t(text);
        while (! t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
            t.remove_prefix(1);
        while (! t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
            t.remove_suffix(1);
        return parse_letter(t);
    }

    auto search_options(const wr_search_options * options) -> SearchOptions
    {
        SearchOptions result;
        if (! options)
            return result;
        if (options->budget_seconds > 0)
            result.budget = std::chrono::milliseconds(static_cast<long long>(options->budget_seconds * 1000.0));
        result.threads = options->threads == 0 ? 1 : options->threads;
        result.deterministic = options->deterministic != 0;
        return result;
    }

    auto split_or_throw(const Word & w, const LetterSet & set) -> SplitDecomposition
    {
        auto sd = find_split(w, set);
        if (! sd)
            fail(ErrorCode::precondition, "the letter set is not splittable in this word");
        return *sd;
    }

    template <typename Make>
    auto make_word(wr_word ** out, Make && make) -> wr_status
    {
        return guarded([&] {
            require(out, "out");
            *out = new wr_word{make()};
            return WR_OK;
        });
    }

    template <typename Make>
    auto make_graph(wr_graph ** out, Make && make) -> wr_status
    {
        return guarded([&] {
            require(out, "out");
            *out = new wr_graph{make()};
            return WR_OK;
        });
    }
}

extern "C" {

const char * wr_last_error(void)
{
    return last_error.c_str();
}

void wr_string_free(char * s)
{
    std::free(s);
}

const char * wr_version(void)
{
    return "1.0.0";
}

wr_status wr_word_parse(const char * text, wr_word_format format, wr_word ** out)
{
    return make_word(out, [&] {
        require(text, "text");
        auto f = format == WR_FORMAT_TOKEN ? WordFormat::token
            : format == WR_FORMAT_COMPACT ? WordFormat::compact : WordFormat::automatic;
        return parse_word(text, f);
    });
}

void wr_word_free(wr_word * w)
{
    delete w;
}

size_t wr_word_length(const wr_word * w)
{
    return w ? w->value.size() : 0;
}

wr_status wr_word_to_string(const wr_word * w, int compact, char ** out)
{
    return guarded([&] {
        require(w, "word");
        require(out, "out");
        *out = duplicate(format_word(w->value, compact != 0));
        return WR_OK;
    });
}

wr_status wr_word_uniformity(const wr_word * w, size_t * k)
{
    return guarded([&] {
        require(w, "word");
        require(k, "k");
        auto u = uniformity(w->value);
        *k = u.value_or(0);
        return u ? WR_OK : WR_FALSE;
    });
}

wr_status wr_word_cyclic_shift(const wr_word * w, size_t shift, wr_word ** out)
{
    return make_word(out, [&] {
        require(w, "word");
        return cyclic_shift(w->value, shift);
    });
}

wr_status wr_word_alternates(const wr_word * w, const char * x, const char * y)
{
    return guarded([&] {
        require(w, "word");
        return alternates(w->value, single_letter(x), single_letter(y)) ? WR_OK : WR_FALSE;
    });
}

wr_status wr_word_induced_graph(const wr_word * w, wr_graph ** out)
{
    return make_graph(out, [&] {
        require(w, "word");
        return induced_graph(w->value);
    });
}

wr_status wr_word_represents(const wr_word * w, const wr_graph * g, char ** diagnostic)
{
    return guarded([&] {
        require(w, "word");
        require(g, "graph");
        auto r = check_representation(w->value, g->value);
        if (diagnostic)
            *diagnostic = duplicate(r.diagnostic);
        return r ? WR_OK : WR_FALSE;
    });
}

wr_status wr_graph_parse_edge_list(const char * text, wr_graph ** out, char ** warnings)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        auto parsed = parse_edge_list(text);
        std::string joined;
        for (auto & w : parsed.warnings)
            joined += w + "\n";
        *out = new wr_graph{std::move(parsed.graph)};
        if (warnings)
            *warnings = duplicate(joined);
        return WR_OK;
    });
}

wr_status wr_graph_crown(uint32_t n, wr_graph ** out)
{
    return make_graph(out, [&] { return crown(n); });
}

wr_status wr_graph_complete(uint32_t m, wr_graph ** out)
{
    return make_graph(out, [&] { return complete(m); });
}

wr_status wr_graph_complete_bipartite(uint32_t p, uint32_t q, wr_graph ** out)
{
    return make_graph(out, [&] { return complete_bipartite(p, q); });
}

void wr_graph_free(wr_graph * g)
{
    delete g;
}

size_t wr_graph_vertex_count(const wr_graph * g)
{
    return g ? g->value.vertex_count() : 0;
}

size_t wr_graph_edge_count(const wr_graph * g)
{
    return g ? g->value.edge_count() : 0;
}

wr_status wr_graph_to_edge_list(const wr_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = duplicate(emit_edge_list(g->value));
        return WR_OK;
    });
}

wr_status wr_graph_to_dot(const wr_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = duplicate(emit_dot(g->value));
        return WR_OK;
    });
}

wr_status wr_graph_equal(const wr_graph * a, const wr_graph * b)
{
    return guarded([&] {
        require(a, "graph");
        require(b, "graph");
        return a->value == b->value ? WR_OK : WR_FALSE;
    });
}

wr_status wr_graph_neighborhood(const wr_graph * g, const char * vertex, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        auto nbrs = neighborhood(g->value, single_letter(vertex));
        *out = duplicate(to_token_string(Word(std::vector<Letter>(nbrs.begin(), nbrs.end()))));
        return WR_OK;
    });
}

wr_status wr_represent_crown(uint32_t n, wr_word ** out)
{
    return make_word(out, [&] { return represent_crown(n); });
}

wr_status wr_halving_crown_word(uint32_t n, wr_word ** out)
{
    return make_word(out, [&] { return halving_crown_word(n); });
}

wr_status wr_permutation_concatenation_word(uint32_t n, wr_word ** out)
{
    return make_word(out, [&] { return permutation_concatenation_word(n); });
}

wr_status wr_exists_k_word(const wr_graph * g, size_t k, const wr_search_options * options, wr_outcome ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new wr_outcome{exists_k_word(g->value, k, search_options(options))};
        return WR_OK;
    });
}

wr_status wr_repnum(const wr_graph * g, size_t k_max, const wr_search_options * options, wr_outcome ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new wr_outcome{repnum(g->value, k_max, search_options(options))};
        return WR_OK;
    });
}

void wr_outcome_free(wr_outcome * o)
{
    delete o;
}

size_t wr_outcome_k(const wr_outcome * o)
{
    return o ? o->value.k : 0;
}

wr_status wr_outcome_witness(const wr_outcome * o, wr_word ** out)
{
    return guarded([&] {
        require(o, "outcome");
        require(out, "out");
        *out = o->value.witness ? new wr_word{*o->value.witness} : nullptr;
        return *out ? WR_OK : WR_FALSE;
    });
}

int wr_outcome_exhaustive(const wr_outcome * o)
{
    return o && o->value.exhaustive;
}

int wr_outcome_budget_hit(const wr_outcome * o)
{
    return o && o->value.budget_hit;
}

uint64_t wr_outcome_nodes(const wr_outcome * o)
{
    return o ? o->value.nodes_explored : 0;
}

wr_status wr_outcome_json(const wr_outcome * o, char ** out)
{
    return guarded([&] {
        require(o, "outcome");
        require(out, "out");
        *out = duplicate(certificate_json(o->value));
        return WR_OK;
    });
}

wr_status wr_analyze_split(const wr_word * w, const char * set, char ** json)
{
    return guarded([&] {
        require(w, "word");
        require(json, "json");
        *json = nullptr;
        auto letters = letter_set(set);
        auto sd = find_split(w->value, letters);
        if (! sd)
            return WR_FALSE;
        validate_split(w->value, letters, *sd);
        *json = duplicate(split_json(*sd, letters));
        return WR_OK;
    });
}

wr_status wr_analyze_neighborhood(const wr_word * w, const wr_graph * g, const char * vertex, char ** json)
{
    return guarded([&] {
        require(w, "word");
        require(g, "graph");
        require(json, "json");
        auto v = single_letter(vertex);
        auto sd = neighborhood_split(w->value, g->value, v);
        *json = duplicate(split_json(sd, neighborhood(g->value, v)));
        return WR_OK;
    });
}

wr_status wr_analyze_edge_forcing(const wr_word * w, const wr_graph * g, const char * set, char ** json)
{
    return guarded([&] {
        require(w, "word");
        require(g, "graph");
        require(json, "json");
        auto letters = letter_set(set);
        auto sd = split_or_throw(w->value, letters);
        auto violations = edge_forcing_violations(w->value, g->value, letters, sd);
        *json = duplicate(edge_forcing_json(sd, letters, violations));
        return violations.empty() ? WR_OK : WR_FALSE;
    });
}

wr_status wr_analyze_block_span(const wr_word * w, const char * set, const char * letter, size_t first_block,
        size_t blocks, size_t * count, char ** json)
{
    return guarded([&] {
        require(w, "word");
        auto letters = letter_set(set);
        auto x = single_letter(letter);
        auto sd = split_or_throw(w->value, letters);
        auto c = count_in_block_span(sd, x, first_block, blocks);
        if (count)
            *count = c;
        if (json)
            *json = duplicate(block_span_json(sd, letters, x, first_block, blocks, c));
        return WR_OK;
    });
}

wr_status wr_analyze_endpoints(const wr_word * w, const char * set, char ** json)
{
    return guarded([&] {
        require(w, "word");
        require(json, "json");
        auto letters = letter_set(set);
        auto sd = split_or_throw(w->value, letters);
        auto coverage = endpoint_coverage(sd, letters);
        *json = duplicate(endpoint_json(sd, letters, coverage));
        return coverage.uncovered.empty() ? WR_OK : WR_FALSE;
    });
}

}
