#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wordrep/wordrep.h>

#include <json.hpp>

#include <memory>
#include <string>

namespace
{
    struct Owned
    {
        char * s = nullptr;
        ~Owned() { wr_string_free(s); }
        auto str() const -> std::string { return s ? s : ""; }
    };

    auto word(const char * text) -> std::unique_ptr<wr_word, void (*)(wr_word *)>
    {
        wr_word * w = nullptr;
        REQUIRE(wr_word_parse(text, WR_FORMAT_AUTO, &w) == WR_OK);
        return {w, wr_word_free};
    }

    auto crown(uint32_t n) -> std::unique_ptr<wr_graph, void (*)(wr_graph *)>
    {
        wr_graph * g = nullptr;
        REQUIRE(wr_graph_crown(n, &g) == WR_OK);
        return {g, wr_graph_free};
    }
}

TEST_CASE("word handles")
{
    auto w = word("14213243");
    CHECK(wr_word_length(w.get()) == 8);
    size_t k = 0;
    CHECK(wr_word_uniformity(w.get(), &k) == WR_OK);
    CHECK(k == 2);
    CHECK(wr_word_alternates(w.get(), "1", "2") == WR_OK);
    CHECK(wr_word_alternates(w.get(), "1", "3") == WR_FALSE);
    CHECK(wr_word_alternates(w.get(), "1", "9") == WR_ERR_INVALID_ARGUMENT);
    CHECK(std::string(wr_last_error()).find("does not occur") != std::string::npos);

    wr_word * shifted = nullptr;
    REQUIRE(wr_word_cyclic_shift(w.get(), 1, &shifted) == WR_OK);
    Owned text;
    REQUIRE(wr_word_to_string(shifted, 1, &text.s) == WR_OK);
    CHECK(text.str() == "42132431");
    wr_word_free(shifted);

    auto uneven = word("1122233");
    CHECK(wr_word_uniformity(uneven.get(), &k) == WR_FALSE);
}

TEST_CASE("status codes and error text")
{
    wr_word * w = nullptr;
    CHECK(wr_word_parse("1 0", WR_FORMAT_AUTO, &w) == WR_ERR_PARSE);
    CHECK(w == nullptr);
    CHECK(std::string(wr_last_error()).find("at least 1") != std::string::npos);
    CHECK(wr_word_parse(nullptr, WR_FORMAT_AUTO, &w) == WR_ERR_INVALID_ARGUMENT);

    wr_graph * g = nullptr;
    CHECK(wr_graph_parse_edge_list("1 1\n", &g, nullptr) == WR_ERR_PARSE);
    CHECK(wr_graph_crown(0, &g) == WR_ERR_INVALID_ARGUMENT);

    CHECK(wr_halving_crown_word(4, &w) == WR_ERR_PRECONDITION);
    CHECK(wr_permutation_concatenation_word(7, &w) == WR_ERR_INVALID_ARGUMENT);

    // A successful call clears the previous message.
    REQUIRE(wr_represent_crown(2, &w) == WR_OK);
    CHECK(std::string(wr_last_error()).empty());
    wr_word_free(w);

    wr_word_free(nullptr);
    wr_graph_free(nullptr);
    wr_outcome_free(nullptr);
    wr_string_free(nullptr);
}

TEST_CASE("graphs, representation and induction")
{
    Owned warnings;
    wr_graph * raw = nullptr;
    REQUIRE(wr_graph_parse_edge_list("1 2\n2 3\n3 4\n4 1\n1 2\n", &raw, &warnings.s) == WR_OK);
    std::unique_ptr<wr_graph, void (*)(wr_graph *)> c4(raw, wr_graph_free);
    CHECK(warnings.str().find("duplicate edge") != std::string::npos);
    CHECK(wr_graph_vertex_count(c4.get()) == 4);
    CHECK(wr_graph_edge_count(c4.get()) == 4);

    auto w = word("14213243");
    Owned diag;
    CHECK(wr_word_represents(w.get(), c4.get(), &diag.s) == WR_OK);
    CHECK(diag.str().empty());

    auto c3 = crown(3);
    Owned diag2;
    CHECK(wr_word_represents(w.get(), c3.get(), &diag2.s) == WR_FALSE);
    CHECK(diag2.str().find("alphabet mismatch") != std::string::npos);

    wr_graph * induced = nullptr;
    REQUIRE(wr_word_induced_graph(w.get(), &induced) == WR_OK);
    CHECK(wr_graph_equal(induced, c4.get()) == WR_OK);
    CHECK(wr_graph_equal(induced, c3.get()) == WR_FALSE);
    wr_graph_free(induced);

    Owned edges, dot, nbrs;
    REQUIRE(wr_graph_to_edge_list(c3.get(), &edges.s) == WR_OK);
    CHECK(edges.str().rfind("p 6\n", 0) == 0);
    REQUIRE(wr_graph_to_dot(c3.get(), &dot.s) == WR_OK);
    CHECK(dot.str().find("\"1\" -- \"2'\"") != std::string::npos);
    REQUIRE(wr_graph_neighborhood(c3.get(), "1'", &nbrs.s) == WR_OK);
    CHECK(nbrs.str() == "2 3");
    char * missing = nullptr;
    CHECK(wr_graph_neighborhood(c3.get(), "7", &missing) == WR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("constructions")
{
    for (uint32_t n = 1 ; n <= 16 ; ++n) {
        wr_word * w = nullptr;
        REQUIRE(wr_represent_crown(n, &w) == WR_OK);
        auto g = crown(n);
        CHECK(wr_word_represents(w, g.get(), nullptr) == WR_OK);
        wr_word_free(w);
    }
    wr_word * w = nullptr;
    REQUIRE(wr_permutation_concatenation_word(3, &w) == WR_OK);
    Owned text;
    REQUIRE(wr_word_to_string(w, 1, &text.s) == WR_OK);
    CHECK(text.str() == "123'32'1'132'23'1'231'13'2'");
    wr_word_free(w);
}

TEST_CASE("search outcomes")
{
    auto g = crown(3);
    wr_search_options options{0, 1, 1};
    wr_outcome * raw = nullptr;
    REQUIRE(wr_repnum(g.get(), 3, &options, &raw) == WR_OK);
    std::unique_ptr<wr_outcome, void (*)(wr_outcome *)> outcome(raw, wr_outcome_free);
    CHECK(wr_outcome_k(outcome.get()) == 2);
    CHECK(wr_outcome_exhaustive(outcome.get()));
    CHECK_FALSE(wr_outcome_budget_hit(outcome.get()));
    CHECK(wr_outcome_nodes(outcome.get()) > 0);

    wr_word * witness = nullptr;
    REQUIRE(wr_outcome_witness(outcome.get(), &witness) == WR_OK);
    CHECK(wr_word_represents(witness, g.get(), nullptr) == WR_OK);
    wr_word_free(witness);

    Owned json;
    REQUIRE(wr_outcome_json(outcome.get(), &json.s) == WR_OK);
    auto doc = nlohmann::json::parse(json.str());
    CHECK(doc["k"] == 2);
    CHECK(doc["exhaustive"] == true);
    CHECK(doc["budget_hit"] == false);
    CHECK(doc["witness"].is_string());
    CHECK(doc["graph"].get<std::string>().rfind("p 6\n", 0) == 0);
    REQUIRE(doc["levels"].size() == 2);
    CHECK(doc["levels"][0]["result"] == "refuted");
    CHECK(doc["levels"][1]["result"] == "witness");
    CHECK(doc.contains("elapsed_ms"));
    CHECK(doc.contains("nodes_explored"));

    wr_outcome * refuted = nullptr;
    REQUIRE(wr_exists_k_word(g.get(), 1, nullptr, &refuted) == WR_OK);
    CHECK(wr_outcome_witness(refuted, &witness) == WR_FALSE);
    CHECK(witness == nullptr);
    CHECK(wr_outcome_exhaustive(refuted));
    Owned refuted_json;
    REQUIRE(wr_outcome_json(refuted, &refuted_json.s) == WR_OK);
    CHECK(nlohmann::json::parse(refuted_json.str())["witness"].is_null());
    wr_outcome_free(refuted);

    CHECK(wr_repnum(g.get(), 0, nullptr, &raw) == WR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("analysis reports")
{
    wr_word * raw = nullptr;
    REQUIRE(wr_represent_crown(6, &raw) == WR_OK);
    std::unique_ptr<wr_word, void (*)(wr_word *)> w(raw, wr_word_free);
    auto g = crown(6);

    Owned split;
    REQUIRE(wr_analyze_split(w.get(), "1 2 3 4 5 6", &split.s) == WR_OK);
    auto doc = nlohmann::json::parse(split.str());
    CHECK(doc["k"] == 3);
    CHECK(doc["blocks"].size() == 3);
    CHECK(doc["blocks"][0][0] == 0);
    CHECK(doc["factors"].size() == 3);

    Owned ends;
    CHECK(wr_analyze_endpoints(w.get(), "123456", &ends.s) == WR_OK);
    auto ends_doc = nlohmann::json::parse(ends.str());
    CHECK(ends_doc["uncovered"].empty());
    CHECK(ends_doc["two_k_at_least_set_size"] == true);

    Owned forcing;
    CHECK(wr_analyze_edge_forcing(w.get(), g.get(), "1 2 3 4 5 6", &forcing.s) == WR_OK);
    CHECK(nlohmann::json::parse(forcing.str())["violations"].empty());

    Owned nbr;
    REQUIRE(wr_analyze_neighborhood(w.get(), g.get(), "1'", &nbr.s) == WR_OK);
    CHECK(nlohmann::json::parse(nbr.str())["set"].size() == 5);

    size_t count = 99;
    Owned span;
    REQUIRE(wr_analyze_block_span(w.get(), "2 3 4 5 6", "1", 1, 1, &count, &span.s) == WR_OK);
    CHECK(count <= 1);
    CHECK(nlohmann::json::parse(span.str())["count"] == count);

    auto stuck = word("111222");
    char * none = nullptr;
    CHECK(wr_analyze_split(stuck.get(), "12", &none) == WR_FALSE);
    CHECK(none == nullptr);
    CHECK(wr_analyze_endpoints(stuck.get(), "12", &none) == WR_ERR_PRECONDITION);
    CHECK(wr_analyze_block_span(w.get(), "123456", "1", 3, 2, &count, nullptr) == WR_ERR_INVALID_ARGUMENT);
}
