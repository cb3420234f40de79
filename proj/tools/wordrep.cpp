// Command-line front end. Talks to the library only through the C API.

#include <wordrep/wordrep.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_false = 1,
        exit_usage = 2,
        exit_budget = 3
    };

    struct CliError
    {
        std::string message;
    };

    struct WordDeleter { void operator() (wr_word * w) const { wr_word_free(w); } };
    struct GraphDeleter { void operator() (wr_graph * g) const { wr_graph_free(g); } };
    struct OutcomeDeleter { void operator() (wr_outcome * o) const { wr_outcome_free(o); } };
    struct StringDeleter { void operator() (char * s) const { wr_string_free(s); } };

    using WordPtr = std::unique_ptr<wr_word, WordDeleter>;
    using GraphPtr = std::unique_ptr<wr_graph, GraphDeleter>;
    using OutcomePtr = std::unique_ptr<wr_outcome, OutcomeDeleter>;
    using StringPtr = std::unique_ptr<char, StringDeleter>;

    // Errors become CliError; WR_OK and WR_FALSE pass through.
    auto check(wr_status s) -> wr_status
    {
        if (s != WR_OK && s != WR_FALSE)
            throw CliError{wr_last_error()};
        return s;
    }

    auto take(char * s) -> std::string
    {
        StringPtr owned(s);
        return owned ? std::string(owned.get()) : std::string();
    }

    auto read_input(const std::string & path) -> std::string
    {
        if (path == "-") {
            return std::string(std::istreambuf_iterator<char>(std::cin), {});
        }
        std::ifstream in(path);
        if (! in)
            throw CliError{"cannot open '" + path + "'"};
        return std::string(std::istreambuf_iterator<char>(in), {});
    }

    auto load_word(const std::string & path, const std::string & format) -> WordPtr
    {
        auto f = format == "token" ? WR_FORMAT_TOKEN : format == "compact" ? WR_FORMAT_COMPACT : WR_FORMAT_AUTO;
        wr_word * w = nullptr;
        check(wr_word_parse(read_input(path).c_str(), f, &w));
        return WordPtr(w);
    }

    auto load_graph(const std::string & path) -> GraphPtr
    {
        wr_graph * g = nullptr;
        char * warnings = nullptr;
        check(wr_graph_parse_edge_list(read_input(path).c_str(), &g, &warnings));
        auto text = take(warnings);
        if (! text.empty())
            std::cerr << "warning: " << text;
        return GraphPtr(g);
    }

    auto word_text(const wr_word * w, bool compact) -> std::string
    {
        char * s = nullptr;
        check(wr_word_to_string(w, compact, &s));
        return take(s);
    }

    auto json_escape(const std::string & s) -> std::string
    {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\')
                out.push_back('\\');
            if (c == '\n') {
                out += "\\n";
                continue;
            }
            out.push_back(c);
        }
        return out;
    }

    auto default_threads() -> unsigned
    {
        if (const char * env = std::getenv("WORDREP_THREADS")) {
            try {
                auto t = std::stoul(env);
                if (t > 0)
                    return static_cast<unsigned>(t);
            }
            catch (const std::exception &) {
            }
            throw CliError{std::string("WORDREP_THREADS must be a positive integer, got '") + env + "'"};
        }
        return 1;
    }

    struct Config
    {
        std::string out_path;
        std::string family = "crown";
        std::uint32_t n = 0;
        std::uint32_t m = 0;
        bool compact = false;
        bool token = false;
        bool dot = false;
        bool json = false;
        bool plain = false;
        std::string word_path = "-";
        std::string graph_path;
        std::string word_format = "auto";
        std::size_t max_k = 4;
        double budget_seconds = 0;
        unsigned threads = 0;
        bool deterministic = false;
        std::string set;
        std::string vertex;
        std::string letter;
        std::size_t first_block = 1;
        std::size_t blocks = 1;
    };

    auto run(int argc, char ** argv) -> int
    {
        CLI::App app{"Word-representable graph toolkit: crown-graph constructions, verification, "
            "split analysis and exact representation numbers"};
        app.require_subcommand(1);
        Config cfg;
        app.add_option("--out", cfg.out_path, "Write results to this file instead of stdout");

        auto add_word_format = [&] (CLI::App * sub) {
            auto * c = sub->add_flag("--compact", cfg.compact, "Print words without separators when legal");
            auto * t = sub->add_flag("--token", cfg.token, "Print words as whitespace-separated tokens (default)");
            c->excludes(t);
        };
        auto add_output_format = [&] (CLI::App * sub) {
            auto * j = sub->add_flag("--json", cfg.json, "Machine-readable JSON output");
            auto * p = sub->add_flag("--plain", cfg.plain, "Plain text output (default)");
            j->excludes(p);
        };
        auto add_word_input = [&] (CLI::App * sub) {
            sub->add_option("-w,--word", cfg.word_path, "Word file, '-' for stdin")->capture_default_str();
            sub->add_option("--word-format", cfg.word_format, "Input word format")
                ->check(CLI::IsMember({"auto", "token", "compact"}))->capture_default_str();
        };

        auto * gen = app.add_subcommand("gen-graph", "Emit a graph from a built-in family");
        gen->add_option("--family", cfg.family, "crown, complete or complete-bipartite")
            ->check(CLI::IsMember({"crown", "complete", "complete-bipartite"}))->capture_default_str();
        gen->add_option("-n", cfg.n, "Family size")->required();
        gen->add_option("-m", cfg.m, "Second side for complete-bipartite (defaults to n)");
        gen->add_flag("--dot", cfg.dot, "Emit Graphviz DOT instead of an edge list");

        auto * crown_cmd = app.add_subcommand("represent-crown", "Emit a shortest known uniform word for crown(n)");
        crown_cmd->add_option("-n", cfg.n, "Crown size")->required();
        add_word_format(crown_cmd);

        auto * table = app.add_subcommand("table1-word", "Emit crown(n) as a concatenation of n permutations, n <= 4");
        table->add_option("-n", cfg.n, "Crown size")->required();
        add_word_format(table);

        auto * verify = app.add_subcommand("verify", "Check that a word represents a graph");
        add_word_input(verify);
        verify->add_option("-g,--graph", cfg.graph_path, "Edge-list file")->required();
        add_output_format(verify);

        auto * induce = app.add_subcommand("induce", "Emit the graph a word represents");
        add_word_input(induce);
        induce->add_flag("--dot", cfg.dot, "Emit Graphviz DOT instead of an edge list");

        auto * rep = app.add_subcommand("repnum", "Exact representation number by exhaustive search");
        rep->add_option("-g,--graph", cfg.graph_path, "Edge-list file, '-' for stdin")->required();
        rep->add_option("--max-k", cfg.max_k, "Largest k to try")->capture_default_str();
        rep->add_option("--budget", cfg.budget_seconds, "Seconds allowed per level (0 = unlimited)");
        rep->add_option("--threads", cfg.threads, "Worker threads (default $WORDREP_THREADS or 1)");
        rep->add_flag("--deterministic", cfg.deterministic, "Single-threaded reproducible search");
        add_output_format(rep);
        add_word_format(rep);

        auto * analyze = app.add_subcommand("analyze", "Split analysis of a uniform word");
        analyze->require_subcommand(1);
        auto * a_split = analyze->add_subcommand("split", "Find the canonical split of a letter set");
        auto * a_end = analyze->add_subcommand("endpoints", "Letters opening or closing a permutation block");
        auto * a_nbr = analyze->add_subcommand("neighborhood", "Split the neighbourhood of a vertex");
        auto * a_l1 = analyze->add_subcommand("lemma1", "Edge-forcing violations along a split");
        auto * a_c1 = analyze->add_subcommand("claim1", "Count a letter over consecutive blocks of a split");
        for (auto * sub : {a_split, a_end, a_nbr, a_l1, a_c1})
            add_word_input(sub);
        for (auto * sub : {a_split, a_end, a_c1})
            sub->add_option("--set", cfg.set, "Letter set, e.g. \"1 2 3\"")->required();
        a_l1->add_option("--set", cfg.set, "Letter set, e.g. \"1 2 3\"");
        a_l1->add_option("-v,--vertex", cfg.vertex, "Use the neighbourhood of this vertex as the set");
        for (auto * sub : {a_nbr, a_l1})
            sub->add_option("-g,--graph", cfg.graph_path, "Edge-list file")->required();
        a_nbr->add_option("-v,--vertex", cfg.vertex, "Vertex")->required();
        a_c1->add_option("-x,--letter", cfg.letter, "Letter to count")->required();
        a_c1->add_option("-i,--first-block", cfg.first_block, "First block, from 1")->capture_default_str();
        a_c1->add_option("-t,--blocks", cfg.blocks, "Number of consecutive blocks")->capture_default_str();

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::Success & e) {
            return app.exit(e);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e);
            return exit_usage;
        }

        std::ostringstream out;
        int code = exit_ok;

        if (*gen) {
            GraphPtr g;
            wr_graph * raw = nullptr;
            if (cfg.family == "crown")
                check(wr_graph_crown(cfg.n, &raw));
            else if (cfg.family == "complete")
                check(wr_graph_complete(cfg.n, &raw));
            else
                check(wr_graph_complete_bipartite(cfg.n, cfg.m ? cfg.m : cfg.n, &raw));
            g.reset(raw);
            char * text = nullptr;
            check(cfg.dot ? wr_graph_to_dot(g.get(), &text) : wr_graph_to_edge_list(g.get(), &text));
            out << take(text);
        }
        else if (*crown_cmd || *table) {
            wr_word * raw = nullptr;
            check(*crown_cmd ? wr_represent_crown(cfg.n, &raw) : wr_permutation_concatenation_word(cfg.n, &raw));
            WordPtr w(raw);
            out << word_text(w.get(), cfg.compact) << '\n';
        }
        else if (*verify) {
            if (cfg.word_path == "-" && cfg.graph_path == "-")
                throw CliError{"word and graph cannot both be read from stdin"};
            auto w = load_word(cfg.word_path, cfg.word_format);
            auto g = load_graph(cfg.graph_path);
            char * diag = nullptr;
            auto s = check(wr_word_represents(w.get(), g.get(), &diag));
            auto diagnostic = take(diag);
            std::size_t k = 0;
            bool uniform = wr_word_length(w.get()) > 0 && check(wr_word_uniformity(w.get(), &k)) == WR_OK;
            if (cfg.json) {
                out << "{\"represents\": " << (s == WR_OK ? "true" : "false")
                    << ", \"uniformity\": " << (uniform ? std::to_string(k) : "null")
                    << ", \"diagnostic\": \"" << json_escape(diagnostic) << "\"}\n";
            }
            else
                out << (s == WR_OK ? "true" : "false") << '\n';
            if (s != WR_OK) {
                std::cerr << "wordrep: " << diagnostic << '\n';
                code = exit_false;
            }
        }
        else if (*induce) {
            auto w = load_word(cfg.word_path, cfg.word_format);
            wr_graph * raw = nullptr;
            check(wr_word_induced_graph(w.get(), &raw));
            GraphPtr g(raw);
            char * text = nullptr;
            check(cfg.dot ? wr_graph_to_dot(g.get(), &text) : wr_graph_to_edge_list(g.get(), &text));
            out << take(text);
        }
        else if (*rep) {
            auto g = load_graph(cfg.graph_path);
            wr_search_options options{cfg.budget_seconds, cfg.threads ? cfg.threads : default_threads(),
                cfg.deterministic ? 1 : 0};
            wr_outcome * raw = nullptr;
            check(wr_repnum(g.get(), cfg.max_k, &options, &raw));
            OutcomePtr outcome(raw);
            wr_word * wraw = nullptr;
            bool found = check(wr_outcome_witness(outcome.get(), &wraw)) == WR_OK;
            WordPtr witness(wraw);
            bool exhaustive = wr_outcome_exhaustive(outcome.get());
            bool budget = wr_outcome_budget_hit(outcome.get());

            if (cfg.json) {
                char * text = nullptr;
                check(wr_outcome_json(outcome.get(), &text));
                out << take(text) << '\n';
            }
            else {
                if (found)
                    out << "k " << wr_outcome_k(outcome.get()) << '\n'
                        << "witness " << word_text(witness.get(), cfg.compact) << '\n';
                else
                    out << "k none (no witness up to " << cfg.max_k << ")\n";
                out << "exhaustive " << (exhaustive ? "true" : "false") << '\n'
                    << "budget_hit " << (budget ? "true" : "false") << '\n'
                    << "nodes " << wr_outcome_nodes(outcome.get()) << '\n';
            }

            if (budget)
                code = exit_budget;
            else if (! found)
                code = exit_false;
        }
        else if (*analyze) {
            auto w = load_word(cfg.word_path, cfg.word_format);
            char * json = nullptr;
            wr_status s = WR_OK;
            if (*a_split)
                s = check(wr_analyze_split(w.get(), cfg.set.c_str(), &json));
            else if (*a_end)
                s = check(wr_analyze_endpoints(w.get(), cfg.set.c_str(), &json));
            else if (*a_c1) {
                std::size_t count = 0;
                s = check(wr_analyze_block_span(w.get(), cfg.set.c_str(), cfg.letter.c_str(), cfg.first_block,
                            cfg.blocks, &count, &json));
            }
            else {
                auto g = load_graph(cfg.graph_path);
                if (*a_nbr)
                    s = check(wr_analyze_neighborhood(w.get(), g.get(), cfg.vertex.c_str(), &json));
                else {
                    if (cfg.set.empty() == cfg.vertex.empty())
                        throw CliError{"lemma1 needs exactly one of --set or --vertex"};
                    std::string set = cfg.set;
                    if (! cfg.vertex.empty()) {
                        char * nbrs = nullptr;
                        check(wr_graph_neighborhood(g.get(), cfg.vertex.c_str(), &nbrs));
                        set = take(nbrs);
                        if (set.empty())
                            throw CliError{"vertex " + cfg.vertex + " has no neighbours"};
                    }
                    s = check(wr_analyze_edge_forcing(w.get(), g.get(), set.c_str(), &json));
                }
            }
            auto text = take(json);
            if (s == WR_FALSE && text.empty())
                out << "null\n";
            else
                out << text << '\n';
            if (s == WR_FALSE)
                code = exit_false;
        }

        if (cfg.out_path.empty())
            std::cout << out.str();
        else {
            std::ofstream file(cfg.out_path);
            if (! file)
                throw CliError{"cannot write '" + cfg.out_path + "'"};
            file << out.str();
        }
        return code;
    }
}

auto main(int argc, char ** argv) -> int
{
    try {
        return run(argc, argv);
    }
    catch (const CliError & e) {
        std::cerr << "wordrep: " << e.message << '\n';
        return exit_usage;
    }
}
