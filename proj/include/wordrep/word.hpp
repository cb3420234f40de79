#pragma once

#include <wordrep/graph.hpp>
#include <wordrep/letter.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep
{
    // An immutable finite word over Letters, with the occurrence positions
    // of every letter precomputed. Positions are 0-based.
    class Word
    {
        public:
            Word() = default;
            explicit Word(std::vector<Letter> letters);

            [[nodiscard]] auto letters() const noexcept -> std::span<const Letter> { return _letters; }
            [[nodiscard]] auto size() const noexcept -> std::size_t { return _letters.size(); }
            [[nodiscard]] auto empty() const noexcept -> bool { return _letters.empty(); }
            [[nodiscard]] auto operator[] (std::size_t pos) const -> Letter { return _letters[pos]; }

            // Distinct letters, ascending.
            [[nodiscard]] auto alphabet() const noexcept -> const std::vector<Letter> & { return _alphabet; }

            // Ascending positions of l; empty when l does not occur.
            [[nodiscard]] auto occurrences(Letter l) const -> std::span<const std::size_t>;
            [[nodiscard]] auto count(Letter l) const -> std::size_t { return occurrences(l).size(); }
            [[nodiscard]] auto contains(Letter l) const -> bool { return count(l) != 0; }

            auto operator== (const Word & other) const -> bool { return _letters == other._letters; }

        private:
            std::vector<Letter> _letters;
            std::vector<Letter> _alphabet;
            std::vector<std::vector<std::size_t>> _occurrences;
    };

    [[nodiscard]] auto subword_induced(const Word & w, const LetterSet & keep) -> Word;

    // True iff the subword on {x, y} never has two equal neighbours. Two
    // letters occurring once each therefore always alternate. Throws if
    // x == y or if either letter is absent from w.
    [[nodiscard]] auto alternates(const Word & w, Letter x, Letter y) -> bool;

    [[nodiscard]] auto induced_graph(const Word & w) -> Graph;

    struct Representation
    {
        bool holds = false;
        std::string diagnostic;

        explicit operator bool() const noexcept { return holds; }
    };

    // Whether w represents g as a labeled graph; on failure the diagnostic
    // names the first alphabet or edge mismatch.
    [[nodiscard]] auto check_representation(const Word & w, const Graph & g) -> Representation;
    [[nodiscard]] auto represents(const Word & w, const Graph & g) -> bool;

    // k when every letter occurs exactly k times.
    [[nodiscard]] auto uniformity(const Word & w) -> std::optional<std::size_t>;

    // Rotation moving position s (mod |w|) to position 0.
    [[nodiscard]] auto cyclic_shift(const Word & w, std::size_t s) -> Word;

    // Position of the i-th occurrence of x; i counts from 1.
    [[nodiscard]] auto nth_occurrence(const Word & w, Letter x, std::size_t i) -> std::size_t;

    [[nodiscard]] auto first_letter(const Word & w) -> Letter;
    [[nodiscard]] auto last_letter(const Word & w) -> Letter;

    enum class WordFormat
    {
        automatic,
        token,
        compact
    };

    // Token form: whitespace separated letters such as "12 3' 4".
    [[nodiscard]] auto parse_word_tokens(std::string_view text) -> Word;

    // Compact form: single-digit indices with no separators, such as "3'32'1'1".
    [[nodiscard]] auto parse_word_compact(std::string_view text) -> Word;

    // Automatic: two or more whitespace-separated tokens read as token form,
    // a single token reads as compact form.
    [[nodiscard]] auto parse_word(std::string_view text, WordFormat format = WordFormat::automatic) -> Word;

    [[nodiscard]] auto to_token_string(const Word & w) -> std::string;

    // Empty when some index has more than one digit.
    [[nodiscard]] auto to_compact_string(const Word & w) -> std::optional<std::string>;

    // Compact when requested and legal, token form otherwise.
    [[nodiscard]] auto format_word(const Word & w, bool compact) -> std::string;
}
