#include <wordrep/word.hpp>

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace wordrep
{
    namespace
    {
        auto require_nonempty(const Word & w, const char * what) -> void
        {
            if (w.empty())
                fail(ErrorCode::invalid_argument, string(what) + ": empty word");
        }

        auto is_space(char c) -> bool
        {
            return std::isspace(static_cast<unsigned char>(c)) != 0;
        }

        auto split_tokens(string_view text) -> vector<string_view>
        {
            vector<string_view> tokens;
            size_t pos = 0;
            while (pos < text.size()) {
                while (pos < text.size() && is_space(text[pos]))
                    ++pos;
                size_t start = pos;
                while (pos < text.size() && ! is_space(text[pos]))
                    ++pos;
                if (pos > start)
                    tokens.push_back(text.substr(start, pos - start));
            }
            return tokens;
        }

        // Walks the merged occurrence lists of two letters and reports
        // whether any two neighbours in the induced subword are equal.
        auto merged_alternates(span<const size_t> xs, span<const size_t> ys) -> bool
        {
            if (xs.size() > ys.size() + 1 || ys.size() > xs.size() + 1)
                return false;

            size_t i = 0, j = 0;
            int previous = -1;
            while (i < xs.size() || j < ys.size()) {
                int current;
                if (j == ys.size() || (i < xs.size() && xs[i] < ys[j])) {
                    current = 0;
                    ++i;
                }
                else {
                    current = 1;
                    ++j;
                }
                if (current == previous)
                    return false;
                previous = current;
            }
            return true;
        }
    }

    Word::Word(vector<Letter> letters) :
        _letters(std::move(letters))
    {
        _alphabet = _letters;
        std::sort(_alphabet.begin(), _alphabet.end());
        _alphabet.erase(std::unique(_alphabet.begin(), _alphabet.end()), _alphabet.end());

        _occurrences.resize(_alphabet.size());
        for (size_t pos = 0 ; pos < _letters.size() ; ++pos) {
            auto it = std::lower_bound(_alphabet.begin(), _alphabet.end(), _letters[pos]);
            _occurrences[it - _alphabet.begin()].push_back(pos);
        }
    }

    auto Word::occurrences(Letter l) const -> span<const size_t>
    {
        auto it = std::lower_bound(_alphabet.begin(), _alphabet.end(), l);
        if (it == _alphabet.end() || *it != l)
            return {};
        return _occurrences[it - _alphabet.begin()];
    }

    auto subword_induced(const Word & w, const LetterSet & keep) -> Word
    {
        vector<Letter> kept;
        std::copy_if(w.letters().begin(), w.letters().end(), std::back_inserter(kept),
                [&] (Letter l) { return keep.contains(l); });
        return Word(std::move(kept));
    }

    auto alternates(const Word & w, Letter x, Letter y) -> bool
    {
        if (x == y)
            fail(ErrorCode::invalid_argument, "alternates: letters must differ, got " + to_string(x) + " twice");
        auto xs = w.occurrences(x), ys = w.occurrences(y);
        if (xs.empty())
            fail(ErrorCode::invalid_argument, "alternates: letter " + to_string(x) + " does not occur in the word");
        if (ys.empty())
            fail(ErrorCode::invalid_argument, "alternates: letter " + to_string(y) + " does not occur in the word");
        return merged_alternates(xs, ys);
    }

    auto induced_graph(const Word & w) -> Graph
    {
        require_nonempty(w, "induced_graph");
        const auto & alphabet = w.alphabet();
        vector<Edge> edges;
        for (size_t a = 0 ; a < alphabet.size() ; ++a)
            for (size_t b = a + 1 ; b < alphabet.size() ; ++b)
                if (merged_alternates(w.occurrences(alphabet[a]), w.occurrences(alphabet[b])))
                    edges.emplace_back(alphabet[a], alphabet[b]);
        return Graph(alphabet, edges);
    }

    auto check_representation(const Word & w, const Graph & g) -> Representation
    {
        if (w.alphabet() != g.vertices()) {
            vector<Letter> missing, extra;
            std::set_difference(g.vertices().begin(), g.vertices().end(), w.alphabet().begin(), w.alphabet().end(),
                    std::back_inserter(missing));
            std::set_difference(w.alphabet().begin(), w.alphabet().end(), g.vertices().begin(), g.vertices().end(),
                    std::back_inserter(extra));
            std::ostringstream msg;
            msg << "alphabet mismatch:";
            if (! missing.empty()) {
                msg << " graph vertices absent from word {";
                for (size_t i = 0 ; i < missing.size() ; ++i)
                    msg << (i ? " " : "") << to_string(missing[i]);
                msg << "}";
            }
            if (! extra.empty()) {
                msg << " word letters absent from graph {";
                for (size_t i = 0 ; i < extra.size() ; ++i)
                    msg << (i ? " " : "") << to_string(extra[i]);
                msg << "}";
            }
            return {false, msg.str()};
        }

        const auto & vs = g.vertices();
        for (size_t a = 0 ; a < vs.size() ; ++a)
            for (size_t b = a + 1 ; b < vs.size() ; ++b) {
                bool alt = merged_alternates(w.occurrences(vs[a]), w.occurrences(vs[b]));
                bool edge = g.adjacent_by_index(a, b);
                if (alt != edge)
                    return {false, (edge ? "edge " : "non-edge ") + to_string(vs[a]) + "-" + to_string(vs[b])
                        + (edge ? " is not alternating in the word" : " alternates in the word")};
            }

        return {true, {}};
    }

    auto represents(const Word & w, const Graph & g) -> bool
    {
        return check_representation(w, g).holds;
    }

    auto uniformity(const Word & w) -> optional<size_t>
    {
        require_nonempty(w, "uniformity");
        size_t k = w.count(w.alphabet().front());
        for (auto l : w.alphabet())
            if (w.count(l) != k)
                return std::nullopt;
        return k;
    }

    auto cyclic_shift(const Word & w, size_t s) -> Word
    {
        require_nonempty(w, "cyclic_shift");
        s %= w.size();
        vector<Letter> rotated;
        rotated.reserve(w.size());
        rotated.insert(rotated.end(), w.letters().begin() + s, w.letters().end());
        rotated.insert(rotated.end(), w.letters().begin(), w.letters().begin() + s);
        return Word(std::move(rotated));
    }

    auto nth_occurrence(const Word & w, Letter x, size_t i) -> size_t
    {
        auto occ = w.occurrences(x);
        if (i == 0 || i > occ.size())
            fail(ErrorCode::invalid_argument, "nth_occurrence: letter " + to_string(x) + " occurs "
                    + std::to_string(occ.size()) + " times, occurrence " + std::to_string(i) + " requested");
        return occ[i - 1];
    }

    auto first_letter(const Word & w) -> Letter
    {
        require_nonempty(w, "first_letter");
        return w[0];
    }

    auto last_letter(const Word & w) -> Letter
    {
        require_nonempty(w, "last_letter");
        return w[w.size() - 1];
    }

    auto parse_word_tokens(string_view text) -> Word
    {
        vector<Letter> letters;
        for (auto token : split_tokens(text))
            letters.push_back(parse_letter(token));
        return Word(std::move(letters));
    }

    auto parse_word_compact(string_view text) -> Word
    {
        vector<Letter> letters;
        for (size_t pos = 0 ; pos < text.size() ; ++pos) {
            char c = text[pos];
            if (is_space(c))
                fail(ErrorCode::parse, "compact word must not contain whitespace");
            if (c < '1' || c > '9')
                fail(ErrorCode::parse, string("unexpected character '") + c + "' in compact word at offset "
                        + std::to_string(pos));
            bool primed = pos + 1 < text.size() && text[pos + 1] == '\'';
            letters.emplace_back(static_cast<std::uint32_t>(c - '0'), primed);
            if (primed)
                ++pos;
        }
        return Word(std::move(letters));
    }

    auto parse_word(string_view text, WordFormat format) -> Word
    {
        switch (format) {
            case WordFormat::token:
                return parse_word_tokens(text);
            case WordFormat::compact: {
                auto tokens = split_tokens(text);
                if (tokens.size() > 1)
                    fail(ErrorCode::parse, "compact word must not contain whitespace");
                return parse_word_compact(tokens.empty() ? string_view{} : tokens.front());
            }
            case WordFormat::automatic:
                break;
        }

        auto tokens = split_tokens(text);
        if (tokens.size() == 1)
            return parse_word_compact(tokens.front());
        return parse_word_tokens(text);
    }

    auto to_token_string(const Word & w) -> string
    {
        string result;
        for (size_t i = 0 ; i < w.size() ; ++i) {
            if (i)
                result.push_back(' ');
            result += to_string(w[i]);
        }
        return result;
    }

    auto to_compact_string(const Word & w) -> optional<string>
    {
        string result;
        for (auto l : w.letters()) {
            if (l.index() > 9)
                return std::nullopt;
            result += to_string(l);
        }
        return result;
    }

    auto format_word(const Word & w, bool compact) -> string
    {
        if (compact)
            if (auto c = to_compact_string(w))
                return *c;
        return to_token_string(w);
    }
}
