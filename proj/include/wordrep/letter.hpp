#pragma once

#include <wordrep/error.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>

namespace wordrep
{
    // A vertex name: a positive index, optionally primed (i versus i').
    // Ordered by (index, primed), so 1 < 1' < 2 < 2'.
    class Letter
    {
        public:
            constexpr Letter(std::uint32_t index, bool primed = false) :
                _index(index),
                _primed(primed)
            {
                if (index == 0)
                    fail(ErrorCode::invalid_argument, "letter index must be at least 1");
            }

            [[nodiscard]] constexpr auto index() const noexcept -> std::uint32_t { return _index; }
            [[nodiscard]] constexpr auto primed() const noexcept -> bool { return _primed; }

            // i <-> i'
            [[nodiscard]] constexpr auto toggled() const -> Letter { return Letter(_index, ! _primed); }

            constexpr auto operator<=> (const Letter &) const = default;

        private:
            std::uint32_t _index;
            bool _primed;
    };

    using LetterSet = std::set<Letter>;

    [[nodiscard]] auto to_string(Letter l) -> std::string;

    // Parses one token: a decimal index >= 1 optionally followed by a single '.
    [[nodiscard]] auto parse_letter(std::string_view token) -> Letter;
}

template <>
struct std::hash<wordrep::Letter>
{
    auto operator() (const wordrep::Letter & l) const noexcept -> std::size_t
    {
        return (std::size_t{l.index()} << 1) | (l.primed() ? 1u : 0u);
    }
};
