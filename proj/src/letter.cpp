#include <wordrep/letter.hpp>

#include <charconv>
#include <limits>

namespace wordrep
{
    auto to_string(Letter l) -> std::string
    {
        auto result = std::to_string(l.index());
        if (l.primed())
            result.push_back('\'');
        return result;
    }

    auto parse_letter(std::string_view token) -> Letter
    {
        bool primed = false;
        auto digits = token;
        if (! digits.empty() && digits.back() == '\'') {
            primed = true;
            digits.remove_suffix(1);
        }

        if (digits.empty() || digits.front() < '0' || digits.front() > '9')
            fail(ErrorCode::parse, "malformed letter '" + std::string(token) + "'");

        std::uint32_t index = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec == std::errc::result_out_of_range)
            fail(ErrorCode::parse, "letter index out of range in '" + std::string(token) + "'");
        if (ec != std::errc{} || end != digits.data() + digits.size())
            fail(ErrorCode::parse, "malformed letter '" + std::string(token) + "'");
        if (index == 0)
            fail(ErrorCode::parse, "letter index must be at least 1 in '" + std::string(token) + "'");

        return Letter(index, primed);
    }
}
