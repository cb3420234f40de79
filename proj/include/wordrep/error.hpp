#pragma once

#include <stdexcept>
#include <string>

namespace wordrep
{
    enum class ErrorCode
    {
        invalid_argument,
        parse,
        precondition,
        internal
    };

    // Every failure raised by the library. The code decides the exit status
    // and the C API status a caller sees.
    class Error : public std::runtime_error
    {
        public:
            Error(ErrorCode code, const std::string & message) :
                std::runtime_error(message),
                _code(code)
            {
            }

            [[nodiscard]] auto code() const noexcept -> ErrorCode
            {
                return _code;
            }

        private:
            ErrorCode _code;
    };

    [[noreturn]] inline auto fail(ErrorCode code, const std::string & message) -> void
    {
        throw Error(code, message);
    }
}
