#pragma once

#include <stdexcept>
#include <string>

namespace hypersym {

// Base of every error raised by the library. `kind()` is a stable identifier
// used in the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HYPERSYM_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

HYPERSYM_DEFINE_ERROR(DivisionByZero);
HYPERSYM_DEFINE_ERROR(NotRational);
HYPERSYM_DEFINE_ERROR(ZeroReciprocal);
HYPERSYM_DEFINE_ERROR(WindowExhausted);
HYPERSYM_DEFINE_ERROR(NotPolynomial);
HYPERSYM_DEFINE_ERROR(InternalMismatch);
HYPERSYM_DEFINE_ERROR(EmptySpectrum);
HYPERSYM_DEFINE_ERROR(NonIntegralValue);
HYPERSYM_DEFINE_ERROR(SearchCapExceeded);
HYPERSYM_DEFINE_ERROR(CapExceeded);
HYPERSYM_DEFINE_ERROR(InvalidArgument);

#undef HYPERSYM_DEFINE_ERROR

// Parse failure with the 0-based character offset where it was detected.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("ParseError", what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hypersym
