#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sqf {

enum class Errc {
    InvalidCharacter,
    AlphabetMismatch,
    EmptyWord,
    TooShort,
    BadN,
    BadChoice,
    UnknownVertex,
    UnknownName,
    InvalidSubstitution,
    ParseError,
    NoSuchWord,
    SearchBudgetExceeded,
    NotInSpectrum,
    BudgetRefused,
};

const char* errc_name(Errc code);

// Single exception type for the library; the code says what went wrong and
// `position` carries an index where one is meaningful (bad character, bad choice).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(what), code_(code), position_(position) {}

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    Errc code_;
    std::optional<std::size_t> position_;
};

}  // namespace sqf
