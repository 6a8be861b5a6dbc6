#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace juntalab {

// Malformed input text: ANF expressions or truth-table files.
// position() is the zero-based offset into the input that broke the parse.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_ = 0;
};

// A request outside the supported domain: size caps exceeded, a threshold
// weight outside (0,1) where a formula needs it, or an unamplifiable setup.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace juntalab
