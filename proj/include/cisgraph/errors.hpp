#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cisgraph {

/// Thrown when an enumeration would exceed its configured output cap.
/// partial_count() reports how many sets were produced before giving up.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t partial_count)
        : std::runtime_error(what + " (partial count: " + std::to_string(partial_count) + ")"),
          partial_count_(partial_count) {}

    std::size_t partial_count() const { return partial_count_; }

private:
    std::size_t partial_count_;
};

/// Thrown on malformed graph input. offset() is the byte position of the defect.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace cisgraph
