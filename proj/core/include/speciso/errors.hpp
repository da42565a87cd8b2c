#ifndef SPECISO_ERRORS_HPP
#define SPECISO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace speciso {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte position of the defect.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t offset)
        : Error(message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A value-level invariant would be broken (diagonal separation, symmetry,
/// bijectivity, ...). Thrown instead of silently producing a bad value.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// The exact backtracking oracle refuses inputs above its size guard.
class OracleLimitError : public Error {
public:
    OracleLimitError(int order, int limit)
        : Error("oracle refuses order " + std::to_string(order) +
                " (guard limit " + std::to_string(limit) + ")"),
          order_(order), limit_(limit) {}

    int order() const { return order_; }
    int limit() const { return limit_; }

private:
    int order_;
    int limit_;
};

} // namespace speciso

#endif
