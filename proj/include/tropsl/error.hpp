#pragma once

#include <stdexcept>
#include <string>

namespace tropsl {

// Malformed textual input: element strings, partitions, JSON documents.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called outside its domain (inverse of zero, det != 1, ...).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// Mismatched sizes between arguments.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace tropsl
