#pragma once

#include <stdexcept>
#include <string>

namespace bicolor {

/// Input is too large for an exhaustive routine (canonicalization, census, oracle budget).
class UnsupportedSize : public std::length_error {
public:
    explicit UnsupportedSize(const std::string& what) : std::length_error(what) {}
};

/// A vertex ordering was required to be a bicolor-elimination ordering and is not.
class InvalidOrdering : public std::invalid_argument {
public:
    explicit InvalidOrdering(const std::string& what) : std::invalid_argument(what) {}
};

/// Two independent computations that must agree did not. Always a bug.
class InternalInconsistency : public std::logic_error {
public:
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bicolor
