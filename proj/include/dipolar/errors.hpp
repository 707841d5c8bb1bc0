#pragma once

#include <stdexcept>
#include <string>

namespace dipolar {

// Error types thrown across the library. Each maps onto a standard
// exception category so callers can catch broadly or precisely.

struct NonHermitianInput : std::invalid_argument {
    explicit NonHermitianInput(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfSpace : std::out_of_range {
    explicit IndexOutOfSpace(const std::string& what) : std::out_of_range(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NotHighestWeight : std::invalid_argument {
    explicit NotHighestWeight(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroCoupling : std::domain_error {
    explicit ZeroCoupling(const std::string& what) : std::domain_error(what) {}
};

struct SizeLimit : std::length_error {
    explicit SizeLimit(const std::string& what) : std::length_error(what) {}
};

struct BadRange : std::invalid_argument {
    explicit BadRange(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownSystem : std::runtime_error {
    explicit UnknownSystem(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dipolar
