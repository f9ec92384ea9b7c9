#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qperm {

// Base of all typed errors. name() is the stable identifier the CLI prints
// on stderr; what() carries the detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what)
        : Error("invalid_argument", what) {}
};

// Raised when elimination finds no usable pivot; remembers the column.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(std::size_t pivot_column, const std::string& what)
        : Error("singular_matrix", what), pivot_column_(pivot_column) {}

    std::size_t pivot_column() const noexcept { return pivot_column_; }

private:
    std::size_t pivot_column_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error("resource_error", what) {}
};

// Quadrature failure; carries the error bound that was actually reached.
class NumericError : public Error {
public:
    NumericError(double achieved_bound, const std::string& what)
        : Error("numeric_error", what), achieved_bound_(achieved_bound) {}

    double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

}  // namespace qperm
