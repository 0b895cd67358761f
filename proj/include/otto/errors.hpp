#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace otto {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, std::size_t sweeps)
        : Error(what), sweeps_(sweeps) {}
    std::size_t sweeps() const noexcept { return sweeps_; }

private:
    std::size_t sweeps_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class InvalidTemperature : public Error {
public:
    using Error::Error;
};

class NotADensityMatrix : public Error {
public:
    using Error::Error;
};

class OutOfEngineDomain : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class EmptyInterval : public Error {
public:
    using Error::Error;
};

class NoPositiveWork : public Error {
public:
    using Error::Error;
};

class InvalidSweep : public Error {
public:
    using Error::Error;
};

class UnknownFigure : public Error {
public:
    using Error::Error;
};

}  // namespace otto
