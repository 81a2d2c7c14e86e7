#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tf {

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyInputError : PreconditionError {
    explicit EmptyInputError(const std::string& what) : PreconditionError(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Carries best-known information at the point the search gave up.
struct BudgetExceeded : std::runtime_error {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    explicit BudgetExceeded(const std::string& what, std::uint64_t lo = 0, std::uint64_t hi = 0)
        : std::runtime_error(what), lower(lo), upper(hi) {}
};

struct CertificateViolation : std::runtime_error {
    std::size_t index;
    explicit CertificateViolation(std::size_t idx, const std::string& what)
        : std::runtime_error(what), index(idx) {}
};

struct RefuterFailure : std::runtime_error {
    explicit RefuterFailure(const std::string& what) : std::runtime_error(what) {}
};

struct DensityFailure : std::runtime_error {
    explicit DensityFailure(const std::string& what) : std::runtime_error(what) {}
};

struct FatnessMissing : std::runtime_error {
    explicit FatnessMissing(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tf
