// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace csr {

// Base of all library errors. `code()` is a stable machine-readable name
// used by the CLI for structured error reporting.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse_error", msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain_error", msg) {}
};

class EmptyPatternError : public Error {
public:
    explicit EmptyPatternError(const std::string& msg) : Error("empty_pattern", msg) {}
};

class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error("contract_error", msg) {}
};

class LookupError : public Error {
public:
    explicit LookupError(const std::string& msg) : Error("lookup_error", msg) {}
};

// A zero spacing met a kernel that is undefined at 0 (e.g. tied coordinates
// under the neglog kernel).
class DegenerateSpacingError : public Error {
public:
    explicit DegenerateSpacingError(const std::string& msg)
        : Error("degenerate_spacing", msg) {}
};

// sigma^2 = 0: the kernel admits no test (identity).
class DegenerateStatisticError : public Error {
public:
    explicit DegenerateStatisticError(const std::string& msg)
        : Error("degenerate_statistic", msg) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error("numerical_error", msg) {}
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error("infeasible", msg) {}
};

} // namespace csr
