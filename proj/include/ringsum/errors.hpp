#ifndef RINGSUM_ERRORS_HPP
#define RINGSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringsum {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ScopeError : Error {
    explicit ScopeError(const std::string& msg) : Error(msg) {}
};

struct FactorDegreeExceeded : Error {
    explicit FactorDegreeExceeded(const std::string& msg) : Error(msg) {}
};

struct InvalidProduct : Error {
    explicit InvalidProduct(const std::string& msg) : Error(msg) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& msg) : Error(msg) {}
};

struct NonExactDivision : Error {
    explicit NonExactDivision(const std::string& msg) : Error(msg) {}
};

struct PoleEncountered : Error {
    long long at_k;
    explicit PoleEncountered(long long k)
        : Error("pole encountered at k=" + std::to_string(k)), at_k(k) {}
    PoleEncountered(const std::string& msg, long long k) : Error(msg), at_k(k) {}
};

struct MissingParameter : Error {
    explicit MissingParameter(const std::string& name)
        : Error("missing value for parameter '" + name + "'") {}
};

struct UnsupportedExpression : Error {
    explicit UnsupportedExpression(const std::string& msg) : Error(msg) {}
};

struct NoRecurrenceFound : Error {
    int max_order;
    explicit NoRecurrenceFound(int max_order_)
        : Error("no recurrence found up to order " + std::to_string(max_order_)),
          max_order(max_order_) {}
};

struct SingularLeadingCoefficient : Error {
    explicit SingularLeadingCoefficient(const std::string& msg) : Error(msg) {}
};

struct SupportBoundExceeded : Error {
    explicit SupportBoundExceeded(const std::string& msg) : Error(msg) {}
};

struct NotRewritable : Error {
    explicit NotRewritable(const std::string& msg) : Error(msg) {}
};

// Raised for contract-level misuse of the solver/tower API (mismatched towers,
// equation shapes outside the supported reduction, ...).
struct UnsupportedProblem : Error {
    explicit UnsupportedProblem(const std::string& msg) : Error(msg) {}
};

} // namespace ringsum

#endif
