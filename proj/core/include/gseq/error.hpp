#ifndef GSEQ_ERROR_HPP
#define GSEQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gseq {

/// Thrown on precondition violations and malformed inputs.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by long-running algorithms when a cooperative budget expires.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

} // namespace gseq

#endif
