#pragma once

#include <stdexcept>
#include <string>

namespace tensortopo {

enum class ErrorKind {
    MalformedTable,
    NotASemilattice,
    NotAQuantale,
    NotATopology,
    NotAMonoid,
    NonCommutative,
    SearchBudgetExceeded,
    CoverNotTotal,
    NotCartesian,
    CoherenceNotInvertible,
    NotDistributive,
    NotAFrame,
    NotAFilter,
    NotComparable,
    NotSymmetric,
    HypothesisNotMet,
    NotStiff,
    BudgetExceeded,
    ParseError,
    SchemaError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tensortopo
