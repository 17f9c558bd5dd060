#include "tensortopo/error.hpp"
#include "tensortopo/report.hpp"

namespace tensortopo {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::MalformedTable: return "MalformedTable";
        case ErrorKind::NotASemilattice: return "NotASemilattice";
        case ErrorKind::NotAQuantale: return "NotAQuantale";
        case ErrorKind::NotATopology: return "NotATopology";
        case ErrorKind::NotAMonoid: return "NotAMonoid";
        case ErrorKind::NonCommutative: return "NonCommutative";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorKind::CoverNotTotal: return "CoverNotTotal";
        case ErrorKind::NotCartesian: return "NotCartesian";
        case ErrorKind::CoherenceNotInvertible: return "CoherenceNotInvertible";
        case ErrorKind::NotDistributive: return "NotDistributive";
        case ErrorKind::NotAFrame: return "NotAFrame";
        case ErrorKind::NotAFilter: return "NotAFilter";
        case ErrorKind::NotComparable: return "NotComparable";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorKind::NotStiff: return "NotStiff";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "unknown";
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& v : other.violations) violations.push_back(prefix + v);
}

}  // namespace tensortopo
