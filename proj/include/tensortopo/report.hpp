#pragma once

#include <string>
#include <vector>

namespace tensortopo {

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
    void merge(const ValidationReport& other, const std::string& prefix = {});
};

enum class Status { Pass, Fail, Skipped };

const char* to_string(Status s);

struct Verdict {
    Status status = Status::Pass;
    std::string witness;
    std::vector<std::string> notes;

    static Verdict pass(std::string witness = {}) { return {Status::Pass, std::move(witness), {}}; }
    static Verdict fail(std::string witness) { return {Status::Fail, std::move(witness), {}}; }
    static Verdict skipped(std::string why) { return {Status::Skipped, std::move(why), {}}; }

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }
    Verdict& note(std::string n) {
        notes.push_back(std::move(n));
        return *this;
    }
};

}  // namespace tensortopo
