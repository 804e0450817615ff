#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "schroder/errors.hpp"

namespace schroder {

struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;
};

// failures holds at most kMaxReportedFailures counterexamples;
// failures_total is the untruncated count. ok() iff nothing failed.
struct VerificationReport {
    std::string claim;
    std::string range;
    std::int64_t cases = 0;
    std::vector<Counterexample> failures;
    std::int64_t failures_total = 0;
    std::int64_t ms = 0;

    bool ok() const { return failures_total == 0; }
};

inline constexpr int kMaxReportedFailures = 10;

// {"claim": "...", "range": "...", "cases": N, "failures": [...],
//  "failures_total": N, "ms": T}
std::string to_json(const VerificationReport& report);

// Registered executable restatements of the source results, one claim per
// result. verify() runs a claim exhaustively over every object of each size
// up to max_n.
std::vector<std::string> claim_ids();
bool is_claim(const std::string& claim_id);
int claim_default_max_n(const std::string& claim_id);
int claim_hard_cap(const std::string& claim_id);
std::string claim_description(const std::string& claim_id);

// Throws UnknownClaimError / CapExceededError.
VerificationReport verify(const std::string& claim_id, int max_n);
VerificationReport verify(const std::string& claim_id);  // default max_n

// Replays the worked examples and evolution tables against the
// implementation; fails on any mismatch.
VerificationReport regression_fixtures();

namespace detail {

// Collects counterexamples with truncation; exposed for the test suite.
class Checker {
public:
    explicit Checker(VerificationReport& report) : report_(report) {}

    void count_case() { ++report_.cases; }

    void expect(bool ok, const std::function<Counterexample()>& describe) {
        if (ok) return;
        ++report_.failures_total;
        if (static_cast<int>(report_.failures.size()) < kMaxReportedFailures) {
            report_.failures.push_back(describe());
        }
    }

    void expect_eq(const std::string& input, const std::string& expected, const std::string& actual) {
        expect(expected == actual, [&] { return Counterexample{input, expected, actual}; });
    }

private:
    VerificationReport& report_;
};

}  // namespace detail

}  // namespace schroder
