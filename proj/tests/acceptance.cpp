// Acceptance suite: one pass/fail line per criterion, exact checks only.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "schroder/bigint.hpp"
#include "schroder/enumeration.hpp"
#include "schroder/verification.hpp"

namespace {

using schroder::BigInt;
using schroder::VerificationReport;

int failures_seen = 0;

void report(int criterion, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
    std::printf("[%s] criterion %d: %-34s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", criterion,
                name.c_str(), seconds, detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures_seen;
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string failure_summary(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const VerificationReport& r : reports) {
        if (r.ok()) continue;
        out += r.claim + ": " + std::to_string(r.failures_total) + " failures";
        if (!r.failures.empty()) {
            out += " (first: " + r.failures[0].input + " expected " + r.failures[0].expected +
                   ", got " + r.failures[0].actual + ")";
        }
        out += "; ";
    }
    return out;
}

bool counts_match(schroder::CountFamily family, const std::vector<long>& expected,
                  std::string& detail) {
    using schroder::CountMethod;
    bool ok = true;
    for (int m = 2; m <= 13; ++m) {
        const long want = expected[m - 2];
        for (CountMethod method :
             {CountMethod::Recurrence, CountMethod::Paths, CountMethod::BruteForce}) {
            const long got = schroder::count({family, m, method});
            if (got != want) {
                ok = false;
                detail += "length " + std::to_string(m) + " wants " + std::to_string(want) +
                          ", got " + std::to_string(got) + "; ";
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    // 1. Bijection image: r_n distinct avoiding images, equal to the
    //    brute-force filter of the full symmetric group for n <= 8.
    {
        Timer t;
        VerificationReport r = schroder::verify("bijection_image", 9);
        const std::vector<long> expected_r = {1,    2,     6,     22,    90,
                                              394,  1806,  8558,  41586, 206098};
        schroder::SequenceTable computed = schroder::schroder_numbers(9);
        bool table_ok = true;
        for (int n = 0; n <= 9; ++n) {
            table_ok = table_ok && computed.at(n) == BigInt(expected_r[n]);
        }
        report(1, "bijection image through n = 9", r.ok() && table_ok, t.seconds(),
               failure_summary({r}));
    }

    // 2. phi(rev(p)) inverts phi(p) for every path through n = 9.
    {
        Timer t;
        VerificationReport r = schroder::verify("inverse_theorem", 9);
        report(2, "path reversal gives inverses", r.ok(), t.seconds(), failure_summary({r}));
    }

    // 3. Involutions correspond exactly to palindromic paths through n = 9.
    {
        Timer t;
        VerificationReport r = schroder::verify("involution_corollary", 9);
        report(3, "involutions are palindromic paths", r.ok(), t.seconds(), failure_summary({r}));
    }

    // 4. rc image avoids iff the path lies in D, with rev(psi(p)) as the
    //    mirrored preimage, through n = 8.
    {
        Timer t;
        VerificationReport r = schroder::verify("main_theorem", 8);
        report(4, "rc avoidance characterizes D", r.ok(), t.seconds(), failure_summary({r}));
    }

    // 5. Centrosymmetric counts for lengths 2..13, all three methods.
    {
        Timer t;
        std::string detail;
        bool ok = counts_match(schroder::CountFamily::Centrosymmetric,
                               {2, 2, 7, 7, 26, 26, 97, 97, 362, 362, 1351, 1351}, detail);
        report(5, "centrosymmetric counts 2..13", ok, t.seconds(), detail);
    }

    // 6. Centrosymmetric involution counts for lengths 2..13 are Pell values.
    {
        Timer t;
        std::string detail;
        bool ok = counts_match(schroder::CountFamily::CentrosymmetricInvolutions,
                               {2, 2, 5, 5, 12, 12, 29, 29, 70, 70, 169, 169}, detail);
        report(6, "centrosymmetric involution counts", ok, t.seconds(), detail);
    }

    // 7. Position lemma suite through n = 8.
    {
        Timer t;
        std::vector<VerificationReport> rs;
        for (const char* claim : {"no_mixing_lemma", "no_level_features_lemma",
                                  "earliest_level_lemma", "latest_level_lemma",
                                  "featureless_base_lemma"}) {
            rs.push_back(schroder::verify(claim, 8));
        }
        bool ok = true;
        for (const VerificationReport& r : rs) ok = ok && r.ok();
        report(7, "feature position lemma suite", ok, t.seconds(), failure_summary(rs));
    }

    // 8. The worked examples and evolution tables reproduce bit-exactly.
    {
        Timer t;
        VerificationReport r = schroder::regression_fixtures();
        report(8, "regression fixtures", r.ok(), t.seconds(), failure_summary({r}));
    }

    // 9. Sequence cross-identities through index 20, exact.
    {
        Timer t;
        VerificationReport ab = schroder::verify("ab_recursion_consistency", 20);
        VerificationReport cd = schroder::verify("cd_recursion_consistency", 20);
        report(9, "sequence consistency to index 20", ab.ok() && cd.ok(), t.seconds(),
               failure_summary({ab, cd}));
    }

    if (failures_seen != 0) {
        std::printf("%d criterion(s) failed\n", failures_seen);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
