#pragma once

#include <span>
#include <string>
#include <vector>

#include "schroder/errors.hpp"

namespace schroder {

// Lattice steps: e = (1,0), n = (0,1), d = (1,1).
enum class Step : unsigned char { E, N, D };

char to_char(Step s);

// Schroder path of length n: step sequence from (0,0) to (n,n) that never
// passes below the diagonal y = x. The empty sequence is the null path.
class SchroderPath {
public:
    SchroderPath() = default;

    // Letters from {n, e, d}, case-insensitive, no separators.
    static SchroderPath parse(const std::string& text);

    // Validates the prefix condition and diagonal termination; throws
    // NotAPathError naming the first violating step index.
    static SchroderPath from_steps(std::vector<Step> steps);

    // Caller guarantees validity; used by operations that preserve it.
    static SchroderPath unchecked(std::vector<Step> steps);

    int length() const { return length_; }  // n
    const std::vector<Step>& steps() const { return steps_; }
    std::string to_string() const;

    bool operator==(const SchroderPath&) const = default;

private:
    std::vector<Step> steps_;
    int length_ = 0;
};

enum class FeatureKind : unsigned char { Level, Notch };

// Level at t: a d step along the superdiagonal, (t-1,t) -> (t,t+1).
// Notch at t: an e step landing on the diagonal at (t,t) immediately
// followed by an n step, (t-1,t) -> (t,t) -> (t,t+1).
struct Feature {
    FeatureKind kind;
    int position;  // t in {1..n-1}

    bool operator==(const Feature&) const = default;
};

// Earliest fields are n when the path has no such feature, latest fields 0.
struct FeatureSummary {
    std::vector<Feature> features;  // sorted by position
    int earliest_level;
    int latest_level;
    int earliest_notch;
    int latest_notch;
    int earliest_any;
    int latest_any;
};

SchroderPath concat(const SchroderPath& p, const SchroderPath& q);

// Reverse the step order, then exchange e and n. An involution on S_n.
SchroderPath reverse_path(const SchroderPath& p);

FeatureSummary find_features(const SchroderPath& p);

// Swap every level feature for a notch feature at the same position and
// vice versa. An involution on S_n; preserves length and validity.
SchroderPath psi(const SchroderPath& p);

// Membership in D_n: concatenations of d and n*P*e blocks, where P is built
// from d steps and balanced pyramids n^k e^k. Linear scan over the height
// h = y - x: d steps only at h in {0,1}, and every climb above h = 1 is a
// pyramid returning straight to h = 1.
bool is_in_D(const SchroderPath& p);

// True iff a d step of p joins (t-1,t-1) to (t,t). Throws std::out_of_range
// unless 1 <= t <= n.
bool has_diagonal_d_at(const SchroderPath& p, int t);

// Span-based internals shared with the generators' hot loops.
bool is_in_D_steps(std::span<const Step> steps);
void reverse_steps(std::span<const Step> steps, std::vector<Step>& out);
void psi_steps(std::span<const Step> steps, std::vector<Step>& out);

inline constexpr int kPathGeneratorCap = 13;

// Depth-first enumeration of S_n with step order d < e < n at each choice
// point; deterministic. The callback receives the raw step buffer, which is
// only valid during the call.
template <class F>
void for_each_path_steps(int n, F&& fn) {
    std::vector<Step> buf;
    buf.reserve(static_cast<std::size_t>(2 * n));
    auto rec = [&](auto&& self, int x, int y) -> void {
        if (x == n && y == n) {
            fn(std::span<const Step>(buf));
            return;
        }
        if (x < n && y < n) {
            buf.push_back(Step::D);
            self(self, x + 1, y + 1);
            buf.pop_back();
        }
        if (x < n && y > x) {
            buf.push_back(Step::E);
            self(self, x + 1, y);
            buf.pop_back();
        }
        if (y < n) {
            buf.push_back(Step::N);
            self(self, x, y + 1);
            buf.pop_back();
        }
    };
    rec(rec, 0, 0);
}

template <class F>
void for_each_path(int n, bool restrict_to_D, F&& fn) {
    for_each_path_steps(n, [&](std::span<const Step> steps) {
        if (restrict_to_D && !is_in_D_steps(steps)) return;
        fn(SchroderPath::unchecked(std::vector<Step>(steps.begin(), steps.end())));
    });
}

std::vector<SchroderPath> generate_paths(int n, bool restrict_to_D, int cap = kPathGeneratorCap);

}  // namespace schroder
