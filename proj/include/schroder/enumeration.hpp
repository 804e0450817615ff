#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schroder/bigint.hpp"
#include "schroder/errors.hpp"

namespace schroder {

struct SequenceTable {
    std::string name;
    int base_index;
    std::vector<BigInt> values;

    const BigInt& at(int index) const { return values.at(static_cast<std::size_t>(index - base_index)); }
    int max_index() const { return base_index + static_cast<int>(values.size()) - 1; }
};

// {"name": "...", "base_index": k, "values": [...]}; values are JSON numbers
// when they fit in 64 bits and decimal strings beyond that.
std::string to_json(const SequenceTable& table);

// Large Schroder numbers: r_0 = 1, r_n = r_{n-1} + sum_{k=1..n} r_{k-1} r_{n-k}.
SequenceTable schroder_numbers(int max_n);

// q_1 = 2, q_2 = 7, q_n = 4 q_{n-1} - q_{n-2}.
SequenceTable q_sequence(int max_n);

// Pell: p_1 = 2, p_2 = 5, p_n = 2 p_{n-1} + p_{n-2}.
SequenceTable pell_sequence(int max_n);

// Prefix counts of the D class: a_i prefixes ending at (i,i), b_i at (i-1,i).
// b is built from its first-principles form b_i = 1 + b_{i-1} + 2*sum_{j<i} b_j
// and a from a_i = a_{i-1} + b_i, leaving the three-term recursion
// b_{k+1} = 4 b_k - b_{k-1} and the sum identity a_k = 1 + sum b_i as
// independent cross-checks.
std::pair<SequenceTable, SequenceTable> ab_sequences(int max_i);

// Featureless analogue: c_i, d_i with d_i = 1 + d_{i-1} + 2*sum_{j<=i-2} d_j
// and c_k = 1 + sum d_i; cross-checked against d_{k+1} = 2 d_k + d_{k-1}.
std::pair<SequenceTable, SequenceTable> cd_sequences(int max_i);

enum class CountFamily { SchroderPerms, Centrosymmetric, CentrosymmetricInvolutions };
enum class CountMethod { Recurrence, Paths, BruteForce };

struct CountQuery {
    CountFamily family;
    int n;  // permutation length
    CountMethod method;
    int cap_override = 0;  // 0 keeps the method's default cap
};

CountFamily count_family_from_string(const std::string& s);
CountMethod count_method_from_string(const std::string& s);

// Default caps per method. Brute force over the full symmetric group is the
// expensive one; the symmetric families use the rc-symmetric generator.
inline constexpr int kBruteForceFullCap = 10;
inline constexpr int kBruteForceSymmetricCap = 13;
inline constexpr int kPathsMethodCap = 13;  // path length n-1 <= 12

// Three independent routes to the same cardinalities:
//   recurrence  - the closed-form tables above,
//   paths       - fixed points of the path involutions over D_{n-1},
//   brute_force - generate-and-filter with the pattern scanner.
std::int64_t count(const CountQuery& query);

}  // namespace schroder
