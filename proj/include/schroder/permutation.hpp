#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "schroder/errors.hpp"

namespace schroder {

// Permutation of {1..n} in one-line notation. All public semantics are
// 1-based; entries() exposes the underlying 0-indexed storage.
class Permutation {
public:
    Permutation() = default;  // length 0, internal degenerate case

    static Permutation identity(int n);
    static Permutation descending(int n);  // (n, n-1, ..., 1)

    // Validates that entries are a rearrangement of {1..n}; throws ParseError
    // naming the offending entry otherwise.
    static Permutation from_entries(std::vector<int> entries);

    // Comma-separated decimal text, e.g. "5,10,6,7,8,2,9,3,1,4".
    // Rejects empty input, duplicates, zeros and out-of-range values.
    static Permutation parse(const std::string& text);

    // Caller guarantees validity; used by operations that preserve it.
    static Permutation unchecked(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    int at(int i) const { return entries_[i - 1]; }  // pi(i), 1 <= i <= n
    const std::vector<int>& entries() const { return entries_; }
    std::string to_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

using Pattern = Permutation;

Permutation inverse(const Permutation& pi);
Permutation reverse_complement(const Permutation& pi);
bool is_centrosymmetric(const Permutation& pi);
bool is_involution(const Permutation& pi);

// True iff some subsequence of perm is order-isomorphic to pattern.
bool contains_pattern(std::span<const int> perm, std::span<const int> pattern);
bool contains_pattern(const Permutation& pi, const Pattern& tau);
bool avoids_all(const Permutation& pi, std::span<const Pattern> taus);

const Pattern& pattern_1243();
const Pattern& pattern_2143();
// The pair the whole library revolves around.
bool avoids_1243_2143(std::span<const int> perm);

inline constexpr int kCentrosymmetricGeneratorCap = 16;

// Enumerates C_n (or CI_n) by choosing the images of positions 1..floor(n/2)
// in ascending order; the mirror half and the odd middle entry are forced by
// rc-symmetry. Yields 2^m * m! permutations, m = floor(n/2), in lexicographic
// order of the determining prefix.
void for_each_centrosymmetric(int n, bool involutions_only,
                              const std::function<void(const Permutation&)>& fn,
                              int cap = kCentrosymmetricGeneratorCap);

std::vector<Permutation> centrosymmetric_permutations(int n, bool involutions_only,
                                                      int cap = kCentrosymmetricGeneratorCap);

}  // namespace schroder
