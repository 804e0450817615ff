#pragma once

#include <memory>
#include <string>
#include <vector>

#include "schroder/path.hpp"
#include "schroder/permutation.hpp"

namespace schroder {

// Word of adjacent transpositions s_t (swap of positions t, t+1), grouped in
// blocks. Blocks are applied first-to-last; within a block the indices
// descend by 1 and are applied last-to-first, so s_a s_b ... means s_b acts
// before s_a.
struct TranspositionWord {
    std::vector<std::vector<int>> blocks;

    bool operator==(const TranspositionWord&) const = default;
};

// Labels every unit square whose top-left corner lies weakly below the path
// and strictly above the diagonal with its column index, then repeatedly
// walks from the largest remaining label diagonally down-left until an
// n step of the path blocks the walk, emitting one block per walk.
TranspositionWord sigma_decomposition(const SchroderPath& p);

// Applies the word to a starting permutation (block by block).
Permutation apply_word(const TranspositionWord& word, Permutation start);

// The path-to-permutation map: applies sigma_decomposition(p) to the
// descending permutation (n+1, n, ..., 1). Bijective onto the length-(n+1)
// permutations avoiding 1243 and 2143.
Permutation phi(const SchroderPath& p);

struct PhiTraceRow {
    std::vector<int> block;
    Permutation result;
};

// The evolution of the descending permutation under each block, for the
// documentation tables and golden tests.
struct PhiTrace {
    Permutation start;
    std::vector<PhiTraceRow> rows;
};

PhiTrace phi_trace(const SchroderPath& p);

inline constexpr int kPhiInverseDefaultCap = 12;
// Permutation keys are packed four bits per entry, so inversion tables are
// available for lengths up to 15 (paths up to n = 14).
inline constexpr int kPhiInverseHardCap = 14;

// Inverts phi by exhaustive forward mapping: S_n is enumerated once per
// queried length and the images are hashed. Tables are built lazily under a
// single-writer lock and are safe for concurrent lookups afterwards.
class PhiInverseTable {
public:
    explicit PhiInverseTable(int cap = kPhiInverseDefaultCap);

    // Throws NotInClassError if pi contains 1243 or 2143, CapExceededError
    // if the required table would exceed the cap.
    SchroderPath invert(const Permutation& pi);

    // Directory for persisted tables; empty disables persistence.
    void set_cache_dir(std::string dir);
    void set_cap(int cap);

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Convenience wrapper over a process-wide table with the default cap.
SchroderPath phi_inverse(const Permutation& pi);
PhiInverseTable& global_phi_inverse_table();

}  // namespace schroder
