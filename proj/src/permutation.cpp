#include "schroder/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace schroder {

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return unchecked(std::move(e));
}

Permutation Permutation::descending(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[i] = n - i;
    return unchecked(std::move(e));
}

Permutation Permutation::from_entries(std::vector<int> entries) {
    const int n = static_cast<int>(entries.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries) {
        if (v < 1 || v > n) {
            throw ParseError("entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        if (seen[v]) throw ParseError("duplicate entry " + std::to_string(v));
        seen[v] = true;
    }
    return unchecked(std::move(entries));
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty permutation");
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
            token.size() > 9) {
            throw ParseError("bad permutation entry '" + token + "'");
        }
        entries.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return from_entries(std::move(entries));
}

Permutation Permutation::unchecked(std::vector<int> entries) {
    Permutation p;
    p.entries_ = std::move(entries);
    return p;
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

Permutation inverse(const Permutation& pi) {
    std::vector<int> r(pi.entries().size());
    for (int i = 1; i <= pi.size(); ++i) r[pi.at(i) - 1] = i;
    return Permutation::unchecked(std::move(r));
}

Permutation reverse_complement(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) r[i - 1] = (n + 1) - pi.at(n + 1 - i);
    return Permutation::unchecked(std::move(r));
}

bool is_centrosymmetric(const Permutation& pi) {
    const int n = pi.size();
    for (int i = 1; i <= n; ++i) {
        if (pi.at(i) + pi.at(n + 1 - i) != n + 1) return false;
    }
    return true;
}

bool is_involution(const Permutation& pi) {
    for (int i = 1; i <= pi.size(); ++i) {
        if (pi.at(pi.at(i)) != i) return false;
    }
    return true;
}

namespace {

// Depth-first subsequence search; chosen[0..k) are the values picked so far.
// Extending by perm[i] is order-consistent iff its comparison with every
// chosen value matches the pattern's.
bool search_pattern(std::span<const int> perm, std::span<const int> pattern, std::size_t from,
                    std::vector<int>& chosen) {
    const std::size_t k = chosen.size();
    if (k == pattern.size()) return true;
    // Not enough elements left to complete the pattern.
    for (std::size_t i = from; i + (pattern.size() - k) <= perm.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < k; ++j) {
            if ((pattern[j] < pattern[k]) != (chosen[j] < perm[i])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(perm[i]);
        if (search_pattern(perm, pattern, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains_pattern(std::span<const int> perm, std::span<const int> pattern) {
    if (pattern.size() > perm.size()) return false;
    if (pattern.empty()) return true;
    std::vector<int> chosen;
    chosen.reserve(pattern.size());
    return search_pattern(perm, pattern, 0, chosen);
}

bool contains_pattern(const Permutation& pi, const Pattern& tau) {
    return contains_pattern(std::span<const int>(pi.entries()), std::span<const int>(tau.entries()));
}

bool avoids_all(const Permutation& pi, std::span<const Pattern> taus) {
    for (const Pattern& tau : taus) {
        if (contains_pattern(pi, tau)) return false;
    }
    return true;
}

const Pattern& pattern_1243() {
    static const Pattern p = Permutation::unchecked({1, 2, 4, 3});
    return p;
}

const Pattern& pattern_2143() {
    static const Pattern p = Permutation::unchecked({2, 1, 4, 3});
    return p;
}

bool avoids_1243_2143(std::span<const int> perm) {
    return !contains_pattern(perm, std::span<const int>(pattern_1243().entries())) &&
           !contains_pattern(perm, std::span<const int>(pattern_2143().entries()));
}

namespace {

struct CentroState {
    int n;
    bool involutions_only;
    const std::function<void(const Permutation&)>* fn;
    std::vector<int> entries;
    std::vector<bool> used;  // 1-based value -> taken
};

void centro_rec(CentroState& st, int pos) {
    const int half = st.n / 2;
    if (pos > half) {
        Permutation p = Permutation::unchecked(st.entries);
        if (!st.involutions_only || is_involution(p)) (*st.fn)(p);
        return;
    }
    for (int v = 1; v <= st.n; ++v) {
        if (st.used[v]) continue;
        const int partner = st.n + 1 - v;
        if (partner == v) continue;  // odd middle value is reserved
        st.used[v] = true;
        st.used[partner] = true;
        st.entries[pos - 1] = v;
        st.entries[st.n - pos] = partner;
        centro_rec(st, pos + 1);
        st.used[v] = false;
        st.used[partner] = false;
    }
}

}  // namespace

void for_each_centrosymmetric(int n, bool involutions_only,
                              const std::function<void(const Permutation&)>& fn, int cap) {
    if (n < 1) throw std::invalid_argument("centrosymmetric generation needs n >= 1");
    if (n > cap) {
        throw CapExceededError("centrosymmetric generation capped at n <= " + std::to_string(cap));
    }
    CentroState st;
    st.n = n;
    st.involutions_only = involutions_only;
    st.fn = &fn;
    st.entries.assign(static_cast<std::size_t>(n), 0);
    st.used.assign(static_cast<std::size_t>(n) + 1, false);
    if (n % 2 == 1) st.entries[n / 2] = (n + 1) / 2;
    centro_rec(st, 1);
}

std::vector<Permutation> centrosymmetric_permutations(int n, bool involutions_only, int cap) {
    std::vector<Permutation> out;
    for_each_centrosymmetric(n, involutions_only, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

}  // namespace schroder
