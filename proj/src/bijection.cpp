#include "schroder/bijection.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace schroder {

namespace {

// Column profile of the path: the path crosses column x as the contiguous
// vertical segment from enter[x] up to leave[x].
struct ColumnProfile {
    std::vector<int> enter;
    std::vector<int> leave;
};

ColumnProfile column_profile(const SchroderPath& p) {
    const int n = p.length();
    ColumnProfile c;
    c.enter.assign(static_cast<std::size_t>(n) + 1, 0);
    c.leave.assign(static_cast<std::size_t>(n) + 1, 0);
    int x = 0;
    int y = 0;
    for (Step s : p.steps()) {
        switch (s) {
            case Step::N:
                ++y;
                break;
            case Step::E:
                c.leave[x] = y;
                ++x;
                c.enter[x] = y;
                break;
            case Step::D:
                c.leave[x] = y;
                ++x;
                ++y;
                c.enter[x] = y;
                break;
        }
    }
    c.leave[n] = y;
    return c;
}

}  // namespace

TranspositionWord sigma_decomposition(const SchroderPath& p) {
    const int n = p.length();
    TranspositionWord word;
    if (n == 0) return word;
    ColumnProfile cols = column_profile(p);

    // Square (r,s) is labeled r iff r <= s <= leave[r-1]; top[r] tracks the
    // highest remaining square of column r, count[r] how many remain.
    std::vector<int> top(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<char>> removed(static_cast<std::size_t>(n) + 1);
    for (int r = 1; r <= n; ++r) {
        int hi = cols.leave[r - 1];
        count[r] = std::max(0, hi - r + 1);
        top[r] = hi;
        removed[r].assign(static_cast<std::size_t>(std::max(0, hi - r + 1)), 0);
    }

    auto take = [&](int r, int s) {
        // s indexes squares r..leave[r-1] in column r.
        int idx = s - r;
        if (idx < 0 || idx >= static_cast<int>(removed[r].size()) || removed[r][idx]) {
            throw std::logic_error("sigma walk visited an unlabeled square");
        }
        removed[r][idx] = 1;
        --count[r];
        if (s == top[r]) {
            while (top[r] >= r && removed[r][top[r] - r]) --top[r];
        }
    };

    // An n step runs from (x, s-1) to (x, s) iff enter[x] < s <= leave[x].
    auto n_step_blocks = [&](int r, int s) {
        const int x = r - 1;
        return cols.enter[x] < s && s <= cols.leave[x];
    };

    for (int r_max = n; r_max >= 1; --r_max) {
        while (count[r_max] > 0) {
            int r = r_max;
            int s = top[r_max];
            std::vector<int> block;
            for (;;) {
                block.push_back(r);
                take(r, s);
                if (n_step_blocks(r, s)) break;
                --r;
                --s;
            }
            word.blocks.push_back(std::move(block));
        }
    }
    return word;
}

Permutation apply_word(const TranspositionWord& word, Permutation start) {
    std::vector<int> v = start.entries();
    for (const auto& block : word.blocks) {
        for (std::size_t i = block.size(); i-- > 0;) {
            const int t = block[i];
            std::swap(v[t - 1], v[t]);
        }
    }
    return Permutation::unchecked(std::move(v));
}

Permutation phi(const SchroderPath& p) {
    return apply_word(sigma_decomposition(p), Permutation::descending(p.length() + 1));
}

PhiTrace phi_trace(const SchroderPath& p) {
    PhiTrace trace;
    trace.start = Permutation::descending(p.length() + 1);
    Permutation current = trace.start;
    for (const auto& block : sigma_decomposition(p).blocks) {
        TranspositionWord one;
        one.blocks.push_back(block);
        current = apply_word(one, current);
        trace.rows.push_back({block, current});
    }
    return trace;
}

namespace {

// Entries packed four bits each, value range 1..15.
std::uint64_t pack_permutation(const Permutation& pi) {
    std::uint64_t key = 0;
    for (int i = pi.size(); i >= 1; --i) key = key << 4 | static_cast<std::uint64_t>(pi.at(i));
    return key;
}

// Steps packed two bits each (E=1, N=2, D=3), most recent in the low bits.
std::uint64_t pack_steps(std::span<const Step> steps) {
    std::uint64_t bits = 0;
    for (std::size_t i = steps.size(); i-- > 0;) {
        bits = bits << 2 | (static_cast<std::uint64_t>(steps[i]) + 1);
    }
    return bits;
}

SchroderPath unpack_steps(std::uint64_t bits) {
    std::vector<Step> steps;
    while (bits != 0) {
        steps.push_back(static_cast<Step>((bits & 3) - 1));
        bits >>= 2;
    }
    return SchroderPath::unchecked(std::move(steps));
}

constexpr char kCacheMagic[8] = {'S', 'P', 'H', 'I', 'N', 'V', '0', '1'};

}  // namespace

struct PhiInverseTable::Impl {
    std::shared_mutex mutex;
    int cap = kPhiInverseDefaultCap;
    std::string cache_dir;
    std::unordered_map<int, std::unordered_map<std::uint64_t, std::uint64_t>> tables;

    std::string cache_file(int n) const {
        return (std::filesystem::path(cache_dir) / ("phi_inverse_n" + std::to_string(n) + ".bin"))
            .string();
    }

    bool load_cache(int n, std::unordered_map<std::uint64_t, std::uint64_t>& table) const {
        std::FILE* f = std::fopen(cache_file(n).c_str(), "rb");
        if (f == nullptr) return false;
        char magic[8];
        std::uint32_t len = 0;
        std::uint64_t entries = 0;
        bool ok = std::fread(magic, 1, 8, f) == 8 && std::equal(magic, magic + 8, kCacheMagic) &&
                  std::fread(&len, sizeof len, 1, f) == 1 && len == static_cast<std::uint32_t>(n) &&
                  std::fread(&entries, sizeof entries, 1, f) == 1;
        if (ok) {
            table.reserve(entries);
            for (std::uint64_t i = 0; i < entries && ok; ++i) {
                std::uint64_t kv[2];
                ok = std::fread(kv, sizeof(std::uint64_t), 2, f) == 2;
                if (ok) table.emplace(kv[0], kv[1]);
            }
        }
        std::fclose(f);
        if (!ok) table.clear();
        return ok;
    }

    void store_cache(int n, const std::unordered_map<std::uint64_t, std::uint64_t>& table) const {
        std::error_code ec;
        std::filesystem::create_directories(cache_dir, ec);
        std::FILE* f = std::fopen(cache_file(n).c_str(), "wb");
        if (f == nullptr) return;
        const auto len = static_cast<std::uint32_t>(n);
        const auto entries = static_cast<std::uint64_t>(table.size());
        std::fwrite(kCacheMagic, 1, 8, f);
        std::fwrite(&len, sizeof len, 1, f);
        std::fwrite(&entries, sizeof entries, 1, f);
        for (const auto& [key, value] : table) {
            std::uint64_t kv[2] = {key, value};
            std::fwrite(kv, sizeof(std::uint64_t), 2, f);
        }
        std::fclose(f);
    }

    const std::unordered_map<std::uint64_t, std::uint64_t>& table_for(int n) {
        {
            std::shared_lock lock(mutex);
            auto it = tables.find(n);
            if (it != tables.end()) return it->second;
        }
        std::unique_lock lock(mutex);
        auto it = tables.find(n);
        if (it != tables.end()) return it->second;
        std::unordered_map<std::uint64_t, std::uint64_t> table;
        if (cache_dir.empty() || !load_cache(n, table)) {
            for_each_path_steps(n, [&](std::span<const Step> steps) {
                Permutation image =
                    phi(SchroderPath::unchecked(std::vector<Step>(steps.begin(), steps.end())));
                table.emplace(pack_permutation(image), pack_steps(steps));
            });
            if (!cache_dir.empty()) store_cache(n, table);
        }
        return tables.emplace(n, std::move(table)).first->second;
    }
};

PhiInverseTable::PhiInverseTable(int cap) : impl_(std::make_shared<Impl>()) { impl_->cap = cap; }

void PhiInverseTable::set_cache_dir(std::string dir) { impl_->cache_dir = std::move(dir); }

void PhiInverseTable::set_cap(int cap) { impl_->cap = cap; }

SchroderPath PhiInverseTable::invert(const Permutation& pi) {
    if (pi.size() < 1) throw NotInClassError("permutation must have length >= 1");
    const int n = pi.size() - 1;
    if (n > impl_->cap || n > kPhiInverseHardCap) {
        throw CapExceededError("phi inversion capped at path length " +
                               std::to_string(std::min(impl_->cap, kPhiInverseHardCap)));
    }
    if (contains_pattern(pi, pattern_1243())) {
        throw NotInClassError("permutation contains 1243");
    }
    if (contains_pattern(pi, pattern_2143())) {
        throw NotInClassError("permutation contains 2143");
    }
    const auto& table = impl_->table_for(n);
    auto it = table.find(pack_permutation(pi));
    if (it == table.end()) {
        // Bijectivity makes this unreachable for avoiding permutations.
        throw std::logic_error("no preimage found for an avoiding permutation");
    }
    return unpack_steps(it->second);
}

PhiInverseTable& global_phi_inverse_table() {
    static PhiInverseTable table;
    return table;
}

SchroderPath phi_inverse(const Permutation& pi) { return global_phi_inverse_table().invert(pi); }

}  // namespace schroder
