#include "schroder/enumeration.hpp"

#include <algorithm>

#include <json.hpp>

#include "schroder/path.hpp"
#include "schroder/permutation.hpp"

namespace schroder {

std::string to_json(const SequenceTable& table) {
    nlohmann::json j;
    j["name"] = table.name;
    j["base_index"] = table.base_index;
    j["values"] = nlohmann::json::array();
    for (const BigInt& v : table.values) {
        if (auto small = v.to_int64()) {
            j["values"].push_back(*small);
        } else {
            j["values"].push_back(v.to_string());
        }
    }
    return j.dump();
}

SequenceTable schroder_numbers(int max_n) {
    if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
    SequenceTable t{"r", 0, {BigInt(1)}};
    for (int n = 1; n <= max_n; ++n) {
        BigInt v = t.values[n - 1];
        for (int k = 1; k <= n; ++k) v += t.values[k - 1] * t.values[n - k];
        t.values.push_back(v);
    }
    return t;
}

SequenceTable q_sequence(int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    SequenceTable t{"q", 1, {BigInt(2)}};
    if (max_n >= 2) t.values.push_back(BigInt(7));
    for (int n = 3; n <= max_n; ++n) {
        t.values.push_back(BigInt(4) * t.values[n - 2] - t.values[n - 3]);
    }
    return t;
}

SequenceTable pell_sequence(int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    SequenceTable t{"pell", 1, {BigInt(2)}};
    if (max_n >= 2) t.values.push_back(BigInt(5));
    for (int n = 3; n <= max_n; ++n) {
        t.values.push_back(BigInt(2) * t.values[n - 2] + t.values[n - 3]);
    }
    return t;
}

std::pair<SequenceTable, SequenceTable> ab_sequences(int max_i) {
    if (max_i < 0) throw std::invalid_argument("max_i must be >= 0");
    SequenceTable b{"b", 0, {BigInt(0)}};
    BigInt running_sum(0);  // sum of b_0..b_{i-1}
    for (int i = 1; i <= max_i; ++i) {
        running_sum += b.values[i - 1];
        // b_i = 1 + b_{i-1} + 2 * sum_{j=0..i-1} b_j; b_1 = 1 falls out of it.
        b.values.push_back(BigInt(1) + b.values[i - 1] + BigInt(2) * running_sum);
    }
    SequenceTable a{"a", 0, {BigInt(1)}};
    for (int i = 1; i <= max_i; ++i) a.values.push_back(a.values[i - 1] + b.values[i]);
    return {a, b};
}

std::pair<SequenceTable, SequenceTable> cd_sequences(int max_i) {
    if (max_i < 0) throw std::invalid_argument("max_i must be >= 0");
    SequenceTable d{"d", 0, {BigInt(0)}};
    if (max_i >= 1) d.values.push_back(BigInt(1));  // d_1 = c_0
    BigInt running_sum(0);  // sum of d_0..d_{i-2}
    for (int i = 2; i <= max_i; ++i) {
        running_sum += d.values[i - 2];
        d.values.push_back(BigInt(1) + d.values[i - 1] + BigInt(2) * running_sum);
    }
    SequenceTable c{"c", 0, {BigInt(1)}};
    for (int i = 1; i <= max_i; ++i) c.values.push_back(c.values[i - 1] + d.values[i]);
    return {c, d};
}

CountFamily count_family_from_string(const std::string& s) {
    if (s == "schroder_perms") return CountFamily::SchroderPerms;
    if (s == "centrosymmetric") return CountFamily::Centrosymmetric;
    if (s == "centrosymmetric_involutions") return CountFamily::CentrosymmetricInvolutions;
    throw UnsupportedQueryError("unknown count family '" + s + "'");
}

CountMethod count_method_from_string(const std::string& s) {
    if (s == "recurrence") return CountMethod::Recurrence;
    if (s == "paths") return CountMethod::Paths;
    if (s == "brute_force") return CountMethod::BruteForce;
    throw UnsupportedQueryError("unknown count method '" + s + "'");
}

namespace {

std::int64_t table_value(const SequenceTable& t, int index) {
    auto v = t.at(index).to_int64();
    if (!v) throw CapExceededError("count does not fit in 64 bits");
    return *v;
}

std::int64_t count_recurrence(CountFamily family, int n) {
    switch (family) {
        case CountFamily::SchroderPerms:
            return table_value(schroder_numbers(n - 1), n - 1);
        case CountFamily::Centrosymmetric:
            if (n < 2) throw UnsupportedQueryError("centrosymmetric recurrence needs n >= 2");
            return table_value(q_sequence(n / 2), n / 2);
        case CountFamily::CentrosymmetricInvolutions:
            if (n < 2) throw UnsupportedQueryError("involution recurrence needs n >= 2");
            return table_value(pell_sequence(n / 2), n / 2);
    }
    throw UnsupportedQueryError("unknown family");
}

std::int64_t count_paths(CountFamily family, int n) {
    const int len = n - 1;
    std::int64_t total = 0;
    std::vector<Step> scratch_psi;
    std::vector<Step> scratch_rev;
    switch (family) {
        case CountFamily::SchroderPerms:
            for_each_path_steps(len, [&](std::span<const Step>) { ++total; });
            return total;
        case CountFamily::Centrosymmetric:
            // Fixed points of rev(psi(.)) over D_{n-1}.
            for_each_path_steps(len, [&](std::span<const Step> steps) {
                if (!is_in_D_steps(steps)) return;
                psi_steps(steps, scratch_psi);
                reverse_steps(scratch_psi, scratch_rev);
                if (std::equal(steps.begin(), steps.end(), scratch_rev.begin(), scratch_rev.end())) {
                    ++total;
                }
            });
            return total;
        case CountFamily::CentrosymmetricInvolutions:
            // Fixed points of both involutions over D_{n-1}: psi(p) = p means
            // p is featureless, rev(p) = p makes the image an involution.
            for_each_path_steps(len, [&](std::span<const Step> steps) {
                if (!is_in_D_steps(steps)) return;
                psi_steps(steps, scratch_psi);
                if (!std::equal(steps.begin(), steps.end(), scratch_psi.begin(), scratch_psi.end())) {
                    return;
                }
                reverse_steps(steps, scratch_rev);
                if (std::equal(steps.begin(), steps.end(), scratch_rev.begin(), scratch_rev.end())) {
                    ++total;
                }
            });
            return total;
    }
    throw UnsupportedQueryError("unknown family");
}

std::int64_t count_brute_force(CountFamily family, int n) {
    std::int64_t total = 0;
    if (family == CountFamily::SchroderPerms) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        do {
            if (avoids_1243_2143(v)) ++total;
        } while (std::next_permutation(v.begin(), v.end()));
        return total;
    }
    const bool involutions = family == CountFamily::CentrosymmetricInvolutions;
    for_each_centrosymmetric(n, involutions, [&](const Permutation& p) {
        if (avoids_1243_2143(p.entries())) ++total;
    });
    return total;
}

}  // namespace

std::int64_t count(const CountQuery& query) {
    if (query.n < 1) throw UnsupportedQueryError("count needs n >= 1");
    const int n = query.n;
    switch (query.method) {
        case CountMethod::Recurrence:
            return count_recurrence(query.family, n);
        case CountMethod::Paths: {
            const int cap = query.cap_override > 0 ? query.cap_override : kPathsMethodCap;
            if (n > cap) {
                throw CapExceededError("paths method capped at n <= " + std::to_string(cap));
            }
            return count_paths(query.family, n);
        }
        case CountMethod::BruteForce: {
            const int default_cap = query.family == CountFamily::SchroderPerms
                                        ? kBruteForceFullCap
                                        : kBruteForceSymmetricCap;
            const int cap = query.cap_override > 0 ? query.cap_override : default_cap;
            if (n > cap) {
                throw CapExceededError("brute force capped at n <= " + std::to_string(cap));
            }
            return count_brute_force(query.family, n);
        }
    }
    throw UnsupportedQueryError("unknown method");
}

}  // namespace schroder
