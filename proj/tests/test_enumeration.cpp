#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <json.hpp>

#include "schroder/enumeration.hpp"
#include "schroder/permutation.hpp"

using namespace schroder;

namespace {

std::vector<long> values_of(const SequenceTable& t) {
    std::vector<long> out;
    for (const BigInt& v : t.values) out.push_back(static_cast<long>(*v.to_int64()));
    return out;
}

}  // namespace

TEST_CASE("schroder numbers") {
    CHECK(values_of(schroder_numbers(0)) == std::vector<long>{1});
    CHECK(values_of(schroder_numbers(4)) == std::vector<long>{1, 2, 6, 22, 90});
    CHECK(values_of(schroder_numbers(9)) ==
          std::vector<long>{1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098});

    // r_3 counts the avoiders of length 4: everything except the two patterns.
    std::vector<int> v{1, 2, 3, 4};
    long avoiders = 0;
    do {
        if (avoids_1243_2143(v)) ++avoiders;
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(avoiders == 22);
    CHECK(schroder_numbers(3).at(3).to_int64() == 22);
}

TEST_CASE("q sequence") {
    CHECK(values_of(q_sequence(5)) == std::vector<long>{2, 7, 26, 97, 362});
    CHECK(q_sequence(1).at(1).to_int64() == 2);

    // q_2 counts the centrosymmetric avoiders of length 4 (only 2143 drops out).
    long brute = 0;
    for_each_centrosymmetric(4, false, [&](const Permutation& p) {
        if (avoids_1243_2143(p.entries())) ++brute;
    });
    CHECK(brute == 7);
}

TEST_CASE("pell sequence") {
    CHECK(values_of(pell_sequence(5)) == std::vector<long>{2, 5, 12, 29, 70});

    std::set<std::string> survivors;
    for_each_centrosymmetric(4, true, [&](const Permutation& p) {
        if (avoids_1243_2143(p.entries())) survivors.insert(p.to_string());
    });
    CHECK(survivors == std::set<std::string>{"1,2,3,4", "1,3,2,4", "3,4,1,2", "4,2,3,1",
                                             "4,3,2,1"});
    CHECK(pell_sequence(2).at(2).to_int64() == 5);
}

TEST_CASE("a and b tables") {
    auto [a, b] = ab_sequences(4);
    CHECK(values_of(b) == std::vector<long>{0, 1, 4, 15, 56});
    CHECK(values_of(a) == std::vector<long>{1, 2, 6, 21, 77});
    CHECK(ab_sequences(2).first.at(2).to_int64() == 6);  // |D_2|
}

TEST_CASE("c and d tables") {
    auto [c, d] = cd_sequences(5);
    CHECK(values_of(d) == std::vector<long>{0, 1, 2, 5, 12, 29});
    CHECK(values_of(c) == std::vector<long>{1, 2, 4, 9, 21, 50});
    // Pell sits inside d shifted by one.
    SequenceTable pell = pell_sequence(4);
    for (int n = 1; n <= 4; ++n) CHECK(pell.at(n) == d.at(n + 1));
}

TEST_CASE("count queries from the documentation") {
    CHECK(count({CountFamily::Centrosymmetric, 4, CountMethod::BruteForce}) == 7);
    CHECK(count({CountFamily::Centrosymmetric, 3, CountMethod::Recurrence}) == 2);
    CHECK(count({CountFamily::CentrosymmetricInvolutions, 5, CountMethod::BruteForce}) == 5);
}

TEST_CASE("count methods agree on small ranges") {
    for (int m = 2; m <= 9; ++m) {
        const std::int64_t rec = count({CountFamily::Centrosymmetric, m, CountMethod::Recurrence});
        CHECK(rec == count({CountFamily::Centrosymmetric, m, CountMethod::Paths}));
        CHECK(rec == count({CountFamily::Centrosymmetric, m, CountMethod::BruteForce}));

        const std::int64_t rec_inv =
            count({CountFamily::CentrosymmetricInvolutions, m, CountMethod::Recurrence});
        CHECK(rec_inv == count({CountFamily::CentrosymmetricInvolutions, m, CountMethod::Paths}));
        CHECK(rec_inv ==
              count({CountFamily::CentrosymmetricInvolutions, m, CountMethod::BruteForce}));
    }
    for (int m = 1; m <= 8; ++m) {
        const std::int64_t rec = count({CountFamily::SchroderPerms, m, CountMethod::Recurrence});
        CHECK(rec == count({CountFamily::SchroderPerms, m, CountMethod::Paths}));
        CHECK(rec == count({CountFamily::SchroderPerms, m, CountMethod::BruteForce}));
    }
    // Length 1 is covered by generation even where the recurrence is not defined.
    CHECK(count({CountFamily::Centrosymmetric, 1, CountMethod::Paths}) == 1);
    CHECK(count({CountFamily::Centrosymmetric, 1, CountMethod::BruteForce}) == 1);
}

TEST_CASE("count guards") {
    CHECK_THROWS_AS(count({CountFamily::Centrosymmetric, 1, CountMethod::Recurrence}),
                    UnsupportedQueryError);
    CHECK_THROWS_AS(count({CountFamily::Centrosymmetric, 14, CountMethod::BruteForce}),
                    CapExceededError);
    CHECK_THROWS_AS(count({CountFamily::SchroderPerms, 11, CountMethod::BruteForce}),
                    CapExceededError);
    CHECK_THROWS_AS(count({CountFamily::Centrosymmetric, 14, CountMethod::Paths}),
                    CapExceededError);
    CHECK_THROWS_AS(count({CountFamily::SchroderPerms, 0, CountMethod::Recurrence}),
                    UnsupportedQueryError);
    // The override replaces the default cap in both directions.
    CHECK_THROWS_AS(count({CountFamily::SchroderPerms, 9, CountMethod::BruteForce, 5}),
                    CapExceededError);
    CHECK(count({CountFamily::Centrosymmetric, 14, CountMethod::BruteForce, 14}) == 5042);
    CHECK_THROWS_AS(count_family_from_string("nope"), UnsupportedQueryError);
    CHECK_THROWS_AS(count_method_from_string("nope"), UnsupportedQueryError);
}

TEST_CASE("sequence table JSON") {
    SequenceTable t = q_sequence(3);
    nlohmann::json j = nlohmann::json::parse(to_json(t));
    CHECK(j["name"] == "q");
    CHECK(j["base_index"] == 1);
    CHECK(j["values"] == nlohmann::json({2, 7, 26}));

    // Values beyond 64 bits fall back to decimal strings.
    SequenceTable big = schroder_numbers(40);
    nlohmann::json jb = nlohmann::json::parse(to_json(big));
    CHECK(jb["values"][12] == 27297738);
    CHECK(jb["values"][40].is_string());
}
