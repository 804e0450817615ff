#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "schroder/path.hpp"

using namespace schroder;

namespace {

// Independent membership oracle for the D class: memoized decomposition into
// d | n P e blocks with P a concatenation of d steps and pyramids n^k e^k.
// Tries every split, assuming nothing about determinism of the grammar.
struct DGrammarOracle {
    std::string s;
    std::map<std::pair<int, int>, bool> memo_d;
    std::map<std::pair<int, int>, bool> memo_p;

    bool in_P(int lo, int hi) {  // s[lo..hi)
        if (lo == hi) return true;
        auto key = std::make_pair(lo, hi);
        auto it = memo_p.find(key);
        if (it != memo_p.end()) return it->second;
        bool ok = false;
        if (s[lo] == 'd' && in_P(lo + 1, hi)) ok = true;
        if (!ok && s[lo] == 'n') {
            // Leading pyramid n^k e^k for every feasible k.
            int k = 0;
            while (lo + k < hi && s[lo + k] == 'n') ++k;
            for (int j = 1; j <= k && !ok; ++j) {
                bool pyramid = lo + 2 * j <= hi;
                for (int i = 0; pyramid && i < j; ++i) {
                    if (s[lo + j + i] != 'e') pyramid = false;
                }
                if (pyramid && in_P(lo + 2 * j, hi)) ok = true;
            }
        }
        memo_p[key] = ok;
        return ok;
    }

    bool in_D(int lo, int hi) {
        if (lo == hi) return true;
        auto key = std::make_pair(lo, hi);
        auto it = memo_d.find(key);
        if (it != memo_d.end()) return it->second;
        bool ok = false;
        if (s[lo] == 'd' && in_D(lo + 1, hi)) ok = true;
        if (!ok && s[lo] == 'n') {
            for (int mid = lo + 1; mid < hi && !ok; ++mid) {
                if (s[mid] == 'e' && in_P(lo + 1, mid) && in_D(mid + 1, hi)) ok = true;
            }
        }
        memo_d[key] = ok;
        return ok;
    }

    bool accepts() { return in_D(0, static_cast<int>(s.size())); }
};

bool oracle_in_D(const SchroderPath& p) {
    DGrammarOracle oracle{p.to_string(), {}, {}};
    return oracle.accepts();
}

}  // namespace

TEST_CASE("parse and validation") {
    SchroderPath p = SchroderPath::parse("nennnneeedennede");
    CHECK(p.length() == 9);
    CHECK(p.to_string() == "nennnneeedennede");
    CHECK(SchroderPath::parse("NeD").to_string() == "ned");
    CHECK(SchroderPath::parse("").length() == 0);

    CHECK_THROWS_AS(SchroderPath::parse("nxe"), ParseError);
    CHECK_THROWS_WITH(SchroderPath::parse("nxe"), "bad path character 'x' at position 2");
    CHECK_THROWS_AS(SchroderPath::parse("en"), NotAPathError);
    try {
        SchroderPath::parse("en");
    } catch (const NotAPathError& e) {
        CHECK(e.step_index == 1);
    }
    CHECK_THROWS_AS(SchroderPath::parse("n"), NotAPathError);
    CHECK_THROWS_AS(SchroderPath::parse("nnedee"), NotAPathError);  // dips after the diagonal
}

TEST_CASE("concat") {
    SchroderPath q = SchroderPath::parse("ndndneee");
    SchroderPath r = SchroderPath::parse("nnneneee");
    CHECK(concat(SchroderPath(), q) == q);
    CHECK(concat(q, r).to_string() == "ndndneeennneneee");
    CHECK(concat(q, r).length() == 9);
    CHECK(concat(SchroderPath::parse("d"), SchroderPath::parse("d")).to_string() == "dd");
}

TEST_CASE("reverse_path") {
    CHECK(reverse_path(SchroderPath::parse("ndndneee")).to_string() == "nnnedede");
    CHECK(reverse_path(SchroderPath::parse("d")).to_string() == "d");
    CHECK(reverse_path(SchroderPath::parse("nnee")).to_string() == "nnee");
}

TEST_CASE("rev and psi are length-preserving involutions, exhaustively to n = 9") {
    long bad = 0;
    for (int n = 0; n <= 9; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            SchroderPath rev = reverse_path(p);
            SchroderPath swapped = psi(p);
            if (rev.length() != n || swapped.length() != n) ++bad;
            if (reverse_path(rev) != p || psi(swapped) != p) ++bad;
            // from_steps revalidates the boundary conditions.
            SchroderPath::from_steps(rev.steps());
            SchroderPath::from_steps(swapped.steps());
        });
    }
    CHECK(bad == 0);
}

TEST_CASE("find_features") {
    FeatureSummary s = find_features(SchroderPath::parse("nennnneeedennede"));
    REQUIRE(s.features.size() == 4);
    CHECK(s.features[0] == Feature{FeatureKind::Notch, 1});
    CHECK(s.features[1] == Feature{FeatureKind::Level, 5});
    CHECK(s.features[2] == Feature{FeatureKind::Notch, 6});
    CHECK(s.features[3] == Feature{FeatureKind::Level, 8});
    CHECK(s.earliest_level == 5);
    CHECK(s.latest_level == 8);
    CHECK(s.earliest_notch == 1);
    CHECK(s.latest_notch == 6);
    CHECK(s.earliest_any == 1);
    CHECK(s.latest_any == 8);

    FeatureSummary bare = find_features(SchroderPath::parse("nnee"));
    CHECK(bare.features.empty());
    CHECK(bare.earliest_any == 2);
    CHECK(bare.latest_any == 0);
    CHECK(bare.earliest_level == 2);
    CHECK(bare.latest_notch == 0);

    FeatureSummary one = find_features(SchroderPath::parse("nde"));
    REQUIRE(one.features.size() == 1);
    CHECK(one.features[0] == Feature{FeatureKind::Level, 1});
}

TEST_CASE("psi on the documented paths") {
    CHECK(psi(SchroderPath::parse("nde")).to_string() == "nene");
    CHECK(psi(SchroderPath::parse("nnee")).to_string() == "nnee");
    CHECK(psi(SchroderPath::parse("nennnneeedennede")).to_string() == "ndnnneeeendneene");
    // Cross-check against the mirrored running path.
    CHECK(psi(SchroderPath::parse("nennnneeedennede")) ==
          reverse_path(SchroderPath::parse("nennedennnneeede")));
}

TEST_CASE("psi is a feature-swapping involution, exhaustively to n = 6") {
    for (int n = 0; n <= 6; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            SchroderPath q = psi(p);
            CHECK(q.length() == p.length());
            CHECK_NOTHROW(SchroderPath::from_steps(q.steps()));
            CHECK(psi(q) == p);
            FeatureSummary fp = find_features(p);
            FeatureSummary fq = find_features(q);
            REQUIRE(fp.features.size() == fq.features.size());
            for (std::size_t i = 0; i < fp.features.size(); ++i) {
                CHECK(fp.features[i].position == fq.features[i].position);
                CHECK(fp.features[i].kind != fq.features[i].kind);
            }
        });
    }
}

TEST_CASE("feature positions mirror under path reversal, exhaustively to n = 6") {
    for (int n = 0; n <= 6; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            FeatureSummary fp = find_features(p);
            FeatureSummary fr = find_features(reverse_path(p));
            std::multiset<std::pair<int, int>> mirrored;
            for (const Feature& f : fp.features) {
                mirrored.insert({n - f.position, static_cast<int>(f.kind)});
            }
            std::multiset<std::pair<int, int>> got;
            for (const Feature& f : fr.features) {
                got.insert({f.position, static_cast<int>(f.kind)});
            }
            CHECK(mirrored == got);
        });
    }
}

TEST_CASE("is_in_D on the documented paths") {
    CHECK(is_in_D(SchroderPath::parse("nennnneeedennede")));
    CHECK(is_in_D(SchroderPath::parse("dd")));
    CHECK(!is_in_D(SchroderPath::parse("ndndneeennneneee")));
    CHECK(!is_in_D(SchroderPath::parse("nndee")));
    CHECK(is_in_D(SchroderPath()));
}

TEST_CASE("scan rule matches the grammar oracle, exhaustively to n = 7") {
    for (int n = 0; n <= 7; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            CHECK(is_in_D(p) == oracle_in_D(p));
        });
    }
}

TEST_CASE("D membership is preserved by rev and psi, exhaustively to n = 7") {
    for (int n = 0; n <= 7; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            const bool in_d = is_in_D(p);
            CHECK(in_d == is_in_D(reverse_path(p)));
            CHECK(in_d == is_in_D(psi(p)));
        });
    }
}

TEST_CASE("has_diagonal_d_at") {
    CHECK(has_diagonal_d_at(SchroderPath::parse("dd"), 1));
    CHECK(has_diagonal_d_at(SchroderPath::parse("dd"), 2));
    CHECK(!has_diagonal_d_at(SchroderPath::parse("nnee"), 1));
    CHECK(!has_diagonal_d_at(SchroderPath::parse("ndndneee"), 1));
    CHECK_THROWS_AS(has_diagonal_d_at(SchroderPath::parse("dd"), 0), std::out_of_range);
    CHECK_THROWS_AS(has_diagonal_d_at(SchroderPath::parse("dd"), 3), std::out_of_range);
}

TEST_CASE("path generation") {
    auto none = generate_paths(0, false);
    REQUIRE(none.size() == 1);
    CHECK(none[0].length() == 0);

    auto one = generate_paths(1, false);
    REQUIRE(one.size() == 2);
    CHECK(one[0].to_string() == "d");
    CHECK(one[1].to_string() == "ne");

    // Depth-first order with d < e < n at every choice point.
    auto two = generate_paths(2, false);
    std::vector<std::string> got;
    for (const SchroderPath& p : two) got.push_back(p.to_string());
    CHECK(got == std::vector<std::string>{"dd", "dne", "nde", "ned", "nene", "nnee"});

    auto two_d = generate_paths(2, true);
    std::set<std::string> d_set;
    for (const SchroderPath& p : two_d) d_set.insert(p.to_string());
    CHECK(d_set == std::set<std::string>{"dd", "dne", "ned", "nde", "nnee", "nene"});

    const int expected[] = {1, 2, 6, 22, 90, 394, 1806};
    for (int n = 0; n <= 6; ++n) {
        CHECK(static_cast<int>(generate_paths(n, false).size()) == expected[n]);
    }

    CHECK_THROWS_AS(generate_paths(14, false), CapExceededError);
    CHECK_THROWS_AS(generate_paths(-1, false), std::invalid_argument);
}
