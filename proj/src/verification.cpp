#include "schroder/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <unordered_set>

#include <json.hpp>

#include "schroder/bijection.hpp"
#include "schroder/enumeration.hpp"
#include "schroder/path.hpp"
#include "schroder/permutation.hpp"

namespace schroder {

std::string to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["claim"] = report.claim;
    j["range"] = report.range;
    j["cases"] = report.cases;
    j["failures"] = nlohmann::json::array();
    for (const Counterexample& c : report.failures) {
        j["failures"].push_back({{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
    }
    j["failures_total"] = report.failures_total;
    j["ms"] = report.ms;
    return j.dump();
}

namespace {

using detail::Checker;

struct Claim {
    std::string id;
    std::string description;
    int default_max_n;
    int hard_cap;
    // Runs the exhaustive check and returns the range description.
    std::string (*run)(Checker&, int);
};

std::string range_paths(int max_n) { return "all p in S_n for n = 0.." + std::to_string(max_n); }
std::string range_perms(int max_n) { return "all pi in S_n for n = 1.." + std::to_string(max_n); }

template <class F>
void for_each_full_permutation(int n, F&& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    do {
        fn(v);
    } while (std::next_permutation(v.begin(), v.end()));
}

// True iff the largest t values occupy the first t positions.
bool top_block_first(const Permutation& pi, int t) {
    const int n = pi.size();
    for (int i = 1; i <= t; ++i) {
        if (pi.at(i) <= n - t) return false;
    }
    return true;
}

std::uint64_t pack_entries(const std::vector<int>& v) {
    std::uint64_t key = 0;
    for (std::size_t i = v.size(); i-- > 0;) key = key << 4 | static_cast<std::uint64_t>(v[i]);
    return key;
}

std::string run_inverse_avoidance_lemma(Checker& chk, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_full_permutation(n, [&](const std::vector<int>& v) {
            chk.count_case();
            Permutation pi = Permutation::unchecked(v);
            const bool lhs = avoids_1243_2143(pi.entries());
            const bool rhs = avoids_1243_2143(inverse(pi).entries());
            chk.expect(lhs == rhs, [&] {
                return Counterexample{"pi=" + pi.to_string(),
                                      "avoidance of pi and pi^-1 agree",
                                      lhs ? "pi avoids, pi^-1 does not" : "pi^-1 avoids, pi does not"};
            });
        });
    }
    return range_perms(max_n);
}

std::string run_rc_inverse_lemma(Checker& chk, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_full_permutation(n, [&](const std::vector<int>& v) {
            chk.count_case();
            Permutation pi = Permutation::unchecked(v);
            chk.expect_eq("pi=" + pi.to_string(), inverse(reverse_complement(pi)).to_string(),
                          reverse_complement(inverse(pi)).to_string());
        });
    }
    return range_perms(max_n);
}

std::string run_no_mixing_lemma(Checker& chk, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            chk.count_case();
            Permutation image = phi(p);
            for (int t = 1; t <= n; ++t) {
                const bool diag = has_diagonal_d_at(p, t);
                const bool block = top_block_first(image, t);
                chk.expect(diag == block, [&] {
                    return Counterexample{
                        "p=" + p.to_string() + " t=" + std::to_string(t),
                        diag ? "largest t values lead phi(p)" : "largest t values do not lead phi(p)",
                        "phi(p)=" + image.to_string()};
                });
            }
        });
    }
    return range_paths(max_n);
}

std::string run_inverse_theorem(Checker& chk, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            chk.count_case();
            chk.expect_eq("p=" + p.to_string(), inverse(phi(p)).to_string(),
                          phi(reverse_path(p)).to_string());
        });
    }
    return range_paths(max_n);
}

std::string run_involution_corollary(Checker& chk, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            chk.count_case();
            const bool inv = is_involution(phi(p));
            const bool pal = reverse_path(p) == p;
            chk.expect(inv == pal, [&] {
                return Counterexample{"p=" + p.to_string(),
                                      "phi(p) involution iff rev(p) = p",
                                      inv ? "involution, asymmetric path" : "symmetric path, not involution"};
            });
        });
    }
    return range_paths(max_n);
}

bool has_any_diagonal_d(const SchroderPath& p) {
    for (int t = 1; t <= p.length(); ++t) {
        if (has_diagonal_d_at(p, t)) return true;
    }
    return false;
}

std::string range_D_no_diag(int max_n) {
    return "all p in D_n without diagonal d steps for n = 1.." + std::to_string(max_n);
}

std::string run_no_level_features_lemma(Checker& chk, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_path(n, true, [&](const SchroderPath& p) {
            if (has_any_diagonal_d(p)) return;
            FeatureSummary f = find_features(p);
            if (f.latest_level != 0) return;  // wants paths with no level features
            chk.count_case();
            chk.expect_eq("p=" + p.to_string(), "1", std::to_string(phi(p).at(1)));
        });
    }
    return range_D_no_diag(max_n) + ", no level features";
}

std::string run_earliest_level_lemma(Checker& chk, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_path(n, true, [&](const SchroderPath& p) {
            if (has_any_diagonal_d(p)) return;
            FeatureSummary f = find_features(p);
            if (f.earliest_level == n) return;  // wants a level feature
            chk.count_case();
            chk.expect_eq("p=" + p.to_string() + " k=" + std::to_string(f.earliest_level),
                          std::to_string(n - f.earliest_level + 1), std::to_string(phi(p).at(1)));
        });
    }
    return range_D_no_diag(max_n) + ", at least one level feature";
}

std::string run_latest_level_lemma(Checker& chk, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_path(n, true, [&](const SchroderPath& p) {
            if (has_any_diagonal_d(p)) return;
            FeatureSummary f = find_features(p);
            if (f.latest_level == 0) return;
            chk.count_case();
            chk.expect_eq("p=" + p.to_string() + " k=" + std::to_string(f.latest_level), "1",
                          std::to_string(phi(p).at(f.latest_level + 1)));
        });
    }
    return range_D_no_diag(max_n) + ", at least one level feature";
}

std::string run_featureless_base_lemma(Checker& chk, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_path(n, true, [&](const SchroderPath& p) {
            if (has_any_diagonal_d(p)) return;
            if (!find_features(p).features.empty()) return;
            chk.count_case();
            Permutation pi = phi(p);
            Permutation mirrored = phi(reverse_path(psi(p)));
            chk.expect(pi.at(1) == 1 && mirrored == reverse_complement(pi), [&] {
                return Counterexample{"p=" + p.to_string(),
                                      "phi(p) starts with 1 and phi(rev(psi(p))) = rc(phi(p))",
                                      "phi(p)=" + pi.to_string() + " phi(rev(psi(p)))=" + mirrored.to_string()};
            });
        });
    }
    return range_D_no_diag(max_n) + ", featureless";
}

std::string run_main_theorem(Checker& chk, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        for_each_path(n, false, [&](const SchroderPath& p) {
            chk.count_case();
            Permutation pi = phi(p);
            Permutation rc = reverse_complement(pi);
            const bool rc_avoids = avoids_1243_2143(rc.entries());
            const bool in_d = is_in_D(p);
            chk.expect(rc_avoids == in_d, [&] {
                return Counterexample{"p=" + p.to_string(),
                                      in_d ? "rc(phi(p)) avoids both patterns" : "rc(phi(p)) contains a pattern",
                                      "rc(phi(p))=" + rc.to_string()};
            });
            if (in_d) {
                chk.expect_eq("p=" + p.to_string(), rc.to_string(),
                              phi(reverse_path(psi(p))).to_string());
            }
        });
    }
    return range_paths(max_n);
}

std::string range_lengths(int max_n) { return "permutation lengths 2.." + std::to_string(max_n); }

std::string run_count_claim(Checker& chk, int max_n, CountFamily family) {
    for (int m = 2; m <= max_n; ++m) {
        chk.count_case();
        const std::int64_t rec = count({family, m, CountMethod::Recurrence});
        const std::int64_t via_paths = count({family, m, CountMethod::Paths});
        const std::int64_t brute = count({family, m, CountMethod::BruteForce});
        chk.expect(rec == via_paths && rec == brute, [&] {
            return Counterexample{"length=" + std::to_string(m), std::to_string(rec),
                                  "paths=" + std::to_string(via_paths) +
                                      " brute_force=" + std::to_string(brute)};
        });
    }
    return range_lengths(max_n);
}

std::string run_count_centrosymmetric(Checker& chk, int max_n) {
    return run_count_claim(chk, max_n, CountFamily::Centrosymmetric);
}

std::string run_count_centrosymmetric_involutions(Checker& chk, int max_n) {
    return run_count_claim(chk, max_n, CountFamily::CentrosymmetricInvolutions);
}

std::string range_indices(int max_n) { return "indices 0.." + std::to_string(max_n); }

std::string run_ab_consistency(Checker& chk, int max_n) {
    auto [a, b] = ab_sequences(max_n);
    SequenceTable q = q_sequence(std::max(1, max_n));
    BigInt partial(0);
    for (int k = 0; k <= max_n; ++k) {
        chk.count_case();
        partial += b.at(k);
        chk.expect_eq("a_" + std::to_string(k) + " = 1 + sum b_i", (BigInt(1) + partial).to_string(),
                      a.at(k).to_string());
        if (k >= 2) {
            chk.expect_eq("b_" + std::to_string(k) + " = 4b - b",
                          (BigInt(4) * b.at(k - 1) - b.at(k - 2)).to_string(), b.at(k).to_string());
        }
        if (k >= 1 && k <= q.max_index()) {
            chk.expect_eq("q_" + std::to_string(k) + " = 2b_k - b_{k-1}",
                          (BigInt(2) * b.at(k) - b.at(k - 1)).to_string(), q.at(k).to_string());
        }
    }
    return range_indices(max_n);
}

std::string run_cd_consistency(Checker& chk, int max_n) {
    auto [c, d] = cd_sequences(max_n);
    SequenceTable pell = pell_sequence(std::max(1, max_n));
    BigInt partial(0);
    for (int k = 0; k <= max_n; ++k) {
        chk.count_case();
        partial += d.at(k);
        chk.expect_eq("c_" + std::to_string(k) + " = 1 + sum d_i", (BigInt(1) + partial).to_string(),
                      c.at(k).to_string());
        if (k >= 2) {
            chk.expect_eq("d_" + std::to_string(k) + " = 2d + d",
                          (BigInt(2) * d.at(k - 1) + d.at(k - 2)).to_string(), d.at(k).to_string());
        }
        if (k >= 1 && k + 1 <= d.max_index()) {
            chk.expect_eq("pell_" + std::to_string(k) + " = d_{k+1}", d.at(k + 1).to_string(),
                          pell.at(k).to_string());
        }
    }
    return range_indices(max_n);
}

std::string run_bijection_image(Checker& chk, int max_n) {
    SequenceTable r = schroder_numbers(max_n);
    for (int n = 0; n <= max_n; ++n) {
        chk.count_case();
        std::unordered_set<std::uint64_t> image;
        bool all_avoid = true;
        std::string offender;
        for_each_path(n, false, [&](const SchroderPath& p) {
            Permutation pi = phi(p);
            image.insert(pack_entries(pi.entries()));
            if (all_avoid && !avoids_1243_2143(pi.entries())) {
                all_avoid = false;
                offender = "phi(" + p.to_string() + ")=" + pi.to_string();
            }
        });
        chk.expect_eq("n=" + std::to_string(n) + " distinct images", r.at(n).to_string(),
                      std::to_string(image.size()));
        chk.expect(all_avoid, [&] {
            return Counterexample{"n=" + std::to_string(n), "every image avoids 1243 and 2143",
                                  offender};
        });
        if (n + 1 <= 9) {
            // Image equals the brute-force filter of the full symmetric group.
            std::int64_t avoiders = 0;
            bool covered = true;
            std::string missing;
            for_each_full_permutation(n + 1, [&](const std::vector<int>& v) {
                if (!avoids_1243_2143(v)) return;
                ++avoiders;
                if (covered && image.find(pack_entries(v)) == image.end()) {
                    covered = false;
                    Permutation pi = Permutation::unchecked(v);
                    missing = pi.to_string();
                }
            });
            chk.expect(covered && avoiders == static_cast<std::int64_t>(image.size()), [&] {
                return Counterexample{"n=" + std::to_string(n),
                                      "image set = brute-force filter of S_{n+1}",
                                      covered ? "sizes differ: filter has " + std::to_string(avoiders)
                                              : "avoider outside image: " + missing};
            });
        }
    }
    return "images of S_n for n = 0.." + std::to_string(max_n) +
           ", checked against the full symmetric group for n+1 <= 9";
}

std::string run_path_counts(Checker& chk, int max_n) {
    SequenceTable r = schroder_numbers(max_n);
    auto [a, b] = ab_sequences(max_n);
    for (int n = 0; n <= max_n; ++n) {
        chk.count_case();
        std::int64_t all = 0;
        std::int64_t in_d = 0;
        for_each_path_steps(n, [&](std::span<const Step> steps) {
            ++all;
            if (is_in_D_steps(steps)) ++in_d;
        });
        chk.expect_eq("|S_" + std::to_string(n) + "|", r.at(n).to_string(), std::to_string(all));
        chk.expect_eq("|D_" + std::to_string(n) + "|", a.at(n).to_string(), std::to_string(in_d));
    }
    return "path lengths 0.." + std::to_string(max_n);
}

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = {
        {"inverse_avoidance_lemma", "pi avoids {1243,2143} iff its inverse does", 8, 9,
         run_inverse_avoidance_lemma},
        {"rc_inverse_lemma", "inverse and reverse-complement commute", 8, 9, run_rc_inverse_lemma},
        {"no_mixing_lemma",
         "diagonal d step at t iff the largest t values lead phi(p)", 8, 9, run_no_mixing_lemma},
        {"inverse_theorem", "phi(rev(p)) is the inverse of phi(p)", 8, 10, run_inverse_theorem},
        {"involution_corollary", "phi(p) is an involution iff rev(p) = p", 8, 10,
         run_involution_corollary},
        {"no_level_features_lemma",
         "without diagonal d steps or level features, phi(p) starts with 1", 8, 9,
         run_no_level_features_lemma},
        {"earliest_level_lemma",
         "earliest level feature at k forces phi(p)(1) = n-k+1", 8, 9, run_earliest_level_lemma},
        {"latest_level_lemma", "latest level feature at k forces phi(p)(k+1) = 1", 8, 9,
         run_latest_level_lemma},
        {"featureless_base_lemma",
         "featureless diagonal-free paths map to rc-mirrored permutations", 8, 9,
         run_featureless_base_lemma},
        {"main_theorem",
         "rc(phi(p)) avoids both patterns iff p in D_n, with rev(psi(p)) as preimage", 8, 9,
         run_main_theorem},
        {"count_centrosymmetric", "centrosymmetric avoiders counted three ways", 12, 13,
         run_count_centrosymmetric},
        {"count_centrosymmetric_involutions",
         "centrosymmetric involution avoiders counted three ways", 12, 13,
         run_count_centrosymmetric_involutions},
        {"ab_recursion_consistency", "a/b tables satisfy both recursions and the q link", 20, 500,
         run_ab_consistency},
        {"cd_recursion_consistency", "c/d tables satisfy both recursions and the Pell link", 20, 500,
         run_cd_consistency},
        {"bijection_image", "phi maps S_n bijectively onto the avoiders of length n+1", 8, 9,
         run_bijection_image},
        {"path_counts", "|S_n| = r_n and |D_n| = a_n", 9, 12, run_path_counts},
    };
    return claims;
}

const Claim& find_claim(const std::string& claim_id) {
    for (const Claim& c : registry()) {
        if (c.id == claim_id) return c;
    }
    throw UnknownClaimError("unknown claim '" + claim_id + "'");
}

}  // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const Claim& c : registry()) ids.push_back(c.id);
    return ids;
}

bool is_claim(const std::string& claim_id) {
    for (const Claim& c : registry()) {
        if (c.id == claim_id) return true;
    }
    return false;
}

int claim_default_max_n(const std::string& claim_id) { return find_claim(claim_id).default_max_n; }

int claim_hard_cap(const std::string& claim_id) { return find_claim(claim_id).hard_cap; }

std::string claim_description(const std::string& claim_id) {
    return find_claim(claim_id).description;
}

VerificationReport verify(const std::string& claim_id, int max_n) {
    const Claim& claim = find_claim(claim_id);
    if (max_n > claim.hard_cap) {
        throw CapExceededError("claim '" + claim_id + "' is capped at max_n = " +
                               std::to_string(claim.hard_cap));
    }
    VerificationReport report;
    report.claim = claim_id;
    detail::Checker chk(report);
    const auto start = std::chrono::steady_clock::now();
    report.range = claim.run(chk, max_n);
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return report;
}

VerificationReport verify(const std::string& claim_id) {
    return verify(claim_id, find_claim(claim_id).default_max_n);
}

namespace {

struct Fixture {
    Checker& chk;

    void eq(const std::string& id, const std::string& expected, const std::string& actual) {
        chk.count_case();
        chk.expect_eq(id, expected, actual);
    }

    void truth(const std::string& id, bool value) {
        chk.count_case();
        chk.expect(value, [&] { return Counterexample{id, "true", "false"}; });
    }

    // Every row must appear in the trace (after the start row) in order;
    // the table groups of the source fall on block boundaries.
    void trace_rows(const std::string& id, const PhiTrace& trace,
                    const std::vector<std::string>& rows) {
        chk.count_case();
        std::size_t next = 0;
        for (const PhiTraceRow& row : trace.rows) {
            if (next < rows.size() && row.result.to_string() == rows[next]) ++next;
        }
        chk.expect(next == rows.size(), [&] {
            return Counterexample{id, "row " + rows[next] + " reached in order",
                                  "trace misses it"};
        });
    }
};

std::string features_string(const SchroderPath& p) {
    std::string out;
    for (const Feature& f : find_features(p).features) {
        if (!out.empty()) out += ' ';
        out += (f.kind == FeatureKind::Level ? "level@" : "notch@") + std::to_string(f.position);
    }
    return out;
}

std::string blocks_string(const TranspositionWord& word) {
    std::string out;
    for (const auto& block : word.blocks) {
        if (!out.empty()) out += ' ';
        out += '(';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(block[i]);
        }
        out += ')';
    }
    return out;
}

}  // namespace

VerificationReport regression_fixtures() {
    VerificationReport report;
    report.claim = "regression_fixtures";
    report.range = "worked examples 1-6 and evolution tables 1-4";
    detail::Checker chk(report);
    Fixture fx{chk};
    const auto start = std::chrono::steady_clock::now();

    // Example 1 / Table 1: the running path.
    const SchroderPath p1 = SchroderPath::parse("nennnneeedennede");
    fx.eq("example1 features", "notch@1 level@5 notch@6 level@8", features_string(p1));
    fx.eq("example1 sigma blocks", "(9,8,7) (7) (6,5,4,3,2) (4,3,2) (3,2) (2) (1)",
          blocks_string(sigma_decomposition(p1)));
    fx.eq("example1 phi", "5,10,6,7,8,2,9,3,1,4", phi(p1).to_string());
    fx.trace_rows("table1 rows", phi_trace(p1),
                  {"10,9,8,7,6,5,3,2,1,4", "10,9,8,7,6,5,2,3,1,4", "10,8,7,6,5,2,9,3,1,4",
                   "10,7,6,5,8,2,9,3,1,4", "10,6,5,7,8,2,9,3,1,4", "10,5,6,7,8,2,9,3,1,4",
                   "5,10,6,7,8,2,9,3,1,4"});
    fx.truth("example1 in D_9", is_in_D(p1));

    // Example 2: concatenation split and the inverse theorem at work.
    const SchroderPath q2 = SchroderPath::parse("ndndneee");
    const SchroderPath r2 = SchroderPath::parse("nnneneee");
    const SchroderPath p2 = concat(q2, r2);
    fx.eq("example2 path", "ndndneeennneneee", p2.to_string());
    fx.eq("example2 rev(q)", "nnnedede", reverse_path(q2).to_string());
    fx.eq("example2 phi(q)", "5,3,1,2,4,6", phi(q2).to_string());
    fx.eq("example2 phi(rev(q))", "3,4,2,5,1,6", phi(reverse_path(q2)).to_string());
    fx.eq("example2 phi(rev(q)) inverts phi(q)", inverse(phi(q2)).to_string(),
          phi(reverse_path(q2)).to_string());
    fx.eq("example2 rev(r) = r", r2.to_string(), reverse_path(r2).to_string());
    fx.eq("example2 phi(r)", "1,3,2,4,5", phi(r2).to_string());
    fx.eq("example2 phi(r) self-inverse", phi(r2).to_string(), inverse(phi(r2)).to_string());
    fx.eq("example2 phi(p)", "9,7,1,6,8,10,3,2,4,5", phi(p2).to_string());
    fx.trace_rows("example2 intermediate", phi_trace(p2),
                  {"10,9,8,7,6,1,3,2,4,5", "9,7,1,6,8,10,3,2,4,5"});
    fx.truth("example2 p not in D_9", !is_in_D(p2));

    // Example 3 / Table 3: featureless base case.
    const SchroderPath p3 = SchroderPath::parse("nnneennnnneeeeenee");
    const SchroderPath p3m = reverse_path(psi(p3));
    fx.truth("example3 p in D_9", is_in_D(p3));
    fx.eq("example3 featureless", "", features_string(p3));
    fx.eq("example3 psi fixes p", p3.to_string(), psi(p3).to_string());
    fx.eq("example3 mirror path", "nnennnnneeeeenneee", p3m.to_string());
    fx.eq("example3 phi(p)", "1,8,9,3,4,5,6,7,2,10", phi(p3).to_string());
    fx.eq("example3 phi(p')", "1,9,4,5,6,7,8,2,3,10", phi(p3m).to_string());
    fx.eq("example3 rc relation", reverse_complement(phi(p3)).to_string(), phi(p3m).to_string());
    fx.trace_rows("table3 upper rows", phi_trace(p3),
                  {"9,8,7,6,5,4,3,2,1,10", "9,8,7,6,5,4,3,1,2,10", "9,8,1,3,4,5,6,7,2,10",
                   "1,8,9,3,4,5,6,7,2,10"});
    fx.trace_rows("table3 lower rows", phi_trace(p3m),
                  {"9,8,7,6,5,4,3,2,1,10", "9,8,7,6,5,4,1,2,3,10", "9,1,4,5,6,7,8,2,3,10",
                   "1,9,4,5,6,7,8,2,3,10"});

    // Example 4: earliest level feature fixes the first entry.
    const SchroderPath p4 = SchroderPath::parse("nneneennedneennee");
    const SchroderPath q4 = SchroderPath::parse("nneneennee");
    fx.truth("example4 p in D_9", is_in_D(p4));
    fx.eq("example4 earliest level", "5", std::to_string(find_features(p4).earliest_level));
    fx.eq("example4 phi(q)", "1,5,4,6,2,3", phi(q4).to_string());
    fx.eq("example4 phi(p)", "5,9,8,10,6,1,4,7,2,3", phi(p4).to_string());
    fx.trace_rows("example4 table rows", phi_trace(p4),
                  {"10,9,8,7,6,5,4,1,2,3", "10,9,8,6,5,4,1,7,2,3", "10,9,8,6,5,1,4,7,2,3",
                   "5,9,8,10,6,1,4,7,2,3"});

    // Example 5 / Table 2: the mirrored running path.
    const SchroderPath p5 = SchroderPath::parse("nennedennnneeede");
    fx.eq("example5 p' = rev(psi(p))", p5.to_string(), reverse_path(psi(p1)).to_string());
    fx.eq("example5 psi(p)", "ndnnneeeendneene", psi(p1).to_string());
    fx.eq("example5 sigma blocks", "(9,8,7,6,5) (7,6,5) (6,5) (5) (4,3,2) (2) (1)",
          blocks_string(sigma_decomposition(p5)));
    fx.eq("example5 phi(p')", "7,10,8,2,9,3,4,5,1,6", phi(p5).to_string());
    fx.eq("example5 rc relation", reverse_complement(phi(p1)).to_string(), phi(p5).to_string());
    fx.truth("example5 phi(p') avoids", avoids_1243_2143(phi(p5).entries()));
    fx.trace_rows("table2 rows", phi_trace(p5),
                  {"10,9,8,7,5,4,3,2,1,6", "10,9,8,7,4,3,2,5,1,6", "10,9,8,7,3,2,4,5,1,6",
                   "10,9,8,7,2,3,4,5,1,6", "10,8,7,2,9,3,4,5,1,6", "10,7,8,2,9,3,4,5,1,6",
                   "7,10,8,2,9,3,4,5,1,6"});

    // Example 6 / Table 4: inductive step of the main theorem.
    const SchroderPath p6 = SchroderPath::parse("nnedennneeennenee");
    const SchroderPath q6 = SchroderPath::parse("nnedennneee");
    const SchroderPath r6 = SchroderPath::parse("nnenee");
    const SchroderPath p6m = reverse_path(psi(p6));
    const SchroderPath q6m = reverse_path(psi(q6));
    fx.eq("example6 split", p6.to_string(), concat(q6, r6).to_string());
    fx.eq("example6 features", "level@2 notch@3 notch@6", features_string(p6));
    fx.eq("example6 phi(r)", "1,3,2,4", phi(r6).to_string());
    fx.eq("example6 phi(q)", "5,6,1,7,2,3,4", phi(q6).to_string());
    fx.eq("example6 latest level of q", "2", std::to_string(find_features(q6).latest_level));
    fx.eq("example6 phi(q) third entry", "1", std::to_string(phi(q6).at(3)));
    fx.eq("example6 phi(p)", "8,9,1,10,5,6,7,3,2,4", phi(p6).to_string());
    fx.eq("example6 mirror path", "nnenednneedennee", p6m.to_string());
    fx.eq("example6 phi(p')", "7,9,8,4,5,6,1,10,2,3", phi(p6m).to_string());
    fx.eq("example6 rc relation", reverse_complement(phi(p6)).to_string(), phi(p6m).to_string());
    fx.eq("example6 q mirror", "nnneedennee", q6m.to_string());
    fx.eq("example6 phi(q')", "4,5,6,1,7,2,3", phi(q6m).to_string());
    fx.eq("example6 q rc relation", reverse_complement(phi(q6)).to_string(), phi(q6m).to_string());
    fx.eq("example6 r' = r", r6.to_string(), reverse_path(psi(r6)).to_string());
    fx.trace_rows("table4 upper rows", phi_trace(p6),
                  {"10,9,8,7,6,5,1,3,2,4", "8,9,1,10,5,6,7,3,2,4"});
    fx.trace_rows("table4 lower rows", phi_trace(p6m),
                  {"9,8,7,4,5,6,1,10,2,3", "7,9,8,4,5,6,1,10,2,3"});

    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return report;
}

}  // namespace schroder
