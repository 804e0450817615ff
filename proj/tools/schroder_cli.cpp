#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schroder/bijection.hpp"
#include "schroder/enumeration.hpp"
#include "schroder/errors.hpp"
#include "schroder/path.hpp"
#include "schroder/permutation.hpp"
#include "schroder/render.hpp"
#include "schroder/verification.hpp"

namespace {

using nlohmann::json;
using namespace schroder;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::string feature_kind_name(FeatureKind k) {
    return k == FeatureKind::Level ? "level" : "notch";
}

json feature_summary_json(const SchroderPath& p, const FeatureSummary& s) {
    json j;
    j["path"] = p.to_string();
    j["length"] = p.length();
    j["features"] = json::array();
    for (const Feature& f : s.features) {
        j["features"].push_back({{"kind", feature_kind_name(f.kind)}, {"t", f.position}});
    }
    j["earliest_level"] = s.earliest_level;
    j["latest_level"] = s.latest_level;
    j["earliest_notch"] = s.earliest_notch;
    j["latest_notch"] = s.latest_notch;
    j["earliest_any"] = s.earliest_any;
    j["latest_any"] = s.latest_any;
    return j;
}

std::string block_label(const std::vector<int>& block) {
    std::string out;
    for (int t : block) {
        if (!out.empty()) out += ' ';
        out += "s" + std::to_string(t);
    }
    return out;
}

void print_trace(const std::string& title, const SchroderPath& p) {
    const PhiTrace trace = phi_trace(p);
    std::cout << title << ": path " << p.to_string() << "\n";
    std::printf("  %-28s %s\n", "start", trace.start.to_string().c_str());
    for (const PhiTraceRow& row : trace.rows) {
        std::printf("  %-28s %s\n", block_label(row.block).c_str(), row.result.to_string().c_str());
    }
}

json trace_json(const SchroderPath& p) {
    const PhiTrace trace = phi_trace(p);
    json rows = json::array();
    for (const PhiTraceRow& row : trace.rows) {
        rows.push_back({{"block", row.block}, {"result", row.result.entries()}});
    }
    return json{{"path", p.to_string()}, {"start", trace.start.entries()}, {"rows", rows}};
}

void print_report_text(const VerificationReport& r) {
    std::cout << "claim=" << r.claim << " range=\"" << r.range << "\" cases=" << r.cases
              << " failures=" << r.failures_total << " ms=" << r.ms << (r.ok() ? " ok" : " FAIL")
              << "\n";
    for (const Counterexample& c : r.failures) {
        std::cout << "  counterexample: " << c.input << " expected: " << c.expected
                  << " actual: " << c.actual << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Schroder paths, pattern-avoiding permutations, and their class counts"};
    app.require_subcommand(1);

    std::string arg_text;
    bool as_json = false;

    auto* cmd_phi = app.add_subcommand("phi", "Map a path to its avoiding permutation");
    cmd_phi->add_option("path", arg_text, "path text over {n,e,d}")->required();
    cmd_phi->add_flag("--json", as_json, "JSON output");

    std::string inv_cache_dir;
    int inv_cap = kPhiInverseDefaultCap;
    auto* cmd_phi_inverse =
        app.add_subcommand("phi-inverse", "Map an avoiding permutation back to its path");
    cmd_phi_inverse->add_option("permutation", arg_text, "comma-separated entries")->required();
    cmd_phi_inverse->add_option("--cap", inv_cap, "largest supported path length");
    cmd_phi_inverse->add_option("--seed-cache", inv_cache_dir,
                                "directory for the persisted inversion table");
    cmd_phi_inverse->add_flag("--json", as_json, "JSON output");

    auto* cmd_rc = app.add_subcommand("rc", "Reverse-complement of a permutation");
    cmd_rc->add_option("permutation", arg_text)->required();
    cmd_rc->add_flag("--json", as_json, "JSON output");

    auto* cmd_inverse = app.add_subcommand("inverse", "Inverse of a permutation");
    cmd_inverse->add_option("permutation", arg_text)->required();
    cmd_inverse->add_flag("--json", as_json, "JSON output");

    auto* cmd_rev = app.add_subcommand("rev", "Reverse a path and swap e with n");
    cmd_rev->add_option("path", arg_text)->required();
    cmd_rev->add_flag("--json", as_json, "JSON output");

    auto* cmd_psi = app.add_subcommand("psi", "Swap level and notch features of a path");
    cmd_psi->add_option("path", arg_text)->required();
    cmd_psi->add_flag("--json", as_json, "JSON output");

    auto* cmd_features = app.add_subcommand("features", "List the features of a path");
    cmd_features->add_option("path", arg_text)->required();
    cmd_features->add_flag("--json", as_json, "JSON output");

    auto* cmd_in_d = app.add_subcommand("in-d", "Test membership in the D class");
    cmd_in_d->add_option("path", arg_text)->required();
    cmd_in_d->add_flag("--json", as_json, "JSON output");

    std::string count_family = "schroder_perms";
    std::string count_method = "recurrence";
    int count_n = 0;
    int count_cap = 0;
    auto* cmd_count = app.add_subcommand("count", "Count a family at a given length");
    cmd_count
        ->add_option("--family", count_family,
                     "schroder_perms | centrosymmetric | centrosymmetric_involutions")
        ->required();
    cmd_count->add_option("--n", count_n, "permutation length")->required();
    cmd_count->add_option("--method", count_method, "recurrence | paths | brute_force")->required();
    cmd_count->add_option("--cap", count_cap, "override the method's size cap");
    cmd_count->add_flag("--json", as_json, "JSON output");

    std::string verify_claim;
    int verify_max_n = -1;
    bool verify_list = false;
    auto* cmd_verify = app.add_subcommand("verify", "Run exhaustive checks of the named results");
    cmd_verify->add_option("--claim", verify_claim, "claim id (default: run every claim)");
    cmd_verify->add_option("--max-n", verify_max_n, "exhaustive range bound (default per claim)");
    cmd_verify->add_flag("--list", verify_list, "list claim ids and exit");
    cmd_verify->add_flag("--json", as_json, "JSON output");

    auto* cmd_render = app.add_subcommand("render", "Draw a path as ASCII art");
    cmd_render->add_option("path", arg_text)->required();
    cmd_render->add_flag("--json", as_json, "JSON output");

    int tables_select = 0;
    auto* cmd_tables = app.add_subcommand("tables", "Replay the documentation evolution tables");
    cmd_tables->add_option("--table", tables_select, "table number 1..4 (default: all)");
    cmd_tables->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (cmd_phi->parsed()) {
        Permutation out = phi(SchroderPath::parse(arg_text));
        if (as_json) {
            std::cout << json{{"path", arg_text}, {"permutation", out.entries()}}.dump() << "\n";
        } else {
            std::cout << out.to_string() << "\n";
        }
        return kExitOk;
    }
    if (cmd_phi_inverse->parsed()) {
        PhiInverseTable table(inv_cap);
        if (!inv_cache_dir.empty()) table.set_cache_dir(inv_cache_dir);
        SchroderPath out = table.invert(Permutation::parse(arg_text));
        if (as_json) {
            std::cout << json{{"permutation", arg_text}, {"path", out.to_string()}}.dump() << "\n";
        } else {
            std::cout << out.to_string() << "\n";
        }
        return kExitOk;
    }
    if (cmd_rc->parsed() || cmd_inverse->parsed()) {
        Permutation in = Permutation::parse(arg_text);
        Permutation out = cmd_rc->parsed() ? reverse_complement(in) : inverse(in);
        if (as_json) {
            std::cout << json{{"input", in.entries()}, {"result", out.entries()}}.dump() << "\n";
        } else {
            std::cout << out.to_string() << "\n";
        }
        return kExitOk;
    }
    if (cmd_rev->parsed() || cmd_psi->parsed()) {
        SchroderPath in = SchroderPath::parse(arg_text);
        SchroderPath out = cmd_rev->parsed() ? reverse_path(in) : psi(in);
        if (as_json) {
            std::cout << json{{"input", in.to_string()}, {"result", out.to_string()}}.dump() << "\n";
        } else {
            std::cout << out.to_string() << "\n";
        }
        return kExitOk;
    }
    if (cmd_features->parsed()) {
        SchroderPath p = SchroderPath::parse(arg_text);
        FeatureSummary s = find_features(p);
        if (as_json) {
            std::cout << feature_summary_json(p, s).dump() << "\n";
        } else {
            std::string list;
            for (const Feature& f : s.features) {
                if (!list.empty()) list += ' ';
                list += feature_kind_name(f.kind) + "@" + std::to_string(f.position);
            }
            std::cout << "features: " << (list.empty() ? "(none)" : list) << "\n"
                      << "earliest_level=" << s.earliest_level << " latest_level=" << s.latest_level
                      << " earliest_notch=" << s.earliest_notch
                      << " latest_notch=" << s.latest_notch << " earliest_any=" << s.earliest_any
                      << " latest_any=" << s.latest_any << "\n";
        }
        return kExitOk;
    }
    if (cmd_in_d->parsed()) {
        SchroderPath p = SchroderPath::parse(arg_text);
        const bool in_d = is_in_D(p);
        if (as_json) {
            std::cout << json{{"path", p.to_string()}, {"in_d", in_d}}.dump() << "\n";
        } else {
            std::cout << (in_d ? "true" : "false") << "\n";
        }
        return kExitOk;
    }
    if (cmd_count->parsed()) {
        CountQuery query{count_family_from_string(count_family), count_n,
                         count_method_from_string(count_method), count_cap};
        const std::int64_t value = count(query);
        if (as_json) {
            std::cout << json{{"family", count_family},
                              {"n", count_n},
                              {"method", count_method},
                              {"count", value}}
                             .dump()
                      << "\n";
        } else {
            std::cout << value << "\n";
        }
        return kExitOk;
    }
    if (cmd_verify->parsed()) {
        if (verify_list) {
            for (const std::string& id : claim_ids()) {
                std::cout << id << " (default max_n " << claim_default_max_n(id) << "): "
                          << claim_description(id) << "\n";
            }
            std::cout << "regression_fixtures: worked examples and evolution tables\n";
            return kExitOk;
        }
        std::vector<VerificationReport> reports;
        if (verify_claim.empty()) {
            for (const std::string& id : claim_ids()) {
                reports.push_back(verify_max_n >= 0 ? verify(id, verify_max_n) : verify(id));
            }
            reports.push_back(regression_fixtures());
        } else if (verify_claim == "regression_fixtures") {
            reports.push_back(regression_fixtures());
        } else {
            reports.push_back(verify_max_n >= 0 ? verify(verify_claim, verify_max_n)
                                                : verify(verify_claim));
        }
        bool all_ok = true;
        if (as_json) {
            json out = json::array();
            for (const VerificationReport& r : reports) {
                out.push_back(json::parse(to_json(r)));
                all_ok = all_ok && r.ok();
            }
            std::cout << (reports.size() == 1 ? out[0].dump() : out.dump()) << "\n";
        } else {
            for (const VerificationReport& r : reports) {
                print_report_text(r);
                all_ok = all_ok && r.ok();
            }
        }
        return all_ok ? kExitOk : kExitVerificationFailure;
    }
    if (cmd_render->parsed()) {
        SchroderPath p = SchroderPath::parse(arg_text);
        std::string art = render_path(p);
        if (as_json) {
            json rows = json::array();
            std::size_t pos = 0;
            while (pos < art.size()) {
                std::size_t nl = art.find('\n', pos);
                rows.push_back(art.substr(pos, nl - pos));
                pos = nl + 1;
            }
            std::cout << json{{"path", p.to_string()}, {"art", rows}}.dump() << "\n";
        } else {
            std::cout << art;
        }
        return kExitOk;
    }
    if (cmd_tables->parsed()) {
        struct TableSpec {
            int number;
            const char* title;
            const char* path;
        };
        static const TableSpec specs[] = {
            {1, "Table 1 (running example)", "nennnneeedennede"},
            {2, "Table 2 (mirrored running example)", "nennedennnneeede"},
            {3, "Table 3 (featureless pair)", "nnneennnnneeeeenee"},
            {4, "Table 4 (inductive step pair)", "nnedennneeennenee"},
        };
        json out = json::array();
        for (const TableSpec& entry : specs) {
            if (tables_select != 0 && tables_select != entry.number) continue;
            SchroderPath p = SchroderPath::parse(entry.path);
            if (entry.number >= 3) {
                // These tables trace the path together with its mirror.
                SchroderPath mirror = reverse_path(psi(p));
                if (as_json) {
                    out.push_back({{"title", entry.title},
                                   {"trace", trace_json(p)},
                                   {"mirror_trace", trace_json(mirror)}});
                } else {
                    print_trace(entry.title, p);
                    print_trace("  mirror", mirror);
                }
            } else if (as_json) {
                out.push_back({{"title", entry.title}, {"trace", trace_json(p)}});
            } else {
                print_trace(entry.title, p);
            }
        }
        if (as_json) std::cout << out.dump() << "\n";
        return kExitOk;
    }
    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotAPathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotInClassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UnsupportedQueryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UnknownClaimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
