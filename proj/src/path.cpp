#include "schroder/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace schroder {

char to_char(Step s) {
    switch (s) {
        case Step::E: return 'e';
        case Step::N: return 'n';
        case Step::D: return 'd';
    }
    return '?';
}

namespace {

// Returns the length n, or throws NotAPathError.
int validate_steps(const std::vector<Step>& steps) {
    int x = 0;
    int y = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        switch (steps[i]) {
            case Step::E: ++x; break;
            case Step::N: ++y; break;
            case Step::D: ++x; ++y; break;
        }
        if (y < x) {
            throw NotAPathError("path passes below the diagonal at step " + std::to_string(i + 1),
                                static_cast<int>(i + 1));
        }
    }
    if (x != y) {
        throw NotAPathError("path ends at (" + std::to_string(x) + "," + std::to_string(y) +
                                "), not on the diagonal",
                            static_cast<int>(steps.size()));
    }
    return x;
}

}  // namespace

SchroderPath SchroderPath::parse(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'e': case 'E': steps.push_back(Step::E); break;
            case 'n': case 'N': steps.push_back(Step::N); break;
            case 'd': case 'D': steps.push_back(Step::D); break;
            default:
                throw ParseError("bad path character '" + std::string(1, text[i]) + "' at position " +
                                 std::to_string(i + 1));
        }
    }
    return from_steps(std::move(steps));
}

SchroderPath SchroderPath::from_steps(std::vector<Step> steps) {
    SchroderPath p;
    p.length_ = validate_steps(steps);
    p.steps_ = std::move(steps);
    return p;
}

SchroderPath SchroderPath::unchecked(std::vector<Step> steps) {
    SchroderPath p;
    int n = 0;
    for (Step s : steps) n += s != Step::N;
    p.length_ = n;
    p.steps_ = std::move(steps);
    return p;
}

std::string SchroderPath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += to_char(s);
    return out;
}

SchroderPath concat(const SchroderPath& p, const SchroderPath& q) {
    std::vector<Step> steps;
    steps.reserve(p.steps().size() + q.steps().size());
    steps.insert(steps.end(), p.steps().begin(), p.steps().end());
    steps.insert(steps.end(), q.steps().begin(), q.steps().end());
    return SchroderPath::unchecked(std::move(steps));
}

void reverse_steps(std::span<const Step> steps, std::vector<Step>& out) {
    out.clear();
    out.reserve(steps.size());
    for (std::size_t i = steps.size(); i-- > 0;) {
        switch (steps[i]) {
            case Step::E: out.push_back(Step::N); break;
            case Step::N: out.push_back(Step::E); break;
            case Step::D: out.push_back(Step::D); break;
        }
    }
}

SchroderPath reverse_path(const SchroderPath& p) {
    std::vector<Step> out;
    reverse_steps(p.steps(), out);
    return SchroderPath::unchecked(std::move(out));
}

FeatureSummary find_features(const SchroderPath& p) {
    const int n = p.length();
    FeatureSummary s;
    s.earliest_level = s.earliest_notch = s.earliest_any = n;
    s.latest_level = s.latest_notch = s.latest_any = 0;
    const auto& steps = p.steps();
    int x = 0;
    int y = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::D && y == x + 1) {
            s.features.push_back({FeatureKind::Level, y});
        } else if (steps[i] == Step::E && y == x + 1 && i + 1 < steps.size() &&
                   steps[i + 1] == Step::N) {
            // The e lands on the diagonal at (x+1, y) and an n follows.
            s.features.push_back({FeatureKind::Notch, y});
        }
        switch (steps[i]) {
            case Step::E: ++x; break;
            case Step::N: ++y; break;
            case Step::D: ++x; ++y; break;
        }
    }
    for (const Feature& f : s.features) {
        if (f.kind == FeatureKind::Level) {
            s.earliest_level = std::min(s.earliest_level, f.position);
            s.latest_level = std::max(s.latest_level, f.position);
        } else {
            s.earliest_notch = std::min(s.earliest_notch, f.position);
            s.latest_notch = std::max(s.latest_notch, f.position);
        }
        s.earliest_any = std::min(s.earliest_any, f.position);
        s.latest_any = std::max(s.latest_any, f.position);
    }
    return s;
}

void psi_steps(std::span<const Step> steps, std::vector<Step>& out) {
    out.clear();
    out.reserve(steps.size());
    int x = 0;
    int y = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::D && y == x + 1) {
            // Level feature becomes a notch.
            out.push_back(Step::E);
            out.push_back(Step::N);
            ++x;
            ++y;
        } else if (steps[i] == Step::E && y == x + 1 && i + 1 < steps.size() &&
                   steps[i + 1] == Step::N) {
            // Notch feature becomes a level.
            out.push_back(Step::D);
            ++x;
            ++y;
            ++i;
        } else {
            out.push_back(steps[i]);
            switch (steps[i]) {
                case Step::E: ++x; break;
                case Step::N: ++y; break;
                case Step::D: ++x; ++y; break;
            }
        }
    }
}

SchroderPath psi(const SchroderPath& p) {
    std::vector<Step> out;
    psi_steps(p.steps(), out);
    return SchroderPath::unchecked(std::move(out));
}

bool is_in_D_steps(std::span<const Step> steps) {
    int h = 0;  // height above the diagonal; stays in {0,1} outside pyramids
    std::size_t i = 0;
    while (i < steps.size()) {
        switch (steps[i]) {
            case Step::D:
                if (h > 1) return false;
                ++i;
                break;
            case Step::E:
                --h;
                ++i;
                break;
            case Step::N:
                if (h == 0) {
                    h = 1;
                    ++i;
                    break;
                }
                {
                    // Climb from h = 1 must be a pyramid n^k e^k.
                    std::size_t k = 0;
                    while (i + k < steps.size() && steps[i + k] == Step::N) ++k;
                    for (std::size_t j = 0; j < k; ++j) {
                        if (i + k + j >= steps.size() || steps[i + k + j] != Step::E) return false;
                    }
                    i += 2 * k;
                }
                break;
        }
    }
    return true;
}

bool is_in_D(const SchroderPath& p) { return is_in_D_steps(p.steps()); }

bool has_diagonal_d_at(const SchroderPath& p, int t) {
    if (t < 1 || t > p.length()) {
        throw std::out_of_range("diagonal step index " + std::to_string(t) + " outside 1.." +
                                std::to_string(p.length()));
    }
    int x = 0;
    int y = 0;
    for (Step s : p.steps()) {
        if (s == Step::D && x == y && x == t - 1) return true;
        switch (s) {
            case Step::E: ++x; break;
            case Step::N: ++y; break;
            case Step::D: ++x; ++y; break;
        }
    }
    return false;
}

std::vector<SchroderPath> generate_paths(int n, bool restrict_to_D, int cap) {
    if (n < 0) throw std::invalid_argument("path length must be non-negative");
    if (n > cap) throw CapExceededError("path generation capped at n <= " + std::to_string(cap));
    std::vector<SchroderPath> out;
    for_each_path(n, restrict_to_D, [&](SchroderPath p) { out.push_back(std::move(p)); });
    return out;
}

}  // namespace schroder
