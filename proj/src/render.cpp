#include "schroder/render.hpp"

#include <vector>

namespace schroder {

namespace {

int glyph_rank(char c) {
    switch (c) {
        case '/': return 4;
        case '|': return 3;
        case '_': return 2;
        case '.': return 1;
        default: return 0;
    }
}

}  // namespace

std::string render_path(const SchroderPath& p) {
    const int n = p.length();
    if (n == 0) return "(null path)\n";
    std::vector<std::string> grid(static_cast<std::size_t>(n),
                                  std::string(static_cast<std::size_t>(n), ' '));
    // Cell (x, y) sits at text row n-1-y, column x. When a cell carries both
    // a wall and a roof the wall wins; diagonal dots lose to any path glyph.
    auto put = [&](int x, int y, char c) {
        char& cell = grid[static_cast<std::size_t>(n - 1 - y)][static_cast<std::size_t>(x)];
        if (glyph_rank(c) > glyph_rank(cell)) cell = c;
    };
    for (int i = 0; i < n; ++i) put(n - 1 - i, n - 1 - i, '.');

    int x = 0;
    int y = 0;
    for (Step s : p.steps()) {
        switch (s) {
            case Step::D:
                put(x, y, '/');
                ++x;
                ++y;
                break;
            case Step::N:
                put(x, y, '|');
                ++y;
                break;
            case Step::E:
                put(x, y - 1, '_');
                ++x;
                break;
        }
    }
    std::string out;
    for (std::string row : grid) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace schroder
