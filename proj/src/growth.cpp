#include "descentkit/growth.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "descentkit/rsk.hpp"

namespace descentkit {

GrowthDiagram::GrowthDiagram(int n)
    : n_(n), cells_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1)) {}

std::size_t GrowthDiagram::index(int i, int j) const {
    if (i < 0 || j < i || j > n_)
        throw std::out_of_range("growth cell (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside n = " + std::to_string(n_));
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j);
}

std::vector<Partition> sandwich_partitions(const Partition& lower, const Partition& upper) {
    std::vector<Partition> out;
    for (int r = 1; r <= lower.length() + 1; ++r) {
        if (!lower.can_add_box(r)) continue;
        Partition nu = lower.with_box(r);
        if (upper.contains(nu)) out.push_back(std::move(nu));
    }
    return out;
}

Partition growth_local_rule(const Partition& lower, const Partition& upper, const Partition& diagonal) {
    auto candidates = sandwich_partitions(lower, upper);
    if (candidates.empty())
        throw std::logic_error("growth local rule: no partition between " + to_string(lower) +
                               " and " + to_string(upper));
    if (candidates.size() == 2 && candidates[0] == diagonal) return candidates[1];
    return candidates[0];
}

GrowthDiagram build_growth(const StandardTableau& q) {
    const int n = q.size();
    GrowthDiagram g(n);
    const PartitionChain chain = chain_encode(q);
    for (int j = 0; j <= n; ++j) g.at(0, j) = chain[j];
    for (int i = 1; i <= n; ++i) {
        // Lambda_{i,i} stays empty.
        for (int j = i + 1; j <= n; ++j)
            g.at(i, j) = growth_local_rule(g.at(i, j - 1), g.at(i - 1, j), g.at(i - 1, j - 1));
    }
    return g;
}

StandardTableau evacuate(const StandardTableau& q) {
    const int n = q.size();
    if (n == 0) return q;
    const GrowthDiagram g = build_growth(q);
    std::vector<Partition> chain;
    chain.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) chain.push_back(g.at(n - i, n));
    return chain_decode(PartitionChain(std::move(chain)));
}

const Partition& factor_shape(const GrowthDiagram& g, int i, int j) {
    if (i < 1 || j < i || j > g.n())
        throw std::out_of_range("factor [" + std::to_string(i) + ", " + std::to_string(j) +
                                "] outside 1.." + std::to_string(g.n()));
    return g.at(i - 1, j);
}

StatTriangle stat_triangle(const GrowthDiagram& g) {
    StatTriangle t(g.n());
    for (int i = 1; i <= g.n(); ++i) {
        for (int j = i; j <= g.n(); ++j) {
            const Partition& shape = g.at(i - 1, j);
            t(i, j) = FactorStats{shape.first_part(), shape.length()};
        }
    }
    return t;
}

StatTriangle stat_triangle(const Permutation& p) { return stat_triangle(build_growth(rsk(p).recording)); }

namespace {

std::string cell_label(const Partition& p) { return p.empty() ? "." : to_string(p); }

}  // namespace

std::string render_ascii(const GrowthDiagram& g) {
    const int n = g.n();
    std::size_t width = 1;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) width = std::max(width, cell_label(g.at(i, j)).size());
    const std::size_t unit = width + 1;

    std::ostringstream out;
    for (int h = n; h >= 0; --h) {
        std::string line;
        for (int i = 0; i + h <= n; ++i) {
            const int j = i + h;
            const std::size_t col = static_cast<std::size_t>(i + j) * unit;
            if (line.size() < col) line.append(col - line.size(), ' ');
            line += cell_label(g.at(i, j));
        }
        out << line << '\n';
    }
    return out.str();
}

std::string render_dot(const GrowthDiagram& g) {
    const int n = g.n();
    std::ostringstream out;
    out << "digraph growth {\n";
    out << "  rankdir=BT;\n";
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const Partition& p = g.at(i, j);
            out << "  c" << i << '_' << j << " [label=\"" << (p.empty() ? "\xE2\x88\x85" : to_string(p))
                << "\"];\n";
        }
    }
    // Edges point from the smaller partition to the containing one.
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (j + 1 <= n) out << "  c" << i << '_' << j << " -> c" << i << '_' << j + 1 << ";\n";
            if (i + 1 <= j) out << "  c" << i + 1 << '_' << j << " -> c" << i << '_' << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

nlohmann::json to_json(const GrowthDiagram& g) {
    nlohmann::json cells = nlohmann::json::array();
    for (int i = 0; i <= g.n(); ++i) {
        for (int j = i; j <= g.n(); ++j) {
            auto parts = g.at(i, j).parts();
            cells.push_back({i, j, std::vector<int>(parts.begin(), parts.end())});
        }
    }
    return {{"n", g.n()}, {"cells", std::move(cells)}};
}

}  // namespace descentkit
