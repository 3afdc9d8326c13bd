#include "geocast/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "geocast/random.hpp"

namespace geocast {

double side_length_for_density(std::uint32_t node_count, double target_density,
                               double radio_range) {
    return std::sqrt(static_cast<double>(node_count - 1) * std::numbers::pi * radio_range *
                     radio_range / target_density);
}

Topology::Topology(TopologyConfig config, std::vector<Point> positions, double side_length)
    : config_(config), positions_(std::move(positions)), side_length_(side_length) {
    const std::uint32_t n = node_count();
    adjacency_.assign(n, {});

    // Uniform grid with cell size = radio range; neighbors live in the 3x3
    // cell block around a node.
    const double r = config_.radio_range;
    const double r2 = r * r;
    const int cells = std::max(1, static_cast<int>(side_length_ / r));
    const double cell_size = side_length_ / cells;
    std::vector<std::vector<NodeId>> grid(static_cast<std::size_t>(cells) * cells);
    auto cell_of = [&](const Point& p) {
        int cx = std::min(cells - 1, std::max(0, static_cast<int>(p.x / cell_size)));
        int cy = std::min(cells - 1, std::max(0, static_cast<int>(p.y / cell_size)));
        return std::pair<int, int>{cx, cy};
    };
    for (NodeId i = 0; i < n; ++i) {
        auto [cx, cy] = cell_of(positions_[i]);
        grid[static_cast<std::size_t>(cy) * cells + cx].push_back(i);
    }
    for (NodeId i = 0; i < n; ++i) {
        auto [cx, cy] = cell_of(positions_[i]);
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = cx + dx, ny = cy + dy;
                if (nx < 0 || ny < 0 || nx >= cells || ny >= cells) continue;
                for (NodeId j : grid[static_cast<std::size_t>(ny) * cells + nx]) {
                    if (j == i) continue;
                    const double d2 = distance_sq(positions_[i], positions_[j]);
                    if (d2 > 0.0 && d2 <= r2) adjacency_[i].push_back(j);
                }
            }
        }
        std::sort(adjacency_[i].begin(), adjacency_[i].end());
        edge_count_ += adjacency_[i].size();
    }
    edge_count_ /= 2;
}

namespace {

// Allocation-free connectivity screen for the rejection loop. At densities
// below the connectivity threshold (~ln n) most placements are rejected, and
// almost all rejects contain an isolated node, so the screen first looks for
// a node with no neighbor (cheap: stops at the first neighbor found) and runs
// the full search only when every node has one. Decisions match
// is_connected(Topology(...)) exactly: same grid, same 0 < d^2 <= r^2 edge
// rule, same start node.
class ConnectivityScreen {
  public:
    ConnectivityScreen(std::uint32_t node_count, double side, double radio_range)
        : r2_(radio_range * radio_range),
          cells_(std::max(1, static_cast<int>(side / radio_range))),
          cell_size_(side / cells_),
          cell_start_(static_cast<std::size_t>(cells_) * cells_ + 1),
          cell_nodes_(node_count),
          visited_(node_count),
          stack_(node_count) {}

    bool connected(const std::vector<Point>& pts) {
        bucket(pts);
        if (any_isolated(pts)) return false;
        return reaches_all(pts);
    }

  private:
    std::pair<int, int> cell_of(const Point& p) const {
        const int cx = std::min(cells_ - 1, std::max(0, static_cast<int>(p.x / cell_size_)));
        const int cy = std::min(cells_ - 1, std::max(0, static_cast<int>(p.y / cell_size_)));
        return {cx, cy};
    }

    void bucket(const std::vector<Point>& pts) {
        std::fill(cell_start_.begin(), cell_start_.end(), 0u);
        for (const Point& p : pts) {
            auto [cx, cy] = cell_of(p);
            ++cell_start_[static_cast<std::size_t>(cy) * cells_ + cx + 1];
        }
        for (std::size_t c = 1; c < cell_start_.size(); ++c) cell_start_[c] += cell_start_[c - 1];
        std::vector<std::uint32_t> cursor(cell_start_.begin(), cell_start_.end() - 1);
        for (NodeId i = 0; i < pts.size(); ++i) {
            auto [cx, cy] = cell_of(pts[i]);
            cell_nodes_[cursor[static_cast<std::size_t>(cy) * cells_ + cx]++] = i;
        }
    }

    template <typename Visit>
    void for_candidates(const std::vector<Point>& pts, NodeId i, Visit&& visit) const {
        auto [cx, cy] = cell_of(pts[i]);
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = cx + dx, ny = cy + dy;
                if (nx < 0 || ny < 0 || nx >= cells_ || ny >= cells_) continue;
                const std::size_t cell = static_cast<std::size_t>(ny) * cells_ + nx;
                for (std::uint32_t k = cell_start_[cell]; k < cell_start_[cell + 1]; ++k) {
                    const NodeId j = cell_nodes_[k];
                    if (j == i) continue;
                    const double d2 = distance_sq(pts[i], pts[j]);
                    if (d2 > 0.0 && d2 <= r2_) {
                        if (visit(j)) return;
                    }
                }
            }
        }
    }

    bool any_isolated(const std::vector<Point>& pts) {
        for (NodeId i = 0; i < pts.size(); ++i) {
            bool found = false;
            for_candidates(pts, i, [&](NodeId) {
                found = true;
                return true;  // one neighbor is enough
            });
            if (!found) return true;
        }
        return false;
    }

    bool reaches_all(const std::vector<Point>& pts) {
        std::fill(visited_.begin(), visited_.end(), 0);
        std::uint32_t seen = 1, top = 0;
        visited_[0] = 1;
        stack_[top++] = 0;
        while (top > 0) {
            const NodeId u = stack_[--top];
            for_candidates(pts, u, [&](NodeId v) {
                if (!visited_[v]) {
                    visited_[v] = 1;
                    ++seen;
                    stack_[top++] = v;
                }
                return false;
            });
        }
        return seen == pts.size();
    }

    double r2_;
    int cells_;
    double cell_size_;
    std::vector<std::uint32_t> cell_start_;
    std::vector<NodeId> cell_nodes_;
    std::vector<char> visited_;
    std::vector<NodeId> stack_;
};

}  // namespace

Topology generate(const TopologyConfig& config) {
    if (config.node_count < 2) throw std::invalid_argument("generate: node_count must be >= 2");
    if (config.target_density <= 0.0 || config.radio_range <= 0.0) {
        throw std::invalid_argument("generate: density and radio range must be positive");
    }
    const double side =
        side_length_for_density(config.node_count, config.target_density, config.radio_range);

    ConnectivityScreen screen(config.node_count, side, config.radio_range);
    std::vector<Point> positions(config.node_count);
    for (std::uint32_t attempt = 0; attempt < config.max_regen_attempts; ++attempt) {
        UniformRng rng(mix64(config.seed, attempt));
        for (auto& p : positions) {
            p.x = rng.next_unit() * side;
            p.y = rng.next_unit() * side;
        }
        if (!screen.connected(positions)) continue;
        Topology t(config, std::move(positions), side);
        if (!is_connected(t)) {
            throw std::logic_error("generate: connectivity screen disagrees with is_connected");
        }
        return t;
    }
    throw ConnectivityUnreachable(
        "generate: no connected topology in " + std::to_string(config.max_regen_attempts) +
        " attempts (node_count=" + std::to_string(config.node_count) +
        ", density=" + std::to_string(config.target_density) + ")");
}

bool is_connected(const Topology& t) {
    const std::uint32_t n = t.node_count();
    if (n == 0) return true;
    std::vector<char> visited(n, 0);
    std::vector<NodeId> stack{0};
    visited[0] = 1;
    std::uint32_t seen = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : t.neighbors(u)) {
            if (!visited[v]) {
                visited[v] = 1;
                ++seen;
                stack.push_back(v);
            }
        }
    }
    return seen == n;
}

std::vector<NodeId> nodes_in_region(const Topology& t, const Rect& region) {
    std::vector<NodeId> out;
    for (NodeId i = 0; i < t.node_count(); ++i) {
        if (region.contains(t.position(i))) out.push_back(i);
    }
    return out;
}

}  // namespace geocast
