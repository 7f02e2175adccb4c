#pragma once

#include <utility>
#include <vector>

#include "ctab/core.hpp"

namespace ctab {

// Why an entry stopped moving right. blocking_col is 0 iff EndOfDiagram.
enum class StopKind { EndOfDiagram, TallColumn, BlockedCell, NoDescent };

struct StopRecord {
    StopKind kind = StopKind::EndOfDiagram;
    int blocking_col = 0;
    friend bool operator==(const StopRecord&, const StopRecord&) = default;
};

// Cells an entry occupies, in column order; cells.front() is its tableau box.
struct Trajectory {
    Entry entry = 0;
    std::vector<BoxCoord> cells;
    StopRecord stop;
    [[nodiscard]] const BoxCoord& fin() const { return cells.back(); }
};

// Dense occupancy grid, rows 1..rows, cols 1..cols; 0 marks an empty cell.
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<Entry> cells;

    Grid() = default;
    Grid(int r, int c) : rows(r), cols(c), cells(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    [[nodiscard]] Entry at(int row, int col) const {
        return cells.at(static_cast<size_t>(row - 1) * static_cast<size_t>(cols) + static_cast<size_t>(col - 1));
    }
    void set(int row, int col, Entry value) {
        cells.at(static_cast<size_t>(row - 1) * static_cast<size_t>(cols) + static_cast<size_t>(col - 1)) = value;
    }
    friend bool operator==(const Grid&, const Grid&) = default;
};

struct RepeatCell {
    Entry entry = 0;
    int row = 0;
    int col = 0;
    friend auto operator<=>(const RepeatCell&, const RepeatCell&) = default;
};

// ============================================================================
// ExtendedTableau: the tableau plus every propagated copy of its entries.
// Rows run 1..max_height+1; propagation never reaches further down.
// ============================================================================

class ExtendedTableau {
public:
    ExtendedTableau(Tableau base, Grid grid, std::vector<Trajectory> trajectories)
        : base_(std::move(base)), grid_(std::move(grid)), trajectories_(std::move(trajectories)) {}

    [[nodiscard]] const Tableau& base() const { return base_; }
    [[nodiscard]] const Diagram& diagram() const { return base_.diagram(); }
    [[nodiscard]] int rows() const { return grid_.rows; }
    [[nodiscard]] int columns() const { return grid_.cols; }

    // 0 when the cell is empty; valid for rows 1..max_height+1.
    [[nodiscard]] Entry at(int row, int col) const { return grid_.at(row, col); }

    [[nodiscard]] bool is_repeat(int row, int col) const {
        return grid_.at(row, col) != 0 && !diagram().contains(row, col);
    }

    [[nodiscard]] const Trajectory& trajectory(Entry t) const {
        return trajectories_.at(static_cast<size_t>(t));
    }

    [[nodiscard]] const Grid& grid() const { return grid_; }

    // Cells outside the diagram, in (col, row) scan order.
    [[nodiscard]] std::vector<RepeatCell> repeats() const {
        std::vector<RepeatCell> out;
        for (int col = 1; col <= columns(); ++col)
            for (int row = 1; row <= rows(); ++row)
                if (is_repeat(row, col)) out.push_back(RepeatCell{at(row, col), row, col});
        return out;
    }

private:
    Tableau base_;
    Grid grid_;
    std::vector<Trajectory> trajectories_;
};

// ============================================================================
// Insertion: each entry, taken in precedence order, moves right one column at
// a time until a stop rule fires. Placements land strictly outside the
// diagram; the blocking column records which column refused the move.
// ============================================================================

[[nodiscard]] inline ExtendedTableau propagate(const Tableau& t, const PrecedenceOrder& order) {
    const Diagram& d = t.diagram();
    const int k = d.columns();
    Grid grid(d.max_height() + 1, k);
    for (int col = 1; col <= k; ++col)
        for (int row = 1; row <= d.height(col); ++row) grid.set(row, col, t.at(row, col));

    std::vector<bool> has_left_neighbor(static_cast<size_t>(k) + 1, false);
    for (int col = 1; col <= k; ++col)
        has_left_neighbor[static_cast<size_t>(col)] = left_neighbor(d, col).has_value();

    std::vector<Trajectory> trajectories(static_cast<size_t>(t.n()) + 1);
    for (Entry e : order.sequence()) {
        Trajectory traj;
        traj.entry = e;
        BoxCoord pos = t.box_of(e);
        traj.cells.push_back(pos);
        for (;;) {
            if (pos.col == k) {
                traj.stop = StopRecord{StopKind::EndOfDiagram, 0};
                break;
            }
            const int next = pos.col + 1;
            const int h = d.height(next);
            if (h > pos.row) {
                traj.stop = StopRecord{StopKind::TallColumn, next};
                break;
            }
            if (h < pos.row) {
                if (grid.at(pos.row, next) != 0) {
                    traj.stop = StopRecord{StopKind::BlockedCell, next};
                    break;
                }
                pos = BoxCoord{pos.row, next};
            } else {
                if (!has_left_neighbor[static_cast<size_t>(next)] || grid.at(pos.row + 1, next) != 0) {
                    traj.stop = StopRecord{StopKind::NoDescent, next};
                    break;
                }
                pos = BoxCoord{pos.row + 1, next};
            }
            grid.set(pos.row, pos.col, e);
            traj.cells.push_back(pos);
        }
        trajectories[static_cast<size_t>(e)] = std::move(traj);
    }
    return ExtendedTableau(t, std::move(grid), std::move(trajectories));
}

// ============================================================================
// Semistandardness in the precedence order: columns fill from the top and
// strictly increase downward; consecutive filled row cells weakly decrease
// left to right (copies of one entry compare equal).
// ============================================================================

[[nodiscard]] inline bool is_semistandard(const Grid& g, const PrecedenceOrder& order) {
    for (int col = 1; col <= g.cols; ++col) {
        bool ended = false;
        for (int row = 1; row <= g.rows; ++row) {
            if (g.at(row, col) == 0) {
                ended = true;
            } else if (ended) {
                return false;  // gap inside a column
            }
        }
        for (int row = 1; row < g.rows; ++row) {
            Entry upper = g.at(row, col), lower = g.at(row + 1, col);
            if (upper != 0 && lower != 0 && order.rank(lower) <= order.rank(upper)) return false;
        }
    }
    for (int row = 1; row <= g.rows; ++row)
        for (int col = 1; col < g.cols; ++col) {
            Entry left = g.at(row, col), right = g.at(row, col + 1);
            if (left != 0 && right != 0 && order.rank(right) > order.rank(left)) return false;
        }
    return true;
}

[[nodiscard]] inline bool is_semistandard(const ExtendedTableau& e, const PrecedenceOrder& order) {
    return is_semistandard(e.grid(), order);
}

// Reverse the columns and rename each entry by its 1-based precedence rank.
[[nodiscard]] inline Grid mirror_semistandard(const ExtendedTableau& e, const PrecedenceOrder& order) {
    Grid mirrored(e.rows(), e.columns());
    for (int row = 1; row <= e.rows(); ++row)
        for (int col = 1; col <= e.columns(); ++col) {
            Entry v = e.at(row, col);
            if (v != 0) mirrored.set(row, e.columns() - col + 1, order.rank(v) + 1);
        }
    return mirrored;
}

// Classical convention: left-aligned rows weakly increase, columns strictly
// increase over consecutive filled cells.
[[nodiscard]] inline bool classical_semistandard(const Grid& g) {
    for (int row = 1; row <= g.rows; ++row) {
        bool ended = false;
        for (int col = 1; col <= g.cols; ++col) {
            if (g.at(row, col) == 0) {
                ended = true;
            } else if (ended) {
                return false;  // gap inside a row
            }
        }
        for (int col = 1; col < g.cols; ++col) {
            Entry left = g.at(row, col), right = g.at(row, col + 1);
            if (left != 0 && right != 0 && right < left) return false;
        }
    }
    for (int col = 1; col <= g.cols; ++col)
        for (int row = 1; row < g.rows; ++row) {
            Entry upper = g.at(row, col), lower = g.at(row + 1, col);
            if (upper != 0 && lower != 0 && lower <= upper) return false;
        }
    return true;
}

// ============================================================================
// Composition map: r_t is the entry exiting past the last column at row t,
// equivalently the entry a tall appended column would stop at row t.
// Indices 1..max_height+1; 0 where no entry exits.
// ============================================================================

[[nodiscard]] inline std::vector<Entry> composition_map(const ExtendedTableau& e) {
    std::vector<Entry> r(static_cast<size_t>(e.diagram().max_height()) + 2, 0);
    for (Entry t = 1; t <= e.base().n(); ++t) {
        const Trajectory& traj = e.trajectory(t);
        if (traj.stop.kind == StopKind::EndOfDiagram) r[static_cast<size_t>(traj.fin().row)] = t;
    }
    r.erase(r.begin());  // drop the unused 0 slot
    return r;
}

[[nodiscard]] inline std::vector<Entry> composition_map(const Tableau& t) {
    PrecedenceOrder order(t);
    return composition_map(propagate(t, order));
}

[[nodiscard]] inline std::vector<Entry> composition_map(const Composition& c) {
    return composition_map(build_tableau(c));
}

}  // namespace ctab
