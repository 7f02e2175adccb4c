#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ctab/core.hpp"
#include "ctab/propagation.hpp"

namespace ctab {

enum class LineLabel { One, Star };

// A labelled line joining two tableau boxes; left < right numerically and the
// left box sits in an earlier column.
struct Line {
    Entry left = 0;
    Entry right = 0;
    LineLabel label = LineLabel::One;
    BoxCoord left_box;
    BoxCoord right_box;
    friend auto operator<=>(const Line&, const Line&) = default;
};

// ============================================================================
// Reading rules. A Star line records a one-row descent: its right end is the
// bottom tableau box of the column entered. A One line records the stop: the
// partner sits in the blocking column, one row up for a blocked cell.
// ============================================================================

[[nodiscard]] inline std::vector<Line> extract_star_lines(const ExtendedTableau& e, const Tableau& t) {
    std::vector<Line> lines;
    for (Entry entry = 1; entry <= t.n(); ++entry) {
        const Trajectory& traj = e.trajectory(entry);
        for (size_t i = 1; i < traj.cells.size(); ++i) {
            if (traj.cells[i].row != traj.cells[i - 1].row + 1) continue;
            const int col = traj.cells[i].col;
            const Entry step = t.at(traj.cells[i].row - 1, col);
            lines.push_back(Line{entry, step, LineLabel::Star, t.box_of(entry), t.box_of(step)});
        }
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

[[nodiscard]] inline std::vector<Line> extract_one_lines(const ExtendedTableau& e, const Tableau& t) {
    std::vector<Line> lines;
    for (Entry entry = 1; entry <= t.n(); ++entry) {
        const Trajectory& traj = e.trajectory(entry);
        if (traj.stop.kind == StopKind::EndOfDiagram) continue;
        const int col = traj.stop.blocking_col;
        const int row = traj.stop.kind == StopKind::BlockedCell ? traj.fin().row - 1 : traj.fin().row;
        const Entry partner = t.at(row, col);
        lines.push_back(Line{entry, partner, LineLabel::One, t.box_of(entry), t.box_of(partner)});
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

struct LineSet {
    std::vector<Line> lines;  // sorted by (left, right)

    [[nodiscard]] std::vector<Line> one_lines() const {
        std::vector<Line> out;
        for (const Line& l : lines)
            if (l.label == LineLabel::One) out.push_back(l);
        return out;
    }
    [[nodiscard]] std::vector<Line> star_lines() const {
        std::vector<Line> out;
        for (const Line& l : lines)
            if (l.label == LineLabel::Star) out.push_back(l);
        return out;
    }
    friend bool operator==(const LineSet&, const LineSet&) = default;
};

[[nodiscard]] inline LineSet extract_lines(const ExtendedTableau& e, const Tableau& t) {
    LineSet set;
    set.lines = extract_one_lines(e, t);
    auto stars = extract_star_lines(e, t);
    set.lines.insert(set.lines.end(), stars.begin(), stars.end());
    std::sort(set.lines.begin(), set.lines.end());
    return set;
}

// ============================================================================
// Section data: One pairs are the fixed coordinates, Star pairs span the
// moving subspace. A quadruplet chains One-Star-One; each contributes one
// extra coordinate joining its outer ends across the Star.
// ============================================================================

struct Quadruplet {
    Entry i = 0, j = 0, k = 0, l = 0;
    friend auto operator<=>(const Quadruplet&, const Quadruplet&) = default;
};

struct WeierstrassSection {
    int n = 0;
    std::vector<std::pair<Entry, Entry>> e_coords;
    std::vector<std::pair<Entry, Entry>> v_coords;
    std::vector<Quadruplet> quadruplets;
    std::vector<std::pair<Entry, Entry>> evs_extras;
    friend bool operator==(const WeierstrassSection&, const WeierstrassSection&) = default;
};

[[nodiscard]] inline WeierstrassSection build_section(const LineSet& set, int n) {
    WeierstrassSection s;
    s.n = n;
    auto ones = set.one_lines();
    for (const Line& l : ones) s.e_coords.emplace_back(l.left, l.right);
    for (const Line& l : set.star_lines()) {
        s.v_coords.emplace_back(l.left, l.right);
        const Line* incoming = nullptr;
        const Line* outgoing = nullptr;
        for (const Line& o : ones) {
            if (o.right == l.left) incoming = &o;
            if (o.left == l.right) outgoing = &o;
        }
        if (incoming && outgoing) {
            s.quadruplets.push_back(Quadruplet{incoming->left, l.left, l.right, outgoing->right});
            s.evs_extras.emplace_back(l.left, outgoing->right);
        }
    }
    return s;
}

// ============================================================================
// Matrix pattern: the n-by-n picture of the section, block structure given by
// the composition; every mark lands strictly above the block diagonal.
// ============================================================================

enum class CellMark { Zero, One, Star, OneVS };

struct MatrixPattern {
    int n = 0;
    std::vector<CellMark> marks;

    explicit MatrixPattern(int size) : n(size), marks(static_cast<size_t>(size) * static_cast<size_t>(size), CellMark::Zero) {}

    [[nodiscard]] CellMark at(int i, int j) const {
        return marks.at(static_cast<size_t>(i - 1) * static_cast<size_t>(n) + static_cast<size_t>(j - 1));
    }
    void set(int i, int j, CellMark m) {
        marks.at(static_cast<size_t>(i - 1) * static_cast<size_t>(n) + static_cast<size_t>(j - 1)) = m;
    }
};

// 1-based block (column) index owning matrix index a.
[[nodiscard]] inline int block_index(const Composition& c, int a) {
    int upper = 0;
    for (int b = 1; b <= c.columns(); ++b) {
        upper += c.part(b);
        if (a <= upper) return b;
    }
    throw std::out_of_range("block_index: index exceeds n");
}

[[nodiscard]] inline MatrixPattern matrix_pattern(const WeierstrassSection& s, const Composition& c,
                                                  bool include_vs) {
    MatrixPattern m(s.n);
    auto place = [&](Entry i, Entry j, CellMark mark) {
        if (block_index(c, i) >= block_index(c, j))
            throw std::logic_error("matrix_pattern: mark not strictly above the block diagonal");
        m.set(i, j, mark);
    };
    for (auto [i, j] : s.e_coords) place(i, j, CellMark::One);
    for (auto [j, k] : s.v_coords) place(j, k, CellMark::Star);
    if (include_vs)
        for (auto [j, l] : s.evs_extras) place(j, l, CellMark::OneVS);
    return m;
}

}  // namespace ctab
