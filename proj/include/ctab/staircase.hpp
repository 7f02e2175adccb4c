#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ctab/core.hpp"

namespace ctab {

// A maximal column staircase: columns of heights u..c, left to right, each
// owning a left neighbour, with no column at least as tall in between.
// depth() is the height of its last column. The base is the box left-adjacent
// to the first column at row u.
struct Staircase {
    std::vector<int> cols;
    int first_height = 0;
    int last_height = 0;
    BoxCoord base;
    bool right_extremal = false;

    [[nodiscard]] int depth() const { return last_height; }
    friend bool operator==(const Staircase&, const Staircase&) = default;
};

namespace detail {

// Next column of the chain above col: the first column to its right at least
// as tall must be exactly one taller and own a left neighbour.
[[nodiscard]] inline std::optional<int> up_extension(const Diagram& d, int col) {
    const int h = d.height(col);
    for (int j = col + 1; j <= d.columns(); ++j) {
        if (d.height(j) >= h) {
            if (d.height(j) == h + 1 && left_neighbor(d, j)) return j;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// Previous column of the chain below col, by the mirrored rule.
[[nodiscard]] inline std::optional<int> down_extension(const Diagram& d, int col) {
    const int h = d.height(col);
    if (h == 1) return std::nullopt;
    for (int j = col - 1; j >= 1; --j) {
        if (d.height(j) >= h - 1) {
            if (d.height(j) == h - 1 && left_neighbor(d, j)) return j;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

[[nodiscard]] inline int rightmost_at_least(const Diagram& d, int min_height, int before_col) {
    for (int j = before_col - 1; j >= 1; --j)
        if (d.height(j) >= min_height) return j;
    return 0;
}

}  // namespace detail

// All maximal staircases, sorted by first column. They partition the columns
// owning a left neighbour.
[[nodiscard]] inline std::vector<Staircase> enumerate_staircases(const Diagram& d) {
    std::vector<Staircase> out;
    for (int col = 1; col <= d.columns(); ++col) {
        if (!left_neighbor(d, col)) continue;
        if (detail::down_extension(d, col)) continue;  // not the lowest link
        Staircase s;
        s.cols.push_back(col);
        while (auto next = detail::up_extension(d, s.cols.back())) s.cols.push_back(*next);
        s.first_height = d.height(s.cols.front());
        s.last_height = d.height(s.cols.back());
        s.base = BoxCoord{s.first_height, detail::rightmost_at_least(d, s.first_height, s.cols.front())};
        s.right_extremal = true;
        for (int j = s.cols.back() + 1; j <= d.columns(); ++j)
            if (d.height(j) >= s.last_height) s.right_extremal = false;
        out.push_back(std::move(s));
    }
    return out;
}

// ============================================================================
// Right-extremal boxes, read off the diagram alone: bases of right-extremal
// staircases, plus the lower parts of right-extremal columns, except that the
// top lower-part box yields to a right-extremal staircase of matching depth.
// ============================================================================

[[nodiscard]] inline std::set<BoxCoord> right_extremal_boxes(const Diagram& d) {
    std::set<BoxCoord> boxes;
    std::set<int> re_depths;
    for (const Staircase& s : enumerate_staircases(d)) {
        if (!s.right_extremal) continue;
        boxes.insert(s.base);
        re_depths.insert(s.depth());
    }
    int tallest_right = 0;  // c^i, scanned right to left
    for (int col = d.columns(); col >= 1; --col) {
        const int h = d.height(col);
        if (h > tallest_right) {
            for (int row = tallest_right + 1; row <= h; ++row) {
                if (row == tallest_right + 1 && re_depths.count(tallest_right)) continue;
                boxes.insert(BoxCoord{row, col});
            }
            tallest_right = h;
        }
    }
    return boxes;
}

[[nodiscard]] inline bool is_right_extremal(const Diagram& d, BoxCoord box) {
    return right_extremal_boxes(d).count(box) > 0;
}

// ============================================================================
// Oracle composition map: row t is fed by the base of the right-extremal
// staircase of depth t-1 when one exists, otherwise by row t of the rightmost
// column reaching it.
// ============================================================================

[[nodiscard]] inline std::vector<Entry> oracle_composition_map(const Diagram& d, const Tableau& t) {
    const int s = d.max_height();
    auto staircases = enumerate_staircases(d);
    std::vector<Entry> r(static_cast<size_t>(s) + 1, 0);
    for (int row = 1; row <= s + 1; ++row) {
        const Staircase* found = nullptr;
        for (const Staircase& sc : staircases)
            if (sc.right_extremal && sc.depth() == row - 1) found = &sc;
        if (found) {
            r[static_cast<size_t>(row) - 1] = t.at(found->base.row, found->base.col);
        } else if (row <= s) {
            int col = 0;
            for (int j = d.columns(); j >= 1; --j)
                if (d.height(j) >= row) {
                    col = j;
                    break;
                }
            r[static_cast<size_t>(row) - 1] = t.at(row, col);
        }
    }
    return r;
}

// ============================================================================
// Profile footprint: the largest prefix in which the entry's box stays
// right-extremal bounds its spread; a staircase base descends along the
// staircase profile, anything else extends flat along its row.
// ============================================================================

[[nodiscard]] inline std::vector<BoxCoord> profile_footprint(const Diagram& d, const Tableau& t, Entry entry) {
    const BoxCoord box = t.box_of(entry);
    const Composition full = d.composition();
    int largest = box.col;
    for (int q = box.col + 1; q <= d.columns(); ++q) {
        if (right_extremal_boxes(Diagram(full.prefix(q))).count(box))
            largest = q;
        else
            break;
    }
    Diagram at_largest(full.prefix(largest));
    for (const Staircase& s : enumerate_staircases(at_largest)) {
        if (!s.right_extremal || s.base != box) continue;
        std::vector<int> profile;
        profile.push_back(s.base.col);
        profile.insert(profile.end(), s.cols.begin(), s.cols.end());
        profile.push_back(largest + 1);
        std::vector<BoxCoord> cells;
        for (size_t j = 0; j + 1 < profile.size(); ++j) {
            const int row = s.first_height + static_cast<int>(j);
            for (int col = profile[j]; col < profile[j + 1]; ++col) cells.push_back(BoxCoord{row, col});
        }
        return cells;
    }
    std::vector<BoxCoord> cells;
    for (int col = box.col; col <= largest; ++col) cells.push_back(BoxCoord{box.row, col});
    return cells;
}

// ============================================================================
// Replacement chain from a right-extremal column one taller than everything
// to its right: the lower-part box walks through the bases of the maximal
// staircases of matching depth further right, ending at the right-extremal
// one. Diagnostic only.
// ============================================================================

[[nodiscard]] inline std::vector<BoxCoord> replacement_chain(const Diagram& d, int col) {
    if (col < 1 || col > d.columns())
        throw std::invalid_argument("replacement_chain: bad column");
    int tallest_right = 0;
    for (int j = col + 1; j <= d.columns(); ++j) tallest_right = std::max(tallest_right, d.height(j));
    if (d.height(col) != tallest_right + 1)
        throw std::invalid_argument("replacement_chain: column is not right-extremal of surplus one");
    std::vector<BoxCoord> chain{BoxCoord{d.height(col), col}};
    bool have_extremal = false;
    for (const Staircase& s : enumerate_staircases(d))
        if (s.right_extremal && s.depth() == tallest_right) have_extremal = true;
    if (!have_extremal) return chain;
    for (const Staircase& s : enumerate_staircases(d)) {
        if (s.depth() != tallest_right || s.cols.front() <= col) continue;
        chain.push_back(s.base);
        if (s.right_extremal) break;
    }
    return chain;
}

}  // namespace ctab
