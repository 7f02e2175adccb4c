#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctab {

// Entries of a tableau are 1..n; 0 marks an empty cell.
using Entry = int;

// 1-based box coordinates, rows growing downward (English convention).
struct BoxCoord {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

// ============================================================================
// Composition: ordered positive parts c_1..c_k, n = sum of parts.
// ============================================================================

class Composition {
public:
    static constexpr int kMaxN = 4096;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("composition: needs at least one part");
        long long total = 0;
        for (int p : parts_) {
            if (p < 1)
                throw std::invalid_argument("composition: parts must be positive");
            total += p;
        }
        if (total > kMaxN)
            throw std::invalid_argument("composition: size exceeds " + std::to_string(kMaxN));
        n_ = static_cast<int>(total);
    }

    // Accepts comma- and/or whitespace-separated positive integers.
    [[nodiscard]] static Composition parse(std::string_view text) {
        std::vector<int> parts;
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(token, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("composition: bad part '" + token + "'");
            }
            if (pos != token.size())
                throw std::invalid_argument("composition: bad part '" + token + "'");
            parts.push_back(value);
            token.clear();
        };
        for (char ch : text) {
            if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
                flush();
            } else {
                token.push_back(ch);
            }
        }
        flush();
        return Composition(std::move(parts));
    }

    [[nodiscard]] int columns() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int part(int i) const { return parts_.at(static_cast<size_t>(i) - 1); }  // 1-based
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

    [[nodiscard]] Composition prefix(int k) const {
        if (k < 1 || k > columns())
            throw std::invalid_argument("composition: bad prefix length");
        return Composition(std::vector<int>(parts_.begin(), parts_.begin() + k));
    }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// ============================================================================
// Diagram: top-aligned columns; box (row, col) present iff row <= c_col.
// ============================================================================

class Diagram {
public:
    explicit Diagram(const Composition& c) : heights_(c.parts()) {
        max_height_ = *std::max_element(heights_.begin(), heights_.end());
    }

    [[nodiscard]] int columns() const { return static_cast<int>(heights_.size()); }
    [[nodiscard]] int height(int col) const { return heights_.at(static_cast<size_t>(col) - 1); }
    [[nodiscard]] int max_height() const { return max_height_; }
    [[nodiscard]] int boxes() const {
        return std::accumulate(heights_.begin(), heights_.end(), 0);
    }
    [[nodiscard]] bool contains(int row, int col) const {
        return col >= 1 && col <= columns() && row >= 1 && row <= height(col);
    }
    [[nodiscard]] const std::vector<int>& heights() const { return heights_; }
    [[nodiscard]] Composition composition() const { return Composition(heights_); }

private:
    std::vector<int> heights_;
    int max_height_ = 0;
};

// ============================================================================
// Tableau: the diagram numbered 1..n going down columns, left to right.
// ============================================================================

class Tableau {
public:
    explicit Tableau(const Diagram& d) : diagram_(d) {
        col_start_.reserve(static_cast<size_t>(d.columns()) + 1);
        int next = 1;
        for (int col = 1; col <= d.columns(); ++col) {
            col_start_.push_back(next);
            next += d.height(col);
        }
        col_start_.push_back(next);
        box_of_.resize(static_cast<size_t>(next));
        for (int col = 1; col <= d.columns(); ++col)
            for (int row = 1; row <= d.height(col); ++row)
                box_of_[static_cast<size_t>(at(row, col))] = BoxCoord{row, col};
    }

    [[nodiscard]] const Diagram& diagram() const { return diagram_; }
    [[nodiscard]] int n() const { return col_start_.back() - 1; }

    [[nodiscard]] Entry at(int row, int col) const {
        if (!diagram_.contains(row, col))
            throw std::out_of_range("tableau: box outside diagram");
        return col_start_[static_cast<size_t>(col) - 1] + row - 1;
    }

    [[nodiscard]] BoxCoord box_of(Entry t) const {
        if (t < 1 || t > n())
            throw std::out_of_range("tableau: entry out of range");
        return box_of_[static_cast<size_t>(t)];
    }

private:
    Diagram diagram_;
    std::vector<int> col_start_;
    std::vector<BoxCoord> box_of_;
};

[[nodiscard]] inline Tableau build_tableau(const Composition& c) {
    return Tableau(Diagram(c));
}

// ============================================================================
// Precedence order: ranks entries by (column descending, row ascending).
// The first element 1' is the top of the rightmost column.
// ============================================================================

class PrecedenceOrder {
public:
    explicit PrecedenceOrder(const Tableau& t) {
        const Diagram& d = t.diagram();
        sequence_.reserve(static_cast<size_t>(t.n()));
        rank_.resize(static_cast<size_t>(t.n()) + 1, 0);
        for (int col = d.columns(); col >= 1; --col)
            for (int row = 1; row <= d.height(col); ++row)
                sequence_.push_back(t.at(row, col));
        for (int i = 0; i < static_cast<int>(sequence_.size()); ++i)
            rank_[static_cast<size_t>(sequence_[static_cast<size_t>(i)])] = i;
    }

    [[nodiscard]] const std::vector<Entry>& sequence() const { return sequence_; }
    [[nodiscard]] int rank(Entry t) const { return rank_.at(static_cast<size_t>(t)); }
    [[nodiscard]] bool precedes(Entry a, Entry b) const { return rank(a) < rank(b); }
    [[nodiscard]] Entry first() const { return sequence_.front(); }

private:
    std::vector<Entry> sequence_;
    std::vector<int> rank_;
};

[[nodiscard]] inline PrecedenceOrder precedence_order(const Tableau& t) {
    return PrecedenceOrder(t);
}

// ============================================================================
// Left neighbours and neighbouring pairs.
// ============================================================================

// Rightmost column strictly left of col with the same height, if any.
[[nodiscard]] inline std::optional<int> left_neighbor(const Diagram& d, int col) {
    if (col < 1 || col > d.columns())
        throw std::out_of_range("left_neighbor: bad column");
    const int h = d.height(col);
    for (int j = col - 1; j >= 1; --j)
        if (d.height(j) == h) return j;
    return std::nullopt;
}

struct NeighborPair {
    int left_col = 0;
    int right_col = 0;
    int height = 0;
    friend auto operator<=>(const NeighborPair&, const NeighborPair&) = default;
};

// One pair per column owning a left neighbour; sorted by right column.
[[nodiscard]] inline std::vector<NeighborPair> neighboring_pairs(const Diagram& d) {
    std::vector<NeighborPair> pairs;
    for (int col = 1; col <= d.columns(); ++col)
        if (auto ln = left_neighbor(d, col))
            pairs.push_back(NeighborPair{*ln, col, d.height(col)});
    return pairs;
}

}  // namespace ctab
