#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctab/core.hpp"
#include "ctab/lines.hpp"
#include "ctab/propagation.hpp"
#include "ctab/staircase.hpp"

namespace ctab {

struct ChainCover {
    NeighborPair pair;
    std::vector<BoxCoord> window;
    std::vector<std::vector<Entry>> chains;
    Line star_line;  // l_star, ending at the bottom box of the right column
};

class ViolationError : public std::runtime_error {
public:
    explicit ViolationError(const std::string& message) : std::runtime_error(message) {}

    NeighborPair pair{};
    std::vector<ChainCover> covers;  // all families found when uniqueness fails
    BoxCoord box{};
    std::string clause;
};

// ============================================================================
// Chain covers. For each neighbouring pair, the lines with both ends inside
// the window must assemble into exactly one family of height-many vertex-
// disjoint left-to-right chains through every window box; the family carries
// exactly one Star line, the one entering the bottom of the right column, and
// uses every window One line.
// ============================================================================

namespace detail {

struct CoverSearch {
    std::vector<BoxCoord> window;
    std::map<BoxCoord, int> index;
    std::vector<std::vector<int>> candidates;  // per window box, indices into lines
    std::vector<Line> lines;                   // in-window lines
    std::vector<int> choosers;                 // boxes needing an outgoing line
};

inline void enumerate_covers(const CoverSearch& search, size_t depth, std::vector<int>& choice,
                             std::vector<bool>& taken, std::vector<std::vector<int>>& out) {
    if (depth == search.choosers.size()) {
        out.push_back(choice);
        return;
    }
    const int box = search.choosers[depth];
    for (int li : search.candidates[static_cast<size_t>(box)]) {
        const Line& line = search.lines[static_cast<size_t>(li)];
        const int target = search.index.at(line.right_box);
        if (taken[static_cast<size_t>(target)]) continue;
        taken[static_cast<size_t>(target)] = true;
        choice[depth] = li;
        enumerate_covers(search, depth + 1, choice, taken, out);
        taken[static_cast<size_t>(target)] = false;
    }
}

inline ChainCover assemble_cover(const NeighborPair& pair, const CoverSearch& search,
                                 const Tableau& tableau, const std::vector<int>& choice) {
    ChainCover cover;
    cover.pair = pair;
    cover.window = search.window;
    std::map<BoxCoord, BoxCoord> next;
    for (int li : choice) {
        const Line& line = search.lines[static_cast<size_t>(li)];
        next[line.left_box] = line.right_box;
        if (line.label == LineLabel::Star) cover.star_line = line;
    }
    for (const BoxCoord& start : search.window) {
        if (start.col != pair.left_col) continue;
        std::vector<Entry> chain{tableau.at(start.row, start.col)};
        for (auto it = next.find(start); it != next.end(); it = next.find(it->second))
            chain.push_back(tableau.at(it->second.row, it->second.col));
        cover.chains.push_back(std::move(chain));
    }
    return cover;
}

}  // namespace detail

[[nodiscard]] inline std::vector<ChainCover> chain_cover_check(const Diagram& d, const Tableau& tableau,
                                                               const LineSet& lines) {
    std::vector<ChainCover> result;
    for (const NeighborPair& pair : neighboring_pairs(d)) {
        detail::CoverSearch search;
        for (int col = pair.left_col; col <= pair.right_col; ++col)
            for (int row = 1; row <= std::min(pair.height, d.height(col)); ++row)
                search.window.push_back(BoxCoord{row, col});
        for (size_t i = 0; i < search.window.size(); ++i) search.index[search.window[i]] = static_cast<int>(i);
        for (const Line& l : lines.lines)
            if (search.index.count(l.left_box) && search.index.count(l.right_box)) search.lines.push_back(l);
        search.candidates.assign(search.window.size(), {});
        for (size_t li = 0; li < search.lines.size(); ++li)
            search.candidates[static_cast<size_t>(search.index.at(search.lines[li].left_box))].push_back(
                static_cast<int>(li));
        for (size_t i = 0; i < search.window.size(); ++i)
            if (search.window[i].col != pair.right_col) search.choosers.push_back(static_cast<int>(i));

        std::vector<std::vector<int>> solutions;
        std::vector<int> choice(search.choosers.size(), -1);
        std::vector<bool> taken(search.window.size(), false);
        detail::enumerate_covers(search, 0, choice, taken, solutions);

        auto fail = [&](const std::string& what) {
            std::ostringstream msg;
            msg << "chain cover violation for pair (" << pair.left_col << "," << pair.right_col
                << ") of height " << pair.height << ": " << what;
            ViolationError err(msg.str());
            err.pair = pair;
            for (const auto& sol : solutions) err.covers.push_back(detail::assemble_cover(pair, search, tableau, sol));
            throw err;
        };
        if (solutions.size() != 1) fail("found " + std::to_string(solutions.size()) + " families instead of 1");

        const BoxCoord bottom{pair.height, pair.right_col};
        size_t window_ones = 0;
        for (const Line& l : search.lines)
            if (l.label == LineLabel::One) ++window_ones;
        size_t used_ones = 0, used_stars = 0;
        for (int li : solutions.front()) {
            const Line& l = search.lines[static_cast<size_t>(li)];
            if (l.label == LineLabel::Star) {
                ++used_stars;
                if (l.right_box != bottom) fail("a Star line ends away from the bottom right box");
            } else {
                ++used_ones;
            }
        }
        if (used_stars != 1) fail("family uses " + std::to_string(used_stars) + " Star lines instead of 1");
        if (used_ones != window_ones) fail("family does not use every window One line");
        result.push_back(detail::assemble_cover(pair, search, tableau, solutions.front()));
    }
    return result;
}

// ============================================================================
// Structural audit. Per neighbouring pair: interior boxes take exactly one
// One line from inside the half-open window; every non-final window box sends
// exactly one line onward (its One, or the bottom Star). Per column: the
// lines arriving from the left are exactly those the previous column's
// boundary slice predicts, Star into the bottom box iff the height repeats.
// The One line into a pair's bottom box may start below the window or hop
// over its left column; such lines are recorded, not flagged.
// ============================================================================

struct AuditExemption {
    NeighborPair pair;
    Line line;
    std::string reason;  // "hop-over" or "below-row"
};

struct AuditReport {
    int boxes_checked = 0;
    std::vector<AuditExemption> exemptions;
};

[[nodiscard]] inline AuditReport structural_audit(const Diagram& d, [[maybe_unused]] const Tableau& tableau,
                                                  const ExtendedTableau& ext, const LineSet& lines) {
    AuditReport report;
    auto fail = [](BoxCoord box, const std::string& clause, const std::string& what) {
        std::ostringstream msg;
        msg << "structural audit violation at box (" << box.row << "," << box.col << "), clause "
            << clause << ": " << what;
        ViolationError err(msg.str());
        err.box = box;
        err.clause = clause;
        throw err;
    };

    std::map<BoxCoord, std::vector<const Line*>> into, from;
    for (const Line& l : lines.lines) {
        into[l.right_box].push_back(&l);
        from[l.left_box].push_back(&l);
    }

    const auto pairs = neighboring_pairs(d);
    for (const NeighborPair& pair : pairs) {
        auto in_window = [&](BoxCoord b, bool include_right_col) {
            if (b.row > pair.height) return false;
            if (b.col < pair.left_col) return false;
            return include_right_col ? b.col <= pair.right_col : b.col < pair.right_col;
        };
        for (int col = pair.left_col; col <= pair.right_col; ++col) {
            for (int row = 1; row <= std::min(pair.height, d.height(col)); ++row) {
                const BoxCoord box{row, col};
                if (col > pair.left_col && col < pair.right_col) {
                    // Interior boxes: a unique One line from inside the window.
                    int count = 0;
                    for (const Line* l : into[box])
                        if (l->label == LineLabel::One) {
                            ++count;
                            if (!in_window(l->left_box, false))
                                fail(box, "interior-left-line", "left end outside the half-open window");
                        }
                    if (count != 1)
                        fail(box, "interior-left-line", "expected one incoming One line, found " +
                                                            std::to_string(count));
                }
                if (col < pair.right_col) {
                    // Every non-final box sends exactly one line onward.
                    const BoxCoord bottom{pair.height, pair.right_col};
                    int onward = 0;
                    for (const Line* l : from[box]) {
                        if (!in_window(l->right_box, true)) continue;
                        if (l->label == LineLabel::One || l->right_box == bottom) ++onward;
                    }
                    if (onward != 1)
                        fail(box, "onward-line",
                             "expected one outgoing line into the window, found " + std::to_string(onward));
                }
                ++report.boxes_checked;
            }
        }
        // The extra One line into the pair's bottom box, when present, starts
        // below the window or left of it; record which.
        const BoxCoord bottom{pair.height, pair.right_col};
        for (const Line* l : into[bottom]) {
            if (l->label != LineLabel::One) continue;
            if (l->left_box.row > pair.height)
                report.exemptions.push_back(AuditExemption{pair, *l, "below-row"});
            else if (l->left_box.col < pair.left_col)
                report.exemptions.push_back(AuditExemption{pair, *l, "hop-over"});
        }
    }

    // Per-column discipline: reconstruct the expected left-going lines of
    // column C from the boundary slice of column C-1.
    for (int col = 1; col <= d.columns(); ++col) {
        const int t_h = d.height(col);
        int s = 0;
        for (int j = 1; j < col; ++j) s = std::max(s, d.height(j));
        auto slice = [&](int row) -> Entry {
            if (col == 1 || row > s + 1) return 0;
            return ext.at(row, col - 1);
        };
        const bool has_ln = left_neighbor(d, col).has_value();
        for (int row = 1; row <= t_h; ++row) {
            const BoxCoord box{row, col};
            std::vector<const Line*> stars, ones;
            for (const Line* l : into[box])
                (l->label == LineLabel::Star ? stars : ones).push_back(l);
            if (row == t_h && has_ln) {
                const Entry r_t = slice(row);
                if (r_t == 0) fail(box, "column-bottom-star", "no entry crosses into the repeated height");
                if (stars.size() != 1 || stars.front()->left != r_t)
                    fail(box, "column-bottom-star", "bottom box must take its Star from the crossing entry");
                const Entry r_next = slice(row + 1);
                if (r_next != 0) {
                    if (ones.size() != 1 || ones.front()->left != r_next)
                        fail(box, "column-bottom-one",
                             "bottom box must take a One line from the entry crossing one row lower");
                } else if (!ones.empty()) {
                    fail(box, "column-bottom-one", "unexpected One line into the bottom box");
                }
            } else {
                if (!stars.empty()) fail(box, "column-no-star", "Star line into a non-repeating box");
                const Entry r_row = slice(row);
                if (r_row != 0) {
                    if (ones.size() != 1 || ones.front()->left != r_row)
                        fail(box, "column-one", "box must take its One line from the crossing entry");
                } else if (!ones.empty()) {
                    fail(box, "column-one", "One line into a box no entry crosses into");
                }
            }
        }
    }
    return report;
}

// ============================================================================
// Equivalence of the two routes: propagation and the staircase oracle agree
// on every prefix's composition map, and every entry's trajectory equals its
// profile footprint.
// ============================================================================

struct EquivalenceResult {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

[[nodiscard]] inline EquivalenceResult equivalence_check(const Composition& c) {
    for (int q = 1; q <= c.columns(); ++q) {
        Tableau t = build_tableau(c.prefix(q));
        auto via_propagation = composition_map(t);
        auto via_oracle = oracle_composition_map(t.diagram(), t);
        if (via_propagation != via_oracle) {
            EquivalenceResult r;
            r.ok = false;
            r.detail = "composition maps disagree on the prefix of length " + std::to_string(q);
            return r;
        }
    }
    Tableau t = build_tableau(c);
    auto ext = propagate(t, PrecedenceOrder(t));
    for (Entry e = 1; e <= t.n(); ++e) {
        if (profile_footprint(t.diagram(), t, e) != ext.trajectory(e).cells) {
            EquivalenceResult r;
            r.ok = false;
            r.detail = "footprint of entry " + std::to_string(e) + " disagrees with its trajectory";
            return r;
        }
    }
    return EquivalenceResult{};
}

// ============================================================================
// Rank certificate. Exact arithmetic over GF(prime): sample a point of e+V,
// compute the rank of the adjoint-action map from the derived parabolic into
// the nilradical, and compare the defect with the neighbouring-pair count.
// ============================================================================

struct RankCertificate {
    std::vector<int> composition;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    int dim_m = 0;
    int expected_defect = 0;
    std::vector<int> ranks;
    std::vector<int> defects;
    bool passed = false;
    friend bool operator==(const RankCertificate&, const RankCertificate&) = default;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    while (exp) {
        if (exp & 1) out = mulmod(out, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return out;
}

// Rank over GF(p) by Gaussian elimination; rows are modified in place.
inline int rank_mod_p(std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    const size_t cols = rows.front().size();
    int rank = 0;
    size_t pivot_col = 0;
    for (size_t r = 0; r < rows.size() && pivot_col < cols; ++pivot_col) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][pivot_col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const std::uint64_t inv = powmod(rows[r][pivot_col], p - 2, p);
        for (size_t rr = r + 1; rr < rows.size(); ++rr) {
            if (rows[rr][pivot_col] == 0) continue;
            const std::uint64_t factor = mulmod(rows[rr][pivot_col], inv, p);
            for (size_t cc = pivot_col; cc < cols; ++cc) {
                const std::uint64_t sub = mulmod(factor, rows[r][cc], p);
                rows[rr][cc] = (rows[rr][cc] + p - sub) % p;
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kDefaultSeed = 0x9E3779B97F4A7C15ull;

[[nodiscard]] inline RankCertificate rank_check(const Composition& c, const WeierstrassSection& section,
                                                int trials, std::uint64_t prime = kDefaultPrime,
                                                std::uint64_t seed = kDefaultSeed) {
    const int n = c.n();
    if (trials < 1) throw std::invalid_argument("rank_check: trials must be positive");
    if (prime <= static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n))
        throw std::invalid_argument("rank_check: prime must exceed n^2");

    RankCertificate cert;
    cert.composition = c.parts();
    cert.prime = prime;
    cert.seed = seed;
    cert.trials = trials;
    cert.expected_defect = static_cast<int>(neighboring_pairs(Diagram(c)).size());

    std::vector<int> block(static_cast<size_t>(n) + 1, 0);
    for (int a = 1; a <= n; ++a) block[static_cast<size_t>(a)] = block_index(c, a);

    // Nilradical coordinates: strictly upper-block cells, row-major.
    std::vector<std::pair<int, int>> m_cells;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (block[static_cast<size_t>(a)] < block[static_cast<size_t>(b)]) m_cells.emplace_back(a, b);
    cert.dim_m = static_cast<int>(m_cells.size());
    std::map<std::pair<int, int>, int> m_index;
    for (size_t i = 0; i < m_cells.size(); ++i) m_index[m_cells[i]] = static_cast<int>(i);

    // Basis of the derived parabolic: the nilradical, the off-diagonal cells
    // inside each block, and consecutive trace-zero diagonal differences.
    struct BasisElem {
        int a, b;       // E_ab when diff is false
        bool diff;      // E_aa - E_{a+1,a+1} when true
    };
    std::vector<BasisElem> basis;
    for (auto [a, b] : m_cells) basis.push_back(BasisElem{a, b, false});
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b && block[static_cast<size_t>(a)] == block[static_cast<size_t>(b)])
                basis.push_back(BasisElem{a, b, false});
    for (int a = 1; a < n; ++a)
        if (block[static_cast<size_t>(a)] == block[static_cast<size_t>(a) + 1])
            basis.push_back(BasisElem{a, a + 1, true});

    cert.passed = true;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 gen(seed + static_cast<std::uint64_t>(trial));
        // x = e + random star coordinates, as a sparse list of cells.
        std::map<std::pair<int, int>, std::uint64_t> x;
        for (auto [i, j] : section.e_coords) x[{i, j}] = 1;
        for (auto [j, k] : section.v_coords) x[{j, k}] = gen() % prime;

        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(basis.size());
        for (const BasisElem& e : basis) {
            std::vector<std::uint64_t> row(m_cells.size(), 0);
            auto add = [&](int i, int j, std::uint64_t v) {
                if (v == 0) return;
                auto it = m_index.find({i, j});
                if (it == m_index.end()) return;  // bracket component outside the nilradical is zero here
                row[static_cast<size_t>(it->second)] = (row[static_cast<size_t>(it->second)] + v) % prime;
            };
            if (!e.diff) {
                // [E_ab, x] = sum_j x_bj E_aj - sum_i x_ia E_ib
                for (const auto& [cell, v] : x) {
                    if (cell.first == e.b) add(e.a, cell.second, v);
                    if (cell.second == e.a) add(cell.first, e.b, (prime - v) % prime);
                }
            } else {
                // [E_aa - E_{a+1,a+1}, x] acts diagonally on each cell.
                for (const auto& [cell, v] : x) {
                    std::int64_t coeff = 0;
                    if (cell.first == e.a) ++coeff;
                    if (cell.first == e.a + 1) --coeff;
                    if (cell.second == e.a) --coeff;
                    if (cell.second == e.a + 1) ++coeff;
                    if (coeff == 0) continue;
                    std::uint64_t scaled = coeff > 0 ? v : (prime - v) % prime;
                    add(cell.first, cell.second, scaled);
                }
            }
            rows.push_back(std::move(row));
        }
        const int rank = detail::rank_mod_p(rows, prime);
        const int defect = cert.dim_m - rank;
        cert.ranks.push_back(rank);
        cert.defects.push_back(defect);
        if (defect != cert.expected_defect) cert.passed = false;
    }
    return cert;
}

// Per-entry degree discipline of a line set.
[[nodiscard]] inline bool degree_check(const LineSet& lines, const ExtendedTableau& ext, const Tableau& t) {
    std::map<Entry, int> right_one, left_one, left_star;
    for (const Line& l : lines.lines) {
        if (l.label == LineLabel::One) {
            ++right_one[l.left];
            ++left_one[l.right];
        } else {
            ++left_star[l.right];
        }
    }
    for (Entry e = 1; e <= t.n(); ++e) {
        if (right_one[e] > 1 || left_one[e] > 1 || left_star[e] > 1) return false;
        const bool exits = ext.trajectory(e).stop.kind == StopKind::EndOfDiagram;
        if (right_one[e] != (exits ? 0 : 1)) return false;
    }
    return true;
}

// ============================================================================
// One-call verification bundle over a single composition.
// ============================================================================

struct VerifyOptions {
    bool run_rank = true;
    int trials = 3;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;
};

struct VerificationSummary {
    bool semistandard = false;
    bool mirror_classical = false;
    bool degrees = false;
    int star_count = 0;
    int pair_count = 0;
    bool covers = false;
    bool audit = false;
    bool equivalence = false;
    std::string detail;  // first failure, empty when clean
    std::optional<RankCertificate> rank;

    [[nodiscard]] bool passed() const {
        const bool rank_ok = !rank.has_value() || rank->passed;
        return semistandard && mirror_classical && degrees && star_count == pair_count && covers &&
               audit && equivalence && rank_ok;
    }
    friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

struct VerifyResult {
    Composition composition;
    Tableau tableau;
    PrecedenceOrder order;
    ExtendedTableau ext;
    LineSet lines;
    WeierstrassSection section;
    std::vector<ChainCover> chain_covers;
    AuditReport audit;
    VerificationSummary summary;
};

[[nodiscard]] inline VerifyResult run_verification(const Composition& c, const VerifyOptions& opts = {}) {
    Tableau t = build_tableau(c);
    PrecedenceOrder order(t);
    ExtendedTableau ext = propagate(t, order);
    LineSet lines = extract_lines(ext, t);
    VerifyResult result{c, t, order, ext, lines, build_section(lines, t.n()), {}, {}, {}};
    VerificationSummary& s = result.summary;

    auto note = [&](const std::string& what) {
        if (s.detail.empty()) s.detail = what;
    };
    s.semistandard = is_semistandard(ext, order);
    if (!s.semistandard) note("extended tableau is not semistandard");
    s.mirror_classical = classical_semistandard(mirror_semistandard(ext, order));
    if (!s.mirror_classical) note("mirrored extended tableau is not classically semistandard");
    s.degrees = degree_check(lines, ext, t);
    if (!s.degrees) note("per-entry line degrees violated");
    s.star_count = static_cast<int>(lines.star_lines().size());
    s.pair_count = static_cast<int>(neighboring_pairs(t.diagram()).size());
    if (s.star_count != s.pair_count) note("Star line count differs from neighbouring pair count");
    try {
        result.chain_covers = chain_cover_check(t.diagram(), t, lines);
        s.covers = true;
    } catch (const ViolationError& e) {
        note(e.what());
    }
    try {
        result.audit = structural_audit(t.diagram(), t, ext, lines);
        s.audit = true;
    } catch (const ViolationError& e) {
        note(e.what());
    }
    EquivalenceResult eq = equivalence_check(c);
    s.equivalence = eq.ok;
    if (!eq.ok) note(eq.detail);
    if (opts.run_rank) {
        s.rank = rank_check(c, result.section, opts.trials, opts.prime, opts.seed);
        if (!s.rank->passed) note("rank defect differs from pair count: investigate the sample");
    }
    return result;
}

}  // namespace ctab
