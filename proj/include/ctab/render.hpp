#pragma once

#include <sstream>
#include <string>
#include <utility>

#include "ctab/lines.hpp"
#include "ctab/propagation.hpp"

namespace ctab {

enum class RenderStyle { Ascii, Svg, Tikz };
enum class FigureKind { T, TInf, Matrix };

struct RenderInput {
    const Composition& composition;
    const Tableau& tableau;
    const ExtendedTableau& ext;
    const LineSet& lines;
    const WeierstrassSection& section;
};

namespace detail {

inline int digits(int n) {
    int d = 1;
    while (n >= 10) {
        n /= 10;
        ++d;
    }
    return d;
}

inline std::string pad_left(int value, int width) {
    std::string s = std::to_string(value);
    if (std::cmp_less(s.size(), width)) s.insert(0, static_cast<size_t>(width) - s.size(), ' ');
    return s;
}

inline const char* label_text(LineLabel label) { return label == LineLabel::One ? "1" : "*"; }

// The vertical Star drop: from the bottom box of the entered column to the
// repeat cell directly below it.
inline BoxCoord star_drop_target(const Line& star) { return BoxCoord{star.right_box.row + 1, star.right_box.col}; }

// ---------------------------------------------------------------- ascii ----

inline std::string ascii_grid(const RenderInput& in, bool extended) {
    const Diagram& d = in.tableau.diagram();
    const int rows = extended ? in.ext.rows() : d.max_height();
    const int width = digits(in.tableau.n());
    std::ostringstream out;
    for (int row = 1; row <= rows; ++row) {
        std::string line;
        for (int col = 1; col <= d.columns(); ++col) {
            const Entry value = extended ? in.ext.at(row, col) : (d.contains(row, col) ? in.tableau.at(row, col) : 0);
            if (value == 0) {
                line += std::string(static_cast<size_t>(width) + 2, ' ');
            } else {
                line += ' ' + pad_left(value, width);
                line += (extended && in.ext.is_repeat(row, col)) ? '\'' : ' ';
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

inline std::string ascii_lines(const RenderInput& in, bool with_vs) {
    std::ostringstream out;
    for (const Line& l : in.lines.lines)
        out << "  " << l.left << " -" << label_text(l.label) << "- " << l.right << '\n';
    if (with_vs)
        for (const auto& [j, l] : in.section.evs_extras) out << "  " << j << " .1. " << l << '\n';
    return out.str();
}

inline std::string ascii_matrix(const RenderInput& in) {
    MatrixPattern pattern = matrix_pattern(in.section, in.composition, true);
    std::ostringstream out;
    for (int i = 1; i <= pattern.n; ++i) {
        std::string line;
        for (int j = 1; j <= pattern.n; ++j) {
            switch (pattern.at(i, j)) {
                case CellMark::Zero: line += ". "; break;
                case CellMark::One: line += "1 "; break;
                case CellMark::Star: line += "* "; break;
                case CellMark::OneVS: line += "V "; break;
            }
        }
        line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

// ------------------------------------------------------------------ svg ----

inline constexpr int kCell = 40;
inline constexpr int kMargin = 20;

inline std::pair<int, int> svg_center(const BoxCoord& b) {
    return {kMargin + (b.col - 1) * kCell + kCell / 2, kMargin + (b.row - 1) * kCell + kCell / 2};
}

inline void svg_open(std::ostringstream& out, int rows, int cols) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << 2 * kMargin + cols * kCell << "\" height=\"" << 2 * kMargin + rows * kCell << "\">\n"
        << "<style>\n"
        << ".box { fill: none; stroke: #333; }\n"
        << ".repeat { fill: none; stroke: #333; stroke-dasharray: 3 2; }\n"
        << ".cell { font: 16px monospace; text-anchor: middle; dominant-baseline: central; }\n"
        << ".one { fill: none; stroke: #000; }\n"
        << ".star { fill: none; stroke: #000; stroke-dasharray: 6 3; }\n"
        << ".vs { fill: none; stroke: #000; stroke-dasharray: 2 3; }\n"
        << ".label { font: 11px monospace; text-anchor: middle; }\n"
        << ".vsmark { fill: #888; }\n"
        << "</style>\n";
}

inline void svg_cell(std::ostringstream& out, const BoxCoord& b, Entry value, bool repeat) {
    const int x = kMargin + (b.col - 1) * kCell;
    const int y = kMargin + (b.row - 1) * kCell;
    out << "<rect class=\"" << (repeat ? "repeat" : "box") << "\" x=\"" << x << "\" y=\"" << y
        << "\" width=\"" << kCell << "\" height=\"" << kCell << "\"/>\n";
    auto [cx, cy] = svg_center(b);
    out << "<text class=\"cell\" x=\"" << cx << "\" y=\"" << cy << "\">" << value << "</text>\n";
}

inline void svg_line(std::ostringstream& out, const BoxCoord& from, const BoxCoord& to, const char* cls,
                     const char* label) {
    auto [x1, y1] = svg_center(from);
    auto [x2, y2] = svg_center(to);
    out << "<polyline class=\"" << cls << "\" points=\"" << x1 << "," << y1 << " " << x2 << "," << y2
        << "\"/>\n";
    out << "<text class=\"label\" x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2 - 4 << "\">" << label
        << "</text>\n";
}

inline std::string svg_figure(const RenderInput& in, FigureKind figure) {
    const Diagram& d = in.tableau.diagram();
    std::ostringstream out;
    if (figure == FigureKind::Matrix) {
        MatrixPattern pattern = matrix_pattern(in.section, in.composition, true);
        svg_open(out, pattern.n, pattern.n);
        for (int i = 1; i <= pattern.n; ++i)
            for (int j = 1; j <= pattern.n; ++j) {
                const CellMark mark = pattern.at(i, j);
                if (mark == CellMark::Zero) continue;
                auto [cx, cy] = svg_center(BoxCoord{i, j});
                const char* glyph = mark == CellMark::Star ? "*" : "1";
                out << "<text class=\"cell" << (mark == CellMark::OneVS ? " vsmark" : "") << "\" x=\"" << cx
                    << "\" y=\"" << cy << "\">" << glyph << "</text>\n";
            }
        out << "</svg>\n";
        return out.str();
    }
    const bool extended = figure == FigureKind::TInf;
    const int rows = extended ? in.ext.rows() : d.max_height();
    svg_open(out, rows, d.columns());
    for (int col = 1; col <= d.columns(); ++col)
        for (int row = 1; row <= rows; ++row) {
            const Entry value = extended ? in.ext.at(row, col) : (d.contains(row, col) ? in.tableau.at(row, col) : 0);
            if (value != 0) svg_cell(out, BoxCoord{row, col}, value, extended && in.ext.is_repeat(row, col));
        }
    for (const Line& l : in.lines.lines) {
        if (l.label == LineLabel::One)
            svg_line(out, l.left_box, l.right_box, "one", "1");
        else if (extended)
            svg_line(out, l.right_box, detail::star_drop_target(l), "star", "*");
        else
            svg_line(out, l.left_box, l.right_box, "star", "*");
    }
    if (extended)
        for (const auto& [j, l] : in.section.evs_extras)
            svg_line(out, in.tableau.box_of(j), in.tableau.box_of(l), "vs", "1");
    out << "</svg>\n";
    return out.str();
}

// ----------------------------------------------------------------- tikz ----

inline std::string tikz_node(const char* prefix, const BoxCoord& b) {
    std::ostringstream s;
    s << '(' << prefix << b.row << 'x' << b.col << ')';
    return s.str();
}

inline std::string tikz_figure(const RenderInput& in, FigureKind figure) {
    std::ostringstream out;
    if (figure == FigureKind::Matrix) {
        MatrixPattern pattern = matrix_pattern(in.section, in.composition, true);
        out << "\\begin{tikzpicture}[x=0.5cm,y=-0.5cm]\n";
        for (int i = 1; i <= pattern.n; ++i)
            for (int j = 1; j <= pattern.n; ++j) {
                const CellMark mark = pattern.at(i, j);
                if (mark == CellMark::Zero) continue;
                const char* glyph = mark == CellMark::Star ? "$\\ast$" : "$1$";
                out << "\\node" << (mark == CellMark::OneVS ? "[gray]" : "") << " at (" << j << ',' << i
                    << ") {" << glyph << "};\n";
            }
        out << "\\end{tikzpicture}\n";
        return out.str();
    }
    const Diagram& d = in.tableau.diagram();
    const bool extended = figure == FigureKind::TInf;
    const int rows = extended ? in.ext.rows() : d.max_height();
    const char* prefix = extended ? "e" : "t";
    out << "\\begin{tikzpicture}[x=1.1cm,y=-1.1cm,"
        << "box/.style={draw,minimum size=8mm,inner sep=0pt},"
        << "repeat/.style={draw,dashed,minimum size=8mm,inner sep=0pt},"
        << "lbl/.style={font=\\scriptsize,inner sep=1pt}]\n";
    for (int col = 1; col <= d.columns(); ++col)
        for (int row = 1; row <= rows; ++row) {
            const Entry value = extended ? in.ext.at(row, col) : (d.contains(row, col) ? in.tableau.at(row, col) : 0);
            if (value == 0) continue;
            const bool repeat = extended && in.ext.is_repeat(row, col);
            out << "\\node[" << (repeat ? "repeat" : "box") << "] " << tikz_node(prefix, BoxCoord{row, col})
                << " at (" << col << ',' << row << ") {" << value << "};\n";
        }
    for (const Line& l : in.lines.lines) {
        if (l.label == LineLabel::One) {
            out << "\\draw " << tikz_node(prefix, l.left_box) << ".north to[bend left=25] node[lbl,above] {$1$} "
                << tikz_node(prefix, l.right_box) << ".north;\n";
        } else if (extended) {
            out << "\\draw " << tikz_node(prefix, l.right_box) << " -- node[lbl,right] {$\\ast$} "
                << tikz_node(prefix, detail::star_drop_target(l)) << ";\n";
        } else {
            out << "\\draw " << tikz_node(prefix, l.left_box) << ".south to[bend right=25] node[lbl,below] {$\\ast$} "
                << tikz_node(prefix, l.right_box) << ".south;\n";
        }
    }
    if (extended)
        for (const auto& [j, l] : in.section.evs_extras)
            out << "\\draw[dotted] " << tikz_node(prefix, in.tableau.box_of(j))
                << ".north to[bend left=35] node[lbl,above] {$1$} " << tikz_node(prefix, in.tableau.box_of(l))
                << ".north;\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

}  // namespace detail

// Plain grids and line lists for the text commands.
[[nodiscard]] inline std::string ascii_tableau_grid(const RenderInput& in) { return detail::ascii_grid(in, false); }
[[nodiscard]] inline std::string ascii_extended_grid(const RenderInput& in) { return detail::ascii_grid(in, true); }
[[nodiscard]] inline std::string ascii_line_list(const RenderInput& in) { return detail::ascii_lines(in, false); }

[[nodiscard]] inline std::string render_figure(const RenderInput& in, RenderStyle style, FigureKind figure) {
    switch (style) {
        case RenderStyle::Ascii: {
            if (figure == FigureKind::Matrix) return detail::ascii_matrix(in);
            const bool extended = figure == FigureKind::TInf;
            std::string out = detail::ascii_grid(in, extended);
            out += "lines\n";
            out += detail::ascii_lines(in, extended);
            return out;
        }
        case RenderStyle::Svg:
            return detail::svg_figure(in, figure);
        case RenderStyle::Tikz:
            return detail::tikz_figure(in, figure);
    }
    throw std::logic_error("render_figure: unknown style");
}

}  // namespace ctab
