#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ctab/render.hpp"
#include "ctab/report.hpp"
#include "ctab/sweep.hpp"

namespace {

using namespace ctab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CTAB_SEED")) {
        char* end = nullptr;
        const std::uint64_t value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return value;
        std::cerr << "ignoring malformed CTAB_SEED\n";
    }
    return kDefaultSeed;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

struct Artifacts {
    Composition composition;
    Tableau tableau;
    ExtendedTableau ext;
    LineSet lines;
    WeierstrassSection section;
};

Artifacts compute(const std::string& heights) {
    Composition c = Composition::parse(heights);
    Tableau t = build_tableau(c);
    ExtendedTableau ext = propagate(t, PrecedenceOrder(t));
    LineSet lines = extract_lines(ext, t);
    WeierstrassSection section = build_section(lines, t.n());
    return Artifacts{std::move(c), std::move(t), std::move(ext), std::move(lines), std::move(section)};
}

RenderInput render_input(const Artifacts& a) {
    return RenderInput{a.composition, a.tableau, a.ext, a.lines, a.section};
}

int cmd_tableau(const std::string& heights, bool json, const std::string& out) {
    const Artifacts a = compute(heights);
    if (json) {
        write_output(out, dump_report(make_report(a.composition, a.tableau, a.ext, a.lines, a.section)));
        return kExitOk;
    }
    std::string text = "T\n";
    text += ascii_tableau_grid(render_input(a));
    text += "\nT(inf)  ' marks a repeat\n";
    text += ascii_extended_grid(render_input(a));
    write_output(out, text);
    return kExitOk;
}

int cmd_lines(const std::string& heights, bool json, const std::string& out) {
    const Artifacts a = compute(heights);
    if (json) {
        write_output(out, dump_report(make_report(a.composition, a.tableau, a.ext, a.lines, a.section)));
        return kExitOk;
    }
    std::ostringstream text;
    text << "lines (" << a.lines.one_lines().size() << " ones, " << a.lines.star_lines().size()
         << " stars)\n";
    text << ascii_line_list(render_input(a));
    write_output(out, text.str());
    return kExitOk;
}

int cmd_section(const std::string& heights, bool json, const std::string& out) {
    const Artifacts a = compute(heights);
    if (json) {
        write_output(out, dump_report(make_report(a.composition, a.tableau, a.ext, a.lines, a.section)));
        return kExitOk;
    }
    std::ostringstream text;
    text << "e\n";
    for (const auto& [i, j] : a.section.e_coords) text << "  (" << i << ',' << j << ")\n";
    text << "V\n";
    for (const auto& [j, k] : a.section.v_coords) text << "  (" << j << ',' << k << ")\n";
    text << "quadruplets\n";
    for (const Quadruplet& q : a.section.quadruplets)
        text << "  (" << q.i << ',' << q.j << ',' << q.k << ',' << q.l << ")\n";
    text << "e_VS extras\n";
    for (const auto& [j, l] : a.section.evs_extras) text << "  (" << j << ',' << l << ")\n";
    write_output(out, text.str());
    return kExitOk;
}

// Diagnostic damage: drop one One line, then re-run the falsification checks.
int cmd_verify_dropped(const std::string& heights, const std::string& drop) {
    const Artifacts a = compute(heights);
    const auto comma = drop.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--drop-one expects left,right");
    const Entry left = std::stoi(drop.substr(0, comma));
    const Entry right = std::stoi(drop.substr(comma + 1));
    LineSet damaged;
    for (const Line& l : a.lines.lines)
        if (!(l.label == LineLabel::One && l.left == left && l.right == right)) damaged.lines.push_back(l);
    if (damaged.lines.size() == a.lines.lines.size())
        throw std::invalid_argument("--drop-one: no such One line");
    (void)chain_cover_check(a.tableau.diagram(), a.tableau, damaged);
    (void)structural_audit(a.tableau.diagram(), a.tableau, a.ext, damaged);
    std::cout << "deletion not detected\n";
    return kExitOk;
}

// Diagnostic damage: swap two extended-grid cells within a row, then retest.
int cmd_verify_swapped(const std::string& heights, const std::string& swap) {
    const Artifacts a = compute(heights);
    int row = 0, c1 = 0, c2 = 0;
    if (std::sscanf(swap.c_str(), "%d,%d,%d", &row, &c1, &c2) != 3)
        throw std::invalid_argument("--swap-row expects row,col1,col2");
    Grid grid = a.ext.grid();
    const Entry v1 = grid.at(row, c1), v2 = grid.at(row, c2);
    grid.set(row, c1, v2);
    grid.set(row, c2, v1);
    if (!is_semistandard(grid, PrecedenceOrder(a.tableau))) {
        std::cerr << "violation: swapped row entries are not semistandard\n";
        return kExitViolation;
    }
    std::cout << "swap not detected\n";
    return kExitOk;
}

int cmd_verify(const std::string& heights, const VerifyOptions& vopts, bool json, bool timing,
               const std::string& out) {
    const Composition c = Composition::parse(heights);
    const auto start = std::chrono::steady_clock::now();
    const VerifyResult result = run_verification(c, vopts);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (json) {
        Report report = make_report(result);
        if (timing) report.timing_ms = ms;
        write_output(out, dump_report(report));
    } else {
        const VerificationSummary& s = result.summary;
        std::ostringstream text;
        auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
        text << "semistandard        " << flag(s.semistandard) << '\n';
        text << "mirror classical    " << flag(s.mirror_classical) << '\n';
        text << "line degrees        " << flag(s.degrees) << '\n';
        text << "stars vs pairs      " << s.star_count << '/' << s.pair_count << ' '
             << flag(s.star_count == s.pair_count) << '\n';
        text << "chain covers        " << flag(s.covers) << '\n';
        text << "structural audit    " << flag(s.audit) << '\n';
        text << "route equivalence   " << flag(s.equivalence) << '\n';
        if (s.rank)
            text << "rank defect         " << flag(s.rank->passed) << " (dim m " << s.rank->dim_m
                 << ", expected defect " << s.rank->expected_defect << ", " << s.rank->trials
                 << " trials)\n";
        text << (s.passed() ? "PASS" : "FAIL") << '\n';
        if (timing) text << "time " << ms << " ms\n";
        write_output(out, text.str());
    }
    if (!result.summary.passed()) {
        std::cerr << "violation: " << result.summary.detail << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_render(const std::string& heights, RenderStyle style, FigureKind figure, const std::string& out) {
    const Artifacts a = compute(heights);
    write_output(out, render_figure(render_input(a), style, figure));
    return kExitOk;
}

int cmd_sweep(const SweepOptions& opts) {
    const SweepOutcome outcome = run_sweep(opts);
    for (const auto& [m, count] : outcome.per_n) std::cout << "n=" << m << "  " << count << " compositions\n";
    std::cout << "total " << outcome.compositions << " compositions, " << outcome.failures.size()
              << " violations\n";
    for (const SweepFailure& f : outcome.failures) {
        std::cout << "violation (";
        for (size_t i = 0; i < f.composition.size(); ++i)
            std::cout << (i ? "," : "") << f.composition[i];
        std::cout << "): " << f.detail << '\n';
    }
    std::cerr << "wall " << outcome.wall_ms << " ms\n";
    return outcome.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composition tableau toolkit: propagation, lines, sections, verification, figures"};
    app.require_subcommand(1);

    std::string heights, out;
    bool json = false, timing = false;

    auto add_common = [&](CLI::App* cmd, bool with_json) {
        cmd->add_option("composition", heights, "comma- or space-separated positive column heights")->required();
        if (with_json) cmd->add_flag("--json", json, "emit the JSON report");
        cmd->add_option("--out", out, "write output to a file instead of stdout");
    };

    CLI::App* tableau = app.add_subcommand("tableau", "print the tableau and its extension");
    add_common(tableau, true);
    CLI::App* lines = app.add_subcommand("lines", "print the extracted line set");
    add_common(lines, true);
    CLI::App* section = app.add_subcommand("section", "print the section coordinates");
    add_common(section, true);

    VerifyOptions vopts;
    vopts.seed = default_seed();
    bool no_rank = false;
    std::string drop_one, swap_row;
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    add_common(verify, true);
    verify->add_flag("--no-rank", no_rank, "skip the finite-field rank certificate");
    verify->add_option("--trials", vopts.trials, "rank certificate trials")->check(CLI::PositiveNumber);
    verify->add_option("--prime", vopts.prime, "rank certificate prime modulus");
    verify->add_option("--seed", vopts.seed, "random seed (default: CTAB_SEED or a fixed constant)");
    verify->add_flag("--timing", timing, "include wall time in the output");
    verify->add_option("--drop-one", drop_one, "diagnostic: drop the One line left,right and recheck");
    verify->add_option("--swap-row", swap_row, "diagnostic: swap extended cells row,col1,col2 and recheck");

    std::string style_name = "ascii", figure_name = "t";
    CLI::App* render = app.add_subcommand("render", "emit a figure");
    add_common(render, false);
    render->add_option("--style", style_name, "ascii | svg | tikz")
        ->check(CLI::IsMember({"ascii", "svg", "tikz"}));
    render->add_option("--figure", figure_name, "t | tinf | matrix")
        ->check(CLI::IsMember({"t", "tinf", "matrix"}));

    SweepOptions sopts;
    sopts.seed = default_seed();
    bool sweep_rank = false;
    CLI::App* sweep = app.add_subcommand("sweep", "verify every composition up to a size");
    sweep->add_option("--n", sopts.max_n, "maximum composition size")->required()->check(CLI::Range(1, 14));
    sweep->add_option("--jobs", sopts.jobs, "worker count (0 = hardware)")->check(CLI::NonNegativeNumber);
    sweep->add_flag("--rank", sweep_rank, "also run rank certificates per composition");
    sweep->add_option("--trials", sopts.trials, "rank certificate trials")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sopts.seed, "random seed (default: CTAB_SEED or a fixed constant)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (app.got_subcommand(tableau)) return cmd_tableau(heights, json, out);
        if (app.got_subcommand(lines)) return cmd_lines(heights, json, out);
        if (app.got_subcommand(section)) return cmd_section(heights, json, out);
        if (app.got_subcommand(verify)) {
            if (!drop_one.empty()) return cmd_verify_dropped(heights, drop_one);
            if (!swap_row.empty()) return cmd_verify_swapped(heights, swap_row);
            vopts.run_rank = !no_rank;
            return cmd_verify(heights, vopts, json, timing, out);
        }
        if (app.got_subcommand(render)) {
            const RenderStyle style = style_name == "svg"    ? RenderStyle::Svg
                                      : style_name == "tikz" ? RenderStyle::Tikz
                                                             : RenderStyle::Ascii;
            const FigureKind figure = figure_name == "tinf"     ? FigureKind::TInf
                                      : figure_name == "matrix" ? FigureKind::Matrix
                                                                : FigureKind::T;
            return cmd_render(heights, style, figure, out);
        }
        if (app.got_subcommand(sweep)) {
            sopts.run_rank = sweep_rank;
            return cmd_sweep(sopts);
        }
    } catch (const ViolationError& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitOk;
}
