#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctab/verify.hpp"

namespace ctab {

using ordered_json = nlohmann::ordered_json;

// ============================================================================
// Report: the full artifact bundle for one composition, with a stable field
// order so identical input yields byte-identical JSON. Timing is attached
// only on request, keeping default output reproducible.
// ============================================================================

struct Report {
    std::vector<int> composition;
    int n = 0;
    std::vector<std::vector<Entry>> tableau;  // max_height rows, 0 outside the diagram
    Grid extended;
    std::vector<RepeatCell> repeats;
    std::vector<Line> lines;
    WeierstrassSection section;
    std::optional<VerificationSummary> verification;
    std::optional<double> timing_ms;
    friend bool operator==(const Report&, const Report&) = default;
};

[[nodiscard]] inline Report make_report(const Composition& c, const Tableau& t, const ExtendedTableau& ext,
                                        const LineSet& lines, const WeierstrassSection& section) {
    Report r;
    r.composition = c.parts();
    r.n = t.n();
    const Diagram& d = t.diagram();
    r.tableau.assign(static_cast<size_t>(d.max_height()), std::vector<Entry>(static_cast<size_t>(d.columns()), 0));
    for (int col = 1; col <= d.columns(); ++col)
        for (int row = 1; row <= d.height(col); ++row)
            r.tableau[static_cast<size_t>(row) - 1][static_cast<size_t>(col) - 1] = t.at(row, col);
    r.extended = ext.grid();
    r.repeats = ext.repeats();
    r.lines = lines.lines;
    r.section = section;
    return r;
}

[[nodiscard]] inline Report make_report(const VerifyResult& result) {
    Report r = make_report(result.composition, result.tableau, result.ext, result.lines, result.section);
    r.verification = result.summary;
    return r;
}

namespace detail {

inline ordered_json box_json(const BoxCoord& b) { return ordered_json::array({b.row, b.col}); }

inline BoxCoord box_from(const ordered_json& j) { return BoxCoord{j.at(0).get<int>(), j.at(1).get<int>()}; }

inline ordered_json pairs_json(const std::vector<std::pair<Entry, Entry>>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const auto& [a, b] : pairs) arr.push_back(ordered_json::array({a, b}));
    return arr;
}

inline std::vector<std::pair<Entry, Entry>> pairs_from(const ordered_json& j) {
    std::vector<std::pair<Entry, Entry>> out;
    for (const auto& item : j) out.emplace_back(item.at(0).get<Entry>(), item.at(1).get<Entry>());
    return out;
}

inline ordered_json rank_json(const RankCertificate& cert) {
    ordered_json j;
    j["composition"] = cert.composition;
    j["prime"] = cert.prime;
    j["seed"] = cert.seed;
    j["trials"] = cert.trials;
    j["dim_m"] = cert.dim_m;
    j["expected_defect"] = cert.expected_defect;
    j["ranks"] = cert.ranks;
    j["defects"] = cert.defects;
    j["passed"] = cert.passed;
    return j;
}

inline RankCertificate rank_from(const ordered_json& j) {
    RankCertificate cert;
    cert.composition = j.at("composition").get<std::vector<int>>();
    cert.prime = j.at("prime").get<std::uint64_t>();
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.trials = j.at("trials").get<int>();
    cert.dim_m = j.at("dim_m").get<int>();
    cert.expected_defect = j.at("expected_defect").get<int>();
    cert.ranks = j.at("ranks").get<std::vector<int>>();
    cert.defects = j.at("defects").get<std::vector<int>>();
    cert.passed = j.at("passed").get<bool>();
    return cert;
}

}  // namespace detail

[[nodiscard]] inline ordered_json to_json(const Report& r) {
    ordered_json j;
    j["schema"] = 1;
    j["composition"] = r.composition;
    j["n"] = r.n;
    j["tableau"] = r.tableau;
    {
        ordered_json e;
        e["rows"] = r.extended.rows;
        e["cols"] = r.extended.cols;
        ordered_json grid = ordered_json::array();
        for (int row = 1; row <= r.extended.rows; ++row) {
            ordered_json line = ordered_json::array();
            for (int col = 1; col <= r.extended.cols; ++col) line.push_back(r.extended.at(row, col));
            grid.push_back(std::move(line));
        }
        e["grid"] = std::move(grid);
        j["extended"] = std::move(e);
    }
    {
        ordered_json arr = ordered_json::array();
        for (const RepeatCell& rep : r.repeats) {
            ordered_json item;
            item["entry"] = rep.entry;
            item["row"] = rep.row;
            item["col"] = rep.col;
            arr.push_back(std::move(item));
        }
        j["repeats"] = std::move(arr);
    }
    {
        ordered_json arr = ordered_json::array();
        for (const Line& l : r.lines) {
            ordered_json item;
            item["left"] = l.left;
            item["right"] = l.right;
            item["label"] = l.label == LineLabel::One ? "1" : "*";
            item["left_box"] = detail::box_json(l.left_box);
            item["right_box"] = detail::box_json(l.right_box);
            arr.push_back(std::move(item));
        }
        j["lines"] = std::move(arr);
    }
    {
        ordered_json s;
        s["e"] = detail::pairs_json(r.section.e_coords);
        s["v"] = detail::pairs_json(r.section.v_coords);
        ordered_json quads = ordered_json::array();
        for (const Quadruplet& q : r.section.quadruplets)
            quads.push_back(ordered_json::array({q.i, q.j, q.k, q.l}));
        s["quadruplets"] = std::move(quads);
        s["evs_extras"] = detail::pairs_json(r.section.evs_extras);
        j["section"] = std::move(s);
    }
    if (r.verification) {
        const VerificationSummary& v = *r.verification;
        ordered_json s;
        s["semistandard"] = v.semistandard;
        s["mirror_classical"] = v.mirror_classical;
        s["degrees"] = v.degrees;
        s["star_count"] = v.star_count;
        s["pair_count"] = v.pair_count;
        s["covers"] = v.covers;
        s["audit"] = v.audit;
        s["equivalence"] = v.equivalence;
        s["detail"] = v.detail;
        s["rank"] = v.rank ? detail::rank_json(*v.rank) : ordered_json(nullptr);
        s["passed"] = v.passed();
        j["verification"] = std::move(s);
    } else {
        j["verification"] = nullptr;
    }
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
    return j;
}

[[nodiscard]] inline Report report_from_json(const ordered_json& j) {
    if (j.at("schema").get<int>() != 1) throw std::invalid_argument("report: unknown schema version");
    Report r;
    r.composition = j.at("composition").get<std::vector<int>>();
    r.n = j.at("n").get<int>();
    r.tableau = j.at("tableau").get<std::vector<std::vector<Entry>>>();
    {
        const auto& e = j.at("extended");
        r.extended = Grid(e.at("rows").get<int>(), e.at("cols").get<int>());
        const auto& grid = e.at("grid");
        for (int row = 1; row <= r.extended.rows; ++row)
            for (int col = 1; col <= r.extended.cols; ++col)
                r.extended.set(row, col, grid.at(static_cast<size_t>(row) - 1).at(static_cast<size_t>(col) - 1).get<Entry>());
    }
    for (const auto& item : j.at("repeats"))
        r.repeats.push_back(RepeatCell{item.at("entry").get<Entry>(), item.at("row").get<int>(),
                                       item.at("col").get<int>()});
    for (const auto& item : j.at("lines")) {
        Line l;
        l.left = item.at("left").get<Entry>();
        l.right = item.at("right").get<Entry>();
        l.label = item.at("label").get<std::string>() == "*" ? LineLabel::Star : LineLabel::One;
        l.left_box = detail::box_from(item.at("left_box"));
        l.right_box = detail::box_from(item.at("right_box"));
        r.lines.push_back(l);
    }
    {
        const auto& s = j.at("section");
        r.section.n = r.n;
        r.section.e_coords = detail::pairs_from(s.at("e"));
        r.section.v_coords = detail::pairs_from(s.at("v"));
        for (const auto& q : s.at("quadruplets"))
            r.section.quadruplets.push_back(Quadruplet{q.at(0).get<Entry>(), q.at(1).get<Entry>(),
                                                       q.at(2).get<Entry>(), q.at(3).get<Entry>()});
        r.section.evs_extras = detail::pairs_from(s.at("evs_extras"));
    }
    if (!j.at("verification").is_null()) {
        const auto& s = j.at("verification");
        VerificationSummary v;
        v.semistandard = s.at("semistandard").get<bool>();
        v.mirror_classical = s.at("mirror_classical").get<bool>();
        v.degrees = s.at("degrees").get<bool>();
        v.star_count = s.at("star_count").get<int>();
        v.pair_count = s.at("pair_count").get<int>();
        v.covers = s.at("covers").get<bool>();
        v.audit = s.at("audit").get<bool>();
        v.equivalence = s.at("equivalence").get<bool>();
        v.detail = s.at("detail").get<std::string>();
        if (!s.at("rank").is_null()) v.rank = detail::rank_from(s.at("rank"));
        r.verification = std::move(v);
    }
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
    return r;
}

[[nodiscard]] inline std::string dump_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace ctab
