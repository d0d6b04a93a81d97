#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../arrangement.hpp"
#include "../corollaries.hpp"
#include "../dimension_search.hpp"
#include "../witness.hpp"
#include "input.hpp"

namespace hyperdim::io {

using ordered_json = nlohmann::ordered_json;

struct AnalyzeOptions {
    bool witness = true;
    bool brute_force = false;
    std::optional<std::size_t> max_parts_limit;
    std::size_t workers = 1;
    // Wall-clock timing makes reports differ between runs, so it is opt-in.
    bool timing = false;
};

struct Report {
    ArrangementProfile profile;
    std::vector<LinearForm> forms;
    std::vector<std::vector<std::size_t>> sources;
    DimensionReport dims;
    std::optional<WitnessSubspace> witness;
    Verdict verdict;
    std::vector<std::string> discrepancies;
    std::vector<std::string> warnings;
    std::optional<double> elapsed_ms;
};

enum ExitStatus : int { kOk = 0, kInputError = 1, kInternalError = 2, kDiscrepancy = 3 };

inline int exit_status(const Report& report) {
    if (report.dims.bound_violation) return kInternalError;
    if (!report.discrepancies.empty()) return kDiscrepancy;
    return kOk;
}

/// load -> profile -> achievable dimensions -> witness -> verdict cross-check.
inline Report analyze(const InputDocument& doc, const AnalyzeOptions& options = {}) {
    const auto start = std::chrono::steady_clock::now();
    const Arrangement a = Arrangement::load(doc.n, doc.forms);

    Report rep{profile(a), a.forms(), a.sources(), {}, std::nullopt, {}, {}, {}, std::nullopt};
    for (std::size_t i = 0; i < a.sources().size(); ++i) {
        const auto& src = a.sources()[i];
        if (src.size() < 2) continue;
        std::string list;
        for (std::size_t k = 0; k < src.size(); ++k) list += (k ? ", " : "") + std::to_string(src[k]);
        rep.warnings.push_back("input forms " + list + " define the same hyperplane; kept once as form " +
                               std::to_string(i));
    }

    SearchOptions search{options.workers, options.max_parts_limit};
    rep.dims = achievable_dimensions(a, search, options.brute_force);
    if (options.max_parts_limit && !options.brute_force)
        rep.warnings.push_back("partition search capped at " + std::to_string(*options.max_parts_limit) +
                               " blocks; d_max may be underestimated");
    if (rep.dims.bound_violation)
        rep.warnings.push_back("internal: the partition search exceeded dimension n; d_max capped");

    if (options.witness) {
        if (rep.dims.best_partition)
            rep.witness = witness_subspace(a, build_u_chain(a, *rep.dims.best_partition));
        else
            rep.witness = build_witness_for_mplus1(a);
    }

    rep.verdict = verdict(a);
    if (!rep.verdict.finiteness)
        rep.warnings.push_back("finiteness verdict skipped: more than " +
                               std::to_string(kBipartitionScanLimit) + " forms");
    rep.discrepancies = cross_check(a, rep.dims);

    if (options.timing)
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                             .count();
    return rep;
}

inline ordered_json report_to_json(const Report& rep) {
    auto rows = [](const auto& vectors) {
        ordered_json out = ordered_json::array();
        for (const auto& v : vectors) {
            ordered_json row = ordered_json::array();
            for (const auto& x : v) row.push_back(rational_to_json<ordered_json>(x));
            out.push_back(std::move(row));
        }
        return out;
    };
    auto optional_value = [](const auto& opt) -> ordered_json {
        if (opt) return *opt;
        return nullptr;
    };

    ordered_json out;
    out["profile"] = {{"n", rep.profile.n},
                      {"r", rep.profile.r},
                      {"m", rep.profile.m},
                      {"s", rep.profile.s},
                      {"general_position", rep.profile.general_position}};
    std::vector<Vector> forms;
    for (const auto& f : rep.forms) forms.push_back(f.coeffs());
    out["forms"] = rows(forms);
    out["sources"] = rep.sources;
    out["d_max"] = rep.dims.d_max;
    out["achievable"] = rep.dims.achievable;
    out["parts_max"] = optional_value(rep.dims.parts_max);
    out["witness_partition"] = rep.dims.best_partition ? ordered_json(rep.dims.best_partition->blocks())
                                                       : ordered_json(nullptr);
    out["partitions_checked"] = rep.dims.partitions_checked;

    if (rep.witness) {
        std::vector<Vector> basis;
        for (const auto& p : rep.witness->points.basis()) basis.push_back(primitive_integer(p));
        out["witness"] = {{"dim", rep.witness->dim},
                          {"point_basis", rows(basis)},
                          {"restriction_classes", rep.witness->verification.classes},
                          {"verified", rep.witness->verification.ok()}};
    } else {
        out["witness"] = nullptr;
    }
    out["verdicts"] = {{"finiteness", optional_value(rep.verdict.finiteness)},
                       {"gp_bound", optional_value(rep.verdict.gp_bound)},
                       {"gp_bound_achieved", optional_value(rep.verdict.gp_bound_achieved)}};
    out["cross_check"] = rep.discrepancies;
    out["warnings"] = rep.warnings;
    if (rep.elapsed_ms) out["timing_ms"] = *rep.elapsed_ms;
    return out;
}

inline std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    auto row = [](const Vector& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return s + ")";
    };
    const auto& p = rep.profile;
    os << "arrangement   n = " << p.n << ", r = " << p.r << ", m = " << p.m << ", s = " << p.s
       << ", general position: " << (p.general_position ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < rep.forms.size(); ++i)
        os << "  form " << i << "  " << row(rep.forms[i].coeffs()) << "\n";
    os << "d_max         " << rep.dims.d_max << "\n";
    os << "achievable    {";
    for (std::size_t i = 0; i < rep.dims.achievable.size(); ++i)
        os << (i ? ", " : "") << rep.dims.achievable[i];
    os << "}\n";
    if (rep.dims.best_partition) {
        os << "partition     " << *rep.dims.parts_max << " blocks:";
        for (const auto& b : rep.dims.best_partition->blocks()) {
            os << " {";
            for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
            os << "}";
        }
        os << "\n";
    } else {
        os << "partition     none (baseline dimension m + 1)\n";
    }
    if (rep.witness) {
        os << "witness       dim " << rep.witness->dim << ", "
           << (rep.witness->verification.ok() ? "verified" : "NOT verified") << ", "
           << rep.witness->verification.classes.size() << " restricted hyperplanes\n";
        for (const auto& b : rep.witness->points.basis()) os << "  point " << row(primitive_integer(b)) << "\n";
    }
    auto opt = [](const auto& o) {
        std::ostringstream s;
        if (o) s << *o; else s << "n/a";
        return s.str();
    };
    os << "verdicts      finite: "
       << (rep.verdict.finiteness ? (*rep.verdict.finiteness ? "yes" : "no") : "n/a")
       << ", gp bound: " << opt(rep.verdict.gp_bound) << ", bound attained: "
       << (rep.verdict.gp_bound_achieved ? (*rep.verdict.gp_bound_achieved ? "yes" : "no") : "n/a")
       << "\n";
    os << "cross-check   " << (rep.discrepancies.empty() ? "consistent" : "DISCREPANCIES") << "\n";
    for (const auto& d : rep.discrepancies) os << "  ! " << d << "\n";
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    if (rep.elapsed_ms) os << "time          " << *rep.elapsed_ms << " ms\n";
    return os.str();
}

/// Rebuilds the witness subspace stored in a JSON report.
inline PointSpace witness_points_from_report(const json& report, std::size_t width) {
    if (!report.contains("witness") || report.at("witness").is_null())
        throw InputError("report has no witness");
    const json& basis = report.at("witness").at("point_basis");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vector v;
        for (std::size_t j = 0; j < basis[i].size(); ++j)
            v.push_back(rational_from_json(basis[i][j], "witness.point_basis[" + std::to_string(i) +
                                                            "][" + std::to_string(j) + "]"));
        rows.push_back(std::move(v));
    }
    if (!rows.empty() && rows.front().size() != width)
        throw InputError("witness rows do not match the arrangement dimension");
    const PointSpace y = PointSpace::spanned_by(width, rows);
    if (y.rank() != rows.size()) throw InputError("witness point basis is linearly dependent");
    return y;
}

}  // namespace hyperdim::io
