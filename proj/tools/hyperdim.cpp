// Command-line front end: analyze an arrangement, generate test
// arrangements, re-verify a witness from a saved report.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>

#include "hyperdim/hyperdim.hpp"
#include "hyperdim/io/generate.hpp"
#include "hyperdim/io/input.hpp"
#include "hyperdim/io/report.hpp"

namespace {

using namespace hyperdim;

std::string slurp(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t worker_count() {
    std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYPERDIM_WORKERS")) {
        const std::string_view text(env);
        std::size_t v = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || end != text.data() + text.size() || v == 0)
            throw InputError("HYPERDIM_WORKERS must be a positive integer");
        workers = v;
    }
    return workers;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Possible dimensions of integral points and holomorphic curves on the complement "
                 "of a hyperplane arrangement"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "Classify an arrangement and emit a witness");
    std::string input_path = "-";
    io::AnalyzeOptions opts;
    bool no_witness = false;
    bool as_text = false;
    bool as_json = false;
    std::size_t max_parts = 0;
    analyze_cmd->add_option("input", input_path, "Input document (default: standard input)");
    analyze_cmd->add_flag("--no-witness", no_witness, "Skip witness construction");
    analyze_cmd->add_flag("--brute-force", opts.brute_force,
                          "Use exhaustive partition enumeration (at most 9 forms)");
    analyze_cmd->add_option("--max-parts-limit", max_parts, "Cap on the number of blocks explored")
        ->check(CLI::PositiveNumber);
    auto* json_flag = analyze_cmd->add_flag("--json", as_json, "JSON report (default)");
    analyze_cmd->add_flag("--text", as_text, "Human-readable report")->excludes(json_flag);
    analyze_cmd->add_flag("--timing", opts.timing, "Include wall-clock timing");

    auto* generate_cmd = app.add_subcommand("generate", "Emit a test arrangement document");
    std::string kind = "general_position";
    io::GenerateRequest req;
    int rank = 0;
    generate_cmd->add_option("--kind", kind, "general_position | random | pencil");
    generate_cmd->add_option("-n", req.n, "Projective dimension")->required();
    generate_cmd->add_option("-r", req.r, "Number of hyperplanes")->required();
    generate_cmd->add_option("--seed", req.seed, "Seed for the random kind");
    generate_cmd->add_option("--points", req.points, "Moment-curve parameters (general_position)")
        ->delimiter(',');
    generate_cmd->add_option("--rank", rank, "Rank of the pencil (default n)");
    generate_cmd->add_option("--bound", req.coeff_bound, "Coefficient bound for the random kind");

    auto* verify_cmd = app.add_subcommand("verify", "Re-verify the witness stored in a JSON report");
    std::string verify_input;
    std::string verify_report;
    verify_cmd->add_option("input", verify_input, "Input document")->required();
    verify_cmd->add_option("report", verify_report, "Report produced by analyze --json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : io::kInputError;
    }

    try {
        if (analyze_cmd->parsed()) {
            opts.witness = !no_witness;
            if (max_parts > 0) opts.max_parts_limit = max_parts;
            opts.workers = worker_count();
            const io::Report rep = io::analyze(io::parse_input(slurp(input_path)), opts);
            if (as_text)
                std::cout << io::report_to_text(rep);
            else
                std::cout << io::report_to_json(rep).dump(2) << "\n";
            return io::exit_status(rep);
        }
        if (generate_cmd->parsed()) {
            req.kind = io::parse_kind(kind);
            if (rank > 0) req.pencil_rank = rank;
            std::cout << io::to_json(io::generate(req)).dump() << "\n";
            return io::kOk;
        }
        if (verify_cmd->parsed()) {
            const auto doc = io::parse_input(slurp(verify_input));
            const Arrangement a = Arrangement::load(doc.n, doc.forms);
            io::json report;
            try {
                report = io::json::parse(slurp(verify_report));
            } catch (const io::json::parse_error& e) {
                throw InputError(std::string("malformed report: ") + e.what());
            }
            const PointSpace y = io::witness_points_from_report(report, a.width());
            const CondCheck check = verify_cond(a, y);
            const int claimed = report.at("witness").at("dim").get<int>();
            const bool dim_ok = claimed == static_cast<int>(y.rank()) - 1;
            std::cout << (check.ok() && dim_ok ? "verified" : "FAILED") << ": dim "
                      << static_cast<int>(y.rank()) - 1 << ", " << check.classes.size()
                      << " restricted hyperplanes";
            if (!check.diagnostic.empty()) std::cout << " (" << check.diagnostic << ")";
            if (!dim_ok) std::cout << " (report claims dim " << claimed << ")";
            std::cout << "\n";
            return check.ok() && dim_ok ? io::kOk : io::kDiscrepancy;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return io::kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io::kInputError;
    } catch (const DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return io::kInputError;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return io::kInternalError;
    } catch (const io::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return io::kInputError;
    }
    return io::kOk;
}
