#include "amkit/cli.hpp"

#include "amkit/amcore.hpp"
#include "amkit/design.hpp"
#include "amkit/error.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/report.hpp"
#include "amkit/search.hpp"

#include <CLI11.hpp>

#include <string>

namespace amkit {

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kInputError = 2;

nlohmann::json one_based(const std::vector<int>& s) {
    nlohmann::json a = nlohmann::json::array();
    for (int p : s) a.push_back(p + 1);
    return a;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"amkit: binary codes, support designs and strengthened Assmus-Mattson searches"};
    app.require_subcommand(1);
    bool serial = false;
    app.add_flag("--serial", serial, "use the serial reference kernels");

    auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline on a generator-matrix file");
    std::string code_path;
    std::size_t max_t = SIZE_MAX, cap = 28;
    analyze_cmd->add_option("path", code_path, "generator matrix (rows of 0/1)")->required();
    analyze_cmd->add_option("--max-t", max_t, "largest design strength to test");
    analyze_cmd->add_option("--cap", cap, "largest dimension to enumerate");

    auto* design_cmd = app.add_subcommand("design-check", "test whether a block design is a t-design");
    std::string design_path;
    std::size_t t = 0;
    design_cmd->add_option("path", design_path, "block design file")->required();
    design_cmd->add_option("--t", t, "strength to test")->required();

    auto* search_cmd = app.add_subcommand("search", "parameter search for extra designs");
    std::string case_str = "4,1", format = "csv", golden, errata;
    long max_n = 1000, complete_to = 1000;
    bool no_filter = false;
    search_cmd->add_option("--case", case_str, "4,1 or 6,3");
    search_cmd->add_option("--max-n", max_n, "largest length")->required();
    search_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    search_cmd->add_option("--golden", golden, "golden table to compare against");
    search_cmd->add_option("--errata", errata, "errata applied to the golden table");
    search_cmd->add_option("--complete-to", complete_to, "golden table is complete up to this length");
    search_cmd->add_flag("--no-filter", no_filter, "skip the integrality filters");

    auto* ident_cmd = app.add_subcommand("verify-identities", "check the two determinant factorizations");
    auto* golay_cmd = app.add_subcommand("golay-uniqueness", "rederive the Golay parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    const Exec exec = serial ? Exec::serial : Exec::parallel;

    try {
        if (*analyze_cmd) {
            AnalyzeOptions opt;
            opt.enumeration.cap = cap;
            opt.enumeration.exec = exec;
            opt.max_t = max_t;
            const auto rep = analyze(read_code_file(code_path), opt);
            out << to_json(rep).dump(2) << '\n';
            for (const auto& x : rep.extras)
                if (x.nonempty && !x.confirmed) return kCheckFailed;
            return kOk;
        }
        if (*design_cmd) {
            const auto d = read_design_file(design_path);
            const auto res = is_t_design_direct(d, t, exec);
            nlohmann::json j = {{"v", d.points()}, {"k", d.block_size()}, {"b", d.block_count()}, {"t", t},
                                {"is_design", res.is_design}};
            if (res.is_design) j["lambda"] = int_json(res.lambda);
            if (res.witness)
                j["witness"] = {{"a", one_based(res.witness->a)},
                                {"count_a", res.witness->count_a},
                                {"b", one_based(res.witness->b)},
                                {"count_b", res.witness->count_b}};
            out << j.dump(2) << '\n';
            return res.is_design ? kOk : kCheckFailed;
        }
        if (*search_cmd) {
            const Case c = parse_case(case_str);
            ScanOptions so;
            so.apply_filters = !no_filter;
            so.exec = exec;
            ScanStats stats;
            const auto recs = scan(c, max_n, so, &stats);
            if (format == "json")
                out << to_json(recs).dump(2) << '\n';
            else
                out << to_csv(recs);
            err << "candidates " << stats.candidates << ", removed by filters " << stats.killed << ", records "
                << recs.size() << '\n';
            if (golden.empty()) return kOk;
            auto rows = read_table_b(golden);
            if (!errata.empty()) {
                std::vector<ErratumCheck> checks;
                rows = apply_errata(std::move(rows), read_errata(errata), &checks);
                for (const auto& ch : checks)
                    err << "erratum (" << ch.e.n << "," << ch.e.d << "): " << ch.e.published << " -> "
                        << ch.e.corrected << " verified\n";
            }
            const auto cmp = compare_with_golden(recs, rows, max_n, complete_to);
            for (const auto& r : cmp.missing) err << "missing row n=" << r.n << " d=" << r.d << '\n';
            for (const auto& r : cmp.extra_complete) err << "unexpected row n=" << r.n << " d=" << r.d << '\n';
            for (const auto& r : cmp.extra_beyond)
                err << "extra row beyond complete range n=" << r.n << " d=" << r.d << '\n';
            err << (cmp.pass() ? "golden: match\n" : "golden: MISMATCH\n");
            return cmp.pass() ? kOk : kCheckFailed;
        }
        if (*ident_cmd) {
            const auto rep = verify_det_identities();
            out << to_json(rep).dump(2) << '\n';
            return rep.all_pass() ? kOk : kCheckFailed;
        }
        if (*golay_cmd) {
            const auto g = golay_uniqueness();
            out << to_json(g).dump(2) << '\n';
            const bool ok = g.survivors.size() == 1 && g.survivors[0].n == 24;
            return ok ? kOk : kCheckFailed;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace amkit
