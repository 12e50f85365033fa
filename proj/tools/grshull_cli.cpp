#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "grshull/grs.hpp"
#include "grshull/hull.hpp"
#include "grshull/quantum.hpp"
#include "grshull/sweep.hpp"

using namespace grshull;

namespace {

std::pair<long long, long long> parse_k_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos || pos == 0 || pos + 2 >= text.size())
        throw std::invalid_argument("k range must look like a..b");
    long long lo = std::stoll(text.substr(0, pos));
    long long hi = std::stoll(text.substr(pos + 2));
    if (lo > hi) throw std::invalid_argument("k range must be increasing");
    return {lo, hi};
}

CodeParams family_by_name(const std::string& name) {
    if (name == "q11") return validate_params(11, 5, 3, 4, 3);
    if (name == "q29") return validate_params(29, 28, 5, 30, 2);
    if (name == "q83") return validate_params(83, 41, 6, 84, 2);
    throw std::invalid_argument("unknown family alias: " + name);
}

std::string record_text(const QuantumCodeRecord& r) {
    std::ostringstream os;
    os << "[[" << r.n << ',' << r.K << ',' << r.d << ';' << r.c << "]]_" << r.q;
    return os.str();
}

int cmd_params(const std::vector<long long>& a, const std::string& format) {
    CodeParams p = validate_params(a[0], a[1], a[2], a[3], a[4]);
    long long k = a[5];
    HullComputation h = compute_hull(p, k);
    QuantumCodeRecord r = make_record(p, k);
    const FirstPoint& t = h.t_points.first1;
    const FirstPoint& pf = h.p_points.first1;
    if (format == "json") {
        Json j = record_to_json(r);
        j["k"] = k;
        j["lambda"] = p.lambda;
        j["tau"] = p.tau;
        j["rho"] = p.rho;
        j["sigma"] = p.sigma;
        j["L"] = p.L;
        j["pi"] = p.pi;
        j["t_first"] = {t.d1, t.d2};
        j["p_first"] = {pf.d1, pf.d2};
        j["count_t"] = h.count_t;
        j["count_p"] = h.count_p;
        j["failure_pairs"] = h.failure_count;
        std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
        TableRow row{k, r, h};
        std::cout << rows_to_csv({row});
    } else {
        std::cout << record_text(r) << '\n'
                  << "family: lambda=" << p.lambda << " tau=" << p.tau
                  << " rho=" << p.rho << " sigma=" << p.sigma << ", n=" << p.n
                  << ", L=" << p.L << ", pi=" << p.pi << '\n'
                  << "sum lattice first point: (" << t.d1 << ", " << t.d2 << ")\n"
                  << "difference lattice first point: (" << pf.d1 << ", " << pf.d2
                  << ")\n"
                  << "points below k: sum " << h.count_t << ", difference "
                  << h.count_p << '\n'
                  << "failure pairs below k: " << h.failure_count << '\n'
                  << "exact: " << exact_text(r.exactness) << '\n'
                  << "eaqmds: " << mds_text(r.mds) << '\n';
    }
    return 0;
}

int cmd_table(const CodeParams& p, std::optional<std::pair<long long, long long>> kr,
              const std::string& format) {
    long long lo = 1;
    long long hi = p.lambda * p.tau;
    if (kr) {
        lo = kr->first;
        hi = kr->second;
    }
    std::vector<TableRow> rows = table_rows(p, lo, hi);
    if (format == "json") {
        Json j{{"q", p.q},     {"lambda", p.lambda}, {"tau", p.tau},
               {"rho", p.rho}, {"sigma", p.sigma},   {"n", p.n},
               {"L", p.L},     {"rows", rows_to_json(rows)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << rows_to_csv(rows);
    }
    return 0;
}

int cmd_sweep(const std::vector<long long>& qs,
              std::optional<std::pair<long long, long long>> kr,
              const std::string& format, long long max_n, bool with_oracle,
              long long inject) {
    Json out = Json::array();
    bool csv = format != "json";
    if (csv) std::cout << "q,lambda,tau,rho,sigma,k,n,K,d,c,exact,eaqmds\n";
    for (long long q : qs) {
        for (const CodeParams& p : admissible_families(q, true)) {
            if (p.n > max_n) {
                std::cerr << "warning: skipping lambda=" << p.lambda
                          << " tau=" << p.tau << " rho=" << p.rho
                          << " sigma=" << p.sigma << " for q=" << q
                          << ": n=" << p.n << " exceeds the cap\n";
                continue;
            }
            long long lo = 1;
            long long hi = p.lambda * p.tau;
            if (kr) {
                lo = std::max(lo, kr->first);
                hi = std::min({hi, kr->second, p.n});
            }
            if (lo > hi) continue;
            std::vector<TableRow> rows = table_rows(p, lo, hi);
            if (csv) {
                for (const TableRow& row : rows) {
                    const QuantumCodeRecord& r = row.record;
                    std::cout << p.q << ',' << p.lambda << ',' << p.tau << ','
                              << p.rho << ',' << p.sigma << ',' << row.k << ','
                              << r.n << ',' << r.K << ',' << r.d << ',' << r.c
                              << ',' << exact_text(r.exactness) << ','
                              << mds_text(r.mds) << '\n';
                }
            } else {
                out.push_back(Json{{"q", p.q},
                                   {"lambda", p.lambda},
                                   {"tau", p.tau},
                                   {"rho", p.rho},
                                   {"sigma", p.sigma},
                                   {"n", p.n},
                                   {"L", p.L},
                                   {"rows", rows_to_json(rows)}});
            }
        }
    }
    if (!csv) std::cout << out.dump(2) << '\n';
    if (with_oracle) {
        VerifySpec spec;
        spec.qs = qs;
        spec.max_n = max_n;
        spec.k_range = kr;
        spec.inject_l_offset = inject;
        VerifyReport rep = run_verify(spec);
        std::cerr << verify_report_text(rep);
        if (!rep.ok()) return 2;
    }
    return 0;
}

int cmd_verify(const std::vector<long long>& qs,
               std::optional<std::pair<long long, long long>> kr,
               const std::string& format, long long max_n, long long inject) {
    VerifySpec spec;
    spec.qs = qs;
    spec.max_n = max_n;
    spec.k_range = kr;
    spec.inject_l_offset = inject;
    VerifyReport rep = run_verify(spec);
    if (format == "json")
        std::cout << verify_report_json(rep).dump(2) << '\n';
    else
        std::cout << verify_report_text(rep);
    return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian hulls of twisted evaluation codes and the quantum "
                 "codes they certify"};
    app.require_subcommand(1);

    std::vector<long long> params_args;
    std::string params_format = "text";
    CLI::App* sub_params =
        app.add_subcommand("params", "One instance: record, lattice data, hull count");
    sub_params->add_option("values", params_args, "q lambda tau rho sigma k")
        ->expected(6)
        ->required();
    sub_params->add_option("--format", params_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string table_family;
    std::vector<long long> table_args;
    std::string table_range;
    std::string table_format = "csv";
    CLI::App* sub_table =
        app.add_subcommand("table", "Record table for one family over a k range");
    sub_table->add_option("--family", table_family, "alias: q11, q29 or q83");
    sub_table->add_option("values", table_args, "q lambda tau rho sigma")
        ->expected(5);
    sub_table->add_option("--k-range", table_range, "dimensions a..b (default 1..lambda*tau)");
    sub_table->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::vector<long long> sweep_qs;
    std::string sweep_range;
    std::string sweep_format = "csv";
    long long sweep_max_n = 2000;
    bool sweep_oracle = false;
    CLI::App* sub_sweep =
        app.add_subcommand("sweep", "Records for every admissible family of each q");
    sub_sweep->add_option("--q", sweep_qs, "prime powers to sweep")
        ->required()
        ->expected(-1);
    sub_sweep->add_option("--k-range", sweep_range, "dimensions a..b");
    sub_sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub_sweep->add_option("--max-n", sweep_max_n, "skip families longer than this");
    sub_sweep->add_flag("--with-oracle", sweep_oracle,
                        "also compare counts against Gram ranks");

    std::vector<long long> verify_qs;
    std::string verify_range;
    std::string verify_format = "text";
    long long verify_max_n = 2000;
    long long inject = 0;
    CLI::App* sub_verify = app.add_subcommand(
        "verify", "Compare counted entanglement against the Gram-rank oracle");
    sub_verify->add_option("--q", verify_qs, "prime powers to check")
        ->required()
        ->expected(-1);
    sub_verify->add_option("--k-range", verify_range, "dimensions a..b");
    sub_verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub_verify->add_option("--max-n", verify_max_n, "skip families longer than this");
    sub_verify->add_option("--inject-l-offset", inject, "")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sub_params->parsed()) return cmd_params(params_args, params_format);
        if (sub_table->parsed()) {
            if (table_family.empty() == table_args.empty())
                throw std::invalid_argument(
                    "give either --family or the five family values");
            CodeParams p = table_family.empty()
                               ? validate_params(table_args[0], table_args[1],
                                                 table_args[2], table_args[3],
                                                 table_args[4])
                               : family_by_name(table_family);
            std::optional<std::pair<long long, long long>> kr;
            if (!table_range.empty()) kr = parse_k_range(table_range);
            return cmd_table(p, kr, table_format);
        }
        if (sub_sweep->parsed()) {
            std::optional<std::pair<long long, long long>> kr;
            if (!sweep_range.empty()) kr = parse_k_range(sweep_range);
            return cmd_sweep(sweep_qs, kr, sweep_format, sweep_max_n, sweep_oracle, 0);
        }
        std::optional<std::pair<long long, long long>> kr;
        if (!verify_range.empty()) kr = parse_k_range(verify_range);
        return cmd_verify(verify_qs, kr, verify_format, verify_max_n, inject);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
