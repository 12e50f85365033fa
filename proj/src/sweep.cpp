#include "grshull/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "grshull/gf.hpp"
#include "grshull/grs.hpp"
#include "grshull/lattice.hpp"

namespace grshull {

namespace {

std::vector<long long> divisors_above_one(long long m) {
    std::vector<long long> out;
    for (long long d = 2; d <= m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

std::string family_label(const CodeParams& p) {
    std::ostringstream os;
    os << "q=" << p.q << " lambda=" << p.lambda << " tau=" << p.tau
       << " rho=" << p.rho << " sigma=" << p.sigma;
    return os.str();
}

// Counted c with an optional shift of the residue target. The shifted
// lattices lose the closed-form first points, so they are searched.
long long counted_c(const CodeParams& p, long long k, long long offset) {
    if (offset == 0) return count_F(p, k);
    Lattice lt{p.L + offset, p.lambda, p.tau};
    Lattice lp{p.L + offset, p.lambda, p.pi};
    return 2 * (count_below(lt, k) - count_below(lp, k));
}

Matrix leading_block(const Matrix& m, long long k) {
    Matrix out;
    out.reserve(k);
    for (long long i = 0; i < k; ++i)
        out.emplace_back(m[i].begin(), m[i].begin() + k);
    return out;
}

}  // namespace

std::vector<CodeParams> admissible_families(long long q, bool exact_sigma_only) {
    if (q < 4 || !is_prime_power(q))
        throw std::invalid_argument("q must be a prime power of at least 4");
    std::vector<CodeParams> out;
    for (long long lam : divisors_above_one(q - 1)) {
        for (long long tau : divisors_above_one(q + 1)) {
            if (std::gcd(lam, tau) != 1) continue;
            for (long long rho : divisors_above_one(q + 1)) {
                long long kappa = std::gcd(lam, rho) * std::gcd(tau, rho);
                if (rho < 2 * kappa) continue;
                std::vector<long long> sigmas;
                if (exact_sigma_only) {
                    sigmas.push_back(2);
                    if (rho / kappa >= 3) sigmas.push_back(3);
                    if (kappa == 1 && rho > 3) sigmas.push_back(rho);
                } else {
                    for (long long s = 2; s <= rho / kappa; ++s) sigmas.push_back(s);
                }
                for (long long sigma : sigmas) {
                    if (lam * tau * sigma > q * q - 1) continue;
                    out.push_back(validate_params(q, lam, tau, rho, sigma));
                }
            }
        }
    }
    return out;
}

std::vector<TableRow> table_rows(const CodeParams& params, long long k_lo,
                                 long long k_hi) {
    if (k_lo < 1 || k_hi > params.n || k_lo > k_hi)
        throw std::invalid_argument("k range must lie inside [1, n]");
    std::vector<TableRow> out;
    for (long long k = k_lo; k <= k_hi; ++k) {
        HullComputation h = compute_hull(params, k);
        if (params.n - 2 * k + h.c() < 0) continue;
        TableRow row;
        row.k = k;
        row.hull = h;
        row.record = make_record(params, k);
        out.push_back(row);
    }
    return out;
}

std::string exact_text(Exactness e) {
    return e == Exactness::Exact ? "true" : "false";
}

std::string mds_text(MdsStatus m) {
    switch (m) {
        case MdsStatus::Eaqmds: return "true";
        case MdsStatus::NotMds: return "false";
        default: return "unknown";
    }
}

std::string rows_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "k,n,K,d,c,exact,eaqmds\n";
    for (const TableRow& row : rows) {
        const QuantumCodeRecord& r = row.record;
        os << row.k << ',' << r.n << ',' << r.K << ',' << r.d << ',' << r.c << ','
           << exact_text(r.exactness) << ',' << mds_text(r.mds) << '\n';
    }
    return os.str();
}

Json record_to_json(const QuantumCodeRecord& r) {
    return Json{{"q", r.q},
                {"n", r.n},
                {"K", r.K},
                {"d", r.d},
                {"c", r.c},
                {"exact", r.exactness == Exactness::Exact},
                {"eaqmds", mds_text(r.mds)}};
}

QuantumCodeRecord record_from_json(const Json& j) {
    QuantumCodeRecord r;
    r.q = j.at("q").get<long long>();
    r.n = j.at("n").get<long long>();
    r.K = j.at("K").get<long long>();
    r.d = j.at("d").get<long long>();
    r.c = j.at("c").get<long long>();
    r.exactness = j.at("exact").get<bool>() ? Exactness::Exact : Exactness::UpperBound;
    std::string m = j.at("eaqmds").get<std::string>();
    if (m == "true")
        r.mds = MdsStatus::Eaqmds;
    else if (m == "false")
        r.mds = MdsStatus::NotMds;
    else if (m == "unknown")
        r.mds = MdsStatus::Unknown;
    else
        throw std::invalid_argument("unrecognised eaqmds value: " + m);
    return r;
}

Json row_to_json(const TableRow& row) {
    Json j = record_to_json(row.record);
    Json out;
    out["k"] = row.k;
    for (auto& [key, value] : j.items()) out[key] = value;
    return out;
}

Json rows_to_json(const std::vector<TableRow>& rows) {
    Json arr = Json::array();
    for (const TableRow& row : rows) arr.push_back(row_to_json(row));
    return arr;
}

VerifyReport run_verify(const VerifySpec& spec) {
    VerifyReport rep;
    for (long long q : spec.qs) {
        std::vector<CodeParams> fams = admissible_families(q, spec.exact_sigma_only);
        if (fams.empty()) {
            rep.warnings.push_back("q=" + std::to_string(q) +
                                   ": no admissible families");
            continue;
        }
        for (const CodeParams& p : fams) {
            if (p.n > spec.max_n) {
                ++rep.families_skipped;
                rep.warnings.push_back(family_label(p) + ": skipped, n=" +
                                       std::to_string(p.n) + " exceeds the cap");
                continue;
            }
            ++rep.families_checked;
            long long k_lo = 1;
            long long k_hi = p.n;
            if (spec.k_range) {
                k_lo = std::max(k_lo, spec.k_range->first);
                k_hi = std::min(k_hi, spec.k_range->second);
            }
            if (k_lo > k_hi) continue;
            Code code(p);
            Matrix big = code.gram(k_hi);
            for (long long k = k_lo; k <= k_hi; ++k) {
                long long formula = counted_c(p, k, spec.inject_l_offset);
                long long oracle = matrix_rank(leading_block(big, k));
                bool need_equal = exactness_condition(p, k);
                bool bad = need_equal ? (formula != oracle) : (oracle > formula);
                if (bad)
                    rep.mismatches.push_back({p, k, formula, oracle, need_equal});
                ++rep.instances_checked;
            }
        }
    }
    return rep;
}

std::string verify_report_text(const VerifyReport& rep) {
    std::ostringstream os;
    for (const std::string& w : rep.warnings) os << "warning: " << w << '\n';
    for (const VerifyMismatch& m : rep.mismatches) {
        os << "mismatch: " << family_label(m.params) << " k=" << m.k
           << ": counted c=" << m.formula_c << ", gram rank=" << m.oracle_c
           << (m.equality_required ? " (equality required)" : " (rank above the bound)")
           << '\n';
    }
    os << "checked " << rep.families_checked << " families, "
       << rep.instances_checked << " instances, skipped " << rep.families_skipped
       << ", mismatches " << rep.mismatches.size() << '\n';
    return os.str();
}

Json verify_report_json(const VerifyReport& rep) {
    Json arr = Json::array();
    for (const VerifyMismatch& m : rep.mismatches) {
        arr.push_back(Json{{"q", m.params.q},
                           {"lambda", m.params.lambda},
                           {"tau", m.params.tau},
                           {"rho", m.params.rho},
                           {"sigma", m.params.sigma},
                           {"k", m.k},
                           {"counted_c", m.formula_c},
                           {"gram_rank", m.oracle_c},
                           {"equality_required", m.equality_required}});
    }
    return Json{{"families_checked", rep.families_checked},
                {"instances_checked", rep.instances_checked},
                {"families_skipped", rep.families_skipped},
                {"warnings", rep.warnings},
                {"mismatches", arr},
                {"ok", rep.ok()}};
}

}  // namespace grshull
