#include "grshull/quantum.hpp"

#include <algorithm>
#include <stdexcept>

namespace grshull {

namespace {

// The Hermitian construction cannot push the distance past this line, so a
// record breaking it cannot come from that construction at all.
bool within_hermitian_ceiling(const QuantumCodeRecord& r) {
    return 2 * r.d <= r.n + r.c - r.K + 2;
}

MdsStatus classify(const QuantumCodeRecord& r) {
    if (r.exactness == Exactness::UpperBound) return MdsStatus::Unknown;
    if (!within_hermitian_ceiling(r)) return MdsStatus::NotMds;
    return singleton_check(r).result == SingletonResult::Tight ? MdsStatus::Eaqmds
                                                               : MdsStatus::NotMds;
}

}  // namespace

QuantumCodeRecord eaqecc_params(const CodeParams& params, long long k, long long c) {
    if (k < 1 || k > params.n)
        throw std::invalid_argument("classical dimension must lie between 1 and n");
    if (c < 0 || c > k)
        throw std::invalid_argument("entanglement must lie between 0 and k");
    QuantumCodeRecord r;
    r.q = params.q;
    r.n = params.n;
    r.K = params.n - 2 * k + c;
    r.d = k + 1;
    r.c = c;
    if (r.K < 0)
        throw std::invalid_argument("derived dimension is negative; k is past (n+c)/2");
    r.exactness = Exactness::Exact;
    r.mds = classify(r);
    return r;
}

SingletonCheck singleton_check(const QuantumCodeRecord& r) {
    SingletonCheck out;
    out.margin_entanglement = r.c + std::max<long long>(0, r.n - 2 * r.d + 2) - r.K;
    out.margin_length = (r.n - r.d + 1) - r.K;
    out.high_rate_applies = 2 * (r.d - 1) >= r.n;
    if (out.high_rate_applies) {
        out.margin_high_rate = (r.n - r.d + 1) * (r.c + 2 * r.d - 2 - r.n) -
                               r.K * (3 * r.d - 3 - r.n);
    }
    bool violated = out.margin_entanglement < 0 || out.margin_length < 0 ||
                    (out.high_rate_applies && out.margin_high_rate < 0);
    if (violated)
        out.result = SingletonResult::Violated;
    else if (out.margin_entanglement == 0)
        out.result = SingletonResult::Tight;
    else
        out.result = SingletonResult::Slack;
    return out;
}

bool is_eaqmds(const CodeParams& params, long long k, const QuantumCodeRecord& r) {
    if (!within_hermitian_ceiling(r)) return false;
    if (k <= params.lambda * params.tau) return true;
    return singleton_check(r).result == SingletonResult::Tight;
}

QuantumCodeRecord make_record(const CodeParams& params, long long k) {
    HullDimension hd = hull_dim_formula(params, k);
    QuantumCodeRecord r = eaqecc_params(params, k, hd.c);
    r.exactness = hd.exactness;
    if (hd.exactness == Exactness::UpperBound)
        r.mds = MdsStatus::Unknown;
    else
        r.mds = is_eaqmds(params, k, r) ? MdsStatus::Eaqmds : MdsStatus::NotMds;
    return r;
}

QuantumCodeRecord propagate(const QuantumCodeRecord& r, long long i, long long s) {
    long long k = r.d - 1;
    long long l = k - r.c;
    if (k < 1 || l < 0)
        throw std::invalid_argument("record does not come from a hull construction");
    if (2 * k > r.n)
        throw std::invalid_argument("classical dimension exceeds half the length");
    long long imax = std::min({l, r.q * r.q + 1 - r.n, r.n - 2 * k});
    if (i < 0 || i > imax)
        throw std::invalid_argument("distance increment out of range");
    if (s < 0 || s > l - i)
        throw std::invalid_argument("hull trade out of range");
    QuantumCodeRecord out = r;
    out.K = r.n - k - i - s;
    out.d = k + i + 1;
    out.c = k + i - s;
    out.mds = classify(out);
    return out;
}

}  // namespace grshull
