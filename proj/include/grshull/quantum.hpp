#pragma once

#include "grshull/hull.hpp"

namespace grshull {

enum class MdsStatus { Eaqmds, NotMds, Unknown };

enum class SingletonResult { Tight, Slack, Violated };

// Entanglement-assisted quantum code parameters [[n, K, d; c]]_q together
// with how trustworthy the entanglement figure is.
struct QuantumCodeRecord {
    long long q = 0;
    long long n = 0;
    long long K = 0;
    long long d = 0;
    long long c = 0;
    Exactness exactness = Exactness::Exact;
    MdsStatus mds = MdsStatus::Unknown;
};

// Margins of the three Singleton-type bounds (non-negative means satisfied).
struct SingletonCheck {
    long long margin_entanglement = 0;  // c + max(0, n - 2d + 2) - K
    long long margin_length = 0;        // (n - d + 1) - K
    bool high_rate_applies = false;     // third bound, only when d - 1 >= n/2
    long long margin_high_rate = 0;     // (n-d+1)(c+2d-2-n) - K(3d-3-n)
    SingletonResult result = SingletonResult::Slack;
};

// The code [[n, n - 2k + c, k + 1; c]]_q obtained by feeding a k-dimensional
// MDS code with Gram rank c into the Hermitian construction.
QuantumCodeRecord eaqecc_params(const CodeParams& params, long long k, long long c);

SingletonCheck singleton_check(const QuantumCodeRecord& record);

// True when the record meets the entanglement-assisted Singleton bound with
// equality. Requires an exact c. k is the classical dimension behind the
// record; k <= lambda*tau certifies tightness outright.
bool is_eaqmds(const CodeParams& params, long long k, const QuantumCodeRecord& record);

// Full pipeline: hull count, record, Singleton classification.
QuantumCodeRecord make_record(const CodeParams& params, long long k);

// Trade i extra units of distance and s units of hull for entanglement:
// [[n, n-k-i-s, k+i+1; k+i-s]]_q from a record with classical dimension
// k = d - 1 and hull dimension l = k - c. The identity move is (0, l).
QuantumCodeRecord propagate(const QuantumCodeRecord& record, long long i, long long s);

}  // namespace grshull
