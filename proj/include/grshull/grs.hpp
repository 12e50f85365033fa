#pragma once

#include <utility>
#include <vector>

#include "grshull/gf.hpp"

namespace grshull {

// Parameters of one code family member, with the derived quantities filled
// in by validate_params.
struct CodeParams {
    long long q = 0;       // base field size, prime power >= 4
    long long lambda = 0;  // divisor of q-1, > 1
    long long tau = 0;     // divisor of q+1, > 1, coprime to lambda
    long long rho = 0;     // divisor of q+1, > 1
    long long sigma = 0;   // 2 <= sigma <= rho/kappa
    long long kappa1 = 0;  // gcd(lambda, rho)
    long long kappa2 = 0;  // gcd(tau, rho)
    long long kappa = 0;   // kappa1 * kappa2
    long long n = 0;       // code length lambda * tau * sigma
    long long pi = 0;      // lcm(tau, rho) = tau * rho / kappa2
    long long L = 0;       // twist exponent, see select_L
};

using Matrix = std::vector<std::vector<FieldElement>>;

// Checks every constraint and returns the completed parameter set; throws
// std::invalid_argument with a distinct message per violated constraint.
CodeParams validate_params(long long q, long long lambda, long long tau,
                           long long rho, long long sigma);

// The multiplier twist exponent, chosen by the parities of lambda and tau
// and whether rho = 2: even lambda gives 2*tau - 2; odd lambda gives tau - 2
// except when lambda > tau with tau odd and rho != 2, which gives 2*tau - 2.
long long select_L(long long lambda, long long tau, long long rho);

bool is_prime_power(long long q);

// Column scaling coefficients s_0 .. s_{sigma-1}: they sum to zero, are all
// nonzero, and for sigma = 2 are (1, -1). For sigma > 2 the first sigma - 2
// are 1, the next is the first enumerated field element outside a small
// excluded set, and the last balances the sum.
std::vector<FieldElement> coefficients_s(const FieldPtr& field,
                                         const CodeParams& params);

// Evaluation points a(i,j,l) = zeta_lambda^i zeta_tau^j zeta_rho^l in
// lexicographic (i, j, l) order; all n points are distinct.
std::vector<FieldElement> evaluation_set(const FieldPtr& field,
                                         const CodeParams& params);

// Column multipliers v(i,j,l) with v^(q+1) = zeta_lambda^(-i*L) * s_l, via
// the deterministic norm preimage.
std::vector<FieldElement> multiplier_vector(const FieldPtr& field,
                                            const CodeParams& params,
                                            const std::vector<FieldElement>& s,
                                            const std::vector<FieldElement>& points);

// k x n generator matrix with rows v * points^r for r = 0 .. k-1.
Matrix generator_matrix(const std::vector<FieldElement>& multipliers,
                        const std::vector<FieldElement>& points, long long k);

// sum_i u_i * w_i^q.
FieldElement hermitian_inner_product(const std::vector<FieldElement>& u,
                                     const std::vector<FieldElement>& w);

// Pairwise Hermitian products of the rows of g.
Matrix gram_matrix(const Matrix& g);

// Rank over F_{q^2} by Gaussian elimination (the input is copied).
long long matrix_rank(Matrix m);

// Exponent pairs (e1, e2), both below k, where Hermitian orthogonality of
// the corresponding monomial rows fails: e1 + e2 = L (mod lambda),
// e1 = e2 (mod tau), e1 != e2 (mod rho). Ordered pairs, lexicographic.
std::vector<std::pair<long long, long long>> failure_points_bruteforce(
    const CodeParams& params, long long k);

// Bundles the constructed family data so sweeps reuse the field, the
// coefficients and the evaluation data across many k.
class Code {
public:
    explicit Code(const CodeParams& params);

    const CodeParams& params() const { return params_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coefficients() const { return s_; }
    const std::vector<FieldElement>& points() const { return points_; }
    const std::vector<FieldElement>& multipliers() const { return mult_; }

    Matrix generator(long long k) const;
    Matrix gram(long long k) const;
    long long gram_rank(long long k) const;

private:
    CodeParams params_;
    FieldPtr field_;
    std::vector<FieldElement> s_, points_, mult_;
};

// Gram-matrix rank oracle: returns (hull dimension, c) for the family member
// of dimension k, where c = rank of the Hermitian Gram matrix.
std::pair<long long, long long> hull_dimension_oracle(const CodeParams& params,
                                                      long long k);

}  // namespace grshull
