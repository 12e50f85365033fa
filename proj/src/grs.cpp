#include "grshull/grs.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace grshull {

bool is_prime_power(long long q) {
    if (q < 2) return false;
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) return true;
    while (q % p == 0) q /= p;
    return q == 1;
}

long long select_L(long long lambda, long long tau, long long rho) {
    if (lambda % 2 == 0) return 2 * tau - 2;
    if (lambda < tau || tau % 2 == 0 || rho == 2) return tau - 2;
    return 2 * tau - 2;
}

CodeParams validate_params(long long q, long long lambda, long long tau,
                           long long rho, long long sigma) {
    if (q < 4) throw std::invalid_argument("q must be at least 4");
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
    if (lambda <= 1) throw std::invalid_argument("lambda must exceed 1");
    if ((q - 1) % lambda != 0) throw std::invalid_argument("lambda must divide q-1");
    if (tau <= 1) throw std::invalid_argument("tau must exceed 1");
    if ((q + 1) % tau != 0) throw std::invalid_argument("tau must divide q+1");
    if (rho <= 1) throw std::invalid_argument("rho must exceed 1");
    if ((q + 1) % rho != 0) throw std::invalid_argument("rho must divide q+1");
    if (std::gcd(lambda, tau) != 1)
        throw std::invalid_argument("lambda and tau must be coprime");

    CodeParams p;
    p.q = q;
    p.lambda = lambda;
    p.tau = tau;
    p.rho = rho;
    p.sigma = sigma;
    p.kappa1 = std::gcd(lambda, rho);
    p.kappa2 = std::gcd(tau, rho);
    p.kappa = p.kappa1 * p.kappa2;
    // kappa1 and kappa2 are coprime divisors of rho, so kappa divides rho.
    if (rho / p.kappa < 2)
        throw std::invalid_argument("rho/kappa must be at least 2");
    if (sigma < 2 || sigma > rho / p.kappa)
        throw std::invalid_argument("sigma must lie between 2 and rho/kappa");
    p.n = lambda * tau * sigma;
    p.pi = tau * rho / p.kappa2;
    p.L = select_L(lambda, tau, rho);
    if (p.n > q * q - 1)
        throw std::logic_error("evaluation set larger than the multiplicative group");
    return p;
}

std::vector<FieldElement> coefficients_s(const FieldPtr& field,
                                         const CodeParams& params) {
    const long long sigma = params.sigma;
    std::vector<FieldElement> s;
    s.reserve(sigma);
    if (sigma == 2) {
        s.push_back(field->one());
        s.push_back(field->from_int(-1));
        return s;
    }
    for (long long i = 0; i < sigma - 2; ++i) s.push_back(field->one());
    // Partial sum so far is (sigma - 2) * 1; exclude 0, the value that would
    // zero out the last coefficient, and the value that would duplicate it.
    FieldElement partial = field->from_int(sigma - 2);
    std::vector<FieldElement> excluded{field->zero(), -partial};
    if (field->characteristic() != 2)
        excluded.push_back(-(partial / field->from_int(2)));
    for (std::uint32_t idx = 1; idx < field->base_order(); ++idx) {
        FieldElement cand = field->element(idx);
        bool ok = true;
        for (const auto& e : excluded)
            if (cand == e) { ok = false; break; }
        if (ok) {
            s.push_back(cand);
            break;
        }
    }
    if (static_cast<long long>(s.size()) != sigma - 1)
        throw std::logic_error("no admissible scaling coefficient found");
    FieldElement sum = field->zero();
    for (const auto& e : s) sum = sum + e;
    s.push_back(-sum);
    return s;
}

std::vector<FieldElement> evaluation_set(const FieldPtr& field,
                                         const CodeParams& params) {
    const FieldElement zl = field->root_of_unity(params.lambda);
    const FieldElement zt = field->root_of_unity(params.tau);
    const FieldElement zr = field->root_of_unity(params.rho);
    std::vector<FieldElement> pts;
    pts.reserve(params.n);
    FieldElement pi = field->one();
    for (long long i = 0; i < params.lambda; ++i) {
        FieldElement pj = pi;
        for (long long j = 0; j < params.tau; ++j) {
            FieldElement pl = pj;
            for (long long l = 0; l < params.sigma; ++l) {
                pts.push_back(pl);
                pl = pl * zr;
            }
            pj = pj * zt;
        }
        pi = pi * zl;
    }
    return pts;
}

std::vector<FieldElement> multiplier_vector(const FieldPtr& field,
                                            const CodeParams& params,
                                            const std::vector<FieldElement>& s,
                                            const std::vector<FieldElement>& points) {
    if (static_cast<long long>(points.size()) != params.n)
        throw std::invalid_argument("evaluation set size mismatch");
    const FieldElement zl = field->root_of_unity(params.lambda);
    std::vector<FieldElement> v;
    v.reserve(params.n);
    for (long long i = 0; i < params.lambda; ++i) {
        const FieldElement twist = zl.pow(-i * params.L);
        for (long long j = 0; j < params.tau; ++j)
            for (long long l = 0; l < params.sigma; ++l)
                v.push_back(field->norm_preimage(twist * s[l]));
    }
    return v;
}

Matrix generator_matrix(const std::vector<FieldElement>& multipliers,
                        const std::vector<FieldElement>& points, long long k) {
    if (multipliers.size() != points.size())
        throw std::invalid_argument("multiplier and point counts differ");
    const std::size_t n = points.size();
    if (k < 0 || k > static_cast<long long>(n))
        throw std::invalid_argument("dimension k out of range");
    Matrix g;
    g.reserve(k);
    std::vector<FieldElement> row = multipliers;
    for (long long r = 0; r < k; ++r) {
        g.push_back(row);
        if (r + 1 < k)
            for (std::size_t c = 0; c < n; ++c) row[c] = row[c] * points[c];
    }
    return g;
}

FieldElement hermitian_inner_product(const std::vector<FieldElement>& u,
                                     const std::vector<FieldElement>& w) {
    if (u.size() != w.size()) throw std::invalid_argument("length mismatch");
    if (u.empty()) throw std::invalid_argument("empty vectors");
    FieldElement acc = u.front().field().zero();
    for (std::size_t i = 0; i < u.size(); ++i)
        acc = acc + u[i] * w[i].frobenius();
    return acc;
}

Matrix gram_matrix(const Matrix& g) {
    Matrix m;
    const std::size_t k = g.size();
    m.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<FieldElement> row;
        row.reserve(k);
        for (std::size_t j = 0; j < k; ++j)
            row.push_back(hermitian_inner_product(g[i], g[j]));
        m.push_back(std::move(row));
    }
    return m;
}

long long matrix_rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    long long rank = 0;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && m[piv][pc].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        const FieldElement inv = m[pr][pc].inv();
        for (std::size_t r = pr + 1; r < rows; ++r) {
            if (m[r][pc].is_zero()) continue;
            const FieldElement f = m[r][pc] * inv;
            for (std::size_t c = pc; c < cols; ++c)
                m[r][c] = m[r][c] - f * m[pr][c];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

std::vector<std::pair<long long, long long>> failure_points_bruteforce(
    const CodeParams& params, long long k) {
    std::vector<std::pair<long long, long long>> out;
    for (long long e1 = 0; e1 < k; ++e1)
        for (long long e2 = 0; e2 < k; ++e2)
            if ((e1 + e2 - params.L) % params.lambda == 0 &&
                (e1 - e2) % params.tau == 0 && (e1 - e2) % params.rho != 0)
                out.emplace_back(e1, e2);
    return out;
}

Code::Code(const CodeParams& params)
    : params_(params), field_(make_fields(params.q)) {
    s_ = coefficients_s(field_, params_);
    points_ = evaluation_set(field_, params_);
    mult_ = multiplier_vector(field_, params_, s_, points_);
    std::unordered_set<std::uint32_t> seen;
    for (const auto& pt : points_) seen.insert(pt.index());
    if (static_cast<long long>(seen.size()) != params_.n)
        throw std::logic_error("evaluation points are not distinct");
}

Matrix Code::generator(long long k) const {
    return generator_matrix(mult_, points_, k);
}

Matrix Code::gram(long long k) const { return gram_matrix(generator(k)); }

long long Code::gram_rank(long long k) const { return matrix_rank(gram(k)); }

std::pair<long long, long long> hull_dimension_oracle(const CodeParams& params,
                                                      long long k) {
    if (k < 1 || k > params.n) throw std::invalid_argument("k out of range");
    Code code(params);
    const long long c = code.gram_rank(k);
    return {k - c, c};
}

}  // namespace grshull
