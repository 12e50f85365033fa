#include "grshull/hull.hpp"

#include <stdexcept>

namespace grshull {

namespace {

// Smallest t >= beta/step whose parity equals want (step > 0).
long long parity_ceiling(long long beta, long long step, long long want) {
    long long t = ceil_div(beta, step);
    if (((t % 2) + 2) % 2 != want) ++t;
    return t;
}

FirstPoint make_first_point(long long d1, long long sum, long long lam,
                            long long diff_mod, long long a) {
    FirstPoint fp;
    fp.d1 = d1;
    fp.d2 = sum - d1;
    long long tnum = sum - a;
    long long dnum = fp.d2 - fp.d1;
    if (tnum % lam != 0 || dnum % diff_mod != 0)
        throw std::logic_error("closed-form point off the lattice");
    fp.t = tnum / lam;
    fp.eps = dnum / diff_mod;
    return fp;
}

}  // namespace

Lattice lattice_T(const CodeParams& params) {
    return Lattice{params.L, params.lambda, params.tau};
}

Lattice lattice_P(const CodeParams& params) {
    return Lattice{params.L, params.lambda, params.pi};
}

FirstPoint first_point_T_closed_form(const CodeParams& params) {
    const long long lam = params.lambda;
    const long long tau = params.tau;
    long long d1 = 0;
    long long d2 = 0;
    if (lam % 2 == 0) {
        d1 = (lam - 2) / 2;
        d2 = (lam + 4 * tau - 2) / 2;
    } else if (tau % 2 == 0) {
        d1 = lam - 1;
        d2 = lam + tau - 1;
    } else if (params.rho == 2) {
        if (lam < tau + 2) {
            d1 = lam - 1;
            d2 = lam + tau - 1;
        } else {
            d1 = (lam - tau - 2) / 2;
            d2 = (lam + 3 * tau - 2) / 2;
        }
    } else if (lam < tau) {
        d1 = lam - 1;
        d2 = lam + tau - 1;
    } else {
        d1 = (lam + tau - 2) / 2;
        d2 = (lam + 3 * tau - 2) / 2;
    }
    return make_first_point(d1, d1 + d2, lam, tau, params.L);
}

FirstPoint first_point_P_closed_form(const CodeParams& params) {
    const long long lam = params.lambda;
    const long long pi = params.pi;
    const long long L = params.L;
    // A point on line (t, eps) has e1 = (t*lam + L - eps*pi)/2, so the
    // numerator must be even and non-negative; the first point minimises t,
    // then eps. Which (t, eps) classes are integral depends only on the
    // parities of lam, pi and L.
    long long eps = 1;
    long long t = 0;
    if (lam % 2 == 0) {
        // t*lam and L are even, so eps*pi alone decides parity: eps free for
        // even pi, eps even for odd pi. No constraint on t either way.
        eps = (pi % 2 != 0) ? 2 : 1;
        t = ceil_div(eps * pi - L, lam);
    } else if (pi % 2 == 0) {
        // eps*pi is even and lam is odd, so t must match the parity of L.
        t = parity_ceiling(pi - L, lam, L % 2);
    } else {
        // lam, pi both odd: t = eps + L (mod 2). The eps = 1 class wins
        // because the eps = 2 threshold sits a full period pi higher, which
        // exceeds one line spacing on every admissible shape.
        t = parity_ceiling(pi - L, lam, (L + 1) % 2);
    }
    long long num = t * lam + L - eps * pi;
    if (num < 0 || num % 2 != 0)
        throw std::logic_error("closed-form point off the lattice");
    long long d1 = num / 2;
    FirstPoint fp;
    fp.d1 = d1;
    fp.d2 = d1 + eps * pi;
    fp.t = t;
    fp.eps = eps;
    return fp;
}

bool exactness_condition(const CodeParams& params, long long k) {
    bool sigma_ok = params.sigma == 2 || params.sigma == 3 || params.sigma == params.rho;
    if (!sigma_ok) return false;
    long long lt = params.lambda * params.tau;
    if (k <= lt) return true;
    return params.rho == 2 && k <= 2 * lt;
}

HullComputation compute_hull(const CodeParams& params, long long k) {
    if (k < 1 || k > params.n)
        throw std::invalid_argument("k must lie between 1 and n");
    HullComputation out;
    out.params = params;
    out.k = k;
    Lattice lt = lattice_T(params);
    Lattice lp = lattice_P(params);
    out.t_points = sublattice_first_points(lt, first_point_T_closed_form(params));
    out.p_points = sublattice_first_points(lp, first_point_P_closed_form(params));
    out.count_t = count_below(lt, out.t_points, k);
    out.count_p = count_below(lp, out.p_points, k);
    out.failure_count = 2 * (out.count_t - out.count_p);
    out.exactness = exactness_condition(params, k) ? Exactness::Exact
                                                   : Exactness::UpperBound;
    return out;
}

long long count_F(const CodeParams& params, long long k) {
    return compute_hull(params, k).failure_count;
}

HullDimension hull_dim_formula(const CodeParams& params, long long k) {
    HullComputation h = compute_hull(params, k);
    return HullDimension{h.hull_dim(), h.c(), h.exactness};
}

}  // namespace grshull
