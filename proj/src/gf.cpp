#include "grshull/gf.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace grshull {

namespace {

constexpr long long kMaxQ = 1000;

// Smallest prime factor, or 0 for n < 2.
long long smallest_prime_factor(long long n) {
    if (n < 2) return 0;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Polynomials over F_p as coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, long long p) {
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int lead = a[da];
        if (lead != 0) {
            // m is monic, so subtract lead * x^(da-dm) * m.
            for (int i = 0; i <= dm; ++i) {
                int& t = a[da - dm + i];
                t = static_cast<int>(((t - static_cast<long long>(lead) * m[i]) % p + p) % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int>((c[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& m, long long p) {
    Poly r{1};
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

// Irreducibility over F_p via x^(p^d) fixed-point tests: f of degree d is
// irreducible iff x^(p^d) = x mod f and x^(p^(d/r)) != x mod f for each
// prime r | d.
bool is_irreducible(const Poly& f, long long p) {
    const int d = static_cast<int>(f.size()) - 1;
    auto xpow = [&](long long k) {
        // x^(p^k) mod f by repeated p-th powering.
        Poly r = poly_mod(Poly{0, 1}, f, p);
        for (long long i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    Poly x = poly_mod(Poly{0, 1}, f, p);
    if (xpow(d) != x) return false;
    for (long long r : prime_factors(d))
        if (xpow(d / r) == x) return false;
    return true;
}

}  // namespace

Field::Field(long long q) {
    p_ = smallest_prime_factor(q);
    if (p_ == 0) throw std::invalid_argument("field order must be at least 2");
    long long t = q;
    e_ = 0;
    while (t % p_ == 0) {
        t /= p_;
        ++e_;
    }
    if (t != 1) throw std::invalid_argument("field order must be a prime power");
    if (q > kMaxQ) throw std::invalid_argument("field order exceeds the supported table size");
    q_ = q;
    q2_ = q * q;

    // Base modulus: lexicographically smallest monic irreducible of degree e
    // over F_p, coefficients scanned low degree first.
    if (e_ == 1) {
        base_mod_ = {0, 1};  // Y - 0 placeholder; base arithmetic is mod p
    } else {
        std::vector<int> digits(e_, 0);
        bool found = false;
        for (long long v = 0; v < q_ && !found; ++v) {
            long long x = v;
            for (int i = 0; i < e_; ++i) {
                digits[i] = static_cast<int>(x % p_);
                x /= p_;
            }
            Poly f(digits.begin(), digits.end());
            f.push_back(1);
            if (is_irreducible(f, p_)) {
                base_mod_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible base modulus found");
    }

    // Base-field tables over indices 0..q-1 (base-p digit encoding).
    auto decode = [&](std::uint32_t v, Poly& out) {
        out.assign(e_, 0);
        for (int i = 0; i < e_; ++i) {
            out[i] = static_cast<int>(v % p_);
            v = static_cast<std::uint32_t>(v / p_);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
    };
    auto encode = [&](const Poly& f) {
        long long v = 0;
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) v = v * p_ + f[i];
        return static_cast<std::uint32_t>(v);
    };

    badd_.resize(q_ * q_);
    bmul_.resize(q_ * q_);
    bneg_.resize(q_);
    binv_.assign(q_, 0);
    Poly fa, fb;
    for (long long a = 0; a < q_; ++a) {
        decode(static_cast<std::uint32_t>(a), fa);
        Poly na(fa);
        for (auto& cv : na) cv = static_cast<int>((p_ - cv) % p_);
        bneg_[a] = encode(na);
        for (long long b = a; b < q_; ++b) {
            decode(static_cast<std::uint32_t>(b), fb);
            Poly s(std::max(fa.size(), fb.size()), 0);
            for (std::size_t i = 0; i < fa.size(); ++i) s[i] = fa[i];
            for (std::size_t i = 0; i < fb.size(); ++i)
                s[i] = static_cast<int>((s[i] + fb[i]) % p_);
            std::uint32_t sv = encode(s);
            badd_[a * q_ + b] = sv;
            badd_[b * q_ + a] = sv;
            std::uint32_t mv = encode(poly_mulmod(fa, fb, base_mod_, p_));
            bmul_[a * q_ + b] = mv;
            bmul_[b * q_ + a] = mv;
        }
    }
    for (long long a = 1; a < q_; ++a)
        for (long long b = 1; b < q_; ++b)
            if (bmul_[a * q_ + b] == 1) binv_[a] = static_cast<std::uint32_t>(b);

    // Quadratic modulus over F_q: smallest (m0, m1) with X^2 + m1 X + m0
    // irreducible, i.e. without a root in F_q.
    std::uint32_t m0 = 0, m1 = 0;
    bool found = false;
    for (std::uint32_t c0 = 0; c0 < q_ && !found; ++c0)
        for (std::uint32_t c1 = 0; c1 < q_ && !found; ++c1) {
            bool has_root = false;
            for (long long x = 0; x < q_ && !has_root; ++x) {
                std::uint32_t xx = static_cast<std::uint32_t>(x);
                std::uint32_t val = badd_[bmul_[xx * q_ + xx] * q_ +
                                          badd_[bmul_[c1 * q_ + xx] * q_ + c0]];
                has_root = (val == 0);
            }
            if (!has_root) {
                m0 = c0;
                m1 = c1;
                found = true;
            }
        }
    if (!found) throw std::logic_error("no irreducible quadratic found");
    ext_mod_ = {m0, m1, 1};

    // Extension arithmetic on index pairs u + q*w for u + w X.
    auto ext_mul = [&](std::uint32_t av, std::uint32_t bv) {
        std::uint32_t u1 = av % q_, w1 = static_cast<std::uint32_t>(av / q_);
        std::uint32_t u2 = bv % q_, w2 = static_cast<std::uint32_t>(bv / q_);
        std::uint32_t uu = bmul_[u1 * q_ + u2];
        std::uint32_t ww = bmul_[w1 * q_ + w2];
        std::uint32_t cross = badd_[bmul_[u1 * q_ + w2] * q_ + bmul_[u2 * q_ + w1]];
        // X^2 = -(m1 X + m0)
        std::uint32_t c0 = badd_[uu * q_ + bneg_[bmul_[ww * q_ + m0]]];
        std::uint32_t c1 = badd_[cross * q_ + bneg_[bmul_[ww * q_ + m1]]];
        return c0 + c1 * static_cast<std::uint32_t>(q_);
    };

    // Distinguished generator: smallest index of multiplicative order q^2-1.
    const long long ord = q2_ - 1;
    auto factors = prime_factors(ord);
    auto pow_slow = [&](std::uint32_t base, long long e) {
        std::uint32_t r = 1;
        while (e > 0) {
            if (e & 1) r = ext_mul(r, base);
            base = ext_mul(base, base);
            e >>= 1;
        }
        return r;
    };
    gen_ = 0;
    for (std::uint32_t cand = 2; cand < q2_; ++cand) {
        bool primitive = true;
        for (long long f : factors)
            if (pow_slow(cand, ord / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen_ = cand;
            break;
        }
    }
    if (gen_ == 0) throw std::logic_error("no primitive element found");

    exp_.resize(ord);
    log_.assign(q2_, 0);
    std::uint32_t cur = 1;
    for (long long i = 0; i < ord; ++i) {
        exp_[i] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = ext_mul(cur, gen_);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");
}

FieldPtr Field::make(long long q) {
    static std::mutex mu;
    static std::unordered_map<long long, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(q));
    cache.emplace(q, f);
    return f;
}

FieldPtr make_fields(long long q) { return Field::make(q); }

std::uint32_t Field::add_idx(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t u = badd_[(a % q_) * q_ + b % q_];
    std::uint32_t w = badd_[(a / q_) * q_ + b / q_];
    return u + w * static_cast<std::uint32_t>(q_);
}

std::uint32_t Field::neg_idx(std::uint32_t a) const {
    return bneg_[a % q_] + bneg_[a / q_] * static_cast<std::uint32_t>(q_);
}

std::uint32_t Field::sub_idx(std::uint32_t a, std::uint32_t b) const {
    return add_idx(a, neg_idx(b));
}

std::uint32_t Field::mul_idx(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    long long s = static_cast<long long>(log_[a]) + log_[b];
    if (s >= q2_ - 1) s -= q2_ - 1;
    return exp_[s];
}

std::uint32_t Field::inv_idx(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    long long l = log_[a];
    return exp_[l == 0 ? 0 : q2_ - 1 - l];
}

std::uint32_t Field::pow_idx(std::uint32_t a, long long e) const {
    const long long ord = q2_ - 1;
    if (a == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    long long l = (static_cast<long long>(log_[a]) * (e % ord)) % ord;
    if (l < 0) l += ord;
    return exp_[l];
}

std::uint32_t Field::frob_idx(std::uint32_t a) const { return pow_idx(a, q_); }

FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }
FieldElement Field::generator() const { return element(gen_); }

FieldElement Field::element(std::uint32_t index) const {
    if (index >= q2_) throw std::out_of_range("element index out of range");
    return FieldElement(shared_from_this(), index);
}

FieldElement Field::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    std::uint32_t acc = 0;
    for (long long i = 0; i < r; ++i) acc = badd_[acc * q_ + 1];
    return element(acc);
}

FieldElement Field::root_of_unity(long long t) const {
    if (t <= 0 || (q2_ - 1) % t != 0)
        throw std::invalid_argument("order does not divide q^2 - 1");
    return element(exp_[((q2_ - 1) / t) % (q2_ - 1)]);
}

FieldElement Field::norm_preimage(const FieldElement& alpha) const {
    if (alpha.field_ptr().get() != this)
        throw std::invalid_argument("element belongs to a different field");
    if (alpha.is_zero()) throw std::domain_error("norm preimage of zero");
    if (!alpha.in_base_field())
        throw std::domain_error("norm preimage requires a base-field element");
    long long l = log_[alpha.index()];
    // alpha in F_q* means (q+1) | l, and generator^(l/(q+1)) has norm alpha.
    if (l % (q_ + 1) != 0) throw std::logic_error("base-field log not divisible by q+1");
    return element(exp_[l / (q_ + 1)]);
}

FieldElement Field::geometric_character_sum(long long gamma, long long n) const {
    if (gamma <= 0 || (q2_ - 1) % gamma != 0)
        throw std::invalid_argument("order does not divide q^2 - 1");
    long long r = n % gamma;
    if (r < 0) r += gamma;
    return r == 0 ? from_int(gamma) : zero();
}

FieldElement::FieldElement(FieldPtr field, std::uint32_t index)
    : field_(std::move(field)), index_(index) {}

bool FieldElement::in_base_field() const {
    return index_ < field_->base_order();
}

std::vector<int> FieldElement::coords() const {
    const long long p = field_->characteristic();
    const int e = field_->base_degree();
    std::vector<int> out(2 * e, 0);
    std::uint32_t u = index_ % field_->base_order();
    std::uint32_t w = static_cast<std::uint32_t>(index_ / field_->base_order());
    for (int i = 0; i < e; ++i) {
        out[i] = static_cast<int>(u % p);
        u = static_cast<std::uint32_t>(u / p);
    }
    for (int i = 0; i < e; ++i) {
        out[e + i] = static_cast<int>(w % p);
        w = static_cast<std::uint32_t>(w / p);
    }
    return out;
}

std::string FieldElement::to_string() const {
    std::string s;
    for (int cv : coords()) {
        if (!s.empty()) s += ',';
        s += std::to_string(cv);
    }
    return s;
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field())
        throw std::invalid_argument("elements belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same(*this, rhs);
    return FieldElement(field_, field_->add_idx(index_, rhs.index_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same(*this, rhs);
    return FieldElement(field_, field_->sub_idx(index_, rhs.index_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same(*this, rhs);
    return FieldElement(field_, field_->mul_idx(index_, rhs.index_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    check_same(*this, rhs);
    return FieldElement(field_, field_->mul_idx(index_, field_->inv_idx(rhs.index_)));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_->neg_idx(index_));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    return &field() == &rhs.field() && index_ == rhs.index_;
}

FieldElement FieldElement::inv() const {
    return FieldElement(field_, field_->inv_idx(index_));
}

FieldElement FieldElement::pow(long long e) const {
    return FieldElement(field_, field_->pow_idx(index_, e));
}

FieldElement FieldElement::frobenius() const {
    return FieldElement(field_, field_->frob_idx(index_));
}

}  // namespace grshull
