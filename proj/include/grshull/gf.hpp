#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace grshull {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// One element of F_{q^2}, addressed by its canonical enumeration index.
// The index encodes the prime-field coordinate vector in base p, low degree
// first, with the F_q coordinate of 1 in the least significant digits and the
// coordinate of X (the adjoined quadratic root) above it. Elements are
// immutable; all operators are pure and require both operands to belong to
// the same field instance.
class FieldElement {
public:
    FieldElement(FieldPtr field, std::uint32_t index);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::uint32_t index() const { return index_; }

    bool is_zero() const { return index_ == 0; }
    // Whether the element lies in the base field F_q (the Frobenius-fixed set).
    bool in_base_field() const;

    // Prime-field coordinates, low degree first, length 2e for q = p^e.
    std::vector<int> coords() const;
    // Coordinates rendered as comma-separated integers.
    std::string to_string() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    FieldElement inv() const;
    FieldElement pow(long long e) const;
    // The field automorphism x -> x^q generating Gal(F_{q^2}/F_q).
    FieldElement frobenius() const;

private:
    FieldPtr field_;
    std::uint32_t index_;
};

// The quadratic extension pair F_q inside F_{q^2}, built deterministically:
// F_q = F_p[Y]/(g) with g the lexicographically smallest monic irreducible of
// degree e (coefficients compared low degree first), F_{q^2} = F_q[X]/(m)
// with m the lexicographically smallest monic irreducible quadratic over F_q
// (constant coefficient major), and the distinguished generator the smallest
// element of multiplicative order q^2 - 1 in the enumeration. Instances are
// cached per q, so equal q always yields the same object.
class Field : public std::enable_shared_from_this<Field> {
public:
    // Factory; throws std::invalid_argument unless q is a prime power with
    // 2 <= q <= 1000.
    static FieldPtr make(long long q);

    long long characteristic() const { return p_; }
    int base_degree() const { return e_; }       // q = p^e
    long long base_order() const { return q_; }  // |F_q|
    long long order() const { return q2_; }      // |F_{q^2}|

    FieldElement zero() const;
    FieldElement one() const;
    // The distinguished primitive element of F_{q^2}*.
    FieldElement generator() const;
    // Element by enumeration index, 0 <= index < q^2.
    FieldElement element(std::uint32_t index) const;
    // The image of an integer under Z -> F_{q^2}, i.e. n * 1.
    FieldElement from_int(long long n) const;

    // zeta_t = generator^((q^2-1)/t); throws unless t divides q^2 - 1.
    FieldElement root_of_unity(long long t) const;

    // A deterministic v with v^(q+1) = alpha, for alpha in F_q*: writing
    // alpha = generator^l forces (q+1) | l, and v = generator^(l/(q+1)).
    // Throws when alpha is zero or outside the base field.
    FieldElement norm_preimage(const FieldElement& alpha) const;

    // sum_{i=0}^{gamma-1} zeta_gamma^(i*n): gamma * 1 when gamma | n, else 0.
    FieldElement geometric_character_sum(long long gamma, long long n) const;

    // Base-field modulus g over F_p (low degree first, monic, length e+1).
    const std::vector<int>& base_modulus() const { return base_mod_; }
    // Quadratic modulus m over F_q as base-field indices {m0, m1, 1}.
    const std::vector<std::uint32_t>& ext_modulus() const { return ext_mod_; }

    // Raw index arithmetic used by FieldElement and the linear algebra paths.
    std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_idx(std::uint32_t a) const;
    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_idx(std::uint32_t a) const;
    std::uint32_t pow_idx(std::uint32_t a, long long e) const;
    std::uint32_t frob_idx(std::uint32_t a) const;

private:
    explicit Field(long long q);

    long long p_ = 0;
    int e_ = 0;
    long long q_ = 0;
    long long q2_ = 0;
    std::uint32_t gen_ = 0;
    std::vector<int> base_mod_;
    std::vector<std::uint32_t> ext_mod_;
    // Base-field operation tables, q x q, row-major.
    std::vector<std::uint32_t> badd_, bmul_;
    std::vector<std::uint32_t> bneg_, binv_;
    // Discrete log tables for F_{q^2}*: exp_[i] = generator^i.
    std::vector<std::uint32_t> exp_, log_;
};

// Convenience factory mirroring Field::make.
FieldPtr make_fields(long long q);

}  // namespace grshull
