// Exact arithmetic in GF(q) for prime-power q up to 2^16.
//
// Elements are dense integer codes in [0, q): the code's base-p digits are
// the coefficients of the element written as a polynomial over GF(p), low
// digit = constant term. 0 is the additive identity, 1 the multiplicative
// identity. Multiplication runs on log/antilog tables built once at field
// construction; addition is digitwise mod p (bitwise XOR when p = 2).

#ifndef SPREADCODE_FIELD_HPP
#define SPREADCODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace spreadcode {

using felem = std::uint16_t;

// Polynomial with coefficients in some field, stored low degree first.
// The zero polynomial is any all-zero (or empty) vector.
using Poly = std::vector<felem>;

class Field {
public:
    // Builds GF(p^e) with the canonical modulus: the monic irreducible of
    // degree e over GF(p) with the smallest integer code (coefficients read
    // as base-p digits, constant term in the lowest digit). For e = 1 the
    // modulus is x. Requires p prime, e >= 1, p^e <= 2^16.
    static std::shared_ptr<const Field> make(int p, int e);

    // Same field but with a caller-supplied modulus (monic, degree e,
    // irreducible over GF(p)); used when loading serialized fields.
    static std::shared_ptr<const Field> with_modulus(int p, int e,
                                                     const std::vector<int>& modulus);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    // Modulus coefficients low-to-high, length e+1, leading coefficient 1.
    const std::vector<int>& modulus() const { return modulus_; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;          // a != 0
    felem pow(felem a, long long n) const;  // n >= 0

    bool is_zero(felem a) const { return a == 0; }

    // Base-p digit vector of length e (decode of the element code).
    std::vector<int> digits(felem a) const;
    felem from_digits(const std::vector<int>& d) const;

    // All element codes, 0..q-1.
    std::vector<felem> elements() const;

    static bool same(const Field& a, const Field& b);

private:
    Field() = default;
    void build_tables();

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
    felem generator_ = 0;
    std::vector<felem> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<felem> log_;  // log_[a] for a != 0
};

using FieldPtr = std::shared_ptr<const Field>;

// ---- polynomials over GF(q) ------------------------------------------------

int poly_degree(const Poly& f);  // -1 for the zero polynomial
bool poly_is_zero(const Poly& f);
bool poly_is_monic(const Field& F, const Poly& f);
Poly poly_trim(Poly f);
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
// Remainder of a divided by b; b must be nonzero.
Poly poly_mod(const Field& F, Poly a, const Poly& b);

// True iff monic f of degree >= 1 has no nontrivial monic factor, decided by
// trial division against all monic polynomials of degree <= deg(f)/2.
bool is_irreducible(const Field& F, const Poly& f);

// The monic irreducible of degree k over F with the smallest integer code
// (sum of coefficient codes weighted by q^i, constant term least
// significant). Deterministic; exists for every k >= 1.
Poly find_irreducible(const Field& F, int k);

}  // namespace spreadcode

#endif
