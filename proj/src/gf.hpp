#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltbench {

// Thrown by every layer; `kind` selects the process exit code at the surface.
struct TbError : std::runtime_error {
    enum Kind { Parse, Validate, Unsupported, Cap, Arg, Internal };
    Kind kind;
    TbError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct FieldSpec {
    uint32_t p = 0;
    uint32_t e = 1;
    // monic irreducible modulus, ascending coefficients, length e+1; empty iff e == 1
    std::vector<uint32_t> modulus;

    bool operator==(const FieldSpec&) const = default;
};

// GF(p^e) with q = p^e <= 2^16.  Scalars are canonical indices in [0, q):
// the base-p digits of the index are the coefficients of the residue
// polynomial, so equality of field elements is equality of indices.
class Gf {
  public:
    // Validates the spec: p prime, modulus monic irreducible (trial division
    // by all monic polynomials of degree <= e/2), q <= 2^16.
    static std::shared_ptr<const Gf> make(const FieldSpec& spec);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (e_ == 1) { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
        return tab_ ? add_tab_[a * q_ + b] : add_slow(a, b);
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t neg(uint32_t a) const {
        if (e_ == 1) return a == 0 ? 0 : p_ - a;
        return tab_ ? neg_tab_[a] : neg_slow(a);
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (e_ == 1) return uint32_t((uint64_t(a) * b) % p_);
        return tab_ ? mul_tab_[a * q_ + b] : mul_slow(a, b);
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw TbError(TbError::Arg, "division by zero");
        return inv_tab_[a];
    }
    // embeds n mod p into the prime subfield
    uint32_t from_int(long long n) const {
        long long r = n % (long long)p_;
        if (r < 0) r += p_;
        return (uint32_t)r;
    }

    // digits of a scalar as polynomial coefficients, ascending, length e
    std::vector<uint32_t> digits(uint32_t a) const;
    std::string scalar_str(uint32_t a) const { return std::to_string(a); }

    // fused row update x[i] <- x[i] + c*y[i], the elimination hot path
    void axpy_row(uint16_t* x, const uint16_t* y, uint32_t c, size_t len) const;
    // x[i] <- c*x[i]
    void scale_row(uint16_t* x, uint32_t c, size_t len) const;

    bool operator==(const Gf& o) const { return spec_ == o.spec_; }

  private:
    Gf() = default;
    uint32_t add_slow(uint32_t a, uint32_t b) const;
    uint32_t neg_slow(uint32_t a) const;
    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    FieldSpec spec_;
    uint32_t p_ = 0, e_ = 1, q_ = 0;
    bool tab_ = false;                 // full add/mul tables present (q <= 256)
    std::vector<uint16_t> add_tab_, mul_tab_;
    std::vector<uint16_t> neg_tab_, inv_tab_;
};

using GfPtr = std::shared_ptr<const Gf>;

bool is_prime_u32(uint32_t n);

// polynomial helpers over GF(p), ascending coefficient vectors
namespace gfpoly {
std::vector<uint32_t> mod(std::vector<uint32_t> a, const std::vector<uint32_t>& m, uint32_t p);
std::vector<uint32_t> mulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                             const std::vector<uint32_t>& m, uint32_t p);
bool is_irreducible(const std::vector<uint32_t>& m, uint32_t p);
}  // namespace gfpoly

}  // namespace tiltbench
