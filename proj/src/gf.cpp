#include "gf.hpp"

#include <algorithm>

namespace tiltbench {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace gfpoly {

static void trim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

static std::vector<uint32_t> polyrem(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p);

std::vector<uint32_t> mod(std::vector<uint32_t> a, const std::vector<uint32_t>& m, uint32_t p) {
    return polyrem(std::move(a), m, p);
}

std::vector<uint32_t> mulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                             const std::vector<uint32_t>& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = uint32_t((c[i + j] + (uint64_t)a[i] * b[j]) % p);
    return mod(std::move(c), m, p);
}

static std::vector<uint32_t> polyrem(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    trim(a);
    size_t db = b.size() - 1;
    uint32_t inv = 1;
    for (uint32_t t = 1; t < p; ++t)
        if (b[db] * t % p == 1) { inv = t; break; }
    while (a.size() >= b.size() && !a.empty()) {
        uint32_t c = uint32_t((uint64_t)a.back() * inv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = uint32_t((a[shift + i] + (uint64_t)c * (p - b[i])) % p);
        trim(a);
    }
    return a;
}

bool is_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
    size_t deg = m.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1 .. deg/2
    for (size_t d = 1; 2 * d <= deg; ++d) {
        // enumerate p^d monic candidates: digits are the low coefficients
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t n = 0; n < count; ++n) {
            std::vector<uint32_t> cand(d + 1, 0);
            uint64_t t = n;
            for (size_t i = 0; i < d; ++i) { cand[i] = uint32_t(t % p); t /= p; }
            cand[d] = 1;
            if (polyrem(m, cand, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace gfpoly

std::shared_ptr<const Gf> Gf::make(const FieldSpec& spec) {
    if (!is_prime_u32(spec.p))
        throw TbError(TbError::Validate, "field characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.e < 1) throw TbError(TbError::Validate, "field extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < spec.e; ++i) {
        q *= spec.p;
        if (q > 65536) throw TbError(TbError::Validate, "field size p^e exceeds 2^16");
    }
    if (spec.e == 1) {
        if (!spec.modulus.empty())
            throw TbError(TbError::Validate, "modulus polynomial given for a prime field");
    } else {
        if (spec.modulus.size() != spec.e + 1)
            throw TbError(TbError::Validate, "modulus must have degree e = " + std::to_string(spec.e));
        for (uint32_t c : spec.modulus)
            if (c >= spec.p) throw TbError(TbError::Validate, "modulus coefficient out of range [0,p)");
        if (spec.modulus.back() != 1)
            throw TbError(TbError::Validate, "modulus must be monic");
        if (!gfpoly::is_irreducible(spec.modulus, spec.p))
            throw TbError(TbError::Validate, "modulus polynomial is reducible over GF(p)");
    }

    auto f = std::shared_ptr<Gf>(new Gf());
    f->spec_ = spec;
    f->p_ = spec.p;
    f->e_ = spec.e;
    f->q_ = (uint32_t)q;

    if (f->q_ <= 256 && f->e_ > 1) {
        f->tab_ = true;
        f->add_tab_.resize((size_t)f->q_ * f->q_);
        f->mul_tab_.resize((size_t)f->q_ * f->q_);
        f->neg_tab_.resize(f->q_);
        for (uint32_t a = 0; a < f->q_; ++a) {
            f->neg_tab_[a] = (uint16_t)f->neg_slow(a);
            for (uint32_t b = 0; b < f->q_; ++b) {
                f->add_tab_[a * f->q_ + b] = (uint16_t)f->add_slow(a, b);
                f->mul_tab_[a * f->q_ + b] = (uint16_t)f->mul_slow(a, b);
            }
        }
    }
    // inverse table via exhaustive search; q <= 2^16 keeps this trivial
    f->inv_tab_.assign(f->q_, 0);
    for (uint32_t a = 1; a < f->q_; ++a) {
        if (f->inv_tab_[a]) continue;
        for (uint32_t b = 1; b < f->q_; ++b)
            if (f->mul(a, b) == 1) {
                f->inv_tab_[a] = (uint16_t)b;
                f->inv_tab_[b] = (uint16_t)a;
                break;
            }
        if (!f->inv_tab_[a]) throw TbError(TbError::Internal, "no inverse found; field tables corrupt");
    }
    return f;
}

std::vector<uint32_t> Gf::digits(uint32_t a) const {
    std::vector<uint32_t> d(e_, 0);
    for (uint32_t i = 0; i < e_; ++i) { d[i] = a % p_; a /= p_; }
    return d;
}

uint32_t Gf::add_slow(uint32_t a, uint32_t b) const {
    uint32_t r = 0, mul = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_) + (b % p_)) % p_ * mul;
        a /= p_; b /= p_; mul *= p_;
    }
    return r;
}

uint32_t Gf::neg_slow(uint32_t a) const {
    uint32_t r = 0, mul = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mul;
        a /= p_; mul *= p_;
    }
    return r;
}

uint32_t Gf::mul_slow(uint32_t a, uint32_t b) const {
    std::vector<uint32_t> pa = digits(a), pb = digits(b);
    auto c = gfpoly::mulmod(pa, pb, spec_.modulus, p_);
    uint32_t r = 0, mul = 1;
    for (size_t i = 0; i < e_; ++i) {
        r += (i < c.size() ? c[i] : 0) * mul;
        mul *= p_;
    }
    return r;
}

// Specialized modular row kernels: the constant modulus lets the compiler
// vectorize the reduction.
template <uint32_t P>
static void axpy_mod(uint16_t* x, const uint16_t* y, uint32_t c, size_t len) {
    for (size_t i = 0; i < len; ++i)
        x[i] = (uint16_t)(((uint32_t)x[i] + c * y[i]) % P);
}

void Gf::axpy_row(uint16_t* x, const uint16_t* y, uint32_t c, size_t len) const {
    if (c == 0) return;
    if (e_ == 1) {
        switch (p_) {
            case 2: axpy_mod<2>(x, y, c, len); return;
            case 3: axpy_mod<3>(x, y, c, len); return;
            case 5: axpy_mod<5>(x, y, c, len); return;
            case 7: axpy_mod<7>(x, y, c, len); return;
            default:
                for (size_t i = 0; i < len; ++i)
                    x[i] = (uint16_t)(((uint64_t)x[i] + (uint64_t)c * y[i]) % p_);
                return;
        }
    }
    if (tab_) {
        const uint16_t* mrow = mul_tab_.data() + (size_t)c * q_;
        for (size_t i = 0; i < len; ++i)
            x[i] = add_tab_[(size_t)x[i] * q_ + mrow[y[i]]];
        return;
    }
    for (size_t i = 0; i < len; ++i) x[i] = (uint16_t)add(x[i], mul(c, y[i]));
}

template <uint32_t P>
static void scale_mod(uint16_t* x, uint32_t c, size_t len) {
    for (size_t i = 0; i < len; ++i) x[i] = (uint16_t)((c * x[i]) % P);
}

void Gf::scale_row(uint16_t* x, uint32_t c, size_t len) const {
    if (c == 1) return;
    if (e_ == 1) {
        switch (p_) {
            case 2: scale_mod<2>(x, c, len); return;
            case 3: scale_mod<3>(x, c, len); return;
            case 5: scale_mod<5>(x, c, len); return;
            case 7: scale_mod<7>(x, c, len); return;
            default:
                for (size_t i = 0; i < len; ++i)
                    x[i] = (uint16_t)(((uint64_t)c * x[i]) % p_);
                return;
        }
    }
    if (tab_) {
        const uint16_t* mrow = mul_tab_.data() + (size_t)c * q_;
        for (size_t i = 0; i < len; ++i) x[i] = mrow[x[i]];
        return;
    }
    for (size_t i = 0; i < len; ++i) x[i] = (uint16_t)mul(c, x[i]);
}

}  // namespace tiltbench
