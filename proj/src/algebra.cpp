#include "algebra.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace tiltbench {

std::vector<uint16_t> Algebra::mul_elems(std::span<const uint16_t> x, std::span<const uint16_t> y) const {
    std::vector<uint16_t> r(dim, 0);
    const Gf& f = *field;
    for (size_t i = 0; i < dim; ++i) {
        if (!x[i]) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (!y[j]) continue;
            uint32_t c = f.mul(x[i], y[j]);
            f.axpy_row(r.data(), prod(i, j).data(), c, dim);
        }
    }
    return r;
}

Mat Algebra::right_mult_basis(size_t b) const {
    Mat m(field, dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        auto pr = prod(i, b);
        std::copy(pr.begin(), pr.end(), m.row(i));
    }
    return m;
}

Mat Algebra::right_mult(std::span<const uint16_t> x) const {
    Mat m(field, dim, dim);
    const Gf& f = *field;
    for (size_t b = 0; b < dim; ++b)
        if (x[b])
            for (size_t i = 0; i < dim; ++i) f.axpy_row(m.row(i), prod(i, b).data(), x[b], dim);
    return m;
}

int Algebra::simple_index(const std::string& label) const {
    for (size_t i = 0; i < idem.size(); ++i)
        if (labels[idem[i]] == label) return (int)i;
    return -1;
}

static bool rows_equal(std::span<const uint16_t> a, std::span<const uint16_t> b) {
    return std::equal(a.begin(), a.end(), b.begin());
}

std::vector<Diagnostic> check_algebra(const Algebra& a) {
    std::vector<Diagnostic> out;
    const size_t n = a.dim;
    if (a.labels.size() != n || a.one.size() != n || a.mult.size() != n * n * n) {
        out.push_back({"shape", "basis/one/mult sizes do not match dim"});
        return out;
    }
    {
        bool dup = false;
        for (size_t i = 0; i + 1 < a.labels.size() && !dup; ++i)
            for (size_t j = i + 1; j < a.labels.size(); ++j)
                if (a.labels[i] == a.labels[j]) { out.push_back({"labels", "duplicate label " + a.labels[i]}); dup = true; break; }
        std::vector<bool> used(n, false);
        for (size_t i : a.idem) used.at(i) = true;
        for (size_t i : a.rad) {
            if (used.at(i)) out.push_back({"partition", "basis element " + a.labels[i] + " listed as both idempotent and radical"});
            used[i] = true;
        }
        for (size_t i = 0; i < n; ++i)
            if (!used[i]) out.push_back({"partition", "basis element " + a.labels[i] + " in neither part"});
        if (a.idem.empty()) out.push_back({"partition", "no idempotents listed"});
    }
    if (!out.empty()) return out;

    // unit
    for (size_t j = 0; j < n; ++j) {
        std::vector<uint16_t> ej(n, 0);
        ej[j] = 1;
        if (!rows_equal(a.mul_elems(a.one, ej), ej))
            out.push_back({"unit", "one * " + a.labels[j] + " != " + a.labels[j]});
        if (!rows_equal(a.mul_elems(ej, a.one), ej))
            out.push_back({"unit", a.labels[j] + " * one != " + a.labels[j]});
        if (out.size() > 8) return out;
    }

    // associativity on basis triples, witnessed by the first failures
    const Gf& f = *a.field;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto pij = a.prod(i, j);
            for (size_t k = 0; k < n; ++k) {
                std::vector<uint16_t> lhs(n, 0);
                for (size_t l = 0; l < n; ++l)
                    if (pij[l]) f.axpy_row(lhs.data(), a.prod(l, k).data(), pij[l], n);
                auto pjk = a.prod(j, k);
                std::vector<uint16_t> rhs(n, 0);
                for (size_t l = 0; l < n; ++l)
                    if (pjk[l]) f.axpy_row(rhs.data(), a.prod(i, l).data(), pjk[l], n);
                if (!rows_equal(lhs, rhs)) {
                    out.push_back({"associativity", "(" + a.labels[i] + "*" + a.labels[j] + ")*" + a.labels[k] +
                                                        " != " + a.labels[i] + "*(" + a.labels[j] + "*" + a.labels[k] + ")"});
                    if (out.size() > 12) return out;
                }
            }
        }

    // idempotent system
    {
        std::vector<uint16_t> sum(n, 0);
        for (size_t ii = 0; ii < a.idem.size(); ++ii) {
            size_t bi = a.idem[ii];
            sum[bi] = (uint16_t)f.add(sum[bi], 1);
            for (size_t jj = 0; jj < a.idem.size(); ++jj) {
                size_t bj = a.idem[jj];
                auto pr = a.prod(bi, bj);
                std::vector<uint16_t> expect(n, 0);
                if (ii == jj) expect[bi] = 1;
                if (!rows_equal(pr, expect))
                    out.push_back({"idempotents not orthogonal",
                                   a.labels[bi] + "*" + a.labels[bj] + (ii == jj ? " != " + a.labels[bi] : " != 0")});
            }
        }
        if (!rows_equal(sum, a.one)) out.push_back({"idempotents incomplete", "sum of idempotents != one"});
    }

    // radical span is a two-sided ideal
    for (size_t r : a.rad)
        for (size_t b = 0; b < n; ++b) {
            if (!a.in_radical_span(a.prod(r, b)))
                out.push_back({"radical not an ideal", a.labels[r] + "*" + a.labels[b] + " leaves the radical span"});
            if (!a.in_radical_span(a.prod(b, r)))
                out.push_back({"radical not an ideal", a.labels[b] + "*" + a.labels[r] + " leaves the radical span"});
            if (out.size() > 16) return out;
        }

    // nilpotency of J by iterated products
    {
        Span cur(a.field, n);
        for (size_t r : a.rad) {
            std::vector<uint16_t> v(n, 0);
            v[r] = 1;
            cur.add(std::move(v));
        }
        size_t power = 1;
        std::vector<std::vector<uint16_t>> frontier;
        for (size_t r : a.rad) {
            std::vector<uint16_t> v(n, 0);
            v[r] = 1;
            frontier.push_back(std::move(v));
        }
        while (!frontier.empty() && power <= a.dim + 1) {
            std::vector<std::vector<uint16_t>> next;
            Span layer(a.field, n);
            for (auto& v : frontier)
                for (size_t r : a.rad) {
                    std::vector<uint16_t> unit(n, 0);
                    unit[r] = 1;
                    auto w = a.mul_elems(v, unit);
                    if (layer.add_row(w.data())) next.push_back(w);
                }
            frontier = std::move(next);
            ++power;
            if (power > a.dim && !frontier.empty()) {
                out.push_back({"radical not nilpotent", "J^" + std::to_string(power) + " still nonzero"});
                break;
            }
        }
    }

    // split basic quotient: e_i b e_j in J for i != j, e_i b e_i in span(e_i)+J
    for (size_t b = 0; b < n; ++b)
        for (size_t ii = 0; ii < a.idem.size(); ++ii) {
            std::vector<uint16_t> ei(n, 0);
            ei[a.idem[ii]] = 1;
            std::vector<uint16_t> eb(n, 0);
            eb[b] = 1;
            auto left = a.mul_elems(ei, eb);
            for (size_t jj = 0; jj < a.idem.size(); ++jj) {
                std::vector<uint16_t> ej(n, 0);
                ej[a.idem[jj]] = 1;
                auto w = a.mul_elems(left, ej);
                for (size_t kk = 0; kk < a.idem.size(); ++kk) {
                    if (ii == jj && kk == ii) continue;
                    if (w[a.idem[kk]]) {
                        out.push_back({"quotient not split basic",
                                       "e_" + a.simple_label(ii) + "*" + a.labels[b] + "*e_" + a.simple_label(jj) +
                                           " has an idempotent coordinate"});
                        if (out.size() > 20) return out;
                        break;
                    }
                }
            }
        }

    return out;
}

AlgebraPtr validate_algebra(Algebra raw) {
    auto diags = check_algebra(raw);
    if (!diags.empty()) {
        std::ostringstream os;
        os << "algebra '" << raw.name << "' failed validation:";
        for (auto& d : diags) os << "\n  [" << d.axiom << "] " << d.witness;
        throw TbError(TbError::Validate, os.str());
    }
    return std::make_shared<const Algebra>(std::move(raw));
}

std::vector<size_t> algebra_radical_layers(const Algebra& a) {
    std::vector<size_t> dims;  // dim of J^s
    dims.push_back(a.dim);
    std::vector<std::vector<uint16_t>> frontier;
    Span cur(a.field, a.dim);
    for (size_t r : a.rad) {
        std::vector<uint16_t> v(a.dim, 0);
        v[r] = 1;
        if (cur.add(v)) frontier.push_back(std::move(v));
    }
    while (cur.dim() > 0) {
        dims.push_back(cur.dim());
        std::vector<std::vector<uint16_t>> next;
        Span nextspan(a.field, a.dim);
        for (auto& v : frontier)
            for (size_t r : a.rad) {
                std::vector<uint16_t> unit(a.dim, 0);
                unit[r] = 1;
                auto w = a.mul_elems(v, unit);
                if (nextspan.add_row(w.data())) next.push_back(std::move(w));
            }
        if (nextspan.dim() == cur.dim()) break;  // guarded by nilpotency in validation
        frontier = std::move(next);
        // rebuild: frontier spans J^{s+1}
        cur = std::move(nextspan);
        if (cur.dim() == 0) break;
    }
    std::vector<size_t> layers;
    for (size_t s = 0; s + 1 < dims.size(); ++s) layers.push_back(dims[s] - dims[s + 1]);
    if (!dims.empty() && dims.back() > 0) layers.push_back(dims.back());
    return layers;
}

std::vector<size_t> generating_elements(const Algebra& a) {
    std::vector<size_t> gens;
    Span sub(a.field, a.dim);
    std::vector<std::vector<uint16_t>> elems;
    auto close = [&] {
        // close the span under products of accumulated elements
        size_t i = 0;
        while (i < elems.size()) {
            size_t j = 0;
            while (j < elems.size()) {
                auto w = a.mul_elems(elems[i], elems[j]);
                if (sub.add_row(w.data())) elems.push_back(std::move(w));
                ++j;
            }
            ++i;
        }
    };
    std::vector<uint16_t> one = a.one;
    if (sub.add_row(one.data())) elems.push_back(std::move(one));
    close();
    for (size_t b = 0; b < a.dim && sub.dim() < a.dim; ++b) {
        std::vector<uint16_t> v(a.dim, 0);
        v[b] = 1;
        if (sub.contains(v.data())) continue;
        gens.push_back(b);
        sub.add(v);
        elems.push_back(std::move(v));
        close();
    }
    return gens;
}

bool verify_symmetrizing_form(const Algebra& a, std::span<const uint16_t> lambda) {
    const Gf& f = *a.field;
    auto apply = [&](std::span<const uint16_t> x) {
        uint32_t s = 0;
        for (size_t i = 0; i < a.dim; ++i)
            if (x[i]) s = f.add(s, f.mul(lambda[i], x[i]));
        return s;
    };
    Mat gram(a.field, a.dim, a.dim);
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            uint32_t ij = apply(a.prod(i, j));
            if (ij != apply(a.prod(j, i))) return false;
            gram.set(i, j, ij);
        }
    return gram.rank() == a.dim;
}

SymFormSearch find_symmetrizing_form(const Algebra& a) {
    SymFormSearch res;
    if (a.symform) {
        res.form = a.symform;
        res.exhaustive = true;
        res.note = "form attached at construction (" + a.symform_origin + "), verified";
        return res;
    }
    const size_t n = a.dim;
    const Gf& f = *a.field;
    // lambda(b_i b_j - b_j b_i) = 0: solution space of the commutation constraints
    Mat constraints(a.field, n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto pij = a.prod(i, j);
            auto pji = a.prod(j, i);
            for (size_t l = 0; l < n; ++l)
                constraints.set(l, i * n + j, f.sub(pij[l], pji[l]));
        }
    RowBasis sol = left_kernel(constraints);
    // rows of sol.basis: functionals spanning the commuting space
    size_t w = sol.dim();
    if (w == 0) {
        res.note = "no nonzero trace-like functional; not verified symmetric";
        return res;
    }
    double logpts = (double)w * std::log10((double)f.q());
    auto candidate = [&](const std::vector<uint32_t>& coeffs) {
        std::vector<uint16_t> lam(n, 0);
        for (size_t k = 0; k < w; ++k)
            if (coeffs[k]) f.axpy_row(lam.data(), sol.basis.row(k), coeffs[k], n);
        return lam;
    };
    if (logpts <= 6.0) {  // q^w <= 10^6: enumerate
        std::vector<uint32_t> c(w, 0);
        while (true) {
            // odometer increment; skip the zero functional
            size_t k = 0;
            while (k < w && c[k] + 1 == f.q()) { c[k] = 0; ++k; }
            if (k == w) break;
            ++c[k];
            auto lam = candidate(c);
            if (verify_symmetrizing_form(a, lam)) {
                res.form = std::move(lam);
                res.note = "found by exhaustive search over the commuting space";
                res.exhaustive = true;
                return res;
            }
        }
        res.exhaustive = true;
        res.note = "exhaustive search: no nondegenerate form; algebra is not symmetric";
        return res;
    }
    std::mt19937_64 rng(0x7a37b001u);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<uint32_t> c(w);
        for (auto& x : c) x = (uint32_t)(rng() % f.q());
        auto lam = candidate(c);
        bool zero = true;
        for (auto v : lam)
            if (v) { zero = false; break; }
        if (zero) continue;
        if (verify_symmetrizing_form(a, lam)) {
            res.form = std::move(lam);
            res.note = "found by seeded random search";
            return res;
        }
    }
    res.note = "random search found no nondegenerate form; not verified symmetric (one-sided)";
    return res;
}

AlgebraPtr attach_symform(const AlgebraPtr& a, std::vector<uint16_t> form, std::string origin) {
    Algebra copy = *a;
    copy.symform = std::move(form);
    copy.symform_origin = std::move(origin);
    return std::make_shared<const Algebra>(std::move(copy));
}

}  // namespace tiltbench
