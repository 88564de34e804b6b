#include "rep.hpp"

#include <random>

namespace tiltbench {

Rep Rep::checked(AlgebraPtr alg, std::vector<Mat> action, bool structure_check) {
    if (action.size() != alg->dim) throw TbError(TbError::Validate, "module needs one action matrix per basis element");
    Rep r(std::move(alg), std::move(action));
    for (auto& m : r.act_)
        if (m.rows() != r.dim_ || m.cols() != r.dim_)
            throw TbError(TbError::Validate, "action matrices must be square of equal size");
    if (!r.unit_acts_as_identity())
        throw TbError(TbError::Validate, "unit of the algebra does not act as the identity");
    if (structure_check && !r.respects_structure())
        throw TbError(TbError::Validate, "action does not respect the structure constants");
    return r;
}

Mat Rep::act_elem(std::span<const uint16_t> coords) const {
    Mat r(alg_->field, dim_, dim_);
    const Gf& f = *alg_->field;
    for (size_t b = 0; b < alg_->dim; ++b)
        if (coords[b])
            for (size_t i = 0; i < dim_; ++i)
                f.axpy_row(r.row(i), act_[b].row(i), coords[b], dim_);
    return r;
}

bool Rep::unit_acts_as_identity() const {
    return act_elem(alg_->one) == Mat::identity(alg_->field, dim_);
}

bool Rep::respects_structure() const {
    for (size_t i = 0; i < alg_->dim; ++i)
        for (size_t j = 0; j < alg_->dim; ++j) {
            Mat lhs = act_[i] * act_[j];
            Mat rhs = act_elem(alg_->prod(i, j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

Rep Rep::direct_sum(const Rep& o) const {
    std::vector<Mat> action;
    for (size_t b = 0; b < alg_->dim; ++b) {
        Mat m(alg_->field, dim_ + o.dim_, dim_ + o.dim_);
        m.paste(0, 0, act_[b]);
        m.paste(dim_, dim_, o.act_[b]);
        action.push_back(std::move(m));
    }
    return Rep(alg_, std::move(action));
}

HomSpace hom_space(const Rep& m, const Rep& n, bool all_basis) {
    if (m.alg() != n.alg()) throw TbError(TbError::Arg, "hom space: modules over different algebras");
    const Algebra& a = *m.alg();
    const Gf& f = *a.field;
    std::vector<size_t> eqs;
    if (all_basis)
        for (size_t b = 0; b < a.dim; ++b) eqs.push_back(b);
    else
        eqs = generating_elements(a);
    size_t ms = m.dim(), nt = n.dim();
    HomSpace h;
    if (ms == 0 || nt == 0) {
        h.flat = RowBasis{Mat(a.field, 0, ms * nt), {}};
        return h;
    }
    // variables F[k][j] (flattened k*nt+j); constraints rho_m(g)F = F rho_n(g)
    Mat sys(a.field, ms * nt, eqs.size() * ms * nt);
    for (size_t gi = 0; gi < eqs.size(); ++gi) {
        const Mat& gm = m.act(eqs[gi]);
        const Mat& gn = n.act(eqs[gi]);
        size_t base = gi * ms * nt;
        for (size_t i = 0; i < ms; ++i)
            for (size_t j = 0; j < nt; ++j) {
                size_t c = base + i * nt + j;
                for (size_t k = 0; k < ms; ++k)
                    if (gm.at(i, k)) sys.set(k * nt + j, c, gm.at(i, k));
                for (size_t l = 0; l < nt; ++l)
                    if (gn.at(l, j)) {
                        size_t v = i * nt + l;
                        sys.set(v, c, f.sub(sys.at(v, c), gn.at(l, j)));
                    }
            }
    }
    h.flat = left_kernel(sys);
    for (size_t r = 0; r < h.flat.dim(); ++r) {
        Mat fm(a.field, ms, nt);
        for (size_t i = 0; i < ms; ++i)
            for (size_t j = 0; j < nt; ++j) fm.set(i, j, h.flat.basis.at(r, i * nt + j));
        h.basis.push_back(std::move(fm));
    }
    return h;
}

std::vector<uint16_t> hom_coords(const HomSpace& h, const Mat& fmat) {
    Mat flat(fmat.field(), 1, fmat.rows() * fmat.cols());
    for (size_t i = 0; i < fmat.rows(); ++i)
        for (size_t j = 0; j < fmat.cols(); ++j) flat.set(0, i * fmat.cols() + j, fmat.at(i, j));
    auto c = h.flat.express(flat, true);
    if (!c) throw TbError(TbError::Internal, "matrix is not in the hom space");
    std::vector<uint16_t> out(h.dim());
    for (size_t k = 0; k < h.dim(); ++k) out[k] = (uint16_t)c->at(0, k);
    return out;
}

Span radical_span(const Rep& m) {
    Span s(m.alg()->field, m.dim());
    for (size_t r : m.alg()->rad) {
        const Mat& a = m.act(r);
        for (size_t i = 0; i < m.dim(); ++i) s.add_row(a.row(i));
    }
    return s;
}

size_t head_dim(const Rep& m) { return m.dim() - radical_span(m).dim(); }

size_t socle_dim(const Rep& m) {
    if (m.alg()->rad.empty()) return m.dim();
    Mat stack(m.alg()->field, m.dim(), m.dim() * m.alg()->rad.size());
    size_t c0 = 0;
    for (size_t r : m.alg()->rad) {
        stack.paste(0, c0, m.act(r));
        c0 += m.dim();
    }
    return m.dim() - stack.rank();
}

RowBasis socle_basis(const Rep& m) {
    if (m.alg()->rad.empty()) return RowBasis{Mat::identity(m.alg()->field, m.dim()), {}};
    Mat stack(m.alg()->field, m.dim(), m.dim() * m.alg()->rad.size());
    size_t c0 = 0;
    for (size_t r : m.alg()->rad) {
        stack.paste(0, c0, m.act(r));
        c0 += m.dim();
    }
    return left_kernel(stack);
}

std::vector<size_t> loewy_layers(const Rep& m) {
    if (m.dim() == 0) return {};
    std::vector<size_t> powdims;  // dim of m J^s, s = 0, 1, ...
    powdims.push_back(m.dim());
    Span cur = radical_span(m);
    std::vector<std::vector<uint16_t>> frontier;
    {
        Span probe(m.alg()->field, m.dim());
        for (size_t r : m.alg()->rad) {
            const Mat& a = m.act(r);
            for (size_t i = 0; i < m.dim(); ++i) {
                std::vector<uint16_t> v(a.row(i), a.row(i) + m.dim());
                if (probe.add(v)) frontier.push_back(std::move(v));
            }
        }
    }
    while (cur.dim() > 0) {
        powdims.push_back(cur.dim());
        Span next(m.alg()->field, m.dim());
        std::vector<std::vector<uint16_t>> nf;
        for (auto& v : frontier)
            for (size_t r : m.alg()->rad) {
                Mat vm(m.alg()->field, 1, m.dim());
                std::copy(v.begin(), v.end(), vm.row(0));
                Mat w = vm * m.act(r);
                std::vector<uint16_t> wv(w.row(0), w.row(0) + m.dim());
                if (next.add(wv)) nf.push_back(std::move(wv));
            }
        if (next.dim() >= cur.dim()) break;  // not nilpotent: defensive stop
        frontier = std::move(nf);
        cur = std::move(next);
        if (cur.dim() == 0) break;
    }
    std::vector<size_t> layers;
    for (size_t s = 0; s + 1 < powdims.size(); ++s) layers.push_back(powdims[s] - powdims[s + 1]);
    if (powdims.back() > 0 && powdims.size() > 1) layers.push_back(powdims.back());
    if (powdims.size() == 1) layers.push_back(powdims[0]);
    return layers;
}

std::vector<size_t> head_isotypic_dims(const Rep& m) {
    const Algebra& a = *m.alg();
    std::vector<size_t> mults(a.simple_count(), 0);
    Span occupied = radical_span(m);
    for (size_t i = 0; i < a.simple_count(); ++i) {
        const Mat& ei = m.act(a.idem[i]);
        for (size_t r = 0; r < m.dim(); ++r)
            if (occupied.add_row(ei.row(r))) ++mults[i];
    }
    return mults;
}

std::vector<size_t> composition_multiplicities(const Rep& m) {
    // multiplicity of S_i across all layers = dim m*e_i
    const Algebra& a = *m.alg();
    std::vector<size_t> mults(a.simple_count(), 0);
    for (size_t i = 0; i < a.simple_count(); ++i) mults[i] = m.act(a.idem[i]).rank();
    return mults;
}

Rep restrict_to(const Rep& ambient, const RowBasis& sub, bool verify) {
    std::vector<Mat> action;
    action.reserve(ambient.alg()->dim);
    for (size_t b = 0; b < ambient.alg()->dim; ++b) {
        Mat img = sub.basis * ambient.act(b);
        auto coords = sub.express(img, verify);
        if (!coords) throw TbError(TbError::Validate, "claimed submodule is not invariant under the action");
        action.push_back(std::move(*coords));
    }
    return Rep(ambient.alg(), std::move(action));
}

Rep quotient_by(const Rep& m, const RowBasis& sub) {
    // complement coordinates: columns outside sub's coordinate columns
    std::vector<bool> used(m.dim(), false);
    for (size_t c : sub.coordcols) used[c] = true;
    std::vector<size_t> rest;
    for (size_t c = 0; c < m.dim(); ++c)
        if (!used[c]) rest.push_back(c);
    const Gf& f = *m.alg()->field;
    // projection: e_c -> e_c - (coords of e_c in sub)*sub, read off the rest columns
    auto project_rows = [&](const Mat& rows) {
        Mat out(m.alg()->field, rows.rows(), rest.size());
        for (size_t i = 0; i < rows.rows(); ++i) {
            std::vector<uint16_t> v(rows.row(i), rows.row(i) + rows.cols());
            for (size_t k = 0; k < sub.dim(); ++k) {
                uint32_t c = v[sub.coordcols[k]];
                if (c) f.axpy_row(v.data(), sub.basis.row(k), f.neg(c), rows.cols());
            }
            for (size_t j = 0; j < rest.size(); ++j) out.set(i, j, v[rest[j]]);
        }
        return out;
    };
    std::vector<Mat> action;
    for (size_t b = 0; b < m.alg()->dim; ++b) {
        // action on the complement representatives
        Mat reps(m.alg()->field, rest.size(), m.dim());
        for (size_t j = 0; j < rest.size(); ++j) reps.set(j, rest[j], 1);
        action.push_back(project_rows(reps * m.act(b)));
    }
    return Rep(m.alg(), std::move(action));
}

// invertible-point search shared by the isomorphism and locality tests
namespace {

struct PointSearch {
    bool exhaustive;
    size_t trials;
};

PointSearch search_policy(const Gf& f, size_t hdim) {
    double logpts = (double)hdim * std::log10((double)f.q());
    if (logpts <= 6.0) return {true, 0};
    return {false, 100000};
}

}  // namespace

IsoResult is_isomorphic(const Rep& m, const Rep& n) {
    if (m.alg() != n.alg()) throw TbError(TbError::Arg, "isomorphism test: different algebras");
    if (m.dim() != n.dim())
        return {IsoResult::No,
                "dimension mismatch: " + std::to_string(m.dim()) + " vs " + std::to_string(n.dim()),
                std::nullopt};
    if (m.dim() == 0) return {IsoResult::Yes, "both zero", Mat(m.alg()->field, 0, 0)};
    HomSpace h = hom_space(m, n);
    if (h.dim() == 0) return {IsoResult::No, "hom space is zero", std::nullopt};
    // cheap rank certificates before searching
    {
        HomSpace hb = hom_space(n, m);
        if (hb.dim() != h.dim())
            return {IsoResult::No, "hom-space dimensions preclude: dim Hom(m,n) != dim Hom(n,m)", std::nullopt};
    }
    const Gf& f = *m.alg()->field;
    auto combo = [&](const std::vector<uint32_t>& c) {
        Mat fm(m.alg()->field, m.dim(), n.dim());
        for (size_t k = 0; k < h.dim(); ++k)
            if (c[k])
                for (size_t i = 0; i < m.dim(); ++i)
                    f.axpy_row(fm.row(i), h.basis[k].row(i), c[k], n.dim());
        return fm;
    };
    PointSearch pol = search_policy(f, h.dim());
    if (pol.exhaustive) {
        std::vector<uint32_t> c(h.dim(), 0);
        while (true) {
            size_t k = 0;
            while (k < h.dim() && c[k] + 1 == f.q()) { c[k] = 0; ++k; }
            if (k == h.dim()) break;
            ++c[k];
            Mat fm = combo(c);
            if (fm.rank() == m.dim())
                return {IsoResult::Yes, "invertible intertwiner found (exhaustive search)", fm};
        }
        return {IsoResult::No, "no invertible point in the hom space (exhaustive search)", std::nullopt};
    }
    std::mt19937_64 rng(0x150c0de5u);
    for (size_t t = 0; t < pol.trials; ++t) {
        std::vector<uint32_t> c(h.dim());
        for (auto& x : c) x = (uint32_t)(rng() % f.q());
        Mat fm = combo(c);
        if (fm.rank() == m.dim())
            return {IsoResult::Yes, "invertible intertwiner found (seeded random search)", fm};
    }
    return {IsoResult::Undecided, "random search found no invertible intertwiner; result undecided", std::nullopt};
}

bool is_indecomposable(const Rep& m, std::string* note) {
    if (m.dim() == 0) return false;
    HomSpace ends = hom_space(m, m);
    const Gf& f = *m.alg()->field;
    auto combo = [&](const std::vector<uint32_t>& c) {
        Mat fm(m.alg()->field, m.dim(), m.dim());
        for (size_t k = 0; k < ends.dim(); ++k)
            if (c[k])
                for (size_t i = 0; i < m.dim(); ++i)
                    f.axpy_row(fm.row(i), ends.basis[k].row(i), c[k], m.dim());
        return fm;
    };
    auto is_nontrivial_idem = [&](const Mat& fm) {
        if (fm.is_zero()) return false;
        if (fm == Mat::identity(m.alg()->field, m.dim())) return false;
        return fm * fm == fm;
    };
    PointSearch pol = search_policy(f, ends.dim());
    if (pol.exhaustive) {
        std::vector<uint32_t> c(ends.dim(), 0);
        while (true) {
            size_t k = 0;
            while (k < ends.dim() && c[k] + 1 == f.q()) { c[k] = 0; ++k; }
            if (k == ends.dim()) break;
            ++c[k];
            if (is_nontrivial_idem(combo(c))) {
                if (note) *note = "nontrivial idempotent endomorphism found";
                return false;
            }
        }
        if (note) *note = "endomorphism ring has no nontrivial idempotent (exhaustive)";
        return true;
    }
    std::mt19937_64 rng(0xdec0de01u);
    for (size_t t = 0; t < pol.trials; ++t) {
        std::vector<uint32_t> c(ends.dim());
        for (auto& x : c) x = (uint32_t)(rng() % f.q());
        if (is_nontrivial_idem(combo(c))) {
            if (note) *note = "nontrivial idempotent endomorphism found";
            return false;
        }
    }
    if (note) *note = "no nontrivial idempotent in 10^5 samples (not exhaustive)";
    return true;
}

}  // namespace tiltbench
