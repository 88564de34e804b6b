#include "projsys.hpp"

namespace tiltbench {

ProjSystem::ProjSystem(AlgebraPtr a) : alg_(std::move(a)) {
    const Algebra& alg = *alg_;
    const size_t nI = alg.simple_count();
    // P_i = e_i A: span of the rows of the right-regular action of e_i
    Rep regular = [&] {
        std::vector<Mat> action;
        for (size_t b = 0; b < alg.dim; ++b) action.push_back(alg.right_mult_basis(b));
        return Rep(alg_, std::move(action));
    }();
    for (size_t i = 0; i < nI; ++i) {
        Mat rows(alg.field, alg.dim, alg.dim);
        const Mat& ei = regular.act(alg.idem[i]);
        for (size_t r = 0; r < alg.dim; ++r) std::copy(ei.row(r), ei.row(r) + alg.dim, rows.row(r));
        RowBasis basis = row_space(rows);
        proj_.push_back(restrict_to(regular, basis, /*verify=*/true));
        proj_basis_.push_back(std::move(basis));
    }
    for (size_t i = 0; i < nI; ++i) proj_rad_.push_back(radical_span(proj_[i]).to_basis());
    hom_.resize(nI);
    cartan_.assign(nI, std::vector<int64_t>(nI, 0));
    cartan_layers_.assign(nI, std::vector<int64_t>(nI, 0));
    for (size_t i = 0; i < nI; ++i) {
        hom_[i].resize(nI);
        for (size_t j = 0; j < nI; ++j) {
            hom_[i][j] = hom_space(proj_[i], proj_[j]);
            cartan_[i][j] = (int64_t)hom_[i][j].dim();
        }
    }
    // cross-check: multiplicity of S_i in P_j counted layer by layer
    for (size_t j = 0; j < nI; ++j) {
        Rep cur = proj_[j];
        while (cur.dim() > 0) {
            auto mults = head_isotypic_dims(cur);
            for (size_t i = 0; i < nI; ++i) cartan_layers_[i][j] += (int64_t)mults[i];
            RowBasis radb = radical_span(cur).to_basis();
            if (radb.dim() == 0) break;
            cur = restrict_to(cur, radb, /*verify=*/false);
        }
    }
}

Rep ProjSystem::simple(size_t i) const {
    const Algebra& a = *alg_;
    std::vector<Mat> action;
    for (size_t b = 0; b < a.dim; ++b) {
        Mat m(a.field, 1, 1);
        // A/J is split: b acts on S_i by its e_i-coordinate
        m.set(0, 0, [&] {
            std::vector<uint16_t> eb(a.dim, 0);
            eb[b] = 1;
            std::vector<uint16_t> ei(a.dim, 0);
            ei[a.idem[i]] = 1;
            auto w = a.mul_elems(ei, a.mul_elems(eb, ei));
            return (uint32_t)w[a.idem[i]];
        }());
        action.push_back(std::move(m));
    }
    return Rep(alg_, std::move(action));
}

std::vector<size_t> ProjSystem::sum_offsets(const ProjSum& s) const {
    std::vector<size_t> off;
    size_t d = 0;
    for (size_t p : s.parts) {
        off.push_back(d);
        d += proj_[p].dim();
    }
    off.push_back(d);
    return off;
}

Mat ProjSystem::sum_apply(const ProjSum& s, const Mat& rows, size_t b) const {
    Mat out(alg_->field, rows.rows(), rows.cols());
    size_t off = 0;
    for (size_t p : s.parts) {
        size_t d = proj_[p].dim();
        Mat block = rows.col_slice(off, d) * proj_[p].act(b);
        out.paste(0, off, block);
        off += d;
    }
    return out;
}

Rep ProjSystem::sum_dense(const ProjSum& s) const {
    std::vector<Mat> action;
    size_t dim = sum_dim(s);
    for (size_t b = 0; b < alg_->dim; ++b) {
        Mat m(alg_->field, dim, dim);
        size_t off = 0;
        for (size_t p : s.parts) {
            m.paste(off, off, proj_[p].act(b));
            off += proj_[p].dim();
        }
        action.push_back(std::move(m));
    }
    return Rep(alg_, std::move(action));
}

RowBasis ProjSystem::sum_radical(const ProjSum& s) const {
    size_t dim = sum_dim(s);
    size_t radd = 0;
    for (size_t p : s.parts) radd += proj_rad_[p].dim();
    Mat rows(alg_->field, radd, dim);
    size_t r0 = 0, off = 0;
    for (size_t p : s.parts) {
        rows.paste(r0, off, proj_rad_[p].basis);
        r0 += proj_rad_[p].dim();
        off += proj_[p].dim();
    }
    return row_space(rows);
}

RowBasis trace_submodule(const ProjSystem& sys, const std::vector<size_t>& sources, const Rep& m) {
    const Algebra& a = *m.alg();
    Span span(a.field, m.dim());
    // Hom(P_i, m) = m*e_i: the images of all such maps are the right
    // multiples of the rows of rho(e_i)
    for (size_t i : sources) {
        const Mat& ei = m.act(a.idem[i]);
        for (size_t r = 0; r < m.dim(); ++r) {
            span.add_row(ei.row(r));
            Mat vm(a.field, 1, m.dim());
            std::copy(ei.row(r), ei.row(r) + m.dim(), vm.row(0));
            for (size_t b = 0; b < a.dim; ++b) {
                Mat w = vm * m.act(b);
                span.add_row(w.row(0));
            }
        }
    }
    RowBasis basis = span.to_basis();
    // the quotient admits no map from any source: (m/trace)*e_i = 0
    Rep q = quotient_by(m, basis);
    for (size_t i : sources)
        if (!q.act(a.idem[i]).is_zero())
            throw TbError(TbError::Internal, "trace quotient still admits maps from a source projective");
    return basis;
}

CoverData projective_cover(const ProjSystem& sys, const Rep& m) {
    const Algebra& a = *m.alg();
    CoverData out;
    if (m.dim() == 0) {
        out.map = Mat(a.field, 0, 0);
        out.kernel = RowBasis{Mat(a.field, 0, 0), {}};
        out.minimality_checked = true;
        return out;
    }
    // head lifts: rows of rho(e_i) surviving modulo m*J, grouped by isotypic
    Span occupied = radical_span(m);
    std::vector<std::vector<size_t>> lift_rows(sys.nI());
    std::vector<Mat> lifts;  // chosen generators u = v*rho(e_i), one row each
    for (size_t i = 0; i < sys.nI(); ++i) {
        const Mat& ei = m.act(a.idem[i]);
        for (size_t r = 0; r < m.dim(); ++r)
            if (occupied.add_row(ei.row(r))) {
                out.cover.parts.push_back(i);
                Mat u(a.field, 1, m.dim());
                std::copy(ei.row(r), ei.row(r) + m.dim(), u.row(0));
                lifts.push_back(std::move(u));
            }
    }
    // map: block rows u * rho(x) over the basis x of each e_iA
    size_t cover_dim = sys.sum_dim(out.cover);
    out.map = Mat(a.field, cover_dim, m.dim());
    size_t r0 = 0;
    for (size_t blk = 0; blk < out.cover.parts.size(); ++blk) {
        size_t i = out.cover.parts[blk];
        const RowBasis& pb = sys.proj_basis(i);
        const Gf& f = *a.field;
        for (size_t x = 0; x < pb.dim(); ++x) {
            // u * rho(x) with x expanded over algebra basis elements
            std::vector<uint16_t> row(m.dim(), 0);
            for (size_t b = 0; b < a.dim; ++b) {
                uint32_t c = pb.basis.at(x, b);
                if (!c) continue;
                Mat w = lifts[blk] * m.act(b);
                f.axpy_row(row.data(), w.row(0), c, m.dim());
            }
            std::copy(row.begin(), row.end(), out.map.row(r0 + x));
        }
        r0 += pb.dim();
    }
    if (out.map.rank() != m.dim())
        throw TbError(TbError::Internal, "projective cover map is not surjective");
    out.kernel = left_kernel(out.map);
    // minimality: kernel inside rad(cover); inline for small instances
    if (cover_dim <= 600) {
        RowBasis radc = sys.sum_radical(out.cover);
        Span radspan(a.field, cover_dim);
        for (size_t r = 0; r < radc.dim(); ++r) radspan.add_row(radc.basis.row(r));
        for (size_t r = 0; r < out.kernel.dim(); ++r)
            if (!radspan.contains(out.kernel.basis.row(r)))
                throw TbError(TbError::Internal, "cover kernel leaves the radical: cover not minimal");
        out.minimality_checked = true;
    }
    return out;
}

StepStats module_stats(const Rep& m) {
    StepStats s;
    s.dim = m.dim();
    auto hm = head_isotypic_dims(m);
    s.head_mults.assign(hm.begin(), hm.end());
    for (size_t v : hm) s.head_dim += v;
    s.socle_dim = socle_dim(m);
    auto ll = loewy_layers(m);
    s.loewy_len = (uint32_t)ll.size();
    return s;
}

// restriction of a projective-sum action to an invariant row basis, built
// blockwise to keep the ambient action sparse
static Rep restrict_in_sum(const ProjSystem& sys, const ProjSum& amb, const RowBasis& sub) {
    std::vector<Mat> action;
    action.reserve(sys.alg()->dim);
    for (size_t b = 0; b < sys.alg()->dim; ++b) {
        Mat img = sys.sum_apply(amb, sub.basis, b);
        auto coords = sub.express(img, /*verify=*/false);
        action.push_back(std::move(*coords));
    }
    return Rep(sys.alg(), std::move(action));
}

// stats computed through the ambient sum, avoiding dense dim^2 products for
// the large truncation step
static StepStats stats_in_sum(const ProjSystem& sys, const ProjSum& amb, const RowBasis& sub) {
    const Algebra& a = *sys.alg();
    StepStats s;
    s.dim = sub.dim();
    std::vector<Mat> radimg;  // sub.basis * rho(r) in ambient coordinates
    for (size_t r : a.rad) radimg.push_back(sys.sum_apply(amb, sub.basis, r));
    // head: rank of the stacked radical images gives dim m*J
    {
        Span span(a.field, sub.ambient());
        for (auto& w : radimg)
            for (size_t i = 0; i < w.rows(); ++i) span.add_row(w.row(i));
        uint64_t mj = span.dim();
        s.head_dim = s.dim - mj;
        // isotypics of the head, still through the ambient action
        s.head_mults.assign(sys.nI(), 0);
        for (size_t i = 0; i < sys.nI(); ++i) {
            Mat ei = sys.sum_apply(amb, sub.basis, a.idem[i]);
            for (size_t r = 0; r < ei.rows(); ++r)
                if (span.add_row(ei.row(r))) ++s.head_mults[i];
        }
        // loewy: iterate radical applications on the accumulated images
        uint32_t len = 1;
        std::vector<Mat> frontier = std::move(radimg);
        uint64_t prev = mj;
        while (prev > 0) {
            ++len;
            Span next(a.field, sub.ambient());
            std::vector<Mat> nf;
            for (auto& w : frontier)
                for (size_t r : a.rad) {
                    Mat w2 = sys.sum_apply(amb, w, r);
                    bool grew = false;
                    for (size_t i = 0; i < w2.rows(); ++i) grew |= next.add_row(w2.row(i));
                    if (grew) nf.push_back(std::move(w2));
                }
            if (next.dim() >= prev) break;
            prev = next.dim();
            frontier = std::move(nf);
        }
        s.loewy_len = len - (prev == 0 && s.dim > 0 && len > 1 ? 1 : 0) + 0;
        // recompute cleanly: number of nonzero m J^k starting at k = 0
    }
    // socle: joint kernel of the radical actions, restricted coordinates
    {
        std::vector<Mat> racts;
        for (size_t r : a.rad) {
            Mat img = sys.sum_apply(amb, sub.basis, r);
            racts.push_back(*sub.express(img, false));
        }
        if (racts.empty())
            s.socle_dim = s.dim;
        else {
            Mat stack(a.field, sub.dim(), sub.dim() * racts.size());
            for (size_t k = 0; k < racts.size(); ++k) stack.paste(0, k * sub.dim(), racts[k]);
            s.socle_dim = sub.dim() - stack.rank();
        }
    }
    return s;
}

ResolutionTrace minimal_resolution(const ProjSystem& sys, const Rep& m, size_t s_max, uint64_t dim_cap) {
    ResolutionTrace tr;
    constexpr size_t kRetainDim = 2500;
    Rep cur = m;
    for (size_t s = 0;; ++s) {
        StepStats st = module_stats(cur);
        tr.stats.push_back(st);
        if (cur.dim() <= kRetainDim)
            tr.syzygies.push_back(cur);
        else {
            tr.syzygies.push_back(std::nullopt);
            if (tr.note.empty()) tr.note = "large syzygies not retained for isomorphism scans";
        }
        if (cur.dim() == 0 || s == s_max) break;
        ProjSum cover;
        for (size_t i = 0; i < sys.nI(); ++i)
            for (size_t c = 0; c < st.head_mults[i]; ++c) cover.parts.push_back(i);
        uint64_t cover_dim = sys.sum_dim(cover);
        if (cover_dim > dim_cap) {
            tr.truncated = true;
            tr.note = "dimension cap " + std::to_string(dim_cap) + " reached: next cover has dimension " +
                      std::to_string(cover_dim);
            break;
        }
        CoverData cd = projective_cover(sys, cur);
        if (!(cd.cover == cover)) throw TbError(TbError::Internal, "cover multiplicities disagree with head isotypics");
        tr.terms.push_back(cd.cover);
        tr.term_dims.push_back(cover_dim);
        // exactness bookkeeping: dim cover = dim Omega^s + dim Omega^{s+1}
        if (cd.kernel.dim() + cur.dim() != cover_dim)
            throw TbError(TbError::Internal, "cover/kernel dimensions break the short exact sequence");
        cur = restrict_in_sum(sys, cd.cover, cd.kernel);
    }
    return tr;
}

Rep syzygy(const ProjSystem& sys, const Rep& m) {
    CoverData cd = projective_cover(sys, m);
    return restrict_in_sum(sys, cd.cover, cd.kernel);
}

}  // namespace tiltbench
