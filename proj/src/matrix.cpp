#include "matrix.hpp"

#include <sstream>

namespace tiltbench {

Mat Mat::identity(GfPtr f, size_t n) {
    Mat m(std::move(f), n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(GfPtr f, const std::vector<std::vector<uint32_t>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Mat m(std::move(f), r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw TbError(TbError::Arg, "ragged row list");
        for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

bool Mat::is_zero() const {
    for (uint16_t v : a_)
        if (v) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw TbError(TbError::Arg, "matrix shape mismatch in product");
    Mat r(f_, rows_, o.cols_);
    const Gf& f = *f_;
    if (f.e() == 1) {
        // accumulate in 64-bit, one reduction per output entry
        std::vector<uint64_t> acc(o.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            const uint16_t* ai = row(i);
            for (size_t k = 0; k < cols_; ++k) {
                uint64_t v = ai[k];
                if (!v) continue;
                const uint16_t* bk = o.row(k);
                for (size_t j = 0; j < o.cols_; ++j) acc[j] += v * bk[j];
            }
            uint16_t* ri = r.row(i);
            for (size_t j = 0; j < o.cols_; ++j) ri[j] = (uint16_t)(acc[j] % f.p());
        }
        return r;
    }
    for (size_t i = 0; i < rows_; ++i) {
        const uint16_t* ai = row(i);
        for (size_t k = 0; k < cols_; ++k)
            if (ai[k]) f.axpy_row(r.row(i), o.row(k), ai[k], o.cols_);
    }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw TbError(TbError::Arg, "matrix shape mismatch in sum");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (uint16_t)f_->add(r.a_[i], o.a_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw TbError(TbError::Arg, "matrix shape mismatch in difference");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (uint16_t)f_->sub(r.a_[i], o.a_[i]);
    return r;
}

Mat Mat::scaled(uint32_t c) const {
    Mat r = *this;
    for (auto& v : r.a_) v = (uint16_t)f_->mul(c, v);
    return r;
}

Mat Mat::transpose() const {
    Mat r(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Mat Mat::vcat(const Mat& below) const {
    if (cols_ != below.cols_) throw TbError(TbError::Arg, "vcat column mismatch");
    Mat r(f_, rows_ + below.rows_, cols_);
    std::copy(a_.begin(), a_.end(), r.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), r.a_.begin() + a_.size());
    return r;
}

Mat Mat::hcat(const Mat& right) const {
    if (rows_ != right.rows_) throw TbError(TbError::Arg, "hcat row mismatch");
    Mat r(f_, rows_, cols_ + right.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        std::copy(row(i), row(i) + cols_, r.row(i));
        std::copy(right.row(i), right.row(i) + right.cols_, r.row(i) + cols_);
    }
    return r;
}

Mat Mat::row_slice(size_t r0, size_t nrows) const {
    Mat r(f_, nrows, cols_);
    std::copy(a_.begin() + r0 * cols_, a_.begin() + (r0 + nrows) * cols_, r.a_.begin());
    return r;
}

Mat Mat::col_slice(size_t c0, size_t ncols) const {
    Mat r(f_, rows_, ncols);
    for (size_t i = 0; i < rows_; ++i)
        std::copy(row(i) + c0, row(i) + c0 + ncols, r.row(i));
    return r;
}

void Mat::paste(size_t r0, size_t c0, const Mat& block) {
    for (size_t i = 0; i < block.rows(); ++i)
        std::copy(block.row(i), block.row(i) + block.cols(), row(r0 + i) + c0);
}

std::vector<size_t> Mat::rref_inplace() {
    const Gf& f = *f_;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = r;
        while (sel < rows_ && at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(a_[r * cols_ + j], a_[sel * cols_ + j]);
        f.scale_row(row(r), f.inv(at(r, c)), cols_);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint32_t v = at(i, c);
            if (v) f.axpy_row(row(i), row(r), f.neg(v), cols_);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t Mat::rank() const {
    Mat w = *this;
    const Gf& f = *f_;
    size_t r = 0;
    for (size_t c = 0; c < w.cols_ && r < w.rows_; ++c) {
        size_t sel = r;
        while (sel < w.rows_ && w.at(sel, c) == 0) ++sel;
        if (sel == w.rows_) continue;
        if (sel != r)
            for (size_t j = c; j < w.cols_; ++j) std::swap(w.a_[r * w.cols_ + j], w.a_[sel * w.cols_ + j]);
        uint32_t inv = f.inv(w.at(r, c));
        for (size_t i = r + 1; i < w.rows_; ++i) {
            uint32_t v = w.at(i, c);
            if (v) f.axpy_row(w.row(i) + c, w.row(r) + c, f.neg(f.mul(v, inv)), w.cols_ - c);
        }
        ++r;
    }
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n" : "") << "[";
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

std::optional<Mat> RowBasis::express(const Mat& vectors, bool verify) const {
    Mat coords(vectors.field(), vectors.rows(), dim());
    for (size_t i = 0; i < vectors.rows(); ++i)
        for (size_t c = 0; c < coordcols.size(); ++c)
            coords.set(i, c, vectors.at(i, coordcols[c]));
    if (verify) {
        Mat back = coords * basis;
        if (!(back == vectors)) return std::nullopt;
    }
    return coords;
}

RrefResult rref(const Mat& m) {
    RrefResult r;
    r.m = m;
    r.pivots = r.m.rref_inplace();
    r.rank = r.pivots.size();
    return r;
}

RowBasis row_space(const Mat& m) {
    RrefResult e = rref(m);
    RowBasis b{e.m.row_slice(0, e.rank), e.pivots};
    return b;
}

RowBasis left_kernel(const Mat& m) {
    // x*m = 0  <=>  m^T x^T = 0; read the kernel off rref(m^T)
    RrefResult e = rref(m.transpose());
    size_t n = m.rows();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(m.field(), free_cols.size(), n);
    const Gf& f = *m.field();
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t fc = free_cols[i];
        k.set(i, fc, 1);
        for (size_t pr = 0; pr < e.rank; ++pr) k.set(i, e.pivots[pr], f.neg(e.m.at(pr, fc)));
    }
    return RowBasis{std::move(k), std::move(free_cols)};
}

std::optional<Mat> solve_left(const Mat& m, const Mat& target) {
    if (m.cols() != target.cols()) throw TbError(TbError::Arg, "solve: shape mismatch");
    // x*m = t  <=>  m^T x^T = t^T: eliminate on [m^T | t^T]
    Mat aug = m.transpose().hcat(target.transpose());
    RrefResult e = rref(aug);
    size_t n = m.rows();
    Mat x(m.field(), target.rows(), n);
    for (size_t pr = 0; pr < e.pivots.size(); ++pr) {
        size_t pc = e.pivots[pr];
        if (pc >= n) return std::nullopt;  // pivot in the augmented part: inconsistent
        for (size_t j = 0; j < target.rows(); ++j) x.set(j, pc, e.m.at(pr, n + j));
    }
    return x;
}

bool Span::add(std::vector<uint16_t> r) {
    const Gf& f = *f_;
    for (size_t k = 0; k < rows_.size(); ++k) {
        uint32_t v = r[pivots_[k]];
        if (v) f.axpy_row(r.data(), rows_[k].data(), f.neg(v), cols_);
    }
    size_t p = 0;
    while (p < cols_ && r[p] == 0) ++p;
    if (p == cols_) return false;
    f.scale_row(r.data(), f.inv(r[p]), cols_);
    // keep rows ordered by pivot so reduction stays one pass
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(r));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
}

bool Span::add_row(const uint16_t* r) { return add(std::vector<uint16_t>(r, r + cols_)); }

bool Span::contains(const uint16_t* r) const {
    std::vector<uint16_t> w(r, r + cols_);
    const Gf& f = *f_;
    for (size_t k = 0; k < rows_.size(); ++k) {
        uint32_t v = w[pivots_[k]];
        if (v) f.axpy_row(w.data(), rows_[k].data(), f.neg(v), cols_);
    }
    for (uint16_t v : w)
        if (v) return false;
    return true;
}

RowBasis Span::to_basis() const {
    Mat m(f_, rows_.size(), cols_);
    for (size_t i = 0; i < rows_.size(); ++i)
        std::copy(rows_[i].begin(), rows_[i].end(), m.row(i));
    return row_space(m);
}

}  // namespace tiltbench
