#pragma once

#include <optional>
#include <span>

#include "gf.hpp"

namespace tiltbench {

// Dense matrix over GF(p^e).  The whole artifact uses the row-vector
// convention: module elements are rows, maps act by right multiplication.
class Mat {
  public:
    Mat() = default;
    Mat(GfPtr f, size_t rows, size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(GfPtr f, size_t n);
    static Mat from_rows(GfPtr f, const std::vector<std::vector<uint32_t>>& rows);

    const GfPtr& field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t v) { a_[r * cols_ + c] = (uint16_t)v; }
    const uint16_t* row(size_t r) const { return a_.data() + r * cols_; }
    uint16_t* row(size_t r) { return a_.data() + r * cols_; }

    bool is_zero() const;
    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(uint32_t c) const;
    Mat transpose() const;

    Mat vcat(const Mat& below) const;
    Mat hcat(const Mat& right) const;
    Mat row_slice(size_t r0, size_t nrows) const;
    Mat col_slice(size_t c0, size_t ncols) const;
    void paste(size_t r0, size_t c0, const Mat& block);

    // in-place reduced row echelon form; returns pivot columns
    std::vector<size_t> rref_inplace();
    size_t rank() const;  // row echelon only, no back-substitution

    std::string str() const;

  private:
    GfPtr f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint16_t> a_;
};

// A row basis in "coordinate-column" form: basis[r][coordcols[c]] = delta_rc,
// so the coordinates of any vector of the span can be read off directly.
// rref bases (coordcols = pivots) and rref-derived kernel bases (coordcols =
// free columns) both have this shape.
struct RowBasis {
    Mat basis;                      // k x n, rows span the subspace
    std::vector<size_t> coordcols;  // k column indices where basis is the identity

    size_t dim() const { return basis.rows(); }
    size_t ambient() const { return basis.cols(); }

    // gather coordinates; with `verify` the residual is checked and
    // membership failure reported
    std::optional<Mat> express(const Mat& vectors, bool verify) const;
};

struct RrefResult {
    Mat m;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

RrefResult rref(const Mat& m);

// canonical basis of the row space (rref rows, zero rows dropped)
RowBasis row_space(const Mat& m);

// left kernel: rows v with v*m = 0 (canonical: derived from rref of m)
RowBasis left_kernel(const Mat& m);

// solves x*m = target exactly; nullopt when inconsistent
std::optional<Mat> solve_left(const Mat& m, const Mat& target);

// Incremental row-echelon span: cheap rank growth and membership tests.
// Rows are kept in echelon (not reduced) form with normalized pivots.
class Span {
  public:
    explicit Span(GfPtr f, size_t cols) : f_(std::move(f)), cols_(cols) {}
    // reduces r against the span; keeps it when independent; returns true if the span grew
    bool add(std::vector<uint16_t> r);
    bool add_row(const uint16_t* r);
    // true iff r lies in the span
    bool contains(const uint16_t* r) const;
    size_t dim() const { return rows_.size(); }
    size_t ambient() const { return cols_; }
    // canonical rref basis of the accumulated span
    RowBasis to_basis() const;

  private:
    GfPtr f_;
    size_t cols_;
    std::vector<std::vector<uint16_t>> rows_;  // echelon, pivot-normalized
    std::vector<size_t> pivots_;
};

}  // namespace tiltbench
