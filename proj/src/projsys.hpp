#pragma once

#include "rep.hpp"

namespace tiltbench {

// Formal direct sum of indecomposable projectives: a list of I-indices.
// The order fixes the block layout of every realization.
struct ProjSum {
    std::vector<size_t> parts;

    size_t count(size_t i) const {
        size_t c = 0;
        for (size_t p : parts) c += (p == i);
        return c;
    }
    std::vector<size_t> multiplicities(size_t nI) const {
        std::vector<size_t> m(nI, 0);
        for (size_t p : parts) ++m[p];
        return m;
    }
    bool operator==(const ProjSum&) const = default;
};

// The projectives e_iA with everything derived from them: radical bases,
// hom spaces between projectives, Cartan matrix, algebra generators.
class ProjSystem {
  public:
    explicit ProjSystem(AlgebraPtr a);

    const AlgebraPtr& alg() const { return alg_; }
    size_t nI() const { return alg_->simple_count(); }

    const Rep& proj(size_t i) const { return proj_[i]; }
    const RowBasis& proj_basis(size_t i) const { return proj_basis_[i]; }  // e_iA inside A
    const RowBasis& proj_rad(size_t i) const { return proj_rad_[i]; }      // rad P_i inside P_i
    const HomSpace& hom(size_t i, size_t j) const { return hom_[i][j]; }
    const std::vector<std::vector<int64_t>>& cartan() const { return cartan_; }
    const std::vector<std::vector<int64_t>>& cartan_by_layers() const { return cartan_layers_; }

    Rep simple(size_t i) const;

    size_t sum_dim(const ProjSum& s) const {
        size_t d = 0;
        for (size_t p : s.parts) d += proj_[p].dim();
        return d;
    }
    std::vector<size_t> sum_offsets(const ProjSum& s) const;

    // rows * blockdiag(rho_{P_i}(b)): the sparse action of a projective sum
    Mat sum_apply(const ProjSum& s, const Mat& rows, size_t b) const;
    Rep sum_dense(const ProjSum& s) const;  // materialized action (small sums)
    // basis of rad(sum) inside the realization
    RowBasis sum_radical(const ProjSum& s) const;

  private:
    AlgebraPtr alg_;
    std::vector<RowBasis> proj_basis_;
    std::vector<Rep> proj_;
    std::vector<RowBasis> proj_rad_;
    std::vector<std::vector<HomSpace>> hom_;
    std::vector<std::vector<int64_t>> cartan_;         // dim Hom(P_i, P_j)
    std::vector<std::vector<int64_t>> cartan_layers_;  // S_i multiplicity in P_j by Loewy layers
};

// Largest submodule of m whose head involves only the simples in `sources`,
// realized as the sum of images of all homomorphisms from those projectives.
// The returned basis lives in m's coordinates; the quotient is verified to
// admit no nonzero map from any source.
RowBasis trace_submodule(const ProjSystem& sys, const std::vector<size_t>& sources, const Rep& m);

struct CoverData {
    ProjSum cover;     // head isotypics of the covered module
    Mat map;           // realization-dim(cover) x dim(m), surjective
    RowBasis kernel;   // first syzygy inside the cover realization
    bool minimality_checked = false;
};

// Minimal projective cover with lifted surjection; kernel contained in
// rad(cover) (verified inline for small modules, property-tested beyond).
CoverData projective_cover(const ProjSystem& sys, const Rep& m);

struct StepStats {
    uint64_t dim = 0;
    uint64_t head_dim = 0;
    uint64_t socle_dim = 0;
    uint32_t loewy_len = 0;
    std::vector<size_t> head_mults;
};

struct ResolutionTrace {
    std::vector<StepStats> stats;   // stats of Omega^s, s = 0..
    std::vector<ProjSum> terms;     // cover of Omega^s where realized
    std::vector<uint64_t> term_dims;
    bool truncated = false;
    std::string note;
    // syzygy modules; entries may be dropped beyond the retention size
    std::vector<std::optional<Rep>> syzygies;
};

StepStats module_stats(const Rep& m);

// Minimal resolution by iterated covers.  Stops at s_max, at a zero syzygy,
// or when the next realization would exceed dim_cap (flagged as truncated).
ResolutionTrace minimal_resolution(const ProjSystem& sys, const Rep& m, size_t s_max, uint64_t dim_cap);

Rep syzygy(const ProjSystem& sys, const Rep& m);

}  // namespace tiltbench
