#pragma once

#include "algebra.hpp"

namespace tiltbench {

// Right module over a partitioned algebra: one action matrix per algebra
// basis element, row vectors act by right multiplication, so
// rho(a)rho(b) realizes rho(ab).
class Rep {
  public:
    Rep() = default;
    Rep(AlgebraPtr alg, std::vector<Mat> action) : alg_(std::move(alg)), act_(std::move(action)) {
        dim_ = act_.empty() ? 0 : act_[0].rows();
    }

    // external construction path: checks rho(1) = id and, when
    // structure_check is set, that every structure constant is respected
    static Rep checked(AlgebraPtr alg, std::vector<Mat> action, bool structure_check);

    const AlgebraPtr& alg() const { return alg_; }
    size_t dim() const { return dim_; }
    const Mat& act(size_t b) const { return act_[b]; }
    const std::vector<Mat>& action() const { return act_; }

    // action of a general element given by coordinates
    Mat act_elem(std::span<const uint16_t> coords) const;
    Mat act_idem(size_t i) const { return act_[alg_->idem[i]]; }

    bool unit_acts_as_identity() const;
    bool respects_structure() const;  // full pairwise check, O(n^2 dim^3)

    Rep direct_sum(const Rep& o) const;

  private:
    AlgebraPtr alg_;
    size_t dim_ = 0;
    std::vector<Mat> act_;
};

struct HomSpace {
    const Rep* src = nullptr;
    const Rep* tgt = nullptr;
    std::vector<Mat> basis;  // intertwiners, canonical order
    RowBasis flat;           // the same basis as flattened rows
    size_t dim() const { return basis.size(); }
};

// Exact solution space of rho_m(b) F = F rho_n(b).  By default the equations
// range over a generating set of the algebra (same solution space); tests
// compare against the all-basis-elements variant.
HomSpace hom_space(const Rep& m, const Rep& n, bool all_basis = false);

// coordinates of an intertwiner in a hom-space basis; throws if it is not one
std::vector<uint16_t> hom_coords(const HomSpace& h, const Mat& f);

// m * J as a span of row vectors (in m's coordinates)
Span radical_span(const Rep& m);
size_t head_dim(const Rep& m);
size_t socle_dim(const Rep& m);
std::vector<size_t> loewy_layers(const Rep& m);
// submodule basis of the socle
RowBasis socle_basis(const Rep& m);

// multiplicity of each simple in the head
std::vector<size_t> head_isotypic_dims(const Rep& m);
// multiplicity of S_i in m, counted across all Loewy layers
std::vector<size_t> composition_multiplicities(const Rep& m);

// Restriction of the action to an invariant row space.  `verify` checks the
// residual of every expressed row (use for externally claimed subspaces);
// the fast path is for subspaces closed by construction.
Rep restrict_to(const Rep& ambient, const RowBasis& sub, bool verify);

// quotient of m by an invariant row space
Rep quotient_by(const Rep& m, const RowBasis& sub);

struct IsoResult {
    enum Answer { Yes, No, Undecided } answer;
    std::string certificate;
    std::optional<Mat> witness;  // invertible intertwiner when Yes
};

// Decision with witness.  Exhaustive over the hom space when q^h <= 10^6,
// else 10^5 fixed-seed samples; a failed sampled search returns Undecided.
IsoResult is_isomorphic(const Rep& m, const Rep& n);

// endomorphism ring local: no basis combination is a nontrivial idempotent
// (same exhaustive/sampled thresholds as the isomorphism test)
bool is_indecomposable(const Rep& m, std::string* note = nullptr);

}  // namespace tiltbench
