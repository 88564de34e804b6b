#pragma once

#include <optional>
#include <span>

#include "matrix.hpp"

namespace tiltbench {

// Finite-dimensional basic algebra given by structure constants on a basis
// that is split into primitive orthogonal idempotents and a radical basis.
// Right modules everywhere: x*R_b is the right action of basis element b on
// the coordinate row x.
struct Algebra {
    GfPtr field;
    std::string name;
    size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<uint16_t> one;         // coordinates of the unit
    std::vector<size_t> idem;          // basis indices of the e_i, in order (the set I)
    std::vector<size_t> rad;           // basis indices spanning the radical J
    std::vector<uint16_t> mult;        // flat dim^3 table: mult[(i*dim+j)*dim+k]
    // verified symmetrizing functional (coordinates in the dual basis), if any
    std::optional<std::vector<uint16_t>> symform;
    std::string symform_origin;

    std::span<const uint16_t> prod(size_t i, size_t j) const {
        return {mult.data() + (i * dim + j) * dim, dim};
    }
    // bilinear product of two coordinate rows
    std::vector<uint16_t> mul_elems(std::span<const uint16_t> x, std::span<const uint16_t> y) const;
    Mat right_mult_basis(size_t b) const;  // R_b with rows (b_i * b)
    Mat right_mult(std::span<const uint16_t> x) const;

    size_t simple_count() const { return idem.size(); }
    const std::string& simple_label(size_t i) const { return labels[idem[i]]; }
    // index into idem for a simple with this label; -1 if absent
    int simple_index(const std::string& label) const;

    bool in_radical_span(std::span<const uint16_t> x) const {
        for (size_t i : idem)
            if (x[i]) return false;
        return true;
    }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Diagnostic {
    std::string axiom;
    std::string witness;
};

// every structural axiom, each failure with a witness; empty result = valid
std::vector<Diagnostic> check_algebra(const Algebra& a);

// throws TbError::Validate listing all diagnostics when invalid
AlgebraPtr validate_algebra(Algebra raw);

// dims of J^s/J^{s+1} until zero (s = 0 gives the semisimple quotient)
std::vector<size_t> algebra_radical_layers(const Algebra& a);

// small set of basis indices generating A as a unital algebra, greedy order
std::vector<size_t> generating_elements(const Algebra& a);

struct SymFormSearch {
    std::optional<std::vector<uint16_t>> form;
    bool exhaustive = false;  // search space fully enumerated
    std::string note;
};

// Solves the commutation constraints exactly, then looks for a nondegenerate
// point: full enumeration when the solution space has <= 10^6 points, else
// 1000 fixed-seed samples.  Absence is one-sided and the note says so.
SymFormSearch find_symmetrizing_form(const Algebra& a);

// checks lambda(ab) = lambda(ba) on all pairs and invertibility of the Gram matrix
bool verify_symmetrizing_form(const Algebra& a, std::span<const uint16_t> lambda);

AlgebraPtr attach_symform(const AlgebraPtr& a, std::vector<uint16_t> form, std::string origin);

}  // namespace tiltbench
