#pragma once

#include <string>
#include <vector>

#include "hopfkit/subspace.hpp"

namespace hopfkit {

/// Finite-dimensional Hopf algebra given by structure constants on a fixed
/// basis e_0..e_{n-1}.  The element e_i ⊗ e_j of K⊗K has flat index i*n + j.
struct HopfAlgebra {
    FieldPtr field;
    size_t n = 0;
    Matrix mult;      // n x n^2, column i*n+j = coordinates of e_i e_j
    Vec unit;         // coordinates of 1
    Matrix comult;    // n^2 x n, column i = Delta(e_i)
    Vec counit;       // the functional epsilon, as values on the basis
    Matrix antipode;  // n x n, column i = S(e_i)
    std::vector<std::string> labels;

    Vec multiply(const Vec& a, const Vec& b) const;
    Cyc counit_of(const Vec& a) const;
    Vec antipode_of(const Vec& a) const;
    Vec coproduct(const Vec& a) const;  // length n^2
    /// Product in K⊗K of two flat n^2 vectors.
    Vec tensor_multiply(const Vec& a, const Vec& b) const;
    /// Product in K⊗K⊗K of two flat n^3 vectors.
    Vec tensor3_multiply(const Vec& a, const Vec& b) const;

    /// Nonzero entries of each multiplication column, as (row, entry) pairs.
    /// The pointers refer into `mult`; reuse across many products to avoid
    /// rescanning dense structure tensors.
    std::vector<std::vector<std::pair<size_t, const Cyc*>>> sparse_mult_columns() const;
    Vec tensor_multiply(const Vec& a, const Vec& b,
                        const std::vector<std::vector<std::pair<size_t, const Cyc*>>>& cols) const;

    const std::string& label(size_t i) const { return labels[i]; }
    /// Pretty-print a coordinate vector as a combination of basis labels.
    std::string format_element(const Vec& v) const;
};

/// Names of violated axioms; empty means K is a valid Hopf algebra.
std::vector<std::string> verify_hopf_axioms(const HopfAlgebra& K);

/// The dual Hopf algebra on the dual basis.  Requires K to pass the axioms.
HopfAlgebra dual_hopf(const HopfAlgebra& K);

bool is_commutative(const HopfAlgebra& K);
bool is_cocommutative(const HopfAlgebra& K);

/// Associative unital algebra given by structure constants (no coalgebra data).
struct FDAlgebra {
    FieldPtr field;
    size_t n = 0;
    Matrix mult;  // n x n^2
    Vec unit;
    std::vector<std::string> labels;

    Vec multiply(const Vec& a, const Vec& b) const;
};

/// Trace-form nondegeneracy (Dickson criterion, characteristic 0).
bool is_semisimple_algebra(const FDAlgebra& B);
bool is_semisimple_algebra(const HopfAlgebra& K);
/// Restriction of K's product to a subalgebra subspace B (must be closed).
FDAlgebra restrict_algebra(const HopfAlgebra& K, const Subspace& B);

/// Smallest unital subalgebra of K containing the seed subspace.
Subspace subalgebra_closure(const HopfAlgebra& K, const Subspace& seed);

/// Smallest Hopf subalgebra containing the subcoalgebra C.
/// Throws NotASubcoalgebra unless Delta(C) ⊆ C⊗C.
Subspace generated_hopf_subalgebra(const HopfAlgebra& K, const Subspace& C);

bool is_subcoalgebra(const HopfAlgebra& K, const Subspace& C);

enum class CoidealSide { Left, Right };

struct CoidealCertificate {
    bool ok = false;
    std::string failed_condition;  // "unit", "subalgebra", "coideal"
    Vec witness;                   // offending element, when !ok
};

CoidealCertificate is_coideal_subalgebra(const HopfAlgebra& K, const Subspace& B, CoidealSide side);

/// All grouplike elements of K (Delta(g) = g⊗g, eps(g) = 1), deterministically
/// ordered.  May throw UnsplittableOverField.
std::vector<Vec> grouplikes(const HopfAlgebra& K);

struct GroupRecognition {
    bool is_group_algebra = false;
    std::vector<Vec> grouplike_elements;
    std::vector<std::vector<size_t>> table;  // multiplication table when is_group_algebra
};

GroupRecognition recognize_group_algebra(const HopfAlgebra& K);

/// Characters of a finite-dimensional algebra over the session field, as
/// value vectors on the basis.  May throw UnsplittableOverField.
std::vector<Vec> algebra_characters(const FDAlgebra& B);

}  // namespace hopfkit
