#pragma once

#include "hopfkit/presented.hpp"

namespace hopfkit {

/// ρ_χ = (χ⊗id)∘ρ applied to the generators: one element of K each.
/// Throws UnverifiedSource / InvalidCharacter.
std::vector<Vec> rho_chi(const PresentedAlgebra& A, const Coaction& rho, const Character& chi);

/// ρ_χ extended multiplicatively to a normal-form monomial.
Vec rho_chi_of_monomial(const PresentedAlgebra& A, const Coaction& rho, const Character& chi,
                        const Monomial& m);

/// The displayed compatibility Δ∘ρ_χ = (ρ_χ⊗id)∘ρ, checked exactly on all
/// generators.
bool rho_chi_identity_holds(const PresentedAlgebra& A, const Coaction& rho, const Character& chi);

/// A_χ = image of ρ_χ: the unital subalgebra of K generated by the generator
/// images.  Always a right coideal subalgebra of K.
Subspace a_chi(const PresentedAlgebra& A, const Coaction& rho, const Character& chi);

struct LaSpan {
    Subspace span;
    std::vector<Character> witnesses;
    /// Dimension stable across the configured window of consecutive samples;
    /// empirical evidence, not proof of saturation.
    bool saturated = false;
};

/// Span of the A_χ over an explicit character list.
LaSpan l_a_span(const PresentedAlgebra& A, const Coaction& rho,
                const std::vector<Character>& chis);
/// Span of the A_χ over seeded samples, stopping once the dimension has been
/// stable for `window` consecutive samples.
LaSpan l_a_span_sampled(const PresentedAlgebra& A, const Coaction& rho, std::uint64_t seed,
                        size_t max_samples = 200, size_t window = 10);

/// True iff ρ(a) ∈ A⊗L for all normal-form monomials of degree <= degree.
bool restricted_coaction_check(const PresentedAlgebra& A, const Coaction& rho, const Subspace& L,
                               int degree);

struct InnerFaithfulResult {
    bool inner_faithful = false;
    /// K' = the Hopf subalgebra generated by the coefficient coalgebra; the
    /// smallest Hopf subalgebra through which ρ factors.
    Subspace smallest_hopf_subalgebra;
};

InnerFaithfulResult inner_faithful(const PresentedAlgebra& A, const Coaction& rho);

struct ScanReport {
    size_t samples = 0;
    /// Distinct A_χ values (canonical echelon equality) with multiplicities,
    /// ordered by first appearance.
    std::vector<std::pair<Subspace, size_t>> distinct_subspaces;
    Subspace generic_value;  // value on the largest stratum
    /// Samples whose A_χ differs from the generic value.
    std::vector<std::pair<Character, Subspace>> degenerate_strata;
    size_t max_dim = 0;
};

ScanReport coideal_scan(const PresentedAlgebra& A, const Coaction& rho, std::uint64_t seed,
                        size_t samples);

struct MainTheoremVerdict {
    // Hypotheses.
    bool k_semisimple = false;
    bool a_domain = false;
    bool coaction_inner_faithful = false;
    // Conclusion checks.
    bool k_commutative = false;
    GroupRecognition k_group;
    GroupRecognition dual_group;
    // Consistency.
    bool hypotheses_hold = false;
    bool theorem_violation = false;  // hypotheses hold but K is noncommutative
    std::vector<std::string> notes;
};

MainTheoremVerdict main_theorem_pipeline(const PresentedAlgebra& A, const Coaction& rho);

}  // namespace hopfkit
