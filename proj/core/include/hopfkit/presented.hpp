#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "hopfkit/twist.hpp"

namespace hopfkit {

/// Exponent vector over the generators u_1..u_m.
using Monomial = std::vector<unsigned>;

unsigned monomial_degree(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& divisor, const Monomial& m);

enum class AlgKind { FreeCommutative, MonomialQuotient, SkewPoly, FiniteDimensional };

/// A presented algebra: polynomial ring, monomial quotient, skew polynomial
/// ring with parameters q_{ij}, or an explicit finite-dimensional algebra.
struct PresentedAlgebra {
    AlgKind kind = AlgKind::FreeCommutative;
    FieldPtr field;
    std::vector<std::string> generators;
    std::vector<Monomial> ideal;  // monomial generators of the ideal
    Matrix q;                     // skew parameters, q_{ij}q_{ji} = 1
    std::optional<FDAlgebra> fd;
    int degree_bound = 4;

    static PresentedAlgebra free_commutative(const FieldPtr& f, std::vector<std::string> gens,
                                             int degree_bound = 4);
    static PresentedAlgebra monomial_quotient(const FieldPtr& f, std::vector<std::string> gens,
                                              std::vector<Monomial> ideal, int degree_bound = 4);
    static PresentedAlgebra skew_poly(const FieldPtr& f, std::vector<std::string> gens, Matrix q,
                                      int degree_bound = 4);
    static PresentedAlgebra finite_dimensional(FDAlgebra fd, int degree_bound = 4);

    size_t num_generators() const { return generators.size(); }
    /// True iff the normal form of the monomial is zero in A.
    bool monomial_is_zero(const Monomial& m) const;
    bool is_domain() const;
    /// All nonzero normal-form monomials of total degree <= degree (constant included).
    std::vector<Monomial> monomials_up_to(int degree) const;
    std::string monomial_str(const Monomial& m) const;
    /// Inverse of monomial_str: "u1^2*u2", "1" for the constant monomial.
    Monomial parse_monomial(const std::string& text) const;
};

/// Sparse polynomial in A: normal-form monomial -> scalar.
using Poly = std::map<Monomial, Cyc>;
/// Element of A ⊗ K: normal-form monomial -> coordinates in K.
using PolyTensor = std::map<Monomial, Vec>;

Poly poly_mul(const PresentedAlgebra& A, const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Cyc& c, const Poly& p);
bool poly_is_zero(const Poly& p);
std::string poly_str(const PresentedAlgebra& A, const Poly& p);

/// Right coaction ρ: A -> A ⊗ K on generators, extended multiplicatively.
struct Coaction {
    HopfAlgebra hopf;
    std::vector<PolyTensor> images;  // one per generator
};

/// Left action of H on span{1, u_1..u_m}: one (m+1)×(m+1) matrix per basis
/// element of H, coordinate 0 = the constant 1.
struct Action {
    HopfAlgebra hopf;
    std::vector<Matrix> matrices;
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// ρ extended to a normal-form monomial (multiplicatively).
PolyTensor coact(const PresentedAlgebra& A, const Coaction& rho, const Monomial& m);
/// h·m for an arbitrary element h of H, via h·(ab) = Σ (h₁·a)(h₂·b).
Poly act_on_monomial(const PresentedAlgebra& A, const Action& act, const Vec& h,
                     const Monomial& m);
Poly act_on_poly(const PresentedAlgebra& A, const Action& act, const Vec& h, const Poly& p);

/// Checks coassociativity, counit, multiplicativity and relation vanishing on
/// all normal-form monomials of degree <= degree.
VerifyReport verify_comodule_algebra(const PresentedAlgebra& A, const Coaction& rho, int degree);
/// Checks h·1 = ε(h)1, the coproduct rule on products, and the module axiom
/// (gh)·a = g·(h·a) on basis elements × monomials of degree <= degree.
VerifyReport verify_module_algebra(const PresentedAlgebra& A, const Action& act, int degree);

/// Module ↔ comodule conversion across the duality H = K*.  Sources must
/// verify (throws UnverifiedSource); coaction images must be affine.
Action coaction_to_action(const PresentedAlgebra& A, const Coaction& rho);
Coaction action_to_coaction(const PresentedAlgebra& A, const Action& act);

/// A character χ: A -> k, as its values on the generators.
struct Character {
    std::vector<Cyc> values;
    bool operator==(const Character& o) const { return values == o.values; }
};

bool character_check(const PresentedAlgebra& A, const Character& chi);
/// Deterministic seeded sampler over small rationals (numerators in [-5,5],
/// denominators in {1,2,3}); rejects relation violations, prefers distinct
/// draws, and falls back to repeats only when the valid grid is exhausted.
std::vector<Character> sample_characters(const PresentedAlgebra& A, std::uint64_t seed,
                                         size_t count);
std::string character_set_description(const PresentedAlgebra& A);

/// Span in K of 1_K and all second-leg coefficients of the generator images;
/// verified to be a subcoalgebra of K.
Subspace coefficient_coalgebra(const PresentedAlgebra& A, const Coaction& rho);

/// A as an explicit finite-dimensional algebra on its normal-form monomial
/// basis.  Throws InfiniteDimensional when some generator is not nilpotent.
FDAlgebra finite_dimensional_algebra(const PresentedAlgebra& A);
/// The action matrices on the full monomial basis of a finite-dimensional A.
std::vector<Matrix> action_matrices_on_basis(const PresentedAlgebra& A, const Action& act);

/// Smash product A#H with (a#h)(b#h') = Σ a(h₁·b) # h₂h'.
FDAlgebra smash_product(const PresentedAlgebra& A, const Action& act);
/// Kernel of the representation A#H -> End(A); faithful iff zero.
Subspace module_faithfulness_kernel(const PresentedAlgebra& A, const Action& act);

/// The twisted algebra A_J for a diagonal linear kG-action: a ∗ b =
/// Σ (J⁽¹⁾·a)(J⁽²⁾·b), presented as a skew polynomial ring with parameters
/// q_{ij} extracted from u_i ∗ u_j = q_{ij} u_j ∗ u_i.
PresentedAlgebra twist_module_algebra(const PresentedAlgebra& A, const Action& act,
                                      const TwistSpec& spec);

}  // namespace hopfkit
