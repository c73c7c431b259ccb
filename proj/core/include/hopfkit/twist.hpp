#pragma once

#include "hopfkit/catalog.hpp"

namespace hopfkit {

/// A Drinfeld twist on a group algebra kG built from a nondegenerate
/// 2-cocycle on an embedded copy of L = Z_d ⊕ Z_d.  Elements of L are
/// indexed (x, y) -> x*d + y; characters of L the same way.
struct TwistSpec {
    int d = 0;
    FieldPtr field;
    size_t n = 0;                   // dim kG
    std::vector<size_t> embedding;  // image in G of the L-element x*d+y
    Matrix cocycle;                 // d² × d², sigma((x,y),(x',y')) = ζ_d^{x·y'}
    Vec j;                          // twist element in kG⊗kG, flat length n²
    Vec j_inv;                      // its inverse
    Vec literal_j;                  // the unnormalized character sum, for inspection
};

/// Builds the twist J = Σ_{φ,ψ ∈ L̂} σ̂(φ,ψ) e_φ ⊗ e_ψ over the primitive
/// idempotents e_φ of kL ⊆ kG, where σ̂ is the dual cocycle
/// σ̂((m,n),(m',n')) = ζ_d^{m·n'}.  Verifies the counit normalization
/// (ε⊗id)J = 1 = (id⊗ε)J, invertibility, and the twist equation
/// (J⊗1)·((Δ⊗id)J) = (1⊗J)·((id⊗Δ)J); throws NotATwist on failure.
/// The embedding must be an injective homomorphism L -> G.
TwistSpec build_twist(int d, const GroupSpec& g, const std::vector<size_t>& embedding,
                      const FieldPtr& field);

/// The twisted Hopf algebra (kG)^J: same multiplication, Δ_J = J⁻¹·Δ(·)·J,
/// and the twisted antipode S_J = U·S(·)·U⁻¹ for a gauge element U derived
/// from J.  The result passes verify_hopf_axioms; throws NotATwist otherwise.
HopfAlgebra twist_hopf(const HopfAlgebra& kg, const TwistSpec& spec);

}  // namespace hopfkit
