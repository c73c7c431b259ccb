#pragma once

#include "hopfkit/coideal.hpp"

namespace hopfkit {

/// The n-th Weyl algebra A_n: generators u_1..u_n, v_1..v_n with
/// [u_i,u_j] = [v_i,v_j] = 0 and [v_i,u_j] = δ_{ij}.  n is capped at 3.
struct WeylAlgebra {
    size_t n = 1;
    FieldPtr field;

    WeylAlgebra(size_t pairs, FieldPtr f);
    size_t num_generators() const { return 2 * n; }
    /// Generator index of u_i (0-based i < n) / v_i.
    size_t u(size_t i) const { return i; }
    size_t v(size_t i) const { return n + i; }
    std::string generator_label(size_t g) const;
};

/// Normal-form element: u^a v^b monomials (exponents u_1..u_n then v_1..v_n)
/// with nonzero coefficients, u-factors before v-factors.
using WeylElement = std::map<Monomial, Cyc>;

/// One term of an input expression: a coefficient times a word of generator
/// indices, read left to right.
struct WeylTerm {
    Cyc coeff;
    std::vector<size_t> word;
};

WeylElement weyl_normal_form(const WeylAlgebra& W, const std::vector<WeylTerm>& expr);
WeylElement weyl_one(const WeylAlgebra& W);
WeylElement weyl_generator(const WeylAlgebra& W, size_t g);
WeylElement weyl_add(const WeylElement& a, const WeylElement& b);
WeylElement weyl_scale(const Cyc& c, const WeylElement& a);
WeylElement weyl_mul(const WeylAlgebra& W, const WeylElement& a, const WeylElement& b);
std::string weyl_str(const WeylAlgebra& W, const WeylElement& x);

/// Max total degree |a|+|b| over the monomials; 0 for the zero element.
unsigned filtration_degree(const WeylElement& x);

/// Filtration-preserving action of H on A_n, specified linearly on
/// F_1 = span{1, u_1..u_n, v_1..v_n} (coordinate 0 = the constant 1) and
/// extended multiplicatively via the coproduct.
struct WeylAction {
    WeylAlgebra weyl;
    HopfAlgebra hopf;
    std::vector<Matrix> matrices;  // one (2n+1)x(2n+1) matrix per H-basis element
};

/// Builds and verifies a filtered action: h·1 = ε(h)1, every Weyl relation is
/// respected by the multiplicative extension (RelationNotPreserved with the
/// offending basis element and relation), the product rule, and the module
/// axiom, all exactly to total degree `degree`.
WeylAction weyl_action(const WeylAlgebra& W, const HopfAlgebra& H, std::vector<Matrix> images,
                       int degree = 4);

/// h·x for the multiplicative extension of a verified filtered action.
WeylElement weyl_act(const WeylAction& act, const Vec& h, const WeylElement& x);

struct GrTransport {
    /// The induced action on the commutative polynomial ring k[u_1..u_n, v_1..v_n].
    PresentedAlgebra gr_algebra;
    Action gr_action;
    VerifyReport gr_report;  // module-algebra verification of the induced action
    /// Leading symbols commute with the H-action on every monomial checked.
    bool symbols_equivariant = false;
};

/// Transports a filtered action to the associated graded polynomial ring by
/// taking leading symbols degreewise; throws FiltrationNotPreserved if some
/// image escapes F_1.
GrTransport associated_graded_transport(const WeylAction& act, int degree = 4);

struct WeylVerdict {
    bool h_semisimple = false;
    bool action_inner_faithful = false;  // via the dual coaction of the filtered action
    bool gr_inner_faithful = false;
    bool is_group_algebra = false;
    /// h_semisimple ∧ gr_inner_faithful but H is not a group algebra.
    bool theorem_violation = false;
    std::vector<std::string> notes;
};

WeylVerdict weyl_corollary_pipeline(const WeylAction& act, int degree = 4);

}  // namespace hopfkit
