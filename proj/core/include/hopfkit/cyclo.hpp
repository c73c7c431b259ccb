#pragma once

#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopfkit/errors.hpp"

namespace hopfkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The cyclotomic field Q(zeta_N), fixed once per session.  Elements are
/// polynomials in zeta reduced modulo the N-th cyclotomic polynomial.
class CycloField {
public:
    static std::shared_ptr<const CycloField> create(int conductor);

    int conductor() const { return conductor_; }
    int degree() const { return degree_; }
    /// Coefficients of Phi_N, low degree first, monic, length degree()+1.
    const std::vector<Rational>& modulus() const { return modulus_; }

private:
    explicit CycloField(int conductor);
    int conductor_;
    int degree_;
    std::vector<Rational> modulus_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

int euler_phi(int n);

/// An exact element of a fixed cyclotomic field.
class Cyc {
public:
    Cyc() = default;  // invalid sentinel; real elements come from the factories
    Cyc(FieldPtr field, std::vector<Rational> coeffs);

    static Cyc zero(const FieldPtr& f);
    static Cyc one(const FieldPtr& f);
    static Cyc from_rational(const FieldPtr& f, const Rational& r);
    static Cyc from_int(const FieldPtr& f, long v);
    /// zeta_N^power
    static Cyc zeta_power(const FieldPtr& f, long power);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc inverse() const;
    Cyc operator/(const Cyc& o) const;
    Cyc pow(long e) const;

    Cyc& operator+=(const Cyc& o) {
        check_same_field(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Cyc& operator-=(const Cyc& o) {
        check_same_field(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    /// *this += a * b without materializing the product element.
    void add_mul(const Cyc& a, const Cyc& b);

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    /// Total order (lexicographic on coefficients); used for deterministic output.
    bool operator<(const Cyc& o) const;

    /// Polynomial expression in "z", e.g. "1/2*z^2 - 3".
    std::string str() const;
    /// Inverse of str(); accepts any sum of rational multiples of powers of z.
    static Cyc parse(const FieldPtr& f, const std::string& text);

private:
    void check_same_field(const Cyc& o) const;
    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

/// zeta_N^{N/m}: a primitive m-th root of unity.  Throws OrderNotRepresentable
/// unless m divides the conductor.
Cyc root_of_unity(const FieldPtr& f, int m);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);
/// p/q in lowest terms with positive denominator; accepts any sign of q.
Rational make_rational(Int num, Int den);

}  // namespace hopfkit
