#include "hopfkit/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfkit {

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

/// Exact division a / b; remainder returned through rem.
Poly poly_divmod(Poly a, const Poly& b, Poly* rem) {
    Poly q;
    if (b.empty()) throw DivisionByZero();
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (rem) *rem = a;
    trim(q);
    return q;
}

Poly cyclotomic_poly(int n) {
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    Poly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly rem;
        p = poly_divmod(p, cyclotomic_poly(d), &rem);
        if (!rem.empty()) throw Error("cyclotomic polynomial division not exact");
    }
    return p;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

CycloField::CycloField(int conductor) : conductor_(conductor) {
    if (conductor < 1) throw ValidationError("conductor must be positive");
    modulus_ = cyclotomic_poly(conductor);
    degree_ = static_cast<int>(modulus_.size()) - 1;
}

std::shared_ptr<const CycloField> CycloField::create(int conductor) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const CycloField>(new CycloField(conductor));
    cache.emplace(conductor, f);
    return f;
}

Cyc::Cyc(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != field_->degree())
        throw DimensionMismatch("coefficient vector length != field degree");
}

Cyc Cyc::zero(const FieldPtr& f) { return Cyc(f, std::vector<Rational>(f->degree(), Rational(0))); }

Cyc Cyc::one(const FieldPtr& f) { return from_rational(f, Rational(1)); }

Cyc Cyc::from_rational(const FieldPtr& f, const Rational& r) {
    std::vector<Rational> c(f->degree(), Rational(0));
    c[0] = r;
    return Cyc(f, std::move(c));
}

Cyc Cyc::from_int(const FieldPtr& f, long v) { return from_rational(f, Rational(v)); }

Cyc Cyc::zeta_power(const FieldPtr& f, long power) {
    long n = f->conductor();
    long e = ((power % n) + n) % n;
    Poly p(e + 1, Rational(0));
    p[e] = 1;
    Poly rem;
    poly_divmod(p, f->modulus(), &rem);
    rem.resize(f->degree(), Rational(0));
    return Cyc(f, std::move(rem));
}

bool Cyc::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyc::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyc::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& r) { return r == 0; });
}

Rational Cyc::rational_value() const {
    if (!is_rational()) throw Error("element is not rational");
    return coeffs_[0];
}

void Cyc::check_same_field(const Cyc& o) const {
    if (!field_ || !o.field_ || field_->conductor() != o.field_->conductor()) throw FieldMismatch();
}

Cyc Cyc::operator+(const Cyc& o) const {
    check_same_field(o);
    std::vector<Rational> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator-(const Cyc& o) const {
    check_same_field(o);
    std::vector<Rational> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator*(const Cyc& o) const {
    check_same_field(o);
    if (field_->degree() == 1) {
        // Rational field: a single coefficient, no modular reduction needed.
        std::vector<Rational> c(1);
        c[0] = coeffs_[0] * o.coeffs_[0];
        return Cyc(field_, std::move(c));
    }
    Poly a(coeffs_), b(o.coeffs_);
    trim(a);
    trim(b);
    Poly prod = poly_mul(a, b);
    if (prod.size() <= static_cast<size_t>(field_->degree())) {
        // Already reduced: skip the polynomial division.
        prod.resize(field_->degree(), Rational(0));
        return Cyc(field_, std::move(prod));
    }
    Poly rem;
    poly_divmod(prod, field_->modulus(), &rem);
    rem.resize(field_->degree(), Rational(0));
    return Cyc(field_, std::move(rem));
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Extended gcd of the representing polynomial with Phi_N.
    Poly r0 = field_->modulus(), r1(coeffs_);
    trim(r1);
    Poly s0 = {}, s1 = {Rational(1)};  // coefficients of the element in the combination
    while (!r1.empty()) {
        Poly rem;
        Poly q = poly_divmod(r0, r1, &rem);
        Poly s2 = s0;  // s2 = s0 - q*s1
        Poly qs1 = poly_mul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 is a nonzero constant gcd (Phi_N is irreducible).
    if (r0.size() != 1) throw Error("gcd with cyclotomic modulus is not constant");
    Rational g = r0[0];
    Poly inv = s0;
    for (auto& c : inv) c /= g;
    Poly rem;
    poly_divmod(inv, field_->modulus(), &rem);
    rem.resize(field_->degree(), Rational(0));
    return Cyc(field_, std::move(rem));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

Cyc Cyc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc result = one(field_);
    Cyc base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

void Cyc::add_mul(const Cyc& a, const Cyc& b) {
    check_same_field(a);
    a.check_same_field(b);
    if (field_->degree() == 1) {
        coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
        return;
    }
    *this += a * b;
}

bool Cyc::operator==(const Cyc& o) const {
    check_same_field(o);
    // cpp_rational keeps values normalized, so componentwise integer equality
    // is exact and avoids the generic ordering-based comparison.
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (numerator(coeffs_[i]) != numerator(o.coeffs_[i]) ||
            denominator(coeffs_[i]) != denominator(o.coeffs_[i]))
            return false;
    return true;
}

bool Cyc::operator<(const Cyc& o) const {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    }
    return false;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << rational_str(abs);
        } else {
            if (abs != 1) os << rational_str(abs) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

Rational make_rational(Int num, Int den) {
    if (den == 0) throw DivisionByZero();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + text + "'");
    }
}

Cyc Cyc::parse(const FieldPtr& f, const std::string& text) {
    Cyc result = Cyc::zero(f);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw ParseError("empty scalar expression");
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        char ch = text[i];
        if (ch == '+' || ch == '-') {
            if (!expect_term) expect_term = true;
            sign *= (ch == '-') ? -1 : 1;
            ++i;
            continue;
        }
        // term: [rational][*][z[^k]]
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
            coeff = parse_rational(text.substr(start, i - start));
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long power = 0;
        if (i < text.size() && text[i] == 'z') {
            ++i;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (start == i) throw ParseError("missing exponent in '" + text + "'");
                power = std::stol(text.substr(start, i - start));
            }
        } else if (!have_coeff) {
            throw ParseError("unexpected character '" + std::string(1, ch) + "' in '" + text + "'");
        }
        Cyc term = Cyc::zeta_power(f, power) * Cyc::from_rational(f, sign * coeff);
        result += term;
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw ParseError("dangling sign in '" + text + "'");
    return result;
}

Cyc root_of_unity(const FieldPtr& f, int m) {
    if (m < 1 || f->conductor() % m != 0) throw OrderNotRepresentable(m, f->conductor());
    return Cyc::zeta_power(f, f->conductor() / m);
}

}  // namespace hopfkit
