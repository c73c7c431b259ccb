#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands live in different cyclotomic fields") {}
};

class OrderNotRepresentable : public Error {
public:
    OrderNotRepresentable(int m, int conductor)
        : Error("no primitive root of unity of order " + std::to_string(m) +
                " in Q(zeta_" + std::to_string(conductor) + ")") {}
};

class InvalidHopf : public Error {
public:
    explicit InvalidHopf(const std::string& what) : Error("invalid Hopf algebra: " + what) {}
};

class UnsplittableOverField : public Error {
public:
    explicit UnsplittableOverField(const std::string& what)
        : Error("polynomial does not split over the session field: " + what) {}
};

class NotASubcoalgebra : public Error {
public:
    explicit NotASubcoalgebra(const std::string& what) : Error("not a subcoalgebra: " + what) {}
};

class NotATwist : public Error {
public:
    explicit NotATwist(const std::string& what) : Error("not a Drinfeld twist: " + what) {}
};

class InvalidGroupTable : public Error {
public:
    explicit InvalidGroupTable(const std::string& what) : Error("invalid group table: " + what) {}
};

class UnsupportedKind : public Error {
public:
    explicit UnsupportedKind(const std::string& what) : Error("unsupported algebra kind: " + what) {}
};

class UnverifiedSource : public Error {
public:
    explicit UnverifiedSource(const std::string& what) : Error("unverified source: " + what) {}
};

class InvalidCharacter : public Error {
public:
    explicit InvalidCharacter(const std::string& what) : Error("invalid character: " + what) {}
};

class InfiniteDimensional : public Error {
public:
    explicit InfiniteDimensional(const std::string& what) : Error("not finite dimensional: " + what) {}
};

class NotDiagonal : public Error {
public:
    explicit NotDiagonal(const std::string& what) : Error("generator is not an eigenvector: " + what) {}
};

class RelationNotPreserved : public Error {
public:
    explicit RelationNotPreserved(const std::string& what) : Error("relation not preserved: " + what) {}
};

class FiltrationNotPreserved : public Error {
public:
    explicit FiltrationNotPreserved(const std::string& what) : Error("filtration not preserved: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("validation error: " + what) {}
};

}  // namespace hopfkit
