#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "addtop/error.hpp"

namespace addtop {

// Base field descriptor: a small prime field F_p or the rationals.
struct Field {
    enum class Kind { Fp, Q };

    Kind kind = Kind::Q;
    unsigned p = 0; // modulus, meaningful only for Fp

    static Field fp(unsigned p);
    static Field rationals() { return Field{Kind::Q, 0}; }

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const;
};

// Exact field element. Prime-field values are kept reduced to [0, p);
// rationals are canonical (lowest terms, positive denominator, via GMP).
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    explicit Scalar(const Field& f) : field_(f) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f);
    // Embeds an integer (reduces mod p over Fp).
    static Scalar ofInt(const Field& f, long n);
    static Scalar ofRational(const mpq_class& q);

    const Field& field() const { return field_; }
    bool isZero() const;
    bool isOne() const { return *this == one(field_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const; // throws Error on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // For Fp: the canonical residue in [0, p).
    long residue() const;
    const mpq_class& rational() const;

    std::string str() const;

private:
    Field field_;
    long r_ = 0;    // Fp payload
    mpq_class q_{0}; // Q payload

    void checkSame(const Scalar& o) const;
};

} // namespace addtop
