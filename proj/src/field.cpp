#include "addtop/field.hpp"

namespace addtop {

namespace {

bool isPrime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long modReduce(long n, unsigned p) {
    long m = n % static_cast<long>(p);
    if (m < 0) m += p;
    return m;
}

} // namespace

Field Field::fp(unsigned p) {
    if (!isPrime(p)) throw ValidationError("Field::fp: modulus " + std::to_string(p) + " is not prime");
    return Field{Kind::Fp, p};
}

std::string Field::str() const {
    return kind == Kind::Fp ? "F" + std::to_string(p) : "Q";
}

Scalar Scalar::one(const Field& f) { return ofInt(f, 1); }

Scalar Scalar::ofInt(const Field& f, long n) {
    Scalar s(f);
    if (f.kind == Field::Kind::Fp)
        s.r_ = modReduce(n, f.p);
    else
        s.q_ = n;
    return s;
}

Scalar Scalar::ofRational(const mpq_class& q) {
    Scalar s(Field::rationals());
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

bool Scalar::isZero() const {
    return field_.kind == Field::Kind::Fp ? r_ == 0 : q_ == 0;
}

void Scalar::checkSame(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalar fields differ: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    checkSame(o);
    Scalar s(field_);
    if (field_.kind == Field::Kind::Fp)
        s.r_ = modReduce(r_ + o.r_, field_.p);
    else
        s.q_ = q_ + o.q_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    checkSame(o);
    Scalar s(field_);
    if (field_.kind == Field::Kind::Fp)
        s.r_ = modReduce(r_ - o.r_, field_.p);
    else
        s.q_ = q_ - o.q_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    checkSame(o);
    Scalar s(field_);
    if (field_.kind == Field::Kind::Fp)
        s.r_ = modReduce(r_ * o.r_, field_.p);
    else
        s.q_ = q_ * o.q_;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.kind == Field::Kind::Fp)
        s.r_ = modReduce(-r_, field_.p);
    else
        s.q_ = -q_;
    return s;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw Error("Scalar::inverse of zero");
    Scalar s(field_);
    if (field_.kind == Field::Kind::Fp) {
        // p is a small prime, so Fermat via repeated squaring
        long base = r_, e = static_cast<long>(field_.p) - 2, acc = 1;
        while (e > 0) {
            if (e & 1) acc = modReduce(acc * base, field_.p);
            base = modReduce(base * base, field_.p);
            e >>= 1;
        }
        s.r_ = acc;
    } else {
        s.q_ = 1 / q_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    checkSame(o);
    return field_.kind == Field::Kind::Fp ? r_ == o.r_ : q_ == o.q_;
}

long Scalar::residue() const {
    if (field_.kind != Field::Kind::Fp) throw Error("Scalar::residue on rational");
    return r_;
}

const mpq_class& Scalar::rational() const {
    if (field_.kind != Field::Kind::Q) throw Error("Scalar::rational on prime-field element");
    return q_;
}

std::string Scalar::str() const {
    if (field_.kind == Field::Kind::Fp) return std::to_string(r_);
    return q_.get_str();
}

} // namespace addtop
