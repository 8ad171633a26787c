#include "symcoh/scalar.hpp"

#include <sstream>

namespace symcoh {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// inverse of a mod m, or -1 when gcd(a, m) != 1
long mod_inverse(long a, long m) {
    long old_r = a, r = m;
    long old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1 && old_r != -1) return -1;
    long inv = (old_r == 1) ? old_s : -old_s;
    return ((inv % m) + m) % m;
}

}  // namespace

Domain Domain::Fp(long p) {
    if (!is_prime(p)) throw ConfigError("F_p requires a prime, got " + std::to_string(p));
    return Domain{DomainKind::prime_field, p};
}

Domain Domain::Q() { return Domain{DomainKind::rationals, 0}; }

Domain Domain::Zp2(long p) {
    if (!is_prime(p)) throw ConfigError("Z/p^2 requires a prime, got " + std::to_string(p));
    if (p > 46337) throw ConfigError("Z/p^2 modulus overflows 64-bit arithmetic");
    return Domain{DomainKind::mod_p_squared, p};
}

long Domain::modulus() const {
    switch (kind) {
        case DomainKind::prime_field: return p;
        case DomainKind::mod_p_squared: return p * p;
        case DomainKind::rationals: return 0;
    }
    return 0;
}

std::string Domain::str() const {
    switch (kind) {
        case DomainKind::prime_field: return "F_" + std::to_string(p);
        case DomainKind::mod_p_squared: return "Z_" + std::to_string(p * p);
        case DomainKind::rationals: return "Q";
    }
    return "?";
}

Scalar Scalar::zero(const Domain& d) { return from_int(d, 0); }
Scalar Scalar::one(const Domain& d) { return from_int(d, 1); }

Scalar Scalar::from_int(const Domain& d, long long v) {
    Scalar s;
    s.dom_ = d;
    if (d.kind == DomainKind::rationals) {
        s.q_ = Rational(v);
    } else {
        long m = d.modulus();
        s.v_ = static_cast<long>(((v % m) + m) % m);
    }
    return s;
}

Scalar Scalar::from_rational(Rational q) {
    Scalar s;
    s.dom_ = Domain::Q();
    s.q_ = std::move(q);
    return s;
}

bool Scalar::is_zero() const {
    return dom_.kind == DomainKind::rationals ? q_ == 0 : v_ == 0;
}

bool Scalar::is_one() const {
    return dom_.kind == DomainKind::rationals ? q_ == 1 : v_ == 1;
}

bool Scalar::is_unit() const {
    if (is_zero()) return false;
    if (dom_.kind == DomainKind::mod_p_squared) return v_ % dom_.p != 0;
    return true;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(dom_ == o.dom_))
        throw DomainMismatch("scalar domains differ: " + dom_.str() + " vs " + o.dom_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.dom_ = dom_;
    if (dom_.kind == DomainKind::rationals)
        r.q_ = q_ + o.q_;
    else
        r.v_ = (v_ + o.v_) % dom_.modulus();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.dom_ = dom_;
    if (dom_.kind == DomainKind::rationals)
        r.q_ = q_ - o.q_;
    else {
        long m = dom_.modulus();
        r.v_ = ((v_ - o.v_) % m + m) % m;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.dom_ = dom_;
    if (dom_.kind == DomainKind::rationals)
        r.q_ = q_ * o.q_;
    else
        r.v_ = (v_ * o.v_) % dom_.modulus();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.dom_ = dom_;
    if (dom_.kind == DomainKind::rationals)
        r.q_ = -q_;
    else {
        long m = dom_.modulus();
        r.v_ = (m - v_) % m;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (!is_unit())
        throw DivisionByNonUnit("no inverse for " + str() + " in " + dom_.str());
    Scalar r;
    r.dom_ = dom_;
    if (dom_.kind == DomainKind::rationals) {
        r.q_ = 1 / q_;
    } else {
        long inv = mod_inverse(v_, dom_.modulus());
        if (inv < 0) throw DivisionByNonUnit("no inverse for " + str() + " in " + dom_.str());
        r.v_ = inv;
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Scalar acc = Scalar::one(dom_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(dom_ == o.dom_)) return false;
    return dom_.kind == DomainKind::rationals ? q_ == o.q_ : v_ == o.v_;
}

std::string Scalar::str() const {
    if (dom_.kind == DomainKind::rationals) {
        std::ostringstream os;
        os << q_;
        return os.str();
    }
    return std::to_string(v_);
}

}  // namespace symcoh
