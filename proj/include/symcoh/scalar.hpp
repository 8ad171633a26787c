#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcoh/errors.hpp"

namespace symcoh {

using Rational = boost::multiprecision::cpp_rational;

enum class DomainKind { prime_field, rationals, mod_p_squared };

// A coefficient domain: the prime field F_p, the rationals, or the ring
// Z/p^2.  The two field kinds support rank computations; Z/p^2 supports
// arithmetic only.
struct Domain {
    DomainKind kind = DomainKind::rationals;
    long p = 0;  // prime, unused for the rationals

    static Domain Fp(long p);
    static Domain Q();
    static Domain Zp2(long p);

    long modulus() const;  // p, p^2, or 0 for Q
    bool is_field() const { return kind != DomainKind::mod_p_squared; }
    bool operator==(const Domain&) const = default;
    std::string str() const;
};

// Exact scalar in canonical form: residue in [0, modulus) for the modular
// domains, reduced fraction for Q.  Equality is representational.
class Scalar {
  public:
    Scalar() = default;  // zero of Q

    static Scalar zero(const Domain& d);
    static Scalar one(const Domain& d);
    static Scalar from_int(const Domain& d, long long v);
    static Scalar from_rational(Rational q);

    const Domain& domain() const { return dom_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByNonUnit
    Scalar operator-() const;
    Scalar inverse() const;  // DivisionByNonUnit
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    long residue() const { return v_; }          // modular domains
    const Rational& rational() const { return q_; }  // Q

    std::string str() const;

  private:
    Domain dom_ = Domain::Q();
    long v_ = 0;
    Rational q_ = 0;

    void check_same(const Scalar& o) const;
};

}  // namespace symcoh
