#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace prelie {

class Scalar;

// The scalar field: Q when modulus() == 0, otherwise F_p.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }
    // Throws InvalidScalar unless p is prime.
    static Field prime(std::uint64_t p);
    // Accepts "q" or "f<p>" (e.g. "f3").
    static Field parse(std::string_view name);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    // Reduces a rational into this field; throws DivisionByZero if the
    // denominator vanishes mod p.
    Scalar from_rational(const mpq_class& q) const;
    // Parses "p/q", "n" or "r mod p" in this field.
    Scalar parse_scalar(std::string_view text) const;
    // Elements of F_p in increasing residue order; throws InfiniteField for Q.
    std::vector<Scalar> elements() const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Exact field element. Rationals are kept canonical by GMP; residues lie in [0, p).
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    explicit Scalar(const mpq_class& q) : v_(q) { std::get<mpq_class>(v_).canonicalize(); }
    explicit Scalar(mpq_class&& q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
    Scalar(std::uint64_t residue, std::uint64_t p) : v_(Residue{residue % p, p}) {}

    Field field() const;
    bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint64_t residue() const { return std::get<Residue>(v_).r; }

    Scalar inverse() const;
    // "p/q" for rationals, "r mod p" for residues.
    std::string to_string() const;
    // Canonical integer lift into Q (residue r maps to r); rationals unchanged.
    Scalar lift() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    struct Residue {
        std::uint64_t r;
        std::uint64_t p;
    };
    void check_same(const Scalar& o) const;

    std::variant<mpq_class, Residue> v_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
// y += a * x
void axpy(Vec& y, const Scalar& a, const Vec& x);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& a, const Vec& x);
Vec lift(const Vec& v);
Vec reduce(const Vec& v, const Field& f);

}  // namespace prelie
