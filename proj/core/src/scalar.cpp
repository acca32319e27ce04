#include "prelie/scalar.hpp"

#include <charconv>

#include "prelie/errors.hpp"

namespace prelie {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidScalar("modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view name) {
    name = trim(name);
    if (name == "q" || name == "Q") return rationals();
    if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), p);
        if (ec == std::errc() && ptr == name.data() + name.size()) return prime(p);
    }
    throw InvalidScalar("unknown field '" + std::string(name) + "'");
}

std::string Field::name() const { return p_ == 0 ? "q" : "f" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return Scalar(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
    if (p_ == 0) return Scalar(q);
    std::uint64_t den = reduce_mpz(q.get_den(), p_);
    if (den == 0) throw DivisionByZero("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
    std::uint64_t num = reduce_mpz(q.get_num(), p_);
    return Scalar(mul_mod(num, pow_mod(den, p_ - 2, p_), p_), p_);
}

Scalar Field::parse_scalar(std::string_view text) const {
    std::string_view s = trim(text);
    auto pos = s.find("mod");
    if (pos != std::string_view::npos) {
        std::string_view mod = trim(s.substr(pos + 3));
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(mod.data(), mod.data() + mod.size(), p);
        if (ec != std::errc() || ptr != mod.data() + mod.size())
            throw InvalidScalar("bad modulus in '" + std::string(text) + "'");
        if (p != p_) throw FieldMismatch("scalar '" + std::string(text) + "' is not in field " + name());
        s = trim(s.substr(0, pos));
    }
    if (s.empty()) throw InvalidScalar("empty scalar");
    mpq_class q;
    try {
        std::string str(s);
        if (str.front() == '+') str.erase(0, 1);
        if (q.set_str(str, 10) != 0) throw InvalidScalar("cannot parse scalar '" + std::string(text) + "'");
    } catch (const std::invalid_argument&) {
        throw InvalidScalar("cannot parse scalar '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return from_rational(q);
}

std::vector<Scalar> Field::elements() const {
    if (p_ == 0) throw InfiniteField("cannot enumerate the rationals");
    std::vector<Scalar> out;
    out.reserve(p_);
    for (std::uint64_t r = 0; r < p_; ++r) out.emplace_back(r, p_);
    return out;
}

Field Scalar::field() const {
    if (is_rational()) return Field::rationals();
    return Field::prime(std::get<Residue>(v_).p);
}

bool Scalar::is_zero() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<Residue>(v_).r == 0;
}

bool Scalar::is_one() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<Residue>(v_).r == 1;
}

void Scalar::check_same(const Scalar& o) const {
    std::uint64_t a = is_rational() ? 0 : std::get<Residue>(v_).p;
    std::uint64_t b = o.is_rational() ? 0 : std::get<Residue>(o.v_).p;
    if (a != b) throw FieldMismatch("mixed scalar fields in arithmetic");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1) / *q);
    const auto& r = std::get<Residue>(v_);
    return Scalar(pow_mod(r.r, r.p - 2, r.p), r.p);
}

std::string Scalar::to_string() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    const auto& r = std::get<Residue>(v_);
    return std::to_string(r.r) + " mod " + std::to_string(r.p);
}

Scalar Scalar::lift() const {
    if (is_rational()) return *this;
    return Scalar(mpq_class(static_cast<unsigned long>(std::get<Residue>(v_).r)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q += std::get<mpq_class>(o.v_);
    } else {
        auto& r = std::get<Residue>(v_);
        r.r += std::get<Residue>(o.v_).r;
        if (r.r >= r.p) r.r -= r.p;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q -= std::get<mpq_class>(o.v_);
    } else {
        auto& r = std::get<Residue>(v_);
        std::uint64_t b = std::get<Residue>(o.v_).r;
        r.r = r.r >= b ? r.r - b : r.r + r.p - b;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q *= std::get<mpq_class>(o.v_);
    } else {
        auto& r = std::get<Residue>(v_);
        r.r = mul_mod(r.r, std::get<Residue>(o.v_).r, r.p);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const auto& r = std::get<Residue>(v_);
    return Scalar(r.r == 0 ? 0 : r.p - r.r, r.p);
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (a.is_rational()) return a.rational() == b.rational();
    return a.residue() == b.residue();
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = f.one();
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (y.size() != x.size()) throw DimensionMismatch("axpy length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!x[i].is_zero()) y[i] += a * x[i];
    }
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vec operator-(const Vec& a) {
    Vec out;
    out.reserve(a.size());
    for (const auto& s : a) out.push_back(-s);
    return out;
}

Vec operator*(const Scalar& a, const Vec& x) {
    Vec out;
    out.reserve(x.size());
    for (const auto& s : x) out.push_back(a * s);
    return out;
}

Vec lift(const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.lift());
    return out;
}

Vec reduce(const Vec& v, const Field& f) {
    Vec out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(f.from_rational(s.lift().rational()));
    return out;
}

}  // namespace prelie
