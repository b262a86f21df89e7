#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "qfht/errors.hpp"

namespace qfht {

/// Quaternion over the basis {1, i, j, k}.  Values are immutable in spirit:
/// every operation returns a new value, nothing mutates in place.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    /// Real scalars embed as w + 0i + 0j + 0k.
    constexpr Quaternion(double real) : w(real) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
}

/// Hamilton product.  Associative and distributive, not commutative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

constexpr Quaternion operator/(const Quaternion& q, double s) {
    return {q.w / s, q.x / s, q.y / s, q.z / s};
}

inline Quaternion q_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Magnitude of the vector (imaginary) part.
inline double vec_norm(const Quaternion& q) {
    return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

constexpr bool is_real(const Quaternion& q) {
    return q.x == 0.0 && q.y == 0.0 && q.z == 0.0;
}

/// q^{-1} = conj(q) / |q|^2.
inline Quaternion q_inverse(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) throw DomainError("q_inverse: zero quaternion has no inverse");
    return conj(q) / n2;
}

/// A quaternion u with Re u = 0 and |u| = 1, so u^2 = -1.  Construction
/// normalizes; a zero vector part is rejected.
struct ImaginaryUnit {
    Quaternion u;

    explicit ImaginaryUnit(const Quaternion& v) : u(v) {
        if (v.w != 0.0) throw DomainError("ImaginaryUnit: nonzero real part");
        const double n = vec_norm(v);
        if (n == 0.0) throw DomainError("ImaginaryUnit: zero vector part");
        u = v / n;
    }

    static ImaginaryUnit from_vector(double x, double y, double z) {
        return ImaginaryUnit(Quaternion{0.0, x, y, z});
    }
    static ImaginaryUnit i() { return ImaginaryUnit(Quaternion::i()); }
    static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::j()); }
    static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::k()); }
};

/// Polar form of a quaternion within its slice:
///   q = modulus * (cos(angle) + unit * sin(angle)),  angle in [0, pi].
struct SliceForm {
    double modulus = 0.0;
    double angle = 0.0;
    ImaginaryUnit unit = ImaginaryUnit::i();
};

/// Decompose q into slice polar form.  Real q (including 0) gets the
/// canonical unit i, with angle 0 for w >= 0 and pi for w < 0; every
/// downstream formula is branch-free in this choice.
inline SliceForm slice_decompose(const Quaternion& q) {
    const double v = vec_norm(q);
    SliceForm s;
    if (v == 0.0) {
        s.modulus = std::abs(q.w);
        s.angle = (q.w >= 0.0) ? 0.0 : 3.14159265358979323846;
        s.unit = ImaginaryUnit::i();
        return s;
    }
    s.modulus = norm(q);
    s.angle = std::atan2(v, q.w); // v > 0 so angle in (0, pi)
    s.unit = ImaginaryUnit::from_vector(q.x / v, q.y / v, q.z / v);
    return s;
}

inline Quaternion reconstruct(const SliceForm& s) {
    return s.modulus * (Quaternion{std::cos(s.angle), 0, 0, 0} +
                        std::sin(s.angle) * s.unit.u);
}

/// Coordinates of q inside its own slice C_I, as a complex number with
/// nonnegative imaginary part: a + I b  ->  a + ib with b = |vec part|.
inline std::complex<double> slice_complex(const Quaternion& q) {
    return {q.w, vec_norm(q)};
}

/// Embed a complex number into the slice C_I: a + ib  ->  a + I b.
inline Quaternion embed(const std::complex<double>& c, const ImaginaryUnit& unit) {
    return Quaternion{c.real(), 0, 0, 0} + c.imag() * unit.u;
}

/// q^n for n >= 0 via polar slice form: modulus^n (cos n.phi + I sin n.phi).
inline Quaternion slice_power(const Quaternion& q, int n) {
    if (n < 0) throw DomainError("slice_power: negative exponent");
    if (n == 0) return Quaternion::one();
    const SliceForm s = slice_decompose(q);
    const double m = std::pow(s.modulus, n);
    const double a = n * s.angle;
    return embed({m * std::cos(a), m * std::sin(a)}, s.unit);
}

/// exp within the slice of q: e^{a + I b} = e^a (cos b + I sin b).
inline Quaternion slice_exp(const Quaternion& q) {
    const double b = vec_norm(q);
    const double ea = std::exp(q.w);
    if (b == 0.0) return {ea, 0, 0, 0};
    const ImaginaryUnit unit = ImaginaryUnit::from_vector(q.x / b, q.y / b, q.z / b);
    return embed({ea * std::cos(b), ea * std::sin(b)}, unit);
}

/// True when a and b lie in a common slice (their vector parts are parallel,
/// or one of them is real).  Quaternions in one slice commute.
inline bool same_slice(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
    const double cx = a.y * b.z - a.z * b.y;
    const double cy = a.z * b.x - a.x * b.z;
    const double cz = a.x * b.y - a.y * b.x;
    const double cross = std::sqrt(cx * cx + cy * cy + cz * cz);
    const double scale = vec_norm(a) * vec_norm(b);
    return cross <= tol * (scale > 0.0 ? scale : 1.0);
}

} // namespace qfht
