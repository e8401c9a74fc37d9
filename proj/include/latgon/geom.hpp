#pragma once

// Exact planar lattice geometry primitives. Everything here is integer or
// rational arithmetic; no floating point is used anywhere in the library.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgon {

using Z = long long;
using i128 = __int128;

// Coordinates accepted from external input are validated against this bound
// so that every intermediate product in the library fits in 128 bits.
constexpr Z kCoordLimit = 1'000'000'000'000LL;  // 1e12

inline Z gcd_z(Z a, Z b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) { s.push_back(char('0' + int(u % 10))); u /= 10; }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

struct Pt {
    Z x = 0, y = 0;
    friend auto operator<=>(const Pt&, const Pt&) = default;  // lexicographic
    friend Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
    friend Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
    friend Pt operator*(Z s, Pt a) { return {s * a.x, s * a.y}; }
};

// Lexicographic by x, then y.
inline bool lex_less(const Pt& a, const Pt& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
}

inline i128 cross(Pt o, Pt a, Pt b) {
    return i128(a.x - o.x) * (b.y - o.y) - i128(a.y - o.y) * (b.x - o.x);
}
inline i128 cross(Pt a, Pt b) { return i128(a.x) * b.y - i128(a.y) * b.x; }
inline i128 dot(Pt a, Pt b) { return i128(a.x) * b.x + i128(a.y) * b.y; }

inline Pt primitive(Pt v) {
    if (v.x == 0 && v.y == 0) throw std::invalid_argument("primitive: zero vector");
    Z g = gcd_z(v.x, v.y);
    return {v.x / g, v.y / g};
}

// Exact rational with value num/den, den > 0, reduced.
struct Rat {
    Z num = 0, den = 1;

    Rat() = default;
    Rat(Z n) : num(n), den(1) {}
    Rat(Z n, Z d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Z g = gcd_z(num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    bool is_integral() const { return den == 1; }

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 an = n < 0 ? -n : n;
        i128 g = an, h = d;
        while (h) { i128 t = g % h; g = h; h = t; }
        if (g > 1) { n /= g; d /= g; }
        if (n > i128(kCoordLimit) * kCoordLimit || n < -i128(kCoordLimit) * kCoordLimit ||
            d > i128(kCoordLimit) * kCoordLimit)
            throw std::overflow_error("Rat: value out of supported range");
        return Rat{Z(n), Z(d), 0};
    }

    friend Rat operator+(Rat a, Rat b) {
        return make(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator-(Rat a, Rat b) {
        return make(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator*(Rat a, Rat b) { return make(i128(a.num) * b.num, i128(a.den) * b.den); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
        return make(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }

    std::string str() const {
        std::string s = std::to_string(num);
        if (den != 1) s += "/" + std::to_string(den);
        return s;
    }

  private:
    Rat(Z n, Z d, int) : num(n), den(d) {}  // pre-reduced
};

struct RatPt {
    Rat x, y;
    friend bool operator==(const RatPt&, const RatPt&) = default;
};

inline bool lex_less(const RatPt& a, const RatPt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Sign of the cross product (b - a) x (c - a) for rational points.
inline int orient(const RatPt& a, const RatPt& b, const RatPt& c) {
    Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.num < 0 ? -1 : v.num > 0 ? 1 : 0;
}

inline void check_coord(Z v, const char* what) {
    if (v > kCoordLimit || v < -kCoordLimit)
        throw std::invalid_argument(std::string(what) + ": coordinate out of supported range");
}

}  // namespace latgon
