#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tqi {

// Exact rational on 128-bit integers; enough headroom for the small linear
// solves done here (entropies and boundary lengths are two-digit numbers).
struct Rat {
    __int128 num = 0;
    __int128 den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
    }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::domain_error("rational division by zero");
        return Rat(num * o.den, den * o.num);
    }
    Rat operator-() const { return Rat(-num, den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    bool is_integer() const { return den == 1; }
    double value() const { return double(num) / double(den); }

    std::string str() const {
        auto int_str = [](__int128 v) {
            if (v == 0) return std::string("0");
            bool neg = v < 0;
            if (neg) v = -v;
            std::string s;
            while (v) {
                s.insert(s.begin(), char('0' + int(v % 10)));
                v /= 10;
            }
            return neg ? "-" + s : s;
        };
        if (den == 1) return int_str(num);
        return int_str(num) + "/" + int_str(den);
    }
};

}  // namespace tqi
