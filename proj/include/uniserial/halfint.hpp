#pragma once

#include <compare>
#include <string>

namespace uniserial {

// Half-integer stored as twice its value, so all arithmetic stays integral.
struct HalfInt {
    int tw = 0; // value = tw/2

    HalfInt() = default;
    explicit HalfInt(int twice) : tw(twice) {}
    static HalfInt of_int(int n) { return HalfInt(2 * n); }
    static HalfInt half(int numerator) { return HalfInt(numerator); }

    bool is_integer() const { return tw % 2 == 0; }
    int as_int() const { return tw / 2; } // caller checks is_integer
    auto operator<=>(const HalfInt&) const = default;
};

inline HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.tw + b.tw); }
inline HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.tw - b.tw); }
inline HalfInt operator-(HalfInt a) { return HalfInt(-a.tw); }

inline std::string to_string(HalfInt a) {
    if (a.is_integer()) return std::to_string(a.as_int());
    return std::to_string(a.tw) + "/2";
}

} // namespace uniserial
