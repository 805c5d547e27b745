#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace qsl2 {

// Half-integer stored as twice its value, so 3/2 is twice == 3.
class HalfInt {
  public:
    constexpr HalfInt() : twice_(0) {}
    constexpr explicit HalfInt(int whole) : twice_(2 * whole) {}
    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    // Accepts "2", "-1", "3/2", "-1/2".
    static HalfInt parse(const std::string& s);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // Valid only for integral values.
    constexpr int as_int() const { return twice_ / 2; }
    double as_double() const { return twice_ / 2.0; }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  private:
    int twice_;
};

inline HalfInt HalfInt::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return HalfInt(std::stoi(s));
        if (s.substr(slash + 1) != "2") throw std::invalid_argument(s);
        return from_twice(std::stoi(s.substr(0, slash)));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad half-integer literal: " + s);
    }
}

// Weight ladder index: m runs l, l-1, ..., -l; index(l, l) == 0.
inline int weight_index(HalfInt l, HalfInt m) { return (l.twice() - m.twice()) / 2; }
inline HalfInt weight_of_index(HalfInt l, int idx) { return HalfInt::from_twice(l.twice() - 2 * idx); }
inline int dim_of_spin(HalfInt l) { return l.twice() + 1; }

}  // namespace qsl2
