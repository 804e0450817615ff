#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schroder {

// Signed arbitrary-precision integer, base 1e9 limbs, little-endian.
// Supports exactly what the sequence recurrences need: +, -, *, comparison.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);  // implicit, so literals mix into expressions

    static BigInt from_string(const std::string& text);

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    bool operator==(const BigInt& rhs) const;
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;
    bool operator>(const BigInt& rhs) const { return rhs < *this; }
    bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
    bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    std::string to_string() const;
    // Value if it fits in int64, nullopt otherwise.
    std::optional<std::int64_t> to_int64() const;

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;

    // Invariant: no trailing zero limbs; zero is the empty limb vector with negative_ == false.
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;

    void normalize();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
};

}  // namespace schroder
