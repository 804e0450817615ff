#include "schroder/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace schroder {

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    // Avoid overflow on INT64_MIN by peeling limbs from the signed value.
    std::uint64_t mag = negative_ ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
        mag /= kBase;
    }
}

BigInt BigInt::from_string(const std::string& text) {
    BigInt out;
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("empty integer literal");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad digit in integer literal");
    }
    // Consume 9 decimal digits per limb, from the least significant end.
    std::size_t end = text.size();
    while (end > pos) {
        std::size_t begin = end >= pos + 9 ? end - 9 : pos;
        out.limbs_.push_back(static_cast<std::uint32_t>(std::stoul(text.substr(begin, end - begin))));
        end = begin;
    }
    out.negative_ = neg;
    out.normalize();
    return out;
}

void BigInt::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < a.size() || i < b.size() || carry != 0; ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum % kBase));
        carry = static_cast<std::uint32_t>(sum / kBase);
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (diff < 0) {
            diff += kBase;
            borrow = 1;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    BigInt out;
    if (negative_ == rhs.negative_) {
        out.limbs_ = add_magnitude(limbs_, rhs.limbs_);
        out.negative_ = negative_;
    } else {
        int cmp = compare_magnitude(*this, rhs);
        if (cmp == 0) return BigInt{};
        const BigInt& big = cmp > 0 ? *this : rhs;
        const BigInt& small = cmp > 0 ? rhs : *this;
        out.limbs_ = sub_magnitude(big.limbs_, small.limbs_);
        out.negative_ = big.negative_;
    }
    out.normalize();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt{};
    BigInt out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size() || carry != 0; ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry;
            if (j < rhs.limbs_.size()) {
                cur += static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
            }
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    out.negative_ = negative_ != rhs.negative_;
    out.normalize();
    return out;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (negative_ != rhs.negative_) return negative_;
    int cmp = compare_magnitude(*this, rhs);
    return negative_ ? cmp > 0 : cmp < 0;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string out = negative_ ? "-" : "";
    out += std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string limb = std::to_string(limbs_[i]);
        out += std::string(9 - limb.size(), '0') + limb;
    }
    return out;
}

std::optional<std::int64_t> BigInt::to_int64() const {
    // 3 limbs cover up to ~1e27; accumulate in unsigned and range-check.
    if (limbs_.size() > 3) return std::nullopt;
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (mag > (UINT64_MAX - limbs_[i]) / kBase) return std::nullopt;
        mag = mag * kBase + limbs_[i];
    }
    if (negative_) {
        if (mag > static_cast<std::uint64_t>(INT64_MAX) + 1) return std::nullopt;
        return static_cast<std::int64_t>(-mag);
    }
    if (mag > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
    return static_cast<std::int64_t>(mag);
}

}  // namespace schroder
