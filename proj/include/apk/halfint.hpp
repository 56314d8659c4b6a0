#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace apk {

// User-facing problems (bad documents, violated operation preconditions).
// The CLI maps these to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariants. The CLI maps these to exit code 2.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

// Element of (1/2)Z, stored as twice its value so that all arithmetic and
// comparisons stay in plain integers. Midpoint comparisons are done on
// A+B sums by callers, so quarter-integers never arise.
struct HalfInt {
    long long twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(long long t) : twice(t) {}

    static constexpr HalfInt of(long long n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(long long t) { return HalfInt(t); }

    constexpr bool is_integer() const { return twice % 2 == 0; }

    long long as_integer() const {
        if (!is_integer()) throw InternalError("HalfInt: not an integer");
        return twice / 2;
    }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt operator+(long long n) const { return HalfInt(twice + 2 * n); }
    constexpr HalfInt operator-(long long n) const { return HalfInt(twice - 2 * n); }

    constexpr auto operator<=>(const HalfInt&) const = default;
    constexpr bool operator==(const HalfInt&) const = default;

    constexpr bool operator<(long long n) const { return twice < 2 * n; }
    constexpr bool operator<=(long long n) const { return twice <= 2 * n; }
    constexpr bool operator>(long long n) const { return twice > 2 * n; }
    constexpr bool operator>=(long long n) const { return twice >= 2 * n; }
    constexpr bool operator==(long long n) const { return twice == 2 * n; }

    // Largest integer <= value.
    constexpr long long floor() const {
        long long q = twice / 2;
        if (twice % 2 != 0 && twice < 0) --q;
        return q;
    }

    // "k" for integers, "k/2" (odd k) otherwise.
    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    // Accepts "k" and "k/2" with odd k; anything else is a schema error.
    static HalfInt parse(const std::string& s) {
        std::size_t pos = 0;
        long long num;
        try {
            num = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw InputError("not a half-integer: \"" + s + "\"");
        }
        if (pos == s.size()) return HalfInt::of(num);
        if (s.substr(pos) == "/2") {
            if (num % 2 == 0)
                throw InputError("not a half-integer (numerator must be odd): \"" + s + "\"");
            return HalfInt(num);
        }
        throw InputError("not a half-integer: \"" + s + "\"");
    }
};

// (-1)^e for an integer exponent.
constexpr int neg_one_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

// s^e for s in {+1,-1}.
constexpr int sign_pow(int s, long long e) { return (e % 2 == 0) ? 1 : s; }

}  // namespace apk

template <>
struct std::hash<apk::HalfInt> {
    std::size_t operator()(const apk::HalfInt& h) const noexcept {
        return std::hash<long long>()(h.twice);
    }
};
