// Arbitrary-precision signed integers with an inline int64 fast path.
// Values that fit in int64 never allocate; arithmetic promotes to a
// 32-bit-limb magnitude representation on overflow.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <iosfwd>
#include <string>
#include <vector>

namespace coverhom {

class Zint {
  public:
    Zint() = default;
    Zint(int v) : small_(v) {}
    Zint(long v) : small_(v) {}
    Zint(long long v) : small_(v) {}
    Zint(unsigned long long v);

    static Zint from_string(const std::string& s);
    std::string to_string() const;

    bool is_zero() const { return big_.empty() && small_ == 0; }
    bool is_one() const { return big_.empty() && small_ == 1; }
    bool fits_int64() const { return big_.empty(); }
    long long as_int64() const { return small_; }  // valid only if fits_int64()

    int sign() const;
    Zint abs() const;
    Zint operator-() const;

    Zint operator+(const Zint& o) const;
    Zint operator-(const Zint& o) const;
    Zint operator*(const Zint& o) const;
    Zint& operator+=(const Zint& o) { *this = *this + o; return *this; }
    Zint& operator-=(const Zint& o) { *this = *this - o; return *this; }
    Zint& operator*=(const Zint& o) { *this = *this * o; return *this; }

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend. o must be nonzero.
    static void divmod(const Zint& a, const Zint& b, Zint& q, Zint& r);
    Zint operator/(const Zint& o) const;
    Zint operator%(const Zint& o) const;

    bool divides(const Zint& o) const;  // *this != 0 and o % *this == 0

    bool operator==(const Zint& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Zint& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Zint& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Zint& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Zint& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Zint& o) const { return cmp(*this, o) >= 0; }

    static int cmp(const Zint& a, const Zint& b);
    static Zint gcd(Zint a, Zint b);  // nonnegative

    std::size_t hash() const;

  private:
    // Invariant: either big_ is empty and small_ holds the value, or big_
    // holds a normalized magnitude (no leading zero limbs, does not fit
    // int64) with sign_ in {-1, +1} and small_ == 0.
    long long small_ = 0;
    signed char sign_ = 0;
    std::vector<std::uint32_t> big_;

    static Zint make_big(int sign, std::vector<std::uint32_t> mag);
    void demote();  // shrink big form back to small when it fits
    static std::vector<std::uint32_t> to_mag(const Zint& a);
    static int mag_cmp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mag_add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mag_sub(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mag_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void mag_divmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

std::ostream& operator<<(std::ostream& os, const Zint& z);

}  // namespace coverhom
