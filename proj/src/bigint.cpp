#include "coverhom/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace coverhom {

namespace {

std::vector<std::uint32_t> mag_from_u64(std::uint64_t v) {
    std::vector<std::uint32_t> m;
    while (v) {
        m.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
    return m;
}

std::uint64_t abs_u64(long long v) {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

Zint::Zint(unsigned long long v) {
    if (v <= static_cast<unsigned long long>(INT64_MAX)) {
        small_ = static_cast<long long>(v);
    } else {
        sign_ = 1;
        big_ = mag_from_u64(v);
    }
}

Zint Zint::make_big(int sign, std::vector<std::uint32_t> mag) {
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    Zint z;
    if (mag.empty()) return z;
    z.sign_ = static_cast<signed char>(sign);
    z.big_ = std::move(mag);
    z.demote();
    return z;
}

void Zint::demote() {
    if (big_.empty() || big_.size() > 2) return;
    std::uint64_t v = big_[0];
    if (big_.size() == 2) v |= static_cast<std::uint64_t>(big_[1]) << 32;
    if (sign_ > 0 && v <= static_cast<std::uint64_t>(INT64_MAX)) {
        small_ = static_cast<long long>(v);
    } else if (sign_ < 0 && v <= abs_u64(INT64_MIN)) {
        small_ = v == abs_u64(INT64_MIN) ? INT64_MIN : -static_cast<long long>(v);
    } else {
        return;
    }
    sign_ = 0;
    big_.clear();
}

std::vector<std::uint32_t> Zint::to_mag(const Zint& a) {
    if (!a.big_.empty()) return a.big_;
    return mag_from_u64(abs_u64(a.small_));
}

int Zint::sign() const {
    if (!big_.empty()) return sign_;
    return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
}

Zint Zint::abs() const { return sign() < 0 ? -*this : *this; }

Zint Zint::operator-() const {
    if (big_.empty()) {
        if (small_ != INT64_MIN) {
            Zint z;
            z.small_ = -small_;
            return z;
        }
        return make_big(1, mag_from_u64(abs_u64(INT64_MIN)));
    }
    Zint z = *this;
    z.sign_ = -z.sign_;
    z.demote();
    return z;
}

int Zint::mag_cmp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int Zint::cmp(const Zint& a, const Zint& b) {
    if (a.big_.empty() && b.big_.empty())
        return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? 1 : 0);
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    int mc = mag_cmp(to_mag(a), to_mag(b));
    return sa >= 0 ? mc : -mc;
}

std::vector<std::uint32_t> Zint::mag_add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Requires a >= b.
std::vector<std::uint32_t> Zint::mag_sub(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        borrow = 0;
        if (s < 0) {
            s += (std::int64_t(1) << 32);
            borrow = 1;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> Zint::mag_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + carry + static_cast<std::uint64_t>(a[i]) * b[j];
            r[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k++] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Schoolbook long division, one 32-bit digit of quotient at a time with a
// 64-bit trial estimate refined by comparison. Fine for the sizes SNF sees.
void Zint::mag_divmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                      std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    assert(!b.empty());
    q.clear();
    r.clear();
    if (mag_cmp(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r = mag_from_u64(rem);
        return;
    }
    // General case: binary-ish long division over limbs.
    std::vector<std::uint32_t> rem;
    q.assign(a.size(), 0);
    for (std::size_t i = a.size(); i-- > 0;) {
        rem.insert(rem.begin(), a[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (mag_cmp(rem, b) < 0) continue;
        // Estimate digit from top limbs.
        std::uint64_t top = 0;
        std::size_t nb = b.size();
        if (rem.size() > nb) {
            top = (static_cast<std::uint64_t>(rem[nb]) << 32) | rem[nb - 1];
        } else {
            top = rem[nb - 1];
        }
        std::uint64_t lo = top / (static_cast<std::uint64_t>(b.back()) + 1);
        std::uint64_t hi = std::min<std::uint64_t>(0xffffffffull, b.back() ? top / b.back() + 1 : 0xffffffffull);
        if (lo < 1) lo = 1;
        // Binary search the exact digit.
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo + 1) / 2;
            auto prod = mag_mul(b, mag_from_u64(mid));
            if (mag_cmp(prod, rem) <= 0)
                lo = mid;
            else
                hi = mid - 1;
        }
        auto prod = mag_mul(b, mag_from_u64(lo));
        assert(mag_cmp(prod, rem) <= 0);
        rem = mag_sub(rem, prod);
        q[i] = static_cast<std::uint32_t>(lo);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = std::move(rem);
}

Zint Zint::operator+(const Zint& o) const {
    if (big_.empty() && o.big_.empty()) {
        long long r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            Zint z;
            z.small_ = r;
            return z;
        }
    }
    int sa = sign(), sb = o.sign();
    if (sa == 0) return o;
    if (sb == 0) return *this;
    auto ma = to_mag(*this), mb = to_mag(o);
    if (sa == sb) return make_big(sa, mag_add(ma, mb));
    int mc = mag_cmp(ma, mb);
    if (mc == 0) return Zint();
    if (mc > 0) return make_big(sa, mag_sub(ma, mb));
    return make_big(sb, mag_sub(mb, ma));
}

Zint Zint::operator-(const Zint& o) const { return *this + (-o); }

Zint Zint::operator*(const Zint& o) const {
    if (big_.empty() && o.big_.empty()) {
        long long r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            Zint z;
            z.small_ = r;
            return z;
        }
    }
    int s = sign() * o.sign();
    if (s == 0) return Zint();
    return make_big(s, mag_mul(to_mag(*this), to_mag(o)));
}

void Zint::divmod(const Zint& a, const Zint& b, Zint& q, Zint& r) {
    if (b.is_zero()) throw std::domain_error("Zint: division by zero");
    if (a.big_.empty() && b.big_.empty() && !(a.small_ == INT64_MIN && b.small_ == -1)) {
        q = Zint(a.small_ / b.small_);
        r = Zint(a.small_ % b.small_);
        return;
    }
    std::vector<std::uint32_t> mq, mr;
    mag_divmod(to_mag(a), to_mag(b), mq, mr);
    q = make_big(a.sign() * b.sign(), std::move(mq));
    r = make_big(a.sign(), std::move(mr));
}

Zint Zint::operator/(const Zint& o) const {
    Zint q, r;
    divmod(*this, o, q, r);
    return q;
}

Zint Zint::operator%(const Zint& o) const {
    Zint q, r;
    divmod(*this, o, q, r);
    return r;
}

bool Zint::divides(const Zint& o) const {
    if (is_zero()) return false;
    return (o % *this).is_zero();
}

Zint Zint::gcd(Zint a, Zint b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Zint r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Zint Zint::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Zint: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("Zint: no digits");
    Zint v;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Zint: bad digit");
        v = v * Zint(10) + Zint(s[i] - '0');
    }
    return neg ? -v : v;
}

std::string Zint::to_string() const {
    if (big_.empty()) return std::to_string(small_);
    std::string out;
    std::vector<std::uint32_t> m = big_;
    const std::vector<std::uint32_t> ten9 = {1000000000u};
    while (!m.empty()) {
        std::vector<std::uint32_t> q, r;
        mag_divmod(m, ten9, q, r);
        std::uint32_t chunk = r.empty() ? 0 : r[0];
        std::string piece = std::to_string(chunk);
        if (!q.empty()) piece = std::string(9 - piece.size(), '0') + piece;
        out = piece + out;
        m = std::move(q);
    }
    return (sign_ < 0 ? "-" : "") + out;
}

std::size_t Zint::hash() const {
    if (big_.empty()) return std::hash<long long>()(small_);
    std::size_t h = sign_ < 0 ? 0x9e3779b97f4a7c15ull : 0x517cc1b727220a95ull;
    for (auto limb : big_) h = h * 0x100000001b3ull ^ limb;
    return h;
}

std::ostream& operator<<(std::ostream& os, const Zint& z) { return os << z.to_string(); }

}  // namespace coverhom
