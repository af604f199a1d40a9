#include "coverhom/fp_solve.hpp"

#include <algorithm>

namespace coverhom {

namespace {

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    // Fermat; p prime and a != 0 mod p.
    std::uint64_t base = a % p, acc = 1;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

void normalize(FpColumn& col, std::uint32_t p) {
    std::sort(col.begin(), col.end());
    FpColumn out;
    for (std::size_t i = 0; i < col.size();) {
        long long r = col[i].first;
        std::uint64_t s = 0;
        while (i < col.size() && col[i].first == r) s += col[i++].second;
        std::uint32_t v = static_cast<std::uint32_t>(s % p);
        if (v) out.push_back({r, v});
    }
    col = std::move(out);
}

// col -= factor * other (both row-sorted), mod p.
FpColumn axpy(const FpColumn& col, const FpColumn& other, std::uint32_t factor, std::uint32_t p) {
    FpColumn out;
    out.reserve(col.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
            out.push_back(col[i++]);
        } else if (i == col.size() || other[j].first < col[i].first) {
            std::uint64_t v = static_cast<std::uint64_t>(p - factor % p) * other[j].second % p;
            if (v) out.push_back({other[j].first, static_cast<std::uint32_t>(v)});
            ++j;
        } else {
            std::uint64_t v = (col[i].second + static_cast<std::uint64_t>(p - factor % p) * other[j].second) % p;
            if (v) out.push_back({col[i].first, static_cast<std::uint32_t>(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::uint32_t fp_mod(const Zint& z, std::uint32_t p) {
    if (z.fits_int64()) {
        long long v = z.as_int64() % static_cast<long long>(p);
        if (v < 0) v += p;
        return static_cast<std::uint32_t>(v);
    }
    // Decimal string fold for the rare big case.
    std::string s = z.to_string();
    std::size_t i = 0;
    bool neg = s[0] == '-';
    if (neg) i = 1;
    std::uint64_t acc = 0;
    for (; i < s.size(); ++i) acc = (acc * 10 + static_cast<std::uint64_t>(s[i] - '0')) % p;
    if (neg && acc) acc = p - acc;
    return static_cast<std::uint32_t>(acc);
}

const FpColumn* FpReducer::pivot_for(long long row) const {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), row,
                               [](const auto& e, long long r) { return e.first < r; });
    if (it != pivots_.end() && it->first == row) return &it->second;
    return nullptr;
}

void FpReducer::reduce(FpColumn& col) const {
    normalize(col, p_);
    while (!col.empty()) {
        long long low = col.back().first;
        const FpColumn* piv = pivot_for(low);
        if (!piv) return;
        std::uint32_t factor = col.back().second;  // pivot normalized to 1
        col = axpy(col, *piv, factor, p_);
    }
}

bool FpReducer::add_column(FpColumn col) {
    reduce(col);
    if (col.empty()) return false;
    long long low = col.back().first;
    std::uint32_t inv = fp_inv(col.back().second, p_);
    for (auto& [r, v] : col) {
        (void)r;
        v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p_);
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), low,
                               [](const auto& e, long long r) { return e.first < r; });
    pivots_.insert(it, {low, std::move(col)});
    return true;
}

bool FpReducer::in_span(FpColumn v) const {
    reduce(v);
    return v.empty();
}

long long fp_rank(const SparseIntMatrix& a, std::uint32_t p) {
    FpReducer red(a.rows, p);
    for (long long j = 0; j < a.cols; ++j) {
        FpColumn col;
        col.reserve(a.col[static_cast<std::size_t>(j)].size());
        for (const auto& [r, v] : a.col[static_cast<std::size_t>(j)]) {
            std::uint32_t m = fp_mod(v, p);
            if (m) col.push_back({r, m});
        }
        red.add_column(std::move(col));
    }
    return red.rank();
}

bool fp_in_column_span(const SparseIntMatrix& a, const std::vector<std::pair<long long, Zint>>& v, std::uint32_t p) {
    FpReducer red(a.rows, p);
    for (long long j = 0; j < a.cols; ++j) {
        FpColumn col;
        for (const auto& [r, z] : a.col[static_cast<std::size_t>(j)]) {
            std::uint32_t m = fp_mod(z, p);
            if (m) col.push_back({r, m});
        }
        red.add_column(std::move(col));
    }
    FpColumn target;
    for (const auto& [r, z] : v) {
        std::uint32_t m = fp_mod(z, p);
        if (m) target.push_back({r, m});
    }
    return red.in_span(std::move(target));
}

}  // namespace coverhom
