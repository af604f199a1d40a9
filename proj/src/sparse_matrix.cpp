#include "coverhom/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coverhom {

void SparseIntMatrix::set(long long r, long long c, Zint v) {
    auto& entries = col[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(entries.begin(), entries.end(), r,
                               [](const auto& e, long long row) { return e.first < row; });
    if (it != entries.end() && it->first == r) {
        if (v.is_zero())
            entries.erase(it);
        else
            it->second = std::move(v);
    } else if (!v.is_zero()) {
        entries.insert(it, {r, std::move(v)});
    }
}

Zint SparseIntMatrix::get(long long r, long long c) const {
    const auto& entries = col[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(entries.begin(), entries.end(), r,
                               [](const auto& e, long long row) { return e.first < row; });
    if (it != entries.end() && it->first == r) return it->second;
    return Zint();
}

long long SparseIntMatrix::nnz() const {
    long long n = 0;
    for (const auto& c : col) n += static_cast<long long>(c.size());
    return n;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& d) {
    long long r = static_cast<long long>(d.size());
    long long c = r ? static_cast<long long>(d[0].size()) : 0;
    SparseIntMatrix m(r, c);
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < c; ++j)
            if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                m.col[static_cast<std::size_t>(j)].push_back({i, Zint(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])});
    return m;
}

std::vector<std::vector<Zint>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<Zint>> d(static_cast<std::size_t>(rows), std::vector<Zint>(static_cast<std::size_t>(cols)));
    for (long long j = 0; j < cols; ++j)
        for (const auto& [r, v] : col[static_cast<std::size_t>(j)]) d[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = v;
    return d;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& o) const {
    return rows == o.rows && cols == o.cols && col == o.col;
}

std::vector<Zint> SparseIntMatrix::apply(const std::vector<Zint>& x) const {
    std::vector<Zint> y(static_cast<std::size_t>(rows));
    for (long long j = 0; j < cols; ++j) {
        const Zint& xj = x[static_cast<std::size_t>(j)];
        if (xj.is_zero()) continue;
        for (const auto& [r, v] : col[static_cast<std::size_t>(j)]) y[static_cast<std::size_t>(r)] += v * xj;
    }
    return y;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix multiply: shape mismatch");
    SparseIntMatrix out(a.rows, b.cols);
    std::vector<Zint> acc(static_cast<std::size_t>(a.rows));
    for (long long j = 0; j < b.cols; ++j) {
        std::vector<long long> touched;
        for (const auto& [k, bv] : b.col[static_cast<std::size_t>(j)]) {
            for (const auto& [r, av] : a.col[static_cast<std::size_t>(k)]) {
                if (acc[static_cast<std::size_t>(r)].is_zero()) touched.push_back(r);
                acc[static_cast<std::size_t>(r)] += av * bv;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (long long r : touched) {
            if (!acc[static_cast<std::size_t>(r)].is_zero())
                out.col[static_cast<std::size_t>(j)].push_back({r, acc[static_cast<std::size_t>(r)]});
            acc[static_cast<std::size_t>(r)] = Zint();
        }
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::identity(long long n) {
    SparseIntMatrix m(n, n);
    for (long long i = 0; i < n; ++i) m.col[static_cast<std::size_t>(i)].push_back({i, Zint(1)});
    return m;
}

void write_matrix_market(std::ostream& os, const SparseIntMatrix& m) {
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << m.rows << " " << m.cols << " " << m.nnz() << "\n";
    for (long long j = 0; j < m.cols; ++j)
        for (const auto& [r, v] : m.col[static_cast<std::size_t>(j)])
            os << (r + 1) << " " << (j + 1) << " " << v << "\n";
}

SparseIntMatrix read_matrix_market(std::istream& is) {
    std::string line;
    long long rows = -1, cols = -1, nnz = -1;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream header(line);
        if (!(header >> rows >> cols >> nnz)) throw std::runtime_error("matrix market: bad size line");
        break;
    }
    if (rows < 0) throw std::runtime_error("matrix market: missing header");
    SparseIntMatrix m(rows, cols);
    for (long long k = 0; k < nnz; ++k) {
        long long r, c;
        std::string v;
        if (!(is >> r >> c >> v)) throw std::runtime_error("matrix market: truncated entries");
        m.set(r - 1, c - 1, Zint::from_string(v));
    }
    return m;
}

}  // namespace coverhom
