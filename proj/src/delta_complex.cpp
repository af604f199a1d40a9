#include "coverhom/delta_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coverhom {

long long DeltaComplex::cell_count(int d) const {
    if (d < 0 || d > dimension()) return 0;
    if (d == 0) return n_vertices_;
    return static_cast<long long>(faces_[static_cast<std::size_t>(d) - 1].size()) / (d + 1);
}

long long DeltaComplex::total_cells() const {
    long long t = 0;
    for (int d = 0; d <= dimension(); ++d) t += cell_count(d);
    return t;
}

long long DeltaComplex::vertex_of(int d, long long cell, int j) const {
    while (d > 0) {
        // Drop a position other than j; positions below the dropped one keep
        // their index, positions above shift down by one.
        int drop = (j == d) ? 0 : d;
        cell = faces(d, cell)[drop];
        if (drop < j) --j;
        --d;
    }
    return cell;
}

std::vector<long long> DeltaComplex::vertices_of(int d, long long cell) const {
    std::vector<long long> out(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) out[static_cast<std::size_t>(j)] = vertex_of(d, cell, j);
    return out;
}

std::pair<int, long long> DeltaComplex::face_at_mask(int d, long long cell, unsigned mask) const {
    if (mask == 0) throw std::invalid_argument("face_at_mask: empty mask");
    for (int pos = d; pos >= 0; --pos) {
        if (mask & (1u << pos)) continue;
        cell = faces(d, cell)[pos];
        --d;
    }
    return {d, cell};
}

void DeltaComplex::validate() const {
    for (int d = 1; d <= dimension(); ++d) {
        long long nd = cell_count(d), lower = cell_count(d - 1);
        for (long long c = 0; c < nd; ++c) {
            const std::int64_t* f = faces(d, c);
            for (int i = 0; i <= d; ++i)
                if (f[i] < 0 || f[i] >= lower) throw std::runtime_error("face index out of range");
        }
    }
    for (int d = 2; d <= dimension(); ++d) {
        long long nd = cell_count(d);
        for (long long c = 0; c < nd; ++c) {
            std::map<long long, long long> acc;
            const std::int64_t* f = faces(d, c);
            for (int i = 0; i <= d; ++i) {
                const std::int64_t* g = faces(d - 1, f[i]);
                for (int j = 0; j <= d - 1; ++j) acc[g[j]] += ((i + j) % 2 == 0) ? 1 : -1;
            }
            for (const auto& [cell, v] : acc) {
                (void)cell;
                if (v != 0) throw std::runtime_error("boundary does not square to zero");
            }
        }
    }
    if (!provenance_.empty() && static_cast<long long>(provenance_.size()) != n_vertices_)
        throw std::runtime_error("provenance size mismatch");
}

bool DeltaComplex::is_regular() const {
    for (int d = 1; d <= dimension(); ++d) {
        long long nd = cell_count(d);
        for (long long c = 0; c < nd; ++c) {
            auto vs = vertices_of(d, c);
            std::sort(vs.begin(), vs.end());
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
            const std::int64_t* f = faces(d, c);
            for (int i = 0; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    if (f[i] == f[j]) return false;
        }
    }
    return true;
}

bool DeltaComplex::is_simplicial() const {
    if (!is_regular()) return false;
    for (int d = 1; d <= dimension(); ++d) {
        std::set<std::vector<long long>> seen;
        long long nd = cell_count(d);
        for (long long c = 0; c < nd; ++c) {
            auto vs = vertices_of(d, c);
            std::sort(vs.begin(), vs.end());
            if (!seen.insert(vs).second) return false;
        }
    }
    return true;
}

long long DeltaComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * cell_count(d);
    return chi;
}

int DeltaComplex::connected_components() const {
    long long n = cell_count(0);
    std::vector<long long> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long long(long long)> find = [&](long long a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (long long e = 0; e < cell_count(1); ++e) {
        long long a = find(faces(1, e)[0]), b = find(faces(1, e)[1]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::set<long long> roots;
    for (long long v = 0; v < n; ++v) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

DeltaComplex::Builder::Builder(int dim) : dim_(dim), faces_(static_cast<std::size_t>(std::max(dim, 0))) {}

long long DeltaComplex::Builder::add_vertices(long long count) {
    long long first = n_vertices_;
    n_vertices_ += count;
    return first;
}

long long DeltaComplex::Builder::add_cell(int d, const std::vector<long long>& face_ids) {
    if (d < 1 || d > dim_) throw std::invalid_argument("add_cell: bad dimension");
    if (static_cast<int>(face_ids.size()) != d + 1) throw std::invalid_argument("add_cell: need d+1 faces");
    auto& arr = faces_[static_cast<std::size_t>(d) - 1];
    long long id = static_cast<long long>(arr.size()) / (d + 1);
    for (long long f : face_ids) arr.push_back(f);
    return id;
}

DeltaComplex DeltaComplex::Builder::finish() {
    DeltaComplex x;
    x.n_vertices_ = n_vertices_;
    x.faces_ = std::move(faces_);
    while (!x.faces_.empty() && x.faces_.back().empty()) x.faces_.pop_back();
    x.provenance_ = std::move(prov_);
    x.validate();
    return x;
}

Chain Chain::unit(int degree, long long cell, Zint coeff) {
    Chain c{degree, {}};
    if (!coeff.is_zero()) c.terms.push_back({cell, std::move(coeff)});
    return c;
}

Chain Chain::from_terms(int degree, std::vector<std::pair<long long, Zint>> t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Chain c{degree, {}};
    for (std::size_t i = 0; i < t.size();) {
        long long cell = t[i].first;
        Zint acc;
        while (i < t.size() && t[i].first == cell) acc += t[i++].second;
        if (!acc.is_zero()) c.terms.push_back({cell, std::move(acc)});
    }
    return c;
}

Zint Chain::coeff(long long cell) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), cell,
                               [](const auto& e, long long c) { return e.first < c; });
    if (it != terms.end() && it->first == cell) return it->second;
    return Zint();
}

Chain Chain::operator+(const Chain& o) const {
    if (degree != o.degree) throw std::invalid_argument("chain add: degree mismatch");
    Chain out{degree, {}};
    out.terms.reserve(terms.size() + o.terms.size());
    std::size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
        if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
            out.terms.push_back(terms[i++]);
        } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
            out.terms.push_back(o.terms[j++]);
        } else {
            Zint s = terms[i].second + o.terms[j].second;
            if (!s.is_zero()) out.terms.push_back({terms[i].first, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

Chain Chain::operator-() const {
    Chain out{degree, terms};
    for (auto& [c, v] : out.terms) {
        (void)c;
        v = -v;
    }
    return out;
}

Chain Chain::operator-(const Chain& o) const { return *this + (-o); }

Chain Chain::operator*(const Zint& s) const {
    if (s.is_zero()) return Chain::zero(degree);
    Chain out{degree, terms};
    for (auto& [c, v] : out.terms) {
        (void)c;
        v = v * s;
    }
    return out;
}

Chain boundary(const DeltaComplex& x, const Chain& c) {
    if (c.degree <= 0) return Chain::zero(c.degree - 1);
    std::vector<std::pair<long long, Zint>> t;
    t.reserve(c.terms.size() * (static_cast<std::size_t>(c.degree) + 1));
    for (const auto& [cell, v] : c.terms) {
        const std::int64_t* f = x.faces(c.degree, cell);
        for (int i = 0; i <= c.degree; ++i) t.push_back({f[i], (i % 2 == 0) ? v : -v});
    }
    return Chain::from_terms(c.degree - 1, std::move(t));
}

Chain CellMap::push(const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    t.reserve(c.terms.size());
    for (const auto& [cell, v] : c.terms) {
        auto [img, sign] = apply(c.degree, cell);
        t.push_back({img, sign >= 0 ? v : -v});
    }
    return Chain::from_terms(c.degree, std::move(t));
}

void CellMap::validate(const DeltaComplex& src, const DeltaComplex& dst) const {
    if (static_cast<int>(image.size()) < src.dimension() + 1)
        throw std::runtime_error("cell map: dimension mismatch");
    for (int d = 0; d <= src.dimension(); ++d) {
        if (static_cast<long long>(image[static_cast<std::size_t>(d)].size()) != src.cell_count(d))
            throw std::runtime_error("cell map: cell count mismatch");
        for (long long c = 0; c < src.cell_count(d); ++c) {
            auto [img, sign] = apply(d, c);
            if (img < 0 || img >= dst.cell_count(d)) throw std::runtime_error("cell map: image out of range");
            if (sign != 1 && sign != -1) throw std::runtime_error("cell map: bad sign");
            if (d >= 1) {
                Chain lhs = push(boundary(src, Chain::unit(d, c)));
                Chain rhs = boundary(dst, push(Chain::unit(d, c)));
                if (!(lhs == rhs)) throw std::runtime_error("cell map: boundary compatibility fails");
            }
        }
    }
}

CellMap CellMap::compose(const CellMap& second, const CellMap& first) {
    CellMap out;
    out.image.resize(first.image.size());
    for (std::size_t d = 0; d < first.image.size(); ++d) {
        out.image[d].resize(first.image[d].size());
        for (std::size_t c = 0; c < first.image[d].size(); ++c) {
            auto [mid, s1] = first.image[d][c];
            auto [img, s2] = second.image[d][static_cast<std::size_t>(mid)];
            out.image[d][c] = {img, static_cast<std::int8_t>(s1 * s2)};
        }
    }
    return out;
}

CellMap CellMap::identity(const DeltaComplex& x) {
    CellMap m;
    m.image.resize(static_cast<std::size_t>(x.dimension()) + 1);
    for (int d = 0; d <= x.dimension(); ++d) {
        m.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(x.cell_count(d)));
        for (long long c = 0; c < x.cell_count(d); ++c)
            m.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = {c, 1};
    }
    return m;
}

bool CellSubset::contains(int d, long long cell) const {
    if (d < 0 || d >= static_cast<int>(cells.size())) return false;
    const auto& v = cells[static_cast<std::size_t>(d)];
    return std::binary_search(v.begin(), v.end(), cell);
}

long long CellSubset::count(int d) const {
    if (d < 0 || d >= static_cast<int>(cells.size())) return 0;
    return static_cast<long long>(cells[static_cast<std::size_t>(d)].size());
}

CellSubset CellSubset::support(const Chain& c) {
    CellSubset s;
    s.cells.resize(static_cast<std::size_t>(c.degree) + 1);
    for (const auto& [cell, v] : c.terms) {
        (void)v;
        s.cells[static_cast<std::size_t>(c.degree)].push_back(cell);
    }
    return s;
}

CellSubset CellSubset::closure(const DeltaComplex& x, const CellSubset& seed) {
    CellSubset out;
    out.cells.resize(static_cast<std::size_t>(x.dimension()) + 1);
    std::vector<std::set<long long>> acc(static_cast<std::size_t>(x.dimension()) + 1);
    for (std::size_t d = 0; d < seed.cells.size() && d < acc.size(); ++d)
        for (long long c : seed.cells[d]) acc[d].insert(c);
    for (int d = x.dimension(); d >= 1; --d) {
        for (long long c : acc[static_cast<std::size_t>(d)]) {
            const std::int64_t* f = x.faces(d, c);
            for (int i = 0; i <= d; ++i) acc[static_cast<std::size_t>(d) - 1].insert(f[i]);
        }
    }
    for (std::size_t d = 0; d < acc.size(); ++d) out.cells[d].assign(acc[d].begin(), acc[d].end());
    return out;
}

bool CellSubset::is_subcomplex(const DeltaComplex& x) const {
    for (int d = 1; d < static_cast<int>(cells.size()); ++d) {
        for (long long c : cells[static_cast<std::size_t>(d)]) {
            const std::int64_t* f = x.faces(d, c);
            for (int i = 0; i <= d; ++i)
                if (!contains(d - 1, f[i])) return false;
        }
    }
    return true;
}

SubcomplexResult extract_subcomplex(const DeltaComplex& x, const CellSubset& s) {
    if (!s.is_subcomplex(x)) throw std::invalid_argument("extract_subcomplex: not a subcomplex");
    int dim = 0;
    for (int d = 0; d < static_cast<int>(s.cells.size()); ++d)
        if (!s.cells[static_cast<std::size_t>(d)].empty()) dim = d;
    SubcomplexResult out;
    out.to_sub.resize(static_cast<std::size_t>(x.dimension()) + 1);
    for (int d = 0; d <= x.dimension(); ++d)
        out.to_sub[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(x.cell_count(d)), -1);
    DeltaComplex::Builder b(dim);
    b.add_vertices(s.count(0));
    for (long long i = 0; i < s.count(0); ++i)
        out.to_sub[0][static_cast<std::size_t>(s.cells[0][static_cast<std::size_t>(i)])] = i;
    for (int d = 1; d <= dim; ++d) {
        for (long long i = 0; i < s.count(d); ++i) {
            long long c = s.cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
            const std::int64_t* f = x.faces(d, c);
            std::vector<long long> sub_faces(static_cast<std::size_t>(d) + 1);
            for (int j = 0; j <= d; ++j)
                sub_faces[static_cast<std::size_t>(j)] = out.to_sub[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(f[j])];
            b.add_cell(d, sub_faces);
            out.to_sub[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = i;
        }
    }
    if (x.has_provenance()) {
        std::vector<VertexProvenance> p(static_cast<std::size_t>(s.count(0)));
        for (long long v = 0; v < s.count(0); ++v)
            p[static_cast<std::size_t>(v)] = x.provenance(s.cells[0][static_cast<std::size_t>(v)]);
        b.set_provenance(std::move(p));
    }
    out.complex = b.finish();
    CellMap inc;
    inc.image.resize(static_cast<std::size_t>(out.complex.dimension()) + 1);
    for (int d = 0; d <= out.complex.dimension(); ++d) {
        inc.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(out.complex.cell_count(d)));
        for (long long i = 0; i < out.complex.cell_count(d); ++i)
            inc.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = {s.cells[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)], 1};
    }
    out.inclusion = std::move(inc);
    return out;
}

}  // namespace coverhom
