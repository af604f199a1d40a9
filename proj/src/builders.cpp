#include "coverhom/builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coverhom {

namespace {

// Cells of the full n-simplex are the nonempty subsets of {0..n}; the i-th
// face of a subset drops its i-th smallest element.
long long subset_rank(unsigned mask, int d, const std::vector<std::vector<unsigned>>& by_size) {
    const auto& v = by_size[static_cast<std::size_t>(d)];
    auto it = std::lower_bound(v.begin(), v.end(), mask);
    return static_cast<long long>(it - v.begin());
}

}  // namespace

DeltaComplex simplex(int n) {
    std::vector<std::vector<unsigned>> by_size(static_cast<std::size_t>(n) + 1);
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask)
        by_size[static_cast<std::size_t>(__builtin_popcount(mask)) - 1].push_back(mask);
    for (auto& v : by_size) std::sort(v.begin(), v.end());

    DeltaComplex::Builder b(n);
    b.add_vertices(n + 1);
    for (int d = 1; d <= n; ++d) {
        for (unsigned mask : by_size[static_cast<std::size_t>(d)]) {
            std::vector<long long> fs;
            for (int i = 0; i <= d; ++i) {
                // drop the i-th smallest set bit
                unsigned m = mask;
                int seen = 0;
                for (int bit = 0; bit <= n; ++bit) {
                    if (!(mask & (1u << bit))) continue;
                    if (seen == i) {
                        m = mask & ~(1u << bit);
                        break;
                    }
                    ++seen;
                }
                fs.push_back(d - 1 == 0 ? static_cast<long long>(__builtin_ctz(m)) : subset_rank(m, d - 1, by_size));
            }
            b.add_cell(d, fs);
        }
    }
    return b.finish();
}

DeltaComplex simplex_boundary(int n) {
    if (n < 1) throw std::invalid_argument("simplex_boundary: n >= 1");
    DeltaComplex full = simplex(n);
    CellSubset s;
    s.cells.resize(static_cast<std::size_t>(n));
    for (int d = 0; d <= n - 1; ++d) {
        s.cells[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(full.cell_count(d)));
        std::iota(s.cells[static_cast<std::size_t>(d)].begin(), s.cells[static_cast<std::size_t>(d)].end(), 0);
    }
    return extract_subcomplex(full, s).complex;
}

DeltaComplex cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle_graph: need m >= 3");
    DeltaComplex::Builder b(1);
    b.add_vertices(m);
    // edges [i, i+1]; the closing edge is [0, m-1]
    for (int i = 0; i + 1 < m; ++i) b.add_cell(1, {i + 1, i});  // face_0 omits vertex 0
    b.add_cell(1, {m - 1, 0});
    return b.finish();
}

DeltaComplex single_point() {
    DeltaComplex::Builder b(0);
    b.add_vertices(1);
    return b.finish();
}

Chain ConeResult::cone_chain(const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    t.reserve(c.terms.size());
    for (const auto& [cell, v] : c.terms) {
        if (!is_base_cell(c.degree, cell)) throw std::invalid_argument("cone_chain: chain not supported on base");
        t.push_back({cone_cell(c.degree, cell), v});
    }
    return Chain::from_terms(c.degree + 1, std::move(t));
}

Chain ConeResult::restrict_to_base(const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    for (const auto& [cell, v] : c.terms)
        if (is_base_cell(c.degree, cell)) t.push_back({cell, v});
    return Chain::from_terms(c.degree, std::move(t));
}

CellSubset ConeResult::base_subset() const {
    CellSubset s;
    s.cells.resize(base_count.size());
    for (std::size_t d = 0; d < base_count.size(); ++d) {
        s.cells[d].resize(static_cast<std::size_t>(base_count[d]));
        std::iota(s.cells[d].begin(), s.cells[d].end(), 0);
    }
    return s;
}

// Apex-first cone: the cone cell over tau has vertex tuple (apex, tau...),
// so face_0 is tau and face_{i+1} is the cone over face_i(tau).
ConeResult cone(const DeltaComplex& x) {
    int xd = x.dimension();
    long long nv = x.cell_count(0);
    ConeResult out;
    out.apex = nv;
    out.base_count.resize(static_cast<std::size_t>(xd) + 1);
    for (int d = 0; d <= xd; ++d) out.base_count[static_cast<std::size_t>(d)] = x.cell_count(d);

    int cdim = nv == 0 ? 0 : xd + 1;
    DeltaComplex::Builder b(cdim);
    b.add_vertices(nv + 1);
    for (int d = 1; d <= cdim; ++d) {
        for (long long c = 0; c < x.cell_count(d); ++c) {
            std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) fs[static_cast<std::size_t>(i)] = x.faces(d, c)[i];
            b.add_cell(d, fs);
        }
        for (long long c = 0; c < x.cell_count(d - 1); ++c) {
            std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
            fs[0] = c;
            if (d - 1 == 0) {
                fs[1] = out.apex;
            } else {
                for (int i = 0; i <= d - 1; ++i)
                    fs[static_cast<std::size_t>(i) + 1] = x.cell_count(d - 1) + x.faces(d - 1, c)[i];
            }
            b.add_cell(d, fs);
        }
    }
    out.complex = b.finish();
    return out;
}

DeltaComplex simplicial_from_tuples(long long n_vertices, const std::vector<std::vector<long long>>& cells) {
    int dim = 0;
    for (const auto& t : cells) dim = std::max(dim, static_cast<int>(t.size()) - 1);
    std::vector<std::map<std::vector<long long>, long long>> index(static_cast<std::size_t>(dim) + 1);
    for (const auto& t : cells) {
        if (t.empty()) throw std::invalid_argument("simplicial_from_tuples: empty tuple");
        if (!std::is_sorted(t.begin(), t.end()) || std::adjacent_find(t.begin(), t.end()) != t.end())
            throw std::invalid_argument("simplicial_from_tuples: tuples must be strictly ascending");
        index[t.size() - 1].emplace(t, 0);
    }
    for (std::size_t d = 0; d <= static_cast<std::size_t>(dim); ++d) {
        long long next = 0;
        for (auto& [t, id] : index[d]) {
            (void)t;
            id = next++;
        }
    }
    DeltaComplex::Builder b(dim);
    b.add_vertices(n_vertices);
    for (int d = 1; d <= dim; ++d) {
        for (const auto& [t, id] : index[static_cast<std::size_t>(d)]) {
            (void)id;
            std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) {
                std::vector<long long> sub;
                for (int j = 0; j <= d; ++j)
                    if (j != i) sub.push_back(t[static_cast<std::size_t>(j)]);
                if (d - 1 == 0) {
                    fs[static_cast<std::size_t>(i)] = sub[0];
                } else {
                    auto it = index[static_cast<std::size_t>(d) - 1].find(sub);
                    if (it == index[static_cast<std::size_t>(d) - 1].end())
                        throw std::invalid_argument("simplicial_from_tuples: family not closed under faces");
                    fs[static_cast<std::size_t>(i)] = it->second;
                }
            }
            b.add_cell(d, fs);
        }
    }
    return b.finish();
}

Chain PrismResult::prism_chain(const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    for (const auto& [cell, v] : c.terms)
        for (int j = 0; j <= c.degree; ++j)
            t.push_back({stair_ids[static_cast<std::size_t>(c.degree)][static_cast<std::size_t>(cell) * (c.degree + 1) + static_cast<std::size_t>(j)],
                         (j % 2 == 0) ? v : -v});
    return Chain::from_terms(c.degree + 1, std::move(t));
}

PrismResult prism(const DeltaComplex& x) {
    if (!x.is_simplicial()) throw std::invalid_argument("prism: input must be simplicial");
    for (int d = 1; d <= x.dimension(); ++d)
        for (long long c = 0; c < x.cell_count(d); ++c) {
            auto vs = x.vertices_of(d, c);
            if (!std::is_sorted(vs.begin(), vs.end()))
                throw std::invalid_argument("prism: vertex tuples must be ascending (unordered input)");
        }

    int xd = x.dimension();
    long long nv = x.cell_count(0);

    // Over a base cell with ascending vertices w_0..w_m: split cells
    // b(w_0..w_j) t(w_{j+1}..w_m) for j = -1..m, staircase cells
    // b(w_0..w_j) t(w_j..w_m) for j = 0..m. Bottom ids v, top ids nv+v.
    std::vector<std::vector<long long>> tuples;
    for (long long v = 0; v < nv; ++v) {
        tuples.push_back({v});
        tuples.push_back({nv + v});
    }
    auto emit = [&](const std::vector<long long>& vs, int j, bool stair) {
        std::vector<long long> t;
        for (int i = 0; i <= j; ++i) t.push_back(vs[static_cast<std::size_t>(i)]);
        for (int i = stair ? j : j + 1; i < static_cast<int>(vs.size()); ++i) t.push_back(nv + vs[static_cast<std::size_t>(i)]);
        tuples.push_back(std::move(t));
    };
    for (int d = 0; d <= xd; ++d)
        for (long long c = 0; c < x.cell_count(d); ++c) {
            auto vs = x.vertices_of(d, c);
            for (int j = -1; j <= d; ++j) emit(vs, j, false);
            for (int j = 0; j <= d; ++j) emit(vs, j, true);
        }

    PrismResult out;
    out.complex = simplicial_from_tuples(2 * nv, tuples);

    // id lookup by vertex tuple
    std::vector<std::map<std::vector<long long>, long long>> lookup(static_cast<std::size_t>(out.complex.dimension()) + 1);
    for (int d = 1; d <= out.complex.dimension(); ++d)
        for (long long c = 0; c < out.complex.cell_count(d); ++c)
            lookup[static_cast<std::size_t>(d)][out.complex.vertices_of(d, c)] = c;

    out.stair_ids.resize(static_cast<std::size_t>(xd) + 1);
    for (int d = 0; d <= xd; ++d) {
        out.stair_ids[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(x.cell_count(d)) * (d + 1));
        for (long long c = 0; c < x.cell_count(d); ++c) {
            auto vs = x.vertices_of(d, c);
            for (int j = 0; j <= d; ++j) {
                std::vector<long long> t;
                for (int i = 0; i <= j; ++i) t.push_back(vs[static_cast<std::size_t>(i)]);
                for (int i = j; i <= d; ++i) t.push_back(nv + vs[static_cast<std::size_t>(i)]);
                out.stair_ids[static_cast<std::size_t>(d)][static_cast<std::size_t>(c) * (d + 1) + static_cast<std::size_t>(j)] =
                    lookup[static_cast<std::size_t>(d) + 1].at(t);
            }
        }
    }

    auto make_inclusion = [&](bool top_side) {
        CellMap m;
        m.image.resize(static_cast<std::size_t>(xd) + 1);
        for (int d = 0; d <= xd; ++d) {
            m.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(x.cell_count(d)));
            for (long long c = 0; c < x.cell_count(d); ++c) {
                if (d == 0) {
                    m.image[0][static_cast<std::size_t>(c)] = {top_side ? nv + c : c, 1};
                } else {
                    auto vs = x.vertices_of(d, c);
                    std::vector<long long> t;
                    for (long long v : vs) t.push_back(top_side ? nv + v : v);
                    m.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = {lookup[static_cast<std::size_t>(d)].at(t), 1};
                }
            }
        }
        return m;
    };
    out.bottom = make_inclusion(false);
    out.top = make_inclusion(true);
    return out;
}

DisjointUnionResult disjoint_union(const DeltaComplex& x, const DeltaComplex& y) {
    int dim = std::max(x.dimension(), y.dimension());
    DeltaComplex::Builder b(dim);
    b.add_vertices(x.cell_count(0) + y.cell_count(0));
    std::vector<long long> yoff(static_cast<std::size_t>(dim) + 1, 0);
    yoff[0] = x.cell_count(0);
    for (int d = 1; d <= dim; ++d) {
        for (long long c = 0; c < x.cell_count(d); ++c) {
            std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) fs[static_cast<std::size_t>(i)] = x.faces(d, c)[i];
            b.add_cell(d, fs);
        }
        yoff[static_cast<std::size_t>(d)] = x.cell_count(d);
        for (long long c = 0; c < y.cell_count(d); ++c) {
            std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i)
                fs[static_cast<std::size_t>(i)] = yoff[static_cast<std::size_t>(d) - 1] + y.faces(d, c)[i];
            b.add_cell(d, fs);
        }
    }
    DisjointUnionResult out;
    out.complex = b.finish();
    auto inc = [&](const DeltaComplex& src, bool right) {
        CellMap m;
        m.image.resize(static_cast<std::size_t>(src.dimension()) + 1);
        for (int d = 0; d <= src.dimension(); ++d) {
            m.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(src.cell_count(d)));
            for (long long c = 0; c < src.cell_count(d); ++c)
                m.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = {right ? yoff[static_cast<std::size_t>(d)] + c : c, 1};
        }
        return m;
    };
    out.left = inc(x, false);
    out.right = inc(y, true);
    return out;
}

long long JoinResult::join_cell(int dx, long long cx, int dy, long long cy) const {
    int d = dx + dy + 1;
    return join_offset[static_cast<std::size_t>(d)][static_cast<std::size_t>(dx)] + cx * y_cells[static_cast<std::size_t>(dy)] + cy;
}

JoinResult join(const DeltaComplex& x, const DeltaComplex& y) {
    int dim = x.dimension() + y.dimension() + 1;
    JoinResult out;
    for (int d = 0; d <= y.dimension(); ++d) out.y_cells.push_back(y.cell_count(d));
    out.join_offset.assign(static_cast<std::size_t>(dim) + 1, {});

    DeltaComplex::Builder b(dim);
    long long nx = x.cell_count(0);
    b.add_vertices(nx + y.cell_count(0));

    std::vector<long long> yoff(static_cast<std::size_t>(dim) + 1, 0);
    std::vector<std::vector<long long>> joff(static_cast<std::size_t>(dim) + 1);

    for (int d = 1; d <= dim; ++d) {
        long long next = 0;
        // x cells
        for (long long c = 0; c < x.cell_count(d); ++c) {
            std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) fs[static_cast<std::size_t>(i)] = x.faces(d, c)[i];
            b.add_cell(d, fs);
            ++next;
        }
        // y cells
        yoff[static_cast<std::size_t>(d)] = next;
        for (long long c = 0; c < y.cell_count(d); ++c) {
            std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i)
                fs[static_cast<std::size_t>(i)] = d - 1 == 0 ? nx + y.faces(d, c)[i] : yoff[static_cast<std::size_t>(d) - 1] + y.faces(d, c)[i];
            b.add_cell(d, fs);
            ++next;
        }
        // joins sigma*tau with dim sigma + dim tau + 1 = d
        joff[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d), 0);
        for (int dx = 0; dx <= d - 1; ++dx) {
            int dy = d - 1 - dx;
            if (dx > x.dimension() || dy > y.dimension()) continue;
            joff[static_cast<std::size_t>(d)][static_cast<std::size_t>(dx)] = next;
            for (long long cx = 0; cx < x.cell_count(dx); ++cx) {
                for (long long cy = 0; cy < y.cell_count(dy); ++cy) {
                    std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
                    for (int i = 0; i <= d; ++i) {
                        if (i <= dx) {
                            // drop position i of sigma
                            if (dx == 0) {
                                // sigma is a vertex; dropping it leaves tau
                                fs[static_cast<std::size_t>(i)] = dy == 0 ? nx + cy : yoff[static_cast<std::size_t>(d) - 1] + cy;
                            } else {
                                long long f = x.faces(dx, cx)[i];
                                fs[static_cast<std::size_t>(i)] = joff[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(dx) - 1] +
                                                                  f * y.cell_count(dy) + cy;
                            }
                        } else {
                            int iy = i - dx - 1;
                            if (dy == 0) {
                                fs[static_cast<std::size_t>(i)] = dx == 0 ? cx : cx;  // tau is a vertex; dropping it leaves sigma
                            } else {
                                long long f = y.faces(dy, cy)[iy];
                                fs[static_cast<std::size_t>(i)] = joff[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(dx)] +
                                                                  cx * y.cell_count(dy - 1) + f;
                            }
                        }
                    }
                    b.add_cell(d, fs);
                    ++next;
                }
            }
        }
    }

    out.complex = b.finish();
    out.join_offset = std::move(joff);

    auto inc = [&](const DeltaComplex& src, bool right) {
        CellMap m;
        m.image.resize(static_cast<std::size_t>(src.dimension()) + 1);
        for (int d = 0; d <= src.dimension(); ++d) {
            m.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(src.cell_count(d)));
            for (long long c = 0; c < src.cell_count(d); ++c) {
                long long img = c;
                if (right) img = d == 0 ? nx + c : yoff[static_cast<std::size_t>(d)] + c;
                m.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = {img, 1};
            }
        }
        return m;
    };
    out.left = inc(x, false);
    out.right = inc(y, true);
    return out;
}

QuotientResult quotient(const DeltaComplex& x, const std::vector<Identification>& ids) {
    int dim = x.dimension();
    std::vector<std::vector<long long>> parent(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        parent[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(x.cell_count(d)));
        std::iota(parent[static_cast<std::size_t>(d)].begin(), parent[static_cast<std::size_t>(d)].end(), 0);
    }
    std::function<long long(int, long long)> find = [&](int d, long long a) {
        auto& p = parent[static_cast<std::size_t>(d)];
        while (p[static_cast<std::size_t>(a)] != a) {
            p[static_cast<std::size_t>(a)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])];
            a = p[static_cast<std::size_t>(a)];
        }
        return a;
    };

    std::vector<Identification> work = ids;
    for (const auto& id : work)
        if (id.dim < 0 || id.dim > dim || id.a < 0 || id.b < 0 || id.a >= x.cell_count(id.dim) || id.b >= x.cell_count(id.dim))
            throw std::invalid_argument("quotient: identification out of range");
    while (!work.empty()) {
        auto [d, a, bb] = work.back();
        work.pop_back();
        long long ra = find(d, a), rb = find(d, bb);
        if (ra == rb) continue;
        if (ra > rb) std::swap(ra, rb);
        parent[static_cast<std::size_t>(d)][static_cast<std::size_t>(rb)] = ra;
        if (d >= 1) {
            for (int i = 0; i <= d; ++i)
                work.push_back({d - 1, x.faces(d, a)[i], x.faces(d, bb)[i]});
        }
    }

    // Quotient cell ids ordered by smallest member id.
    std::vector<std::vector<long long>> q(static_cast<std::size_t>(dim) + 1);
    std::vector<long long> counts(static_cast<std::size_t>(dim) + 1, 0);
    for (int d = 0; d <= dim; ++d) {
        q[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(x.cell_count(d)), -1);
        long long next = 0;
        for (long long c = 0; c < x.cell_count(d); ++c) {
            long long r = find(d, c);
            if (q[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)] < 0)
                q[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)] = next++;
            q[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = q[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)];
        }
        counts[static_cast<std::size_t>(d)] = next;
    }

    DeltaComplex::Builder b(dim);
    b.add_vertices(counts[0]);
    for (int d = 1; d <= dim; ++d) {
        std::vector<long long> emitted(static_cast<std::size_t>(counts[static_cast<std::size_t>(d)]), 0);
        std::vector<std::vector<long long>> rep_faces(static_cast<std::size_t>(counts[static_cast<std::size_t>(d)]));
        for (long long c = 0; c < x.cell_count(d); ++c) {
            long long qc = q[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)];
            std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i)
                fs[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(x.faces(d, c)[i])];
            if (rep_faces[static_cast<std::size_t>(qc)].empty()) {
                rep_faces[static_cast<std::size_t>(qc)] = fs;
            } else if (rep_faces[static_cast<std::size_t>(qc)] != fs) {
                throw std::invalid_argument("quotient: identifications are not face-compatible at a cell of dimension " +
                                            std::to_string(d));
            }
        }
        for (long long qc = 0; qc < counts[static_cast<std::size_t>(d)]; ++qc) b.add_cell(d, rep_faces[static_cast<std::size_t>(qc)]);
        (void)emitted;
    }

    QuotientResult out;
    out.complex = b.finish();
    CellMap proj;
    proj.image.resize(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        proj.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(x.cell_count(d)));
        for (long long c = 0; c < x.cell_count(d); ++c)
            proj.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = {q[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)], 1};
    }
    out.projection = std::move(proj);
    return out;
}

std::vector<Identification> identifications_from_maps(const CellMap& f, const CellMap& g) {
    if (f.image.size() != g.image.size()) throw std::invalid_argument("identifications_from_maps: shape mismatch");
    std::vector<Identification> ids;
    for (int d = 0; d < static_cast<int>(f.image.size()); ++d)
        for (long long c = 0; c < static_cast<long long>(f.image[static_cast<std::size_t>(d)].size()); ++c)
            ids.push_back({d, f.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)].first,
                           g.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)].first});
    return ids;
}

CellMap SimplicialMap::as_cellmap() const {
    CellMap m;
    m.image.resize(cell_image.size());
    for (std::size_t d = 0; d < cell_image.size(); ++d) {
        m.image[d].resize(cell_image[d].size());
        for (std::size_t c = 0; c < cell_image[d].size(); ++c) {
            // permutation parity
            int sign = 1;
            for (int i = 0; i < static_cast<int>(d) + 1; ++i)
                for (int j = i + 1; j < static_cast<int>(d) + 1; ++j)
                    if (position_image(static_cast<int>(d), static_cast<long long>(c), i) >
                        position_image(static_cast<int>(d), static_cast<long long>(c), j))
                        sign = -sign;
            m.image[d][c] = {cell_image[d][c], static_cast<std::int8_t>(sign)};
        }
    }
    return m;
}

SimplicialMap build_simplicial_map(const DeltaComplex& src, const DeltaComplex& dst,
                                   const std::vector<long long>& vertex_image) {
    if (static_cast<long long>(vertex_image.size()) != src.cell_count(0))
        throw std::invalid_argument("simplicial map: vertex image size mismatch");
    // dst cell lookup by sorted vertex tuple
    std::vector<std::map<std::vector<long long>, long long>> lookup(static_cast<std::size_t>(dst.dimension()) + 1);
    for (int d = 1; d <= dst.dimension(); ++d)
        for (long long c = 0; c < dst.cell_count(d); ++c) {
            auto vs = dst.vertices_of(d, c);
            std::sort(vs.begin(), vs.end());
            lookup[static_cast<std::size_t>(d)][vs] = c;
        }

    SimplicialMap out;
    out.vertex_image = vertex_image;
    out.cell_image.resize(static_cast<std::size_t>(src.dimension()) + 1);
    out.perm.resize(static_cast<std::size_t>(src.dimension()) + 1);
    out.cell_image[0].resize(static_cast<std::size_t>(src.cell_count(0)));
    out.perm[0].assign(static_cast<std::size_t>(src.cell_count(0)), 0);
    for (long long v = 0; v < src.cell_count(0); ++v) out.cell_image[0][static_cast<std::size_t>(v)] = vertex_image[static_cast<std::size_t>(v)];

    for (int d = 1; d <= src.dimension(); ++d) {
        out.cell_image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(src.cell_count(d)));
        out.perm[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(src.cell_count(d)));
        for (long long c = 0; c < src.cell_count(d); ++c) {
            auto vs = src.vertices_of(d, c);
            std::vector<long long> img(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) img[static_cast<std::size_t>(i)] = vertex_image[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])];
            std::vector<long long> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("simplicial map: cell image degenerates (not dimension-preserving)");
            auto it = lookup[static_cast<std::size_t>(d)].find(sorted);
            if (it == lookup[static_cast<std::size_t>(d)].end())
                throw std::invalid_argument("simplicial map: image vertex set spans no cell of the target");
            out.cell_image[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = it->second;
            std::uint32_t packed = 0;
            for (int i = 0; i <= d; ++i) {
                int pos = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), img[static_cast<std::size_t>(i)]) - sorted.begin());
                packed |= static_cast<std::uint32_t>(pos) << (4 * i);
            }
            out.perm[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = packed;
        }
    }
    return out;
}

}  // namespace coverhom
