#include "coverhom/homology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "coverhom/fp_solve.hpp"

namespace coverhom {

SparseIntMatrix boundary_matrix(const DeltaComplex& x, int d) {
    if (d < 1 || d > x.dimension()) return SparseIntMatrix(d >= 1 ? x.cell_count(d - 1) : 0, 0);
    SparseIntMatrix m(x.cell_count(d - 1), x.cell_count(d));
    for (long long c = 0; c < x.cell_count(d); ++c) {
        std::vector<std::pair<long long, Zint>> entries;
        const std::int64_t* f = x.faces(d, c);
        for (int i = 0; i <= d; ++i) entries.push_back({f[i], Zint(i % 2 == 0 ? 1 : -1)});
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        auto& col = m.col[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < entries.size();) {
            long long row = entries[i].first;
            Zint acc;
            while (i < entries.size() && entries[i].first == row) acc += entries[i++].second;
            if (!acc.is_zero()) col.push_back({row, std::move(acc)});
        }
    }
    return m;
}

SparseIntMatrix relative_boundary_matrix(const DeltaComplex& x, const CellSubset& a, int d,
                                         const std::vector<std::vector<long long>>& ambient_to_rel,
                                         const std::vector<std::vector<long long>>& rel_to_ambient) {
    long long rows = d >= 1 ? static_cast<long long>(rel_to_ambient[static_cast<std::size_t>(d) - 1].size()) : 0;
    if (d < 1 || d > x.dimension())
        return SparseIntMatrix(rows, 0);
    long long cols = static_cast<long long>(rel_to_ambient[static_cast<std::size_t>(d)].size());
    SparseIntMatrix m(rows, cols);
    (void)a;
    for (long long j = 0; j < cols; ++j) {
        long long c = rel_to_ambient[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
        std::vector<std::pair<long long, Zint>> entries;
        const std::int64_t* f = x.faces(d, c);
        for (int i = 0; i <= d; ++i) {
            long long rel = ambient_to_rel[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(f[i])];
            if (rel < 0) continue;  // face lies in A
            entries.push_back({rel, Zint(i % 2 == 0 ? 1 : -1)});
        }
        std::sort(entries.begin(), entries.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        auto& col = m.col[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < entries.size();) {
            long long row = entries[i].first;
            Zint acc;
            while (i < entries.size() && entries[i].first == row) acc += entries[i++].second;
            if (!acc.is_zero()) col.push_back({row, std::move(acc)});
        }
    }
    return m;
}

// Coordinate data: SNF of the degree-d boundary (column log: kernel
// membership and kernel coordinates) and SNF of the boundary-image lattice
// expressed in kernel coordinates (row log: class coordinates).
struct ClassCalc {
    int degree = 0;
    long long n_d = 0;
    long long rank_d = 0;     // rank of boundary_d
    long long kernel_dim = 0;
    SnfResult snf_d;          // of boundary_d, with col log
    SnfResult snf_b;          // of the kernel-coordinate image matrix, with row+col logs
    std::vector<Zint> diag_b;
    long long rank_b = 0;
    std::vector<std::size_t> torsion_slots;  // indices i with diag_b[i] > 1
    // translation: ambient cell id <-> vector index (identity for absolute
    // homology; relative groups translate through these tables)
    std::vector<long long> cell_of_index;  // empty = identity
    std::vector<long long> index_of_cell;  // empty = identity

    std::vector<Zint> chain_to_vector(const Chain& z) const {
        std::vector<Zint> v(static_cast<std::size_t>(n_d));
        for (const auto& [cell, val] : z.terms) {
            long long idx = index_of_cell.empty() ? cell : index_of_cell[static_cast<std::size_t>(cell)];
            if (idx < 0) continue;  // relative chain: A-cells vanish
            if (idx >= n_d) throw std::invalid_argument("class computation: cell out of range");
            v[static_cast<std::size_t>(idx)] = val;
        }
        return v;
    }

    // kernel coordinates of a cycle; throws if z is not a cycle
    std::vector<Zint> kernel_coords(const std::vector<Zint>& v) const {
        std::vector<Zint> w = v;
        apply_col_log_inverse(snf_d.col_log, w);
        for (long long i = 0; i < rank_d; ++i)
            if (!w[static_cast<std::size_t>(i)].is_zero())
                throw std::invalid_argument("class computation: chain is not a cycle");
        return std::vector<Zint>(w.begin() + static_cast<std::ptrdiff_t>(rank_d), w.end());
    }

    std::vector<Zint> reduced_coords(const Chain& z) const {
        std::vector<Zint> y = kernel_coords(chain_to_vector(z));
        apply_row_log(snf_b.row_log, y);
        return y;
    }
};

namespace {

HomologyGroup homology_from_matrices(int degree, long long n_d, const SparseIntMatrix& bd_d,
                                     const SparseIntMatrix& bd_dp1, const HomologyOptions& opts,
                                     std::vector<long long> cell_of_index, std::vector<long long> index_of_cell) {
    auto calc = std::make_shared<ClassCalc>();
    calc->degree = degree;
    calc->n_d = n_d;
    calc->cell_of_index = std::move(cell_of_index);
    calc->index_of_cell = std::move(index_of_cell);

    calc->snf_d = smith_normal_form(bd_d, {false, true});
    calc->rank_d = calc->snf_d.rank();
    calc->kernel_dim = n_d - calc->rank_d;

    // image of boundary_{d+1} in kernel coordinates
    SparseIntMatrix b(calc->kernel_dim, bd_dp1.cols);
    for (long long j = 0; j < bd_dp1.cols; ++j) {
        std::vector<Zint> v(static_cast<std::size_t>(n_d));
        for (const auto& [r, val] : bd_dp1.col[static_cast<std::size_t>(j)]) v[static_cast<std::size_t>(r)] = val;
        apply_col_log_inverse(calc->snf_d.col_log, v);
        for (long long i = 0; i < calc->rank_d; ++i)
            if (!v[static_cast<std::size_t>(i)].is_zero())
                throw std::runtime_error("homology: boundary image escapes the kernel");
        for (long long i = calc->rank_d; i < n_d; ++i)
            if (!v[static_cast<std::size_t>(i)].is_zero())
                b.col[static_cast<std::size_t>(j)].push_back({i - calc->rank_d, v[static_cast<std::size_t>(i)]});
    }
    calc->snf_b = smith_normal_form(b, {true, false});
    calc->diag_b = calc->snf_b.diagonal;
    calc->rank_b = calc->snf_b.rank();
    for (std::size_t i = 0; i < calc->diag_b.size(); ++i)
        if (!calc->diag_b[i].is_one()) calc->torsion_slots.push_back(i);

    HomologyGroup h;
    h.degree = degree;
    h.rank = calc->kernel_dim - calc->rank_b;
    for (std::size_t i : calc->torsion_slots) h.torsion.push_back(calc->diag_b[i]);

    if (opts.want_generators) {
        // generator for reduced coordinate i: chain with U_B-coordinates e_i
        auto gen_for = [&](long long slot) {
            std::vector<Zint> w(static_cast<std::size_t>(calc->kernel_dim));
            w[static_cast<std::size_t>(slot)] = Zint(1);
            apply_row_log_inverse(calc->snf_b.row_log, w);  // y = U_B^{-1} e_slot
            // chain = V_d * (0^{rank_d}, y)
            std::vector<Zint> full(static_cast<std::size_t>(calc->n_d));
            for (long long i = 0; i < calc->kernel_dim; ++i)
                full[static_cast<std::size_t>(calc->rank_d + i)] = w[static_cast<std::size_t>(i)];
            apply_col_log(calc->snf_d.col_log, full);
            std::vector<std::pair<long long, Zint>> terms;
            for (long long i = 0; i < calc->n_d; ++i)
                if (!full[static_cast<std::size_t>(i)].is_zero()) {
                    long long cell = calc->cell_of_index.empty() ? i : calc->cell_of_index[static_cast<std::size_t>(i)];
                    terms.push_back({cell, full[static_cast<std::size_t>(i)]});
                }
            return Chain::from_terms(degree, std::move(terms));
        };
        for (long long i = calc->rank_b; i < calc->kernel_dim; ++i) h.generators.push_back(gen_for(i));
        for (std::size_t i : calc->torsion_slots) h.generators.push_back(gen_for(static_cast<long long>(i)));
    }
    if (opts.want_coordinates || opts.want_generators) h.calc = calc;
    return h;
}

}  // namespace

HomologyGroup homology(const DeltaComplex& x, int d, Coefficients coeff, const HomologyOptions& opts) {
    if (d < 0 || d > x.dimension()) throw std::invalid_argument("homology: degree out of range");
    if (coeff.kind == Coefficients::Integers) {
        return homology_from_matrices(d, x.cell_count(d), boundary_matrix(x, d), boundary_matrix(x, d + 1), opts, {}, {});
    }
    HomologyGroup h;
    h.degree = d;
    if (coeff.kind == Coefficients::ModP) {
        long long r_d = fp_rank(boundary_matrix(x, d), coeff.p);
        long long r_d1 = fp_rank(boundary_matrix(x, d + 1), coeff.p);
        h.rank = x.cell_count(d) - r_d - r_d1;
    } else {
        auto r1 = smith_normal_form(boundary_matrix(x, d));
        auto r2 = smith_normal_form(boundary_matrix(x, d + 1));
        h.rank = x.cell_count(d) - r1.rank() - r2.rank();
    }
    return h;
}

std::vector<HomologyGroup> all_homology(const DeltaComplex& x, Coefficients coeff, const HomologyOptions& opts) {
    std::vector<HomologyGroup> out;
    for (int d = 0; d <= x.dimension(); ++d) out.push_back(homology(x, d, coeff, opts));
    return out;
}

std::string HomologyGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z_" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ClassCoordinates class_coordinates(const Chain& z, const HomologyGroup& h) {
    if (!h.calc) throw std::invalid_argument("class_coordinates: group carries no coordinate data");
    const ClassCalc& c = *h.calc;
    if (z.degree != c.degree) throw std::invalid_argument("class_coordinates: degree mismatch");
    std::vector<Zint> w = c.reduced_coords(z);
    ClassCoordinates out;
    for (long long i = c.rank_b; i < c.kernel_dim; ++i) out.free_part.push_back(w[static_cast<std::size_t>(i)]);
    for (std::size_t i : c.torsion_slots) {
        Zint r = w[i] % c.diag_b[i];
        if (r.sign() < 0) r += c.diag_b[i];
        out.torsion_part.push_back(std::move(r));
    }
    return out;
}

std::optional<Zint> order_of_class(const Chain& z, const HomologyGroup& h) {
    if (!h.calc) throw std::invalid_argument("order_of_class: group carries no coordinate data");
    const ClassCalc& c = *h.calc;
    std::vector<Zint> w = c.reduced_coords(z);
    for (long long i = c.rank_b; i < c.kernel_dim; ++i)
        if (!w[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
    Zint order(1);
    for (long long i = 0; i < c.rank_b; ++i) {
        const Zint& d = c.diag_b[static_cast<std::size_t>(i)];
        const Zint& wi = w[static_cast<std::size_t>(i)];
        if (wi.is_zero()) continue;
        Zint need = d / Zint::gcd(d, wi);
        order = order * need / Zint::gcd(order, need);
    }
    return order;
}

std::optional<Chain> solve_boundary(const DeltaComplex& x, const Chain& c) {
    int d = c.degree;
    if (d + 1 > x.dimension()) {
        if (c.is_zero()) return Chain::zero(d + 1);
        return std::nullopt;
    }
    SparseIntMatrix bd = boundary_matrix(x, d + 1);
    std::vector<Zint> b(static_cast<std::size_t>(bd.rows));
    for (const auto& [cell, v] : c.terms) b[static_cast<std::size_t>(cell)] = v;
    auto xsol = solve_integer(bd, b);
    if (!xsol) return std::nullopt;
    std::vector<std::pair<long long, Zint>> terms;
    for (long long j = 0; j < bd.cols; ++j)
        if (!(*xsol)[static_cast<std::size_t>(j)].is_zero()) terms.push_back({j, (*xsol)[static_cast<std::size_t>(j)]});
    return Chain::from_terms(d + 1, std::move(terms));
}

HomologyGroup relative_homology(const DeltaComplex& x, const CellSubset& a, int d, const HomologyOptions& opts) {
    if (!a.is_subcomplex(x)) throw std::invalid_argument("relative_homology: A is not a subcomplex");
    std::vector<std::vector<long long>> ambient_to_rel(static_cast<std::size_t>(x.dimension()) + 1);
    std::vector<std::vector<long long>> rel_to_ambient(static_cast<std::size_t>(x.dimension()) + 1);
    for (int k = 0; k <= x.dimension(); ++k) {
        ambient_to_rel[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(x.cell_count(k)), -1);
        for (long long cidx = 0; cidx < x.cell_count(k); ++cidx) {
            if (a.contains(k, cidx)) continue;
            ambient_to_rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(cidx)] =
                static_cast<long long>(rel_to_ambient[static_cast<std::size_t>(k)].size());
            rel_to_ambient[static_cast<std::size_t>(k)].push_back(cidx);
        }
    }
    SparseIntMatrix bd_d = relative_boundary_matrix(x, a, d, ambient_to_rel, rel_to_ambient);
    SparseIntMatrix bd_dp1 = relative_boundary_matrix(x, a, d + 1, ambient_to_rel, rel_to_ambient);
    long long n_d = static_cast<long long>(rel_to_ambient[static_cast<std::size_t>(d)].size());
    return homology_from_matrices(d, n_d, bd_d, bd_dp1, opts, rel_to_ambient[static_cast<std::size_t>(d)],
                                  ambient_to_rel[static_cast<std::size_t>(d)]);
}

Chain connecting_delta(const DeltaComplex& x, const CellSubset& a, const Chain& z) {
    Chain bz = boundary(x, z);
    Chain on_a = Chain::zero(z.degree - 1);
    for (const auto& [cell, v] : bz.terms) {
        if (!a.contains(z.degree - 1, cell))
            throw std::invalid_argument("connecting_delta: chain is not a relative cycle");
        on_a.terms.push_back({cell, v});
    }
    return on_a;
}

std::optional<Chain> fundamental_cycle(const DeltaComplex& x, int n, PseudomanifoldViolation* violation) {
    if (n < 1 || n > x.dimension()) throw std::invalid_argument("fundamental_cycle: bad degree");
    long long top = x.cell_count(n);
    long long ridges = x.cell_count(n - 1);
    // incidences of each (n-1)-cell, with multiplicity
    std::vector<std::vector<std::pair<long long, int>>> inc(static_cast<std::size_t>(ridges));
    for (long long c = 0; c < top; ++c) {
        const std::int64_t* f = x.faces(n, c);
        for (int i = 0; i <= n; ++i) inc[static_cast<std::size_t>(f[i])].push_back({c, i});
    }
    for (long long r = 0; r < ridges; ++r) {
        if (inc[static_cast<std::size_t>(r)].size() != 2) {
            if (violation) *violation = {n - 1, r, static_cast<long long>(inc[static_cast<std::size_t>(r)].size())};
            throw std::runtime_error("fundamental_cycle: not a closed pseudomanifold (a ridge has " +
                                     std::to_string(inc[static_cast<std::size_t>(r)].size()) + " incidences)");
        }
    }
    // propagate signs: s_c1 * (-1)^{i1} + s_c2 * (-1)^{i2} = 0 per ridge
    std::vector<int> sign(static_cast<std::size_t>(top), 0);
    for (long long seed = 0; seed < top; ++seed) {
        if (sign[static_cast<std::size_t>(seed)] != 0) continue;
        sign[static_cast<std::size_t>(seed)] = 1;
        std::deque<long long> queue{seed};
        while (!queue.empty()) {
            long long c = queue.front();
            queue.pop_front();
            const std::int64_t* f = x.faces(n, c);
            for (int i = 0; i <= n; ++i) {
                const auto& pair = inc[static_cast<std::size_t>(f[i])];
                auto [c1, i1] = pair[0];
                auto [c2, i2] = pair[1];
                long long other = c1 == c && i1 == i ? c2 : c1;
                int iother = c1 == c && i1 == i ? i2 : i1;
                // want s_other * (-1)^{iother} = -s_c * (-1)^{i}
                int want = -sign[static_cast<std::size_t>(c)] * ((i % 2 == 0) ? 1 : -1) * ((iother % 2 == 0) ? 1 : -1);
                if (sign[static_cast<std::size_t>(other)] == 0) {
                    sign[static_cast<std::size_t>(other)] = want;
                    queue.push_back(other);
                } else if (sign[static_cast<std::size_t>(other)] != want) {
                    return std::nullopt;  // non-orientable
                }
            }
        }
    }
    std::vector<std::pair<long long, Zint>> terms;
    for (long long c = 0; c < top; ++c) terms.push_back({c, Zint(sign[static_cast<std::size_t>(c)])});
    Chain z = Chain::from_terms(n, std::move(terms));
    if (!boundary(x, z).is_zero()) return std::nullopt;
    return z;
}

}  // namespace coverhom
