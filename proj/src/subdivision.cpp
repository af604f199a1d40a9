#include "coverhom/subdivision.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coverhom {

namespace {

// All strictly increasing chains of nonempty subsets of full ending at full,
// of length len, generated in lexicographic order of the mask vector.
void gen_chains(unsigned full, int len, std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> cur(static_cast<std::size_t>(len));
    cur[static_cast<std::size_t>(len) - 1] = full;
    std::function<void(int)> rec = [&](int slot) {
        if (slot < 0) {
            out.push_back(cur);
            return;
        }
        unsigned upper = cur[static_cast<std::size_t>(slot) + 1];
        // proper nonempty submask of upper
        for (unsigned m = (upper - 1) & upper; m; m = (m - 1) & upper) {
            cur[static_cast<std::size_t>(slot)] = m;
            rec(slot - 1);
        }
    };
    if (len == 1) {
        out.push_back(cur);
        return;
    }
    rec(len - 2);
}

unsigned compress_mask(unsigned mask, unsigned within) {
    // reindex the bits of mask through the sorted set bits of within
    unsigned out = 0;
    int pos = 0;
    for (unsigned bits = within; bits; bits &= bits - 1) {
        unsigned low = bits & ~(bits - 1);
        if (mask & low) out |= 1u << pos;
        ++pos;
    }
    return out;
}

unsigned remap_mask(unsigned mask, const int* pos_image) {
    unsigned out = 0;
    for (int p = 0; p < 16; ++p)
        if (mask & (1u << p)) out |= 1u << pos_image[p];
    return out;
}

// sd over a position subset P: chains of masks ending at P with the signs of
// the recursion sd(sigma) = (-1)^{|P|-1} sum_p (-1)^{rank_P(p)} (sd at P-p, then P).
void sd_flags(unsigned P, std::vector<std::pair<std::vector<unsigned>, int>>& out) {
    if (__builtin_popcount(P) == 1) {
        out.push_back({{P}, 1});
        return;
    }
    int dim_sign = (__builtin_popcount(P) - 1) % 2 == 0 ? 1 : -1;
    int rank = 0;
    for (unsigned bits = P; bits; bits &= bits - 1, ++rank) {
        unsigned low = bits & ~(bits - 1);
        std::vector<std::pair<std::vector<unsigned>, int>> sub;
        sd_flags(P & ~low, sub);
        int face_sign = rank % 2 == 0 ? 1 : -1;
        for (auto& [chain, s] : sub) {
            chain.push_back(P);
            out.push_back({std::move(chain), dim_sign * face_sign * s});
        }
    }
}

}  // namespace

Subdivision subdivide(const DeltaComplex& x) {
    int xd = x.dimension();
    if (xd > 7) throw std::invalid_argument("subdivide: dimension too large");
    Subdivision s;
    s.base_ = &x;

    // flag tables per carrier dimension
    s.flags_.resize(static_cast<std::size_t>(xd) + 1);
    s.flag_faces_.resize(static_cast<std::size_t>(xd) + 1);
    s.sd_table_.resize(static_cast<std::size_t>(xd) + 1);
    s.flatten_mask_.resize(static_cast<std::size_t>(xd) + 1);
    s.count_.assign(static_cast<std::size_t>(xd) + 1, std::vector<long long>(static_cast<std::size_t>(xd) + 1, 0));

    std::vector<std::vector<std::map<std::vector<unsigned>, long long>>> local_index(static_cast<std::size_t>(xd) + 1);

    for (int m = 0; m <= xd; ++m) {
        unsigned full = (1u << (m + 1)) - 1;
        s.flags_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
        s.flag_faces_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
        s.flatten_mask_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
        local_index[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
        for (int d = 0; d <= m; ++d) {
            gen_chains(full, d + 1, s.flags_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)]);
            auto& list = s.flags_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
            std::sort(list.begin(), list.end());
            s.count_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)] = static_cast<long long>(list.size());
            for (long long i = 0; i < static_cast<long long>(list.size()); ++i)
                local_index[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)][list[static_cast<std::size_t>(i)]] = i;
        }
    }

    // face recipes and flatten masks
    for (int m = 0; m <= xd; ++m) {
        for (int d = 0; d <= m; ++d) {
            auto& list = s.flags_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
            auto& faces = s.flag_faces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
            auto& fmask = s.flatten_mask_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
            faces.resize(list.size());
            fmask.resize(list.size());
            for (std::size_t li = 0; li < list.size(); ++li) {
                const auto& chain = list[li];
                if (d >= 1) {
                    for (int i = 0; i < d; ++i) {
                        std::vector<unsigned> sub;
                        for (int j = 0; j <= d; ++j)
                            if (j != i) sub.push_back(chain[static_cast<std::size_t>(j)]);
                        faces[li].local_drop[i] = local_index[static_cast<std::size_t>(m)][static_cast<std::size_t>(d) - 1].at(sub);
                    }
                    unsigned keep = chain[static_cast<std::size_t>(d) - 1];
                    faces[li].keep_mask = keep;
                    std::vector<unsigned> comp;
                    for (int j = 0; j < d; ++j) comp.push_back(compress_mask(chain[static_cast<std::size_t>(j)], keep));
                    int m2 = __builtin_popcount(keep) - 1;
                    faces[li].compressed_local = local_index[static_cast<std::size_t>(m2)][static_cast<std::size_t>(d) - 1].at(comp);
                }
                // flatten: last-vertex positions must strictly increase
                unsigned keepmask = 0;
                bool ok = true;
                int prev = -1;
                for (int j = 0; j <= d; ++j) {
                    int p = 31 - __builtin_clz(chain[static_cast<std::size_t>(j)]);
                    if (p <= prev) {
                        ok = false;
                        break;
                    }
                    prev = p;
                    keepmask |= 1u << p;
                }
                fmask[li] = ok ? keepmask : 0u;
            }
        }
        // sd table: signed full flags of length m+1
        std::vector<std::pair<std::vector<unsigned>, int>> raw;
        sd_flags((1u << (m + 1)) - 1, raw);
        for (auto& [chain, sign] : raw)
            s.sd_table_[static_cast<std::size_t>(m)].push_back(
                {local_index[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)].at(chain), sign});
    }

    // cell layout
    s.offset_.assign(static_cast<std::size_t>(xd) + 1, std::vector<long long>(static_cast<std::size_t>(xd) + 1, 0));
    std::vector<long long> dim_total(static_cast<std::size_t>(xd) + 1, 0);
    for (int d = 0; d <= xd; ++d) {
        long long next = 0;
        for (int m = d; m <= xd; ++m) {
            s.offset_[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)] = next;
            next += x.cell_count(m) * s.count_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
        }
        dim_total[static_cast<std::size_t>(d)] = next;
    }

    // assemble the complex
    DeltaComplex::Builder b(xd);
    b.add_vertices(dim_total[0]);
    std::vector<VertexProvenance> prov(static_cast<std::size_t>(dim_total[0]));
    for (int m = 0; m <= xd; ++m)
        for (long long c = 0; c < x.cell_count(m); ++c)
            prov[static_cast<std::size_t>(s.cell_id(m, c, 0, 0))] = {m, c};

    for (int d = 1; d <= xd; ++d) {
        for (int m = d; m <= xd; ++m) {
            const auto& faces = s.flag_faces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
            long long cnt = s.count_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
            for (long long c = 0; c < x.cell_count(m); ++c) {
                for (long long li = 0; li < cnt; ++li) {
                    std::vector<long long> fs(static_cast<std::size_t>(d) + 1);
                    for (int i = 0; i < d; ++i)
                        fs[static_cast<std::size_t>(i)] = s.cell_id(m, c, d - 1, faces[static_cast<std::size_t>(li)].local_drop[i]);
                    auto [m2, c2] = x.face_at_mask(m, c, faces[static_cast<std::size_t>(li)].keep_mask);
                    fs[static_cast<std::size_t>(d)] = s.cell_id(m2, c2, d - 1, faces[static_cast<std::size_t>(li)].compressed_local);
                    b.add_cell(d, fs);
                }
            }
        }
    }
    b.set_provenance(std::move(prov));
    s.result_ = b.finish();
    return s;
}

long long Subdivision::flag_cell(int m, long long carrier, const std::vector<unsigned>& masks) const {
    int d = static_cast<int>(masks.size()) - 1;
    auto& list = flags_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
    auto it = std::lower_bound(list.begin(), list.end(), masks);
    if (it == list.end() || *it != masks) throw std::invalid_argument("flag_cell: no such flag");
    return cell_id(m, carrier, d, static_cast<long long>(it - list.begin()));
}

long long Subdivision::barycenter(int m, long long carrier) const { return cell_id(m, carrier, 0, 0); }

Subdivision::Decoded Subdivision::decode(int d, long long cell) const {
    int xd = base_->dimension();
    for (int m = d; m <= xd; ++m) {
        long long start = offset_[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)];
        long long span = base_->cell_count(m) * count_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
        if (cell < start + span) {
            long long rel = cell - start;
            long long cnt = count_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)];
            return {m, rel / cnt, rel % cnt};
        }
    }
    throw std::out_of_range("subdivision decode: cell out of range");
}

const std::vector<unsigned>& Subdivision::flag_masks(int m, int d, long long local) const {
    return flags_[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)][static_cast<std::size_t>(local)];
}

Chain Subdivision::subdivide_chain(const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    for (const auto& [cell, v] : c.terms) {
        for (const auto& [local, sign] : sd_table_[static_cast<std::size_t>(c.degree)]) {
            t.push_back({cell_id(c.degree, cell, c.degree, local), sign > 0 ? v : -v});
        }
    }
    return Chain::from_terms(c.degree, std::move(t));
}

Chain Subdivision::flatten_chain(const Chain& c) const {
    std::vector<std::pair<long long, Zint>> t;
    for (const auto& [cell, v] : c.terms) {
        Decoded dc = decode(c.degree, cell);
        unsigned keep = flatten_mask_[static_cast<std::size_t>(dc.carrier_dim)][static_cast<std::size_t>(c.degree)]
                                     [static_cast<std::size_t>(dc.local)];
        if (!keep) continue;
        auto [m2, c2] = base_->face_at_mask(dc.carrier_dim, dc.carrier, keep);
        (void)m2;
        t.push_back({c2, v});
    }
    return Chain::from_terms(c.degree, std::move(t));
}

CellMap Subdivision::induced_map(const SimplicialMap& h, const Subdivision& sx, const Subdivision& sy) {
    CellMap out;
    int dim = sx.result().dimension();
    out.image.resize(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        out.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(sx.result().cell_count(d)));
        for (long long cell = 0; cell < sx.result().cell_count(d); ++cell) {
            auto dc = sx.decode(d, cell);
            long long target_carrier = h.cell_image[static_cast<std::size_t>(dc.carrier_dim)][static_cast<std::size_t>(dc.carrier)];
            int pos_image[16];
            for (int p = 0; p <= dc.carrier_dim; ++p) pos_image[p] = h.position_image(dc.carrier_dim, dc.carrier, p);
            const auto& masks = sx.flag_masks(dc.carrier_dim, d, dc.local);
            std::vector<unsigned> mapped(masks.size());
            for (std::size_t i = 0; i < masks.size(); ++i) mapped[i] = remap_mask(masks[i], pos_image);
            out.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(cell)] =
                {sy.flag_cell(dc.carrier_dim, target_carrier, mapped), 1};
        }
    }
    return out;
}

CellMap Subdivision::induced_map_strict(const CellMap& h, const Subdivision& sx, const Subdivision& sy) {
    CellMap out;
    int dim = sx.result().dimension();
    out.image.resize(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        out.image[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(sx.result().cell_count(d)));
        for (long long cell = 0; cell < sx.result().cell_count(d); ++cell) {
            auto dc = sx.decode(d, cell);
            auto [img, sign] = h.apply(dc.carrier_dim, dc.carrier);
            if (sign != 1) throw std::invalid_argument("induced_map_strict: map is not strict");
            out.image[static_cast<std::size_t>(d)][static_cast<std::size_t>(cell)] =
                {sy.cell_id(dc.carrier_dim, img, d, dc.local), 1};
        }
    }
    return out;
}

}  // namespace coverhom
