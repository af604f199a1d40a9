#include "coverhom/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coverhom {

namespace {

struct LineReader {
    std::istream& is;
    long long line_no = 0;

    std::string next() {
        std::string line;
        while (std::getline(is, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            return line;
        }
        throw std::runtime_error("unexpected end of file at line " + std::to_string(line_no));
    }

    [[noreturn]] void fail(const std::string& what, const std::string& line) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + what + " (got \"" + line + "\")");
    }

    void expect(const std::string& keyword) {
        std::string line = next();
        if (line != keyword) fail("expected \"" + keyword + "\"", line);
    }

    long long keyword_value(const std::string& keyword) {
        std::string line = next();
        std::istringstream ss(line);
        std::string head;
        long long v;
        if (!(ss >> head >> v) || head != keyword) fail("expected \"" + keyword + " <number>\"", line);
        return v;
    }
};

}  // namespace

void write_complex(std::ostream& os, const DeltaComplex& x) {
    os << "deltacomplex v1\n";
    os << "dim " << x.dimension() << "\n";
    os << "counts";
    for (int d = 0; d <= x.dimension(); ++d) os << " " << x.cell_count(d);
    os << "\n";
    for (int d = 1; d <= x.dimension(); ++d) {
        os << "cells " << d << "\n";
        for (long long c = 0; c < x.cell_count(d); ++c) {
            const std::int64_t* f = x.faces(d, c);
            for (int i = 0; i <= d; ++i) os << (i ? " " : "") << f[i];
            os << "\n";
        }
    }
    if (x.has_provenance()) {
        os << "provenance\n";
        for (long long v = 0; v < x.cell_count(0); ++v)
            os << x.provenance(v).carrier_dim << " " << x.provenance(v).carrier_cell << "\n";
    }
    os << "end\n";
}

DeltaComplex read_complex(std::istream& is) {
    LineReader r{is};
    r.expect("deltacomplex v1");
    long long dim = r.keyword_value("dim");
    if (dim < 0 || dim > 15) throw std::runtime_error("complex dimension out of range");
    std::string counts_line = r.next();
    std::istringstream cs(counts_line);
    std::string head;
    cs >> head;
    if (head != "counts") r.fail("expected counts line", counts_line);
    std::vector<long long> counts;
    long long v;
    while (cs >> v) counts.push_back(v);
    if (static_cast<long long>(counts.size()) != dim + 1) r.fail("counts list has the wrong length", counts_line);

    DeltaComplex::Builder b(static_cast<int>(dim));
    b.add_vertices(counts[0]);
    for (int d = 1; d <= dim; ++d) {
        std::string header = r.next();
        std::istringstream hs(header);
        std::string kw;
        long long hd;
        if (!(hs >> kw >> hd) || kw != "cells" || hd != d) r.fail("expected cells header for dimension " + std::to_string(d), header);
        for (long long c = 0; c < counts[static_cast<std::size_t>(d)]; ++c) {
            std::string cell_line = r.next();
            std::istringstream ls(cell_line);
            std::vector<long long> fs;
            long long fid;
            while (ls >> fid) fs.push_back(fid);
            if (static_cast<int>(fs.size()) != d + 1) r.fail("expected " + std::to_string(d + 1) + " face ids", cell_line);
            b.add_cell(d, fs);
        }
    }
    std::string tail = r.next();
    if (tail == "provenance") {
        std::vector<VertexProvenance> prov(static_cast<std::size_t>(counts[0]));
        for (long long pv = 0; pv < counts[0]; ++pv) {
            std::string pl = r.next();
            std::istringstream ps(pl);
            long long pd, pc;
            if (!(ps >> pd >> pc)) r.fail("expected provenance pair", pl);
            prov[static_cast<std::size_t>(pv)] = {static_cast<int>(pd), pc};
        }
        b.set_provenance(std::move(prov));
        tail = r.next();
    }
    if (tail != "end") r.fail("expected end", tail);
    try {
        return b.finish();
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("complex fails validation: ") + e.what());
    }
}

void write_chain(std::ostream& os, const Chain& c) {
    os << "chain v1\n";
    os << "degree " << c.degree << "\n";
    os << "terms " << c.terms.size() << "\n";
    for (const auto& [cell, v] : c.terms) os << cell << " " << v << "\n";
    os << "end\n";
}

Chain read_chain(std::istream& is) {
    LineReader r{is};
    r.expect("chain v1");
    long long degree = r.keyword_value("degree");
    long long terms = r.keyword_value("terms");
    std::vector<std::pair<long long, Zint>> t;
    for (long long i = 0; i < terms; ++i) {
        std::string line = r.next();
        std::istringstream ls(line);
        long long cell;
        std::string coeff;
        if (!(ls >> cell >> coeff)) r.fail("expected \"cell coefficient\"", line);
        t.push_back({cell, Zint::from_string(coeff)});
    }
    r.expect("end");
    return Chain::from_terms(static_cast<int>(degree), std::move(t));
}

void write_bundle(std::ostream& os, const InstanceBundle& b) {
    os << "bundle v1\n";
    os << "n " << b.n << "\n";
    os << "k " << b.k << "\n";
    os << "provenance " << b.provenance << "\n";
    for (const auto& note : b.notes) os << "note " << note << "\n";
    os << "complex L\n";
    write_complex(os, b.L);
    os << "chain S\n";
    write_chain(os, b.S);
    if (b.D) {
        os << "chain D\n";
        write_chain(os, *b.D);
    }
    os << "endbundle\n";
}

InstanceBundle read_bundle(std::istream& is) {
    LineReader r{is};
    r.expect("bundle v1");
    InstanceBundle b;
    b.n = static_cast<int>(r.keyword_value("n"));
    b.k = r.keyword_value("k");
    std::string line = r.next();
    if (line.rfind("provenance ", 0) != 0) r.fail("expected provenance line", line);
    b.provenance = line.substr(11);
    line = r.next();
    while (line.rfind("note ", 0) == 0) {
        b.notes.push_back(line.substr(5));
        line = r.next();
    }
    if (line != "complex L") r.fail("expected \"complex L\"", line);
    b.L = read_complex(is);
    r.expect("chain S");
    b.S = read_chain(is);
    line = r.next();
    if (line == "chain D") {
        b.D = read_chain(is);
        line = r.next();
    }
    if (line != "endbundle") r.fail("expected endbundle", line);
    // structural sanity with the residual surfaced
    if (auto problem = bundle_problems(b)) throw std::runtime_error("bundle rejected: " + *problem);
    return b;
}

void write_small_cover(std::ostream& os, const SmallCover& m) {
    auto mat = m.materialize();
    write_complex(os, mat.complex);
    os << "cover rank " << m.rank() << "\n";
    for (int d = 0; d <= mat.complex.dimension(); ++d) {
        os << "annotations " << d << "\n";
        for (long long c = 0; c < mat.complex.cell_count(d); ++c)
            os << mat.cone_cell[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] << " "
               << mat.coset_rep[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] << "\n";
    }
    os << "endcover\n";
}

void write_bundle_file(const std::string& path, const InstanceBundle& b) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_bundle(os, b);
}

InstanceBundle read_bundle_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_bundle(is);
}

DeltaComplex read_complex_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_complex(is);
}

std::string content_fingerprint(const DeltaComplex& x) {
    std::ostringstream os;
    write_complex(os, x);
    std::string s = os.str();
    std::uint64_t h1 = 1469598103934665603ull, h2 = 1099511628211ull ^ 0x9e3779b97f4a7c15ull;
    for (unsigned char ch : s) {
        h1 = (h1 ^ ch) * 1099511628211ull;
        h2 = (h2 ^ (ch + 0x9e)) * 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h1 << h2;
    return hex.str();
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::filesystem::path p = std::filesystem::path(dir_) / (key + ".txt");
    std::ifstream is(p);
    if (!is) return std::nullopt;
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
    std::filesystem::create_directories(dir_);
    std::filesystem::path p = std::filesystem::path(dir_) / (key + ".txt");
    std::ofstream os(p);
    os << value;
}

}  // namespace coverhom
