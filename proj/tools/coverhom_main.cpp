// Command-line frontend: build instance bundles, run the verification
// pipeline, compute homology of complex files, evaluate Coxeter normal
// forms, and export boundary matrices.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "coverhom/bundle.hpp"
#include "coverhom/homology.hpp"
#include "coverhom/io.hpp"
#include "coverhom/racg.hpp"
#include "coverhom/small_cover.hpp"
#include "coverhom/subdivision.hpp"
#include "coverhom/verify.hpp"

using namespace coverhom;

namespace {

long long env_or(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoll(v);
    } catch (...) {
        return fallback;
    }
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

InstanceBundle load_instance(const std::string& instance, int n, long long k, const std::string& bundle_path,
                             long long max_cells) {
    if (!bundle_path.empty()) return read_bundle_file(bundle_path);
    if (instance == "twisted") return build_twisted_bundle(n);
    if (instance == "moore") return build_moore_instance(n, k, max_cells);
    throw std::runtime_error("unknown instance \"" + instance + "\" (expected twisted, moore, or --bundle)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverhom: small covers of simplicial complexes and exact verification of their torsion classes"};
    app.require_subcommand(1);

    std::string instance, bundle_path, out_path, cache_dir = env_or("COVERHOM_CACHE", "");
    int n = 3;
    long long k = 2;
    long long max_cells = env_or("COVERHOM_MAX_CELLS", 1000000);
    std::uint64_t seed = 0;
    bool json = false;

    auto add_common = [&](CLI::App* cmd, bool with_instance) {
        if (with_instance) {
            cmd->add_option("--instance", instance, "built-in instance family: twisted | moore");
            cmd->add_option("--n", n, "dimension of the instance complex");
            cmd->add_option("--k", k, "torsion order of the instance");
            cmd->add_option("--bundle", bundle_path, "read the bundle from a file instead");
        }
        cmd->add_option("--seed", seed, "seed for sampled properties (recorded in reports)");
        cmd->add_option("--max-cells", max_cells, "refusal cap on total cover cells");
        cmd->add_option("--cache", cache_dir, "cache directory for homology results");
    };

    auto* build_cmd = app.add_subcommand("build", "build an instance bundle and write it to a file");
    add_common(build_cmd, true);
    build_cmd->add_option("--out", out_path, "output bundle path")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the verification pipeline on a bundle");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--out", out_path, "write the report to this path");
    verify_cmd->add_flag("--json", json, "print the report as JSON");
    std::string witness_path;
    verify_cmd->add_option("--emit-witness", witness_path, "write the verified witness chain to this path");
    bool shallow = false;
    verify_cmd->add_flag("--no-deep", shallow, "skip the independent mod-p route");
    long long sabotage_lambda = -1;
    verify_cmd->add_option("--sabotage-lambda", sabotage_lambda,
                           "fault injection: corrupt the folding label of this vertex")
        ->group("");

    auto* hom_cmd = app.add_subcommand("homology", "print homology groups of a complex file");
    std::string complex_path;
    hom_cmd->add_option("--complex", complex_path, "complex file")->required();
    int degree = -1;
    hom_cmd->add_option("--degree", degree, "single degree (default: all)");
    std::uint32_t mod_p = 0;
    hom_cmd->add_option("--mod", mod_p, "coefficients Z/p");
    bool rational = false;
    hom_cmd->add_flag("--rational", rational, "rational coefficients");
    add_common(hom_cmd, false);

    auto* racg_cmd = app.add_subcommand("racg", "normal forms and characters for words read from stdin");
    std::string graph_path;
    racg_cmd->add_option("--graph", graph_path, "complex file; its 1-skeleton defines the group")->required();
    bool with_character = false;
    racg_cmd->add_flag("--character", with_character,
                       "evaluate the dimension-folding character (needs provenance in the file)");

    auto* export_cmd = app.add_subcommand("export", "export boundary matrices in coordinate text format");
    std::string export_bundle, export_complex;
    export_cmd->add_option("--bundle", export_bundle, "bundle file");
    export_cmd->add_option("--complex", export_complex, "complex file");
    int export_degree = 1;
    export_cmd->add_option("--degree", export_degree, "boundary degree to export");
    bool export_cover = false;
    export_cmd->add_flag("--small-cover", export_cover,
                         "write the small cover of the bundle complex (annotated complex format)");
    export_cmd->add_option("--out", out_path, "output path")->required();
    add_common(export_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build_cmd->parsed()) {
            InstanceBundle b = load_instance(instance, n, k, bundle_path, max_cells);
            write_bundle_file(out_path, b);
            std::cout << "wrote " << out_path << " (" << b.provenance << ", cells " << b.L.total_cells() << ")\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            InstanceBundle b = load_instance(instance, n, k, bundle_path, max_cells);
            VerifyOptions opts;
            opts.seed = seed;
            opts.max_cells = max_cells;
            opts.deep = !shallow;
            opts.witness_path = witness_path;
            opts.sabotage_label_vertex = sabotage_lambda;
            VerificationReport rep = verify_bundle(b, opts);
            std::string body = json ? rep.to_json() : rep.to_text();
            std::cout << body;
            if (!out_path.empty()) {
                std::ofstream os(out_path);
                os << rep.to_json();
            }
            return rep.ok() ? 0 : 1;
        }
        if (hom_cmd->parsed()) {
            DeltaComplex x = read_complex_file(complex_path);
            Coefficients coeff = Coefficients::Z();
            std::string suffix;
            if (mod_p) {
                coeff = Coefficients::mod(mod_p);
                suffix = ".z" + std::to_string(mod_p);
            } else if (rational) {
                coeff = Coefficients::Q();
                suffix = ".q";
            }
            ResultCache cache(cache_dir);
            std::string fp = cache_dir.empty() ? "" : content_fingerprint(x);
            int lo = degree >= 0 ? degree : 0;
            int hi = degree >= 0 ? degree : x.dimension();
            for (int d = lo; d <= hi; ++d) {
                std::string key = fp + ".h" + std::to_string(d) + suffix;
                std::string value;
                if (!cache_dir.empty()) {
                    if (auto hit = cache.get(key)) value = *hit;
                }
                if (value.empty()) {
                    auto h = homology(x, d, coeff, {false, false});
                    value = h.to_string();
                    if (!cache_dir.empty()) cache.put(key, value);
                }
                std::cout << "H" << d << " = " << value << "\n";
            }
            return 0;
        }
        if (racg_cmd->parsed()) {
            DeltaComplex x = read_complex_file(graph_path);
            auto group = racg_from_skeleton(x);
            std::vector<std::string> names;
            for (long long v = 0; v < group.n_generators; ++v) names.push_back(std::to_string(v));
            Character chi;
            if (with_character) {
                if (!x.has_provenance()) throw std::runtime_error("--character needs provenance in the complex file");
                chi.rank = x.dimension() + 1;
                chi.images.resize(static_cast<std::size_t>(x.cell_count(0)));
                for (long long v = 0; v < x.cell_count(0); ++v) {
                    int cd = x.provenance(v).carrier_dim;
                    chi.images[static_cast<std::size_t>(v)] = 1u << cd;
                }
            }
            std::string line;
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                Word w = parse_word(line, names);
                Word nf = normal_form(group, w);
                std::cout << "nf: " << (nf.empty() ? "(identity)" : word_to_string(nf, names))
                          << "  length=" << nf.size() << "  parity=" << (is_even(group, w) ? "even" : "odd");
                if (with_character) std::cout << "  character=" << chi.apply(w);
                std::cout << "\n";
            }
            return 0;
        }
        if (export_cmd->parsed()) {
            DeltaComplex x;
            if (!export_bundle.empty()) {
                x = read_bundle_file(export_bundle).L;
            } else if (!export_complex.empty()) {
                x = read_complex_file(export_complex);
            } else {
                throw std::runtime_error("export needs --bundle or --complex");
            }
            std::ofstream os(out_path);
            if (!os) throw std::runtime_error("cannot open for writing: " + out_path);
            if (export_cover) {
                Subdivision sub = subdivide(x);
                long long est = 6 * (1ll << (x.dimension() + 1)) * sub.result().total_cells();
                if (est > max_cells)
                    throw std::runtime_error("estimated cover size " + std::to_string(est) +
                                             " exceeds the cap; raise --max-cells to force");
                auto lambda = folding_characteristic(sub.result(), x.dimension() + 1);
                SmallCover cover(sub.result(), lambda);
                write_small_cover(os, cover);
                std::cout << "wrote " << out_path << " (" << cover.total_cells() << " cover cells)\n";
            } else {
                SparseIntMatrix m = boundary_matrix(x, export_degree);
                write_matrix_market(os, m);
                std::cout << "wrote " << out_path << " (" << m.rows << "x" << m.cols << ", " << m.nnz()
                          << " entries)\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
