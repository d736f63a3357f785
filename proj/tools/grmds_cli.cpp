#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grmds/io.hpp"

namespace {

using namespace grmds;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

void print_indices(const std::vector<std::size_t>& v) {
    std::cout << "{";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
    std::cout << "}";
}

int run_ring_info(const std::string& ring_path) {
    GRContextPtr ctx = ring_from_json(parse_document(ring_path));
    std::cout << "p = " << ctx->p() << "\n";
    std::cout << "s = " << ctx->s() << "\n";
    std::cout << "m = " << ctx->m() << "\n";
    std::cout << "modulus = " << to_string(ctx->modulus()) << "\n";
    std::cout << "|U| = " << ctx->unit_count() << "\n";
    std::cout << "|N| = " << ctx->nilpotent_count() << "\n";
    std::cout << "xi = " << ctx->xi().str() << "\n";
    std::cout << "o(xi) = " << ctx->xi().order() << "\n";
    std::cout << "tau size = " << ctx->teichmuller_set().size() << "\n";
    return kExitTrue;
}

int run_cauchy(const std::string& ring_path, const std::string& spec_path,
               const std::string& out_path) {
    GRContextPtr ctx = ring_from_json(parse_document(ring_path));
    CauchySpec spec = cauchy_spec_from_json(parse_document(spec_path), ctx);
    GRMatrix a = build_cauchy(spec, ctx);
    emit_document(matrix_to_json(a), out_path);
    std::cout << "wrote " << a.order() << "x" << a.order() << " matrix to " << out_path << "\n";
    return kExitTrue;
}

int run_verify(const std::string& in_path, const std::string& method) {
    GRMatrix a = matrix_from_json(parse_document(in_path));
    bool verdict;
    std::string how;
    if (method == "exhaustive") {
        verdict = mat_is_mds_exhaustive(a);
        how = "exhaustive";
    } else if (method == "fast") {
        MdsVerdict v = mat_is_mds_fast(a);
        verdict = v.is_mds;
        how = v.method == MdsMethod::FieldReduction ? "field_reduction" : "exhaustive_fallback";
    } else {  // both
        MdsVerdict v = mat_is_mds_fast(a);
        bool ex = mat_is_mds_exhaustive(a);
        if (v.is_mds != ex) {
            std::cerr << "error: fast and exhaustive verdicts disagree\n";
            return kExitInvalid;
        }
        verdict = ex;
        how = std::string("both (fast via ") +
              (v.method == MdsMethod::FieldReduction ? "field_reduction" : "exhaustive_fallback") +
              ")";
    }
    std::cout << "mds = " << (verdict ? "true" : "false") << " (method: " << how << ")\n";
    if (!verdict) {
        if (auto minor = find_singular_minor(a)) {
            std::cout << "singular minor rows = ";
            print_indices(minor->rows);
            std::cout << ", cols = ";
            print_indices(minor->cols);
            std::cout << "\n";
        }
        return kExitFalse;
    }
    return kExitTrue;
}

int run_morph(const std::string& in_path, const std::string& morph_path,
              const std::string& out_path) {
    GRMatrix a = matrix_from_json(parse_document(in_path));
    MorphismSpec f = morphism_from_json(parse_document(morph_path), a.ring());
    GRMatrix b = apply_morphism_to_matrix(f, a);
    emit_document(matrix_to_json(b), out_path);
    std::cout << "wrote image matrix to " << out_path << "\n";
    return kExitTrue;
}

int run_enumerate(const std::string& in_path, const std::string& out_path) {
    GRMatrix a = matrix_from_json(parse_document(in_path));
    ScaledFamily fam = enumerate_scaled_automorphisms(a.ring());
    json images = json::array();
    for (const auto& f : fam.morphisms)
        images.push_back(matrix_to_json(apply_morphism_to_matrix(f, a)));
    json out;
    out["raw_count"] = fam.raw_count;
    out["deduplicated_count"] = fam.deduplicated_count;
    out["family_size"] = fam.morphisms.size();
    out["images"] = std::move(images);
    emit_document(out, out_path);
    std::cout << "family size = " << fam.morphisms.size() << " (raw " << fam.raw_count
              << ", deduplicated " << fam.deduplicated_count << ")\n";
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cauchy MDS matrices over Galois rings"};
    app.require_subcommand(1);

    std::string ring_path, spec_path, in_path, morph_path, out_path;
    std::string method = "fast";

    auto* info = app.add_subcommand("ring-info", "Print ring parameters");
    info->add_option("--ring", ring_path, "ring document")->required();

    auto* cauchy = app.add_subcommand("cauchy", "Construct a Cauchy matrix");
    cauchy->add_option("--ring", ring_path, "ring document")->required();
    cauchy->add_option("--spec", spec_path, "construction document")->required();
    cauchy->add_option("--out", out_path, "output matrix document")->required();

    auto* verify = app.add_subcommand("verify", "Check the MDS property");
    verify->add_option("--in", in_path, "matrix document")->required();
    verify->add_option("--method", method, "fast | exhaustive | both")
        ->check(CLI::IsMember({"fast", "exhaustive", "both"}));

    auto* morph = app.add_subcommand("morph", "Apply a morphism to a matrix");
    morph->add_option("--in", in_path, "matrix document")->required();
    morph->add_option("--morphism", morph_path, "morphism document")->required();
    morph->add_option("--out", out_path, "output matrix document")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Images under scaled automorphisms");
    enumerate->add_option("--in", in_path, "seed matrix document")->required();
    enumerate->add_option("--out", out_path, "output family document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitTrue : kExitIo;
    }

    try {
        if (info->parsed()) return run_ring_info(ring_path);
        if (cauchy->parsed()) return run_cauchy(ring_path, spec_path, out_path);
        if (verify->parsed()) return run_verify(in_path, method);
        if (morph->parsed()) return run_morph(in_path, morph_path, out_path);
        if (enumerate->parsed()) return run_enumerate(in_path, out_path);
    } catch (const grmds::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const grmds::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitIo;
}
