// Command line surface for the block/depth graded Lie algebra toolkit.
// Exit codes: 0 success or verified, 1 mathematical failure, 2 usage or
// parse error. All numeric output is exact rationals; no floating point.

#include "blocklie/bk_series.hpp"
#include "blocklie/block_algebra.hpp"
#include "blocklie/cache.hpp"
#include "blocklie/depth_algebra.hpp"
#include "blocklie/relations.hpp"
#include "blocklie/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct Config {
    int weight_max = 40;
    int degree_max = 6;
    std::string cache_dir;
    std::string format = "text";
    int jobs = 1;
};

bool check_cutoffs(const Config& cfg, int weight, int degree, std::string& error) {
    if (weight < 0 || weight > cfg.weight_max || degree < 0 || degree > cfg.degree_max) {
        std::ostringstream os;
        os << "requested cutoff (weight " << weight << ", degree " << degree
           << ") exceeds configured bounds (weight_max " << cfg.weight_max << ", degree_max "
           << cfg.degree_max << ")";
        error = os.str();
        return false;
    }
    return true;
}

int cmd_bracket(const Config& cfg, const std::string& algebra, const std::string& word_text) {
    blocklie::BracketWord w = blocklie::parse_bracket_word(word_text);
    std::string error;
    if (!check_cutoffs(cfg, w.weight(), w.lie_degree(), error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    blocklie::Poly p = blocklie::eval_bracket_word(w, blocklie::parse_algebra(algebra));
    if (cfg.format == "json") {
        nlohmann::json j;
        j["schema"] = "blocklie-bracket-v1";
        j["word"] = w.to_string();
        j["algebra"] = algebra;
        j["poly"] = nlohmann::json::parse(p.to_json());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
    return kExitOk;
}

int emit_certificate(const Config& cfg, const blocklie::RelationCertificate& cert,
                     const std::string& output_path) {
    std::string text = cert.to_json();
    if (!output_path.empty()) {
        std::ofstream out(output_path, std::ios::trunc);
        out << text << "\n";
    }
    if (cfg.format == "text") {
        std::cout << (cert.verified ? "verified" : cert.status) << " (weight " << cert.weight
                  << ", lie degree " << cert.lie_degree << ", scale "
                  << blocklie::rat_to_string(cert.scale) << ", " << cert.bracket_words.size()
                  << " bracket words)\n";
    } else {
        std::cout << text << "\n";
    }
    return cert.verified ? kExitOk : kExitMathFailure;
}

int cmd_verify(const Config& cfg, const std::string& relation_path, const std::string& output_path) {
    std::ifstream in(relation_path);
    if (!in) {
        std::cerr << "error: cannot open relation file " << relation_path << "\n";
        return kExitUsage;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    blocklie::RelationInput input = blocklie::parse_relation_json(text);
    std::string error;
    if (!check_cutoffs(cfg, input.weight, input.lie_degree, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    auto cert = blocklie::verify_relation(input.block_side, input.depth_side, input.lie_degree,
                                          input.weight);
    return emit_certificate(cfg, cert, output_path);
}

int cmd_corollary262(const Config& cfg, int n, int a, const std::string& output_path) {
    std::string error;
    if (!check_cutoffs(cfg, 2 * n + 6, 4, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    return emit_certificate(cfg, blocklie::corollary_262(n, a), output_path);
}

int cmd_table(const Config& cfg, const std::string& kind, const std::string& algebra, int smax,
              int tmax) {
    // series tables default to the wide truncation box, the rank
    // comparison to the evidence cutoff (weight 33, Lie degree 3)
    if (smax < 0) smax = (kind == "compare") ? 33 : 34;
    if (tmax < 0) tmax = (kind == "compare") ? 3 : 5;
    std::string error;
    if (!check_cutoffs(cfg, smax, tmax, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    if (kind == "uneven-bk") {
        std::cout << blocklie::table_to_csv(blocklie::uneven_bk_table(smax, tmax));
        return kExitOk;
    }
    if (kind == "lie-dims") {
        auto dims = blocklie::lie_dimensions_from_table(blocklie::uneven_bk_table(smax, tmax));
        std::cout << "N";
        for (int t = 0; t <= tmax; ++t) std::cout << ",t" << t;
        std::cout << "\n";
        for (int n = 0; n <= smax; ++n) {
            std::cout << n;
            for (int t = 0; t <= tmax; ++t) std::cout << "," << dims[n][t].get_str();
            std::cout << "\n";
        }
        return kExitOk;
    }
    if (kind == "compare") {
        blocklie::ComponentCache cache(cfg.cache_dir);
        auto cmp = blocklie::compare_dimensions(blocklie::parse_algebra(algebra), smax, tmax,
                                                &cache, cfg.jobs);
        std::cout << cmp.to_csv();
        return cmp.all_match() ? kExitOk : kExitMathFailure;
    }
    std::cerr << "error: unknown table kind \"" << kind << "\" (expected uneven-bk, lie-dims or compare)\n";
    return kExitUsage;
}

int cmd_dict(const Config& cfg, const std::string& zeta_text) {
    blocklie::ZetaIndex z = blocklie::parse_zeta(zeta_text);
    if (!z.totally_odd() || z.leading != 0) {
        std::cerr << "error: dictionary input must be a totally odd zeta index, got " << zeta_text
                  << "\n";
        return kExitUsage;
    }
    auto image = blocklie::odd_to_hoffman(z);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["schema"] = "blocklie-dictionary-v1";
        j["input"] = blocklie::to_text(z);
        j["scale"] = blocklie::rat_to_string(image.scale);
        j["target"] = blocklie::to_text(image.target);
        j["reduced"] = image.reduced;
        if (!image.reduced) j["note"] = image.note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << blocklie::rat_to_string(image.scale) << " * " << blocklie::to_text(image.target);
        if (!image.reduced) std::cout << "   [unreduced: " << image.note << "]";
        std::cout << "\n";
    }
    return image.reduced ? kExitOk : kExitMathFailure;
}

int cmd_span(const Config& cfg, const std::string& algebra, int weight, int degree) {
    std::string error;
    if (!check_cutoffs(cfg, weight, degree, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    blocklie::ComponentCache cache(cfg.cache_dir);
    auto component = cache.get(blocklie::parse_algebra(algebra), weight, degree);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["schema"] = "blocklie-span-v1";
        j["algebra"] = algebra;
        j["weight"] = weight;
        j["degree"] = degree;
        j["rank"] = blocklie::rank(component.matrix);
        j["words"] = nlohmann::json::array();
        for (size_t i = 0; i < component.words.size(); ++i) {
            j["words"].push_back({{"word", component.words[i].to_string()},
                                  {"poly", nlohmann::json::parse(component.polys[i].to_json())}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < component.words.size(); ++i)
            std::cout << component.words[i].to_string() << "  ->  "
                      << component.polys[i].to_string() << "\n";
        std::cout << "rank " << blocklie::rank(component.matrix) << " ("
                  << component.words.size() << " spanning words)\n";
    }
    return kExitOk;
}

int cmd_synthesize(const Config& cfg, const std::string& relation_path,
                   const std::string& output_path) {
    std::ifstream in(relation_path);
    if (!in) {
        std::cerr << "error: cannot open relation file " << relation_path << "\n";
        return kExitUsage;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    blocklie::RelationInput input = blocklie::parse_relation_json(text);
    std::string error;
    if (!check_cutoffs(cfg, input.weight, input.lie_degree, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    auto result = blocklie::synthesize_depth_side(input.block_side, input.lie_degree, input.weight);
    if (cfg.format == "text") {
        std::cout << "depth side:";
        for (const auto& [c, z] : result.depth_side)
            std::cout << " (" << blocklie::rat_to_string(c) << ")*" << blocklie::to_text(z);
        if (result.depth_side.empty()) std::cout << " 0";
        std::cout << "\n";
    }
    return emit_certificate(cfg, result.certificate, output_path);
}

int cmd_regression(const Config& cfg) {
    (void)cfg;
    auto report = blocklie::regression_suite();
    for (const auto& item : report.items)
        std::cout << (item.pass ? "PASS " : "FAIL ") << item.name
                  << (item.pass ? "" : "  [" + item.detail + "]") << "\n";
    return report.all_pass() ? kExitOk : kExitMathFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the block and depth graded Lie algebras of motivic multiple zeta values"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("BLOCKLIE_CACHE_DIR")) cfg.cache_dir = env;
    app.add_option("--wmax", cfg.weight_max, "largest permitted weight cutoff");
    app.add_option("--rmax", cfg.degree_max, "largest permitted Lie degree cutoff");
    app.add_option("--cache-dir", cfg.cache_dir, "component cache directory (env BLOCKLIE_CACHE_DIR)");
    app.add_option("--format", cfg.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", cfg.jobs, "parallelism hint for independent (weight, degree) cells")
        ->check(CLI::PositiveNumber);

    std::string algebra = "depth", word_text, relation_path, output_path, kind = "uneven-bk",
                zeta_text;
    int n = 1, a = 0, smax = -1, tmax = -1, weight = 12, degree = 2;

    auto* bracket = app.add_subcommand("bracket", "evaluate a bracket word to its polynomial");
    bracket->add_option("--algebra", algebra, "depth, block or even")->required();
    bracket->add_option("word", word_text, "bracket word, e.g. \"[3,[5,7]]\"")->required();

    auto* verify = app.add_subcommand("verify", "verify a relation file, emit a certificate");
    verify->add_option("file", relation_path, "relation JSON file")->required();
    verify->add_option("--output", output_path, "write the certificate JSON here");

    auto* cor = app.add_subcommand("corollary262", "verify the (2,6,2) corollary instance");
    cor->add_option("--n", n)->required();
    cor->add_option("--a", a)->required();
    cor->add_option("--output", output_path, "write the certificate JSON here");

    auto* table = app.add_subcommand("table", "dimension and prediction tables (CSV)");
    table->add_option("--kind", kind, "uneven-bk, lie-dims or compare");
    table->add_option("--algebra", algebra, "algebra for --kind compare");
    table->add_option("--smax", smax, "weight truncation (default 34, compare 33)");
    table->add_option("--tmax", tmax, "degree truncation (default 5, compare 3)");

    auto* dict = app.add_subcommand("dict", "totally odd -> almost-Hoffman dictionary entry");
    dict->add_option("zeta", zeta_text, "totally odd zeta index, e.g. \"z:{3,5}\"")->required();

    auto* span = app.add_subcommand("span", "enumerate a graded component's spanning words");
    span->add_option("--algebra", algebra, "depth, block or even")->required();
    span->add_option("--weight", weight)->required();
    span->add_option("--degree", degree)->required();

    auto* synth = app.add_subcommand("synthesize",
                                     "solve for a totally odd depth side matching a block side");
    synth->add_option("file", relation_path, "relation JSON file (depth side ignored)")->required();
    synth->add_option("--output", output_path, "write the certificate JSON here");

    app.add_subcommand("regression", "run the fixed corpus of known relations");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bracket->parsed()) return cmd_bracket(cfg, algebra, word_text);
        if (verify->parsed()) return cmd_verify(cfg, relation_path, output_path);
        if (cor->parsed()) return cmd_corollary262(cfg, n, a, output_path);
        if (table->parsed()) return cmd_table(cfg, kind, algebra, smax, tmax);
        if (dict->parsed()) return cmd_dict(cfg, zeta_text);
        if (span->parsed()) return cmd_span(cfg, algebra, weight, degree);
        if (synth->parsed()) return cmd_synthesize(cfg, relation_path, output_path);
        return cmd_regression(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
}
