// Command-line harness: run schemes on dataset files, verify them against the
// brute-force retraining oracle, verify the Sperner construction, and measure
// aux/ticket sizes.
//
// Exit codes: 0 ok, 1 check failed / runtime error, 2 usage.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "ul/dataset_io.hpp"
#include "ul/enumerate.hpp"
#include "ul/mergeable.hpp"
#include "ul/scheme_api.hpp"
#include "ul/sperner.hpp"

using namespace ul;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

ConceptClass default_class(const std::string& scheme, u32 domain) {
    if (scheme.find("prodthresh") != std::string::npos)
        return ConceptClass::product_thresholds(2, 3);
    if (scheme.find("parities") != std::string::npos) return ConceptClass::parities(2);
    if (scheme == "sharp:point" || scheme == "central:augpoint" ||
        scheme == "central:noreppoint")
        return ConceptClass::point_functions(domain);
    return ConceptClass::thresholds(domain);
}

Dataset survivors(const Dataset& S, u32 mask) {
    Dataset out;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (!((mask >> i) & 1)) out.push_back(S[i]);
    return out;
}

std::vector<UnlearnItem> request(const Dataset& S, const LearnOutput& out, u32 mask) {
    std::vector<UnlearnItem> req;
    for (std::size_t i = 0; i < S.size(); ++i)
        if ((mask >> i) & 1) req.push_back({static_cast<u32>(i), S[i], out.tickets[i]});
    return req;
}

int cmd_learn(const std::string& scheme, const std::string& dataset_path,
              const std::string& out_dir) {
    auto parsed = read_dataset_file(dataset_path);
    SchemeSpec spec{scheme, parsed.cls};
    LearnOutput out = run_learn(spec, parsed.items);

    fs::create_directories(out_dir);
    {
        std::ofstream f(fs::path(out_dir) / "dataset.txt");
        write_dataset(f, parsed.cls, parsed.items);
    }
    {
        std::ofstream f(fs::path(out_dir) / "hypothesis.txt");
        f << out.result.describe() << "\n";
    }
    write_blob_file((fs::path(out_dir) / "aux.bin").string(), out.aux);
    for (std::size_t i = 0; i < out.tickets.size(); ++i)
        write_blob_file((fs::path(out_dir) / ("ticket_" + std::to_string(i) + ".bin")).string(),
                        out.tickets[i]);

    json manifest = {{"scheme", scheme},
                     {"class", class_header(parsed.cls)},
                     {"n", parsed.items.size()},
                     {"aux_bits", out.aux.nbits},
                     {"max_ticket_bits", out.max_ticket_bits()},
                     {"unlearn_used", false}};
    std::ofstream mf(fs::path(out_dir) / "manifest.json");
    mf << manifest.dump(2) << "\n";

    std::cout << "learned " << scheme << " on " << parsed.items.size() << " items -> "
              << out.result.describe() << " (aux " << out.aux.nbits << " bits, max ticket "
              << out.max_ticket_bits() << " bits)\n";
    return 0;
}

int cmd_unlearn(const std::string& out_dir, const std::vector<u32>& indices) {
    const fs::path dir(out_dir);
    json manifest;
    {
        std::ifstream mf(dir / "manifest.json");
        if (!mf) throw std::runtime_error("missing manifest; run learn first");
        mf >> manifest;
    }
    if (manifest.at("unlearn_used").get<bool>())
        throw std::runtime_error("unlearn already performed for this learn output");

    auto parsed = read_dataset_file((dir / "dataset.txt").string());
    SchemeSpec spec{manifest.at("scheme").get<std::string>(), parsed.cls};
    const u32 n = manifest.at("n").get<u32>();
    Blob aux = read_blob_file((dir / "aux.bin").string());

    std::vector<UnlearnItem> req;
    for (u32 i : indices) {
        if (i >= n) throw std::runtime_error("deletion index out of range");
        Blob t = read_blob_file((dir / ("ticket_" + std::to_string(i) + ".bin")).string());
        req.push_back({i, parsed.items[i], t});
    }
    SchemeResult got = run_unlearn(spec, n, aux, req);
    {
        std::ofstream f(dir / "result.txt");
        f << got.describe() << "\n";
    }
    manifest["unlearn_used"] = true;
    std::ofstream mf(dir / "manifest.json");
    mf << manifest.dump(2) << "\n";
    std::cout << "unlearned " << indices.size() << " items -> " << got.describe() << "\n";
    return 0;
}

int cmd_oracle_check(const std::string& scheme, u32 domain, u32 max_n, u64 seed) {
    SchemeSpec spec{scheme, default_class(scheme, domain)};
    long bad = 0, cases = 0;

    auto check = [&](const Dataset& S) {
        LearnOutput out;
        try {
            out = run_learn(spec, S);
        } catch (const std::exception&) {
            return;  // outside the scheme's regime
        }
        const u32 n = static_cast<u32>(S.size());
        for (u32 mask = 0; mask < (u32(1) << n); ++mask) {
            ++cases;
            SchemeResult want = run_learn(spec, survivors(S, mask)).result;
            SchemeResult got = run_unlearn(spec, n, out.aux, request(S, out, mask));
            if (!(got == want)) {
                ++bad;
                if (bad <= 10)
                    std::cout << "mismatch: n=" << n << " mask=" << mask << " got "
                              << got.describe() << " want " << want.describe() << "\n";
            }
        }
    };

    u64 total = 0;
    for (u32 n = 0; n <= max_n; ++n)
        total += multiset_count(flat_item_count(spec.cls), n) << n;
    if (total <= 1000000) {
        for (u32 n = 0; n <= max_n; ++n) for_each_multiset(spec.cls, n, check);
        std::cout << "exhaustive: ";
    } else {
        std::mt19937_64 rng(seed);
        for (int rep = 0; rep < 2000; ++rep) {
            const u32 n = 1 + static_cast<u32>(rng() % max_n);
            check(random_dataset_for(scheme, spec.cls, n, rng));
        }
        std::cout << "sampled (seed " << seed << "): ";
    }
    std::cout << cases << " cases, " << bad << " mismatches\n";
    return bad == 0 ? 0 : 1;
}

int cmd_sperner_verify(u64 max_m, const std::string& out_path) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        os = &file;
    }
    long bad = 0;
    std::set<SpernerSymbol> alpha;
    *os << "m,alphabet_used\n";
    for (u64 m = 1; m <= max_m; ++m) {
        auto f = global_family(m);
        if (multiset_size(f) != m) ++bad;
        for (const auto& [s, c] : f) alpha.insert(s);
        *os << m << "," << alpha.size() << "\n";
    }
    std::vector<SpernerMultiset> fams;
    for (u64 m = 1; m <= std::min<u64>(max_m, 400); ++m) fams.push_back(global_family(m));
    if (!verify_sperner(fams)) ++bad;
    for (auto [r, t] : std::vector<std::pair<u32, u64>>{{1, 1}, {1, 2}, {1, 4}, {2, 2}}) {
        const u64 lo = *ack(r, t, u64(1) << 40);
        const u64 hi = *ack(r, lo, u64(1) << 40);
        std::vector<SpernerMultiset> fam;
        for (u64 m = lo; m <= hi; ++m) fam.push_back(family_segment(r, t, m));
        if (!verify_sperner(fam)) ++bad;
    }
    std::cout << "sperner: max m " << max_m << ", alphabet " << alpha.size() << ", "
              << (bad ? "FAIL" : "ok") << "\n";
    return bad == 0 ? 0 : 1;
}

int cmd_bench(const std::vector<std::string>& schemes, u32 max_n, u64 seed,
              const std::string& out_path) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        os = &file;
    }
    long bad = 0;
    std::mt19937_64 rng(seed);
    *os << "scheme,class,n,aux_bits,max_ticket_bits,wall_ms\n";
    for (const auto& scheme : schemes) {
        if (!known_scheme(scheme)) {
            std::cerr << "unknown scheme: " << scheme << "\n";
            return 1;
        }
        ConceptClass cls = default_class(scheme, 6);
        SchemeSpec spec{scheme, cls};
        for (u32 n = 8; n <= max_n; n *= 2) {
            Dataset S = random_dataset_for(scheme, cls, n, rng);
            const auto t0 = std::chrono::steady_clock::now();
            LearnOutput out = run_learn(spec, S);
            const auto t1 = std::chrono::steady_clock::now();
            const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            *os << scheme << "," << class_header(cls) << "," << n << "," << out.aux_bits()
                << "," << out.max_ticket_bits() << "," << ms << "\n";

            // Closed-form size checks for the schemes with exact shapes.
            if (scheme == "tree:thresholds") {
                const unsigned k = bit_width_for(n);  // n is a power of two here
                if (out.max_ticket_bits() != k * (1 + encoded_bits(cls))) ++bad;
            } else if (scheme.rfind("chain:", 0) == 0) {
                if (out.max_ticket_bits() >
                    2 * compression_bound(cls) * example_bits(cls) + bit_width_for(u64(n) + 1))
                    ++bad;
            } else if (scheme == "ctz" || scheme == "sharp:thresholds") {
                if (out.max_ticket_bits() > 16) ++bad;
            } else if (scheme == "central:thresholds") {
                if (out.aux_bits() >
                    bit_width_for(u64(cls.domain_size)) * (1 + bit_width_for(u64(n) + 1)))
                    ++bad;
            }
        }
    }
    if (bad) {
        std::cerr << "bench: " << bad << " size-bound violations\n";
        return 1;
    }
    return 0;
}

int cmd_demo() {
    auto cls = ConceptClass::thresholds(6);
    Dataset S{{{2}, 0}, {{4}, 0}, {{5}, 1}, {{6}, 1}};
    for (const std::string id : {"tree:thresholds", "chain:thresholds", "sharp:thresholds",
                                 "central:thresholds"}) {
        SchemeSpec spec{id, cls};
        SchemeSession sess(spec, S);
        std::cout << id << ": learn -> " << sess.learned().result.describe() << " (aux "
                  << sess.learned().aux_bits() << " bits, max ticket "
                  << sess.learned().max_ticket_bits() << " bits)";
        std::cout << "; delete items 1,2 -> " << sess.unlearn({1, 2}).describe() << "\n";
    }
    SchemeSpec ctz{"ctz", cls};
    SchemeSession sess(ctz, S);
    std::cout << "ctz: learn -> " << sess.learned().result.describe() << "; delete all -> "
              << sess.unlearn({0, 1, 2, 3}).describe() << "\n";
    std::vector<SpernerMultiset> fams;
    for (u64 m = 1; m <= 64; ++m) fams.push_back(global_family(m));
    std::cout << "sperner m<=64: " << (verify_sperner(fams) ? "ok" : "FAIL") << "\n";
    return verify_sperner(fams) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ticketed learning-unlearning schemes"};
    app.require_subcommand(1);

    std::string scheme, dataset_path, out_dir, out_path;
    std::vector<u32> indices;
    std::vector<std::string> bench_schemes{"tree:thresholds", "chain:thresholds",
                                           "sharp:thresholds", "central:thresholds", "ctz"};
    u32 domain = 6, max_n = 3;
    u64 seed = 20240811, max_m = 300;

    auto* learn = app.add_subcommand("learn", "train a scheme on a dataset file");
    learn->add_option("--scheme", scheme, "scheme id")->required();
    learn->add_option("dataset", dataset_path, "dataset file")->required();
    learn->add_option("--out", out_dir, "output directory")->required();

    auto* unlearn = app.add_subcommand("unlearn", "delete items from a prior learn output");
    unlearn->add_option("--out", out_dir, "directory written by learn")->required();
    unlearn->add_option("indices", indices, "item indices to delete");

    auto* oracle = app.add_subcommand("oracle-check", "compare unlearn against retraining");
    oracle->add_option("--scheme", scheme, "scheme id")->required();
    oracle->add_option("--domain", domain, "domain size");
    oracle->add_option("--max-n", max_n, "largest dataset size");
    oracle->add_option("--seed", seed, "sampling seed");

    auto* sperner = app.add_subcommand("sperner-verify", "verify the deletion-token families");
    sperner->add_option("--max-m", max_m, "largest family size");
    sperner->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "measure aux/ticket sizes over an n sweep");
    bench->add_option("--scheme", bench_schemes, "scheme ids");
    bench->add_option("--max-n", max_n, "largest n in the sweep")->default_val(1024u);
    bench->add_option("--seed", seed, "dataset seed");
    bench->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* demo = app.add_subcommand("demo", "small canned run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (learn->parsed()) return cmd_learn(scheme, dataset_path, out_dir);
        if (unlearn->parsed()) return cmd_unlearn(out_dir, indices);
        if (oracle->parsed()) return cmd_oracle_check(scheme, domain, max_n, seed);
        if (sperner->parsed()) return cmd_sperner_verify(max_m, out_path);
        if (bench->parsed()) return cmd_bench(bench_schemes, max_n, seed, out_path);
        if (demo->parsed()) return cmd_demo();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
