// Command-line front end: build/query/verify/bench/stats/parse/gen.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
// format error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hybrid/corpus.hpp"
#include "hybrid/hybrid_index.hpp"
#include "hybrid/lz77.hpp"

namespace {

using namespace hybrid;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw Error("cannot read " + path);
    std::string s = ss.str();
    return Bytes(s.begin(), s.end());
}

void write_file(const std::string& path, const Bytes& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
    if (!out.good()) throw Error("cannot write " + path);
}

std::string basename_of(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

void print_stats(const HybridIndex& hx) {
    StatsReport rep = hx.stats();
    std::printf("n            %llu\n", (unsigned long long)rep.n);
    std::printf("z            %llu\n", (unsigned long long)rep.z);
    std::printf("kernel       %llu bytes (%.4f of n)\n", (unsigned long long)rep.kernel_size,
                rep.kernel_ratio);
    std::printf("grid points  %llu\n", (unsigned long long)rep.grid_points);
    for (const SectionStat& s : rep.sections)
        std::printf("section %-12s %llu bytes\n", s.name.c_str(), (unsigned long long)s.bytes);
    std::printf("total        %llu bytes\n", (unsigned long long)rep.total_bytes);
}

int cmd_build(const std::string& input, const std::string& output, BuildParams params) {
    Bytes text = read_file(input);
    HybridIndex hx = HybridIndex::build(text, params);
    write_file(output, hx.serialize());
    print_stats(hx);
    return 0;
}

int cmd_query(const std::string& index_path, const std::vector<std::string>& patterns,
              const std::string& patterns_file, std::uint32_t k) {
    HybridIndex hx = HybridIndex::deserialize(read_file(index_path));
    std::vector<Bytes> pats;
    for (const std::string& p : patterns) pats.push_back(to_bytes(p));
    if (!patterns_file.empty()) {
        std::ifstream in(patterns_file, std::ios::binary);
        if (!in) throw Error("cannot open " + patterns_file);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) pats.push_back(to_bytes(line));
    }
    if (pats.empty()) throw UsageError("no pattern given (use --pattern or --patterns-file)");
    for (const Bytes& p : pats) {
        if (p.size() > hx.m_limit())
            throw UsageError("pattern length " + std::to_string(p.size()) +
                             " exceeds index bound M=" + std::to_string(hx.m_limit()));
        if (k > hx.k_limit())
            throw UsageError("k=" + std::to_string(k) +
                             " exceeds index bound K=" + std::to_string(hx.k_limit()));
    }
    for (std::size_t id = 0; id < pats.size(); ++id) {
        QueryResult res = hx.query(pats[id], k);
        for (const Occurrence& occ : res.occurrences)
            std::printf("%zu\t%llu\t%llu\t%s\n", id + 1, (unsigned long long)occ.l,
                        (unsigned long long)occ.r,
                        occ.origin == Origin::Primary ? "primary" : "secondary");
    }
    return 0;
}

// Scan-based reference answers used by verify: plain search for k=0, the
// column DP over the whole text for k>0.
std::vector<std::pair<Pos, Pos>> scan_occurrences(const Bytes& text, const Bytes& pattern,
                                                  std::uint32_t k) {
    std::vector<std::pair<Pos, Pos>> out;
    if (k == 0) {
        auto it = text.begin();
        while (true) {
            it = std::search(it, text.end(), pattern.begin(), pattern.end());
            if (it == text.end()) break;
            Pos l = Pos(it - text.begin()) + 1;
            out.emplace_back(l, l + pattern.size() - 1);
            ++it;
        }
    } else {
        for (const KernelMatch& m : locate_approx(text, pattern, k)) out.emplace_back(m.i, m.j);
    }
    return out;
}

int cmd_verify(const std::string& index_path, const std::string& corpus_path,
               std::uint64_t samples, std::uint64_t seed) {
    HybridIndex hx = HybridIndex::deserialize(read_file(index_path));
    Bytes text = read_file(corpus_path);
    if (text.size() != hx.n()) {
        std::fprintf(stderr, "fail: corpus length %zu != indexed length %llu\n", text.size(),
                     (unsigned long long)hx.n());
        return 1;
    }
    if (samples == 0) {
        std::fprintf(stderr, "warning: 0 samples requested, vacuous pass\n");
        return 0;
    }
    std::vector<Pos> lengths;
    for (Pos len : {Pos(1), Pos(10), Pos(20), Pos(40), Pos(80)})
        if (len <= hx.m_limit() && len <= text.size()) lengths.push_back(len);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_len(0, lengths.size() - 1);
    std::uniform_int_distribution<std::uint32_t> pick_k(0, std::uint32_t(hx.k_limit()));
    std::uint64_t checked = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Pos len = lengths[pick_len(rng)];
        std::uniform_int_distribution<std::size_t> pick_pos(0, text.size() - len);
        std::size_t at = pick_pos(rng);
        Bytes pattern(text.begin() + at, text.begin() + at + len);
        std::uint32_t k = pick_k(rng);
        for (std::uint32_t e = 0; e < k; ++e) {  // up to k random edits
            std::uniform_int_distribution<int> op(0, 2);
            std::uniform_int_distribution<std::size_t> pos(0, pattern.size() - 1);
            std::uniform_int_distribution<int> ch(0, 255);
            int o = op(rng);
            if (o == 0) {
                pattern[pos(rng)] = Byte(ch(rng));
            } else if (o == 1 && pattern.size() < hx.m_limit()) {
                pattern.insert(pattern.begin() + std::ptrdiff_t(pos(rng)), Byte(ch(rng)));
            } else if (pattern.size() > 1) {
                pattern.erase(pattern.begin() + std::ptrdiff_t(pos(rng)));
            }
        }
        QueryResult res = hx.query(pattern, k);
        std::vector<std::pair<Pos, Pos>> got;
        got.reserve(res.occurrences.size());
        for (const Occurrence& occ : res.occurrences) got.emplace_back(occ.l, occ.r);
        std::vector<std::pair<Pos, Pos>> want = scan_occurrences(text, pattern, k);
        std::sort(want.begin(), want.end());
        if (got != want) {
            std::fprintf(stderr, "fail: sample %llu (m=%zu, k=%u): index %zu vs scan %zu\n",
                         (unsigned long long)s, pattern.size(), k, got.size(), want.size());
            for (auto& p : want)
                if (!std::binary_search(got.begin(), got.end(), p))
                    std::fprintf(stderr, "  missing (%llu,%llu)\n", (unsigned long long)p.first,
                                 (unsigned long long)p.second);
            for (auto& p : got)
                if (!std::binary_search(want.begin(), want.end(), p))
                    std::fprintf(stderr, "  spurious (%llu,%llu)\n", (unsigned long long)p.first,
                                 (unsigned long long)p.second);
            return 1;
        }
        ++checked;
    }
    std::printf("pass: %llu samples verified\n", (unsigned long long)checked);
    return 0;
}

int cmd_bench(const std::string& index_path, const std::string& corpus_path,
              const std::string& lengths_csv, std::uint64_t count, std::uint64_t seed,
              std::uint32_t k) {
    HybridIndex hx = HybridIndex::deserialize(read_file(index_path));
    Bytes text = read_file(corpus_path);
    std::uint64_t index_bytes = read_file(index_path).size();
    std::vector<Pos> lengths;
    {
        std::stringstream ss(lengths_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) lengths.push_back(Pos(std::stoull(item)));
    }
    if (lengths.empty()) throw UsageError("no lengths given");
    std::mt19937_64 rng(seed);
    std::printf("corpus,n,m,k,patterns,total_matches,mean_us,median_us,index_bytes\n");
    for (Pos len : lengths) {
        if (len > hx.m_limit() || len > text.size()) continue;
        std::uniform_int_distribution<std::size_t> pick_pos(0, text.size() - len);
        std::vector<Bytes> pats;
        while (pats.size() < count) {
            std::size_t at = pick_pos(rng);
            Bytes p(text.begin() + at, text.begin() + at + len);
            bool unary = std::all_of(p.begin(), p.end(), [&](Byte c) { return c == p[0]; });
            if (unary && len > 1) continue;  // non-unary sampling
            pats.push_back(std::move(p));
        }
        std::vector<double> micros;
        micros.reserve(pats.size());
        std::uint64_t total_matches = 0;
        for (const Bytes& p : pats) {
            auto t0 = std::chrono::steady_clock::now();
            QueryResult res = hx.query(p, k);
            auto t1 = std::chrono::steady_clock::now();
            micros.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
            total_matches += res.occurrences.size();
        }
        std::vector<double> sorted = micros;
        std::sort(sorted.begin(), sorted.end());
        double mean = std::accumulate(micros.begin(), micros.end(), 0.0) / double(micros.size());
        double median = sorted[sorted.size() / 2];
        std::printf("%s,%llu,%llu,%u,%zu,%llu,%.3f,%.3f,%llu\n",
                    basename_of(corpus_path).c_str(), (unsigned long long)hx.n(),
                    (unsigned long long)len, k, pats.size(), (unsigned long long)total_matches,
                    mean, median, (unsigned long long)index_bytes);
    }
    return 0;
}

int cmd_stats(const std::string& index_path) {
    HybridIndex hx = HybridIndex::deserialize(read_file(index_path));
    print_stats(hx);
    return 0;
}

int cmd_parse(const std::string& input) {
    Bytes text = read_file(input);
    Parse parse = hybrid::parse(text);
    std::ostringstream out;
    dump_parse(parse, out);
    std::fputs(out.str().c_str(), stdout);
    return 0;
}

int cmd_gen(const std::string& output, std::uint64_t base_size, std::uint64_t copies,
            double rate, std::uint64_t seed, const std::string& alphabet) {
    GenParams params;
    params.base_size = base_size;
    params.copies = copies;
    params.rate = rate;
    params.seed = seed;
    params.alphabet = alphabet;
    Bytes corpus = generate_corpus(params);
    write_file(output, corpus);
    std::printf("wrote %zu bytes to %s\n", corpus.size(), output.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compressed pattern-matching index for repetitive byte texts"};
    app.require_subcommand(1);

    std::string input, output, index_path, corpus_path, patterns_file, alphabet = "ACGT";
    std::string lengths_csv = "10,20,40,80";
    std::vector<std::string> patterns;
    std::uint64_t m_param = 100, k_param = 0, g_param = 32, b_param = 512, sep_count = 0;
    std::uint64_t samples = 200, seed = 42, count = 1000, base_size = 1 << 20, copies = 2;
    double rate = 0.001;

    auto* c_build = app.add_subcommand("build", "Build an index from a text file");
    c_build->add_option("-i,--input", input)->required();
    c_build->add_option("-o,--output", output)->required();
    c_build->add_option("--m", m_param, "max pattern length");
    c_build->add_option("--k", k_param, "max edit distance");
    c_build->add_option("--g", g_param, "gap-list raw period");
    c_build->add_option("--b", b_param, "gap-list sample period");
    c_build->add_option("--sep-count", sep_count, "separator run length (default K+1)");

    auto* c_query = app.add_subcommand("query", "Find occurrences of patterns");
    c_query->add_option("--index", index_path)->required();
    c_query->add_option("-p,--pattern", patterns);
    c_query->add_option("--patterns-file", patterns_file);
    c_query->add_option("--k", k_param, "edit distance");

    auto* c_verify = app.add_subcommand("verify", "Check the index against its corpus");
    c_verify->add_option("--index", index_path)->required();
    c_verify->add_option("--corpus", corpus_path)->required();
    c_verify->add_option("--samples", samples);
    c_verify->add_option("--seed", seed);

    auto* c_bench = app.add_subcommand("bench", "Time queries, CSV to stdout");
    c_bench->add_option("--index", index_path)->required();
    c_bench->add_option("--corpus", corpus_path)->required();
    c_bench->add_option("--lengths", lengths_csv, "comma-separated pattern lengths");
    c_bench->add_option("--count", count, "patterns per length");
    c_bench->add_option("--seed", seed);
    c_bench->add_option("--k", k_param, "edit distance");

    auto* c_stats = app.add_subcommand("stats", "Print index section sizes");
    c_stats->add_option("--index", index_path)->required();

    auto* c_parse = app.add_subcommand("parse", "Dump the phrase factorization");
    c_parse->add_option("-i,--input", input)->required();

    auto* c_gen = app.add_subcommand("gen", "Generate a synthetic repetitive corpus");
    c_gen->add_option("-o,--output", output)->required();
    c_gen->add_option("--base-size", base_size, "base string length");
    c_gen->add_option("--copies", copies, "total copies including the base");
    c_gen->add_option("--rate", rate, "per-byte mutation rate");
    c_gen->add_option("--seed", seed);
    c_gen->add_option("--alphabet", alphabet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (c_build->parsed()) {
            BuildParams params;
            params.M = m_param;
            params.K = k_param;
            params.g = std::uint32_t(g_param);
            params.b = std::uint32_t(b_param);
            params.sep_count = sep_count;
            return cmd_build(input, output, params);
        }
        if (c_query->parsed())
            return cmd_query(index_path, patterns, patterns_file, std::uint32_t(k_param));
        if (c_verify->parsed()) return cmd_verify(index_path, corpus_path, samples, seed);
        if (c_bench->parsed())
            return cmd_bench(index_path, corpus_path, lengths_csv, count, seed,
                             std::uint32_t(k_param));
        if (c_stats->parsed()) return cmd_stats(index_path);
        if (c_parse->parsed()) return cmd_parse(input);
        if (c_gen->parsed()) return cmd_gen(output, base_size, copies, rate, seed, alphabet);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}
