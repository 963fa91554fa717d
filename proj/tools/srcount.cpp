#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srcount/applications.hpp"
#include "srcount/oracle.hpp"
#include "srcount/src_index.hpp"

namespace {

constexpr int kExitValidation = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Dense byte -> code mapping over the bytes that actually occur.
struct Alphabet {
    std::map<unsigned char, uint32_t> code;

    void add(const std::string& bytes) {
        for (unsigned char b : bytes) code.emplace(b, 0);
    }
    void freeze() {
        uint32_t next = 0;
        for (auto& [b, c] : code) c = next++;
    }
    uint32_t sigma() const { return static_cast<uint32_t>(code.size()); }

    std::vector<uint32_t> encode(const std::string& bytes) const {
        std::vector<uint32_t> out;
        out.reserve(bytes.size());
        for (unsigned char b : bytes) out.push_back(code.at(b));
        return out;
    }
    // nullopt when a byte never occurs in the corpus (the pattern then has
    // zero occurrences by definition).
    std::optional<std::vector<uint32_t>> encode_pattern(
        const std::string& bytes) const {
        std::vector<uint32_t> out;
        out.reserve(bytes.size());
        for (unsigned char b : bytes) {
            auto it = code.find(b);
            if (it == code.end()) return std::nullopt;
            out.push_back(it->second);
        }
        return out;
    }
};

std::vector<uint64_t> parse_labels(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::vector<uint64_t> labels;
    uint64_t v;
    while (in >> v) labels.push_back(v);
    if (!in.eof()) throw ValidationError("labels file: non-numeric token");
    if (labels.size() != n)
        throw ValidationError("labels file: expected " + std::to_string(n) +
                              " labels, got " + std::to_string(labels.size()));
    return labels;
}

srcount::LabeledText load_corpus(const std::string& text_path,
                                 const std::string& labels_path,
                                 Alphabet& alpha) {
    std::string bytes = read_file(text_path);
    if (bytes.empty()) throw ValidationError("text file is empty");
    alpha.add(bytes);
    alpha.freeze();
    srcount::LabeledText lt;
    lt.text = alpha.encode(bytes);
    lt.sigma = alpha.sigma();
    lt.labels = parse_labels(labels_path, bytes.size());
    lt.universe = *std::max_element(lt.labels.begin(), lt.labels.end());
    return lt;
}

struct Query {
    std::string pattern;
    uint64_t a, b;
};

std::vector<Query> parse_queries(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::vector<Query> queries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        Query q;
        if (!(ls >> q.pattern >> q.a >> q.b))
            throw ValidationError("queries file: malformed line " +
                                  std::to_string(lineno));
        std::string extra;
        if (ls >> extra)
            throw ValidationError("queries file: malformed line " +
                                  std::to_string(lineno));
        queries.push_back(q);
    }
    return queries;
}

srcount::IntervalSet parse_intervals(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    srcount::IntervalSet pi;
    uint32_t s, e;
    while (in >> s >> e) pi.intervals.emplace_back(s, e);
    if (!in.eof()) throw ValidationError("intervals file: malformed entry");
    return pi;
}

uint64_t run_count(const srcount::LabeledText& lt, const Alphabet& alpha,
                   const std::string& pattern, uint64_t a, uint64_t b,
                   std::optional<uint32_t> tau, bool use_oracle) {
    auto enc = alpha.encode_pattern(pattern);
    if (pattern.empty()) throw ValidationError("pattern must be non-empty");
    if (!enc) return 0;
    if (use_oracle) return srcount::oracle::naive_count(lt, *enc, a, b);
    srcount::BuildConfig cfg;
    cfg.tau = tau;
    srcount::SrcIndex idx(lt, cfg);
    return idx.count(*enc, a, b);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Substring range counting over labeled texts"};
    app.require_subcommand(1);

    std::string text_path, labels_path, queries_path, intervals_path,
        text2_path, pattern, p1, p2;
    std::vector<uint64_t> range;
    uint32_t opt_i = 0, opt_j = 0, opt_d = 0;
    std::optional<uint32_t> tau;
    bool use_oracle = false;

    auto add_common = [&](CLI::App* cmd, bool with_tau) {
        cmd->add_flag("--oracle", use_oracle,
                      "answer with the brute-force reference instead");
        if (with_tau)
            cmd->add_option("--tau", tau, "override the short-pattern cutoff");
    };

    auto* count_cmd = app.add_subcommand("count", "count one query");
    count_cmd->add_option("--text", text_path)->required();
    count_cmd->add_option("--labels", labels_path)->required();
    count_cmd->add_option("--pattern", pattern)->required();
    count_cmd->add_option("--range", range, "label interval A B")
        ->expected(2)
        ->required();
    add_common(count_cmd, true);

    auto* batch_cmd = app.add_subcommand("batch", "count queries from a file");
    batch_cmd->add_option("--text", text_path)->required();
    batch_cmd->add_option("--labels", labels_path)->required();
    batch_cmd->add_option("--queries", queries_path)->required();
    add_common(batch_cmd, true);

    auto* prsc_cmd =
        app.add_subcommand("prsc", "position-restricted substring counting");
    prsc_cmd->add_option("--text", text_path)->required();
    prsc_cmd->add_option("--pattern", pattern)->required();
    prsc_cmd->add_option("--i", opt_i)->required();
    prsc_cmd->add_option("--j", opt_j)->required();
    add_common(prsc_cmd, false);

    auto* intervals_cmd =
        app.add_subcommand("intervals", "counting restricted to intervals");
    intervals_cmd->add_option("--text", text_path)->required();
    intervals_cmd->add_option("--intervals", intervals_path)->required();
    intervals_cmd->add_option("--pattern", pattern)->required();
    intervals_cmd->add_option("--i", opt_i)->required();
    intervals_cmd->add_option("--j", opt_j)->required();
    add_common(intervals_cmd, false);

    auto* gaps_cmd = app.add_subcommand("gaps", "two patterns with a fixed gap");
    gaps_cmd->add_option("--text", text_path)->required();
    gaps_cmd->add_option("--d", opt_d)->required();
    gaps_cmd->add_option("--p1", p1)->required();
    gaps_cmd->add_option("--p2", p2)->required();
    add_common(gaps_cmd, false);

    auto* aligned_cmd =
        app.add_subcommand("aligned", "same-position matching in two texts");
    aligned_cmd->add_option("--text", text_path)->required();
    aligned_cmd->add_option("--text2", text2_path)->required();
    aligned_cmd->add_option("--p1", p1)->required();
    aligned_cmd->add_option("--p2", p2)->required();
    add_common(aligned_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (count_cmd->parsed()) {
            Alphabet alpha;
            auto lt = load_corpus(text_path, labels_path, alpha);
            std::cout << run_count(lt, alpha, pattern, range[0], range[1], tau,
                                   use_oracle)
                      << "\n";
        } else if (batch_cmd->parsed()) {
            Alphabet alpha;
            auto lt = load_corpus(text_path, labels_path, alpha);
            auto queries = parse_queries(queries_path);
            std::optional<srcount::SrcIndex> idx;
            if (!use_oracle && !queries.empty()) {
                srcount::BuildConfig cfg;
                cfg.tau = tau;
                idx.emplace(lt, cfg);
            }
            for (const auto& q : queries) {
                auto enc = alpha.encode_pattern(q.pattern);
                uint64_t c = 0;
                if (enc)
                    c = use_oracle
                            ? srcount::oracle::naive_count(lt, *enc, q.a, q.b)
                            : idx->count(*enc, q.a, q.b);
                std::cout << c << "\n";
            }
        } else if (prsc_cmd->parsed()) {
            std::string bytes = read_file(text_path);
            Alphabet alpha;
            alpha.add(bytes);
            alpha.freeze();
            auto text = alpha.encode(bytes);
            auto enc = alpha.encode_pattern(pattern);
            uint64_t c = 0;
            if (enc) {
                if (opt_i < 1 || opt_i > opt_j || opt_j > text.size())
                    throw ValidationError("prsc: bad position interval");
                c = use_oracle
                        ? srcount::oracle::naive_prsc(text, *enc, opt_i, opt_j)
                        : prsc_count(srcount::prsc_build(text, alpha.sigma()),
                                     *enc, opt_i, opt_j);
            }
            std::cout << c << "\n";
        } else if (intervals_cmd->parsed()) {
            std::string bytes = read_file(text_path);
            Alphabet alpha;
            alpha.add(bytes);
            alpha.freeze();
            auto text = alpha.encode(bytes);
            auto pi = parse_intervals(intervals_path);
            auto enc = alpha.encode_pattern(pattern);
            uint64_t c = 0;
            if (enc) {
                if (opt_i < 1 || opt_i > opt_j || opt_j > text.size())
                    throw ValidationError("intervals: bad position interval");
                c = use_oracle
                        ? srcount::oracle::naive_intervals(text, pi, *enc, opt_i,
                                                           opt_j)
                        : intervals_count(
                              srcount::intervals_build(text, alpha.sigma(), pi),
                              *enc, opt_i, opt_j);
            }
            std::cout << c << "\n";
        } else if (gaps_cmd->parsed()) {
            std::string bytes = read_file(text_path);
            Alphabet alpha;
            alpha.add(bytes);
            alpha.freeze();
            auto text = alpha.encode(bytes);
            auto e1 = alpha.encode_pattern(p1);
            auto e2 = alpha.encode_pattern(p2);
            uint64_t c = 0;
            if (e1 && e2) {
                if (e1->empty() || e2->empty())
                    throw ValidationError("gaps: patterns must be non-empty");
                c = use_oracle
                        ? srcount::oracle::naive_gaps(text, opt_d, *e1, *e2)
                        : srcount::GappedIndex(text, alpha.sigma(), opt_d)
                              .count(*e1, *e2);
            }
            std::cout << c << "\n";
        } else if (aligned_cmd->parsed()) {
            std::string b1 = read_file(text_path);
            std::string b2 = read_file(text2_path);
            Alphabet alpha;
            alpha.add(b1);
            alpha.add(b2);
            alpha.freeze();
            auto s1 = alpha.encode(b1);
            auto s2 = alpha.encode(b2);
            auto e1 = alpha.encode_pattern(p1);
            auto e2 = alpha.encode_pattern(p2);
            uint64_t c = 0;
            if (e1 && e2) {
                if (e1->empty() || e2->empty())
                    throw ValidationError("aligned: patterns must be non-empty");
                c = use_oracle
                        ? srcount::oracle::naive_aligned(s1, s2, *e1, *e2)
                        : srcount::AlignedIndex(s1, s2, alpha.sigma())
                              .count(*e1, *e2);
            }
            std::cout << c << "\n";
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
