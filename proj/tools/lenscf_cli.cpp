// lenscf: exact-arithmetic classifier of the symplectic-filling index sets of
// lens spaces. Subcommands: atlas (one space), sweep (catalogue over a range),
// verify (invariant suites), eval (inspect one word).

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lenscf/blowup.hpp"
#include "lenscf/topology.hpp"
#include "lenscf/verify.hpp"
#include "record.hpp"

namespace {

using namespace lenscf;

bool parse_integer(const std::string& tok, Int& out) {
    std::size_t i = 0;
    if (i < tok.size() && tok[i] == '-') ++i;
    if (i >= tok.size()) return false;
    for (std::size_t j = i; j < tok.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(tok[j]))) return false;
    out = Int(tok, 10);
    return true;
}

bool parse_word(const std::string& text, Word& out) {
    out.clear();
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        const auto a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) return false;
        const auto b = tok.find_last_not_of(" \t");
        Int v;
        if (!parse_integer(tok.substr(a, b - a + 1), v)) return false;
        out.push_back(std::move(v));
    }
    return !out.empty() && text.back() != ',';
}

int write_payload(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return std::cout.good() ? 0 : 2;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
        return 2;
    }
    os << payload;
    os.flush();
    if (!os.good()) {
        std::cerr << "error: short write to \"" << out_path << "\"\n";
        return 2;
    }
    return 0;
}

int cmd_atlas(const std::string& p_str, const std::string& q_str,
              const std::string& format, const std::string& out_path) {
    Int p, q;
    if (!parse_integer(p_str, p) || !parse_integer(q_str, q)) {
        std::cerr << "error: p and q must be decimal integers\n";
        return 2;
    }
    LensSpace lens;
    try {
        lens = make_lens(p, q);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const CatalogueRecord rec = record_from_atlas(build_atlas(lens));
    std::string payload;
    if (format == "json")
        payload = record_json(rec) + "\n";
    else if (format == "csv")
        payload = record_csv_header() + "\n" + record_csv_rows(rec);
    else
        payload = record_table(rec);
    return write_payload(payload, out_path);
}

int cmd_sweep(const Int& max_p, SweepFilter filter, const std::string& format,
              const std::string& out_path, int jobs) {
    const auto cells = sweep_cells(max_p);
    std::vector<std::string> slot(cells.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mu;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                const Atlas atlas =
                    build_atlas(make_lens(cells[i].first, cells[i].second));
                if (!sweep_filter_accepts(filter, atlas)) continue;
                const CatalogueRecord rec = record_from_atlas(atlas);
                if (format == "json")
                    slot[i] = record_json(rec) + "\n";
                else if (format == "csv")
                    slot[i] = record_csv_rows(rec);
                else
                    slot[i] = record_table(rec) + "\n";
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!failed.exchange(true)) first_error = e.what();
                return;
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) {
        std::cerr << "error: sweep failed: " << first_error << "\n";
        return 1;
    }

    std::string payload;
    if (format == "csv") payload = record_csv_header() + "\n";
    for (const auto& s : slot) payload += s;
    return write_payload(payload, out_path);
}

int cmd_verify(const std::string& suite, long max_p, long max_k,
               long max_entry) {
    SuiteResult res;
    if (suite == "lemma-zero-seq")
        res = verify_lemma_zero_seq(max_k < 0 ? 6 : max_k,
                                    max_entry < 0 ? 6 : max_entry);
    else if (suite == "oracle-equivalence")
        res = verify_oracle_equivalence(max_p < 0 ? 60 : max_p);
    else if (suite == "kollar")
        res = verify_kollar(max_p < 0 ? 400 : max_p);
    else if (suite == "rank-formula")
        res = verify_rank_formula(max_p < 0 ? 400 : max_p);
    else if (suite == "catalan")
        res = verify_catalan(max_k < 0 ? 10 : max_k);
    else if (suite == "duality")
        res = verify_duality(max_p < 0 ? 500 : max_p);
    else if (suite == "s1s2")
        res = verify_s1s2_suite(max_p < 0 ? 200 : max_p);
    else {
        std::cerr << "error: unknown suite \"" << suite << "\"\n";
        return 2;
    }
    std::cout << "suite " << suite << ": " << (res.pass ? "PASS" : "FAIL")
              << " (" << res.checked << " checks)\n";
    if (!res.pass) {
        std::cout << res.detail;
        if (!res.detail.empty() && res.detail.back() != '\n') std::cout << '\n';
    }
    return res.pass ? 0 : 1;
}

std::string boundary_str(const ChainResult& ch) {
    switch (ch.kind) {
        case ChainResult::Kind::S1xS2: return "S1xS2";
        case ChainResult::Kind::S3: return "S3";
        case ChainResult::Kind::Lens:
            return "L(" + ch.P.get_str() + "," + ch.Q.get_str() + ")";
    }
    return "";
}

int cmd_eval(const std::string& word_text, const std::string& format) {
    Word w;
    if (!parse_word(word_text, w)) {
        std::cerr << "error: expected a comma-separated integer word, got \""
                  << word_text << "\"\n";
        return 2;
    }
    const CFValue cv = cf_eval(w);
    const auto s = suffix_continuants(w);
    const ChainResult ch = chain_boundary(w);
    const bool zero = cv.admissible && cv.value == 0;
    std::optional<Witness> wit;
    if (zero) wit = reduce_to_zero(w);

    std::ostringstream os;
    if (format == "json") {
        os << "{\"word\":[";
        for (std::size_t i = 0; i < w.size(); ++i)
            os << (i ? "," : "") << w[i].get_str();
        os << "],\"admissible\":" << (cv.admissible ? "true" : "false");
        if (cv.admissible)
            os << ",\"value\":\"" << cv.value.get_str() << "\"";
        else
            os << ",\"first_vanishing_suffix_index\":"
               << cv.first_vanishing_suffix_index;
        os << ",\"suffix_continuants\":[";
        for (std::size_t i = 0; i < s.size(); ++i)
            os << (i ? "," : "") << s[i].get_str();
        os << "],\"chain\":{\"kind\":\"" << boundary_str(ch) << "\"";
        if (ch.kind == ChainResult::Kind::Lens)
            os << ",\"P\":" << ch.P.get_str() << ",\"Q\":" << ch.Q.get_str();
        os << ",\"s1\":" << ch.s1.get_str() << ",\"s2\":" << ch.s2.get_str()
           << "}";
        if (zero) {
            os << ",\"reducible\":" << (wit ? "true" : "false");
            if (wit) {
                os << ",\"witness\":[";
                for (std::size_t i = 0; i < wit->steps.size(); ++i)
                    os << (i ? "," : "") << wit->steps[i];
                os << "]";
            }
        }
        os << "}\n";
    } else if (format == "csv") {
        os << "word,admissible,value,first_vanishing_suffix_index,s1,s2,"
              "boundary,witness\n";
        os << word_str(w) << ',' << (cv.admissible ? "true" : "false") << ',';
        if (cv.admissible) os << cv.value.get_str();
        os << ',';
        if (!cv.admissible) os << cv.first_vanishing_suffix_index;
        os << ',' << ch.s1.get_str() << ',' << ch.s2.get_str() << ','
           << boundary_str(ch) << ',';
        if (wit)
            for (std::size_t i = 0; i < wit->steps.size(); ++i)
                os << (i ? " " : "") << wit->steps[i];
        os << '\n';
    } else {
        os << "word                 " << word_str(w) << '\n';
        os << "admissible           " << (cv.admissible ? "yes" : "no") << '\n';
        if (cv.admissible)
            os << "value                " << cv.value.get_str() << '\n';
        else
            os << "vanishing at index   " << cv.first_vanishing_suffix_index
               << '\n';
        std::string cont;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) cont += ' ';
            cont += s[i].get_str();
        }
        os << "suffix continuants   " << cont << '\n';
        os << "chain boundary       " << boundary_str(ch) << "  (S1="
           << ch.s1.get_str() << ", S2=" << ch.s2.get_str() << ")\n";
        if (zero) {
            if (wit) {
                std::string steps;
                for (std::size_t i = 0; i < wit->steps.size(); ++i) {
                    if (i) steps += ' ';
                    steps += std::to_string(wit->steps[i]);
                }
                os << "blowdown witness     [" << steps << "]\n";
            } else {
                os << "blowdown witness     none (value 0 but no reduction to "
                      "(0) exists)\n";
            }
        }
    }
    std::cout << os.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic atlas of lens-space filling indices"};
    app.set_version_flag("--version", lenscf::kToolVersion);
    app.require_subcommand(1);

    std::string p_str, q_str, word_text, suite;
    std::string format_atlas = "table", format_sweep = "json",
                format_eval = "table";
    std::string out_atlas, out_sweep;
    std::string max_p_str;
    std::string filter_name = "all";
    int jobs = 1;
    long vmax_p = -1, vmax_k = -1, vmax_entry = -1;

    auto* atlas_cmd =
        app.add_subcommand("atlas", "classify the fillings of one lens space");
    atlas_cmd->add_option("p", p_str, "order of the cyclic group")->required();
    atlas_cmd->add_option("q", q_str, "rotation parameter, coprime to p")
        ->required();
    atlas_cmd->add_option("--format", format_atlas, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    atlas_cmd->add_option("--out", out_atlas, "write output to this path");

    auto* sweep_cmd =
        app.add_subcommand("sweep", "emit the catalogue for all coprime pairs");
    sweep_cmd->add_option("--max-p", max_p_str, "largest p to include")
        ->required();
    sweep_cmd
        ->add_option("--filter", filter_name, "which records to keep")
        ->check(CLI::IsMember({"all", "unique", "multiple", "kollar",
                               "qhb-present"}));
    sweep_cmd->add_option("--format", format_sweep, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sweep_cmd->add_option("--out", out_sweep, "write output to this path");
    sweep_cmd->add_option("--jobs", jobs, "worker threads")
        ->envname("LENSCF_JOBS")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd =
        app.add_subcommand("verify", "run one invariant suite at scale");
    verify_cmd
        ->add_option("suite", suite,
                     "one of lemma-zero-seq, oracle-equivalence, kollar, "
                     "rank-formula, catalan, duality, s1s2")
        ->required();
    verify_cmd->add_option("--max-p", vmax_p, "largest p (suite-specific default)");
    verify_cmd->add_option("--max-k", vmax_k, "largest word length");
    verify_cmd->add_option("--max-entry", vmax_entry, "largest word entry");

    auto* eval_cmd =
        app.add_subcommand("eval", "evaluate one comma-separated word");
    eval_cmd->add_option("word", word_text, "e.g. 2,1,2")->required();
    eval_cmd->add_option("--format", format_eval, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (atlas_cmd->parsed())
            return cmd_atlas(p_str, q_str, format_atlas, out_atlas);
        if (sweep_cmd->parsed()) {
            lenscf::Int max_p;
            if (!parse_integer(max_p_str, max_p) || max_p < 2) {
                std::cerr << "error: --max-p must be an integer >= 2\n";
                return 2;
            }
            lenscf::SweepFilter filter = lenscf::SweepFilter::all;
            if (filter_name == "unique") filter = lenscf::SweepFilter::unique;
            else if (filter_name == "multiple") filter = lenscf::SweepFilter::multiple;
            else if (filter_name == "kollar") filter = lenscf::SweepFilter::kollar;
            else if (filter_name == "qhb-present") filter = lenscf::SweepFilter::qhb_present;
            return cmd_sweep(max_p, filter, format_sweep, out_sweep, jobs);
        }
        if (verify_cmd->parsed())
            return cmd_verify(suite, vmax_p, vmax_k, vmax_entry);
        if (eval_cmd->parsed()) return cmd_eval(word_text, format_eval);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
