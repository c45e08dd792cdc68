// command line front end: construct named codes, print invariants, run
// verification suites, drive the classification and the shortening chain
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "trieven/forms.hpp"
#include "trieven/pipeline.hpp"
#include "trieven/verify.hpp"

namespace fs = std::filesystem;
using namespace trieven;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

LinearCode construct_by_name(const std::string& name) {
    auto num = [&](const std::string& s) {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
        return v;
    };
    if (name == "e8") return parse_hex_rows({0xB1, 0xE2, 0x74, 0xD8}, 8);
    if (name == "d16plus") {
        std::vector<std::uint64_t> rows;
        for (int i = 0; i < 7; ++i) rows.push_back(0xFull << (2 * i));
        rows.push_back(0x5555);
        return parse_hex_rows(rows, 16);
    }
    if (name == "rm14")
        return parse_hex_rows({0xFFFF, 0xAAAA, 0xCCCC, 0xF0F0, 0xFF00}, 16);
    if (name.starts_with("desd24:")) {
        int i = num(name.substr(7));
        if (i < 1 || i > 9)
            throw std::invalid_argument("desd24 index must be 1..9");
        return load_desd24()[(std::size_t)i - 1];
    }
    if (name.starts_with("tildeD:"))
        return generalized_doubling(construct_by_name(name.substr(7)));
    if (name.starts_with("extD:"))
        return extended_doubling(construct_by_name(name.substr(5)));
    if (name.starts_with("T:")) {
        int n = num(name.substr(2));
        if (n < 3 || n > 16) throw std::invalid_argument("T:n needs 3 <= n <= 16");
        return triangular_graph_code(n);
    }
    if (name.starts_with("ttgc:")) {
        int n = num(name.substr(5));
        if (n < 3 || n > 16)
            throw std::invalid_argument("ttgc:n needs 3 <= n <= 16");
        return padded_triangular_code(n);
    }
    throw std::invalid_argument("unknown code name: " + name);
}

LinearCode load_input(const std::string& input, std::size_t length) {
    if (fs::exists(input)) {
        std::ifstream f(input);
        std::stringstream buf;
        buf << f.rdbuf();
        std::string text = buf.str();
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            return code_from_json(text);
        if (length == 0)
            throw std::invalid_argument("--length is required for hex input");
        return parse_hex_text(text, length);
    }
    return construct_by_name(input);
}

void write_or_print(const std::string& out_dir, const std::string& stem,
                    const std::string& ext, const std::string& payload) {
    if (out_dir.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    fs::create_directories(out_dir);
    fs::path p = fs::path(out_dir) / (stem + ext);
    std::ofstream f(p);
    f << payload;
    std::cout << p.string() << '\n';
}

std::string sanitize(std::string s) {
    for (auto& ch : s)
        if (ch == ':') ch = '_';
    return s;
}

void print_invariants(const LinearCode& c) {
    std::cout << "length            " << c.length() << '\n';
    std::cout << "dimension         " << c.dim() << '\n';
    if (c.dim() <= kDefaultEnumCapDim)
        std::cout << "weight enumerator " << weight_enumerator(c).to_string()
                  << '\n';
    bool de = is_doubly_even(c);
    bool te = is_triply_even(c);
    std::cout << "doubly even       " << (de ? "yes" : "no") << '\n';
    std::cout << "triply even       " << (te ? "yes" : "no") << '\n';
    if (de) {
        std::cout << "dim(C meet rad C) " << meet_rad(c).dim() << '\n';
        std::cout << "dim(C meet Rad C) " << meet_Rad(c).dim() << '\n';
    }
    if (te)
        std::cout << "maximal           " << (is_maximal(c) ? "yes" : "no")
                  << '\n';
    if (c.dim() <= 20)
        std::cout << "|Aut|             "
                  << canonical_form(c).aut_order().str() << '\n';
}

bool budget_error(const std::exception& e) {
    return std::string(e.what()).find("budget") != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for divisible binary codes"};
    app.require_subcommand(1);

    std::string out_dir, format = "hex";
    int jobs = 1;
    double budget_seconds = 0;
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--jobs", jobs, "pipeline worker count")->check(CLI::PositiveNumber);
    app.add_option("--budget-seconds", budget_seconds,
                   "per-computation symmetry budget, 0 = unlimited");
    app.add_option("--format", format, "hex or json")
        ->check(CLI::IsMember({"hex", "json"}));

    std::string name, input, suite, file;
    std::size_t length = 0;
    std::size_t min_length = 8;

    auto* c_construct = app.add_subcommand("construct", "build a named code");
    c_construct->add_option("name", name, "code name")->required();

    auto* c_invariants =
        app.add_subcommand("invariants", "report invariants of a code");
    c_invariants->add_option("input", input, "code name or file")->required();
    c_invariants->add_option("--length", length, "code length for hex input");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite, "suite name")->required();

    auto* c_classify =
        app.add_subcommand("classify", "classify maximal triply even codes of length 48");

    auto* c_shorten = app.add_subcommand(
        "shorten", "shorten the length-48 classes down to shorter lengths");
    c_shorten->add_option("--min-length", min_length, "stop at this length");

    auto* c_parse = app.add_subcommand("parse", "hex text to the JSON record");
    c_parse->add_option("file", file, "hex input file")->required();
    c_parse->add_option("--length", length, "code length");

    auto* c_emit = app.add_subcommand("emit", "JSON record to hex text");
    c_emit->add_option("file", file, "JSON input file")->required();

    // let the shared flags appear after the verb too
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_construct->parsed()) {
            LinearCode c = construct_by_name(name);
            if (format == "json")
                write_or_print(out_dir, sanitize(name), ".json", code_to_json(c));
            else
                write_or_print(out_dir, sanitize(name), ".hex", emit_hex_text(c));
            return kExitPass;
        }
        if (c_invariants->parsed()) {
            print_invariants(load_input(input, length));
            return kExitPass;
        }
        if (c_verify->parsed()) {
            SuiteOptions opts;
            opts.jobs = jobs;
            opts.budget_seconds = budget_seconds;
            opts.out_dir = out_dir;
            opts.log = &std::cout;
            bool ok = run_suite(suite, opts);
            std::cout << suite << ": " << (ok ? "pass" : "FAIL") << '\n';
            return ok ? kExitPass : kExitFail;
        }
        if (c_classify->parsed()) {
            ClassifyOptions opts;
            opts.jobs = jobs;
            opts.budget_seconds = budget_seconds;
            opts.checkpoint_dir = out_dir;
            auto report = classify48(opts);
            std::cout << "duplex: maximal " << report.duplex_maximal
                      << ", constructed " << report.duplex_constructed
                      << ", excluded " << report.duplex_excluded << '\n';
            std::cout << "hybrid: pairs " << report.hybrid_pairs
                      << ", constructed " << report.hybrid_constructed
                      << ", maximal " << report.hybrid_maximal << '\n';
            std::cout << report.classes.size() << " classes\n";
            for (std::size_t i = 0; i < report.classes.size(); ++i)
                std::cout << "  dim " << report.classes[i].dim() << "  "
                          << report.class_labels[i] << '\n';
            std::cout << "note: " << report.note << '\n';
            if (out_dir.empty() && format == "json")
                std::cout << report.to_json() << '\n';
            return kExitPass;
        }
        if (c_shorten->parsed()) {
            auto chain = shorten_chain(representatives48(), min_length, jobs);
            std::cout << " len dim #codes\n";
            for (const auto& [len, codes] : chain) {
                if (len % 8 != 0) continue;
                std::map<std::size_t, std::size_t> by_dim;
                for (const auto& c : codes) ++by_dim[c.dim()];
                for (const auto& [d, cnt] : by_dim)
                    std::cout << std::setw(4) << len << std::setw(4) << d
                              << std::setw(7) << cnt << '\n';
            }
            if (!out_dir.empty()) {
                fs::create_directories(out_dir);
                for (const auto& [len, codes] : chain) {
                    if (len % 8 != 0) continue;
                    for (std::size_t i = 0; i < codes.size(); ++i) {
                        std::ofstream f(fs::path(out_dir) /
                                        ("maximal_" + std::to_string(len) + "_" +
                                         std::to_string(i + 1) + ".hex"));
                        f << emit_hex_text(codes[i]);
                    }
                }
            }
            return kExitPass;
        }
        if (c_parse->parsed()) {
            if (!fs::exists(file))
                throw std::invalid_argument("no such file: " + file);
            if (length == 0)
                throw std::invalid_argument("--length is required");
            std::ifstream f(file);
            std::stringstream buf;
            buf << f.rdbuf();
            LinearCode c = parse_hex_text(buf.str(), length);
            write_or_print(out_dir, fs::path(file).stem().string(), ".json",
                           code_to_json(c));
            return kExitPass;
        }
        if (c_emit->parsed()) {
            if (!fs::exists(file))
                throw std::invalid_argument("no such file: " + file);
            std::ifstream f(file);
            std::stringstream buf;
            buf << f.rdbuf();
            LinearCode c = code_from_json(buf.str());
            write_or_print(out_dir, fs::path(file).stem().string(), ".hex",
                           emit_hex_text(c));
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return budget_error(e) ? kExitBudget : kExitFail;
    }
    return kExitInput;
}
