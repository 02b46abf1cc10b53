// Command-line front end. All computation goes through the C API of the
// knotsim shared library; this file only translates flags to JSON requests
// and prints the response envelope.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotsim/knotsim.h"

using json = nlohmann::json;

namespace {

int run_request(const json& request, bool pretty, bool text) {
    ks_context* ctx = ks_context_create();
    char* out = nullptr;
    int rc = ks_run_json(ctx, request.dump().c_str(), &out);
    if (rc != KS_OK) {
        std::cerr << "error (" << rc << "): " << ks_context_last_error(ctx) << "\n";
        ks_context_destroy(ctx);
        return rc;
    }
    json response = json::parse(out);
    ks_string_free(out);
    ks_context_destroy(ctx);

    if (text) {
        for (const auto& [key, value] : response.at("result").items())
            std::cout << key << " = " << value.dump() << "\n";
    } else if (pretty) {
        std::cout << response.dump(2) << "\n";
    } else {
        std::cout << response.dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"knotsim: bracket/Jones/WRT invariants and braid-group simulators"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --pretty/--text after the subcommand

    bool pretty = false, text = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");
    app.add_flag("--text", text, "plain-text result lines instead of JSON");

    std::string word;
    int strands = 0;

    auto add_word = [&](CLI::App* sub, bool positional = true) {
        if (positional)
            sub->add_option("word", word, "braid word, e.g. \"1 1 1\" or \"n=3: 1 -2\"");
        else
            sub->add_option("--word", word, "braid word");
        sub->add_option("--strands", strands, "strand count override");
    };

    // bracket
    auto* bracket = app.add_subcommand("bracket", "Kauffman bracket and normalized invariant");
    std::string closure = "trace", engine = "tl";
    int max_crossings = 64;
    add_word(bracket);
    bracket->add_option("--closure", closure, "trace|plat")->default_str("trace");
    bracket->add_option("--engine", engine, "tl|statesum")->default_str("tl");
    bracket->add_option("--max-crossings", max_crossings, "refuse larger words");

    // jones
    auto* jones = app.add_subcommand("jones", "Jones polynomial (quarter-power exponents of t)");
    add_word(jones);
    jones->add_option("--max-crossings", max_crossings, "refuse larger words");

    // colored
    auto* colored = app.add_subcommand("colored", "colored bracket of the plat closure");
    int color = 2, level = 5, max_cabled = 12;
    std::string method = "chain";
    add_word(colored);
    colored->add_option("--color", color, "strand color (projector size)");
    colored->add_option("--level", level, "root-of-unity level r");
    colored->add_option("--method", method, "chain|cabled");
    colored->add_option("--max-cabled-strands", max_cabled, "cap for the cabled oracle");

    // wrt
    auto* wrt = app.add_subcommand("wrt", "unnormalized WRT invariant of the plat closure");
    add_word(wrt);
    wrt->add_option("--level", level, "root-of-unity level r");

    // fib-rep
    auto* fib = app.add_subcommand("fib-rep", "Fibonacci braid-group representation");
    int n = 4, root = 0;
    fib->add_option("--n", n, "strand count");
    fib->add_option("--root", root, "total charge (0 or 1)");
    fib->add_option("--word", word, "optional braid word to evaluate");

    // su2-check
    auto* su2 = app.add_subcommand("su2-check", "quaternionic Fibonacci B3 pair checks");
    std::vector<int> probe_lengths;
    int samples = 30;
    std::uint64_t seed = 1;
    su2->add_option("--probe-length", probe_lengths, "covering-radius probe word lengths");
    su2->add_option("--samples", samples, "Haar targets per probe");
    su2->add_option("--seed", seed, "probe RNG seed");

    // recoupling-table
    auto* table = app.add_subcommand("recoupling-table", "quantum integers, deltas, thetas");
    int max_label = -1;
    std::vector<int> matrix_labels;
    table->add_option("--level", level, "root-of-unity level r");
    table->add_option("--max-label", max_label, "largest label in the theta table");
    table->add_option("--matrix", matrix_labels, "labels a b c d of one recoupling matrix")
        ->expected(4);

    // hadamard
    auto* had = app.add_subcommand("hadamard", "Hadamard-test estimate of a matrix element");
    double theta = 0.3141592653589793;
    int shots = 10000, index = 0;
    std::string part = "re";
    bool allow_nonunitary = false;
    add_word(had, false);
    had->add_option("--theta", theta, "A = e^{i theta}");
    had->add_option("--shots", shots, "Bernoulli shots");
    had->add_option("--seed", seed, "sampler seed");
    had->add_option("--part", part, "re|im");
    had->add_option("--index", index, "diagonal element index");
    had->add_flag("--allow-nonunitary", allow_nonunitary, "permit |d| < 1");

    CLI11_PARSE(app, argc, argv);

    json req;
    if (bracket->parsed()) {
        req = {{"command", "bracket"}, {"closure", closure}, {"engine", engine},
               {"max_crossings", max_crossings}};
    } else if (jones->parsed()) {
        req = {{"command", "jones"}, {"max_crossings", max_crossings}};
    } else if (colored->parsed()) {
        req = {{"command", "colored"}, {"color", color},   {"level", level},
               {"method", method},     {"max_cabled_strands", max_cabled}};
    } else if (wrt->parsed()) {
        req = {{"command", "wrt"}, {"level", level}};
    } else if (fib->parsed()) {
        req = {{"command", "fib-rep"}, {"n", n}, {"root", root}};
    } else if (su2->parsed()) {
        req = {{"command", "su2-check"}, {"samples", samples}, {"seed", seed}};
        if (!probe_lengths.empty()) req["probe_lengths"] = probe_lengths;
    } else if (table->parsed()) {
        req = {{"command", "recoupling-table"}, {"level", level}};
        if (max_label >= 0) req["max_label"] = max_label;
        if (!matrix_labels.empty()) req["matrix"] = matrix_labels;
    } else if (had->parsed()) {
        req = {{"command", "hadamard"}, {"theta", theta}, {"shots", shots},
               {"seed", seed},          {"part", part},   {"index", index},
               {"allow_nonunitary", allow_nonunitary}};
    }

    if (!word.empty()) req["word"] = word;
    if (strands > 0) req["strands"] = strands;
    return run_request(req, pretty, text);
}
