#include "knotsim/knotsim.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include <json.hpp>

#include "knotsim/bracket.hpp"
#include "knotsim/errors.hpp"
#include "knotsim/fibmodel.hpp"
#include "knotsim/qsim.hpp"
#include "knotsim/recoupling.hpp"
#include "knotsim/su2reps.hpp"

using json = nlohmann::json;
using namespace knotsim;

struct ks_context {
    std::string last_error;
};

namespace {

json laurent_json(const LaurentPoly& p) {
    json out = json::object();
    for (const auto& [exp, coeff] : p.terms()) {
        std::string key = std::to_string(exp);
        if (coeff >= std::numeric_limits<long long>::min() &&
            coeff <= std::numeric_limits<long long>::max())
            out[key] = static_cast<long long>(coeff);
        else
            out[key] = coeff.str();
    }
    return out;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(complex_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

BraidWord word_from_request(const json& req) {
    if (!req.contains("word")) {
        // an explicit strand count with no word is the identity braid
        if (req.contains("strands")) return BraidWord(req.at("strands").get<int>(), {});
        throw ParseError("request is missing \"word\"");
    }
    return parse_braid(req.at("word").get<std::string>(), req.value("strands", 0));
}

ClosureKind closure_from_request(const json& req, ClosureKind fallback) {
    std::string c = req.value("closure", fallback == ClosureKind::Trace ? "trace" : "plat");
    if (c == "trace") return ClosureKind::Trace;
    if (c == "plat") return ClosureKind::Plat;
    throw ParseError("closure must be \"trace\" or \"plat\"");
}

json cmd_bracket(const json& req) {
    BraidWord b = word_from_request(req);
    ClosureKind closure = closure_from_request(req, ClosureKind::Trace);
    int cap = req.value("max_crossings", 64);
    if (b.crossing_count() > cap)
        throw ResourceCapError("crossing count " + std::to_string(b.crossing_count()) +
                               " exceeds --max-crossings " + std::to_string(cap));
    std::string engine = req.value("engine", "tl");
    LaurentPoly bracket;
    if (engine == "tl")
        bracket = kauffman_bracket_tl(b, closure);
    else if (engine == "statesum")
        bracket = kauffman_bracket_statesum(b, closure);
    else
        throw ParseError("engine must be \"tl\" or \"statesum\"");

    json config{{"command", "bracket"},
                {"word", b.format()},
                {"strands", b.strands},
                {"closure", closure == ClosureKind::Trace ? "trace" : "plat"},
                {"engine", engine},
                {"max_crossings", cap}};
    json result{{"bracket", laurent_json(bracket)}};
    if (closure == ClosureKind::Trace) {
        result["f"] = laurent_json(normalized_invariant(b));
        result["writhe"] = b.exponent_sum();
    }
    json diagnostics{{"crossings", b.crossing_count()}};
    return json{{"config", config}, {"result", result}, {"diagnostics", diagnostics}};
}

json cmd_jones(const json& req) {
    BraidWord b = word_from_request(req);
    int cap = req.value("max_crossings", 64);
    if (b.crossing_count() > cap)
        throw ResourceCapError("crossing count exceeds --max-crossings");
    LaurentPoly v = jones_polynomial(b);
    json config{{"command", "jones"},
                {"word", b.format()},
                {"strands", b.strands},
                {"max_crossings", cap}};
    json result{{"jones", laurent_json(v)}, {"variable", "t^(1/4) per exponent unit"}};
    json diagnostics{{"crossings", b.crossing_count()}, {"writhe", b.exponent_sum()}};
    return json{{"config", config}, {"result", result}, {"diagnostics", diagnostics}};
}

json cmd_colored(const json& req) {
    BraidWord b = word_from_request(req);
    int color = req.value("color", 2);
    int level = req.value("level", 5);
    std::string method = req.value("method", "chain");
    RecouplingContext ctx(level);
    Complex value;
    if (method == "chain") {
        value = colored_bracket_plat(b, color, ctx);
    } else if (method == "cabled") {
        int cap = req.value("max_cabled_strands", 12);
        if (b.strands * color > cap)
            throw ResourceCapError("cabled width " + std::to_string(b.strands * color) +
                                   " exceeds cap " + std::to_string(cap));
        value = colored_bracket_cabled(b, color, ctx.a_value(), ClosureKind::Plat);
    } else {
        throw ParseError("method must be \"chain\" or \"cabled\"");
    }
    json config{{"command", "colored"}, {"word", b.format()},     {"strands", b.strands},
                {"color", color},       {"level", level},         {"method", method},
                {"closure", "plat"}};
    json result{{"value", complex_json(value)}};
    json diagnostics{{"delta_color", ctx.delta_n(color)}};
    return json{{"config", config}, {"result", result}, {"diagnostics", diagnostics}};
}

json cmd_wrt(const json& req) {
    BraidWord b = word_from_request(req);
    int level = req.value("level", 5);
    Complex value = wrt_invariant(b, level);
    json config{
        {"command", "wrt"}, {"word", b.format()}, {"strands", b.strands}, {"level", level}};
    json result{{"value", complex_json(value)}};
    json diagnostics{{"colors", level - 1}};
    return json{{"config", config}, {"result", result}, {"diagnostics", diagnostics}};
}

json cmd_fib_rep(const json& req) {
    int n = req.value("n", 4);
    int root = req.value("root", 0);
    BraidRep rep = fib_braid_rep(n, root);
    json config{{"command", "fib-rep"}, {"n", n}, {"root", root}};
    json result{{"dimension", rep.dimension()}};
    json diagnostics = json::object();
    if (req.contains("word")) {
        BraidWord b = parse_braid(req.at("word").get<std::string>(), n);
        CMatrix m = rep.word_image(b);
        config["word"] = b.format();
        result["image"] = matrix_json(m);
        diagnostics["unitarity_residual"] = m.unitarity_residual();
    } else {
        json gens = json::array();
        double worst = 0;
        for (int i = 1; i <= n - 1; ++i) {
            gens.push_back(matrix_json(rep.generator(i)));
            worst = std::max(worst, rep.generator(i).unitarity_residual());
        }
        result["generators"] = gens;
        diagnostics["unitarity_residual"] = worst;
    }
    return json{{"config", config}, {"result", result}, {"diagnostics", diagnostics}};
}

json cmd_su2_check(const json& req) {
    B3Pair pair = fibonacci_b3_quaternions();
    json config{{"command", "su2-check"}};
    json quat_g = json::array({pair.g.a, pair.g.b, pair.g.c, pair.g.d});
    json quat_h = json::array({pair.h.a, pair.h.b, pair.h.c, pair.h.d});
    json result{{"g", quat_g}, {"h", quat_h}, {"braid_residual", pair.braid_residual()}};
    if (req.contains("probe_lengths")) {
        int samples = req.value("samples", 30);
        std::uint64_t seed = req.value("seed", 1ULL);
        config["samples"] = samples;
        config["seed"] = seed;
        json radii = json::object();
        for (int len : req.at("probe_lengths").get<std::vector<int>>())
            radii[std::to_string(len)] = density_probe(pair, len, samples, seed);
        result["covering_radius"] = radii;
    }
    return json{{"config", config}, {"result", result}, {"diagnostics", json::object()}};
}

json cmd_recoupling_table(const json& req) {
    int level = req.value("level", 5);
    RecouplingContext ctx(level);
    int cap = req.value("max_label", ctx.max_label());
    cap = std::min(cap, ctx.max_label());
    json config{{"command", "recoupling-table"}, {"level", level}, {"max_label", cap}};

    json qint = json::array(), dn = json::array();
    for (int nn = 0; nn <= level; ++nn) qint.push_back(ctx.quantum_int(nn));
    for (int nn = 0; nn <= ctx.max_label(); ++nn) dn.push_back(ctx.delta_n(nn));
    json thetas = json::array();
    for (int a = 0; a <= cap; ++a)
        for (int bb = a; bb <= cap; ++bb)
            for (int c = bb; c <= cap; ++c) {
                if (!ctx.admissible(a, bb, c)) continue;
                thetas.push_back(
                    json{{"labels", json::array({a, bb, c})}, {"value", ctx.theta_net(a, bb, c)}});
            }
    json result{{"quantum_int", qint}, {"delta_n", dn}, {"theta", thetas}};
    if (req.contains("matrix")) {
        auto labels = req.at("matrix").get<std::vector<int>>();
        if (labels.size() != 4) throw ParseError("matrix needs four labels a b c d");
        RecouplingMatrix m = ctx.recoupling_matrix(labels[0], labels[1], labels[2], labels[3]);
        json entries = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
            entries.push_back(row);
        }
        result["matrix"] = json{{"labels", labels},
                                {"row_labels", m.row_labels},
                                {"col_labels", m.col_labels},
                                {"entries", entries}};
    }
    return json{{"config", config}, {"result", result}, {"diagnostics", json::object()}};
}

json cmd_hadamard(const json& req) {
    BraidWord b = word_from_request(req);
    double theta = req.value("theta", M_PI / 10.0);
    int shots = req.value("shots", 10000);
    std::uint64_t seed = req.value("seed", 0ULL);
    std::string part = req.value("part", "re");
    if (part != "re" && part != "im") throw ParseError("part must be \"re\" or \"im\"");
    int index = req.value("index", 0);
    bool allow = req.value("allow_nonunitary", false);

    Complex a_value = std::polar(1.0, theta);
    ThreeStrandRep rep = three_strand_rep(a_value, allow);
    CMatrix u = rep.word_image(b);
    if (index < 0 || index >= u.rows()) throw ParseError("index out of range");
    std::vector<Complex> psi(u.rows(), Complex(0));
    psi[index] = 1.0;
    HadamardEstimate est = hadamard_test(u, psi, shots, part == "im", seed);

    double p = 0.5 + 0.5 * est.exact;
    double stderr_est = 2.0 * std::sqrt(std::max(p * (1.0 - p), 0.0) / shots);
    json config{{"command", "hadamard"},
                {"word", b.format()},
                {"theta", theta},
                {"shots", shots},
                {"seed", seed},
                {"part", part},
                {"index", index},
                {"allow_nonunitary", allow}};
    json result{{"estimate", est.estimate},
                {"stderr", stderr_est},
                {"exact", est.exact},
                {"zero_count", est.zero_count}};
    json diagnostics{{"d", complex_json(rep.d)},
                     {"unitarity_residual", u.unitarity_residual()}};
    return json{{"config", config}, {"result", result}, {"diagnostics", diagnostics}};
}

json dispatch(const json& req) {
    std::string command = req.value("command", "");
    if (command == "bracket") return cmd_bracket(req);
    if (command == "jones") return cmd_jones(req);
    if (command == "colored") return cmd_colored(req);
    if (command == "wrt") return cmd_wrt(req);
    if (command == "fib-rep") return cmd_fib_rep(req);
    if (command == "su2-check") return cmd_su2_check(req);
    if (command == "recoupling-table") return cmd_recoupling_table(req);
    if (command == "hadamard") return cmd_hadamard(req);
    throw ParseError("unknown command \"" + command + "\"");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

ks_context* ks_context_create(void) { return new ks_context(); }

void ks_context_destroy(ks_context* ctx) { delete ctx; }

const char* ks_context_last_error(const ks_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

int ks_run_json(ks_context* ctx, const char* request_json, char** out_json) {
    if (!ctx) return KS_ERROR_INTERNAL;
    if (!request_json || !out_json) {
        ctx->last_error = "null argument";
        return KS_ERROR_INTERNAL;
    }
    try {
        json req = json::parse(request_json);
        json response = dispatch(req);
        *out_json = dup_string(response.dump());
        ctx->last_error.clear();
        return KS_OK;
    } catch (const json::exception& e) {
        ctx->last_error = std::string("request: ") + e.what();
        return KS_ERROR_PARSE;
    } catch (const ParseError& e) {
        ctx->last_error = e.what();
        return KS_ERROR_PARSE;
    } catch (const ResourceCapError& e) {
        ctx->last_error = e.what();
        return KS_ERROR_RESOURCE;
    } catch (const DomainError& e) {
        ctx->last_error = e.what();
        return KS_ERROR_DOMAIN;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return KS_ERROR_INTERNAL;
    }
}

void ks_string_free(char* s) { std::free(s); }

const char* ks_version(void) { return "1.0.0"; }

} // extern "C"
