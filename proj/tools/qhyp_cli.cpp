// qhyp: command-line front end.
//
// Every numeric value is printed as a decimal (mantissa, exponent) pair at
// the requested number of digits.  Exit codes: 0 success, 1 computation
// error, 2 usage or domain error.  Errors go to stderr as one JSON object.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qhyp/analysis.hpp"
#include "qhyp/bwy.hpp"
#include "qhyp/nz_io.hpp"
#include "qhyp/oneloop.hpp"
#include "qhyp/shapes.hpp"

using namespace qhyp;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_digits() {
    if (const char* env = std::getenv("QHYP_DIGITS")) {
        try {
            int d = std::stoi(env);
            if (d >= 10) return d;
        } catch (const std::exception&) {
        }
    }
    return 60;
}

// ---------------------------------------------------------------- options

struct Common {
    int digits = default_digits();
    std::string format = "json";
    std::uint64_t seed = kDefaultNewtonSeed;
};

struct WordOpts {
    std::string word;
    int sign = 1;
};

struct RootOpts {
    long n = 0;
    long a = 1;
    std::string m = "0";  // "k" or "k0:k1" (inclusive)
    std::optional<long> half;
};

struct TraceOpts {
    std::string mode = "streaming";
    int threads = 1;
    bool monitor = false;
};

std::vector<long> parse_m_range(const std::string& s) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) return {std::stol(s)};
        long lo = std::stol(s.substr(0, colon)), hi = std::stol(s.substr(colon + 1));
        if (hi < lo) throw UsageError("empty m range: " + s);
        std::vector<long> out;
        for (long m = lo; m <= hi; ++m) out.push_back(m);
        return out;
    } catch (const std::invalid_argument&) {
        throw UsageError("bad m range: " + s);
    } catch (const std::out_of_range&) {
        throw UsageError("bad m range: " + s);
    }
}

TraceOptions trace_options(const TraceOpts& t) {
    TraceOptions o;
    o.mode = parse_trace_mode(t.mode);
    o.threads = t.threads;
    o.monitor = t.monitor;
    return o;
}

// ---------------------------------------------------------------- output

ojson num(const Real& x, int digits) {
    DecimalString d = to_decimal(x, digits);
    return ojson{{"mantissa", d.mantissa}, {"exponent", d.exponent}};
}

ojson num(const Complex& z, int digits) { return ojson{{"re", num(z.re, digits)}, {"im", num(z.im, digits)}}; }

ojson num(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

bool is_number_leaf(const ojson& j) { return j.is_object() && j.contains("mantissa") && j.contains("exponent"); }

std::string leaf_text(const ojson& j) {
    if (is_number_leaf(j)) {
        std::string m = j["mantissa"].get<std::string>();
        long e = j["exponent"].get<long>();
        return e == 0 ? m : m + "e" + std::to_string(e);
    }
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

// Flattens nested objects/arrays into dotted keys; number leaves stay whole.
void flatten(const ojson& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (is_number_leaf(j) || !(j.is_object() || j.is_array())) {
        out.emplace_back(prefix, leaf_text(j));
        return;
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else {
        for (size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// Result layout: {"command", "params", "rows": [...], "summary": {...}}.
// CSV prints one line per row with a header, followed by the summary as key,value lines.
void emit(const ojson& result, const std::string& format) {
    if (format == "json") {
        std::cout << result.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> flat;
    if (format == "plain") {
        flatten(result, "", flat);
        for (auto& [k, v] : flat) std::cout << k << " = " << v << "\n";
        return;
    }
    // csv
    const ojson& rows = result["rows"];
    if (!rows.empty()) {
        std::vector<std::pair<std::string, std::string>> head;
        flatten(rows[0], "", head);
        for (size_t i = 0; i < head.size(); ++i) std::cout << (i ? "," : "") << csv_field(head[i].first);
        std::cout << "\n";
        for (const ojson& r : rows) {
            std::vector<std::pair<std::string, std::string>> f;
            flatten(r, "", f);
            for (size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << csv_field(f[i].second);
            std::cout << "\n";
        }
    }
    if (result.contains("summary")) {
        flatten(result["summary"], "", flat);
        for (auto& [k, v] : flat) std::cout << csv_field(k) << "," << csv_field(v) << "\n";
    }
}

ojson base(const std::string& command, const Common& c) {
    ojson r;
    r["command"] = command;
    r["params"] = ojson{{"digits", c.digits}};
    r["rows"] = ojson::array();
    return r;
}

// ---------------------------------------------------------------- commands

MonodromyWord require_word(const WordOpts& w) {
    if (w.word.empty()) throw UsageError("--word is required");
    return parse_word(w.word, w.sign);
}

void cmd_nz(const Common& c, const WordOpts& wo, const std::string& raw_path, const std::string& eliminate,
            int drop_edge, const std::string& curve, bool halve, bool with_shapes) {
    PrecisionContext ctx(c.digits);
    ScopedPrecision sp(ctx);
    ojson r = base("nz", c);
    NZDatum nz;
    std::optional<CVec> zp;
    if (!raw_path.empty()) {
        RawGluingData raw = load_raw_file(raw_path);
        nz = reduce_gluing(raw, parse_shape_kind(eliminate), drop_edge, parse_curve(curve), halve);
        r["params"]["raw"] = raw_path;
        if (with_shapes) zp = solve_nz(nz, ctx, c.seed).zp;
    } else {
        MonodromyWord w = require_word(wo);
        r["params"]["word"] = w.format();
        r["params"]["rotation"] = w.rotation;
        nz = nz_longitude(w);
        if (with_shapes) zp = solve_geometric(w, ctx, c.seed).zp;
    }
    ojson d = ojson::parse(nz_to_json(nz, zp ? &*zp : nullptr, c.digits));
    if (c.format == "csv") {
        // one row per equation: A row, B row, nu
        for (int i = 0; i < nz.N; ++i)
            r["rows"].push_back(ojson{{"i", i + 1}, {"A", nz.A[i]}, {"B", nz.B[i]}, {"nu", nz.nu[i]}});
        r["summary"] = ojson{{"N", nz.N}, {"d", nz.d}, {"f", nz.f}, {"fp", nz.fp}, {"curve", curve_name(nz.curve)}};
    } else {
        r["datum"] = d;
    }
    emit(r, c.format);
}

void cmd_shapes(const Common& c, const WordOpts& wo, const std::string& datum_path) {
    PrecisionContext ctx(c.digits);
    ScopedPrecision sp(ctx);
    ojson r = base("shapes", c);
    r["params"]["seed"] = c.seed;
    ShapeSolution sol;
    NZDatum nz;
    if (!datum_path.empty()) {
        NZFile f = load_nz_file(datum_path);
        nz = f.datum;
        sol = solve_nz(nz, ctx, c.seed);
        r["params"]["datum"] = datum_path;
    } else {
        MonodromyWord w = require_word(wo);
        r["params"]["word"] = w.format();
        sol = solve_geometric(w, ctx, c.seed);
        nz = nz_longitude(w);
    }
    for (size_t i = 0; i < sol.z.size(); ++i) {
        ojson row{{"i", i + 1}, {"zp", num(sol.zp[i], c.digits)}, {"z", num(sol.z[i], c.digits)}};
        if (i < sol.zpp.size()) row["zpp"] = num(sol.zpp[i], c.digits);
        r["rows"].push_back(row);
    }
    ojson s{{"residual", num(sol.residual, 6)}, {"attempts", sol.attempts}};
    if (!sol.word.empty()) {
        s["volume"] = num(volume(sol), c.digits);
        s["shape_relation_defect"] = num(shape_relation_defect(sol), 6);
    }
    s["tau_one"] = num(tau_one(nz, sol), c.digits);
    r["summary"] = s;
    emit(r, c.format);
}

void cmd_bwy(const Common& c, const WordOpts& wo, const RootOpts& ro, const TraceOpts& to,
             const std::string& method) {
    PrecisionContext ctx(c.digits);
    ScopedPrecision sp(ctx);
    MonodromyWord w = require_word(wo);
    if (ro.n <= 0) throw UsageError("--n must be positive");
    std::vector<long> ms = parse_m_range(ro.m);
    ojson r = base("bwy", c);
    r["params"].update(ojson{{"word", w.format()}, {"n", ro.n}, {"a", ro.a}, {"m", ro.m}});
    if (ro.n % 2 == 0) {
        if (!ro.half) throw UsageError("even n requires --half (exponent h with q^{1/2} = e(h/(2n)))");
        r["params"]["half"] = *ro.half;
        r["params"]["method"] = "even";
        r["summary"] = ojson{{"ambiguity", 12 * ro.n}, {"root_convention", kEvenRootConvention}};
        ShapeSolution sol = solve_geometric(w, ctx, c.seed);
        RootOfUnity q(ro.a, ro.n, *ro.half);
        for (long m : ms) {
            Complex t = bwy_even(w, sol, q, m, ctx);
            r["rows"].push_back(ojson{{"m", m}, {"value", num(t, c.digits)}, {"abs", num(abs(t), c.digits)}});
        }
        emit(r, c.format);
        return;
    }
    bool closed = method == "closed" || (method == "auto" && w.letters == "LR" && w.sign == 1);
    if (method != "auto" && method != "closed" && method != "trace")
        throw UsageError("--method must be auto, closed or trace");
    if (method == "closed" && !(w.letters == "LR" && w.sign == 1))
        throw DomainError("the closed form is only available for the word LR");
    r["params"]["method"] = closed ? "closed" : "trace";
    if (!closed) r["params"]["mode"] = to.mode;
    r["summary"] = ojson{{"ambiguity", 12 * ro.n}, {"root_convention", kRootConvention}};
    if (closed) {
        for (long m : ms) {
            Complex t = lr_closed_form(ro.n, ro.a, m, ctx);
            r["rows"].push_back(ojson{{"m", m}, {"value", num(t, c.digits)}, {"abs", num(abs(t), c.digits)}});
        }
    } else {
        ShapeSolution sol = solve_geometric(w, ctx, c.seed);
        TraceOptions topt = trace_options(to);
        for (long m : ms) {
            BwyResult b = bwy_invariant(w, sol, ro.n, ro.a, m, ctx, topt);
            r["rows"].push_back(ojson{{"m", m},
                                      {"value", num(b.value, c.digits)},
                                      {"abs", num(abs(b.value), c.digits)},
                                      {"omega_turn", num(b.omega)},
                                      {"precision_warning", b.precision_warning}});
        }
    }
    emit(r, c.format);
}

void cmd_oneloop(const Common& c, const WordOpts& wo, const RootOpts& ro, const TraceOpts& to,
                 const std::string& datum_path, bool allow_large) {
    PrecisionContext ctx(c.digits);
    ScopedPrecision sp(ctx);
    if (ro.n <= 0 || ro.n % 2 == 0) throw DomainError("oneloop: n must be odd and positive");
    std::vector<long> ms = parse_m_range(ro.m);
    ojson r = base("oneloop", c);
    r["params"].update(ojson{{"n", ro.n}, {"a", ro.a}, {"m", ro.m}});
    r["summary"] = ojson{{"ambiguity", 12 * ro.n}};
    if (!datum_path.empty()) {
        // zeta = e(a/n) for a datum
        NZFile f = load_nz_file(datum_path);
        CVec zp, z;
        if (f.zp) {
            zp = *f.zp;
            z.resize(zp.size());
            for (size_t i = 0; i < zp.size(); ++i) z[i] = Complex(1) - Complex(1) / zp[i];
        } else {
            ShapeSolution sol = solve_nz(f.datum, ctx, c.seed);
            zp = sol.zp;
            z = sol.z;
        }
        r["params"]["datum"] = datum_path;
        r["params"]["path"] = "state_sum";
        Complex t1 = tau_one(f.datum, zp, z);
        r["summary"]["tau_one"] = num(t1, c.digits);
        for (long m : ms) {
            StateSumResult s = state_sum(f.datum, zp, z, RootOfUnity(ro.a, ro.n), m, ctx, allow_large);
            r["rows"].push_back(
                ojson{{"m", m}, {"ratio", num(s.ratio, c.digits)}, {"tau", num(s.tau, c.digits)}, {"abs", num(abs(s.tau), c.digits)}});
        }
    } else {
        // zeta = q^2 with q = e(a/n) for a word
        MonodromyWord w = require_word(wo);
        r["params"]["word"] = w.format();
        r["params"]["path"] = "trace";
        r["params"]["mode"] = to.mode;
        ShapeSolution sol = solve_geometric(w, ctx, c.seed);
        Complex t1 = tau_one(nz_longitude(w), sol);
        r["summary"]["tau_one"] = num(t1, c.digits);
        TraceOptions topt = trace_options(to);
        for (long m : ms) {
            bool warn = false;
            Complex ratio = one_loop_ratio_via_trace(w, sol, ro.n, ro.a, m, ctx, topt, &warn);
            Complex tau = ratio * t1;
            r["rows"].push_back(ojson{{"m", m},
                                      {"ratio", num(ratio, c.digits)},
                                      {"tau", num(tau, c.digits)},
                                      {"abs", num(abs(tau), c.digits)},
                                      {"precision_warning", warn}});
        }
    }
    emit(r, c.format);
}

void cmd_fourier(const Common& c, const RootOpts& ro) {
    PrecisionContext ctx(c.digits);
    ScopedPrecision sp(ctx);
    FourierCheckResult f = fourier_check_41(ro.n, ro.a, ctx);
    ojson r = base("fourier-check", c);
    r["params"].update(ojson{{"n", ro.n}, {"a", ro.a}});
    for (const FourierRow& row : f.rows)
        r["rows"].push_back(ojson{{"m", row.m},
                                  {"lhs", num(row.lhs, c.digits)},
                                  {"rhs", num(row.rhs, c.digits)},
                                  {"root_index", row.root_index},
                                  {"residual", num(row.residual, 6)},
                                  {"zero_match", row.zero_match},
                                  {"ok", row.ok}});
    r["summary"] = ojson{{"max_residual", num(f.max_residual, 6)},
                         {"unitarity_residual", num(f.unitarity_residual, 6)},
                         {"passed", f.passed}};
    emit(r, c.format);
    if (!f.passed) throw ComputationError("fourier check failed");
}

void cmd_asym(const Common& c, const WordOpts& wo, long n0, long n1, long m, int terms, const TraceOpts& to,
              const std::string& cache) {
    PrecisionContext ctx(c.digits);
    ScopedPrecision sp(ctx);
    MonodromyWord w = require_word(wo);
    bool lr = w.letters == "LR" && w.sign == 1, llr = w.letters == "LLR" && w.sign == 1;
    if (!lr && !llr) throw DomainError("asym: supported words are LR and LLR");
    if (llr && m != 0) throw DomainError("asym: LLR samples are only defined for m = 0");
    if (n0 % 2 == 0 || n1 % 2 == 0 || n1 <= n0) throw UsageError("asym: need odd n0 < n1");

    std::map<long, Complex> have;
    if (!cache.empty() && std::filesystem::exists(cache))
        for (const CachedSample& s : load_samples(cache))
            if (s.a == 1 && s.m == m) have[s.n] = s.value;
    TraceOptions topt = trace_options(to);
    std::vector<Sample> samples;
    std::vector<CachedSample> rows;
    for (long n = n0; n <= n1; n += 2) {
        auto it = have.find(n);
        Complex v = it != have.end() ? it->second : (lr ? lr_sample(n, m, ctx) : llr_sample(n, ctx, topt));
        samples.push_back({n, v});
        rows.push_back({n, 1, m, v});
    }
    if (!cache.empty()) save_samples(cache, rows, c.digits);

    ojson r = base("asym", c);
    r["params"].update(ojson{{"word", w.format()}, {"n0", n0}, {"n1", n1}, {"m", m}, {"terms", terms}});
    if (lr && m == 0) {
        AsymptoticReport rep = recover_lr(samples, terms, ctx);
        for (const RecoveredCoefficient& k : rep.recovered)
            r["rows"].push_back(ojson{{"k", k.k},
                                      {"c", num(rep.fit.coeffs[k.k].value, 20)},
                                      {"spread", num(rep.fit.coeffs[k.k].spread, 3)},
                                      {"cleared", num(k.cleared, 20)},
                                      {"nearest", k.nearest.str()},
                                      {"distance", num(k.distance, 3)},
                                      {"recovered", k.recovered}});
        r["summary"] = ojson{{"v", num(rep.fit.v_fit, 20)}, {"v_error", num(rep.v_error, 3)}};
    } else if (llr) {
        AsymptoticReport rep = recover_llr(samples, terms, ctx);
        for (const RecoveredCoefficient& k : rep.recovered)
            r["rows"].push_back(ojson{{"k", k.k},
                                      {"c", num(rep.fit.coeffs[k.k].value, 20)},
                                      {"spread", num(rep.fit.coeffs[k.k].spread, 3)},
                                      {"cleared", num(k.cleared, 20)},
                                      {"nearest", k.nearest.str()},
                                      {"distance", num(k.distance, 3)},
                                      {"recovered", k.recovered}});
        r["summary"] = ojson{{"v", num(rep.fit.v_fit, 20)}, {"v_error", num(rep.v_error, 3)}};
    } else {
        // descendants: plain fit with the LR growth rate
        ExtrapolationOptions eo;
        eo.terms = terms;
        eo.v_reference = lr_growth_rate(ctx);
        AsymptoticFit fit = extrapolate(samples, eo);
        for (size_t k = 0; k < fit.coeffs.size(); ++k)
            r["rows"].push_back(ojson{{"k", k},
                                      {"c", num(fit.coeffs[k].value, 20)},
                                      {"spread", num(fit.coeffs[k].spread, 3)},
                                      {"converged", fit.coeffs[k].converged}});
        r["summary"] = ojson{{"v", num(fit.v_fit, 20)}};
    }
    emit(r, c.format);
}

void cmd_recurrence(const Common& c, const RootOpts& ro, const std::string& kind) {
    PrecisionContext ctx(c.digits);
    ScopedPrecision sp(ctx);
    if (kind != "sigma" && kind != "T" && kind != "both") throw UsageError("--kind must be sigma, T or both");
    ojson r = base("recurrence-check", c);
    r["params"].update(ojson{{"n", ro.n}, {"a", ro.a}, {"kind", kind}});
    auto add = [&](const char* name, const RecurrenceResult& res) {
        r["rows"].push_back(ojson{{"recurrence", name}, {"max_residual", num(res.max_residual, 6)}, {"skipped", res.skipped}});
    };
    if (kind != "T") add("sigma", verify_sigma_recurrence(ro.n, ro.a, ctx));
    if (kind != "sigma") add("T", verify_T_recurrence(ro.n, ro.a, ctx));
    emit(r, c.format);
}

void error_out(const std::string& code, const std::string& message) {
    ojson e{{"error", {{"code", code}, {"message", message}}}};
    std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum invariants of once-punctured torus bundles at roots of unity"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--digits", common.digits, "decimal digits (default: $QHYP_DIGITS or 60)")->check(CLI::Range(10, 100000));
        s->add_option("--format", common.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
        s->add_option("--seed", common.seed, "seed for Newton restarts");
    };
    WordOpts wo;
    auto add_word = [&](CLI::App* s) {
        s->add_option("--word", wo.word, "monodromy word over {L, R}, optional leading '-'");
        s->add_option("--sign", wo.sign, "sign of the monodromy (+1 or -1)")->check(CLI::IsMember({-1, 1}));
    };
    RootOpts ro;
    auto add_root = [&](CLI::App* s, bool with_m) {
        s->add_option("--n", ro.n, "order of the root of unity")->required();
        s->add_option("--a", ro.a, "numerator, gcd(a, n) = 1");
        if (with_m) s->add_option("--m", ro.m, "descendant index k or range k0:k1");
    };
    TraceOpts to;
    auto add_trace = [&](CLI::App* s) {
        s->add_option("--mode", to.mode, "trace mode")->check(CLI::IsMember({"dense", "streaming", "fft"}));
        s->add_option("--threads", to.threads, "worker threads")->check(CLI::PositiveNumber);
        s->add_flag("--monitor", to.monitor, "recompute at lower precision and warn on drift");
    };

    std::string raw_path, eliminate = "zpp", curve = "longitude", datum_path, method = "auto", cache, kind = "both";
    int drop_edge = 2, terms = 5;
    bool halve = false, with_shapes = false, allow_large = false;
    long n0 = 501, n1 = 699, asym_m = 0;

    CLI::App* nz = app.add_subcommand("nz", "Neumann-Zagier datum of a word or of raw gluing data");
    add_common(nz);
    add_word(nz);
    nz->add_option("--raw", raw_path, "raw gluing JSON file");
    nz->add_option("--eliminate", eliminate, "shape eliminated from raw data (z, zp, zpp)");
    nz->add_option("--drop-edge", drop_edge, "edge equation dropped (1-based)");
    nz->add_option("--curve", curve, "peripheral row kept (longitude, meridian)");
    nz->add_flag("--halve", halve, "halve the longitude row");
    nz->add_flag("--shapes", with_shapes, "include the geometric shapes");

    CLI::App* shapes = app.add_subcommand("shapes", "geometric shapes, volume and tau(1)");
    add_common(shapes);
    add_word(shapes);
    shapes->add_option("--datum", datum_path, "NZ datum JSON file");

    CLI::App* bwy = app.add_subcommand("bwy", "BWY invariant T_m(q) at q = e(a/n)");
    add_common(bwy);
    add_word(bwy);
    add_root(bwy, true);
    add_trace(bwy);
    bwy->add_option("--half", ro.half, "even n: q^{1/2} = e(half/(2n)), half = a mod n");
    bwy->add_option("--method", method, "auto, closed (LR only) or trace");

    CLI::App* one = app.add_subcommand("oneloop", "1-loop invariant: word at zeta = e(2a/n), or datum at e(a/n)");
    add_common(one);
    add_word(one);
    add_root(one, true);
    add_trace(one);
    one->add_option("--datum", datum_path, "NZ datum JSON file (state sum path)");
    one->add_flag("--allow-large", allow_large, "lift the n^N size guard of the state sum");

    CLI::App* four = app.add_subcommand("fourier-check", "DFT of T_LR against the 4_1 meridian invariants");
    add_common(four);
    add_root(four, false);

    CLI::App* asym = app.add_subcommand("asym", "asymptotic series from samples at odd n in [n0, n1]");
    add_common(asym);
    add_word(asym);
    add_trace(asym);
    asym->add_option("--n0", n0, "first odd n");
    asym->add_option("--n1", n1, "last odd n");
    asym->add_option("--m", asym_m, "descendant index (LR only)");
    asym->add_option("--terms", terms, "number of series coefficients")->check(CLI::Range(1, 20));
    asym->add_option("--cache", cache, "sample cache file, read and rewritten");

    CLI::App* rec = app.add_subcommand("recurrence-check", "q-difference recurrences of sigma and T_LR");
    add_common(rec);
    add_root(rec, false);
    rec->add_option("--kind", kind, "sigma, T or both");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_out("usage", e.what());
        return 2;
    }

    try {
        if (*nz) cmd_nz(common, wo, raw_path, eliminate, drop_edge, curve, halve, with_shapes);
        else if (*shapes) cmd_shapes(common, wo, datum_path);
        else if (*bwy) cmd_bwy(common, wo, ro, to, method);
        else if (*one) cmd_oneloop(common, wo, ro, to, datum_path, allow_large);
        else if (*four) cmd_fourier(common, ro);
        else if (*asym) cmd_asym(common, wo, n0, n1, asym_m, terms, to, cache);
        else if (*rec) cmd_recurrence(common, ro, kind);
    } catch (const UsageError& e) {
        error_out("usage", e.what());
        return 2;
    } catch (const DomainError& e) {
        error_out("domain", e.what());
        return 2;
    } catch (const ComputationError& e) {
        error_out("computation", e.what());
        return 1;
    } catch (const std::exception& e) {
        error_out("internal", e.what());
        return 1;
    }
    return 0;
}
