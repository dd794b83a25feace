// hahnexp: batch front end for the exact Hahn-series exponential library.
//
// Commands:
//   hahnexp eval <op> <files...>     apply an operation to parsed elements
//   hahnexp check <suite...>         run named check suites
//   hahnexp demo <name>              reproduce a worked construction
//
// Reports are JSON, one object per line. Exit codes: 0 all good, 1 check
// failure (or domain error in eval), 2 parse/config error, 3 undecided
// comparisons at the configured precision.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hahnexp/errors.hpp"
#include "hahnexp/exp_field.hpp"
#include "hahnexp/json_io.hpp"
#include "hahnexp/suites.hpp"

using namespace hahnexp;

namespace {

SeriesElement load_series(const std::string& path, bool lenient) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return series_from_json(j, lenient);
}

// cutoff argument: either "p/q" (meaning (p/q) * e_0) or a Hahn element in
// its JSON form
HahnElement parse_cutoff(const std::string& text) {
    if (auto q = parse_rational(text))
        return HahnElement::monomial(ChainPoint(0), Scalar(*q));
    try {
        return hahn_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cutoff: ") + e.what());
    }
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

int run_eval(const std::string& op, const std::vector<std::string>& files,
             bool lenient, const HahnElement& cutoff, unsigned degree) {
    std::vector<SeriesElement> args;
    for (const auto& f : files) args.push_back(load_series(f, lenient));
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw ParseError(op + " expects " + std::to_string(n) + " element(s)");
    };

    if (op == "add" || op == "sub" || op == "mul") {
        need(2);
        SeriesElement r = op == "add"   ? series_add(args[0], args[1])
                          : op == "sub" ? series_sub(args[0], args[1])
                                        : series_mul(args[0], args[1]);
        emit(series_to_json(r));
    } else if (op == "cmp") {
        need(2);
        SignDecision d = series_cmp(args[0], args[1]);
        const char* names[] = {"negative", "zero", "positive", "undecided"};
        emit({{"cmp", names[static_cast<int>(d.outcome)]},
              {"precision_reached", rational_to_string(d.precision_reached)}});
        if (!d.decided()) return 3;
    } else if (op == "valuation") {
        need(1);
        SeriesValuation v = series_valuation(args[0]);
        emit(v.is_infinity() ? nlohmann::json{{"valuation", "infinity"}}
                             : nlohmann::json{{"valuation", hahn_to_json(v.exponent())}});
    } else if (op == "invert") {
        need(1);
        emit(series_to_json(series_invert(args[0], cutoff)));
    } else if (op == "root") {
        need(1);
        emit(series_to_json(series_nth_root_positive(args[0], degree, cutoff)));
    } else if (op == "exp") {
        need(1);
        ExpConfig ecfg;
        ecfg.right_cutoff = cutoff;
        emit(series_to_json(exp_full(args[0], ecfg)));
    } else if (op == "log") {
        need(1);
        ExpConfig ecfg;
        ecfg.right_cutoff = cutoff;
        emit(series_to_json(log_full(args[0], ecfg)));
    } else if (op == "derivative") {
        need(1);
        emit(series_to_json(formal_derivative(args[0])));
    } else if (op == "residue") {
        need(1);
        emit({{"residue", scalar_to_string(series_residue(args[0]))}});
    } else {
        throw ParseError("unknown op: " + op +
                         " (add sub mul cmp valuation invert root exp log "
                         "derivative residue)");
    }
    return 0;
}

int run_check(const std::vector<std::string>& names, const SuiteConfig& cfg) {
    bool any_fail = false, any_undecided = false;
    for (const auto& name : names) {
        CheckReport report = run_suite(name, cfg);
        emit(report.to_json());
        any_fail = any_fail || !report.failures.empty();
        any_undecided = any_undecided || report.undecided > 0;
    }
    return any_fail ? 1 : any_undecided ? 3 : 0;
}

int run_demo(const std::string& name) {
    if (name == "lifting") {
        // lift a breakpoint automorphism of the chain to the Hahn group and
        // watch it commute with the valuation
        PLAutomorphism sigma({Rational(0)}, {Rational(1), Rational(2)}, Rational(1));
        HahnElement s(std::vector<HahnElement::Term>{
            {ChainPoint(-1), Scalar(Rational(3, 2))},
            {ChainPoint(1), Scalar(-2)}});
        HahnElement ts = lift_chain_automorphism(sigma, s);
        emit({{"demo", "lifting"},
              {"sigma", pl_to_json(sigma)},
              {"s", hahn_to_json(s)},
              {"tau_s", hahn_to_json(ts)},
              {"v_of_s", rational_to_string(hahn_valuation(s).point().value)},
              {"v_of_tau_s", rational_to_string(hahn_valuation(ts).point().value)},
              {"sigma_of_v",
               rational_to_string(sigma.apply(hahn_valuation(s).point()).value)}});
        return 0;
    }
    if (name == "roundtrip") {
        // group exponential -> contraction -> induced exponential, and back
        GroupExponential h(GroupIsoMode::Strong);
        std::vector<HahnElement> sample;
        for (long g = -2; g <= 2; ++g)
            sample.push_back(h.apply(ChainPoint(g)));
        Contraction chi = chi_from_h(h);
        InducedExponentialTable table = h_from_chi(chi, sample);
        nlohmann::json pins = nlohmann::json::array();
        for (const auto& [cls, img] : table.pins)
            pins.push_back({{"class", rational_to_string(cls.value)},
                            {"h_chi", hahn_to_json(img)},
                            {"h", hahn_to_json(h.apply(cls))},
                            {"equal", hahn_cmp(img, h.apply(cls)).is_zero()}});
        emit({{"demo", "roundtrip"}, {"table", pins}});
        return 0;
    }
    throw ParseError("unknown demo: " + name + " (lifting roundtrip)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for generalized power series fields with "
                 "an assembled exponential"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "apply an operation to elements");
    std::string op;
    std::vector<std::string> files;
    bool lenient = false;
    std::string cutoff_text = "8";
    unsigned degree = 2;
    eval->add_option("op", op, "operation name")->required();
    eval->add_option("files", files, "element files (series JSON)");
    eval->add_flag("--lenient", lenient,
                   "canonicalize unsorted/zero-coefficient input instead of rejecting");
    eval->add_option("--cutoff", cutoff_text, "truncation cutoff (rational or Hahn JSON)");
    eval->add_option("--degree", degree, "root degree for the root op");

    // check
    auto* check = app.add_subcommand("check", "run check suites");
    std::vector<std::string> suites;
    SuiteConfig cfg;
    std::string middle = "symbolic", check_cutoff = "8", precision_text;
    check->add_option("suites", suites, "suite names (or 'all')")->required();
    check->add_option("--seed", cfg.seed, "random seed (default 20260824)");
    check->add_option("--samples", cfg.samples, "sample count (0 = suite default)");
    check->add_option("--cutoff", check_cutoff, "truncation cutoff (rational or Hahn JSON)");
    check->add_option("--precision", precision_text,
                      "refinement cap width as a rational (default 1/2^64)");
    check->add_option("--middle", middle, "middle exponential: symbolic | zero_only");

    // demo
    auto* demo = app.add_subcommand("demo", "reproduce a worked construction");
    std::string demo_name;
    demo->add_option("name", demo_name, "demo name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(op, files, lenient, parse_cutoff(cutoff_text), degree);
        if (check->parsed()) {
            cfg.cutoff = parse_cutoff(check_cutoff);
            if (const char* env = std::getenv("HAHNEXP_PRECISION"))
                if (precision_text.empty()) precision_text = env;
            if (!precision_text.empty()) {
                auto p = parse_rational(precision_text);
                if (!p || *p <= 0) throw ParseError("bad precision: " + precision_text);
                cfg.precision = *p;
            }
            if (middle == "symbolic")
                cfg.middle = MiddleMode::Symbolic;
            else if (middle == "zero_only")
                cfg.middle = MiddleMode::ZeroOnly;
            else
                throw ParseError("bad middle mode: " + middle);
            if (suites.size() == 1 && suites[0] == "all") suites = suite_names();
            return run_check(suites, cfg);
        }
        return run_demo(demo_name);
    } catch (const ParseError& e) {
        emit({{"error", e.code()}, {"message", e.what()}});
        return 2;
    } catch (const UndecidedSign& e) {
        emit({{"error", e.code()}, {"message", e.what()}});
        return 3;
    } catch (const Error& e) {
        emit({{"error", e.code()}, {"message", e.what()}});
        return 1;
    }
}
