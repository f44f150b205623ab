// wzeta: exact reduction of rank-3 Witten-type lattice sums to combinations
// of multiple zeta values, with numeric cross-checks.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wzeta/goldens.hpp"
#include "wzeta/record.hpp"

namespace {

using namespace wzeta;

struct GlobalFlags {
    bool json = false;
    bool trace = false;
    int precision = 15;
    std::string cachePath;
};

std::string fmt_real(const Real& v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

std::string args_str(const std::vector<long long>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a[i];
    return os.str();
}

// shared per-process evaluation memo (indices repeat heavily across a table)
const Real& cached_eval(const MzvIndex& idx) {
    static std::map<MzvIndex, Real> memo;
    auto it = memo.find(idx);
    if (it == memo.end()) it = memo.emplace(idx, eval_mzv(idx).value).first;
    return it->second;
}

Real combo_value(const MzvCombination& c) {
    Real v = 0;
    for (const auto& [mono, q] : c.terms()) {
        Real p = eval_rational(q);
        for (const auto& f : mono.factors) p *= cached_eval(f.idx);
        v += p;
    }
    return v;
}

int cmd_reduce(const GlobalFlags& g, RecordKind kind, const std::vector<long long>& args) {
    std::optional<JsonlCache> cache;
    if (!g.cachePath.empty()) cache.emplace(g.cachePath);

    ReductionRecord rec;
    bool fromCache = false;
    if (cache) {
        if (auto hit = cache->find(kind, args)) {
            rec = std::move(*hit);
            fromCache = true;
        }
    }
    if (!fromCache) {
        if (kind == RecordKind::MT) {
            MtArgs a;
            a.parts.assign(args.begin(), args.end() - 1);
            a.outer = args.back();
            rec = make_record_mt(a);
        } else {
            WittenArgs wa;
            wa.kind = kind == RecordKind::SL4 ? WittenKind::SL4 : WittenKind::ZETA3;
            wa.s = args;
            rec = make_record(wa, true);
        }
        if (cache) cache->store(rec);
    }

    if (g.json) {
        std::cout << record_emit_json(rec, g.precision, g.trace).dump(2) << "\n";
        return 0;
    }
    NumericResult n = eval_combo(rec.combo);
    std::cout << "kind: " << kind_name(rec.kind) << "\n";
    std::cout << "args: " << args_str(rec.args) << "\n";
    std::cout << "case: " << rec.caseName << "\n";
    std::cout << "regular: " << (rec.regular ? "true" : "false") << "\n";
    std::cout << "combination: " << combo_pretty(rec.combo) << "\n";
    std::cout << "value: " << fmt_real(n.value, g.precision) << "\n";
    std::cout << "errorBound: " << fmt_real(n.errorBound, 3) << "\n";
    std::cout << "method: " << n.method << "\n";
    if (g.trace) {
        for (const auto& e : rec.trace) std::cout << "trace: " << e.rule << "(" << args_str(e.args) << ")\n";
    }
    return 0;
}

int cmd_table(const GlobalFlags& g, long long weight, bool regularOnly, const std::string& outPath) {
    auto tuples = enumerate_sl4_weight(weight);
    struct Row {
        Sl4Tuple t;
        RegularityClass cls;
        Real value;
        int group = -1;
    };
    std::vector<Row> rows;
    detail::ReduceContext ctx;  // one memo across the whole table
    for (const auto& t : tuples) {
        RegularityClass cls = classify(t);
        if (regularOnly && cls != RegularityClass::Regular) continue;
        MzvCombination combo = detail::reduce_sl4_inner(t, ctx);
        rows.push_back(Row{t, cls, combo_value(combo)});
    }
    // group numerically equal values
    std::vector<Real> reps;
    for (auto& r : rows) {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            Real d = r.value - reps[i];
            if (d < 0) d = -d;
            if (d < Real("1e-9")) {
                r.group = static_cast<int>(i);
                break;
            }
        }
        if (r.group < 0) {
            r.group = static_cast<int>(reps.size());
            reps.push_back(r.value);
        }
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!outPath.empty()) {
        file.open(outPath);
        if (!file) {
            std::cerr << "error: cannot open " << outPath << "\n";
            return 1;
        }
        out = &file;
    }

    if (g.json) {
        Json j;
        j["weight"] = weight;
        j["regularOnly"] = regularOnly;
        Json list = Json::array();
        for (const auto& r : rows) {
            Json e;
            e["args"] = std::vector<long long>(r.t.begin(), r.t.end());
            e["case"] = regularity_name(r.cls);
            e["regular"] = r.cls == RegularityClass::Regular;
            e["value"] = fmt_real(r.value, g.precision);
            e["group"] = r.group;
            list.push_back(std::move(e));
        }
        j["tuples"] = std::move(list);
        j["tupleCount"] = rows.size();
        j["distinctValueCount"] = reps.size();
        *out << j.dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            *out << "(";
            for (std::size_t i = 0; i < 6; ++i) *out << (i ? "," : "") << r.t[i];
            *out << ") " << std::left << std::setw(8) << regularity_name(r.cls) << " "
                 << fmt_real(r.value, g.precision) << "\n";
        }
        *out << "weight " << weight << ": " << rows.size() << " tuples, " << reps.size()
             << " distinct values\n";
    }
    return 0;
}

int cmd_verify_paper(const GlobalFlags& g, double tolerance) {
    const Real tol(tolerance);
    int failures = 0;
    auto report = [&](const std::string& label, const Real& got, const Real& want) {
        Real d = got - want;
        if (d < 0) d = -d;
        const bool ok = d <= tol;
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << label << ": got " << fmt_real(got, g.precision)
                  << " want " << fmt_real(want, g.precision) << " |diff| " << fmt_real(d, 3) << "\n";
    };

    detail::ReduceContext ctx;
    for (const auto& e : weight4_census()) {
        MzvCombination combo = detail::reduce_sl4_inner(e.tuple, ctx);
        std::ostringstream label;
        label << "census (";
        for (std::size_t i = 0; i < 6; ++i) label << (i ? "," : "") << e.tuple[i];
        label << ")";
        report(label.str(), combo_value(combo), census_entry_value(e));
    }
    for (const auto& gd : paper_goldens()) {
        WittenArgs wa{gd.kind, gd.args};
        ReductionRecord rec = make_record(wa, false);
        Real got = combo_value(rec.combo);
        std::string base = std::string(kind_name(rec.kind)) + " (" + args_str(gd.args) + ")";
        if (gd.decimal) report(base + " decimal", got, Real(gd.decimal));
        if (!gd.closed.empty()) report(base + " closed form", got, eval_products(gd.closed));
    }
    std::cout << (failures ? "verification FAILED: " : "verification passed: ")
              << failures << " failing case(s)\n";
    return failures ? 3 : 0;
}

int cmd_verify_oracle(const GlobalFlags& g, std::size_t samples, std::uint64_t seed, double tolerance) {
    const Real tol(tolerance);
    int failures = 0;
    auto sampleSet = sample_convergent(samples, seed);
    for (const auto& wa : sampleSet) {
        ReductionRecord rec = make_record(wa, false);
        Real red = combo_value(rec.combo);

        std::vector<FactoredTerm> factors;
        if (wa.kind == WittenKind::SL4) {
            Sl4Tuple t;
            for (std::size_t i = 0; i < 6; ++i) t[i] = wa.s[i];
            factors = zeta3_factors(sl4_embed(t));
        } else {
            Zeta3Tuple t;
            for (std::size_t i = 0; i < 7; ++i) t[i] = wa.s[i];
            factors = zeta3_factors(t);
        }
        NumericResult orc = oracle_auto(factors, 3, tolerance / 4, 256, 2048);
        Real d = red - orc.value;
        if (d < 0) d = -d;
        const bool ok = d <= tol;
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << kind_name(wa.kind == WittenKind::SL4 ? RecordKind::SL4
                                                                                      : RecordKind::ZETA3)
                  << " (" << args_str(wa.s) << "): reduced " << fmt_real(red, 12) << " oracle "
                  << fmt_real(orc.value, 12) << " |diff| " << fmt_real(d, 3) << "\n";
    }
    std::cout << (failures ? "verification FAILED: " : "verification passed: ")
              << failures << " failing case(s) of " << sampleSet.size() << "\n";
    return failures ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact reduction of rank-3 Witten-type lattice sums to multiple zeta values"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_flag("--json", g.json, "emit JSON records");
    app.add_flag("--trace", g.trace, "include the applied rewrite rules");
    app.add_option("--precision", g.precision, "printed digits (default 15)")
        ->check(CLI::Range(1, 45));
    app.add_option("--cache", g.cachePath, "JSONL reduction cache path (or env WZETA_CACHE)");

    auto* reduce = app.add_subcommand("reduce", "reduce one value to a zeta combination");
    reduce->require_subcommand(1);
    reduce->fallthrough();
    std::vector<long long> sl4Args, z3Args, mtArgs;
    auto* rsl4 = reduce->add_subcommand("sl4", "six nonnegative exponents on m1 m2 m3 m1+m2 m2+m3 m1+m2+m3");
    rsl4->fallthrough();
    rsl4->add_option("s", sl4Args, "s1 ... s6")->required()->expected(6)->check(CLI::NonNegativeNumber);
    auto* rz3 = reduce->add_subcommand("zeta3", "seven nonnegative exponents (sixth slot on m1+m3)");
    rz3->fallthrough();
    rz3->add_option("s", z3Args, "s1 ... s7")->required()->expected(7)->check(CLI::NonNegativeNumber);
    auto* rmt = reduce->add_subcommand("mt", "one to three part exponents followed by the outer exponent");
    rmt->fallthrough();
    rmt->add_option("s", mtArgs, "p1 [p2 [p3]] outer")->required()->expected(2, 4)->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("table", "enumerate and reduce all convergent 6-slot tuples of a weight");
    table->fallthrough();
    long long weight = 4;
    bool regularOnly = false;
    std::string outPath;
    table->add_option("--weight", weight, "total exponent weight")->required()->check(CLI::Range(4LL, 64LL));
    table->add_flag("--regular-only", regularOnly, "skip the irregular families");
    table->add_option("--out", outPath, "write the table to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    verify->fallthrough();
    double tolerance = 1e-8;
    auto* vpaper = verify->add_subcommand("paper", "check reductions against the published reference values");
    vpaper->fallthrough();
    vpaper->add_option("--tolerance", tolerance, "numeric comparison tolerance (default 1e-8)");
    std::size_t samples = 200;
    std::uint64_t seed = 7;
    double oracleTol = 1e-3;
    auto* voracle = verify->add_subcommand("oracle", "cross-check random reductions against lattice sums");
    voracle->fallthrough();
    voracle->add_option("--samples", samples, "number of random tuples (default 200)");
    voracle->add_option("--seed", seed, "sample seed (default 7)");
    voracle->add_option("--tolerance", oracleTol, "agreement tolerance (default 1e-3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (g.cachePath.empty()) {
        if (const char* env = std::getenv("WZETA_CACHE")) g.cachePath = env;
    }

    try {
        if (rsl4->parsed()) return cmd_reduce(g, RecordKind::SL4, sl4Args);
        if (rz3->parsed()) return cmd_reduce(g, RecordKind::ZETA3, z3Args);
        if (rmt->parsed()) return cmd_reduce(g, RecordKind::MT, mtArgs);
        if (table->parsed()) return cmd_table(g, weight, regularOnly, outPath);
        if (vpaper->parsed()) return cmd_verify_paper(g, tolerance);
        if (voracle->parsed()) return cmd_verify_oracle(g, samples, seed, oracleTol);
    } catch (const wzeta::DivergenceError& e) {
        std::cerr << "divergent input\n";
        for (const auto& c : e.conditions) std::cerr << "violated: " << c << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 1;
}
