#pragma once

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wzeta/eval.hpp"
#include "wzeta/witten.hpp"

namespace wzeta {

using Json = nlohmann::ordered_json;

enum class RecordKind { SL4, ZETA3, MT };

inline const char* kind_name(RecordKind k) {
    switch (k) {
        case RecordKind::SL4: return "sl4";
        case RecordKind::ZETA3: return "zeta3";
        case RecordKind::MT: return "mt";
    }
    return "?";
}

inline std::optional<RecordKind> kind_from(const std::string& s) {
    if (s == "sl4") return RecordKind::SL4;
    if (s == "zeta3") return RecordKind::ZETA3;
    if (s == "mt") return RecordKind::MT;
    return std::nullopt;
}

struct ReductionRecord {
    RecordKind kind = RecordKind::SL4;
    std::vector<long long> args;  // MT: parts then outer
    bool regular = true;
    std::string caseName;
    MzvCombination combo;
    std::vector<TraceEntry> trace;
};

inline ReductionRecord make_record(const WittenArgs& wa, bool withTrace = false) {
    ReductionRecord r;
    r.args = wa.s;
    ReduceOptions opt{withTrace};
    if (wa.kind == WittenKind::SL4) {
        if (wa.s.size() != 6) throw std::invalid_argument("sl4 takes 6 exponents");
        Sl4Tuple t;
        for (std::size_t i = 0; i < 6; ++i) t[i] = wa.s[i];
        auto full = reduce_sl4_full(t, opt);
        r.kind = RecordKind::SL4;
        r.regular = full.cls == RegularityClass::Regular;
        r.caseName = regularity_name(full.cls);
        r.combo = std::move(full.combo);
        r.trace = std::move(full.trace);
    } else {
        if (wa.s.size() != 7) throw std::invalid_argument("zeta3 takes 7 exponents");
        Zeta3Tuple t;
        for (std::size_t i = 0; i < 7; ++i) t[i] = wa.s[i];
        auto full = reduce_zeta3_full(t, opt);
        r.kind = RecordKind::ZETA3;
        r.regular = full.allPartsRegular;
        r.caseName = "zeta3";
        r.combo = std::move(full.combo);
        r.trace = std::move(full.trace);
    }
    return r;
}

inline ReductionRecord make_record_mt(const MtArgs& a) {
    ReductionRecord r;
    r.kind = RecordKind::MT;
    r.args = a.parts;
    r.args.push_back(a.outer);
    r.regular = true;
    r.caseName = "mt";
    r.combo = reduce_mt(a);
    return r;
}

inline Json combo_to_json(const MzvCombination& c) {
    Json terms = Json::array();
    for (const auto& [mono, q] : c.terms()) {
        if (mono.tPower != 0) throw std::invalid_argument("combo_to_json: unresolved T power");
        if (mono.factors.size() > 1) throw std::invalid_argument("combo_to_json: non-canonical product");
        Json t;
        std::ostringstream num, den;
        num << boost::multiprecision::numerator(q);
        den << boost::multiprecision::denominator(q);
        t["num"] = num.str();
        t["den"] = den.str();
        Json idx = Json::array();
        if (!mono.factors.empty()) {
            if (mono.factors[0].reg) throw std::invalid_argument("combo_to_json: regularized factor");
            for (long long e : mono.factors[0].idx) idx.push_back(e);
        }
        t["index"] = idx;
        terms.push_back(std::move(t));
    }
    return terms;
}

inline MzvCombination combo_from_json(const Json& j) {
    MzvCombination c;
    for (const auto& t : j) {
        Rational q(Int(t.at("num").get<std::string>()), Int(t.at("den").get<std::string>()));
        MzvIndex idx;
        for (const auto& e : t.at("index")) idx.push_back(e.get<long long>());
        if (idx.empty())
            c += q * MzvCombination::one();
        else
            c.add(mono_zeta(idx), q);
    }
    return c;
}

inline Json trace_to_json(const std::vector<TraceEntry>& tr) {
    Json out = Json::array();
    for (const auto& e : tr) {
        Json t;
        t["rule"] = e.rule;
        t["args"] = e.args;
        out.push_back(std::move(t));
    }
    return out;
}

inline std::vector<TraceEntry> trace_from_json(const Json& j) {
    std::vector<TraceEntry> out;
    for (const auto& t : j) {
        TraceEntry e;
        e.rule = t.at("rule").get<std::string>();
        for (const auto& a : t.at("args")) e.args.push_back(a.get<long long>());
        out.push_back(std::move(e));
    }
    return out;
}

inline Json record_to_json(const ReductionRecord& r, bool includeTrace) {
    Json j;
    j["kind"] = kind_name(r.kind);
    j["args"] = r.args;
    j["regular"] = r.regular;
    j["case"] = r.caseName;
    j["combination"] = combo_to_json(r.combo);
    if (includeTrace && !r.trace.empty()) j["trace"] = trace_to_json(r.trace);
    return j;
}

// full CLI payload: record plus a fresh numeric evaluation
inline Json record_emit_json(const ReductionRecord& r, int precision, bool includeTrace,
                             const Real& targetError = Real("1e-25")) {
    Json j = record_to_json(r, false);
    NumericResult n = eval_combo(r.combo, targetError);
    std::ostringstream v, e;
    v << std::setprecision(precision) << n.value;
    e << std::setprecision(3) << n.errorBound;
    Json num;
    num["value"] = v.str();
    num["errorBound"] = e.str();
    num["method"] = n.method;
    j["numeric"] = num;
    if (includeTrace && !r.trace.empty()) j["trace"] = trace_to_json(r.trace);
    return j;
}

// "3/2 z(2,1) - 2 z(4)"; empty combination prints 0
inline std::string combo_pretty(const MzvCombination& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, q] : c.terms()) {
        Rational a = q;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unitCoeff = a == 1 && !mono.factors.empty();
        if (!unitCoeff) os << rational_str(a);
        bool needSpace = !unitCoeff;
        for (const auto& f : mono.factors) {
            if (needSpace) os << " ";
            os << (f.reg ? "zbar(1," : "z(");
            for (std::size_t i = 0; i < f.idx.size(); ++i) os << (i ? "," : "") << f.idx[i];
            os << ")";
            needSpace = true;
        }
        for (long long k = 0; k < mono.tPower; ++k) {
            if (needSpace) os << " ";
            os << "T";
            needSpace = true;
        }
    }
    return os.str();
}

// append-only JSONL store keyed by (kind, args); unparseable lines are skipped
class JsonlCache {
  public:
    explicit JsonlCache(std::string path) : path_(std::move(path)) {}

    std::optional<ReductionRecord> find(RecordKind kind, const std::vector<long long>& args) const {
        std::ifstream in(path_);
        if (!in) return std::nullopt;
        std::string line;
        std::optional<ReductionRecord> hit;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Json j = Json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.is_object()) continue;
            try {
                if (j.at("kind").get<std::string>() != kind_name(kind)) continue;
                std::vector<long long> a;
                for (const auto& e : j.at("args")) a.push_back(e.get<long long>());
                if (a != args) continue;
                ReductionRecord r;
                r.kind = kind;
                r.args = args;
                r.regular = j.at("regular").get<bool>();
                r.caseName = j.at("case").get<std::string>();
                r.combo = combo_from_json(j.at("combination"));
                if (j.contains("trace")) r.trace = trace_from_json(j.at("trace"));
                hit = std::move(r);  // last write wins
            } catch (const std::exception&) {
                continue;
            }
        }
        return hit;
    }

    void store(const ReductionRecord& r) const {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cache: cannot open " + path_);
        out << record_to_json(r, true).dump() << '\n';
    }

    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

}  // namespace wzeta
