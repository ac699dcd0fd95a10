#ifndef FOCOUNT_REPORT_HPP
#define FOCOUNT_REPORT_HPP

#include <json.hpp>

#include "focount/exact.hpp"

namespace focount {

// Integers that fit 2^53-1 go out as JSON numbers, anything bigger as a
// string, so lossy readers stay safe.
inline nlohmann::json json_int(const BigInt& v) {
    static const BigInt lo = -BigInt::parse("9007199254740991");
    static const BigInt hi = BigInt::parse("9007199254740991");
    if (v >= lo && v <= hi) return nlohmann::json(v.to_int64());
    return nlohmann::json(v.to_string());
}

inline const char* decision_name(EvalResult::Decision d) {
    switch (d) {
        case EvalResult::Decision::Yes: return "yes";
        case EvalResult::Decision::No: return "no";
        default: return "bottom";
    }
}

struct RunReport {
    int schema = 1;
    std::string input;     // descriptor of the graph source
    std::string sentence;  // the formula text or a descriptor
    std::string mode;      // exact | approx | oracle
    bool ok = true;
    std::string error;
    BigInt value;
    std::vector<int> witness;
    BigInt delta;
    std::string decision;
    double seconds = 0;
    std::vector<std::pair<std::string, double>> stage_seconds;
    int wcol1 = 0, wcol2 = 0;
    size_t tree_nodes = 0;
    int tree_depth = 0;
    // oracle cross-check when within budget
    bool oracle_ran = false;
    BigInt oracle_value;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["schema"] = schema;
        j["input"] = input;
        j["sentence"] = sentence;
        j["mode"] = mode;
        j["ok"] = ok;
        if (!ok) {
            j["error"] = error;
            return j;
        }
        j["value"] = json_int(value);
        j["witness"] = witness;
        j["delta"] = json_int(delta);
        j["decision"] = decision;
        j["seconds"] = seconds;
        j["stages"] = nlohmann::json::object();
        for (const auto& [name, secs] : stage_seconds) j["stages"][name] = secs;
        j["wcol1"] = wcol1;
        j["wcol2"] = wcol2;
        j["tree_nodes"] = tree_nodes;
        j["tree_depth"] = tree_depth;
        if (oracle_ran) j["oracle_value"] = json_int(oracle_value);
        else j["oracle_value"] = nullptr;
        return j;
    }
};

inline RunReport report_from_eval(const EvalResult& r) {
    RunReport rep;
    rep.mode = r.mode;
    rep.value = r.value;
    rep.witness = r.witness;
    rep.delta = r.delta;
    rep.decision = decision_name(r.decision);
    rep.stage_seconds = r.stage_seconds;
    rep.wcol1 = r.wcol1;
    rep.wcol2 = r.wcol2;
    rep.tree_nodes = r.tree_nodes;
    rep.tree_depth = r.tree_depth;
    return rep;
}

}  // namespace focount

#endif
