#include "sing/report.hpp"

#include <sstream>

namespace sing {

using nlohmann::ordered_json;

namespace {

ordered_json length_json(const Length& l) {
    if (!l.is_finite()) return "INFINITE";
    return l.get();
}

}  // namespace

std::string checks_to_string(const CheckSet& c) {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    add(c.mu, "mu");
    add(c.tau, "tau");
    add(c.quasihomogeneity, "quasihomogeneity");
    add(c.ebs, "ebs");
    add(c.beta, "beta");
    add(c.delta, "delta");
    add(c.hilbert, "hilbert");
    add(c.derlog, "derlog");
    add(c.identities, "identities");
    return out;
}

ordered_json report_to_json(const SingularityReport& rep, const CheckSet& checks) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = {{"poly", rep.poly_text}, {"vars", rep.vars},
                  {"checks", checks_to_string(checks)}};
    j["order"] = "local-negdegrevlex";
    j["smooth"] = rep.smooth;
    if (checks.mu || rep.smooth || rep.error) j["mu"] = length_json(rep.mu);
    if (checks.tau || rep.smooth || rep.error) j["tau"] = length_json(rep.tau);
    if (rep.quasihomogeneous) {
        const auto& q = *rep.quasihomogeneous;
        ordered_json w;
        if (q.weights) {
            w = ordered_json::array();
            for (const auto& r : *q.weights) w.push_back(rat_to_string(r));
        } else {
            w = nullptr;
        }
        j["quasihomogeneous"] = {{"saito", q.saito}, {"syzygy_rank", q.syzygy_rank},
                                 {"weights", w}};
    }
    if (rep.ebs) j["ebs"] = *rep.ebs;
    if (rep.beta) {
        if (rep.beta->has_value())
            j["beta"] = **rep.beta;
        else
            j["beta"] = "QH";
    }
    if (rep.delta_len) j["delta_length"] = *rep.delta_len;
    if (rep.i2ji_len) j["i2ji_length"] = *rep.i2ji_len;
    if (rep.reduction_num) {
        if (rep.reduction_num->has_value())
            j["reduction_number"] = **rep.reduction_num;
        else
            j["reduction_number"] = nullptr;
    }
    if (rep.hilbert) {
        j["hilbert"] = {{"e0", rep.hilbert->e0},
                        {"e1", rep.hilbert->e1},
                        {"values", rep.hilbert->values},
                        {"stable", rep.hilbert->stable}};
    }
    if (rep.chains) j["chain_lengths"] = *rep.chains;
    if (rep.derlog_min_gens) {
        j["derlog"] = {{"essential_min_gens", *rep.derlog_min_gens},
                       {"generators", rep.derlog_gens_printed ? ordered_json(*rep.derlog_gens_printed)
                                                              : ordered_json::array()}};
    }
    if (!rep.identities.empty()) j["identity_checks"] = rep.identities;
    if (rep.error) j["error"] = *rep.error;
    return j;
}

std::string report_to_text(const SingularityReport& rep, const CheckSet& checks) {
    std::ostringstream os;
    ordered_json j = report_to_json(rep, checks);
    os << "f = " << rep.poly_text << "\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "input" || it.key() == "schema_version") continue;
        os << it.key() << ": " << it.value().dump() << "\n";
    }
    return os.str();
}

}  // namespace sing
