#include "sing/batch.hpp"

#include <atomic>
#include <cctype>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "sing/errors.hpp"
#include "sing/parser.hpp"
#include "sing/report.hpp"

namespace sing {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::tuple<std::string, long, long> parse_range(const std::string& item) {
    std::size_t colon = item.find(':');
    std::size_t dots = item.find("..");
    if (colon == std::string::npos || dots == std::string::npos || dots < colon)
        throw std::invalid_argument("bad range item: " + item);
    std::string name = item.substr(0, colon);
    long lo = std::stol(item.substr(colon + 1, dots - colon - 1));
    long hi = std::stol(item.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range: " + item);
    return {name, lo, hi};
}

}  // namespace

FamilyLine parse_family_line(const std::string& line) {
    FamilyLine fam;
    std::istringstream is(line);
    std::string field;
    bool have_template = false;
    while (is >> field) {
        std::size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("family field without '=': " + field);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "template") {
            fam.template_text = value;
            have_template = true;
        } else if (key == "ranges") {
            for (const auto& item : split(value, ','))
                if (!item.empty()) fam.ranges.push_back(parse_range(item));
        } else if (key == "coeff") {
            for (const auto& item : split(value, ','))
                if (!item.empty()) fam.coeffs.push_back(parse_range(item));
        } else if (key == "vars") {
            fam.vars = split(value, ',');
        } else {
            throw std::invalid_argument("unknown family field: " + key);
        }
    }
    if (!have_template) throw std::invalid_argument("family line lacks template=");
    return fam;
}

namespace {

/// Textual substitution of placeholder identifiers by integer literals;
/// negative values are parenthesized so they stay valid factors.
std::string substitute(const std::string& tmpl, const std::map<std::string, long>& assign) {
    std::string out;
    std::size_t i = 0;
    while (i < tmpl.size()) {
        char c = tmpl[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < tmpl.size() && (std::isalnum(static_cast<unsigned char>(tmpl[j])) ||
                                       tmpl[j] == '_'))
                ++j;
            std::string ident = tmpl.substr(i, j - i);
            auto it = assign.find(ident);
            if (it == assign.end()) {
                out += ident;
            } else if (it->second < 0) {
                out += "(" + std::to_string(it->second) + ")";
            } else {
                out += std::to_string(it->second);
            }
            i = j;
        } else {
            out += c;
            ++i;
        }
    }
    return out;
}

std::string make_key(const BatchInstance& inst) {
    std::string key = inst.family + "|";
    bool first = true;
    for (const auto& [k, v] : inst.assignment) {
        if (!first) key += ",";
        key += k + "=" + std::to_string(v);
        first = false;
    }
    return key;
}

}  // namespace

std::vector<BatchInstance> expand_family(const FamilyLine& fam) {
    std::vector<std::tuple<std::string, long, long>> all = fam.ranges;
    all.insert(all.end(), fam.coeffs.begin(), fam.coeffs.end());
    std::vector<BatchInstance> out;
    std::map<std::string, long> assign;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == all.size()) {
            BatchInstance inst;
            inst.family = fam.template_text;
            inst.assignment = assign;
            inst.vars = fam.vars;
            inst.poly_text = substitute(fam.template_text, assign);
            inst.key = make_key(inst);
            out.push_back(std::move(inst));
            return;
        }
        const auto& [name, lo, hi] = all[idx];
        for (long v = lo; v <= hi; ++v) {
            assign[name] = v;
            self(self, idx + 1);
        }
        assign.erase(name);
    };
    rec(rec, 0);
    return out;
}

BatchSummary run_batch(const std::string& family_path, const std::string& out_path,
                       unsigned jobs, const CheckSet& checks) {
    std::ifstream in(family_path);
    if (!in) throw std::invalid_argument("cannot open family spec: " + family_path);
    std::vector<BatchInstance> instances;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
            trimmed.erase(trimmed.begin());
        if (trimmed.empty() || trimmed[0] == '#') continue;
        for (auto& inst : expand_family(parse_family_line(trimmed)))
            instances.push_back(std::move(inst));
    }

    std::set<std::string> existing;
    {
        std::ifstream prev(out_path);
        std::string rec;
        while (std::getline(prev, rec)) {
            if (rec.empty()) continue;
            auto j = nlohmann::json::parse(rec, nullptr, false);
            if (!j.is_discarded() && j.contains("key")) existing.insert(j["key"].get<std::string>());
        }
    }

    BatchSummary sum;
    sum.total = instances.size();
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot open batch output: " + out_path);
    std::mutex write_mu;
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= instances.size()) return;
            const BatchInstance& inst = instances[idx];
            if (existing.count(inst.key)) {
                std::lock_guard<std::mutex> lk(write_mu);
                ++sum.skipped_existing;
                continue;
            }
            nlohmann::ordered_json rec;
            rec["schema_version"] = kSchemaVersion;
            rec["key"] = inst.key;
            rec["family"] = inst.family;
            rec["assignment"] = inst.assignment;
            bool qh = false, conj_violation = false, bounds_fail = false, not_iso = false,
                 failed = false;
            try {
                Polynomial f = parse_polynomial(inst.poly_text, inst.vars);
                SingularityReport rep = analyze(f, inst.vars, checks);
                rec["report"] = report_to_json(rep, checks);
                if (rep.error) {
                    not_iso = (*rep.error == "NotIsolated");
                } else if (!rep.smooth) {
                    if (rep.quasihomogeneous) qh = rep.quasihomogeneous->saito;
                    auto it = rep.identities.find("conjecture");
                    if (it != rep.identities.end() && it->second) conj_violation = true;
                    for (const char* b : {"bound-i", "bound-ii", "bound-iii", "bound-iv"}) {
                        auto bit = rep.identities.find(b);
                        if (bit != rep.identities.end() && !bit->second) bounds_fail = true;
                    }
                }
            } catch (const std::exception& e) {
                rec["error"] = e.what();
                failed = true;
            }
            std::lock_guard<std::mutex> lk(write_mu);
            out << rec.dump() << "\n";
            out.flush();
            ++sum.analyzed;
            if (qh) ++sum.quasihomogeneous;
            if (not_iso) ++sum.not_isolated;
            if (conj_violation) ++sum.conjecture_violations;
            if (bounds_fail) ++sum.bound_failures;
            if (failed) ++sum.errors;
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return sum;
}

}  // namespace sing
