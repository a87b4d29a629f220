#include "qwz/report.hpp"

#include <cctype>

namespace qwz {

using identities::Mode;
using identities::VerificationReport;

namespace {

nlohmann::ordered_json pairs_to_object(const std::vector<std::pair<std::string, std::string>>& pairs) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : pairs) o[k] = v;
    return o;
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::string abbreviate(const std::string& s, std::size_t width = 120) {
    if (s.size() <= width) return s;
    return s.substr(0, width) + " ...";
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["mode"] = identities::to_string(r.mode);
    j["params"] = pairs_to_object(r.params);
    j["digits_or_order"] = r.digits_or_order;
    j["precision"] = r.mode == Mode::ExactSeries ? "exact" : std::to_string(r.digits_or_order) + " significant digits";
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_diff_or_first_mismatch"] = r.abs_diff_or_first_mismatch;
    j["bound"] = r.bound;
    j["status"] = identities::to_string(r.status);
    j["message"] = r.message;
    j["extra"] = pairs_to_object(r.extra);
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    return j;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["mode"] = wz::to_string(r.outcome.mode);
    j["params"] = pairs_to_object(r.params);
    j["digits_or_order"] = r.digits_or_order;
    j["witness"] = r.outcome.witness ? nlohmann::ordered_json(*r.outcome.witness) : nlohmann::ordered_json();
    j["detail"] = r.outcome.detail;
    j["status"] = identities::to_string(r.status);
    return j;
}

nlohmann::ordered_json to_json(const identities::IdentityDescriptor& d) {
    auto specs = [](const std::vector<identities::ParamSpec>& list) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& s : list) {
            a.push_back({{"name", s.name}, {"domain", s.domain}, {"default", s.default_value.to_string()}});
        }
        return a;
    };
    nlohmann::ordered_json j;
    j["id"] = d.id;
    j["title"] = d.title;
    j["source"] = d.source;
    nlohmann::ordered_json modes = nlohmann::ordered_json::array();
    for (Mode m : d.modes) modes.push_back(identities::to_string(m));
    j["modes"] = modes;
    j["numeric_params"] = specs(d.numeric_params);
    j["series_params"] = specs(d.series_params);
    return j;
}

void render_text(std::ostream& os, const VerificationReport& r) {
    os << r.id << " [" << identities::to_string(r.mode) << "]";
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    os << (r.mode == Mode::ExactSeries ? " order=" : " digits=") << r.digits_or_order << "\n";
    if (!r.lhs.empty()) os << "  lhs:   " << abbreviate(r.lhs) << "\n";
    if (!r.rhs.empty()) os << "  rhs:   " << abbreviate(r.rhs) << "\n";
    for (const auto& [k, v] : r.extra) os << "  " << k << ": " << v << "\n";
    if (!r.abs_diff_or_first_mismatch.empty()) {
        os << (r.mode == Mode::ExactSeries ? "  first mismatch: " : "  |lhs-rhs|: ") << r.abs_diff_or_first_mismatch;
        os << "   bound: " << r.bound << "\n";
    }
    os << "  status: " << upper(identities::to_string(r.status));
    if (!r.message.empty()) os << " (" << r.message << ")";
    os << "\n";
}

void render_text(std::ostream& os, const CheckReport& r) {
    os << r.label << " " << upper(identities::to_string(r.status));
    if (r.outcome.witness) os << " witness " << *r.outcome.witness;
    if (!r.outcome.detail.empty()) os << " (" << r.outcome.detail << ")";
    os << "\n";
}

void render_registry(std::ostream& os, const std::vector<identities::IdentityDescriptor>& list) {
    for (const auto& d : list) {
        os << d.id << "  [";
        for (std::size_t i = 0; i < d.modes.size(); ++i) os << (i ? ", " : "") << identities::to_string(d.modes[i]);
        os << "]";
        for (const auto& s : d.numeric_params) os << "  " << s.name << " in " << s.domain;
        os << "\n    " << d.title << "\n";
    }
}

}  // namespace qwz
