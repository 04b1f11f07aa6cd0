#include "eulink/report.hpp"

#include <sstream>

namespace eulink {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::obstruction: return "obstruction";
        case Verdict::error: return "error";
    }
    return "error";
}

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::pass: return 0;
        case Verdict::obstruction: return 1;
        case Verdict::error: return 2;
    }
    return 2;
}

void Report::add(const std::string& key, const std::string& value) {
    lines_.emplace_back(key, value);
}

void Report::add(const std::string& key, long long value) {
    lines_.emplace_back(key, std::to_string(value));
}

void Report::add_certificate(const std::string& text) { certificates_.push_back(text); }

void Report::set_verdict(Verdict v) { verdict_ = v; }

void Report::merge_verdict(Verdict v) {
    if (static_cast<int>(v) > static_cast<int>(verdict_)) verdict_ = v;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : lines_) os << k << ": " << v << "\n";
    for (const auto& c : certificates_) os << "certificate: " << c << "\n";
    os << "VERDICT: " << verdict_name(verdict_) << "\n";
    return os.str();
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    nlohmann::json fields = nlohmann::json::array();
    for (const auto& [k, v] : lines_) fields.push_back({{"key", k}, {"value", v}});
    j["fields"] = fields;
    j["certificates"] = certificates_;
    j["verdict"] = verdict_name(verdict_);
    return j;
}

}  // namespace eulink
