#include "proxkit/report.hpp"

#include <sstream>

namespace proxkit {

using json = nlohmann::ordered_json;

Report::Report(std::string command) { doc_["command"] = std::move(command); }

void Report::add(const std::string& key, const json& value) { doc_[key] = value; }

void Report::add_check(const std::string& name, const CheckResult& result) {
    if (result.pass) {
        doc_["checks"][name] = "pass";
        return;
    }
    json entry;
    entry["pass"] = false;
    entry["witness"] = result.witness;
    entry["detail"] = result.detail;
    doc_["checks"][name] = entry;
    failed_ = true;
}

void Report::add_skip(const std::string& name, const std::string& reason) {
    json entry;
    entry["skipped"] = reason;
    doc_["checks"][name] = entry;
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render(std::ostream& os, const std::string& prefix, const json& v) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items())
            render(os, prefix.empty() ? key : prefix + "." + key, value);
    } else if (v.is_array() && !v.empty() && v.front().is_string()) {
        size_t idx = 0;
        for (const auto& item : v)
            os << prefix << "." << idx++ << ": " << scalar_text(item) << "\n";
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
        os << prefix << ": " << v.dump() << "\n";
    } else {
        os << prefix << ": " << scalar_text(v) << "\n";
    }
}

}  // namespace

std::string Report::text(bool with_timing) const {
    std::ostringstream os;
    json doc = doc_;
    doc["result"] = failed_ ? "fail" : "pass";
    if (with_timing && elapsed_ms_ >= 0)
        doc["elapsed_ms"] = static_cast<uint64_t>(elapsed_ms_);
    render(os, "", doc);
    return os.str();
}

std::string Report::json_text(bool with_timing) const {
    json doc = doc_;
    doc["result"] = failed_ ? "fail" : "pass";
    if (with_timing && elapsed_ms_ >= 0)
        doc["elapsed_ms"] = static_cast<uint64_t>(elapsed_ms_);
    return doc.dump(2) + "\n";
}

}  // namespace proxkit
