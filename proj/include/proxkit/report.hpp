#pragma once

#include <string>

#include <json.hpp>

#include "proxkit/check.hpp"

namespace proxkit {

// Machine-readable command report. The same document renders either as
// line-oriented key:value text or as JSON; both forms are byte-deterministic
// for identical inputs. Wall-clock timing is emitted only on request so the
// default output stays reproducible.
class Report {
public:
    explicit Report(std::string command);

    nlohmann::ordered_json& doc() { return doc_; }

    void add(const std::string& key, const nlohmann::ordered_json& value);
    void add_check(const std::string& name, const CheckResult& result);
    void add_skip(const std::string& name, const std::string& reason);
    void set_failed() { failed_ = true; }

    bool failed() const { return failed_; }
    int exit_code() const { return failed_ ? 1 : 0; }

    void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

    std::string text(bool with_timing = false) const;
    std::string json_text(bool with_timing = false) const;

private:
    nlohmann::ordered_json doc_;
    bool failed_ = false;
    double elapsed_ms_ = -1;
};

}  // namespace proxkit
