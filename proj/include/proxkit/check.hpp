#pragma once

#include <string>
#include <vector>

namespace proxkit {

// Outcome of a single law check. On failure `witness` holds the
// lexicographically least counterexample tuple (element or point indices,
// meaning fixed per check) and `detail` a deterministic human-readable form.
struct CheckResult {
    bool pass = true;
    std::vector<int> witness;
    std::string detail;

    static CheckResult ok() { return {}; }
    static CheckResult fail(std::vector<int> w, std::string d) {
        return {false, std::move(w), std::move(d)};
    }
    explicit operator bool() const { return pass; }
};

}  // namespace proxkit
