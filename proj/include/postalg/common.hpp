/*
   Copyright 2026 the postalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace postalg {

/// Error raised by the text-format readers.  `line` is 1-based and refers to
/// the input that was being parsed; 0 means "no line information".
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

/// Outcome of an exhaustive verification pass.  Verifiers never abort on the
/// first violation; they count every check and record a message per failure so
/// a caller can see exactly which instance of which axiom broke.
struct VerificationReport {
    std::size_t checks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }

    void count() { ++checks; }

    void require(bool cond, const std::string& msg) {
        ++checks;
        if (!cond) violations.push_back(msg);
    }

    void merge(const VerificationReport& other) {
        checks += other.checks;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    std::string summary(const std::string& label) const {
        std::ostringstream os;
        os << label << ": " << (checks - violations.size()) << "/" << checks << " pass";
        return os.str();
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

}  // namespace postalg
