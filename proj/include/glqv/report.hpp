#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace glqv {

enum class Verdict { pass, fail, skip, unverified };

std::string_view to_string(Verdict v);

struct Check {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::string detail;
};

// Outcome of a verifier. Every check is counted; individual entries are
// retained up to a cap so that a million-row sweep does not produce a
// million-row report. Failures are retained preferentially.
class Report {
public:
    explicit Report(std::string title = {});

    const std::string& title() const { return title_; }

    void record(std::string name, Verdict verdict, std::string detail = {});
    void expect(bool condition, std::string name, std::string detail = {});
    void skip(std::string name, std::string reason) { record(std::move(name), Verdict::skip, std::move(reason)); }
    void unverified(std::string name, std::string reason) { record(std::move(name), Verdict::unverified, std::move(reason)); }

    // Informational key/value pairs (reported bounds, context values).
    void note(const std::string& key, std::string value) { notes_[key] = std::move(value); }
    const std::map<std::string, std::string>& notes() const { return notes_; }

    // Folds another report in, prefixing its check names.
    void merge(const Report& other);

    std::size_t count(Verdict v) const { return counts_[static_cast<std::size_t>(v)]; }
    std::size_t total() const;
    bool ok() const { return count(Verdict::fail) == 0; }

    std::optional<Check> first_failure() const { return first_failure_; }
    const std::vector<Check>& checks() const { return checks_; }
    std::optional<Check> find(const std::string& name) const;

    nlohmann::json to_json() const;
    std::string summary() const;

    static constexpr std::size_t kRetainedChecks = 2000;

private:
    std::string title_;
    std::size_t counts_[4] = {0, 0, 0, 0};
    std::vector<Check> checks_;
    std::optional<Check> first_failure_;
    std::map<std::string, std::string> notes_;
};

} // namespace glqv
