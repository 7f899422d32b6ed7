#include "glqv/report.hpp"

#include <sstream>

namespace glqv {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: return "skip";
    case Verdict::unverified: return "unverified";
    }
    return "?";
}

Report::Report(std::string title) : title_(std::move(title)) {}

void Report::record(std::string name, Verdict verdict, std::string detail)
{
    ++counts_[static_cast<std::size_t>(verdict)];
    Check c{std::move(name), verdict, std::move(detail)};
    if (verdict == Verdict::fail && !first_failure_)
        first_failure_ = c;
    if (checks_.size() < kRetainedChecks || (verdict == Verdict::fail && count(Verdict::fail) <= kRetainedChecks))
        checks_.push_back(std::move(c));
}

void Report::expect(bool condition, std::string name, std::string detail)
{
    record(std::move(name), condition ? Verdict::pass : Verdict::fail, std::move(detail));
}

void Report::merge(const Report& other)
{
    const std::string prefix = other.title_.empty() ? std::string() : other.title_ + ": ";
    for (std::size_t i = 0; i < 4; ++i)
        counts_[i] += other.counts_[i];
    if (!first_failure_ && other.first_failure_) {
        first_failure_ = other.first_failure_;
        first_failure_->name = prefix + first_failure_->name;
    }
    for (const auto& c : other.checks_) {
        if (checks_.size() >= kRetainedChecks && c.verdict != Verdict::fail)
            continue;
        checks_.push_back({prefix + c.name, c.verdict, c.detail});
    }
    for (const auto& [k, v] : other.notes_)
        notes_[prefix + k] = v;
}

std::size_t Report::total() const
{
    return counts_[0] + counts_[1] + counts_[2] + counts_[3];
}

std::optional<Check> Report::find(const std::string& name) const
{
    for (const auto& c : checks_)
        if (c.name == name)
            return c;
    return std::nullopt;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["title"] = title_;
    j["ok"] = ok();
    j["counts"] = {{"pass", std::to_string(count(Verdict::pass))},
                   {"fail", std::to_string(count(Verdict::fail))},
                   {"skip", std::to_string(count(Verdict::skip))},
                   {"unverified", std::to_string(count(Verdict::unverified))}};
    if (first_failure_)
        j["first_failure"] = {{"name", first_failure_->name}, {"detail", first_failure_->detail}};
    nlohmann::json notable = nlohmann::json::array();
    for (const auto& c : checks_) {
        if (c.verdict == Verdict::pass)
            continue;
        notable.push_back({{"name", c.name}, {"verdict", std::string(to_string(c.verdict))}, {"detail", c.detail}});
    }
    j["notable"] = std::move(notable);
    nlohmann::json notes = nlohmann::json::object();
    for (const auto& [k, v] : notes_)
        notes[k] = v;
    j["notes"] = std::move(notes);
    return j;
}

std::string Report::summary() const
{
    std::ostringstream os;
    os << (title_.empty() ? "report" : title_) << ": " << (ok() ? "PASS" : "FAIL") << " (" << count(Verdict::pass)
       << " pass, " << count(Verdict::fail) << " fail, " << count(Verdict::skip) << " skip, "
       << count(Verdict::unverified) << " unverified)";
    if (first_failure_)
        os << "; first failure: " << first_failure_->name << " " << first_failure_->detail;
    return os.str();
}

} // namespace glqv
