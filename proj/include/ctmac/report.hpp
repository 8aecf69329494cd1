#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ctmac
{

// Outcome of one check.  Values are rendered in the canonical text form.
struct Report {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    bool refused = false;
    std::string notes;
    double millis = 0;
    std::size_t terms_peak = 0;

    Report &param(const std::string &key, const std::string &value)
    {
        params.emplace_back(key, value);
        return *this;
    }
    Report &param(const std::string &key, long value)
    {
        return param(key, std::to_string(value));
    }
    Report &note(const std::string &text)
    {
        notes += notes.empty() ? text : "; " + text;
        return *this;
    }
    // A refused check is not a failure.
    bool failed() const
    {
        return !refused && !equal;
    }
};

} // namespace ctmac
