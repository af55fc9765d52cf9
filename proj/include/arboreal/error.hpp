#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace arboreal {

// Raised for invalid inputs and unsatisfiable requests. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a text or JSON input cannot be parsed.
class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& what) : DomainError(what) {}
};

struct Diagnostics {
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
    void fail(std::string msg) { problems.push_back(std::move(msg)); }
    void merge(const Diagnostics& other)
    {
        problems.insert(problems.end(), other.problems.begin(), other.problems.end());
    }
    std::string summary() const
    {
        if (problems.empty())
            return "ok";
        std::string s;
        for (const auto& p : problems) {
            if (!s.empty())
                s += "; ";
            s += p;
        }
        return s;
    }
};

} // namespace arboreal
