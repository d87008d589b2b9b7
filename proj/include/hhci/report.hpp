#ifndef HHCI_REPORT_HPP
#define HHCI_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace hhci
{

struct Failure {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

// Outcome of one verification suite.
struct Report {
    std::string suite;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;
    double seconds = 0.0;

    bool ok() const noexcept
    {
        return failures.empty();
    }
    void check(bool pass, std::string inputs, std::string lhs, std::string rhs)
    {
        ++cases;
        if (!pass) {
            failures.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
        }
    }
    void merge(const Report &o)
    {
        cases += o.cases;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
        seconds += o.seconds;
    }
};

} // namespace hhci

#endif
