#include "qchain/report.hpp"

#include <algorithm>
#include <tuple>

namespace qchain {

void VerificationReport::merge(const VerificationReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return !e.pass; }));
}

void VerificationReport::sort_entries() {
    std::stable_sort(entries_.begin(), entries_.end(), [](const ReportEntry& a, const ReportEntry& b) {
        return std::tie(a.L, a.N, a.check_name) < std::tie(b.L, b.N, b.check_name);
    });
}

}  // namespace qchain
