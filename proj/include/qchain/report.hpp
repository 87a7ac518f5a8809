#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qchain {

/// One verified (or falsified) identity. `residual` is an exact field element
/// rendered as text, or a numeric gap such as "2^-231.4".
struct ReportEntry {
    std::string check_name;
    int L = 0;
    std::optional<int> N;
    bool pass = false;
    std::string residual;
    std::string detail;
};

/// Ordered ledger of check results. Entries can be appended in any order;
/// sort_entries() puts them into a deterministic (L, N, check) order.
class VerificationReport {
public:
    void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }
    void merge(const VerificationReport& other);

    const std::vector<ReportEntry>& entries() const { return entries_; }
    bool all_passed() const;
    std::size_t failures() const;
    bool empty() const { return entries_.empty(); }

    void sort_entries();

private:
    std::vector<ReportEntry> entries_;
};

}  // namespace qchain
