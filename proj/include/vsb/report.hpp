#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vsb {

// Counterexample data for a failed identity: the basis indices (and mode
// powers, where applicable) it was evaluated at, plus both sides rendered
// deterministically so re-evaluation can be compared verbatim.
struct Witness {
    std::vector<long long> indices;
    std::string lhs;
    std::string rhs;
};

struct CheckItem {
    std::string label;
    bool passed = true;
    std::optional<Witness> witness;
    std::string detail;
};

class CheckReport {
public:
    CheckReport() = default;
    explicit CheckReport(std::string subject) : subject_(std::move(subject)) {}

    const std::string& subject() const { return subject_; }
    const std::vector<CheckItem>& items() const { return items_; }

    void add_pass(const std::string& label);
    void add_fail(const std::string& label, Witness witness, std::string detail = {});
    void add_item(CheckItem item) { items_.push_back(std::move(item)); }
    void merge(const CheckReport& other);

    bool passed() const;
    const CheckItem* find(const std::string& label) const;
    std::string first_failure_label() const;

    std::string to_text() const;

private:
    std::string subject_;
    std::vector<CheckItem> items_;
};

// Helper used by the per-axiom scanners: keeps the first witness per label.
class AxiomScan {
public:
    AxiomScan(CheckReport& report, std::string label)
        : report_(report), label_(std::move(label)) {}

    // Record one evaluated instance; only the first failing one is kept.
    void record(bool ok, const std::vector<long long>& indices, std::string lhs, std::string rhs);

    ~AxiomScan();

    AxiomScan(const AxiomScan&) = delete;
    AxiomScan& operator=(const AxiomScan&) = delete;

private:
    CheckReport& report_;
    std::string label_;
    bool failed_ = false;
    Witness witness_;
};

} // namespace vsb
