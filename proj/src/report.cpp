#include "vsb/report.hpp"

#include <sstream>

namespace vsb {

void CheckReport::add_pass(const std::string& label) {
    items_.push_back({label, true, std::nullopt, {}});
}

void CheckReport::add_fail(const std::string& label, Witness witness, std::string detail) {
    items_.push_back({label, false, std::move(witness), std::move(detail)});
}

void CheckReport::merge(const CheckReport& other) {
    for (const auto& item : other.items_) items_.push_back(item);
}

bool CheckReport::passed() const {
    for (const auto& item : items_)
        if (!item.passed) return false;
    return true;
}

const CheckItem* CheckReport::find(const std::string& label) const {
    for (const auto& item : items_)
        if (item.label == label) return &item;
    return nullptr;
}

std::string CheckReport::first_failure_label() const {
    for (const auto& item : items_)
        if (!item.passed) return item.label;
    return {};
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << subject_ << ": " << (passed() ? "pass" : "FAIL") << "\n";
    for (const auto& item : items_) {
        out << "  [" << (item.passed ? "pass" : "FAIL") << "] " << item.label;
        if (!item.detail.empty()) out << " — " << item.detail;
        out << "\n";
        if (item.witness) {
            out << "    at (";
            for (size_t i = 0; i < item.witness->indices.size(); ++i) {
                if (i) out << ", ";
                out << item.witness->indices[i];
            }
            out << ")\n";
            out << "    lhs = " << item.witness->lhs << "\n";
            out << "    rhs = " << item.witness->rhs << "\n";
        }
    }
    return out.str();
}

void AxiomScan::record(bool ok, const std::vector<long long>& indices, std::string lhs,
                       std::string rhs) {
    if (ok || failed_) return;
    failed_ = true;
    witness_ = Witness{indices, std::move(lhs), std::move(rhs)};
}

AxiomScan::~AxiomScan() {
    if (failed_)
        report_.add_fail(label_, std::move(witness_));
    else
        report_.add_pass(label_);
}

} // namespace vsb
