#pragma once

#include "homhopf/tensor.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homhopf {

struct Counterexample {
    std::vector<std::size_t> indices;  // basis multi-index of the inputs
    Tensor lhs, rhs;
};

struct AxiomResult {
    std::string id;
    bool passed = true;
    std::optional<Counterexample> counterexample;  // present iff !passed
    std::size_t cases = 0;                          // basis tuples evaluated
};

class AxiomReport {
public:
    void add(AxiomResult r) { results_.push_back(std::move(r)); }
    // Appends other's results, prefixing ids with "prefix." when non-empty.
    void merge(const AxiomReport& other, std::string_view prefix = {});

    bool passed() const;
    const std::vector<AxiomResult>& results() const { return results_; }
    const AxiomResult* find(std::string_view id) const;
    bool passed(std::string_view id) const;  // throws if id is absent
    std::vector<std::string> failed_ids() const;

private:
    std::vector<AxiomResult> results_;
};

using Side = std::function<Tensor(const Tensor&)>;

// Evaluates lhs and rhs on every basis tuple of the given shape, stopping at
// the first (lexicographically smallest) tuple where they differ.  An empty
// shape means a single evaluation on the scalar 1.
AxiomResult check_identity(std::string id, const std::vector<std::size_t>& dims, const Side& lhs, const Side& rhs);

AxiomResult check_flag(std::string id, bool ok);

std::string format_report(const AxiomReport& report);

}  // namespace homhopf
