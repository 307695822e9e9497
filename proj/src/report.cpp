#include "homhopf/report.hpp"

#include <algorithm>
#include <sstream>

namespace homhopf {

void AxiomReport::merge(const AxiomReport& other, std::string_view prefix) {
    for (const auto& r : other.results_) {
        AxiomResult copy = r;
        if (!prefix.empty()) copy.id = std::string(prefix) + "." + r.id;
        results_.push_back(std::move(copy));
    }
}

bool AxiomReport::passed() const {
    return std::all_of(results_.begin(), results_.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* AxiomReport::find(std::string_view id) const {
    for (const auto& r : results_)
        if (r.id == id) return &r;
    return nullptr;
}

bool AxiomReport::passed(std::string_view id) const {
    const auto* r = find(id);
    if (!r) throw InputError("no axiom named '" + std::string(id) + "' in report");
    return r->passed;
}

std::vector<std::string> AxiomReport::failed_ids() const {
    std::vector<std::string> ids;
    for (const auto& r : results_)
        if (!r.passed) ids.push_back(r.id);
    return ids;
}

AxiomResult check_identity(std::string id, const std::vector<std::size_t>& dims, const Side& lhs, const Side& rhs) {
    AxiomResult res;
    res.id = std::move(id);
    const std::size_t total = flat_size(dims);
    for (std::size_t f = 0; f < total; ++f) {
        const auto idx = unflatten_index(dims, f);
        const Tensor in = dims.empty() ? Tensor::scalar(1) : Tensor::basis(dims, idx);
        Tensor l = lhs(in), r = rhs(in);
        ++res.cases;
        if (!(l == r)) {
            res.passed = false;
            res.counterexample = Counterexample{idx, std::move(l), std::move(r)};
            break;
        }
    }
    return res;
}

AxiomResult check_flag(std::string id, bool ok) {
    AxiomResult res;
    res.id = std::move(id);
    res.passed = ok;
    res.cases = 1;
    if (!ok) res.counterexample = Counterexample{{}, Tensor::scalar(0), Tensor::scalar(1)};
    return res;
}

std::string format_report(const AxiomReport& report) {
    std::ostringstream os;
    for (const auto& r : report.results()) {
        os << (r.passed ? "PASS " : "FAIL ") << r.id << " (" << r.cases << (r.cases == 1 ? " case)\n" : " cases)\n");
        if (r.counterexample) {
            const auto& c = *r.counterexample;
            os << "    at [";
            for (std::size_t k = 0; k < c.indices.size(); ++k) os << (k ? "," : "") << c.indices[k];
            os << "]\n    lhs = " << c.lhs.to_string() << "\n    rhs = " << c.rhs.to_string() << "\n";
        }
    }
    return os.str();
}

}  // namespace homhopf
