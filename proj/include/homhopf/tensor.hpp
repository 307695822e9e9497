#pragma once

#include "homhopf/linear.hpp"

#include <array>
#include <compare>
#include <functional>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace homhopf {

// Multi-index into a tensor product of up to kMaxLegs factors.
struct LegIndex {
    static constexpr std::size_t kMaxLegs = 12;
    std::array<std::uint16_t, kMaxLegs> v{};
    std::uint8_t n = 0;

    std::size_t size() const { return n; }
    std::size_t operator[](std::size_t k) const { return v[k]; }
    std::vector<std::size_t> to_vector() const { return {v.begin(), v.begin() + n}; }
    auto operator<=>(const LegIndex&) const = default;
};

// A sparse element of V_1 (x) ... (x) V_k.  This is the engine behind every
// Sweedler-notation formula: legs are split by comultiplications/coactions,
// merged by products/actions and dropped by functionals, one map at a time.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> dims);

    static Tensor basis(std::vector<std::size_t> dims, const std::vector<std::size_t>& idx);
    static Tensor from_vector(const Vector& v);
    static Tensor from_flat(std::vector<std::size_t> dims, const Vector& flat);
    static Tensor scalar(const Scalar& s);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t legs() const { return dims_.size(); }
    const std::map<LegIndex, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LegIndex& idx, const Scalar& c);
    Scalar coefficient(const std::vector<std::size_t>& idx) const;

    // Feeds the listed legs (in that order) into f.  The remaining legs keep
    // their order; f's output legs are inserted where the first listed leg
    // sat among them.
    Tensor apply(const MultilinearMap& f, std::initializer_list<std::size_t> legs) const;
    Tensor apply(const MultilinearMap& f, const std::vector<std::size_t>& legs) const;
    Tensor apply(const LinMap& f, std::size_t leg) const;
    // New leg k is old leg order[k].
    Tensor permute(const std::vector<std::size_t>& order) const;
    Tensor swap(std::size_t a, std::size_t b) const;

    Vector flatten() const;
    Vector to_vector() const;  // single-leg tensors only
    Scalar to_scalar() const;  // zero-leg tensors only

    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    friend Tensor operator*(const Scalar& s, const Tensor& t);
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.dims_ == b.dims_ && a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    std::vector<std::size_t> dims_;
    std::map<LegIndex, Scalar> terms_;
};

// a (x) b with a's legs first.
Tensor outer(const Tensor& a, const Tensor& b);

// Builds the structure tensor of a map from its values on basis tuples.
MultilinearMap tabulate(const std::vector<std::size_t>& in_dims, const std::vector<std::size_t>& out_dims,
                        const std::function<Tensor(const Tensor&)>& f);

// Same entries, different factorisation of domain and codomain.
MultilinearMap reshape(const MultilinearMap& f, std::vector<std::size_t> in_dims, std::vector<std::size_t> out_dims);

}  // namespace homhopf
