#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homhopf {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// Malformed input: shape mismatch, singular twist, bad parameter.  Axiom
// failures are never thrown; they are returned in an AxiomReport.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts "p" or "p/q" with an optional sign; the result is canonical.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& s);

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);

// Evaluation <p, v> of a functional (dual-basis coefficients) on a vector.
Scalar pair(const Vector& p, const Vector& v);

// Row-major flattening of a multi-index; the left factor is the slow one.
std::size_t flat_size(const std::vector<std::size_t>& dims);
std::size_t flatten_index(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& idx);
std::vector<std::size_t> unflatten_index(const std::vector<std::size_t>& dims, std::size_t flat);

class LinMap {
public:
    LinMap() = default;
    LinMap(std::size_t codomain_dim, std::size_t domain_dim);

    static LinMap identity(std::size_t n);
    static LinMap diagonal(const Vector& d);
    // rows[r][c]; every row must have the same length.
    static LinMap from_rows(const std::vector<Vector>& rows);
    // Column j is the image of the j-th basis vector.
    static LinMap from_columns(const std::vector<Vector>& cols, std::size_t codomain_dim);

    std::size_t domain_dim() const { return cols_; }
    std::size_t codomain_dim() const { return rows_; }
    bool square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    Vector apply(const Vector& v) const;
    Vector column(std::size_t j) const;
    LinMap transpose() const;
    std::optional<LinMap> try_inverse() const;
    LinMap inverse() const;  // throws InputError when singular
    std::size_t rank() const;
    // Negative exponents require invertibility.
    LinMap power(int k) const;
    bool is_identity() const;

    friend LinMap operator*(const LinMap& f, const LinMap& g);  // f after g
    friend LinMap operator+(const LinMap& f, const LinMap& g);
    friend LinMap operator-(const LinMap& f, const LinMap& g);
    friend LinMap operator*(const Scalar& s, const LinMap& f);
    friend bool operator==(const LinMap& f, const LinMap& g);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// Precomposition on functionals: dualize(f)(p) = p o f.
LinMap dualize(const LinMap& f);
LinMap kron(const LinMap& f, const LinMap& g);

// Map V_1 (x) ... (x) V_k -> W_1 (x) ... (x) W_l stored as a dense matrix over
// the flattened bases, with a sparse copy of each column for fast evaluation.
// An empty out_dims list means the codomain is the ground field.
class MultilinearMap {
public:
    using Column = std::vector<std::pair<std::size_t, Scalar>>;

    MultilinearMap() = default;
    MultilinearMap(std::vector<std::size_t> in_dims, std::vector<std::size_t> out_dims);
    MultilinearMap(std::vector<std::size_t> in_dims, std::vector<std::size_t> out_dims, LinMap flat);

    static MultilinearMap from_linmap(const LinMap& f);
    static MultilinearMap functional(const Vector& p);

    const std::vector<std::size_t>& in_dims() const { return in_; }
    const std::vector<std::size_t>& out_dims() const { return out_; }
    std::size_t in_size() const { return flat_.domain_dim(); }
    std::size_t out_size() const { return flat_.codomain_dim(); }
    const LinMap& flat() const { return flat_; }
    const Scalar& at(std::size_t out_flat, std::size_t in_flat) const { return flat_.at(out_flat, in_flat); }
    const Column& column(std::size_t in_flat) const { return sparse_[in_flat]; }

    Vector apply_flat(const Vector& v) const { return flat_.apply(v); }

    friend bool operator==(const MultilinearMap& f, const MultilinearMap& g) {
        return f.in_ == g.in_ && f.out_ == g.out_ && f.flat_ == g.flat_;
    }

private:
    std::vector<std::size_t> in_, out_;
    LinMap flat_;
    std::vector<Column> sparse_;
};

// (f (x) g)(x (x) y) = f(x) (x) g(y); arities concatenate.
MultilinearMap tensor(const MultilinearMap& f, const MultilinearMap& g);
MultilinearMap tensor(const LinMap& f, const LinMap& g);

}  // namespace homhopf
