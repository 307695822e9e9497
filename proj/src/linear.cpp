#include "homhopf/linear.hpp"

#include <algorithm>
#include <regex>

namespace homhopf {

Scalar parse_scalar(std::string_view text) {
    static const std::regex re(R"(\s*([+-]?[0-9]+)(?:/([0-9]+))?\s*)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw InputError("not an exact rational: '" + s + "'");
    mpz_class num(m[1].str(), 10);
    mpz_class den(1);
    if (m[2].matched) {
        den = mpz_class(m[2].str(), 10);
        if (den == 0) throw InputError("zero denominator in '" + s + "'");
    }
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& s) { return s.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InputError("vector dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector scale(const Scalar& s, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Scalar pair(const Vector& p, const Vector& v) {
    if (p.size() != v.size())
        throw InputError("pair: functional of dim " + std::to_string(p.size()) + " against vector of dim " +
                         std::to_string(v.size()));
    Scalar r = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0 && v[i] != 0) r += p[i] * v[i];
    return r;
}

std::size_t flat_size(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

std::size_t flatten_index(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& idx) {
    std::size_t f = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
    return f;
}

std::vector<std::size_t> unflatten_index(const std::vector<std::size_t>& dims, std::size_t flat) {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    return idx;
}

// ---- LinMap ----

LinMap::LinMap(std::size_t codomain_dim, std::size_t domain_dim)
    : rows_(codomain_dim), cols_(domain_dim), a_(codomain_dim * domain_dim) {}

LinMap LinMap::identity(std::size_t n) {
    LinMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

LinMap LinMap::diagonal(const Vector& d) {
    LinMap m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

LinMap LinMap::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    LinMap m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

LinMap LinMap::from_columns(const std::vector<Vector>& cols, std::size_t codomain_dim) {
    LinMap m(codomain_dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != codomain_dim) throw InputError("column length mismatch");
        for (std::size_t r = 0; r < codomain_dim; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vector LinMap::apply(const Vector& v) const {
    if (v.size() != cols_)
        throw InputError("apply: map with domain " + std::to_string(cols_) + " on vector of dim " +
                         std::to_string(v.size()));
    Vector r(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (at(i, c) != 0) r[i] += at(i, c) * v[c];
    }
    return r;
}

Vector LinMap::column(std::size_t j) const {
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
    return r;
}

LinMap LinMap::transpose() const {
    LinMap t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::optional<LinMap> LinMap::try_inverse() const {
    if (!square()) return std::nullopt;
    const std::size_t n = rows_;
    LinMap a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a.at(piv, k), a.at(col, k));
                std::swap(inv.at(piv, k), inv.at(col, k));
            }
        const Scalar p = a.at(col, col);
        for (std::size_t k = 0; k < n; ++k) {
            a.at(col, k) /= p;
            inv.at(col, k) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            const Scalar f = a.at(r, col);
            for (std::size_t k = 0; k < n; ++k) {
                if (a.at(col, k) != 0) a.at(r, k) -= f * a.at(col, k);
                if (inv.at(col, k) != 0) inv.at(r, k) -= f * inv.at(col, k);
            }
        }
    }
    return inv;
}

LinMap LinMap::inverse() const {
    auto inv = try_inverse();
    if (!inv) throw InputError("matrix is not invertible");
    return *inv;
}

std::size_t LinMap::rank() const {
    LinMap a = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && a.at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(a.at(piv, k), a.at(rank, k));
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (a.at(r, col) == 0) continue;
            const Scalar f = a.at(r, col) / a.at(rank, col);
            for (std::size_t k = col; k < cols_; ++k) a.at(r, k) -= f * a.at(rank, k);
        }
        ++rank;
    }
    return rank;
}

LinMap LinMap::power(int k) const {
    if (!square()) throw InputError("power of a non-square matrix");
    LinMap base = k < 0 ? inverse() : *this;
    unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    LinMap r = identity(rows_);
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool LinMap::is_identity() const { return square() && *this == identity(rows_); }

LinMap operator*(const LinMap& f, const LinMap& g) {
    if (f.cols_ != g.rows_)
        throw InputError("compose: inner dimensions " + std::to_string(f.cols_) + " and " + std::to_string(g.rows_));
    LinMap r(f.rows_, g.cols_);
    for (std::size_t i = 0; i < f.rows_; ++i)
        for (std::size_t k = 0; k < f.cols_; ++k) {
            if (f.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < g.cols_; ++j)
                if (g.at(k, j) != 0) r.at(i, j) += f.at(i, k) * g.at(k, j);
        }
    return r;
}

LinMap operator+(const LinMap& f, const LinMap& g) {
    if (f.rows_ != g.rows_ || f.cols_ != g.cols_) throw InputError("sum of maps with different shapes");
    LinMap r = f;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += g.a_[i];
    return r;
}

LinMap operator-(const LinMap& f, const LinMap& g) { return f + Scalar(-1) * g; }

LinMap operator*(const Scalar& s, const LinMap& f) {
    LinMap r = f;
    for (auto& x : r.a_) x *= s;
    return r;
}

bool operator==(const LinMap& f, const LinMap& g) {
    return f.rows_ == g.rows_ && f.cols_ == g.cols_ && f.a_ == g.a_;
}

LinMap dualize(const LinMap& f) { return f.transpose(); }

LinMap kron(const LinMap& f, const LinMap& g) {
    LinMap r(f.codomain_dim() * g.codomain_dim(), f.domain_dim() * g.domain_dim());
    for (std::size_t a = 0; a < f.codomain_dim(); ++a)
        for (std::size_t i = 0; i < f.domain_dim(); ++i) {
            if (f.at(a, i) == 0) continue;
            for (std::size_t b = 0; b < g.codomain_dim(); ++b)
                for (std::size_t j = 0; j < g.domain_dim(); ++j)
                    if (g.at(b, j) != 0)
                        r.at(a * g.codomain_dim() + b, i * g.domain_dim() + j) = f.at(a, i) * g.at(b, j);
        }
    return r;
}

// ---- MultilinearMap ----

MultilinearMap::MultilinearMap(std::vector<std::size_t> in_dims, std::vector<std::size_t> out_dims)
    : MultilinearMap(in_dims, out_dims, LinMap(flat_size(out_dims), flat_size(in_dims))) {}

MultilinearMap::MultilinearMap(std::vector<std::size_t> in_dims, std::vector<std::size_t> out_dims, LinMap flat)
    : in_(std::move(in_dims)), out_(std::move(out_dims)), flat_(std::move(flat)) {
    if (flat_.domain_dim() != flat_size(in_) || flat_.codomain_dim() != flat_size(out_))
        throw InputError("multilinear map entries do not match declared arities");
    sparse_.resize(flat_.domain_dim());
    for (std::size_t c = 0; c < flat_.domain_dim(); ++c)
        for (std::size_t r = 0; r < flat_.codomain_dim(); ++r)
            if (flat_.at(r, c) != 0) sparse_[c].emplace_back(r, flat_.at(r, c));
}

MultilinearMap MultilinearMap::from_linmap(const LinMap& f) {
    return MultilinearMap({f.domain_dim()}, {f.codomain_dim()}, f);
}

MultilinearMap MultilinearMap::functional(const Vector& p) {
    LinMap row(1, p.size());
    for (std::size_t i = 0; i < p.size(); ++i) row.at(0, i) = p[i];
    return MultilinearMap({p.size()}, {}, row);
}

MultilinearMap tensor(const MultilinearMap& f, const MultilinearMap& g) {
    auto in = f.in_dims();
    in.insert(in.end(), g.in_dims().begin(), g.in_dims().end());
    auto out = f.out_dims();
    out.insert(out.end(), g.out_dims().begin(), g.out_dims().end());
    return MultilinearMap(in, out, kron(f.flat(), g.flat()));
}

MultilinearMap tensor(const LinMap& f, const LinMap& g) {
    return tensor(MultilinearMap::from_linmap(f), MultilinearMap::from_linmap(g));
}

}  // namespace homhopf
