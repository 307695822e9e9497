#include "homhopf/tensor.hpp"

#include <sstream>

namespace homhopf {

namespace {

LegIndex make_index(const std::vector<std::size_t>& idx) {
    if (idx.size() > LegIndex::kMaxLegs) throw InputError("tensor has too many legs");
    LegIndex r;
    r.n = static_cast<std::uint8_t>(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) r.v[k] = static_cast<std::uint16_t>(idx[k]);
    return r;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.size() > LegIndex::kMaxLegs) throw InputError("tensor has too many legs");
}

Tensor Tensor::basis(std::vector<std::size_t> dims, const std::vector<std::size_t>& idx) {
    if (dims.size() != idx.size()) throw InputError("basis index length mismatch");
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (idx[k] >= dims[k]) throw InputError("basis index out of range");
    Tensor t(std::move(dims));
    t.terms_.emplace(make_index(idx), Scalar(1));
    return t;
}

Tensor Tensor::from_vector(const Vector& v) {
    Tensor t({v.size()});
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) t.terms_.emplace(make_index({i}), v[i]);
    return t;
}

Tensor Tensor::from_flat(std::vector<std::size_t> dims, const Vector& flat) {
    if (flat.size() != flat_size(dims)) throw InputError("flat vector does not match tensor shape");
    Tensor t(dims);
    for (std::size_t f = 0; f < flat.size(); ++f)
        if (flat[f] != 0) t.terms_.emplace(make_index(unflatten_index(t.dims_, f)), flat[f]);
    return t;
}

Tensor Tensor::scalar(const Scalar& s) {
    Tensor t;
    if (s != 0) t.terms_.emplace(LegIndex{}, s);
    return t;
}

void Tensor::add_term(const LegIndex& idx, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar Tensor::coefficient(const std::vector<std::size_t>& idx) const {
    auto it = terms_.find(make_index(idx));
    return it == terms_.end() ? Scalar(0) : it->second;
}

Tensor Tensor::apply(const MultilinearMap& f, std::initializer_list<std::size_t> legs) const {
    return apply(f, std::vector<std::size_t>(legs));
}

Tensor Tensor::apply(const MultilinearMap& f, const std::vector<std::size_t>& legs) const {
    const auto& in = f.in_dims();
    const auto& out = f.out_dims();
    if (legs.size() != in.size()) throw InputError("apply: leg count does not match map arity");
    std::vector<bool> used(dims_.size(), false);
    for (std::size_t k = 0; k < legs.size(); ++k) {
        if (legs[k] >= dims_.size() || used[legs[k]]) throw InputError("apply: bad leg list");
        if (dims_[legs[k]] != in[k]) throw InputError("apply: leg dimension does not match map input");
        used[legs[k]] = true;
    }
    std::vector<std::size_t> rest;
    std::size_t insert_at = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (used[k]) continue;
        if (!legs.empty() && k < legs[0]) ++insert_at;
        rest.push_back(k);
    }
    std::vector<std::size_t> new_dims;
    for (std::size_t k = 0; k < insert_at; ++k) new_dims.push_back(dims_[rest[k]]);
    new_dims.insert(new_dims.end(), out.begin(), out.end());
    for (std::size_t k = insert_at; k < rest.size(); ++k) new_dims.push_back(dims_[rest[k]]);

    Tensor r(new_dims);
    for (const auto& [idx, c] : terms_) {
        std::size_t in_flat = 0;
        for (std::size_t k = 0; k < legs.size(); ++k) in_flat = in_flat * in[k] + idx.v[legs[k]];
        LegIndex nidx;
        nidx.n = static_cast<std::uint8_t>(new_dims.size());
        for (std::size_t k = 0; k < insert_at; ++k) nidx.v[k] = idx.v[rest[k]];
        for (std::size_t k = insert_at; k < rest.size(); ++k) nidx.v[k + out.size()] = idx.v[rest[k]];
        for (const auto& [out_flat, fc] : f.column(in_flat)) {
            std::size_t o = out_flat;
            for (std::size_t k = out.size(); k-- > 0;) {
                nidx.v[insert_at + k] = static_cast<std::uint16_t>(o % out[k]);
                o /= out[k];
            }
            r.add_term(nidx, c * fc);
        }
    }
    return r;
}

Tensor Tensor::apply(const LinMap& f, std::size_t leg) const {
    if (leg >= dims_.size() || dims_[leg] != f.domain_dim()) throw InputError("apply: bad leg for linear map");
    std::vector<std::size_t> new_dims = dims_;
    new_dims[leg] = f.codomain_dim();
    Tensor r(new_dims);
    for (const auto& [idx, c] : terms_) {
        LegIndex nidx = idx;
        const std::size_t j = idx.v[leg];
        for (std::size_t i = 0; i < f.codomain_dim(); ++i) {
            if (f.at(i, j) == 0) continue;
            nidx.v[leg] = static_cast<std::uint16_t>(i);
            r.add_term(nidx, c * f.at(i, j));
        }
    }
    return r;
}

Tensor Tensor::permute(const std::vector<std::size_t>& order) const {
    if (order.size() != dims_.size()) throw InputError("permute: order length mismatch");
    std::vector<std::size_t> new_dims(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = dims_.at(order[k]);
    Tensor r(new_dims);
    for (const auto& [idx, c] : terms_) {
        LegIndex nidx;
        nidx.n = idx.n;
        for (std::size_t k = 0; k < order.size(); ++k) nidx.v[k] = idx.v[order[k]];
        r.terms_.emplace(nidx, c);
    }
    return r;
}

Tensor Tensor::swap(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> order(dims_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::swap(order.at(a), order.at(b));
    return permute(order);
}

Vector Tensor::flatten() const {
    Vector v(flat_size(dims_));
    for (const auto& [idx, c] : terms_) {
        std::size_t f = 0;
        for (std::size_t k = 0; k < dims_.size(); ++k) f = f * dims_[k] + idx.v[k];
        v[f] = c;
    }
    return v;
}

Vector Tensor::to_vector() const {
    if (dims_.size() != 1) throw InputError("to_vector on a tensor with " + std::to_string(dims_.size()) + " legs");
    return flatten();
}

Scalar Tensor::to_scalar() const {
    if (!dims_.empty()) throw InputError("to_scalar on a tensor with legs");
    return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

Tensor Tensor::operator+(const Tensor& o) const {
    if (dims_ != o.dims_) throw InputError("sum of tensors with different shapes");
    Tensor r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + Scalar(-1) * o; }

Tensor operator*(const Scalar& s, const Tensor& t) {
    Tensor r(t.dims_);
    if (s == 0) return r;
    for (const auto& [idx, c] : t.terms_) r.terms_.emplace(idx, s * c);
    return r;
}

std::string Tensor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << format_scalar(c);
        if (idx.n) {
            os << "*e[";
            for (std::size_t k = 0; k < idx.n; ++k) os << (k ? "," : "") << idx.v[k];
            os << "]";
        }
    }
    return os.str();
}

Tensor outer(const Tensor& a, const Tensor& b) {
    auto dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    Tensor r(dims);
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            LegIndex idx = ia;
            idx.n = static_cast<std::uint8_t>(ia.n + ib.n);
            for (std::size_t k = 0; k < ib.n; ++k) idx.v[ia.n + k] = ib.v[k];
            r.add_term(idx, ca * cb);
        }
    return r;
}

MultilinearMap tabulate(const std::vector<std::size_t>& in_dims, const std::vector<std::size_t>& out_dims,
                        const std::function<Tensor(const Tensor&)>& f) {
    LinMap flat(flat_size(out_dims), flat_size(in_dims));
    for (std::size_t c = 0; c < flat.domain_dim(); ++c) {
        const Tensor in = in_dims.empty() ? Tensor::scalar(1) : Tensor::basis(in_dims, unflatten_index(in_dims, c));
        const Tensor out = f(in);
        if (out.dims() != out_dims) throw InputError("tabulate: value has the wrong shape");
        const Vector col = out.dims().empty() ? Vector{out.to_scalar()} : out.flatten();
        for (std::size_t r = 0; r < col.size(); ++r) flat.at(r, c) = col[r];
    }
    return MultilinearMap(in_dims, out_dims, std::move(flat));
}

MultilinearMap reshape(const MultilinearMap& f, std::vector<std::size_t> in_dims, std::vector<std::size_t> out_dims) {
    return MultilinearMap(std::move(in_dims), std::move(out_dims), f.flat());
}

}  // namespace homhopf
