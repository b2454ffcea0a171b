#pragma once

#include "qlorentz/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace qlorentz {

enum class Family { Spinor, SpinorDot, Vector };
enum class Variance { Upper, Lower };

struct IndexKind {
    Family family;
    Variance variance;

    std::size_t range() const { return family == Family::Vector ? 4 : 2; }
    bool operator==(const IndexKind& o) const = default;
};

inline IndexKind up(Family f) { return {f, Variance::Upper}; }
inline IndexKind lo(Family f) { return {f, Variance::Lower}; }

/// Dense multi-index array of Cplx with a typed signature. Immutable by
/// convention once built; mutation is confined to construction sites.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<IndexKind> sig) : sig_(std::move(sig)) {
        std::size_t n = 1;
        for (const auto& k : sig_) n *= k.range();
        data_.assign(n, Cplx());
    }

    const std::vector<IndexKind>& signature() const { return sig_; }
    std::size_t rank() const { return sig_.size(); }
    std::size_t size() const { return data_.size(); }

    Cplx& at(std::initializer_list<std::size_t> idx) { return data_[offset(idx.begin(), idx.size())]; }
    const Cplx& at(std::initializer_list<std::size_t> idx) const {
        return data_[offset(idx.begin(), idx.size())];
    }
    Cplx& at(const std::vector<std::size_t>& idx) { return data_[offset(idx.data(), idx.size())]; }
    const Cplx& at(const std::vector<std::size_t>& idx) const {
        return data_[offset(idx.data(), idx.size())];
    }

    Cplx& flat(std::size_t i) { return data_[i]; }
    const Cplx& flat(std::size_t i) const { return data_[i]; }

    /// Decodes a flat offset into per-axis indices.
    std::vector<std::size_t> unflatten(std::size_t off) const {
        std::vector<std::size_t> idx(sig_.size());
        for (std::size_t k = sig_.size(); k-- > 0;) {
            idx[k] = off % sig_[k].range();
            off /= sig_[k].range();
        }
        return idx;
    }

    Real max_abs() const {
        Real m(0);
        for (const auto& c : data_) {
            Real v = c.abs();
            if (v > m) m = v;
        }
        return m;
    }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        Tensor out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }
    friend Tensor operator-(const Tensor& a, const Tensor& b) {
        Tensor out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }
    friend Tensor operator*(const Cplx& c, const Tensor& t) {
        Tensor out = t;
        for (auto& v : out.data_) v = c * v;
        return out;
    }

private:
    std::size_t offset(const std::size_t* idx, std::size_t n) const {
        std::size_t off = 0;
        for (std::size_t k = 0; k < n; ++k) off = off * sig_[k].range() + idx[k];
        return off;
    }

    std::vector<IndexKind> sig_;
    std::vector<Cplx> data_;
};

/// Single-axis contraction. The contracted axes must share a family and have
/// opposite variance; the result signature is the concatenation of the
/// remaining axes of t1 then t2.
inline Tensor contract(const Tensor& t1, std::size_t ax1, const Tensor& t2, std::size_t ax2) {
    const auto& k1 = t1.signature().at(ax1);
    const auto& k2 = t2.signature().at(ax2);
    if (k1.family != k2.family) throw IndexMismatch("contract: index families differ");
    if (k1.variance == k2.variance) throw IndexMismatch("contract: need opposite variance");

    std::vector<IndexKind> sig;
    for (std::size_t i = 0; i < t1.rank(); ++i)
        if (i != ax1) sig.push_back(t1.signature()[i]);
    for (std::size_t i = 0; i < t2.rank(); ++i)
        if (i != ax2) sig.push_back(t2.signature()[i]);
    Tensor out(std::move(sig));

    const std::size_t range = k1.range();
    std::vector<std::size_t> i1(t1.rank()), i2(t2.rank()), io(out.rank());
    for (std::size_t o = 0; o < out.size(); ++o) {
        io = out.unflatten(o);
        std::size_t p = 0;
        for (std::size_t i = 0; i < t1.rank(); ++i)
            if (i != ax1) i1[i] = io[p++];
        for (std::size_t i = 0; i < t2.rank(); ++i)
            if (i != ax2) i2[i] = io[p++];
        Cplx acc;
        for (std::size_t s = 0; s < range; ++s) {
            i1[ax1] = s;
            i2[ax2] = s;
            acc += t1.at(i1) * t2.at(i2);
        }
        out.flat(o) = acc;
    }
    return out;
}

/// Applies a 2x2 metric along one spinor axis in place of the original axis,
/// with the contraction side fixed by the caller (metric_first: sum over the
/// metric's first index; otherwise over its second).
inline Tensor apply_metric(const Tensor& t, std::size_t axis, const Tensor& metric, bool metric_first,
                           Variance new_variance) {
    const auto& k = t.signature().at(axis);
    if (k.family == Family::Vector) throw IndexMismatch("vector indices are raised with G, not eps");
    std::vector<IndexKind> sig = t.signature();
    sig[axis] = {k.family, new_variance};
    Tensor out(std::move(sig));
    std::vector<std::size_t> it(t.rank());
    for (std::size_t o = 0; o < out.size(); ++o) {
        auto io = out.unflatten(o);
        Cplx acc;
        for (std::size_t s = 0; s < 2; ++s) {
            it = io;
            it[axis] = s;
            const Cplx& m = metric_first ? metric.at({s, io[axis]}) : metric.at({io[axis], s});
            acc += t.at(it) * m;
        }
        out.flat(o) = acc;
    }
    return out;
}

/// Conjugate entries, toggle dotting on every index, reverse the index order.
inline Tensor star_tensor(const Tensor& t) {
    std::vector<IndexKind> sig;
    for (std::size_t i = t.rank(); i-- > 0;) {
        IndexKind k = t.signature()[i];
        if (k.family == Family::Vector) throw IndexMismatch("star_tensor: vector index");
        k.family = k.family == Family::Spinor ? Family::SpinorDot : Family::Spinor;
        sig.push_back(k);
    }
    Tensor out(std::move(sig));
    std::vector<std::size_t> it(t.rank());
    for (std::size_t o = 0; o < out.size(); ++o) {
        auto io = out.unflatten(o);
        for (std::size_t i = 0; i < t.rank(); ++i) it[i] = io[t.rank() - 1 - i];
        out.flat(o) = t.at(it).conj();
    }
    return out;
}

inline Tensor identity2(Family fam) {
    Tensor t({up(fam), lo(fam)});
    t.at({0, 0}) = Cplx(1);
    t.at({1, 1}) = Cplx(1);
    return t;
}

inline Real residual_between(const Tensor& a, const Tensor& b) { return (a - b).max_abs(); }

}  // namespace qlorentz
