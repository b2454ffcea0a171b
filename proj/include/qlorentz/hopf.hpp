#pragma once

#include "qlorentz/spinor_metric.hpp"
#include "qlorentz/word.hpp"

#include <array>

namespace qlorentz {

/// Coproduct, counit, antipode and star on the free words; the engine decides
/// equality modulo the relation ideal.
class HopfOps {
public:
    HopfOps(const ParameterSet& p, const SpinorMetric& m) : drop_(p.tolerance * p.tolerance) {
        for (std::uint8_t gid = 0; gid < 8; ++gid) {
            GeneratorId g = GeneratorId::from_id(gid);
            const Tensor& L = g.dotted ? m.eps_lower_dotted : m.eps_lower;
            const Tensor& U = g.dotted ? m.eps_upper_dotted : m.eps_upper;
            AlgebraElement s, si;
            // S(M_a^b) = eps_{a g} M_d^g eps^{d b}
            for (std::uint8_t dta = 0; dta < 2; ++dta)
                for (std::uint8_t gma = 0; gma < 2; ++gma) {
                    Cplx v = L.at({g.row, gma}) * U.at({dta, g.col});
                    s.add(Word::single(GeneratorId{g.dotted, dta, gma}.id()), v, drop_);
                }
            // S^{-1}(M_a^b) = eps^{b m} M_m^n eps_{n a}
            for (std::uint8_t mm = 0; mm < 2; ++mm)
                for (std::uint8_t nn = 0; nn < 2; ++nn) {
                    Cplx v = U.at({g.col, mm}) * L.at({nn, g.row});
                    si.add(Word::single(GeneratorId{g.dotted, mm, nn}.id()), v, drop_);
                }
            s_gen_[gid] = std::move(s);
            sinv_gen_[gid] = std::move(si);
        }
    }

    const Real& drop() const { return drop_; }
    const AlgebraElement& antipode_gen(std::uint8_t gid) const { return s_gen_[gid]; }
    const AlgebraElement& antipode_inv_gen(std::uint8_t gid) const { return sinv_gen_[gid]; }

    /// Antimultiplicative extension: S(g1...gn) = S(gn)...S(g1).
    AlgebraElement antipode(const AlgebraElement& e, bool inverse = false) const {
        AlgebraElement out;
        for (const auto& [w, c] : e.terms()) {
            AlgebraElement acc = AlgebraElement::unit(c);
            for (std::size_t i = w.len; i-- > 0;) {
                const AlgebraElement& table = inverse ? sinv_gen_[w[i]] : s_gen_[w[i]];
                acc = mul(acc, table, drop_);
            }
            out.add_scaled(acc, Cplx(1), drop_);
        }
        return out;
    }

    /// Conjugate coefficients, toggle dotting letterwise, reverse the word.
    AlgebraElement star(const AlgebraElement& e) const {
        AlgebraElement out;
        for (const auto& [w, c] : e.terms()) {
            Word nw;
            for (std::size_t i = w.len; i-- > 0;) nw = nw.appended((w[i] + 4) % 8);
            out.add(nw, c.conj(), drop_);
        }
        return out;
    }

    Cplx counit(const AlgebraElement& e) const {
        Cplx acc;
        for (const auto& [w, c] : e.terms()) {
            bool diag = true;
            for (std::uint8_t i = 0; i < w.len; ++i) {
                GeneratorId g = GeneratorId::from_id(w[i]);
                if (g.row != g.col) {
                    diag = false;
                    break;
                }
            }
            if (diag) acc += c;
        }
        return acc;
    }

    TensorSquare coproduct_word(const Word& w) const {
        AlgebraElement e;
        e.add(w, Cplx(1), drop_);
        return coproduct(e);
    }

    TensorSquare coproduct(const AlgebraElement& e) const {
        TensorSquare out;
        for (const auto& [w, c] : e.terms()) {
            // Delta(M_a^b) = sum_k M_a^k (x) M_k^b, extended multiplicatively
            std::size_t nsplits = std::size_t(1) << w.len;
            for (std::size_t mask = 0; mask < nsplits; ++mask) {
                Word w1, w2;
                for (std::uint8_t i = 0; i < w.len; ++i) {
                    GeneratorId g = GeneratorId::from_id(w[i]);
                    std::uint8_t k = (mask >> i) & 1;
                    w1 = w1.appended(GeneratorId{g.dotted, g.row, k}.id());
                    w2 = w2.appended(GeneratorId{g.dotted, k, g.col}.id());
                }
                out.add(w1, w2, c, drop_);
            }
        }
        return out;
    }

private:
    std::array<AlgebraElement, 8> s_gen_, sinv_gen_;
    Real drop_;
};

}  // namespace qlorentz
