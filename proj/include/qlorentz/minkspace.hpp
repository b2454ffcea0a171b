#pragma once

#include "qlorentz/lorentz.hpp"

#include <vector>

namespace qlorentz {

enum class SymbolKind : std::uint8_t { X = 0, Theta = 1, ThetaDot = 2 };

/// Coordinate or spinor basis symbol with its functional-sign tag.
struct ModuleSymbol {
    SymbolKind kind;
    int sign;            // +1 / -1
    std::uint8_t index;  // vector 0..3 for X, spinor 0..1 for theta

    /// Canonical symbol order: X before theta before dotted theta, + before -,
    /// ascending index.
    friend std::strong_ordering operator<=>(const ModuleSymbol& a, const ModuleSymbol& b) {
        if (a.kind != b.kind) return a.kind <=> b.kind;
        if (a.sign != b.sign) return b.sign <=> a.sign;  // + first
        return a.index <=> b.index;
    }
    friend bool operator==(const ModuleSymbol&, const ModuleSymbol&) = default;
};

using ModWord = std::vector<ModuleSymbol>;

/// Finite combination (algebra element) x (module word), algebra part left.
struct ModuleElement {
    std::map<ModWord, AlgebraElement> terms;

    void add(const ModWord& w, const AlgebraElement& coeff, const Real& drop) {
        if (coeff.empty()) return;
        auto it = terms.find(w);
        if (it == terms.end())
            terms.emplace(w, coeff);
        else {
            it->second.add_scaled(coeff, Cplx(1), drop);
            if (it->second.empty()) terms.erase(it);
        }
    }
    Real max_abs() const {
        Real m(0);
        for (const auto& [w, c] : terms) {
            Real v = c.max_abs();
            if (v > m) m = v;
        }
        return m;
    }
};

/// Exchange machinery of the A-module: push-through rules for symbols and the
/// braided symmetrization of adjacent symbols.
class MinkowskiSpace {
public:
    MinkowskiSpace(const ParameterSet& p, const HopfOps& hopf, const LittleF& f,
                   const FFunctional& F, const LorentzGenerators& lg)
        : drop_(p.tolerance * p.tolerance), hopf_(hopf), f_(f), F_(F), lg_(lg) {}

    /// symbol . a  =  sum (a * functional) . symbol'
    ModuleElement push_left(const AlgebraElement& a, const ModuleSymbol& s) const {
        ModuleElement out;
        if (s.kind == SymbolKind::X) {
            for (std::uint8_t K = 0; K < 4; ++K) {
                AlgebraElement c = F_.conv_elem_F(a, s.sign, s.index, K, drop_);
                out.add({ModuleSymbol{s.kind, s.sign, K}}, c, drop_);
            }
        } else {
            bool dotted = s.kind == SymbolKind::ThetaDot;
            auto conv = f_.conv_elem_f(a, FKind::F, dotted, s.sign, hopf_);
            for (std::uint8_t b = 0; b < 2; ++b)
                out.add({ModuleSymbol{s.kind, s.sign, b}}, conv[s.index][b], drop_);
        }
        return out;
    }

    /// a . symbol = sum symbol' . (a * functional o S); the result is returned
    /// in the (symbol-left) convention of Eqs. (4)-(5), i.e. as coefficients
    /// indexed by the outgoing symbol.
    std::vector<std::pair<ModuleSymbol, AlgebraElement>> push_right(const AlgebraElement& a,
                                                                    const ModuleSymbol& s) const {
        std::vector<std::pair<ModuleSymbol, AlgebraElement>> out;
        for (const auto& [pair, c] : hopf_.coproduct(a).terms) {
            AlgebraElement w1;
            w1.add(pair.first, Cplx(1), drop_);
            AlgebraElement sw1 = hopf_.antipode(w1);
            if (s.kind == SymbolKind::X) {
                for (std::uint8_t K = 0; K < 4; ++K) {
                    Cplx v = F_.eval(s.sign, s.index, K, sw1);
                    if (v.abs2() <= drop_ * drop_) continue;
                    AlgebraElement coeff;
                    coeff.add(pair.second, c * v, drop_);
                    append(out, ModuleSymbol{s.kind, s.sign, K}, coeff);
                }
            } else {
                bool dotted = s.kind == SymbolKind::ThetaDot;
                auto m2 = f_.on_elem(FKind::F, dotted, s.sign, sw1);
                for (std::uint8_t b = 0; b < 2; ++b) {
                    const Cplx& v = m2[s.index][b];
                    if (v.abs2() <= drop_ * drop_) continue;
                    AlgebraElement coeff;
                    coeff.add(pair.second, c * v, drop_);
                    append(out, ModuleSymbol{s.kind, s.sign, b}, coeff);
                }
            }
        }
        return out;
    }

    /// module word . a, pushing a leftward through every symbol.
    ModuleElement right_mul(const ModuleElement& me, const AlgebraElement& a) const {
        ModuleElement out;
        for (const auto& [w, coeff] : me.terms) {
            // push a through the suffix symbols right-to-left
            std::map<ModWord, AlgebraElement> cur;
            cur.emplace(ModWord{}, a);
            for (std::size_t i = w.size(); i-- > 0;) {
                std::map<ModWord, AlgebraElement> nxt;
                for (const auto& [sfx, elem] : cur) {
                    ModuleElement pushed = push_left(elem, w[i]);
                    for (const auto& [sw, c2] : pushed.terms) {
                        ModWord nw = sw;  // single symbol
                        nw.insert(nw.end(), sfx.begin(), sfx.end());
                        auto it = nxt.find(nw);
                        if (it == nxt.end())
                            nxt.emplace(std::move(nw), c2);
                        else
                            it->second.add_scaled(c2, Cplx(1), drop_);
                    }
                }
                cur = std::move(nxt);
            }
            for (const auto& [sfx, elem] : cur) out.add(sfx, mul(coeff, elem, drop_), drop_);
        }
        return out;
    }

    ModuleElement left_mul(const AlgebraElement& a, const ModuleElement& me) const {
        ModuleElement out;
        for (const auto& [w, coeff] : me.terms) out.add(w, mul(a, coeff, drop_), drop_);
        return out;
    }

    /// The braided swap of the adjacent symbols at `pos`:
    /// u_(a)P v_(b)K -> Phi_(b)K^N(S(T_(a)P^M)) v_(b)N u_(a)M.
    ModuleElement symmetrize_swap(const ModuleElement& me, std::size_t pos) const {
        ModuleElement out;
        for (const auto& [w, coeff] : me.terms) {
            if (pos + 1 >= w.size()) {
                out.add(w, coeff, drop_);
                continue;
            }
            const ModuleSymbol u = w[pos], v = w[pos + 1];
            std::size_t nu = u.kind == SymbolKind::X ? 4 : 2;
            std::size_t nv = v.kind == SymbolKind::X ? 4 : 2;
            for (std::uint8_t N = 0; N < nv; ++N)
                for (std::uint8_t M = 0; M < nu; ++M) {
                    Cplx c = swap_coeff(u, v, N, M);
                    if (c.abs2() <= drop_ * drop_) continue;
                    ModWord nw = w;
                    nw[pos] = ModuleSymbol{v.kind, v.sign, N};
                    nw[pos + 1] = ModuleSymbol{u.kind, u.sign, M};
                    out.add(nw, coeff.scaled(c), drop_);
                }
        }
        return out;
    }

    /// Bubble toward the canonical symbol order, swapping only across
    /// (kind, sign) boundaries; index order inside equal (kind, sign) runs is
    /// not an orientation because the braiding mixes indices.
    ModuleElement symmetrize(const ModuleElement& me) const {
        ModuleElement cur = me;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [w, coeff] : cur.terms) {
                for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                    auto ka = std::make_pair(w[i].kind, -w[i].sign);
                    auto kb = std::make_pair(w[i + 1].kind, -w[i + 1].sign);
                    if (kb < ka) {
                        cur = symmetrize_swap_word(cur, w, i);
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
            }
        }
        return cur;
    }

    /// Coefficient of the braiding swap:
    /// Phi_(b)(S(T_(a))) with Phi the passed-through symbol's functional.
    Cplx swap_coeff(const ModuleSymbol& u, const ModuleSymbol& v, std::uint8_t N, std::uint8_t M) const {
        AlgebraElement arg = antipode_of_generator(u, M);
        if (v.kind == SymbolKind::X) return F_.eval(v.sign, v.index, N, arg);
        bool dotted = v.kind == SymbolKind::ThetaDot;
        return f_.on_elem(FKind::F, dotted, v.sign, arg)[v.index][N];
    }

private:
    static void append(std::vector<std::pair<ModuleSymbol, AlgebraElement>>& out,
                       const ModuleSymbol& s, const AlgebraElement& c) {
        for (auto& [sym, elem] : out)
            if (sym == s) {
                elem.add_scaled(c, Cplx(1), Real(0));
                return;
            }
        out.emplace_back(s, c);
    }

    /// S(T_(a)P^M) for the coaction generator matrix of the symbol family.
    AlgebraElement antipode_of_generator(const ModuleSymbol& u, std::uint8_t M) const {
        if (u.kind == SymbolKind::X) return hopf_.antipode(lg_.lambda[u.index][M]);
        bool dotted = u.kind == SymbolKind::ThetaDot;
        return hopf_.antipode(
            AlgebraElement::generator(GeneratorId{dotted, u.index, M}.id()));
    }

    ModuleElement symmetrize_swap_word(const ModuleElement& me, const ModWord& target,
                                       std::size_t pos) const {
        ModuleElement out;
        for (const auto& [w, coeff] : me.terms) {
            if (w != target) {
                out.add(w, coeff, drop_);
                continue;
            }
            ModuleElement one;
            one.add(w, coeff, drop_);
            ModuleElement swapped = symmetrize_swap(one, pos);
            for (const auto& [nw, nc] : swapped.terms) out.add(nw, nc, drop_);
        }
        return out;
    }

    Real drop_;
    const HopfOps& hopf_;
    const LittleF& f_;
    const FFunctional& F_;
    const LorentzGenerators& lg_;
};

struct CentralityReport {
    Real vs_generators;       // (49): N commutes with the 8 generators
    Real vs_coordinates;      // (50): N commutes with X_{+-P}, both tags
    Real vs_spinors;          // (50): N commutes with theta and dotted theta
    Real witness_biinvariance;
    Real witness_min_residual;  // smallest max-residual over the mixed quantities
    bool witness_applies;       // generic points only
};

/// Theorem (4,1): N_s = G_s^{IJ} X_{sI} X_{sJ} is central; the mixed-sign
/// quantities are biinvariant but fail centrality away from the classical
/// point.
inline CentralityReport verify_norm_central(const ParameterSet& p, const MinkowskiMetric& mm,
                                            const HopfOps& hopf, const NormalFormEngine& eng,
                                            const MinkowskiSpace& msp) {
    const Real drop = p.tolerance * p.tolerance;
    CentralityReport rep{Real(0), Real(0), Real(0), Real(0), Real(0), false};
    auto upd = [](Real& m0, const Real& v) { if (v > m0) m0 = v; };

    auto norm_element = [&](int s, int metric_sign) {
        ModuleElement n;
        for (std::uint8_t I = 0; I < 4; ++I)
            for (std::uint8_t J = 0; J < 4; ++J) {
                const Cplx& g = mm.upper(metric_sign)(I, J);
                if (g.abs2() <= drop * drop) continue;
                n.add({ModuleSymbol{SymbolKind::X, s, I}, ModuleSymbol{SymbolKind::X, s, J}},
                      AlgebraElement::unit(g), drop);
            }
        return n;
    };

    // (i) commutators with the generators via the push rules
    for (int s : {+1, -1}) {
        ModuleElement n = norm_element(s, s);
        for (std::uint8_t g = 0; g < 8; ++g) {
            AlgebraElement a = AlgebraElement::generator(g);
            ModuleElement lhs = msp.right_mul(n, a);
            ModuleElement rhs = msp.left_mul(a, n);
            for (const auto& [w, c] : rhs.terms) lhs.add(w, c.scaled(Cplx(-1)), drop);
            for (const auto& [w, c] : lhs.terms) upd(rep.vs_generators, eng.reduce_residual(c));
        }
    }

    // (ii)/(iii) commutators with coordinates and spinors through the braiding
    auto commutator_residual = [&](int s, const ModuleSymbol& sym, Real& into) {
        ModuleElement lhs;
        for (std::uint8_t I = 0; I < 4; ++I)
            for (std::uint8_t J = 0; J < 4; ++J) {
                const Cplx& g = mm.upper(s)(I, J);
                if (g.abs2() <= drop * drop) continue;
                lhs.add({sym, ModuleSymbol{SymbolKind::X, s, I}, ModuleSymbol{SymbolKind::X, s, J}},
                        AlgebraElement::unit(g), drop);
            }
        lhs = msp.symmetrize_swap(msp.symmetrize_swap(lhs, 0), 1);
        for (std::uint8_t N = 0; N < 4; ++N)
            for (std::uint8_t K = 0; K < 4; ++K) {
                const Cplx& g = mm.upper(s)(N, K);
                if (g.abs2() <= drop * drop) continue;
                lhs.add({ModuleSymbol{SymbolKind::X, s, N}, ModuleSymbol{SymbolKind::X, s, K}, sym},
                        AlgebraElement::unit(-g), drop);
            }
        Real worst(0);
        for (const auto& [w, c] : lhs.terms) {
            Real v = c.max_abs();
            if (v > worst) worst = v;
        }
        if (worst > into) into = worst;
    };

    for (int s : {+1, -1})
        for (int tag : {+1, -1}) {
            for (std::uint8_t P = 0; P < 4; ++P)
                commutator_residual(s, ModuleSymbol{SymbolKind::X, tag, P}, rep.vs_coordinates);
            for (std::uint8_t al = 0; al < 2; ++al) {
                commutator_residual(s, ModuleSymbol{SymbolKind::Theta, tag, al}, rep.vs_spinors);
                commutator_residual(s, ModuleSymbol{SymbolKind::ThetaDot, tag, al}, rep.vs_spinors);
            }
        }

    // Remark (4,1) witnesses: G_s with X_{-s} X_{-s} and X_{-s} X_{+s}
    rep.witness_applies = !(p.q == 1 && p.r == 0);
    Real witness_min(-1);
    for (int s : {+1, -1}) {
        for (int mode : {0, 1}) {
            ModuleElement lhs;
            ModuleSymbol probe{SymbolKind::X, s, 0};
            for (std::uint8_t I = 0; I < 4; ++I)
                for (std::uint8_t J = 0; J < 4; ++J) {
                    const Cplx& g = mm.upper(s)(I, J);
                    if (g.abs2() <= drop * drop) continue;
                    int tag1 = -s, tag2 = mode == 0 ? -s : +s;
                    lhs.add({probe, ModuleSymbol{SymbolKind::X, tag1, I},
                             ModuleSymbol{SymbolKind::X, tag2, J}},
                            AlgebraElement::unit(g), drop);
                }
            lhs = msp.symmetrize_swap(msp.symmetrize_swap(lhs, 0), 1);
            for (std::uint8_t N = 0; N < 4; ++N)
                for (std::uint8_t K = 0; K < 4; ++K) {
                    const Cplx& g = mm.upper(s)(N, K);
                    if (g.abs2() <= drop * drop) continue;
                    int tag1 = -s, tag2 = mode == 0 ? -s : +s;
                    lhs.add({ModuleSymbol{SymbolKind::X, tag1, N}, ModuleSymbol{SymbolKind::X, tag2, K},
                             probe},
                            AlgebraElement::unit(-g), drop);
                }
            Real worst(0);
            for (const auto& [w, c] : lhs.terms) {
                Real v = c.max_abs();
                if (v > worst) worst = v;
            }
            if (witness_min < 0 || worst < witness_min) witness_min = worst;
        }
    }
    rep.witness_min_residual = witness_min < 0 ? Real(0) : witness_min;
    return rep;
}

struct CorepReport {
    Real coassociativity;
    Real counit_axiom;
    Real biinvariance;          // Delta_L(N_s) = I (x) N_s via orthogonality
    Real witness_biinvariance;  // the mixed quantities are still biinvariant
};

inline CorepReport verify_corepresentation(const ParameterSet& p, const MinkowskiMetric& mm,
                                           const HopfOps& hopf, const NormalFormEngine& eng,
                                           const LorentzGenerators& lg) {
    const Real drop = p.tolerance * p.tolerance;
    CorepReport rep{Real(0), Real(0), Real(0), Real(0)};
    auto upd = [](Real& m0, const Real& v) { if (v > m0) m0 = v; };

    // (Delta (x) id)Delta_L = (id (x) Delta_L)Delta_L on the coordinate space:
    // coefficientwise this is Delta(Lambda_L^M) = Lambda_L^K (x) Lambda_K^M.
    for (int L = 0; L < 4; ++L)
        for (int M = 0; M < 4; ++M) {
            TensorSquare lhs = hopf.coproduct(lg.lambda[L][M]);
            for (int K = 0; K < 4; ++K)
                for (const auto& [w1, c1] : lg.lambda[L][K].terms())
                    for (const auto& [w2, c2] : lg.lambda[K][M].terms())
                        lhs.add(w1, w2, -(c1 * c2), drop);
            upd(rep.coassociativity, lhs.max_abs());
        }

    // (eps (x) id)Delta_L = id: eps(Lambda_L^K) X_K = X_L
    for (int L = 0; L < 4; ++L)
        for (int K = 0; K < 4; ++K)
            upd(rep.counit_axiom, (hopf.counit(lg.lambda[L][K]) - Cplx(L == K ? 1 : 0)).abs());

    // Delta_L(G^{IJ} X_I X_J) = G^{IJ} Lambda_I^K Lambda_J^L (x) X_K X_L
    for (int s : {+1, -1})
        for (int K = 0; K < 4; ++K)
            for (int L = 0; L < 4; ++L) {
                AlgebraElement acc;
                acc.add(Word::unit(), -mm.upper(s)(K, L), drop);
                for (int I = 0; I < 4; ++I)
                    for (int J = 0; J < 4; ++J) {
                        const Cplx& g = mm.upper(s)(I, J);
                        if (g.abs2() > drop * drop)
                            acc.add_scaled(mul(lg.lambda[I][K], lg.lambda[J][L], drop), g, drop);
                    }
                Real v = eng.reduce_residual(acc);
                upd(rep.biinvariance, v);
                // the same coefficients govern the mixed-tag quantities
                upd(rep.witness_biinvariance, v);
            }
    return rep;
}

}  // namespace qlorentz
