#pragma once

#include "qlorentz/engine.hpp"

#include <array>

namespace qlorentz {

enum class FKind { F, Ftilde };

/// The f / ftilde functional families on the generator basis, extended
/// (anti)multiplicatively over words. Values follow the R-matrix closed
/// forms; the dotted-index families are tied to the undotted ones through
/// the antipode and index-transposition relations.
class LittleF {
public:
    using Mat2 = std::array<std::array<Cplx, 2>, 2>;

    LittleF(const ParameterSet& p, const SpinorMetric& m, const RMatrixPair& rm, const HopfOps& hopf)
        : drop_(p.tolerance * p.tolerance) {
        for (int s : {+1, -1}) {
            Real amh = half_power(p, -s);
            for (std::uint8_t gid = 0; gid < 8; ++gid) {
                GeneratorId g = GeneratorId::from_id(gid);
                Mat2 v{};
                if (!g.dotted) {
                    const Tensor& R = rm.r[sidx(s)];
                    for (int al = 0; al < 2; ++al)
                        for (int be = 0; be < 2; ++be)
                            v[al][be] = amh * R.at({g.col, std::size_t(be), std::size_t(al), g.row});
                } else {
                    const Tensor& R1 = rm.mixed1[sidx(s)];
                    for (int al = 0; al < 2; ++al)
                        for (int be = 0; be < 2; ++be)
                            v[al][be] = R1.at({g.col, std::size_t(be), std::size_t(al), g.row});
                }
                fU_[sidx(s)][gid] = v;
            }
        }
        for (int s : {+1, -1})
            for (std::uint8_t gid = 0; gid < 8; ++gid) {
                Mat2 acc{};
                for (const auto& [w, c] : hopf.antipode_inv_gen(gid).terms()) {
                    const Mat2& base = fU_[sidx(s)][w[0]];
                    for (int al = 0; al < 2; ++al)
                        for (int be = 0; be < 2; ++be) acc[al][be] += c * base[al][be];
                }
                ftU_[sidx(s)][gid] = acc;
            }
        for (int s : {+1, -1}) {
            Real amh = half_power(p, -s);
            for (std::uint8_t gid = 0; gid < 8; ++gid) {
                GeneratorId g = GeneratorId::from_id(gid);
                Mat2 v{};
                if (g.dotted) {
                    const Tensor& R = rm.r_dot[sidx(s)];
                    for (int al = 0; al < 2; ++al)
                        for (int be = 0; be < 2; ++be)
                            v[al][be] = amh * R.at({g.col, std::size_t(be), std::size_t(al), g.row});
                } else {
                    for (int al = 0; al < 2; ++al)
                        for (int be = 0; be < 2; ++be) v[al][be] = ftU_[sidx(s)][gid][be][al];
                }
                fD_[sidx(s)][gid] = v;
            }
        }
        for (int s : {+1, -1})
            for (std::uint8_t gid = 0; gid < 8; ++gid)
                for (int al = 0; al < 2; ++al)
                    for (int be = 0; be < 2; ++be)
                        ftD_[sidx(s)][gid][al][be] = fU_[sidx(s)][gid][be][al];
    }

    /// Table lookup: functional value on a single generator as a 2x2 matrix
    /// V[row][col] = f_{row}^{col}(generator).
    const Mat2& value(FKind kind, bool dotted_index, int s, std::uint8_t gid) const {
        if (gid >= 8) throw UnknownGenerator("generator id out of range");
        if (kind == FKind::F) return dotted_index ? fD_[sidx(s)][gid] : fU_[sidx(s)][gid];
        return dotted_index ? ftD_[sidx(s)][gid] : ftU_[sidx(s)][gid];
    }

    /// f-style extension composes along the word; ftilde-style composes in
    /// reverse. The empty word evaluates to the identity matrix.
    Mat2 on_word(FKind kind, bool dotted_index, int s, const Word& w) const {
        Mat2 acc{{{Cplx(1), Cplx(0)}, {Cplx(0), Cplx(1)}}};
        for (std::uint8_t i = 0; i < w.len; ++i) {
            const Mat2& v = value(kind, dotted_index, s, w[i]);
            Mat2 nxt{};
            if (kind == FKind::F) {
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int k = 0; k < 2; ++k) nxt[a][b] += acc[a][k] * v[k][b];
            } else {
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int k = 0; k < 2; ++k) nxt[a][b] += v[a][k] * acc[k][b];
            }
            acc = nxt;
        }
        return acc;
    }

    Mat2 on_elem(FKind kind, bool dotted_index, int s, const AlgebraElement& e) const {
        Mat2 acc{};
        for (const auto& [w, c] : e.terms()) {
            Mat2 v = on_word(kind, dotted_index, s, w);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) acc[a][b] += c * v[a][b];
        }
        return acc;
    }

    /// a * f = (f (x) id) Delta(a): element-valued, per functional index pair.
    std::array<std::array<AlgebraElement, 2>, 2> conv_elem_f(const AlgebraElement& e, FKind kind,
                                                             bool dotted_index, int s,
                                                             const HopfOps& hopf) const {
        std::array<std::array<AlgebraElement, 2>, 2> out;
        for (const auto& [pair, c] : hopf.coproduct(e).terms) {
            Mat2 v = on_word(kind, dotted_index, s, pair.first);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if (v[a][b].abs2() > drop_ * drop_) out[a][b].add(pair.second, c * v[a][b], drop_);
        }
        return out;
    }

    /// f * a = (id (x) f) Delta(a).
    std::array<std::array<AlgebraElement, 2>, 2> conv_f_elem(const AlgebraElement& e, FKind kind,
                                                             bool dotted_index, int s,
                                                             const HopfOps& hopf) const {
        std::array<std::array<AlgebraElement, 2>, 2> out;
        for (const auto& [pair, c] : hopf.coproduct(e).terms) {
            Mat2 v = on_word(kind, dotted_index, s, pair.second);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if (v[a][b].abs2() > drop_ * drop_) out[a][b].add(pair.first, c * v[a][b], drop_);
        }
        return out;
    }

private:
    std::array<std::array<Mat2, 8>, 2> fU_, ftU_, fD_, ftD_;
    Real drop_;
};

}  // namespace qlorentz
